"""Kernel of HS^n -> H^n for all groups of order <= 6 and rank-one Z/2, Z/3 modules."""
import argparse

from deltacoh.cohomology import report
from deltacoh.group_core import rank_one_modules, small_groups


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=3)
    args = ap.parse_args()
    print(f"{'G':4} {'A':14} {'n':>2}  {'H^n':14} {'HS^n':14} kernel")
    for name, G in small_groups(6):
        for m in (2, 3):
            for label, A in rank_one_modules(G, m):
                for n in range(args.max_degree + 1):
                    r = report(A, n)
                    print(f"{name:4} {f'Z{m} {label}':14} {n:>2}  {str(r.H):14} "
                          f"{str(r.HS):14} {r.kernel}")


if __name__ == "__main__":
    main()
