"""Exhaustive scan: which degree-3 cochains give a Delta-group T(G, A, alpha)."""
import argparse
import json
from collections import Counter

from deltacoh.cochain import all_cochains, is_cocycle, is_symmetric
from deltacoh.delta_group import build_T_G_A_alpha, check_d1, verify_delta_axioms
from deltacoh.io.cli import parse_group, parse_module


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", default="cyclic:2")
    ap.add_argument("--module", default="trivial:2")
    args = ap.parse_args()
    G = parse_group(args.group)
    A = parse_module(args.module, G)
    tally = Counter()
    exceptions = []
    for alpha in all_cochains(A, 3):
        delta = verify_delta_axioms(build_T_G_A_alpha(G, A, alpha)).ok
        coc, d1, sym = is_cocycle(alpha), check_d1(alpha), is_symmetric(alpha)
        tally[(delta, coc, d1, sym)] += 1
        if delta != (coc and d1):
            exceptions.append(alpha.flat().tolist())
    print(json.dumps({
        "group": args.group, "module": args.module,
        "counts": [{"delta_group": k[0], "cocycle": k[1], "d1": k[2], "symmetric": k[3], "n": v}
                   for k, v in sorted(tally.items())],
        "exceptions": exceptions}, indent=1))


if __name__ == "__main__":
    main()
