"""Evaluate random labeled triangulations under many move orders.

Orthogonal algebras should give one result per triangulation; a DW algebra
built from a non-cocycle alpha serves as a negative control.
"""
import argparse
import random
from fractions import Fraction

from deltacoh.evaluator import coherence_check, flat_dw_labels, random_triangulation
from deltacoh.group_core import cyclic_group, symmetric_group
from deltacoh.three_algebra import (MultiplicativeCocycle, SixJData, build_dw, build_sixj,
                                    verify_orthogonal, verify_three_algebra)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--triangulations", type=int, default=50)
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--max-cells", type=int, default=8)
    args = ap.parse_args()
    Z2, Z3, S3 = cyclic_group(2), cyclic_group(3), symmetric_group(3)
    rnd = random.Random(0)
    bad = MultiplicativeCocycle(Z3, tuple(Fraction(rnd.choice([1, -1])) for _ in range(27)))
    cases = [
        ("DW Z2", Z2, build_dw(Z2, MultiplicativeCocycle.constant(Z2))),
        ("DW Z3", Z3, build_dw(Z3, MultiplicativeCocycle.constant(Z3))),
        ("DW S3", S3, build_dw(S3, MultiplicativeCocycle.constant(S3))),
        ("6j singleton", None, build_sixj(SixJData(1, (Fraction(1),), (Fraction(1),)))),
        ("6j |I|=2", None, build_sixj(SixJData.from_orbit_values(2, lambda k, r: 2,
                                                                 [Fraction(1, 2)] * 2))),
        ("DW Z3, random alpha", Z3, build_dw(Z3, bad)),
    ]
    for name, G, S in cases:
        A = S.to_system()
        orth = "-"
        if A.dim <= 9:
            orth = verify_three_algebra(A).ok and verify_orthogonal(A).ok
        rng = random.Random(1)
        labeler = (lambda c, r, G=G: flat_dw_labels(c, G, r)) if G else None
        failures = 0
        for t in range(args.triangulations):
            T = random_triangulation(args.max_cells, A.dim, rng, labeler)
            failures += not coherence_check(T, A, args.seeds, base_seed=t * args.seeds).passed
        print(f"{name:22} orthogonal={orth!s:5} incoherent {failures}/{args.triangulations}")


if __name__ == "__main__":
    main()
