"""All 256 sign-valued alpha on Z/2: symmetry condition vs strong 3-algebra axioms."""
import itertools
import json
from collections import Counter
from fractions import Fraction

from deltacoh.group_core import cyclic_group
from deltacoh.three_algebra import (MultiplicativeCocycle, build_dw, check_dw_condition,
                                    is_multiplicative_cocycle, verify_strong)


def main():
    G = cyclic_group(2)
    tally = Counter()
    disagree = []
    for bits in itertools.product((0, 1), repeat=8):
        alpha = MultiplicativeCocycle(G, tuple(Fraction(-1 if b else 1) for b in bits))
        cond = check_dw_condition(alpha)[0]
        coc = is_multiplicative_cocycle(alpha)
        rep = verify_strong(build_dw(G, alpha))
        tally[(cond, coc, rep.ok)] += 1
        if cond != rep.ok:
            disagree.append({"alpha": [-1 if b else 1 for b in bits], "cocycle": coc,
                             "failed": rep.failed()})
    print(json.dumps({
        "counts": [{"condition": k[0], "cocycle": k[1], "strong": k[2], "n": v}
                   for k, v in sorted(tally.items())],
        "disagreements": disagree}, indent=1))


if __name__ == "__main__":
    main()
