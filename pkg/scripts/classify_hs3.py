"""Classify T(G, A, alpha) up to isomorphism and compare with |HS^3(G, A)|."""
import json

from deltacoh.delta_group import classify
from deltacoh.group_core import cyclic_group, klein_four_group, symmetric_group
from deltacoh.io.cli import parse_module

CASES = [
    (cyclic_group(2), ["trivial:2", "trivial:3", "sign:3"]),
    (cyclic_group(3), ["trivial:2", "trivial:3"]),
    (cyclic_group(4), ["trivial:4", "sign:4"]),
    (klein_four_group(), ["trivial:2"]),
    (symmetric_group(3), ["trivial:2", "trivial:3", "sign:3"]),
]


def main():
    rows = []
    for G, modules in CASES:
        for spec in modules:
            A = parse_module(spec, G)
            rep = classify(G, A)
            rows.append({"order": G.order, "abelian": G.is_abelian(), "module": spec,
                         **rep.to_json()})
            print(json.dumps(rows[-1]))


if __name__ == "__main__":
    main()
