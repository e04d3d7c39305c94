"""Command-line interface.

Exit codes: 0 success / verified, 1 verification failed, 2 malformed input.
JSON reports go to stdout, one-line summaries to stderr.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Optional, Sequence

from ..cochain import zero_cochain
from ..cohomology import SizeCapExceeded, report
from ..delta_group import (DeltaGroupError, build_T_G_0, build_T_G_A_alpha, classify,
                           verify_delta_axioms)
from ..evaluator import (TriangulationError, coherence_check,
                         evaluate, flat_dw_labels, random_triangulation)
from ..group_core import (FiniteGroup, GModule, GroupError, cyclic_group, klein_four_group,
                          sign_module, symmetric_group, trivial_module)
from ..three_algebra import (DimensionCapExceeded, MultiplicativeCocycle, SixJData,
                             StrongThreeAlgebra, build_dw, build_sixj, verify_orthogonal,
                             verify_strong, verify_three_algebra)
from .formats import (FormatError, algebra_from_json, algebra_to_json, cochain_from_json,
                      delta_from_json, delta_to_json, group_from_json, module_from_json,
                      triangulation_from_json)

EXIT_OK, EXIT_FAIL, EXIT_BAD_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


def parse_group(spec: str) -> FiniteGroup:
    kind, _, arg = spec.partition(":")
    try:
        if kind == "cyclic":
            return cyclic_group(int(arg))
        if kind == "symmetric":
            n = int(arg)
            if not 1 <= n <= 4:
                raise InputError("symmetric:n needs 1 <= n <= 4")
            return symmetric_group(n)
        if kind == "klein":
            return klein_four_group()
        if kind == "file":
            return group_from_json(_load(arg))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad group specifier {spec!r}: {exc}") from exc
    raise InputError(f"unknown group specifier {spec!r}")


def parse_module(spec: str, G: FiniteGroup) -> GModule:
    kind, _, arg = spec.partition(":")
    try:
        if kind == "trivial":
            return trivial_module(G, int(arg))
        if kind == "sign":
            return sign_module(G, int(arg))
        if kind == "file":
            return module_from_json(_load(arg), G)
    except ValueError as exc:
        raise InputError(f"bad module specifier {spec!r}: {exc}") from exc
    raise InputError(f"unknown module specifier {spec!r}")


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=None, sort_keys=False) + "\n")


def _say(msg: str) -> None:
    sys.stderr.write(msg + "\n")


# --------------------------------------------------------------------------
# subcommands


def cmd_cohomology(args) -> int:
    G = parse_group(args.group)
    A = parse_module(args.module, G)
    if args.degree is None:
        raise InputError("--degree is required")
    rep = report(A, args.degree, symmetric=args.symmetric)
    _emit(rep.to_json())
    _say(f"H^{args.degree} = {rep.H}" + (f", HS^{args.degree} = {rep.HS}" if args.symmetric else ""))
    return EXIT_OK


def cmd_verify_delta(args) -> int:
    T = delta_from_json(_need_input(args))
    rep = verify_delta_axioms(T)
    _emit(rep.to_json())
    _say("Delta-group: all axioms hold" if rep.ok else f"Delta-group: failed {rep.failed()}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify_algebra(args) -> int:
    S = algebra_from_json(_need_input(args))
    if isinstance(S, StrongThreeAlgebra):
        rep = verify_strong(S, max_dim=args.max_dim, jobs=args.jobs)
        doc = {"kind": "strong", **rep.to_json()}
        system = S.to_system()
    else:
        rep = verify_three_algebra(S, max_dim=args.max_dim, jobs=args.jobs)
        doc = {"kind": "3-algebra", **rep.to_json()}
        system = S
    if rep.ok:
        doc["orthogonal"] = verify_orthogonal(system).to_json()
    _emit(doc)
    _say("algebra: all axioms hold" if rep.ok else f"algebra: failed {rep.failed()}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_classify(args) -> int:
    G = parse_group(args.group)
    A = parse_module(args.module, G)
    rep = classify(G, A)
    _emit(rep.to_json())
    _say(f"{rep.valid_count} valid alpha in {rep.class_count} classes; |HS^3| = {rep.hs3.order}")
    return EXIT_OK


def cmd_evaluate(args) -> int:
    doc = _need_input(args)
    if not isinstance(doc, dict) or "triangulation" not in doc or "algebra" not in doc:
        raise InputError("evaluate expects {\"triangulation\": ..., \"algebra\": ...}")
    T = triangulation_from_json(doc["triangulation"])
    S = algebra_from_json(doc["algebra"])
    A = S.to_system() if isinstance(S, StrongThreeAlgebra) else S
    for lab in T.labels:
        if not 0 <= lab < A.dim:
            raise InputError(f"label {lab} outside the algebra basis")
    if args.trials > 1:
        rep = coherence_check(T, A, args.trials, args.seed, args.jobs)
        _emit(rep.to_json())
        _say(f"coherence over {args.trials} seeds: {'pass' if rep.passed else 'FAIL'}")
        return EXIT_OK if rep.passed else EXIT_FAIL
    state = evaluate(T, A, args.seed)
    _emit(state.to_json())
    _say(f"{len(state.terms)} term(s)")
    return EXIT_OK


def _parse_alpha_values(text: Optional[str], G: FiniteGroup) -> MultiplicativeCocycle:
    if not text:
        return MultiplicativeCocycle.constant(G)
    vals = [Fraction(v) for v in text.split(",")]
    if len(vals) != G.order ** 3:
        raise InputError(f"--alpha needs {G.order ** 3} comma-separated values")
    return MultiplicativeCocycle(G, tuple(vals))


def cmd_generate(args) -> int:
    kind = args.kind
    rng = random.Random(args.seed)
    if kind == "T_G_0":
        doc = delta_to_json(build_T_G_0(parse_group(args.group)))
    elif kind == "T_G_A_alpha":
        G = parse_group(args.group)
        A = parse_module(args.module, G)
        alpha = cochain_from_json(_load(args.input), A) if args.input else zero_cochain(A, 3)
        doc = delta_to_json(build_T_G_A_alpha(G, A, alpha))
    elif kind == "dw":
        G = parse_group(args.group)
        doc = algebra_to_json(build_dw(G, _parse_alpha_values(args.alpha, G)))
    elif kind == "sixj":
        doc = algebra_to_json(build_sixj(_sixj_from_args(args, rng)))
    elif kind == "triangulation":
        doc = _generate_triangulation(args, rng)
    else:
        raise InputError(f"unknown kind {kind!r}")
    _emit(doc)
    _say(f"generated {kind}")
    return EXIT_OK


def _sixj_from_args(args, rng: random.Random) -> SixJData:
    n = args.size
    if n < 1:
        raise InputError("--size must be positive")
    w = [Fraction(x) for x in args.weights.split(",")] if args.weights else [Fraction(1)] * n
    if len(w) != n:
        raise InputError("--weights needs one value per index")
    if args.random_symbols:
        return SixJData.from_orbit_values(n, lambda k, r: rng.choice([0, 1, -1, 2]), w)
    return SixJData.from_orbit_values(n, lambda k, r: 1, w)


def _generate_triangulation(args, rng: random.Random) -> dict:
    kind, _, rest = args.algebra.partition(":")
    if kind == "dw":
        G = parse_group(rest or "cyclic:2")
        S = build_dw(G, MultiplicativeCocycle.constant(G))
        labeler = lambda cells, r: flat_dw_labels(cells, G, r)
    elif kind == "sixj":
        S = build_sixj(SixJData.from_orbit_values(1, lambda k, r: 1, [1]))
        labeler = None
    else:
        raise InputError("--algebra must be dw[:group] or sixj")
    T = random_triangulation(2 * args.subdivisions + 1, S.dim, rng, labeler)
    return {"triangulation": T.to_json(), "algebra": algebra_to_json(S)}


def _need_input(args):
    if not args.input:
        raise InputError("--input is required")
    return _load(args.input)


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deltacoh", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--group", default="cyclic:2")
        sp.add_argument("--module", default="trivial:2")
        sp.add_argument("--degree", type=int)
        sp.add_argument("--symmetric", action="store_true")
        sp.add_argument("--input")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=1)
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--max-dim", type=int, default=40)
        return sp

    common(sub.add_parser("cohomology", help="H^n and HS^n")).set_defaults(fn=cmd_cohomology)
    common(sub.add_parser("verify-delta", help="check Delta-group axioms")).set_defaults(
        fn=cmd_verify_delta)
    common(sub.add_parser("verify-algebra", help="check (strong) 3-algebra axioms")).set_defaults(
        fn=cmd_verify_algebra)
    common(sub.add_parser("classify", help="classify T(G,A,alpha) up to isomorphism")
           ).set_defaults(fn=cmd_classify)
    common(sub.add_parser("evaluate", help="evaluate a labeled triangulation")).set_defaults(
        fn=cmd_evaluate)
    g = common(sub.add_parser("generate", help="emit an input document"))
    g.add_argument("kind", choices=["T_G_0", "T_G_A_alpha", "dw", "sixj", "triangulation"])
    g.add_argument("--alpha", help="dw: |G|^3 comma-separated nonzero rationals")
    g.add_argument("--size", type=int, default=1, help="sixj: size of the index set")
    g.add_argument("--weights", help="sixj: comma-separated weights")
    g.add_argument("--random-symbols", action="store_true")
    g.add_argument("--subdivisions", type=int, default=3)
    g.add_argument("--algebra", default="dw:cyclic:2", help="triangulation: dw[:group] or sixj")
    g.set_defaults(fn=cmd_generate)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.fn(args)
    except (InputError, FormatError, GroupError, DeltaGroupError, TriangulationError,
            SizeCapExceeded, DimensionCapExceeded, KeyError, TypeError, ValueError) as exc:
        _say(f"error: {exc}")
        return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
