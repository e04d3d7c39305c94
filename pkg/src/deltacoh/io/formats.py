"""JSON documents for groups, modules, cochains, Delta-groups, algebras and
triangulations.  Every ``*_from_json`` raises :class:`FormatError` on
malformed input."""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Any

import numpy as np

from ..cochain import Cochain
from ..delta_group import DeltaGroup
from ..evaluator import LabeledTriangulation
from ..group_core import FiniteGroup, GModule, group_from_table, make_gmodule
from ..three_algebra import SparseTrilinearSystem, StrongThreeAlgebra


class FormatError(ValueError):
    pass


def _frac(x: Any) -> Fraction:
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {x!r}") from exc


def _fstr(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _need(doc: Any, *keys: str) -> None:
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise FormatError(f"missing keys: {missing}")


# groups and modules


def group_to_json(G: FiniteGroup) -> dict:
    out: dict = {"order": G.order, "table": [list(r) for r in G.table]}
    if G.names:
        out["names"] = list(G.names)
    return out


def group_from_json(doc: Any) -> FiniteGroup:
    _need(doc, "order", "table")
    table = doc["table"]
    if len(table) != doc["order"]:
        raise FormatError("table size does not match order")
    return group_from_table(table, doc.get("names"))


def module_to_json(A: GModule) -> dict:
    return {"modulus": A.modulus, "rank": A.rank,
            "action": {str(g): A.action[g].tolist() for g in range(A.group.order)}}


def module_from_json(doc: Any, G: FiniteGroup) -> GModule:
    _need(doc, "modulus", "rank", "action")
    k = doc["rank"]
    mats = [doc["action"].get(str(g), np.eye(k, dtype=np.int64).tolist())
            for g in range(G.order)]
    return make_gmodule(G, doc["modulus"], k, mats)


# cochains


def cochain_to_json(s: Cochain) -> dict:
    return {"degree": s.degree,
            "values": {",".join(map(str, args)): list(v) for args, v in s.items()}}


def cochain_from_json(doc: Any, A: GModule) -> Cochain:
    _need(doc, "degree", "values")
    n = doc["degree"]
    if not isinstance(n, int) or n < 0:
        raise FormatError("degree must be a non-negative integer")
    if not isinstance(doc["values"], dict):
        raise FormatError('values must map "g1,...,gn" to module elements')
    G = A.group
    rows = []
    for args in itertools.product(range(G.order), repeat=n):
        key = ",".join(map(str, args))
        v = doc["values"].get(key, [0] * A.rank)
        if isinstance(v, int):
            v = [v]
        if not isinstance(v, list) or len(v) != A.rank:
            raise FormatError(f"value at {key} has wrong length")
        rows.append(v)
    vals = np.asarray(rows, dtype=np.int64).reshape(G.order ** n, A.rank) % A.modulus
    return Cochain(n, A, vals)


# Delta-groups


def delta_to_json(T: DeltaGroup) -> dict:
    return {
        "base": group_to_json(T.base),
        "carriers": {f"{g},{h}": list(ids) for (g, h), ids in sorted(T.carriers.items())},
        "m": [[a, b, c, y] for (a, b, c), y in sorted(T.m_table.items())],
        "P": [[x, y] for x, y in sorted(T.p_table.items())],
        "Q": [[x, y] for x, y in sorted(T.q_table.items())],
    }


def delta_from_json(doc: Any) -> DeltaGroup:
    _need(doc, "base", "carriers", "m", "P", "Q")
    G = group_from_json(doc["base"])
    try:
        carriers = {tuple(int(x) for x in k.split(",")): tuple(v)
                    for k, v in doc["carriers"].items()}
        m = {(a, b, c): y for a, b, c, y in doc["m"]}
        P = {x: y for x, y in doc["P"]}
        Q = {x: y for x, y in doc["Q"]}
    except (ValueError, TypeError) as exc:
        raise FormatError(f"malformed Delta-group tables: {exc}") from exc
    return DeltaGroup(G, carriers, m, P, Q)


# algebras


def _table_rows(table, arity_in: int):
    rows = []
    for key in sorted(table):
        for out in sorted(table[key]):
            rows.append(list(key) + list(out) + [_fstr(table[key][out])])
    return rows


def algebra_to_json(S: StrongThreeAlgebra | SparseTrilinearSystem) -> dict:
    out: dict = {"dim": S.dim, "m": _table_rows(S.m, 3), "P": _table_rows(S.P, 1)}
    if isinstance(S, StrongThreeAlgebra):
        out["u"] = [[p, q, _fstr(c)] for (p, q), c in sorted(S.u.items())]
    else:
        out["mbar"] = _table_rows(S.mbar, 2)
    if S.basis_names:
        out["basis_names"] = list(S.basis_names)
    return out


def algebra_from_json(doc: Any) -> StrongThreeAlgebra | SparseTrilinearSystem:
    _need(doc, "dim", "m", "P")
    try:
        m = [(int(i), int(j), int(k), int(o), _frac(c)) for i, j, k, o, c in doc["m"]]
        P = [(int(i), int(o), _frac(c)) for i, o, c in doc["P"]]
        names = doc.get("basis_names", ())
        if "u" in doc:
            u = [(int(p), int(q), _frac(c)) for p, q, c in doc["u"]]
            return StrongThreeAlgebra.from_entries(doc["dim"], m, P, u, names)
        _need(doc, "mbar")
        mb = [(int(i), int(j), int(p), int(q), _frac(c)) for i, j, p, q, c in doc["mbar"]]
        return SparseTrilinearSystem.from_entries(doc["dim"], m, mb, P, names)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"malformed algebra: {exc}") from exc


# triangulations


def triangulation_to_json(T: LabeledTriangulation) -> dict:
    return T.to_json()


def triangulation_from_json(doc: Any) -> LabeledTriangulation:
    _need(doc, "cells", "labels")
    return LabeledTriangulation.from_json(doc)
