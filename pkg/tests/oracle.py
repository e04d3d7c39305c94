"""Independent pointwise oracles.

Nothing here touches the matrix code: cochains are plain dicts from tuples to
tuples, and the differential and the transpositions are transcribed case by
case.  Cohomology orders are counted by enumerating all cochains.
"""
from __future__ import annotations

import itertools
from typing import Callable

Value = tuple[int, ...]


class PointModule:
    def __init__(self, A):
        self.A = A
        self.G = A.group
        self.m = A.modulus
        self.k = A.rank
        self.mats = [[[int(x) for x in row] for row in M] for M in A.action]

    def act(self, g, v: Value) -> Value:
        M = self.mats[g]
        return tuple(sum(M[i][j] * v[j] for j in range(self.k)) % self.m for i in range(self.k))

    def add(self, *vs: Value) -> Value:
        return tuple(sum(c) % self.m for c in zip(*vs))

    def neg(self, v: Value) -> Value:
        return tuple((-c) % self.m for c in v)

    def zero(self) -> Value:
        return (0,) * self.k


def as_dict(s) -> dict:
    return dict(s.items())


def differential(P: PointModule, s: dict, n: int) -> dict:
    G = P.G
    out = {}
    for g in itertools.product(range(G.order), repeat=n + 1):
        terms = [P.act(g[0], s[g[1:]])]
        for j in range(1, n + 1):
            merged = g[:j - 1] + (G.mul(g[j - 1], g[j]),) + g[j + 1:]
            v = s[merged]
            terms.append(v if j % 2 == 0 else P.neg(v))
        last = s[g[:n]]
        terms.append(last if (n + 1) % 2 == 0 else P.neg(last))
        out[g] = P.add(*terms)
    return out


def transposition(P: PointModule, s: dict, n: int, i: int) -> dict:
    """(i, i+1) s by the first / middle / last case formulas."""
    G = P.G
    mul, inv = G.mul, G.inv
    out = {}
    for g in itertools.product(range(G.order), repeat=n):
        g = list(g)
        if i == 1:
            args = [inv(g[0])] + ([mul(g[0], g[1])] if n >= 2 else []) + g[2:]
            out[tuple(g)] = P.neg(P.act(g[0], s[tuple(args)]))
        elif i == n:
            args = g[:n - 2] + [mul(g[n - 2], g[n - 1]), inv(g[n - 1])]
            out[tuple(g)] = P.neg(s[tuple(args)])
        else:
            a = i - 1  # 0-based position of g_i
            args = g[:a - 1] + [mul(g[a - 1], g[a]), inv(g[a]), mul(g[a], g[a + 1])] + g[a + 2:]
            out[tuple(g)] = P.neg(s[tuple(args)])
    return out


def all_dicts(P: PointModule, n: int):
    keys = list(itertools.product(range(P.G.order), repeat=n))
    vals = list(itertools.product(range(P.m), repeat=P.k))
    for choice in itertools.product(vals, repeat=len(keys)):
        yield dict(zip(keys, choice))


def _freeze(s: dict) -> tuple:
    return tuple(sorted(s.items()))


def is_zero(P: PointModule, s: dict) -> bool:
    return all(v == P.zero() for v in s.values())


def is_symmetric(P: PointModule, s: dict, n: int) -> bool:
    return all(transposition(P, s, n, i) == s for i in range(1, n + 1))


def brute_orders(A, n: int, symmetric: bool) -> tuple[int, int]:
    """(|Z|, |B|) of the ordinary or symmetric complex, by enumeration."""
    P = PointModule(A)
    keep: Callable[[dict, int], bool] = (
        (lambda s, d: is_symmetric(P, s, d)) if symmetric else (lambda s, d: True))
    Z = sum(1 for s in all_dicts(P, n) if keep(s, n) and is_zero(P, differential(P, s, n)))
    if n == 0:
        return Z, 1
    B = {_freeze(differential(P, s, n - 1)) for s in all_dicts(P, n - 1) if keep(s, n - 1)}
    return Z, len(B)


def brute_cohomology_order(A, n: int, symmetric: bool = False) -> int:
    Z, B = brute_orders(A, n, symmetric)
    assert Z % B == 0
    return Z // B


def cochain_space_size(A, n: int) -> int:
    return A.modulus ** (A.rank * A.group.order ** n)
