"""Inhomogeneous cochains C^n(G, A), face maps, the differential and the
action of the symmetric group S_{n+1} by adjacent transpositions.

A cochain is a dense table: row ``r`` holds the value at the tuple whose
mixed-radix rank is ``r`` (first argument most significant), so the table has
shape ``(|G|**n, rank)``.  Every operator here is "reindex, maybe act, maybe
negate", which is also how :mod:`deltacoh.cohomology` assembles matrices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .group_core import FiniteGroup, GModule


class CochainError(ValueError):
    pass


@lru_cache(maxsize=64)
def _tuples(G: FiniteGroup, n: int) -> np.ndarray:
    """All of G^n as an array of shape (|G|^n, n), in rank order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((G.order,) * n).reshape(n, -1).T
    return np.ascontiguousarray(grids, dtype=np.int64)


def _rank(G: FiniteGroup, args: np.ndarray) -> np.ndarray:
    n = args.shape[1]
    idx = np.zeros(args.shape[0], dtype=np.int64)
    for i in range(n):
        idx = idx * G.order + args[:, i]
    return idx


@lru_cache(maxsize=64)
def _tables(G: FiniteGroup) -> tuple[np.ndarray, np.ndarray]:
    return np.asarray(G.table, dtype=np.int64), np.asarray(G.inverse, dtype=np.int64)


@lru_cache(maxsize=256)
def face_index(G: FiniteGroup, n: int, j: int) -> tuple[np.ndarray, Optional[np.ndarray]]:
    """Reindexing data for d^j: C^n -> C^{n+1}.

    Returns ``(src, acting)``: ``(d^j s)[r] = acting[r] . s[src[r]]``, with
    ``acting`` None when no group element acts.
    """
    if not 0 <= j <= n + 1:
        raise CochainError(f"face index {j} out of range for degree {n}")
    mul, _ = _tables(G)
    t = _tuples(G, n + 1)
    if j == 0:
        return _rank(G, t[:, 1:]), t[:, 0].copy()
    if j == n + 1:
        return _rank(G, t[:, :n]), None
    merged = mul[t[:, j - 1], t[:, j]]
    args = np.concatenate([t[:, :j - 1], merged[:, None], t[:, j + 1:]], axis=1)
    return _rank(G, args), None


@lru_cache(maxsize=256)
def transposition_index(G: FiniteGroup, n: int, i: int) -> tuple[np.ndarray, Optional[np.ndarray]]:
    """Reindexing data for the transposition (i, i+1) acting on C^n.

    The window ``(g_{i-1}, g_i, g_{i+1})`` becomes
    ``(g_{i-1} g_i, g_i^{-1}, g_i g_{i+1})`` (entries past either end are
    dropped) and for ``i = 1`` the value is acted on by ``g_1``.  The result
    is then negated; callers apply the sign.
    """
    if not 1 <= i <= n:
        raise CochainError(f"transposition ({i},{i + 1}) out of range for degree {n}")
    mul, inv = _tables(G)
    t = _tuples(G, n)
    args = t.copy()
    gi = t[:, i - 1]
    if i >= 2:
        args[:, i - 2] = mul[t[:, i - 2], gi]
    args[:, i - 1] = inv[gi]
    if i + 1 <= n:
        args[:, i] = mul[gi, t[:, i]]
    return _rank(G, args), (gi.copy() if i == 1 else None)


@dataclass(frozen=True, eq=False)
class Cochain:
    """A total function G^n -> A stored as a ``(|G|**n, rank)`` int64 table."""

    degree: int
    module: GModule
    values: np.ndarray

    def __post_init__(self):
        G, A = self.module.group, self.module
        expected = (G.order ** self.degree, A.rank)
        if self.values.shape != expected:
            raise CochainError(f"cochain table has shape {self.values.shape}, expected {expected}")
        if self.values.size and (self.values.min() < 0 or self.values.max() >= A.modulus):
            raise CochainError("cochain values are not reduced")
        self.values.setflags(write=False)

    @property
    def group(self) -> FiniteGroup:
        return self.module.group

    def __call__(self, *args: int) -> tuple[int, ...]:
        if len(args) != self.degree:
            raise CochainError(f"expected {self.degree} arguments, got {len(args)}")
        r = 0
        for g in args:
            r = r * self.group.order + g
        return tuple(int(x) for x in self.values[r])

    def items(self) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
        for r, args in enumerate(itertools.product(range(self.group.order), repeat=self.degree)):
            yield args, tuple(int(x) for x in self.values[r])

    def is_zero(self) -> bool:
        return not self.values.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.degree == other.degree and self.module is other.module
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.degree, self.values.tobytes()))

    def _new(self, values: np.ndarray, degree: Optional[int] = None) -> "Cochain":
        return Cochain(self.degree if degree is None else degree, self.module,
                       np.ascontiguousarray(values % self.module.modulus))

    def __add__(self, other: "Cochain") -> "Cochain":
        _check_compatible(self, other)
        return self._new(self.values + other.values)

    def __sub__(self, other: "Cochain") -> "Cochain":
        _check_compatible(self, other)
        return self._new(self.values - other.values)

    def __neg__(self) -> "Cochain":
        return self._new(-self.values)

    def scale(self, c: int) -> "Cochain":
        return self._new(self.values * c)

    def flat(self) -> np.ndarray:
        """Coordinates in the standard basis: row-major flattening."""
        return self.values.reshape(-1)

    def __repr__(self) -> str:
        return f"Cochain(degree={self.degree}, nonzero={int(np.count_nonzero(self.values.any(axis=1)))})"


def _check_compatible(a: Cochain, b: Cochain) -> None:
    if a.degree != b.degree or a.module is not b.module:
        raise CochainError("cochains live in different groups C^n(G, A)")


# --------------------------------------------------------------------------
# constructors


def zero_cochain(A: GModule, n: int) -> Cochain:
    return Cochain(n, A, np.zeros((A.group.order ** n, A.rank), dtype=np.int64))


def cochain_from_flat(A: GModule, n: int, flat: Sequence[int]) -> Cochain:
    vals = np.asarray(flat, dtype=np.int64).reshape(A.group.order ** n, A.rank) % A.modulus
    return Cochain(n, A, vals)


def cochain_from_function(A: GModule, n: int,
                          f: Callable[..., Sequence[int] | int]) -> Cochain:
    """Tabulate ``f(g_1, ..., g_n)``; scalar outputs are allowed when rank is 1."""
    rows = []
    for args in itertools.product(range(A.group.order), repeat=n):
        v = f(*args)
        rows.append([v] if isinstance(v, (int, np.integer)) else list(v))
    vals = np.asarray(rows, dtype=np.int64).reshape(A.group.order ** n, A.rank)
    return Cochain(n, A, vals % A.modulus)


def indicator(A: GModule, args: Sequence[int], value: Sequence[int] | int = 1) -> Cochain:
    """The cochain that is ``value`` at ``args`` and 0 elsewhere."""
    n = len(args)
    vals = np.zeros((A.group.order ** n, A.rank), dtype=np.int64)
    r = 0
    for g in args:
        r = r * A.group.order + g
    vals[r] = [value] if isinstance(value, int) else list(value)
    return Cochain(n, A, vals % A.modulus)


def random_cochain(A: GModule, n: int, rng: np.random.Generator) -> Cochain:
    vals = rng.integers(0, A.modulus, size=(A.group.order ** n, A.rank), dtype=np.int64)
    return Cochain(n, A, vals)


def all_cochains(A: GModule, n: int) -> Iterable[Cochain]:
    """Every element of C^n(G, A); |A|^(|G|^n) of them, so only for tiny cases."""
    size = A.group.order ** n * A.rank
    for flat in itertools.product(range(A.modulus), repeat=size):
        yield cochain_from_flat(A, n, flat)


# --------------------------------------------------------------------------
# operators


def _act_rows(A: GModule, acting: np.ndarray, vals: np.ndarray) -> np.ndarray:
    mats = np.stack(A.action) if A.rank else np.zeros((A.group.order, 0, 0), dtype=np.int64)
    return np.einsum("rij,rj->ri", mats[acting], vals) % A.modulus


def _reindex(s: Cochain, src: np.ndarray, acting: Optional[np.ndarray]) -> np.ndarray:
    vals = s.values[src]
    if acting is not None:
        vals = _act_rows(s.module, acting, vals)
    return vals


def face_map(j: int, s: Cochain) -> Cochain:
    """d^j s, a cochain of degree n+1."""
    src, acting = face_index(s.group, s.degree, j)
    return s._new(_reindex(s, src, acting), s.degree + 1)


def differential(s: Cochain) -> Cochain:
    """The coboundary: the alternating sum of the face maps."""
    n = s.degree
    out = np.zeros((s.group.order ** (n + 1), s.module.rank), dtype=np.int64)
    for j in range(n + 2):
        src, acting = face_index(s.group, n, j)
        out += (-1) ** j * _reindex(s, src, acting)
    return s._new(out, n + 1)


def transposition_action(i: int, s: Cochain) -> Cochain:
    """(i, i+1) . s for 1 <= i <= degree."""
    src, acting = transposition_index(s.group, s.degree, i)
    return s._new(-_reindex(s, src, acting))


def adjacent_decomposition(perm: Sequence[int]) -> list[int]:
    """Write a permutation as a word in adjacent transpositions.

    ``perm`` is in one-line notation on letters 1..n+1 (0-based list
    positions), i.e. ``perm[k]`` is the image of letter ``k+1``.  The returned
    list ``[i_1, ..., i_r]`` satisfies perm = (i_1,i_1+1) ... (i_r,i_r+1) as a
    product of functions (rightmost applied first).  Built by bubble sort.
    """
    p = [int(x) for x in perm]
    if sorted(p) != list(range(1, len(p) + 1)):
        if sorted(p) == list(range(len(p))):
            p = [x + 1 for x in p]
        else:
            raise CochainError(f"{perm} is not a permutation")
    # sorting p by adjacent swaps of positions: p . s_{k1} . s_{k2} ... = id
    word = []
    q = p[:]
    changed = True
    while changed:
        changed = False
        for k in range(len(q) - 1):
            if q[k] > q[k + 1]:
                q[k], q[k + 1] = q[k + 1], q[k]
                word.append(k + 1)
                changed = True
    # p . s_{w1} ... s_{wr} = id  =>  p = s_{wr} ... s_{w1}
    return word[::-1]


def permutation_action(perm: Sequence[int], s: Cochain) -> Cochain:
    """Act by an arbitrary permutation of n+1 letters.

    The result does not depend on the decomposition chosen, because the
    transpositions satisfy the Coxeter relations of S_{n+1} (tested).
    """
    if len(perm) != s.degree + 1:
        raise CochainError(f"need a permutation of {s.degree + 1} letters")
    out = s
    for i in reversed(adjacent_decomposition(perm)):
        out = transposition_action(i, out)
    return out


def compose_perms(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """(p q)(k) = p(q(k)) in one-line notation on letters 1..N."""
    return tuple(p[q[k] - 1] for k in range(len(q)))


def is_symmetric(s: Cochain) -> bool:
    return all(transposition_action(i, s) == s for i in range(1, s.degree + 1))


def is_cocycle(s: Cochain) -> bool:
    return differential(s).is_zero()
