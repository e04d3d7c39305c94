"""Finite groups given by multiplication tables and finite G-modules (Z/m)^k.

Everything here is validated exhaustively at construction time; group orders
at the scale this package targets (|G| <= 12 or so) make that cheap.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

import numpy as np


class GroupError(ValueError):
    """A table or module failed validation.

    ``witness`` holds the first violating tuple, when there is one.
    """

    def __init__(self, message: str, witness: Optional[tuple] = None):
        super().__init__(message if witness is None else f"{message} at {witness}")
        self.witness = witness


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group stored as a full multiplication table.

    Elements are the indices ``0..order-1``; ``table[g][h]`` is ``g*h``.
    The identity need not be element 0.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    names: tuple[str, ...] = field(default=())

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def prod(self, *gs: int) -> int:
        out = self.identity
        for g in gs:
            out = self.table[out][g]
        return out

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def elements(self) -> range:
        return range(self.order)

    def name(self, g: int) -> str:
        return self.names[g] if self.names else str(g)

    def is_abelian(self) -> bool:
        return all(self.table[g][h] == self.table[h][g]
                   for g in range(self.order) for h in range(g))

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def group_from_table(table: Sequence[Sequence[int]],
                     names: Optional[Sequence[str]] = None) -> FiniteGroup:
    """Validate a multiplication table and derive identity and inverses.

    Raises:
        GroupError: naming the first tuple that breaks closure, the identity
            law, inverses, or associativity.
    """
    n = len(table)
    if n == 0:
        raise GroupError("empty table")
    rows = tuple(tuple(int(x) for x in row) for row in table)
    for g, row in enumerate(rows):
        if len(row) != n:
            raise GroupError("table is not square", (g,))
        for h, x in enumerate(row):
            if not 0 <= x < n:
                raise GroupError("table not closed", (g, h))

    identity = None
    for e in range(n):
        if all(rows[e][g] == g and rows[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupError("no two-sided identity")

    inverse = []
    for g in range(n):
        inv = [h for h in range(n) if rows[g][h] == identity and rows[h][g] == identity]
        if not inv:
            raise GroupError(f"no inverse for element {g}", (g,))
        inverse.append(inv[0])

    for g, h, k in itertools.product(range(n), repeat=3):
        if rows[rows[g][h]][k] != rows[g][rows[h][k]]:
            raise GroupError("not associative", (g, h, k))

    if names is not None and len(names) != n:
        raise GroupError("names has the wrong length")
    return FiniteGroup(n, rows, identity, tuple(inverse),
                       tuple(names) if names is not None else ())


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n written additively; identity 0."""
    if n < 1:
        raise GroupError(f"cyclic group needs n >= 1, got {n}")
    table = [[(g + h) % n for h in range(n)] for g in range(n)]
    return group_from_table(table, [str(g) for g in range(n)])


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on letters 0..n-1, element 0 the identity permutation.

    Product convention: ``(p*q)(i) = p(q(i))``.
    """
    if n < 1:
        raise GroupError(f"symmetric group needs n >= 1, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return group_from_table(table, ["".join(map(str, p)) for p in perms])


def klein_four_group() -> FiniteGroup:
    table = [[g ^ h for h in range(4)] for g in range(4)]
    return group_from_table(table, ["e", "a", "b", "ab"])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    n = G.order * H.order
    table = [[0] * n for _ in range(n)]
    for g1, h1, g2, h2 in itertools.product(range(G.order), range(H.order),
                                            range(G.order), range(H.order)):
        table[g1 * H.order + h1][g2 * H.order + h2] = G.mul(g1, g2) * H.order + H.mul(h1, h2)
    return group_from_table(table)


def small_groups(max_order: int) -> list[tuple[str, FiniteGroup]]:
    """One representative of every isomorphism class of order <= 7."""
    if max_order > 7:
        raise ValueError("only orders up to 7 are tabulated")
    out = []
    for n in range(1, max_order + 1):
        out.append((f"C{n}", cyclic_group(n)))
        if n == 4:
            out.append(("V4", klein_four_group()))
        if n == 6:
            out.append(("S3", symmetric_group(3)))
    return out


def sign_homomorphism(G: FiniteGroup) -> Optional[list[int]]:
    """A surjection G -> {+1, -1} if G has a subgroup of index 2, else None.

    Found by brute force over index-2 subsets, which is fine for small G.
    """
    n = G.order
    if n % 2:
        return None
    for kernel in itertools.combinations(range(n), n // 2):
        ks = set(kernel)
        if G.identity not in ks:
            continue
        chi = [1 if g in ks else -1 for g in range(n)]
        if all(chi[G.mul(g, h)] == chi[g] * chi[h] for g in range(n) for h in range(n)):
            return chi
    return None


# --------------------------------------------------------------------------
# G-modules


@dataclass(frozen=True, eq=False)
class GModule:
    """The abelian group (Z/m)^k with G acting by the integer matrices ``action``.

    ``action[g]`` is a k x k int64 array reduced mod m; g acts on coordinate
    column vectors by left multiplication.
    """

    group: FiniteGroup
    modulus: int
    rank: int
    action: tuple[np.ndarray, ...]

    @property
    def size(self) -> int:
        return self.modulus ** self.rank

    def act(self, g: int, x: Sequence[int]) -> tuple[int, ...]:
        if self.rank == 0:
            return ()
        v = self.action[g] @ np.asarray(x, dtype=np.int64)
        return tuple(int(c) for c in v % self.modulus)

    def add(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a + b) % self.modulus for a, b in zip(x, y))

    def neg(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple((-a) % self.modulus for a in x)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(range(self.modulus), repeat=self.rank))

    def encode(self, x: Sequence[int]) -> int:
        """Mixed-radix index of an element, first coordinate most significant."""
        idx = 0
        for c in x:
            idx = idx * self.modulus + c
        return idx

    def decode(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.rank):
            idx, c = divmod(idx, self.modulus)
            out.append(c)
        return tuple(reversed(out))

    def is_trivial_action(self) -> bool:
        eye = np.eye(self.rank, dtype=np.int64)
        return all(np.array_equal(a, eye) for a in self.action)

    def fixed_points(self) -> list[tuple[int, ...]]:
        """A^G, by enumeration."""
        return [x for x in self.elements()
                if all(self.act(g, x) == tuple(x) for g in self.group.elements())]

    def __repr__(self) -> str:
        return f"GModule(m={self.modulus}, k={self.rank}, |G|={self.group.order})"


def _det_mod(M: np.ndarray, m: int) -> int:
    # cofactor expansion; k is tiny
    k = M.shape[0]
    if k == 0:
        return 1 % m
    if k == 1:
        return int(M[0, 0]) % m
    total = 0
    for j in range(k):
        minor = np.delete(np.delete(M, 0, axis=0), j, axis=1)
        total += (-1) ** j * int(M[0, j]) * _det_mod(minor, m)
    return total % m


def make_gmodule(G: FiniteGroup, m: int, k: int,
                 matrices: Sequence[Sequence[Sequence[int]]]) -> GModule:
    """Validate an action of G on (Z/m)^k by automorphisms.

    Raises:
        GroupError: bad shapes, a non-invertible matrix, action(e) != I, or a
            failure of action(g*h) = action(g) action(h).
    """
    if m < 2:
        raise GroupError(f"modulus must be >= 2, got {m}")
    if k < 0:
        raise GroupError(f"rank must be >= 0, got {k}")
    if len(matrices) != G.order:
        raise GroupError("need one matrix per group element")
    mats = []
    for g, M in enumerate(matrices):
        A = np.asarray(M, dtype=np.int64).reshape(k, k) % m
        if gcd(_det_mod(A, m), m) != 1:
            raise GroupError(f"action matrix of element {g} is not invertible mod {m}", (g,))
        A.setflags(write=False)
        mats.append(A)
    eye = np.eye(k, dtype=np.int64)
    if not np.array_equal(mats[G.identity], eye % m):
        raise GroupError("identity does not act trivially", (G.identity,))
    for g in range(G.order):
        for h in range(G.order):
            if not np.array_equal(mats[G.mul(g, h)], (mats[g] @ mats[h]) % m):
                raise GroupError("action is not a homomorphism", (g, h))
    return GModule(G, m, k, tuple(mats))


def trivial_module(G: FiniteGroup, m: int, k: int = 1) -> GModule:
    return make_gmodule(G, m, k, [np.eye(k, dtype=np.int64)] * G.order)


def sign_module(G: FiniteGroup, m: int) -> GModule:
    """Z/m with g acting by the sign of an index-2 homomorphism."""
    chi = sign_homomorphism(G)
    if chi is None:
        raise GroupError("group has no subgroup of index 2")
    return make_gmodule(G, m, 1, [[[c % m]] for c in chi])


def rank_one_modules(G: FiniteGroup, m: int) -> list[tuple[str, GModule]]:
    """Every action of G on Z/m, i.e. every homomorphism G -> (Z/m)^x."""
    units = [u for u in range(1, m) if gcd(u, m) == 1]
    out = []
    for values in itertools.product(units, repeat=G.order):
        if values[G.identity] != 1:
            continue
        if all(values[G.mul(g, h)] == values[g] * values[h] % m
               for g in range(G.order) for h in range(G.order)):
            label = "trivial" if set(values) == {1} else "action" + "".join(map(str, values))
            out.append((label, make_gmodule(G, m, 1, [[[v]] for v in values])))
    return out
