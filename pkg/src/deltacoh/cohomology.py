"""H^n(G, A), the symmetric subcomplex CS^n(G, A), HS^n(G, A), and the
comparison map HS^n -> H^n.

Cochain groups are identified with (Z/m)^(|G|^n * rank) through the flattened
tables of :class:`~deltacoh.cochain.Cochain`; every operator becomes an
integer matrix mod m and all subgroup arithmetic goes through
:mod:`deltacoh.linalg`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from . import linalg
from .cochain import (Cochain, cochain_from_flat, face_index, is_symmetric,
                      transposition_index)
from .group_core import GModule
from .linalg import FiniteAbelianGroup

MAX_DEGREE = 4
MAX_ENTRIES = 100_000


class SizeCapExceeded(RuntimeError):
    pass


def _check_cap(A: GModule, n: int, allow_large: bool) -> None:
    if allow_large:
        return
    if n > MAX_DEGREE or A.group.order ** (n + 1) * A.rank > MAX_ENTRIES:
        raise SizeCapExceeded(
            f"degree {n} over |G|={A.group.order}, rank {A.rank} is above the default "
            f"cap (n <= {MAX_DEGREE}, |G|^(n+1)*rank <= {MAX_ENTRIES}); pass allow_large=True")


def _dim(A: GModule, n: int) -> int:
    return A.group.order ** n * A.rank if n >= 0 else 0


def _block_operator(A: GModule, rows_out: int, cols_in: int,
                    terms: list[tuple[int, np.ndarray, Optional[np.ndarray]]]) -> np.ndarray:
    """Matrix of sum_t sign_t * (reindex, act) on flattened cochains."""
    k, m = A.rank, A.modulus
    M = np.zeros((rows_out * k, cols_in * k), dtype=np.int64)
    if k == 0:
        return M
    mats = np.stack(A.action)
    r = np.arange(rows_out)
    for sign, src, acting in terms:
        for a in range(k):
            for b in range(k):
                if acting is None:
                    if a != b:
                        continue
                    vals = np.full(rows_out, sign, dtype=np.int64)
                else:
                    vals = sign * mats[acting, a, b]
                np.add.at(M, (r * k + a, src * k + b), vals)
    return M % m


@lru_cache(maxsize=128)
def differential_matrix(A: GModule, n: int) -> np.ndarray:
    """Matrix of d_n : C^n -> C^{n+1}; shape (dim C^{n+1}, dim C^n).

    For n = -1 this is the zero map out of the zero group.
    """
    if n < 0:
        return np.zeros((_dim(A, 0), 0), dtype=np.int64)
    G = A.group
    terms = []
    for j in range(n + 2):
        src, acting = face_index(G, n, j)
        terms.append(((-1) ** j, src, acting))
    M = _block_operator(A, G.order ** (n + 1), G.order ** n, terms)
    M.setflags(write=False)
    return M


@lru_cache(maxsize=128)
def transposition_matrix(A: GModule, n: int, i: int) -> np.ndarray:
    G = A.group
    src, acting = transposition_index(G, n, i)
    M = _block_operator(A, G.order ** n, G.order ** n, [(-1, src, acting)])
    M.setflags(write=False)
    return M


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """A subgroup of C^n(G, A) given by generating cochains.

    ``matrix`` holds the generators as columns; ``structure`` is the abstract
    group they span.
    """

    module: GModule
    degree: int
    matrix: np.ndarray
    structure: FiniteAbelianGroup = field(default_factory=FiniteAbelianGroup)

    @property
    def generators(self) -> list[Cochain]:
        return [cochain_from_flat(self.module, self.degree, self.matrix[:, j])
                for j in range(self.matrix.shape[1])]

    @property
    def relations(self) -> np.ndarray:
        """Integer presentation of the span: columns r with matrix @ r = 0 mod m,
        together with m times the unit vectors."""
        m = self.module.modulus
        r = self.matrix.shape[1]
        ker = linalg.kernel(self.matrix, m) if r else np.zeros((0, 0), dtype=np.int64)
        return np.concatenate([ker, m * np.eye(r, dtype=np.int64)], axis=1)

    @property
    def order(self) -> int:
        return self.structure.order

    def contains(self, s: Cochain) -> bool:
        if not self.matrix.shape[1]:
            return s.is_zero()
        return linalg.solve(self.matrix, s.flat(), self.module.modulus) is not None

    def elements(self) -> Iterator[Cochain]:
        """Every element of the span (closure under adding generators)."""
        m = self.module.modulus
        start = np.zeros(self.matrix.shape[0], dtype=np.int64)
        seen = {start.tobytes(): start}
        frontier = [start]
        cols = [self.matrix[:, j] % m for j in range(self.matrix.shape[1])]
        while frontier:
            nxt = []
            for x in frontier:
                for c in cols:
                    y = (x + c) % m
                    key = y.tobytes()
                    if key not in seen:
                        seen[key] = y
                        nxt.append(y)
            frontier = nxt
        for y in seen.values():
            yield cochain_from_flat(self.module, self.degree, y)


def _span(A: GModule, n: int, M: np.ndarray) -> SubspaceBasis:
    M = np.asarray(M, dtype=np.int64) % A.modulus
    if M.shape[1]:
        M = M[:, np.any(M != 0, axis=0)]
    return SubspaceBasis(A, n, M, linalg.subgroup(M, A.modulus) if M.shape[1]
                         else FiniteAbelianGroup())


def full_space(A: GModule, n: int) -> SubspaceBasis:
    return _span(A, n, np.eye(_dim(A, n), dtype=np.int64))


@lru_cache(maxsize=128)
def cocycles(A: GModule, n: int, allow_large: bool = False) -> SubspaceBasis:
    """Z^n = ker d_n."""
    _check_cap(A, n, allow_large)
    return _span(A, n, linalg.kernel(differential_matrix(A, n), A.modulus))


@lru_cache(maxsize=128)
def coboundaries(A: GModule, n: int, allow_large: bool = False) -> SubspaceBasis:
    """B^n = im d_{n-1}."""
    _check_cap(A, n, allow_large)
    if n == 0:
        return _span(A, 0, np.zeros((_dim(A, 0), 0), dtype=np.int64))
    return _span(A, n, differential_matrix(A, n - 1))


@lru_cache(maxsize=128)
def symmetric_subspace(A: GModule, n: int, allow_large: bool = False) -> SubspaceBasis:
    """CS^n: cochains fixed by every adjacent transposition.

    Computed as the kernel of the stacked maps s -> s - (i, i+1) s.
    """
    _check_cap(A, n, allow_large)
    N = _dim(A, n)
    if n == 0:
        return full_space(A, 0)
    eye = np.eye(N, dtype=np.int64)
    stacked = np.concatenate([eye - transposition_matrix(A, n, i) for i in range(1, n + 1)])
    return _span(A, n, linalg.kernel(stacked % A.modulus, A.modulus))


@lru_cache(maxsize=128)
def symmetric_cocycles(A: GModule, n: int, allow_large: bool = False) -> SubspaceBasis:
    """ZS^n = ker d_n restricted to CS^n."""
    S = symmetric_subspace(A, n, allow_large).matrix
    m = A.modulus
    if not S.shape[1]:
        return _span(A, n, S)
    z = linalg.kernel(differential_matrix(A, n) @ S % m, m)
    return _span(A, n, S @ z % m)


@lru_cache(maxsize=128)
def symmetric_coboundaries(A: GModule, n: int, allow_large: bool = False) -> SubspaceBasis:
    """BS^n = d_{n-1}(CS^{n-1})."""
    if n == 0:
        return _span(A, 0, np.zeros((_dim(A, 0), 0), dtype=np.int64))
    S = symmetric_subspace(A, n - 1, allow_large).matrix
    return _span(A, n, differential_matrix(A, n - 1) @ S % A.modulus)


def cohomology_group(A: GModule, n: int, allow_large: bool = False) -> FiniteAbelianGroup:
    Z = cocycles(A, n, allow_large)
    B = coboundaries(A, n, allow_large)
    return linalg.quotient(Z.matrix, B.matrix, A.modulus)


def symmetric_cohomology_group(A: GModule, n: int,
                               allow_large: bool = False) -> FiniteAbelianGroup:
    ZS = symmetric_cocycles(A, n, allow_large)
    BS = symmetric_coboundaries(A, n, allow_large)
    return linalg.quotient(ZS.matrix, BS.matrix, A.modulus)


def natural_map_kernel(A: GModule, n: int, allow_large: bool = False) -> FiniteAbelianGroup:
    """Kernel of HS^n -> H^n, i.e. (ZS^n intersect B^n) / BS^n."""
    ZS = symmetric_cocycles(A, n, allow_large)
    B = coboundaries(A, n, allow_large)
    BS = symmetric_coboundaries(A, n, allow_large)
    m = A.modulus
    if not ZS.matrix.shape[1] or not B.matrix.shape[1]:
        return FiniteAbelianGroup()
    inter = linalg.intersect(ZS.matrix, B.matrix, m)
    return linalg.quotient(inter, BS.matrix, m)


def coboundary_witness(s: Cochain, restrict_symmetric: bool = False,
                       allow_large: bool = False) -> Optional[Cochain]:
    """Some phi with d phi = s (phi symmetric if requested), or None."""
    n = s.degree
    if n < 1:
        raise ValueError("coboundary_witness needs degree >= 1")
    A = s.module
    _check_cap(A, n, allow_large)
    m = A.modulus
    M = differential_matrix(A, n - 1)
    if restrict_symmetric:
        S = symmetric_subspace(A, n - 1, allow_large).matrix
        if not S.shape[1]:
            return cochain_from_flat(A, n - 1, np.zeros(_dim(A, n - 1))) if s.is_zero() else None
        x = linalg.solve(M @ S % m, s.flat(), m)
        if x is None:
            return None
        phi = cochain_from_flat(A, n - 1, S @ x % m)
        assert is_symmetric(phi)
        return phi
    x = linalg.solve(M, s.flat(), m)
    return None if x is None else cochain_from_flat(A, n - 1, x)


@dataclass(frozen=True)
class CohomologyReport:
    degree: int
    H: FiniteAbelianGroup
    HS: Optional[FiniteAbelianGroup] = None
    kernel: Optional[FiniteAbelianGroup] = None

    def to_json(self) -> dict:
        out: dict = {"degree": self.degree, "H": list(self.H.invariant_factors)}
        if self.HS is not None:
            out["HS"] = list(self.HS.invariant_factors)
        if self.kernel is not None:
            out["kernel"] = list(self.kernel.invariant_factors)
        return out


def report(A: GModule, n: int, symmetric: bool = True,
           allow_large: bool = False) -> CohomologyReport:
    H = cohomology_group(A, n, allow_large)
    if not symmetric:
        return CohomologyReport(n, H)
    return CohomologyReport(n, H, symmetric_cohomology_group(A, n, allow_large),
                            natural_map_kernel(A, n, allow_large))
