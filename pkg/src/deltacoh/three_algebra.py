"""3-algebras and strong 3-algebras over Q given by sparse structure constants.

A 3-algebra carries ``m : A^3 -> A``, ``mbar : A^2 -> A^2`` and ``P : A -> A``
with P^3 = 1, subject to axioms (i)-(vii); a strong 3-algebra replaces
``mbar`` by an element ``u`` of A (x) A and sets
``mbar(a, b) = sum m(a, b, u_1) (x) u_2``.  Every identity is checked by
evaluating both composites exactly on every basis tuple.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .group_core import FiniteGroup
from .tensor import (IDENTITY, Factor, Insert, Permute, Stage, Tensor, add_into,
                     basis_tensor, clean, format_tensor, run, tau, tensorial)

MAX_DIM = 40

SparseTable = dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]


class DimensionCapExceeded(RuntimeError):
    pass


def _aggregate(entries: Iterable[tuple[tuple[int, ...], tuple[int, ...], Fraction]]) -> SparseTable:
    table: SparseTable = {}
    for key, out, c in entries:
        add_into(table.setdefault(tuple(key), {}), tuple(out), Fraction(c))
    return {k: v for k, v in table.items() if v}


def _check_indices(dim: int, table: Mapping, name: str) -> None:
    for key, img in table.items():
        for i in itertools.chain(key, *img.keys()):
            if not 0 <= i < dim:
                raise ValueError(f"{name}: index {i} out of range for dim {dim}")


@dataclass(frozen=True, eq=False)
class SparseTrilinearSystem:
    """Structure constants for (m, mbar, P) on a ``dim``-dimensional space.

    Tables map input basis tuples to {output tuple: coefficient}; absent keys
    are zero.  Use :meth:`from_entries` to build one from raw entry lists
    (duplicates are summed).
    """

    dim: int
    m: SparseTable
    mbar: SparseTable
    P: SparseTable
    basis_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be positive")
        for name in ("m", "mbar", "P"):
            _check_indices(self.dim, getattr(self, name), name)

    @classmethod
    def from_entries(cls, dim, m_entries, mbar_entries, P_entries, basis_names=()):
        """m entries (i,j,k,out,c); mbar entries (i,j,p,q,c); P entries (i,out,c)."""
        m = _aggregate(((i, j, k), (o,), c) for i, j, k, o, c in m_entries)
        mb = _aggregate(((i, j), (p, q), c) for i, j, p, q, c in mbar_entries)
        P = _aggregate(((i,), (o,), c) for i, o, c in P_entries)
        return cls(dim, m, mb, P, tuple(basis_names))

    def name(self, i: int) -> str:
        return self.basis_names[i] if self.basis_names else f"e{i}"


@dataclass(frozen=True, eq=False)
class StrongThreeAlgebra:
    """(A, m, u, P): ``u`` is u(1) as {(p, q): coefficient}."""

    dim: int
    m: SparseTable
    P: SparseTable
    u: dict[tuple[int, int], Fraction]
    basis_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be positive")
        _check_indices(self.dim, self.m, "m")
        _check_indices(self.dim, self.P, "P")
        if not self.u:
            raise ValueError("u(1) must be nonzero")
        for key in self.u:
            if len(key) != 2 or not all(0 <= i < self.dim for i in key):
                raise ValueError(f"bad u term {key}")

    @classmethod
    def from_entries(cls, dim, m_entries, P_entries, u_entries, basis_names=()):
        m = _aggregate(((i, j, k), (o,), c) for i, j, k, o, c in m_entries)
        P = _aggregate(((i,), (o,), c) for i, o, c in P_entries)
        u: dict[tuple[int, int], Fraction] = {}
        for p, q, c in u_entries:
            add_into(u, (p, q), Fraction(c))
        return cls(dim, m, P, u, tuple(basis_names))

    def with_m(self, m: SparseTable) -> "StrongThreeAlgebra":
        return StrongThreeAlgebra(self.dim, m, self.P, self.u, self.basis_names)

    def to_system(self) -> SparseTrilinearSystem:
        return SparseTrilinearSystem(self.dim, self.m, derive_mtilde(self), self.P,
                                     self.basis_names)


def derive_mtilde(S: StrongThreeAlgebra) -> SparseTable:
    """mbar(e_i (x) e_j) = sum over u of m(e_i, e_j, u_1) (x) u_2."""
    stages = [Insert(2, S.u), tensorial(Factor(3, 1, S.m, "m"), IDENTITY)]
    out: SparseTable = {}
    for i, j in itertools.product(range(S.dim), repeat=2):
        img = run(basis_tensor((i, j)), stages)
        if img:
            out[(i, j)] = img
    return out


# --------------------------------------------------------------------------
# linear algebra over Q


def _compose_P(P: SparseTable, times: int, dim: int) -> SparseTable:
    out: SparseTable = {}
    F = tensorial(Factor(1, 1, P, "P"))
    for i in range(dim):
        t = basis_tensor((i,))
        for _ in range(times):
            t = run(t, [F])
        if t:
            out[(i,)] = t
    return out


def invert(P: SparseTable, dim: int) -> SparseTable:
    """Exact inverse of a linear endomorphism; ValueError if singular."""
    # columns of P are images of basis vectors; Gauss-Jordan on [P | I]
    rows = [[Fraction(0)] * (2 * dim) for _ in range(dim)]
    for (i,), img in P.items():
        for (o,), c in img.items():
            rows[o][i] = Fraction(c)
    for r in range(dim):
        rows[r][dim + r] = Fraction(1)
    for col in range(dim):
        piv = next((r for r in range(col, dim) if rows[r][col]), None)
        if piv is None:
            raise ValueError("P is not invertible")
        rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(dim):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    inv: SparseTable = {}
    for i in range(dim):
        img = {(o,): rows[o][dim + i] for o in range(dim) if rows[o][dim + i]}
        if img:
            inv[(i,)] = img
    return inv


def rational_nullspace(columns: Mapping[int, Mapping[int, Fraction]], ncols: int) -> list[dict[int, Fraction]]:
    """Kernel basis of the matrix whose column c is ``columns[c]`` (sparse)."""
    rows: dict[int, dict[int, Fraction]] = {}
    for c, col in columns.items():
        for r, v in col.items():
            if v:
                rows.setdefault(r, {})[c] = Fraction(v)
    pivots: dict[int, dict[int, Fraction]] = {}  # pivot column -> reduced row
    for row in rows.values():
        row = dict(row)
        for pc, prow in pivots.items():
            f = row.get(pc)
            if f:
                for c, v in prow.items():
                    add_into(row, c, -f * v)
        if not row:
            continue
        pc = min(row)
        pv = row[pc]
        row = {c: v / pv for c, v in row.items()}
        for opc, orow in pivots.items():
            f = orow.get(pc)
            if f:
                for c, v in row.items():
                    add_into(orow, c, -f * v)
        pivots[pc] = row
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = {free: Fraction(1)}
        for pc, prow in pivots.items():
            f = prow.get(free)
            if f:
                v[pc] = -f
        basis.append(v)
    return basis


# --------------------------------------------------------------------------
# axiom checking


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def to_json(self) -> dict:
        out: dict = {"axiom": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class AlgebraReport:
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failed(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"ok": self.ok, "axioms": [r.to_json() for r in self.results]}


@dataclass(frozen=True)
class Identity:
    name: str
    arity: int
    lhs: tuple[Stage, ...]
    rhs: tuple[Stage, ...]


def _first_failure(identity: Identity, dim: int, first: Sequence[int]):
    for a in first:
        for rest in itertools.product(range(dim), repeat=identity.arity - 1):
            key = (a,) + rest
            t = basis_tensor(key)
            left = run(t, identity.lhs)
            right = run(t, identity.rhs)
            if left != right:
                return key, left, right
    return None


def check_identity(identity: Identity, dim: int, jobs: int = 1) -> AxiomResult:
    """Compare both sides on every basis tuple; report the first failure in
    lexicographic order."""
    if identity.arity == 0:
        left = run({(): Fraction(1)}, identity.lhs)
        right = run({(): Fraction(1)}, identity.rhs)
        if left == right:
            return AxiomResult(identity.name, True)
        return AxiomResult(identity.name, False, (),
                           f"lhs={format_tensor(left)} rhs={format_tensor(right)}")
    if jobs > 1 and dim > 1:
        chunks = [[a] for a in range(dim)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            found = list(ex.map(_first_failure, [identity] * dim, [dim] * dim, chunks))
        hit = next((f for f in found if f is not None), None)
    else:
        hit = _first_failure(identity, dim, range(dim))
    if hit is None:
        return AxiomResult(identity.name, True)
    key, left, right = hit
    return AxiomResult(identity.name, False, key,
                       f"lhs={format_tensor(left)} rhs={format_tensor(right)}")


def _guard(dim: int, max_dim: int) -> None:
    if dim > max_dim:
        raise DimensionCapExceeded(
            f"dim {dim} exceeds the cap {max_dim}: the 5-ary axioms would need {dim ** 5} "
            "basis tuples; raise max_dim explicitly to proceed")


def _P_power_check(dim: int, P: SparseTable) -> AxiomResult:
    P3 = _compose_P(P, 3, dim)
    for i in range(dim):
        if P3.get((i,)) != {(i,): 1}:
            return AxiomResult("P^3=id", False, (i,), f"P^3(e{i})={format_tensor(P3.get((i,), {}))}")
    return AxiomResult("P^3=id", True)


def three_algebra_identities(A: SparseTrilinearSystem) -> list[Identity]:
    I = IDENTITY
    m = Factor(3, 1, A.m, "m")
    mb = Factor(2, 2, A.mbar, "mbar")
    P = Factor(1, 1, A.P, "P")
    P2 = Factor(1, 1, _compose_P(A.P, 2, A.dim), "P^2")
    Pinv = Factor(1, 1, invert(A.P, A.dim), "P^-1")
    T = tensorial
    return [
        Identity("(i)", 5,
                 (T(m, I, I), T(m)),
                 (tau(3, 4, 5), T(I, mb, I, I), tau(3, 4, 5), T(I, I, m), T(m))),
        Identity("(ii)", 4,
                 (T(mb, I, I), tau(2, 3, 4), T(I, m)),
                 (tau(2, 3, 4), T(P, P, I, I), T(mb, I, I), T(Pinv, I, I, I), tau(1, 2, 4),
                  T(I, m), T(mb))),
        Identity("(iii)", 4,
                 (T(m, I), T(mb)),
                 (tau(2, 3, 4), tau(1, 2, 4), T(I, I, mb), T(P2, mb, I), tau(1, 2, 4), T(I, m))),
        Identity("(iv)", 3,
                 (T(I, mb), tau(1, 2, 3), T(I, mb)),
                 (T(I, Pinv, I), T(mb, I), T(P, P, I), T(I, mb), T(mb, I))),
        Identity("(v)", 4,
                 (T(mb, P2, I), tau(2, 3, 4), T(I, m)),
                 (T(I, I, mb), T(m, I))),
        Identity("(vi)", 3,
                 (T(m), T(P)),
                 (tau(1, 2, 3), tau(2, 3, 3), T(P, P, P), T(m))),
        Identity("(vii)", 2,
                 (tau(1, 2, 2), T(P2, P), T(mb)),
                 (T(mb), tau(1, 2, 2), T(P2, P))),
    ]


def verify_three_algebra(A: SparseTrilinearSystem, max_dim: int = MAX_DIM,
                         jobs: int = 1, only: Optional[Sequence[str]] = None) -> AlgebraReport:
    """Check P^3 = id and axioms (i)-(vii) on all basis tuples."""
    _guard(A.dim, max_dim)
    report = AlgebraReport([_P_power_check(A.dim, A.P)])
    try:
        identities = three_algebra_identities(A)
    except ValueError as exc:
        report.results.append(AxiomResult("P invertible", False, None, str(exc)))
        return report
    for ident in identities:
        if only is None or ident.name in only:
            report.results.append(check_identity(ident, A.dim, jobs))
    return report


def strong_identities(S: StrongThreeAlgebra) -> list[Identity]:
    I = IDENTITY
    m = Factor(3, 1, S.m, "m")
    P = Factor(1, 1, S.P, "P")
    P2 = Factor(1, 1, _compose_P(S.P, 2, S.dim), "P^2")
    T = tensorial
    u = Insert(0, S.u)
    return [
        Identity("Eq1 u-symmetry", 0,
                 (u,),
                 (u, tau(1, 2, 2), T(P2, P))),
        Identity("Eq3 Pm", 3,
                 (T(m), T(P)),
                 (tau(1, 2, 3), tau(2, 3, 3), T(P, P, P), T(m))),
        Identity("Eq4 u-transport", 2,
                 (tau(1, 2, 2), T(P, I), Insert(2, S.u), T(m, I)),
                 (Insert(0, S.u), Permute((0, 3, 1, 2), "u1 b u2 a"), T(I, m))),
        Identity("Eq5 mm", 5,
                 (T(m, I, I), T(m)),
                 (Insert(5, S.u), Permute((0, 1, 3, 5, 2, 6, 4), "a b d u1 c u2 e"),
                  T(I, m, m), T(m))),
    ]


def verify_strong(S: StrongThreeAlgebra, max_dim: int = MAX_DIM, jobs: int = 1) -> AlgebraReport:
    """Check u-symmetry, then P^3 = id, Pm, u-transport and mm on basis tuples."""
    _guard(S.dim, max_dim)
    idents = strong_identities(S)
    report = AlgebraReport([check_identity(idents[0], S.dim)])
    p3 = _P_power_check(S.dim, S.P)
    p3.name = "Eq2 P^3=id"
    report.results.append(p3)
    for ident in idents[1:]:
        report.results.append(check_identity(ident, S.dim, jobs))
    return report


def prop22_crosscheck(S: StrongThreeAlgebra, max_dim: int = MAX_DIM) -> bool:
    """True iff the strong-algebra equations and axioms (i)-(vii) for the
    induced mbar give the same verdict."""
    idents = strong_identities(S)
    if not check_identity(idents[0], S.dim).passed:
        raise ValueError("u does not satisfy the u-symmetry precondition")
    return verify_strong(S, max_dim).ok == verify_three_algebra(S.to_system(), max_dim).ok


# --------------------------------------------------------------------------
# orthogonality


@dataclass
class OrthogonalityReport:
    projection: bool
    annihilates_kernel: bool
    kernel_dim: int
    witness: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.projection and self.annihilates_kernel

    def to_json(self) -> dict:
        return {"ok": self.ok, "Q_is_projection": self.projection,
                "m_vanishes_on_kerQ": self.annihilates_kernel, "dim_kerQ": self.kernel_dim,
                "witness": None if self.witness is None else list(self.witness)}


def q_operator(A: SparseTrilinearSystem) -> SparseTable:
    """Q = (1 x P^2) tau12 mbar (P x P) mbar, as a sparse map on A (x) A."""
    mb = Factor(2, 2, A.mbar, "mbar")
    P = Factor(1, 1, A.P, "P")
    P2 = Factor(1, 1, _compose_P(A.P, 2, A.dim), "P^2")
    stages = [tensorial(mb), tensorial(P, P), tensorial(mb), tau(1, 2, 2),
              tensorial(IDENTITY, P2)]
    Q: SparseTable = {}
    for key in itertools.product(range(A.dim), repeat=2):
        img = run(basis_tensor(key), stages)
        if img:
            Q[key] = img
    return Q


def verify_orthogonal(A: SparseTrilinearSystem) -> OrthogonalityReport:
    """Q must be idempotent and m must vanish on (ker Q) (x) A."""
    d = A.dim
    Q = q_operator(A)
    F = Factor(2, 2, Q, "Q")
    projection, witness = True, None
    for key in itertools.product(range(d), repeat=2):
        once = Q.get(key, {})
        twice = run(once, [tensorial(F)]) if once else {}
        if once != twice:
            projection, witness = False, key
            break
    pair = lambda i, j: i * d + j
    cols = {pair(*k): {pair(*o): c for o, c in img.items()} for k, img in Q.items()}
    kernel = rational_nullspace(cols, d * d)
    annihilates = True
    m = Factor(3, 1, A.m, "m")
    for v in kernel:
        vec = {divmod(c, d): x for c, x in v.items()}
        for k in range(d):
            t = {(i, j, k): x for (i, j), x in vec.items()}
            if run(t, [tensorial(m)]):
                annihilates = False
                witness = witness or (k,)
                break
        if not annihilates:
            break
    return OrthogonalityReport(projection, annihilates, len(kernel), witness)


# --------------------------------------------------------------------------
# 6j-type data


def _sixj_index(n: int, sym: Sequence[int]) -> int:
    r = 0
    for x in sym:
        r = r * n + x
    return r


SIXJ_GENERATORS: tuple[tuple[int, ...], ...] = (
    (1, 0, 2, 4, 3, 5),   # swap columns 1 and 2
    (1, 2, 0, 4, 5, 3),   # cycle the columns
    (3, 4, 2, 0, 1, 5),   # exchange rows in columns 1 and 2
)
"""Generators of the tetrahedral S_4 acting on the six arguments
(a, b, c, i, j, k) of a symbol laid out as rows (a b c / i j k): permute
columns, and swap upper and lower entries in two columns at once."""


def sixj_orbits(n: int) -> list[list[tuple[int, ...]]]:
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for sym in itertools.product(range(n), repeat=6):
        if sym in seen:
            continue
        orbit = {sym}
        frontier = [sym]
        while frontier:
            x = frontier.pop()
            for g in SIXJ_GENERATORS:
                y = tuple(x[g[i]] for i in range(6))
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


@dataclass(frozen=True, eq=False)
class SixJData:
    """A symbol f : I^6 -> Q and weights w : I -> Q with I = {0..n-1}.

    ``f`` is a flat tuple indexed by the mixed-radix rank of (a,b,c,i,j,k).
    """

    n: int
    f: tuple[Fraction, ...]
    w: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.f) != self.n ** 6 or len(self.w) != self.n:
            raise ValueError("SixJData: wrong table sizes")
        for sym in itertools.product(range(self.n), repeat=6):
            v = self.f[_sixj_index(self.n, sym)]
            for g in SIXJ_GENERATORS:
                img = tuple(sym[g[i]] for i in range(6))
                if self.f[_sixj_index(self.n, img)] != v:
                    raise ValueError(f"symbol is not S_4-invariant at {sym} -> {img}")

    def __call__(self, a, b, c, i, j, k) -> Fraction:
        return self.f[_sixj_index(self.n, (a, b, c, i, j, k))]

    @classmethod
    def from_orbit_values(cls, n: int, value: Callable[[int, tuple[int, ...]], Fraction],
                          w: Sequence) -> "SixJData":
        """``value(orbit_number, representative)`` gives the symbol on each orbit."""
        f = [Fraction(0)] * n ** 6
        for k, orbit in enumerate(sixj_orbits(n)):
            v = Fraction(value(k, orbit[0]))
            for sym in orbit:
                f[_sixj_index(n, sym)] = v
        return cls(n, tuple(f), tuple(Fraction(x) for x in w))


def build_sixj(D: SixJData) -> StrongThreeAlgebra:
    """Basis e_ijk (index (i*n + j)*n + k), P(e_ijk) = e_jki,
    m(e_akj, e_kbi, e_jic) = f(a,b,c,i,j,k) e_abc, u = sum w_j^2 e_uvj (x) e_ujv."""
    n = D.n
    e = lambda i, j, k: (i * n + j) * n + k
    m_entries = []
    for a, b, c, i, j, k in itertools.product(range(n), repeat=6):
        v = D(a, b, c, i, j, k)
        if v:
            m_entries.append((e(a, k, j), e(k, b, i), e(j, i, c), e(a, b, c), v))
    P_entries = [(e(i, j, k), e(j, k, i), 1) for i, j, k in itertools.product(range(n), repeat=3)]
    u_entries = [(e(x, y, j), e(x, j, y), D.w[j] ** 2)
                 for j, x, y in itertools.product(range(n), repeat=3) if D.w[j]]
    names = [f"e{i}{j}{k}" for i, j, k in itertools.product(range(n), repeat=3)]
    return StrongThreeAlgebra.from_entries(n ** 3, m_entries, P_entries, u_entries, names)


def build_sixj_mbar(D: SixJData) -> SparseTable:
    """The explicit mbar written for the 6j algebra, for comparison with the
    one induced from u."""
    n = D.n
    e = lambda i, j, k: (i * n + j) * n + k
    entries = []
    for j2, b, c, a, j1, j in itertools.product(range(n), repeat=6):
        v = D.w[j] ** 2 * D(j2, a, j, j1, c, b)
        if v:
            entries.append(((e(j2, b, c), e(b, a, j1)), (e(j2, a, j), e(c, j, j1)), v))
    return _aggregate(entries)


def check_sixj_identity(D: SixJData) -> tuple[bool, Optional[tuple[int, ...]]]:
    """The pentagon-type identity on all (a,b,c,e,f,j1,j2,j3,j23) in I^9."""
    n, w2 = D.n, [x * x for x in D.w]
    for a, b, c, e_, f_, j1, j2, j3, j23 in itertools.product(range(n), repeat=9):
        lhs = sum((w2[j] * D(e_, j3, j, j2, a, j23) * D(j, c, j1, b, a, j2)
                   * D(j3, c, f_, j1, e_, j) for j in range(n)), Fraction(0))
        rhs = D(j3, c, f_, b, j23, j2) * D(e_, f_, j1, b, a, j23)
        if lhs != rhs:
            return False, (a, b, c, e_, f_, j1, j2, j3, j23)
    return True, None


# --------------------------------------------------------------------------
# Dijkgraaf-Witten type algebra


@dataclass(frozen=True, eq=False)
class MultiplicativeCocycle:
    """alpha : G^3 -> Q \\ {0}, stored flat in mixed-radix order."""

    group: FiniteGroup
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.group.order ** 3:
            raise ValueError("need |G|^3 values")
        if any(v == 0 for v in self.values):
            raise ValueError("cocycle values must be nonzero")

    def __call__(self, g: int, h: int, k: int) -> Fraction:
        n = self.group.order
        return self.values[(g * n + h) * n + k]

    @classmethod
    def constant(cls, G: FiniteGroup, c=1) -> "MultiplicativeCocycle":
        return cls(G, (Fraction(c),) * G.order ** 3)

    @classmethod
    def from_function(cls, G: FiniteGroup, fn) -> "MultiplicativeCocycle":
        return cls(G, tuple(Fraction(fn(g, h, k))
                            for g, h, k in itertools.product(range(G.order), repeat=3)))


def dw_basis(G: FiniteGroup) -> list[tuple[int, int, int]]:
    """Triples (g, h, k) with k h g = 1, ordered by (g, h)."""
    return [(g, h, G.inv(G.mul(h, g))) for g in range(G.order) for h in range(G.order)]


def build_dw(G: FiniteGroup, alpha: MultiplicativeCocycle) -> StrongThreeAlgebra:
    """The algebra on triples (g,h,k) with khg = 1.

    m((x,y,z),(p,q,r),(a,b,c)) = [az = 1][br = 1][py = 1] alpha(z,r,q) (x,q,c),
    P((g,h,k)) = (h,k,g), u = sum_{g,h} (g,h,(hg)^-1) (x) (g^-1, hg, h^-1).
    """
    basis = dw_basis(G)
    index = {t: i for i, t in enumerate(basis)}
    e, inv, mul = G.identity, G.inv, G.mul
    m_entries = []
    for x, y, z in basis:
        for q in range(G.order):
            p = inv(y)
            r = inv(mul(q, p))
            a, b = inv(z), inv(r)
            c = inv(mul(b, a))
            assert mul(a, z) == e and mul(b, r) == e and mul(p, y) == e
            out = (x, q, c)
            if out not in index:
                raise AssertionError(f"product leaves the basis: {out}")
            m_entries.append((index[(x, y, z)], index[(p, q, r)], index[(a, b, c)],
                              index[out], alpha(z, r, q)))
    P_entries = [(index[(g, h, k)], index[(h, k, g)], 1) for g, h, k in basis]
    u_entries = []
    for g in range(G.order):
        for h in range(G.order):
            left = (g, h, inv(mul(h, g)))
            right = (inv(g), mul(h, g), inv(h))
            u_entries.append((index[left], index[right], 1))
    names = [f"({G.name(g)},{G.name(h)},{G.name(k)})" for g, h, k in basis]
    return StrongThreeAlgebra.from_entries(len(basis), m_entries, P_entries, u_entries, names)


def check_dw_condition(alpha: MultiplicativeCocycle) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """alpha(g,h,k) = alpha(gh,k,(hk)^-1) = alpha((hk)^-1,g^-1,gh) = alpha(hk,k^-1,(gh)^-1)."""
    G = alpha.group
    mul, inv = G.mul, G.inv
    for g, h, k in itertools.product(range(G.order), repeat=3):
        gh, hk = mul(g, h), mul(h, k)
        v = alpha(g, h, k)
        if not (v == alpha(gh, k, inv(hk)) == alpha(inv(hk), inv(g), gh)
                == alpha(hk, inv(k), inv(gh))):
            return False, (g, h, k)
    return True, None


def is_multiplicative_cocycle(alpha: MultiplicativeCocycle) -> bool:
    """alpha(h,k,l) alpha(g,hk,l) alpha(g,h,k) = alpha(gh,k,l) alpha(g,h,kl)."""
    G = alpha.group
    mul = G.mul
    for g, h, k, l in itertools.product(range(G.order), repeat=4):
        if (alpha(h, k, l) * alpha(g, mul(h, k), l) * alpha(g, h, k)
                != alpha(mul(g, h), k, l) * alpha(g, h, mul(k, l))):
            return False
    return True


def perturb_m(S: StrongThreeAlgebra, key: tuple[int, int, int], out: int,
              delta: Fraction = Fraction(1)) -> StrongThreeAlgebra:
    """Copy of S with one structure constant of m shifted by ``delta``."""
    m = {k: dict(v) for k, v in S.m.items()}
    img = m.setdefault(key, {})
    add_into(img, (out,), Fraction(delta))
    if not img:
        del m[key]
    return S.with_m(m)
