"""Delta-groups as tabulated finite structures.

A Delta-group based at G is a family of finite sets T(g, h) with

* ``m : T(g,h^-1) x T(h,k^-1) x T(h^-1 g, k^-1 h) -> T(g, k^-1)``
* ``P : T(g,h) -> T(h, (hg)^-1)``
* ``Q : T(g,h) -> T(g^-1, hg)``

satisfying axioms (7)-(11).  Carrier elements are opaque integer ids.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Optional

import numpy as np

from . import linalg
from .cochain import Cochain, cochain_from_flat, is_cocycle, is_symmetric, zero_cochain
from .cohomology import coboundary_witness
from .group_core import FiniteGroup, GModule
from .three_algebra import StrongThreeAlgebra

Carrier = tuple[int, int]


class DeltaGroupError(ValueError):
    pass


class InternalConsistencyError(RuntimeError):
    """Two independent decision procedures disagreed."""


@dataclass(frozen=True, eq=False)
class DeltaGroup:
    """Tabulated Delta-group.

    Attributes:
        base: The base group G.
        carriers: (g, h) -> tuple of element ids in T(g, h); every pair present.
        m_table: (a, b, c) -> id, over typed triples.
        p_table: id -> id.
        q_table: id -> id.
        names: Optional display string per id.
    """

    base: FiniteGroup
    carriers: Mapping[Carrier, tuple[int, ...]]
    m_table: Mapping[tuple[int, int, int], int]
    p_table: Mapping[int, int]
    q_table: Mapping[int, int]
    names: Mapping[int, str] = field(default_factory=dict)
    element_carrier: dict[int, Carrier] = field(init=False, repr=False)

    def __post_init__(self):
        G = self.base
        owner: dict[int, Carrier] = {}
        for g, h in itertools.product(range(G.order), repeat=2):
            if (g, h) not in self.carriers:
                raise DeltaGroupError(f"missing carrier T({g},{h})")
        for key, ids in self.carriers.items():
            for x in ids:
                if x in owner:
                    raise DeltaGroupError(f"element {x} lies in T{owner[x]} and T{key}")
                owner[x] = key
        object.__setattr__(self, "element_carrier", owner)

    @property
    def elements(self) -> list[int]:
        return sorted(self.element_carrier)

    def carrier_of(self, x: int) -> Carrier:
        return self.element_carrier[x]

    def typed_triples(self) -> Iterator[tuple[int, int, int]]:
        """All (a, b, c) in T(g,h^-1) x T(h,k^-1) x T(h^-1 g, k^-1 h)."""
        G = self.base
        mul, inv = G.mul, G.inv
        for (g, hinv), As in self.carriers.items():
            h = inv(hinv)
            for k in range(G.order):
                Bs = self.carriers[(h, inv(k))]
                Cs = self.carriers[(mul(hinv, g), mul(inv(k), h))]
                for a in As:
                    for b in Bs:
                        for c in Cs:
                            yield a, b, c

    def m_codomain(self, a: int, b: int, c: int) -> Optional[Carrier]:
        """Carrier m(a,b,c) must land in, or None if (a,b,c) is not typed."""
        G = self.base
        mul, inv = G.mul, G.inv
        g, hinv = self.carrier_of(a)
        h = inv(hinv)
        h2, kinv = self.carrier_of(b)
        if h2 != h:
            return None
        k = inv(kinv)
        if self.carrier_of(c) != (mul(hinv, g), mul(kinv, h)):
            return None
        return (g, kinv)

    def m(self, a: int, b: int, c: int) -> int:
        return self.m_table[(a, b, c)]

    def P(self, x: int) -> int:
        return self.p_table[x]

    def Q(self, x: int) -> int:
        return self.q_table[x]

    def name(self, x: int) -> str:
        return self.names.get(x, str(x))


# --------------------------------------------------------------------------
# verification


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    witness: Optional[tuple] = None
    kind: str = "axiom"  # or "typing"

    def to_json(self) -> dict:
        out: dict = {"axiom": self.name, "passed": self.passed}
        if not self.passed:
            out["kind"] = self.kind
            out["witness"] = None if self.witness is None else list(self.witness)
        return out


@dataclass
class DeltaReport:
    checks: list[AxiomCheck]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def typing_ok(self) -> bool:
        return all(c.passed for c in self.checks if c.kind == "typing")

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"ok": self.ok, "axioms": [c.to_json() for c in self.checks]}


def check_typing(T: DeltaGroup) -> list[AxiomCheck]:
    G = T.base
    mul, inv = G.mul, G.inv
    out = []
    bad = None
    for x in T.elements:
        g, h = T.carrier_of(x)
        px = T.p_table.get(x)
        if px not in T.element_carrier or T.carrier_of(px) != (h, inv(mul(h, g))):
            bad = ("P", x)
            break
        qx = T.q_table.get(x)
        if qx not in T.element_carrier or T.carrier_of(qx) != (inv(g), mul(h, g)):
            bad = ("Q", x)
            break
    out.append(AxiomCheck("typing P,Q", bad is None, bad, "typing"))
    bad = None
    for a, b, c in T.typed_triples():
        y = T.m_table.get((a, b, c))
        target = T.m_codomain(a, b, c)
        if y not in T.element_carrier or T.carrier_of(y) != target:
            bad = (a, b, c)
            break
    out.append(AxiomCheck("typing m", bad is None, bad, "typing"))
    return out


def _check_7(T: DeltaGroup) -> list[AxiomCheck]:
    P, Q = T.P, T.Q
    out = []
    for name, pred in (("(7) P^3=id", lambda x: P(P(P(x))) == x),
                       ("(7) Q^2=id", lambda x: Q(Q(x)) == x),
                       ("(7) P^2Q=QP", lambda x: P(P(Q(x))) == Q(P(x)))):
        w = next((x for x in T.elements if not pred(x)), None)
        out.append(AxiomCheck(name, w is None, None if w is None else (w,)))
    return out


def _typed_m(T: DeltaGroup, a: int, b: int, c: int) -> Optional[int]:
    if T.m_codomain(a, b, c) is None:
        return None
    return T.m_table.get((a, b, c))


def _check_8_9(T: DeltaGroup) -> list[AxiomCheck]:
    out = []
    for name, op, rearrange in (
            ("(8) Pm", T.P, lambda a, b, c: (T.P(b), T.P(c), T.P(a))),
            ("(9) Qm", T.Q, lambda a, b, c: (T.Q(a), T.Q(c), T.Q(b)))):
        witness, kind = None, "axiom"
        for a, b, c in T.typed_triples():
            rhs = _typed_m(T, *rearrange(a, b, c))
            if rhs is None:
                witness, kind = (a, b, c), "typing"
                break
            if op(T.m(a, b, c)) != rhs:
                witness = (a, b, c)
                break
        out.append(AxiomCheck(name, witness is None, witness, kind))
    return out


def _check_10(T: DeltaGroup) -> AxiomCheck:
    G = T.base
    mul, inv = G.mul, G.inv
    for a, b, c in T.typed_triples():
        g, hinv = T.carrier_of(a)
        h = inv(hinv)
        kinv = T.carrier_of(b)[1]
        k = inv(kinv)
        abc = T.m(a, b, c)
        for l in range(G.order):
            linv = inv(l)
            Ds = T.carriers[(k, linv)]
            Es = T.carriers[(mul(kinv, g), mul(linv, k))]
            Fs = T.carriers[(mul(kinv, h), mul(linv, k))]
            for d in Ds:
                for e in Es:
                    left = _typed_m(T, abc, d, e)
                    for f in Fs:
                        x = _typed_m(T, b, d, f)
                        y = _typed_m(T, c, T.Q(f), e)
                        if left is None or x is None or y is None:
                            return AxiomCheck("(10) mm", False, (a, b, c, d, e, f), "typing")
                        right = _typed_m(T, a, x, y)
                        if right is None:
                            return AxiomCheck("(10) mm", False, (a, b, c, d, e, f), "typing")
                        if left != right:
                            return AxiomCheck("(10) mm", False, (a, b, c, d, e, f))
    return AxiomCheck("(10) mm", True)


def _check_11(T: DeltaGroup) -> AxiomCheck:
    P, Q = T.P, T.Q
    for f, a, b in T.typed_triples():
        inner = T.m(f, a, b)
        out = _typed_m(T, inner, P(P(Q(a))), P(Q(b)))
        if out is None:
            return AxiomCheck("(11) cancellation", False, (f, a, b), "typing")
        if out != f:
            return AxiomCheck("(11) cancellation", False, (f, a, b))
    return AxiomCheck("(11) cancellation", True)


def verify_delta_axioms(T: DeltaGroup) -> DeltaReport:
    """Typing first, then axioms (7)-(11) exhaustively (axiom (10) over every f)."""
    checks = check_typing(T)
    if not all(c.passed for c in checks):
        return DeltaReport(checks)
    checks += _check_7(T)
    checks += _check_8_9(T)
    checks.append(_check_10(T))
    checks.append(_check_11(T))
    return DeltaReport(checks)


# --------------------------------------------------------------------------
# constructions


class _ModuleTables:
    """A as integers 0..|A|-1 with addition, negation and action tables."""

    def __init__(self, A: GModule):
        self.A = A
        elems = A.elements()
        n = len(elems)
        self.size = n
        self.add = np.array([[A.encode(A.add(x, y)) for y in elems] for x in elems],
                            dtype=np.int64).reshape(n, n)
        self.neg = np.array([A.encode(A.neg(x)) for x in elems], dtype=np.int64)
        self.act = np.array([[A.encode(A.act(g, x)) for x in elems]
                             for g in range(A.group.order)], dtype=np.int64)

    def cochain_codes(self, s: Cochain) -> np.ndarray:
        # value codes indexed by tuple rank
        return np.array([self.A.encode(row) for row in s.values], dtype=np.int64)


def build_T_G_A_alpha(G: FiniteGroup, A: GModule,
                      alpha: Optional[Cochain] = None) -> DeltaGroup:
    """T(G, A, alpha): carriers A x {(g, h)} with

    P(a, (x, y)) = (x a, (y, x^-1 y^-1)), Q(a, (x, y)) = (-(x a), (x^-1, y x)),
    m((a,(g,h^-1)), (b,(h,k^-1)), (c,(h^-1 g,k^-1 h)))
        = (a + (g^-1 h) b + c + alpha(g^-1 h, h^-1 k, k^-1), (g, k^-1)).

    Element id is ((g |G|) + h) |A| + code(a).
    """
    if A.group is not G:
        raise DeltaGroupError("module is over a different group")
    if alpha is None:
        alpha = zero_cochain(A, 3)
    if alpha.degree != 3 or alpha.module is not A:
        raise DeltaGroupError("alpha must be a 3-cochain with values in A")
    n = G.order
    mt = _ModuleTables(A)
    s = mt.size
    codes = mt.cochain_codes(alpha)
    mul, inv = G.mul, G.inv
    eid = lambda a, g, h: (g * n + h) * s + a
    carriers = {(g, h): tuple(eid(a, g, h) for a in range(s))
                for g, h in itertools.product(range(n), repeat=2)}
    P, Q, names = {}, {}, {}
    for x, y in itertools.product(range(n), repeat=2):
        for a in range(s):
            i = eid(a, x, y)
            ax = int(mt.act[x, a])
            P[i] = eid(ax, y, mul(inv(x), inv(y)))
            Q[i] = eid(int(mt.neg[ax]), inv(x), mul(y, x))
            names[i] = f"({A.decode(a)},({G.name(x)},{G.name(y)}))"
    m = {}
    for g, h, k in itertools.product(range(n), repeat=3):
        hinv, kinv = inv(h), inv(k)
        gih = mul(inv(g), h)
        r = (gih * n + mul(hinv, k)) * n + kinv
        twist = int(codes[r])
        ca, cb, cc = (g, hinv), (h, kinv), (mul(hinv, g), mul(kinv, h))
        for a, b, c in itertools.product(range(s), repeat=3):
            v = mt.add[mt.add[mt.add[a, mt.act[gih, b]], c], twist]
            m[(eid(a, *ca), eid(b, *cb), eid(c, *cc))] = eid(int(v), g, kinv)
    return DeltaGroup(G, carriers, m, P, Q, names)


def build_T_G_0(G: FiniteGroup) -> DeltaGroup:
    """Singleton carriers T(g,h) = {(g, h, (hg)^-1)}; id = g |G| + h."""
    from .group_core import trivial_module
    T = build_T_G_A_alpha(G, trivial_module(G, 2, 0))
    names = {x: f"({G.name(g)},{G.name(h)},{G.name(G.inv(G.mul(h, g)))})"
             for (g, h), (x,) in T.carriers.items()}
    return DeltaGroup(T.base, T.carriers, T.m_table, T.p_table, T.q_table, names)


def build_trivial_base(A: GModule) -> DeltaGroup:
    """T(1, A): one carrier A with m(a,b,c) = a+b+c, P(a) = a, Q(a) = -a."""
    if A.group.order != 1:
        raise DeltaGroupError("build_trivial_base needs the trivial base group")
    T = build_T_G_A_alpha(A.group, A)
    names = {A.encode(x): str(x[0]) if A.rank == 1 else str(x) for x in A.elements()}
    return DeltaGroup(T.base, T.carriers, T.m_table, T.p_table, T.q_table, names)


# --------------------------------------------------------------------------
# cocycle conditions


def check_d1(alpha: Cochain) -> bool:
    """alpha(x,y,z) = xy alpha(y^-1, yz, (xyz)^-1) = -alpha(x, yz, z^-1)
    = -alpha(xy, y^-1, yz) for all x, y, z."""
    return d1_witness(alpha) is None


def d1_witness(alpha: Cochain) -> Optional[tuple[int, int, int]]:
    if alpha.degree != 3:
        raise DeltaGroupError("check_d1 needs a 3-cochain")
    A = alpha.module
    G = A.group
    mul, inv = G.mul, G.inv
    for x, y, z in itertools.product(range(G.order), repeat=3):
        v = alpha(x, y, z)
        xy = mul(x, y)
        first = A.act(xy, alpha(inv(y), mul(y, z), inv(G.prod(x, y, z))))
        second = A.neg(alpha(x, mul(y, z), inv(z)))
        third = A.neg(alpha(xy, inv(y), mul(y, z)))
        if not v == first == second == third:
            return (x, y, z)
    return None


def prop41_crosscheck(G: FiniteGroup, A: GModule, alpha: Cochain) -> bool:
    """True iff the Delta-group verdict matches (cocycle and d1)."""
    verdict = verify_delta_axioms(build_T_G_A_alpha(G, A, alpha)).ok
    return verdict == (is_cocycle(alpha) and check_d1(alpha))


def d1_matches_symmetry(alpha: Cochain) -> bool:
    """Whether d1 and full S_4-invariance give the same verdict on alpha."""
    return check_d1(alpha) == is_symmetric(alpha)


# --------------------------------------------------------------------------
# morphisms


def is_morphism(f: Mapping[int, int], T1: DeltaGroup, T2: DeltaGroup) -> Optional[tuple]:
    """None if ``f`` preserves carriers (identity on the base) and commutes
    with m, P, Q; otherwise a witness tuple."""
    if T1.base is not T2.base:
        raise DeltaGroupError("morphisms are only checked over the identity base map")
    for x in T1.elements:
        y = f.get(x)
        if y is None or y not in T2.element_carrier or T2.carrier_of(y) != T1.carrier_of(x):
            return ("carrier", x)
        if f[T1.P(x)] != T2.P(y):
            return ("P", x)
        if f[T1.Q(x)] != T2.Q(y):
            return ("Q", x)
    for a, b, c in T1.typed_triples():
        if f[T1.m(a, b, c)] != T2.m(f[a], f[b], f[c]):
            return ("m", a, b, c)
    return None


def carrier_map(sigma: Cochain, G: FiniteGroup, A: GModule) -> dict[int, int]:
    """f(a, (x, y)) = (a + sigma(x^-1 y^-1, y), (x, y)) on T(G, A, -) ids."""
    n = G.order
    mt = _ModuleTables(A)
    s = mt.size
    codes = mt.cochain_codes(sigma)
    f = {}
    for x, y in itertools.product(range(n), repeat=2):
        shift = int(codes[G.mul(G.inv(x), G.inv(y)) * n + y])
        for a in range(s):
            f[(x * n + y) * s + a] = (x * n + y) * s + int(mt.add[a, shift])
    return f


def morphism_formula_witness(sigma: Cochain, alpha: Cochain,
                             beta: Cochain) -> Optional[tuple]:
    """First failure of (e1) or (e2), read as
    sigma(gh,k) + alpha(g,h,k) = sigma(g,hk) + g sigma(h,k) + sigma(gh,h^-1) + beta(g,h,k)."""
    A = sigma.module
    G = A.group
    mul, inv, add, act, neg = G.mul, G.inv, A.add, A.act, A.neg
    for g, h in itertools.product(range(G.order), repeat=2):
        gh = mul(g, h)
        v = sigma(g, h)
        if not v == act(g, sigma(h, inv(gh))) == neg(act(gh, sigma(inv(h), inv(g)))):
            return ("e1", g, h)
    for g, h, k in itertools.product(range(G.order), repeat=3):
        gh = mul(g, h)
        left = add(sigma(gh, k), alpha(g, h, k))
        right = add(add(sigma(g, mul(h, k)), act(g, sigma(h, k))),
                    add(sigma(gh, inv(h)), beta(g, h, k)))
        if left != right:
            return ("e2", g, h, k)
    return None


def is_delta_morphism(sigma: Cochain, alpha: Cochain, beta: Cochain) -> bool:
    """Whether sigma induces a morphism T(G,A,alpha) -> T(G,A,beta).

    Decided by the closed-form conditions and by checking that the carrier
    map commutes with m, P, Q; raises if the two disagree.
    """
    A = sigma.module
    G = A.group
    formula = morphism_formula_witness(sigma, alpha, beta) is None
    direct = is_morphism(carrier_map(sigma, G, A), build_T_G_A_alpha(G, A, alpha),
                         build_T_G_A_alpha(G, A, beta)) is None
    if formula != direct:
        raise InternalConsistencyError(
            f"closed-form conditions say {formula}, carrier check says {direct}")
    return formula


def _morphism_system(alpha: Cochain, beta: Cochain) -> tuple[np.ndarray, np.ndarray]:
    """(e1) and (e2) as M sigma = rhs over Z/m on flattened sigma."""
    A = alpha.module
    G = A.group
    n, k, mod = G.order, A.rank, A.modulus
    mats = [np.asarray(M, dtype=np.int64) for M in A.action]
    eye = np.eye(k, dtype=np.int64)
    mul, inv = G.mul, G.inv
    rows: list[np.ndarray] = []
    rhs: list[np.ndarray] = []

    def block(terms):
        R = np.zeros((k, n * n * k), dtype=np.int64)
        for sign, act, (x, y) in terms:
            c = (x * n + y) * k
            R[:, c:c + k] += sign * (eye if act is None else mats[act])
        return R % mod

    zero = np.zeros(k, dtype=np.int64)
    for g, h in itertools.product(range(n), repeat=2):
        gh = mul(g, h)
        rows.append(block([(1, None, (g, h)), (-1, g, (h, inv(gh)))]))
        rhs.append(zero)
        rows.append(block([(1, None, (g, h)), (1, gh, (inv(h), inv(g)))]))
        rhs.append(zero)
    diff = (beta.values - alpha.values) % mod
    for g, h, kk in itertools.product(range(n), repeat=3):
        gh = mul(g, h)
        rows.append(block([(1, None, (gh, kk)), (-1, None, (g, mul(h, kk))),
                           (-1, g, (h, kk)), (-1, None, (gh, inv(h)))]))
        rhs.append(diff[(g * n + h) * n + kk])
    return np.concatenate(rows) % mod, np.concatenate(rhs) % mod


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    sigma: Optional[Cochain]

    def __bool__(self) -> bool:
        return self.isomorphic


def are_isomorphic(G: FiniteGroup, A: GModule, alpha: Cochain, beta: Cochain,
                   allow_large: bool = False) -> IsomorphismResult:
    """Decide whether T(G,A,alpha) and T(G,A,beta) are isomorphic through a
    carrier map of the form (a, (g,h)) -> (a + sigma(...), (g,h)).

    Two procedures are run and must agree: (a) beta - alpha = d(phi) for a
    symmetric 2-cochain phi; (b) a direct solve of (e1) + (e2) for sigma.
    """
    for name, c in (("alpha", alpha), ("beta", beta)):
        if not (is_cocycle(c) and check_d1(c)):
            raise DeltaGroupError(f"{name} does not define a Delta-group")
    via_class = coboundary_witness(beta - alpha, restrict_symmetric=True,
                                   allow_large=allow_large) is not None
    M, rhs = _morphism_system(alpha, beta)
    x = linalg.solve(M, rhs, A.modulus)
    sigma = None if x is None else cochain_from_flat(A, 2, x)
    if sigma is not None and not is_delta_morphism(sigma, alpha, beta):
        raise InternalConsistencyError("solver returned a sigma that is not a morphism")
    if via_class != (sigma is not None):
        raise InternalConsistencyError(
            f"symmetric-class test says {via_class}, direct solve says {sigma is not None}")
    return IsomorphismResult(via_class, sigma)


# --------------------------------------------------------------------------
# strong 3-algebra


def delta_to_strong(T: DeltaGroup) -> StrongThreeAlgebra:
    """Linearise: basis = all carrier elements, m and P extended linearly,
    u(1) = sum_{g,h} (1/#T(g,h)) sum_{x in T(g,h)} x (x) Q(x)."""
    for key, ids in T.carriers.items():
        if not ids:
            raise DeltaGroupError(f"empty carrier T{key}")
    elems = T.elements
    index = {x: i for i, x in enumerate(elems)}
    m_entries = [(index[a], index[b], index[c], index[T.m(a, b, c)], 1)
                 for a, b, c in T.typed_triples()]
    P_entries = [(index[x], index[T.P(x)], 1) for x in elems]
    u_entries = []
    for ids in T.carriers.values():
        w = Fraction(1, len(ids))
        u_entries += [(index[x], index[T.Q(x)], w) for x in ids]
    return StrongThreeAlgebra.from_entries(len(elems), m_entries, P_entries, u_entries,
                                           [T.name(x) for x in elems])


# --------------------------------------------------------------------------
# classification of T(G, A, alpha) up to isomorphism


def d1_matrix(A: GModule) -> np.ndarray:
    """The three linear equations of d1 stacked, as a matrix on C^3."""
    from .cochain import _rank, _tuples
    from .cohomology import _block_operator
    G = A.group
    n = G.order
    mul = np.asarray(G.table, dtype=np.int64)
    inv = np.asarray(G.inverse, dtype=np.int64)
    t = _tuples(G, 3)
    x, y, z = t[:, 0], t[:, 1], t[:, 2]
    xy, yz = mul[x, y], mul[y, z]
    ident = np.arange(n ** 3)
    rank = lambda *cols: _rank(G, np.stack(cols, axis=1))
    first = rank(inv[y], yz, inv[mul[xy, z]])
    second = rank(x, yz, inv[z])
    third = rank(xy, inv[y], yz)
    N = n ** 3
    blocks = [
        _block_operator(A, N, N, [(1, ident, None), (-1, first, xy)]),
        _block_operator(A, N, N, [(1, ident, None), (1, second, None)]),
        _block_operator(A, N, N, [(1, ident, None), (1, third, None)]),
    ]
    return np.concatenate(blocks) % A.modulus


def _contains_all(M: np.ndarray, N: np.ndarray, m: int) -> bool:
    if not N.shape[1]:
        return True
    if not M.shape[1]:
        return not np.any(N % m)
    return all(linalg.solve(M, N[:, j], m) is not None for j in range(N.shape[1]))


@dataclass
class ClassificationReport:
    valid_count: int
    class_count: int
    hs3: "linalg.FiniteAbelianGroup"
    d1_equals_symmetric_cocycles: bool
    representatives: list[Cochain]

    def to_json(self) -> dict:
        return {"valid_alpha": self.valid_count, "classes": self.class_count,
                "HS3": list(self.hs3.invariant_factors), "HS3_order": self.hs3.order,
                "d1_cocycles_equal_ZS3": self.d1_equals_symmetric_cocycles,
                "classes_match_HS3": self.class_count == self.hs3.order}


def valid_alpha_subgroup(A: GModule, allow_large: bool = False):
    """{alpha in Z^3 : d1(alpha)} as a SubspaceBasis."""
    from .cohomology import _span, differential_matrix, _check_cap
    _check_cap(A, 3, allow_large)
    M = np.concatenate([differential_matrix(A, 3), d1_matrix(A)]) % A.modulus
    return _span(A, 3, linalg.kernel(M, A.modulus))


def classify(G: FiniteGroup, A: GModule, max_elements: int = 4096,
             allow_large: bool = False) -> ClassificationReport:
    """Enumerate every alpha with T(G,A,alpha) a Delta-group (cocycle + d1)
    and sort them into isomorphism classes with :func:`are_isomorphic`."""
    from .cohomology import symmetric_cocycles, symmetric_cohomology_group
    V = valid_alpha_subgroup(A, allow_large)
    if V.order > max_elements:
        raise DeltaGroupError(f"{V.order} valid cocycles exceed max_elements={max_elements}")
    ZS = symmetric_cocycles(A, 3, allow_large)
    m = A.modulus
    same = _contains_all(V.matrix, ZS.matrix, m) and _contains_all(ZS.matrix, V.matrix, m)
    valid = sorted(V.elements(), key=lambda c: c.flat().tolist())
    reps: list[Cochain] = []
    for a in valid:
        if not any(are_isomorphic(G, A, r, a, allow_large) for r in reps):
            reps.append(a)
    hs3 = symmetric_cohomology_group(A, 3, allow_large)
    return ClassificationReport(len(valid), len(reps), hs3, same, reps)
