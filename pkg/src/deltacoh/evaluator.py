"""Labeled triangulations of a triangle and their evaluation by m / mbar moves.

Conventions
-----------
A cell is a counterclockwise vertex triple ``(v0, v1, v2)`` whose first entry
is the marked corner; its sides 1, 2, 3 are v0->v1, v1->v2, v2->v0.  Moving the
mark one corner forward, (v0,v1,v2) -> (v1,v2,v0), applies P to the label.

The ambient triangle has corners 0, 1, 2 (counterclockwise); every other
vertex is interior.  Cells are kept sorted by vertex set, so a term of an
:class:`EvaluationState` is just a tuple of labels in that order.

m-move at an interior vertex V with link A -> B -> C: in standard position
the cells are (A,B,V) marked A, (V,B,C) marked V and (A,V,C) marked A, with
labels l1, l2, l3; they are replaced by (A,B,C) marked A with label
m(l1, l2, l3).

Flip of an interior edge Q1 Q3 inside the quadrilateral Q0 Q1 Q2 Q3: in
standard position the cells are (Q0,Q1,Q3) marked Q0 and (Q3,Q1,Q2) marked Q3,
with labels l1, l2; they are replaced by (Q0,Q1,Q2) marked Q0 and (Q3,Q0,Q2)
marked Q3, carrying mbar(l1 (x) l2).

Cells are first brought into standard position by rotating marks (powers of
P); among the admissible choices of A (resp. of the edge direction) the one
needing the fewest rotations wins, ties going to the smallest vertex id.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .tensor import Tensor, add_into
from .three_algebra import SparseTable, SparseTrilinearSystem, _compose_P

Cell = tuple[int, int, int]
CORNERS: Cell = (0, 1, 2)
MAX_STEPS = 10_000


class TriangulationError(ValueError):
    pass


class MoveError(ValueError):
    pass


class EvaluationError(RuntimeError):
    pass


def _key(cell: Cell) -> tuple[int, ...]:
    return tuple(sorted(cell))


def _rotate(cell: Cell, k: int) -> Cell:
    k %= 3
    return cell[k:] + cell[:k]


def _mark_at(cell: Cell, v: int) -> int:
    """Forward steps needed to move the mark of ``cell`` to vertex ``v``."""
    return cell.index(v)


def _edges(cells: Sequence[Cell]) -> dict[frozenset, list[int]]:
    out: dict[frozenset, list[int]] = {}
    for i, c in enumerate(cells):
        for s in range(3):
            out.setdefault(frozenset((c[s], c[(s + 1) % 3])), []).append(i)
    return out


@dataclass(frozen=True)
class Complex:
    """A disc triangulation of the triangle with corners 0, 1, 2.

    ``cells`` is kept in canonical order (sorted by vertex set).
    """

    cells: tuple[Cell, ...]

    def __post_init__(self):
        validate_cells(self.cells)

    @property
    def vertices(self) -> list[int]:
        return sorted({v for c in self.cells for v in c})

    @property
    def interior_vertices(self) -> list[int]:
        return [v for v in self.vertices if v not in CORNERS]

    def gluing(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Pairs of (cell index, side 1..3) glued along an interior edge."""
        sides: dict[frozenset, list[tuple[int, int]]] = {}
        for i, c in enumerate(self.cells):
            for s in range(3):
                sides.setdefault(frozenset((c[s], c[(s + 1) % 3])), []).append((i, s + 1))
        return sorted(tuple(v) for v in sides.values() if len(v) == 2)

    def boundary(self) -> list[tuple[int, int]]:
        """(cell index, side) of the three boundary sides, in order 01, 12, 20."""
        out = []
        for u, v in ((0, 1), (1, 2), (2, 0)):
            for i, c in enumerate(self.cells):
                for s in range(3):
                    if (c[s], c[(s + 1) % 3]) == (u, v):
                        out.append((i, s + 1))
        return out

    def star(self, v: int) -> list[int]:
        return [i for i, c in enumerate(self.cells) if v in c]


def validate_cells(cells: Sequence[Cell]) -> None:
    """Raise TriangulationError unless ``cells`` is a simplicial disc
    triangulation with boundary 0 -> 1 -> 2 -> 0."""
    if not cells:
        raise TriangulationError("no cells")
    seen = set()
    for c in cells:
        if len(c) != 3 or len(set(c)) != 3:
            raise TriangulationError(f"degenerate cell {c}")
        if _key(c) in seen:
            raise TriangulationError(f"repeated cell {c}")
        seen.add(_key(c))
    directed: set[tuple[int, int]] = set()
    for c in cells:
        for s in range(3):
            e = (c[s], c[(s + 1) % 3])
            if e in directed:
                raise TriangulationError(f"orientation clash on edge {e}")
            directed.add(e)
    boundary = {e for e in directed if (e[1], e[0]) not in directed}
    if boundary != {(0, 1), (1, 2), (2, 0)}:
        raise TriangulationError(f"boundary is {sorted(boundary)}, expected 0->1->2->0")
    V = len({v for c in cells for v in c})
    E = len({frozenset(e) for e in directed})
    if V - E + len(cells) != 1:
        raise TriangulationError("Euler characteristic is not 1")
    # each interior vertex must have a single cycle as its link
    for v in {x for c in cells for x in c} - set(CORNERS):
        succ = {}
        for c in cells:
            if v in c:
                r = _rotate(c, c.index(v))
                succ[r[1]] = r[2]
        start = next(iter(succ))
        x, n = start, 0
        while True:
            x = succ.get(x)
            n += 1
            if x is None or n > len(succ):
                raise TriangulationError(f"link of {v} is not a cycle")
            if x == start:
                break
        if n != len(succ):
            raise TriangulationError(f"link of {v} is not a single cycle")


def _canonical(cells: Sequence[Cell]) -> tuple[tuple[Cell, ...], list[int]]:
    order = sorted(range(len(cells)), key=lambda i: _key(cells[i]))
    return tuple(cells[i] for i in order), order


@dataclass
class EvaluationState:
    """A formal sum of labelings of one cell complex."""

    complex: Complex
    terms: dict[tuple[int, ...], Fraction] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.terms

    def canonical_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.complex.cells],
                "terms": [[list(k), str(c)] for k, c in self.canonical_terms()]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, EvaluationState):
            return NotImplemented
        return self.complex.cells == other.complex.cells and self.terms == other.terms


@dataclass(frozen=True)
class LabeledTriangulation:
    """A single labeling: ``labels[i]`` is the basis index on ``cells[i]``."""

    complex: Complex
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.complex.cells):
            raise TriangulationError("one label per cell required")

    @classmethod
    def build(cls, cells: Sequence[Cell], labels: Sequence[int]) -> "LabeledTriangulation":
        cells = [tuple(int(v) for v in c) for c in cells]
        canon, order = _canonical(cells)
        return cls(Complex(canon), tuple(int(labels[i]) for i in order))

    @classmethod
    def trivial(cls, label: int) -> "LabeledTriangulation":
        return cls(Complex((CORNERS,)), (label,))

    @property
    def cells(self) -> tuple[Cell, ...]:
        return self.complex.cells

    def state(self) -> EvaluationState:
        return EvaluationState(self.complex, {self.labels: Fraction(1)})

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.cells], "labels": list(self.labels),
                "gluing": [[list(a), list(b)] for a, b in self.complex.gluing()],
                "boundary": [list(x) for x in self.complex.boundary()]}

    @classmethod
    def from_json(cls, doc: dict) -> "LabeledTriangulation":
        try:
            T = cls.build([tuple(c) for c in doc["cells"]], doc["labels"])
        except (KeyError, TypeError) as exc:
            raise TriangulationError(f"malformed triangulation: {exc}") from exc
        if "gluing" in doc:
            given = sorted(tuple(tuple(s) for s in p) for p in doc["gluing"])
            # indices in the document refer to its own cell order
            raw = [tuple(c) for c in doc["cells"]]
            raw_sides = {}
            for i, c in enumerate(raw):
                for s in range(3):
                    raw_sides.setdefault(frozenset((c[s], c[(s + 1) % 3])), []).append((i, s + 1))
            expected = sorted(tuple(v) for v in raw_sides.values() if len(v) == 2)
            if given != expected:
                raise TriangulationError("gluing does not match the cells")
        return T


def subdivide(T: LabeledTriangulation, cell: int, new_labels: Sequence[int],
              vertex: Optional[int] = None) -> LabeledTriangulation:
    """Replace cell (a,b,c) (marked a) by (a,b,V), (V,b,c), (a,V,c) marked at
    a, V, a, labeled by ``new_labels`` in that order: the standard position of
    the m-move at the new vertex V."""
    if not 0 <= cell < len(T.cells):
        raise TriangulationError(f"no cell {cell}")
    if len(new_labels) != 3:
        raise TriangulationError("three labels required")
    a, b, c = T.cells[cell]
    V = max(T.complex.vertices) + 1 if vertex is None else vertex
    if V in T.complex.vertices:
        raise TriangulationError(f"vertex {V} already present")
    cells = [x for i, x in enumerate(T.cells) if i != cell] + [(a, b, V), (V, b, c), (a, V, c)]
    labels = [x for i, x in enumerate(T.labels) if i != cell] + list(new_labels)
    return LabeledTriangulation.build(cells, labels)


# --------------------------------------------------------------------------
# moves


class _Ops:
    """Sparse tables of the working algebra, with P^0, P^1, P^2 precomputed."""

    def __init__(self, A: SparseTrilinearSystem):
        self.A = A
        self.Ppow: list[SparseTable] = [
            {(i,): {(i,): Fraction(1)} for i in range(A.dim)},
            A.P, _compose_P(A.P, 2, A.dim)]


def _transform(state: EvaluationState, consumed: Sequence[int], rotations: Sequence[int],
               table: SparseTable, new_cells: Sequence[Cell], ops: _Ops) -> EvaluationState:
    """Rotate the consumed cells' labels, apply ``table`` to them (in the
    given order) and put the outputs on ``new_cells``."""
    cells = state.complex.cells
    keep = [i for i in range(len(cells)) if i not in consumed]
    all_cells = [cells[i] for i in keep] + list(new_cells)
    canon, order = _canonical(all_cells)
    out: Tensor = {}
    for labels, coeff in state.terms.items():
        # rotate inputs
        partial = [((), coeff)]
        for slot, k in zip(consumed, rotations):
            img = ops.Ppow[k].get((labels[slot],))
            if not img:
                partial = []
                break
            partial = [(p + o, c * oc) for p, c in partial for o, oc in img.items()]
        base = tuple(labels[i] for i in keep)
        for inp, c in partial:
            for o, oc in table.get(inp, {}).items():
                full = base + o
                add_into(out, tuple(full[i] for i in order), c * oc)
    return EvaluationState(Complex(canon), out)


def m_move_candidates(C: Complex) -> list[int]:
    out = []
    for v in C.interior_vertices:
        if len(C.star(v)) == 3:
            out.append(v)
    return out


def _link(C: Complex, v: int) -> dict[int, tuple[int, int]]:
    """For each link vertex x: (cell index, successor of x around v)."""
    out = {}
    for i in C.star(v):
        r = _rotate(C.cells[i], C.cells[i].index(v))
        out[r[1]] = (i, r[2])
    return out


def apply_m_move(state: EvaluationState, vertex: int, A: SparseTrilinearSystem,
                 ops: Optional[_Ops] = None) -> EvaluationState:
    C = state.complex
    if vertex in CORNERS or vertex not in C.vertices or len(C.star(vertex)) != 3:
        raise MoveError(f"vertex {vertex} is not a trivalent interior vertex")
    ops = ops or _Ops(A)
    link = _link(C, vertex)
    best = None
    for a in sorted(link):
        b = link[a][1]
        c = link[b][1]
        i1, i2, i3 = link[a][0], link[b][0], link[c][0]
        # i1 = (V,a,b) -> (a,b,V) marked a; i2 = (V,b,c) marked V; i3 = (V,c,a) -> (a,V,c) marked a
        rots = (_mark_at(C.cells[i1], a), _mark_at(C.cells[i2], vertex), _mark_at(C.cells[i3], a))
        cost = sum(rots)
        if best is None or cost < best[0]:
            best = (cost, (a, b, c), (i1, i2, i3), rots)
    _, (a, b, c), idx, rots = best
    if any(_key((a, b, c)) == _key(x) for x in C.cells):
        raise MoveError("collapsing would duplicate an existing cell")
    return _transform(state, idx, rots, A.m, [(a, b, c)], ops)


def _flip_data(C: Complex, edge: frozenset) -> list[tuple]:
    """Both orientations of a flip of ``edge`` as (Q0,Q1,Q2,Q3,i1,i2)."""
    owners = _edges(C.cells).get(edge, [])
    if len(owners) != 2:
        return []
    out = []
    for i1, i2 in (owners, owners[::-1]):
        c1, c2 = C.cells[i1], C.cells[i2]
        # c1 must contain Q1 -> Q3, c2 must contain Q3 -> Q1
        for s in range(3):
            q1, q3 = c1[s], c1[(s + 1) % 3]
            if frozenset((q1, q3)) == edge:
                q0 = c1[(s + 2) % 3]
                break
        q2 = next(x for x in c2 if x not in (q1, q3))
        out.append((q0, q1, q2, q3, i1, i2))
    return out


def flip_candidates(C: Complex) -> list[frozenset]:
    edges = _edges(C.cells)
    out = []
    for e, owners in edges.items():
        if len(owners) != 2:
            continue
        q0, q1, q2, q3, _, _ = _flip_data(C, e)[0]
        if q0 == q2 or frozenset((q0, q2)) in edges:
            continue
        out.append(e)
    return sorted(out, key=lambda e: tuple(sorted(e)))


def apply_mbar_move(state: EvaluationState, edge: Sequence[int], A: SparseTrilinearSystem,
                    ops: Optional[_Ops] = None) -> EvaluationState:
    C = state.complex
    e = frozenset(edge)
    if e not in flip_candidates(C):
        raise MoveError(f"edge {sorted(e)} cannot be flipped")
    ops = ops or _Ops(A)
    best = None
    for q0, q1, q2, q3, i1, i2 in _flip_data(C, e):
        rots = (_mark_at(C.cells[i1], q0), _mark_at(C.cells[i2], q3))
        key = (sum(rots), q0)
        if best is None or key < best[0]:
            best = (key, (q0, q1, q2, q3), (i1, i2), rots)
    _, (q0, q1, q2, q3), idx, rots = best
    return _transform(state, idx, rots, A.mbar, [(q0, q1, q2), (q3, q0, q2)], ops)


def _finish(state: EvaluationState, ops: _Ops) -> EvaluationState:
    (cell,) = state.complex.cells
    k = _mark_at(cell, 0)
    if k == 0:
        return state
    return _transform(state, [0], [k], ops.Ppow[0], [CORNERS], ops)


# --------------------------------------------------------------------------
# evaluation


@dataclass(frozen=True)
class StrategyConfig:
    flip_rate: float = 0.3
    max_steps: int = MAX_STEPS


def evaluate(T: LabeledTriangulation | EvaluationState, A: SparseTrilinearSystem,
             seed: int = 0, config: StrategyConfig = StrategyConfig()) -> EvaluationState:
    """Reduce to the single cell (0,1,2) marked at 0 by a seeded random
    sequence of moves.  Meaningful (seed-independent) when A is an
    orthogonal 3-algebra."""
    state = T.state() if isinstance(T, LabeledTriangulation) else T
    ops = _Ops(A)
    rng = random.Random(seed)
    for _ in range(config.max_steps):
        if len(state.complex.cells) == 1:
            return _finish(state, ops)
        ms = m_move_candidates(state.complex)
        if ms and rng.random() >= config.flip_rate:
            state = apply_m_move(state, rng.choice(ms), A, ops)
            continue
        flips = flip_candidates(state.complex)
        if not flips:
            if not ms:
                raise EvaluationError("no applicable move")
            state = apply_m_move(state, rng.choice(ms), A, ops)
            continue
        state = apply_mbar_move(state, tuple(sorted(rng.choice(flips))), A, ops)
    raise EvaluationError(f"step budget {config.max_steps} exhausted")


@dataclass
class CoherenceReport:
    passed: bool
    seeds: list[int]
    distinct_results: int
    results: list[EvaluationState]

    def to_json(self) -> dict:
        return {"passed": self.passed, "seeds": self.seeds,
                "distinct_results": self.distinct_results,
                "result": self.results[0].to_json() if self.results else None}


def _eval_job(args):
    T, A, seed, config = args
    return evaluate(T, A, seed, config)


def coherence_check(T: LabeledTriangulation, A: SparseTrilinearSystem, trials: int = 10,
                    base_seed: int = 0, jobs: int = 1,
                    config: StrategyConfig = StrategyConfig()) -> CoherenceReport:
    """Evaluate under ``trials`` seeds and compare the final sums exactly."""
    seeds = [base_seed + i for i in range(trials)]
    args = [(T, A, s, config) for s in seeds]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_eval_job, args))
    else:
        results = [_eval_job(a) for a in args]
    distinct = []
    for r in results:
        if r not in distinct:
            distinct.append(r)
    return CoherenceReport(len(distinct) <= 1, seeds, len(distinct), results)


# --------------------------------------------------------------------------
# random instances


def random_complex(n_subdivisions: int, n_flips: int, rng: random.Random) -> tuple[Cell, ...]:
    """Random disc triangulation with 2 n_subdivisions + 1 cells and random
    marked corners."""
    cells: list[Cell] = [CORNERS]
    nxt = 3
    for _ in range(n_subdivisions):
        i = rng.randrange(len(cells))
        a, b, c = cells.pop(i)
        cells += [(a, b, nxt), (nxt, b, c), (a, nxt, c)]
        nxt += 1
    for _ in range(n_flips):
        canon, _ = _canonical(cells)
        C = Complex(canon)
        flips = flip_candidates(C)
        if not flips:
            break
        e = rng.choice(flips)
        q0, q1, q2, q3, i1, i2 = _flip_data(C, e)[0]
        cells = [x for i, x in enumerate(C.cells) if i not in (i1, i2)]
        cells += [(q0, q1, q2), (q3, q0, q2)]
    cells = [_rotate(c, rng.randrange(3)) for c in cells]
    canon, _ = _canonical(cells)
    Complex(canon)
    return canon


def random_labels(cells: Sequence[Cell], dim: int, rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randrange(dim) for _ in cells)


def flat_dw_labels(cells: Sequence[Cell], G, rng: random.Random) -> tuple[int, ...]:
    """Labels for the DW basis from random vertex potentials phi: side v -> w
    carries phi(w) phi(v)^-1, so every cell label (g, h, k) has k h g = 1 and
    all gluing conditions of m hold."""
    verts = sorted({v for c in cells for v in c})
    phi = {v: rng.randrange(G.order) for v in verts}
    side = lambda v, w: G.mul(phi[w], G.inv(phi[v]))
    out = []
    for a, b, c in cells:
        g, h = side(a, b), side(b, c)
        out.append(g * G.order + h)  # dw_basis index of (g, h, (hg)^-1)
    return tuple(out)


def random_triangulation(max_cells: int, dim: int, rng: random.Random,
                         labeler=None) -> LabeledTriangulation:
    n_sub = rng.randint(0, (max_cells - 1) // 2)
    cells = random_complex(n_sub, rng.randint(0, 2 * n_sub + 2), rng)
    labels = labeler(cells, rng) if labeler else random_labels(cells, dim, rng)
    return LabeledTriangulation(Complex(cells), tuple(labels))
