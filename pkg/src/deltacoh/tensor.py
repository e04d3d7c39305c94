"""Sparse tensors over Q and composable pipelines of multilinear maps.

A tensor in A^{(x)r} is a dict from r-tuples of basis indices to nonzero
Fractions.  A pipeline is a list of stages applied left to right (so a
composite written ``f g h`` in operator notation is the list ``[h, g, f]``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

Tensor = dict[tuple[int, ...], Fraction]
SparseMap = Mapping[tuple[int, ...], Mapping[tuple[int, ...], Fraction]]


def add_into(acc: Tensor, key: tuple[int, ...], c: Fraction) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def clean(t: Mapping[tuple[int, ...], Fraction]) -> Tensor:
    return {k: Fraction(v) for k, v in t.items() if v}


@dataclass(frozen=True)
class Factor:
    """A linear map A^{(x)arity_in} -> A^{(x)arity_out} given sparsely.

    ``table`` maps an input tuple to its image; missing keys map to zero.
    ``table=None`` is the identity on one slot.
    """

    arity_in: int
    arity_out: int
    table: SparseMap | None = None
    name: str = "1"

    def image(self, key: tuple[int, ...]):
        if self.table is None:
            return ((key, 1),)
        img = self.table.get(key)
        return img.items() if img else ()


IDENTITY = Factor(1, 1, None, "1")


@dataclass(frozen=True)
class Tensorial:
    """f_1 (x) f_2 (x) ... applied to consecutive slots."""

    factors: tuple[Factor, ...]

    @property
    def arity_in(self) -> int:
        return sum(f.arity_in for f in self.factors)

    def __str__(self) -> str:
        return "(" + " x ".join(f.name for f in self.factors) + ")"


@dataclass(frozen=True)
class Permute:
    """Reorder slots: output slot i takes input slot ``order[i]`` (0-based)."""

    order: tuple[int, ...]
    name: str = "perm"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Insert:
    """Tensor in a fixed element (e.g. u(1)) at slot ``position``."""

    position: int
    element: Mapping[tuple[int, ...], Fraction]
    name: str = "u"

    def __str__(self) -> str:
        return f"insert {self.name}@{self.position}"


Stage = Union[Tensorial, Permute, Insert]


def tau(i: int, j: int, arity: int) -> Permute:
    """The transposition of slots i and j (1-based) on an arity-fold tensor."""
    order = list(range(arity))
    order[i - 1], order[j - 1] = order[j - 1], order[i - 1]
    return Permute(tuple(order), f"tau{i}{j}")


def tensorial(*factors: Factor) -> Tensorial:
    return Tensorial(tuple(factors))


def apply_stage(t: Mapping[tuple[int, ...], Fraction], stage: Stage) -> Tensor:
    out: Tensor = {}
    if isinstance(stage, Permute):
        order = stage.order
        for key, c in t.items():
            add_into(out, tuple(key[i] for i in order), c)
        return out
    if isinstance(stage, Insert):
        p = stage.position
        for key, c in t.items():
            for ek, ec in stage.element.items():
                add_into(out, key[:p] + ek + key[p:], c * ec)
        return out
    factors = stage.factors
    for key, c in t.items():
        if len(key) != stage.arity_in:
            raise ValueError(f"stage {stage} expects arity {stage.arity_in}, got {len(key)}")
        partial = [((), c)]
        pos = 0
        for f in factors:
            chunk = key[pos:pos + f.arity_in]
            pos += f.arity_in
            img = f.image(chunk)
            if not img:
                partial = []
                break
            partial = [(pk + ok, pc * oc) for pk, pc in partial for ok, oc in img]
        for k, v in partial:
            add_into(out, k, v)
    return out


def run(t: Mapping[tuple[int, ...], Fraction], stages: Sequence[Stage]) -> Tensor:
    for s in stages:
        t = apply_stage(t, s)
        if not t:
            return {}
    return dict(t)


def basis_tensor(key: tuple[int, ...]) -> Tensor:
    return {key: Fraction(1)}


def map_from_function(keys: Iterable[tuple[int, ...]],
                      fn: Callable[[tuple[int, ...]], Mapping[tuple[int, ...], Fraction]]
                      ) -> dict[tuple[int, ...], Tensor]:
    out = {}
    for k in keys:
        img = clean(fn(k))
        if img:
            out[k] = img
    return out


def format_tensor(t: Mapping[tuple[int, ...], Fraction], limit: int = 6) -> str:
    items = sorted(t.items())
    s = ", ".join(f"{c}*{k}" for k, c in items[:limit])
    if len(items) > limit:
        s += f", ... ({len(items)} terms)"
    return "{" + s + "}"
