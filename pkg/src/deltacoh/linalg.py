"""Exact linear algebra over Z/m: Smith normal form, kernels, images,
quotients, intersections and linear solves.

A subgroup of (Z/m)^N presented by an integer matrix together with the rows
m*e_i has the same Smith invariants as the matrix itself taken over the ring
Z/m, so the work is done directly mod m.  Z/m splits by CRT into local rings
Z/p^e, where elimination is easy: any entry of minimal p-valuation divides
every other entry of the remaining block.  Results are recombined by CRT.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np


def factor(m: int) -> list[tuple[int, int]]:
    """Prime factorisation as [(p, e), ...], p increasing."""
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z/d_1 x ... x Z/d_r with d_1 | d_2 | ... | d_r and every d_i >= 2."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        f = self.invariant_factors
        if any(d < 2 for d in f):
            raise ValueError(f"invariant factors must be >= 2: {f}")
        if any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            raise ValueError(f"not a divisibility chain: {f}")

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int]) -> "FiniteAbelianGroup":
        """Normalise an arbitrary direct sum of cyclic groups."""
        by_prime: dict[int, list[int]] = {}
        for d in orders:
            for p, e in factor(int(d)):
                by_prime.setdefault(p, []).append(p ** e)
        if not by_prime:
            return cls(())
        for v in by_prime.values():
            v.sort(reverse=True)
        length = max(len(v) for v in by_prime.values())
        factors = []
        for i in range(length):
            d = 1
            for v in by_prime.values():
                if i < len(v):
                    d *= v[i]
            factors.append(d)
        return cls(tuple(sorted(factors)))

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


# --------------------------------------------------------------------------
# local rings Z/p^e


def _valuation_pivot(sub: np.ndarray, p: int, e: int) -> Optional[tuple[int, int, int]]:
    nz = sub != 0
    if not nz.any():
        return None
    pv = 1
    for v in range(e):
        mask = nz & (sub % (pv * p) != 0)
        if mask.any():
            flat = int(np.argmax(mask))
            i, j = divmod(flat, sub.shape[1])
            return i, j, v
        pv *= p
    raise AssertionError("nonzero entry with valuation >= e")


@dataclass
class LocalSNF:
    """U @ M @ V == diag(p**v_1, ..., p**v_r, 0, ...) over Z/p^e.

    ``U`` and ``V`` are only populated when requested.
    """

    p: int
    e: int
    valuations: list[int]
    U: Optional[np.ndarray]
    V: Optional[np.ndarray]

    @property
    def q(self) -> int:
        return self.p ** self.e


def snf_local(M: np.ndarray, p: int, e: int, want_U: bool = False,
              want_V: bool = False) -> LocalSNF:
    q = p ** e
    W = np.array(M, dtype=np.int64) % q
    a, b = W.shape
    U = np.eye(a, dtype=np.int64) if want_U else None
    V = np.eye(b, dtype=np.int64) if want_V else None
    vals: list[int] = []
    t = 0
    while t < min(a, b):
        piv = _valuation_pivot(W[t:, t:], p, e)
        if piv is None:
            break
        i, j, v = piv
        i += t
        j += t
        if i != t:
            W[[t, i]] = W[[i, t]]
            if U is not None:
                U[[t, i]] = U[[i, t]]
        if j != t:
            W[:, [t, j]] = W[:, [j, t]]
            if V is not None:
                V[:, [t, j]] = V[:, [j, t]]
        pv = p ** v
        unit = int(W[t, t]) // pv
        uinv = pow(unit, -1, q)
        W[t] = W[t] * uinv % q
        if U is not None:
            U[t] = U[t] * uinv % q
        col = W[t + 1:, t] // pv
        rows = np.nonzero(col)[0]
        if rows.size:
            r = rows + t + 1
            W[r] = (W[r] - col[rows, None] * W[t]) % q
            if U is not None:
                U[r] = (U[r] - col[rows, None] * U[t]) % q
        rowf = W[t, t + 1:] // pv
        if V is not None and rowf.any():
            V[:, t + 1:] = (V[:, t + 1:] - V[:, t:t + 1] * rowf[None, :]) % q
        W[t, t + 1:] = 0
        vals.append(v)
        t += 1
    return LocalSNF(p, e, vals, U, V)


def _dedupe_rows(M: np.ndarray) -> np.ndarray:
    # row space (hence kernel) is unchanged by dropping zero and repeated rows
    if M.shape[0] == 0:
        return M
    M = M[np.any(M != 0, axis=1)]
    if M.shape[0] > 1:
        M = np.unique(M, axis=0)
    return M


def kernel_local(M: np.ndarray, p: int, e: int) -> np.ndarray:
    """Columns generating {x : M x = 0} in (Z/p^e)^b."""
    q = p ** e
    b = M.shape[1]
    R = _dedupe_rows(np.asarray(M, dtype=np.int64) % q)
    if R.shape[0] == 0:
        return np.eye(b, dtype=np.int64)
    snf = snf_local(R, p, e, want_V=True)
    gens = []
    for i, v in enumerate(snf.valuations):
        if v > 0:
            gens.append(snf.V[:, i] * p ** (e - v) % q)
    for i in range(len(snf.valuations), b):
        gens.append(snf.V[:, i])
    if not gens:
        return np.zeros((b, 0), dtype=np.int64)
    return np.stack(gens, axis=1) % q


def subgroup_cyclic_orders_local(Z: np.ndarray, p: int, e: int) -> list[int]:
    """Orders of the cyclic summands of the column span of Z."""
    if Z.shape[1] == 0:
        return []
    snf = snf_local(Z, p, e)
    return [p ** (e - v) for v in snf.valuations if v < e]


def quotient_local(Z: np.ndarray, B: np.ndarray, p: int, e: int) -> list[int]:
    """Cyclic orders of span(Z) / span(B); span(B) must lie inside span(Z).

    Coordinates on span(Z) come from the Smith form U Z V = S: for x in the
    span, (U x)_i is divisible by s_i, and x <-> ((U x)_i / s_i mod q/s_i).
    """
    q = p ** e
    N = Z.shape[0]
    if Z.shape[1] == 0:
        return []
    snf = snf_local(Z, p, e, want_U=True)
    pairs = [(i, v) for i, v in enumerate(snf.valuations) if v < e]
    if not pairs:
        return []
    orders = [p ** (e - v) for _, v in pairs]
    rows = [i for i, _ in pairs]
    rel_cols = [np.diag(orders).astype(np.int64)]
    if B.shape[1]:
        y = snf.U @ (np.asarray(B, dtype=np.int64) % q) % q
        for i, v in pairs:
            if np.any(y[i] % p ** v):
                raise ValueError("second subgroup is not contained in the first")
        coords = np.stack([y[i] // p ** v for i, v in pairs], axis=0)
        rel_cols.append(coords % q)
        # everything outside the span must vanish
        rest = [i for i in range(N) if i not in rows]
        if rest and np.any(y[rest] % q):
            raise ValueError("second subgroup is not contained in the first")
    R = np.concatenate(rel_cols, axis=1) % q
    snf2 = snf_local(R, p, e)
    out = [p ** v for v in snf2.valuations if v > 0]
    out += [q] * (len(rows) - len(snf2.valuations))
    return out


def intersect_local(K1: np.ndarray, K2: np.ndarray, p: int, e: int) -> np.ndarray:
    q = p ** e
    if K1.shape[1] == 0 or K2.shape[1] == 0:
        return np.zeros((K1.shape[0], 0), dtype=np.int64)
    stacked = np.concatenate([K1, -K2], axis=1) % q
    Z = kernel_local(stacked, p, e)
    return K1 @ Z[:K1.shape[1]] % q


def solve_local(M: np.ndarray, rhs: np.ndarray, p: int, e: int) -> Optional[np.ndarray]:
    """Some x with M x = rhs over Z/p^e, or None."""
    q = p ** e
    a, b = M.shape
    snf = snf_local(np.asarray(M, dtype=np.int64) % q, p, e, want_U=True, want_V=True)
    y = snf.U @ (np.asarray(rhs, dtype=np.int64) % q) % q
    z = np.zeros(b, dtype=np.int64)
    r = len(snf.valuations)
    for i, v in enumerate(snf.valuations):
        pv = p ** v
        if y[i] % pv:
            return None
        z[i] = y[i] // pv
    if np.any(y[r:] % q):
        return None
    return snf.V @ z % q


# --------------------------------------------------------------------------
# Z/m via CRT


def _crt_idempotent(q: int, m: int) -> int:
    c = m // q
    return c * pow(c % q, -1, q) % m if q != m else 1


def _lift(x: np.ndarray, q: int, m: int) -> np.ndarray:
    return (np.asarray(x, dtype=np.int64) % q) * _crt_idempotent(q, m) % m


def kernel(M: np.ndarray, m: int) -> np.ndarray:
    """Columns generating the kernel of M over Z/m."""
    parts = [_lift(kernel_local(M, p, e), p ** e, m) for p, e in factor(m)]
    return np.concatenate(parts, axis=1) if parts else np.zeros((M.shape[1], 0), dtype=np.int64)


def intersect(K1: np.ndarray, K2: np.ndarray, m: int) -> np.ndarray:
    parts = [_lift(intersect_local(K1 % p ** e, K2 % p ** e, p, e), p ** e, m)
             for p, e in factor(m)]
    return np.concatenate(parts, axis=1)


def subgroup(Z: np.ndarray, m: int) -> FiniteAbelianGroup:
    orders = []
    for p, e in factor(m):
        orders += subgroup_cyclic_orders_local(np.asarray(Z) % p ** e, p, e)
    return FiniteAbelianGroup.from_cyclic_orders(orders)


def quotient(Z: np.ndarray, B: np.ndarray, m: int) -> FiniteAbelianGroup:
    """span(Z) / span(B) as an abstract group."""
    orders = []
    for p, e in factor(m):
        q = p ** e
        orders += quotient_local(np.asarray(Z) % q, np.asarray(B) % q, p, e)
    return FiniteAbelianGroup.from_cyclic_orders(orders)


def solve(M: np.ndarray, rhs: np.ndarray, m: int) -> Optional[np.ndarray]:
    x = np.zeros(M.shape[1], dtype=np.int64)
    for p, e in factor(m):
        q = p ** e
        xq = solve_local(M, rhs, p, e)
        if xq is None:
            return None
        x = (x + _lift(xq, q, m)) % m
    return x


def rank_over_field(M: np.ndarray, p: int) -> int:
    return len(snf_local(np.asarray(M) % p, p, 1).valuations)
