import itertools

import numpy as np
from hypothesis import given, strategies as st

from deltacoh import linalg

moduli = st.sampled_from([2, 3, 4, 6, 8, 9, 12])


def _matrix(draw, m, rows, cols):
    return np.array(draw(st.lists(st.lists(st.integers(0, m - 1), min_size=cols, max_size=cols),
                                  min_size=rows, max_size=rows)), dtype=np.int64).reshape(rows, cols)


def _span_size(M, m):
    """Brute-force size of the column span of M over Z/m."""
    seen = {tuple(np.zeros(M.shape[0], dtype=np.int64))}
    frontier = list(seen)
    cols = [M[:, j] % m for j in range(M.shape[1])]
    while frontier:
        nxt = []
        for x in frontier:
            for c in cols:
                y = tuple((np.array(x) + c) % m)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


@given(moduli, st.integers(1, 3), st.integers(1, 3), st.data())
def test_kernel_size_matches_enumeration(m, r, c, data):
    M = _matrix(data.draw, m, r, c)
    K = linalg.kernel(M, m)
    assert not np.any(M @ K % m)
    brute = sum(1 for x in itertools.product(range(m), repeat=c)
                if not np.any(M @ np.array(x) % m))
    assert linalg.subgroup(K, m).order == brute


@given(moduli, st.integers(1, 3), st.integers(1, 3), st.data())
def test_subgroup_order_matches_span(m, r, c, data):
    M = _matrix(data.draw, m, r, c)
    assert linalg.subgroup(M, m).order == _span_size(M, m)


@given(moduli, st.integers(1, 3), st.integers(1, 3), st.data())
def test_solve_is_exact(m, r, c, data):
    M = _matrix(data.draw, m, r, c)
    x0 = np.array(data.draw(st.lists(st.integers(0, m - 1), min_size=c, max_size=c)))
    b = M @ x0 % m
    x = linalg.solve(M, b, m)
    assert x is not None and np.array_equal(M @ x % m, b)


@given(moduli, st.integers(1, 3), st.data())
def test_quotient_order(m, n, data):
    Z = _matrix(data.draw, m, n, 2)
    B = Z @ _matrix(data.draw, m, 2, 2) % m
    q = linalg.quotient(Z, B, m)
    assert q.order * _span_size(B, m) == _span_size(Z, m)


@given(moduli, st.data())
def test_snf_is_diagonalisation(m, data):
    M = _matrix(data.draw, m, 3, 3)
    for p, e in linalg.factor(m):
        q = p ** e
        s = linalg.snf_local(M, p, e, want_U=True, want_V=True)
        D = s.U @ (M % q) @ s.V % q
        expected = np.zeros_like(D)
        for i, v in enumerate(s.valuations):
            expected[i, i] = p ** v % q
        assert np.array_equal(D, expected)


def test_factor():
    assert linalg.factor(360) == [(2, 3), (3, 2), (5, 1)]
