import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle
from deltacoh.cochain import (cochain_from_function, differential, indicator, is_symmetric,
                              random_cochain)
from deltacoh.cohomology import (SizeCapExceeded, coboundary_witness, cocycles,
                                 cohomology_group, differential_matrix, natural_map_kernel,
                                 report, symmetric_cohomology_group, symmetric_coboundaries,
                                 symmetric_cocycles, symmetric_subspace)
from deltacoh.group_core import (cyclic_group, make_gmodule, sign_module, symmetric_group,
                                 trivial_module)
from deltacoh.linalg import FiniteAbelianGroup

Z2 = cyclic_group(2)
A22 = trivial_module(Z2, 2)
S3 = symmetric_group(3)


def test_degree_zero_matrix_is_zero():
    M = differential_matrix(A22, 0)
    assert M.shape == (2, 1) and not M.any()


def test_degree_one_matrix_has_rank_one():
    from deltacoh.linalg import rank_over_field
    assert rank_over_field(differential_matrix(A22, 1), 2) == 1


@pytest.mark.parametrize("A", [A22, sign_module(S3, 3), trivial_module(cyclic_group(4), 4)])
def test_consecutive_matrices_compose_to_zero(A):
    for n in range(3):
        prod = differential_matrix(A, n + 1) @ differential_matrix(A, n) % A.modulus
        assert not prod.any()


def test_z2_values():
    assert cohomology_group(A22, 0).invariant_factors == (2,)
    assert cohomology_group(A22, 1).invariant_factors == (2,)
    assert cohomology_group(A22, 2).invariant_factors == (2,)
    assert symmetric_cohomology_group(A22, 1).invariant_factors == (2,)
    assert symmetric_cohomology_group(A22, 2).is_trivial()


def test_symmetric_subspace_small_cases():
    assert symmetric_subspace(A22, 0).order == 2
    assert symmetric_subspace(A22, 1).order == 4
    S = symmetric_subspace(A22, 2)
    assert S.order == 4
    members = {tuple(s.flat()) for s in S.elements()}
    for s in S.elements():
        assert s(1, 1) == s(1, 0) == s(0, 1)
    assert len(members) == 4


def test_h0_is_fixed_points():
    for A in (sign_module(S3, 3), trivial_module(S3, 2),
              make_gmodule(Z2, 4, 2, [np.eye(2), [[0, 1], [1, 0]]])):
        assert cohomology_group(A, 0).order == len(A.fixed_points())
        assert symmetric_cohomology_group(A, 0).order == len(A.fixed_points())


def test_witnesses():
    w = coboundary_witness(cochain_from_function(A22, 2, lambda x, y: 0))
    assert w is not None and differential(w).is_zero()
    gen = indicator(A22, (1, 1))
    assert coboundary_witness(gen) is None


@given(st.integers(0, 2 ** 32 - 1), st.booleans())
def test_witness_for_coboundary(seed, sym):
    A = sign_module(S3, 3)
    rng = np.random.default_rng(seed)
    if sym:
        S = symmetric_subspace(A, 1).matrix
        phi = (S @ rng.integers(0, 3, S.shape[1])) % 3
        from deltacoh.cochain import cochain_from_flat
        phi = cochain_from_flat(A, 1, phi)
    else:
        phi = random_cochain(A, 1, rng)
    s = differential(phi)
    w = coboundary_witness(s, restrict_symmetric=sym)
    assert w is not None and differential(w) == s
    if sym:
        assert is_symmetric(w)


def test_cap_is_enforced():
    with pytest.raises(SizeCapExceeded):
        cocycles(trivial_module(S3, 2), 5)


def test_subcomplex_closed_under_differential():
    A = sign_module(S3, 3)
    for n in range(3):
        nxt = symmetric_subspace(A, n + 1)
        for s in symmetric_subspace(A, n).generators:
            assert nxt.contains(differential(s))


CASES = [(A22, n) for n in range(4)] + [
    (make_gmodule(Z2, 3, 1, [[[1]], [[2]]]), n) for n in range(4)] + [
    (trivial_module(cyclic_group(3), 2), n) for n in range(3)] + [
    (trivial_module(cyclic_group(3), 3), n) for n in range(3)] + [
    (trivial_module(cyclic_group(4), 2), n) for n in range(2)] + [
    (trivial_module(S3, 2), n) for n in range(2)] + [
    (sign_module(S3, 3), 1)]


@pytest.mark.parametrize("A,n", CASES)
def test_orders_match_brute_force(A, n):
    if oracle.cochain_space_size(A, n) > 2 ** 16:
        pytest.skip("too large to enumerate")
    assert cohomology_group(A, n).order == oracle.brute_cohomology_order(A, n)
    assert symmetric_cohomology_group(A, n).order == \
        oracle.brute_cohomology_order(A, n, symmetric=True)


@pytest.mark.parametrize("A", [A22, sign_module(S3, 3), trivial_module(S3, 2)])
def test_order_identities(A):
    for n in range(3):
        Z, B = cocycles(A, n), symmetric_coboundaries(A, n)
        ZS = symmetric_cocycles(A, n)
        assert ZS.order % symmetric_cohomology_group(A, n).order == 0
        from deltacoh.cohomology import coboundaries
        assert cohomology_group(A, n).order * coboundaries(A, n).order == Z.order
        assert ZS.order % B.order == 0


@pytest.mark.parametrize("A", [A22, trivial_module(cyclic_group(3), 3), sign_module(S3, 3),
                               trivial_module(S3, 2)])
def test_low_degree_injectivity(A):
    for n in (0, 1, 2):
        assert natural_map_kernel(A, n).is_trivial()


def test_s3_degree_three_kernel_is_data():
    rep = report(trivial_module(S3, 2), 3)
    assert rep.H.invariant_factors == (2,)
    assert rep.HS.order == 4
    assert rep.kernel.order == 4


def test_report_json():
    assert report(A22, 2).to_json() == {"degree": 2, "H": [2], "HS": [], "kernel": []}


def test_descriptor_validation():
    with pytest.raises(ValueError):
        FiniteAbelianGroup((3, 2))
    with pytest.raises(ValueError):
        FiniteAbelianGroup((1,))
    assert str(FiniteAbelianGroup.from_cyclic_orders([2, 3, 4])) == "Z/2 x Z/12"
