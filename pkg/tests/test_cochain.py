import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle
from deltacoh.cochain import (CochainError, adjacent_decomposition, all_cochains,
                              cochain_from_function, compose_perms, differential, face_map,
                              indicator, is_cocycle, is_symmetric, permutation_action,
                              random_cochain, transposition_action, zero_cochain)
from deltacoh.group_core import (cyclic_group, make_gmodule, sign_module, symmetric_group,
                                 trivial_module)

Z2 = cyclic_group(2)
A22 = trivial_module(Z2, 2)


def _modules():
    S3 = symmetric_group(3)
    return [trivial_module(Z2, 2), make_gmodule(Z2, 3, 1, [[[1]], [[2]]]),
            trivial_module(cyclic_group(3), 3), sign_module(S3, 3),
            make_gmodule(Z2, 4, 2, [np.eye(2), [[0, 1], [1, 0]]])]


MODULES = _modules()
module_st = st.sampled_from(MODULES)
seed_st = st.integers(0, 2 ** 32 - 1)


def test_degree_zero_differential_vanishes_for_trivial_action():
    s = cochain_from_function(A22, 0, lambda: 1)
    assert differential(s).is_zero()


def test_homomorphism_is_cocycle():
    phi = indicator(A22, (1,))
    assert differential(phi).is_zero()
    assert is_cocycle(phi)


def test_indicator_11_is_cocycle():
    assert is_cocycle(indicator(A22, (1, 1)))


def test_last_face_drops_argument():
    rng = np.random.default_rng(0)
    s = random_cochain(A22, 2, rng)
    d = face_map(3, s)
    for g in itertools.product(range(2), repeat=3):
        assert d(*g) == s(*g[:2])


def test_middle_face_multiplies():
    rng = np.random.default_rng(1)
    phi = random_cochain(A22, 1, rng)
    d = face_map(1, phi)
    for x, y in itertools.product(range(2), repeat=2):
        assert d(x, y) == phi((x + y) % 2)


def test_face_index_out_of_range():
    with pytest.raises(CochainError):
        face_map(4, zero_cochain(A22, 2))


def test_degree_one_transposition_is_identity_mod_2():
    for phi in all_cochains(A22, 1):
        assert transposition_action(1, phi) == phi


def test_indicator_under_23():
    s = indicator(A22, (1, 1))
    assert transposition_action(2, s) == indicator(A22, (0, 1))


def test_transposition_out_of_range():
    with pytest.raises(CochainError):
        transposition_action(3, zero_cochain(A22, 2))


def test_symmetry_examples():
    assert is_symmetric(zero_cochain(A22, 2))
    assert is_symmetric(cochain_from_function(A22, 2, lambda x, y: 1))
    assert not is_symmetric(indicator(A22, (1, 1)))


@given(module_st, st.integers(0, 3), seed_st)
def test_differential_squares_to_zero(A, n, seed):
    s = random_cochain(A, n, np.random.default_rng(seed))
    assert differential(differential(s)).is_zero()


@given(module_st, st.integers(0, 3), seed_st)
def test_differential_is_alternating_sum_of_faces(A, n, seed):
    s = random_cochain(A, n, np.random.default_rng(seed))
    total = zero_cochain(A, n + 1)
    for j in range(n + 2):
        f = face_map(j, s)
        total = total + f if j % 2 == 0 else total - f
    assert total == differential(s)


@given(module_st, st.integers(0, 3), seed_st)
def test_differential_matches_pointwise_oracle(A, n, seed):
    s = random_cochain(A, n, np.random.default_rng(seed))
    P = oracle.PointModule(A)
    assert oracle.differential(P, oracle.as_dict(s), n) == oracle.as_dict(differential(s))


@given(module_st, st.integers(1, 4), st.data())
def test_transposition_matches_case_formulas(A, n, data):
    if A.group.order ** n > 300:
        n = 3
    i = data.draw(st.integers(1, n))
    s = random_cochain(A, n, np.random.default_rng(data.draw(seed_st)))
    P = oracle.PointModule(A)
    assert oracle.transposition(P, oracle.as_dict(s), n, i) == \
        oracle.as_dict(transposition_action(i, s))


@given(module_st, st.integers(1, 3), st.data())
def test_coxeter_relations(A, n, data):
    s = random_cochain(A, n, np.random.default_rng(data.draw(seed_st)))
    T = transposition_action
    for i in range(1, n + 1):
        assert T(i, T(i, s)) == s
    for i in range(1, n):
        assert T(i, T(i + 1, T(i, s))) == T(i + 1, T(i, T(i + 1, s)))
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            assert T(i, T(j, s)) == T(j, T(i, s))


@given(module_st, st.integers(1, 3), seed_st)
def test_mixed_face_relations(A, n, seed):
    # on C^n, with (i,i+1) acting on C^{n+1}
    s = random_cochain(A, n, np.random.default_rng(seed))
    T = transposition_action
    for i in range(1, n + 2):
        for j in range(n + 2):
            lhs = T(i, face_map(j, s))
            if j == i - 1:
                assert lhs == -face_map(i, s)
            elif j == i:
                assert lhs == -face_map(i - 1, s)
            elif j > i:
                assert lhs == face_map(j, T(i, s))
            else:
                assert lhs == face_map(j, T(i - 1, s))


@given(module_st, st.integers(0, 2))
def test_symmetric_cochains_have_symmetric_differentials(A, n):
    from deltacoh.cohomology import symmetric_subspace
    for s in symmetric_subspace(A, n).generators:
        assert is_symmetric(s)
        assert is_symmetric(differential(s))


def test_degree_three_formulas_agree():
    A = sign_module(symmetric_group(3), 3)
    G = A.group
    s = random_cochain(A, 3, np.random.default_rng(5))
    t12, t23, t34 = (transposition_action(i, s) for i in (1, 2, 3))
    for x, y, z in itertools.product(range(G.order), repeat=3):
        xy, yz = G.mul(x, y), G.mul(y, z)
        assert t12(x, y, z) == A.neg(A.act(x, s(G.inv(x), xy, z)))
        assert t23(x, y, z) == A.neg(s(xy, G.inv(y), yz))
        assert t34(x, y, z) == A.neg(s(x, yz, G.inv(z)))


def test_permutation_identity_and_three_cycle():
    s = random_cochain(MODULES[3], 2, np.random.default_rng(2))
    assert permutation_action((1, 2, 3), s) == s
    c = (2, 3, 1)
    assert permutation_action(c, permutation_action(c, permutation_action(c, s))) == s


@given(st.permutations([1, 2, 3, 4]), st.permutations([1, 2, 3, 4]), seed_st)
def test_permutation_action_is_an_action(p, q, seed):
    A = MODULES[1]
    s = random_cochain(A, 3, np.random.default_rng(seed))
    lhs = permutation_action(compose_perms(p, q), s)
    assert lhs == permutation_action(p, permutation_action(q, s))


@given(st.permutations([1, 2, 3, 4, 5]))
def test_adjacent_decomposition_reconstructs(p):
    word = adjacent_decomposition(p)
    perm = (1, 2, 3, 4, 5)
    for i in word:
        t = list(range(1, 6))
        t[i - 1], t[i] = t[i], t[i - 1]
        perm = compose_perms(perm, t)
    assert perm == tuple(p)


def test_zero_based_permutations_accepted():
    assert adjacent_decomposition([1, 0, 2]) == adjacent_decomposition([2, 1, 3])
