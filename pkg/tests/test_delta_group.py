import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from deltacoh.cochain import (all_cochains, cochain_from_flat, differential, indicator,
                              is_cocycle, random_cochain, zero_cochain)
from deltacoh.cohomology import symmetric_cocycles, symmetric_subspace
from deltacoh.delta_group import (DeltaGroupError, are_isomorphic, build_T_G_0,
                                  build_T_G_A_alpha, build_trivial_base, carrier_map, check_d1,
                                  classify, d1_matches_symmetry, d1_witness, delta_to_strong,
                                  is_delta_morphism, is_morphism, morphism_formula_witness,
                                  prop41_crosscheck, valid_alpha_subgroup, verify_delta_axioms)
from deltacoh.group_core import (cyclic_group, klein_four_group, sign_module, symmetric_group,
                                 trivial_module)
from deltacoh.io.formats import delta_from_json, delta_to_json
from deltacoh.three_algebra import check_identity, strong_identities, verify_strong

Z1, Z2, Z3 = cyclic_group(1), cyclic_group(2), cyclic_group(3)
A22 = trivial_module(Z2, 2)
I111 = indicator(A22, (1, 1, 1))


def test_t_s3_0_is_delta_group():
    assert verify_delta_axioms(build_T_G_0(symmetric_group(3))).ok


@pytest.mark.parametrize("m", [2, 3, 4])
def test_trivial_base_is_delta_group(m):
    assert verify_delta_axioms(build_trivial_base(trivial_module(Z1, m))).ok


def test_trivial_base_tables():
    T2 = build_trivial_base(trivial_module(Z1, 2))
    assert T2.m(1, 1, 1) == 1
    T4 = build_trivial_base(trivial_module(Z1, 4))
    assert T4.Q(1) == 3
    T3 = build_trivial_base(trivial_module(Z1, 3))
    assert all(T3.P(x) == x for x in T3.elements)


def test_trivial_base_rejects_nontrivial_group():
    with pytest.raises(DeltaGroupError):
        build_trivial_base(A22)


def test_t_g_0_tables():
    T = build_T_G_0(Z2)
    # id of (g, h, (hg)^-1) is g |G| + h
    assert T.P(1 * 2 + 1) == 1 * 2 + 0
    T3 = build_T_G_0(Z3)
    assert T3.Q(1 * 3 + 1) == 2 * 3 + 2
    for a, b, c in T3.typed_triples():
        g, _ = T3.carrier_of(a)
        _, kinv = T3.carrier_of(b)
        assert T3.m(a, b, c) == g * 3 + kinv


def test_t_g_a_zero_product():
    T = build_T_G_A_alpha(Z2, A22)
    for g, h, k in itertools.product(range(2), repeat=3):
        a = (g * 2 + h) * 2 + 1
        b = (h * 2 + k) * 2 + 0
        c = (((g + h) % 2) * 2 + (k + h) % 2) * 2 + 1
        assert T.m(a, b, c) == (g * 2 + k) * 2 + 0


def test_p_cubed_is_identity_for_zero_alpha():
    G = symmetric_group(3)
    T = build_T_G_A_alpha(G, sign_module(G, 3))
    assert all(T.P(T.P(T.P(x))) == x for x in T.elements)
    assert verify_delta_axioms(T).ok


def test_indicator_fails_8_or_9_and_d1():
    rep = verify_delta_axioms(build_T_G_A_alpha(Z2, A22, I111))
    assert rep.typing_ok and not rep.ok
    failed = rep.failed()
    assert "(8) Pm" in failed or "(9) Qm" in failed
    bad = next(c for c in rep.checks if not c.passed)
    assert bad.witness is not None
    assert not check_d1(I111)
    assert d1_witness(I111) is not None


def test_symmetric_cocycles_give_delta_groups():
    for alpha in symmetric_cocycles(A22, 3).elements():
        assert verify_delta_axioms(build_T_G_A_alpha(Z2, A22, alpha)).ok


def test_check_d1_zero_and_derived_identity():
    assert check_d1(zero_cochain(A22, 3))
    for alpha in all_cochains(A22, 3):
        if check_d1(alpha):
            for x, y, z in itertools.product(range(2), repeat=3):
                assert alpha(x, y, z) == alpha((x + y) % 2, z, (y + z) % 2)


def test_delta_verdict_exhaustive_z2():
    for alpha in all_cochains(A22, 3):
        assert prop41_crosscheck(Z2, A22, alpha)
        assert d1_matches_symmetry(alpha)


def test_delta_verdict_non_cocycle():
    rng = np.random.default_rng(0)
    A = sign_module(symmetric_group(3), 3)
    while True:
        alpha = random_cochain(A, 3, rng)
        if not is_cocycle(alpha):
            break
    assert prop41_crosscheck(A.group, A, alpha)


def test_broken_table_reports_typing_failure():
    T = build_T_G_0(Z2)
    bad_p = dict(T.p_table)
    bad_p[0] = 1
    from deltacoh.delta_group import DeltaGroup
    B = DeltaGroup(T.base, T.carriers, T.m_table, bad_p, T.q_table)
    rep = verify_delta_axioms(B)
    assert not rep.typing_ok
    assert rep.checks[0].kind == "typing"


def test_identity_morphism():
    s0 = zero_cochain(A22, 2)
    assert is_delta_morphism(s0, I111, I111)


@settings(max_examples=20)
@given(st.integers(0, 2 ** 32 - 1))
def test_symmetric_sigma_gives_morphism(seed):
    A = sign_module(symmetric_group(3), 3)
    rng = np.random.default_rng(seed)
    S = symmetric_subspace(A, 2).matrix
    sigma = cochain_from_flat(A, 2, S @ rng.integers(0, 3, S.shape[1]) % 3)
    alpha = zero_cochain(A, 3)
    beta = alpha - differential(sigma)
    assert morphism_formula_witness(sigma, alpha, beta) is None
    assert is_delta_morphism(sigma, alpha, beta)


def test_non_symmetric_sigma_fails_e1():
    sigma = indicator(A22, (1, 0))
    alpha = zero_cochain(A22, 3)
    w = morphism_formula_witness(sigma, alpha, alpha - differential(sigma))
    assert w is not None and w[0] == "e1"
    assert not is_delta_morphism(sigma, alpha, alpha - differential(sigma))


def test_carrier_map_of_zero_is_identity():
    f = carrier_map(zero_cochain(A22, 2), Z2, A22)
    T = build_T_G_A_alpha(Z2, A22)
    assert all(f[x] == x for x in T.elements)
    assert is_morphism(f, T, T) is None


def test_are_isomorphic_trivial_cases():
    alpha = zero_cochain(A22, 3)
    r = are_isomorphic(Z2, A22, alpha, alpha)
    assert r and r.sigma is not None
    A = sign_module(symmetric_group(3), 3)
    S = symmetric_subspace(A, 2)
    sigma0 = S.generators[0]
    a = zero_cochain(A, 3)
    assert are_isomorphic(A.group, A, a, a + differential(sigma0))


def test_are_isomorphic_rejects_invalid_alpha():
    with pytest.raises(DeltaGroupError):
        are_isomorphic(Z2, A22, I111, I111)


def test_isomorphism_is_equivalence_relation():
    A = trivial_module(cyclic_group(4), 4)
    valid = list(valid_alpha_subgroup(A).elements())
    iso = {(i, j): bool(are_isomorphic(A.group, A, a, b))
           for (i, a), (j, b) in itertools.product(enumerate(valid), repeat=2)}
    n = len(valid)
    for i in range(n):
        assert iso[(i, i)]
        for j in range(n):
            assert iso[(i, j)] == iso[(j, i)]
            for k in range(n):
                if iso[(i, j)] and iso[(j, k)]:
                    assert iso[(i, k)]


@pytest.mark.parametrize("G,A,valid,classes", [
    (Z2, A22, 2, 1),
    (cyclic_group(4), trivial_module(cyclic_group(4), 4), 16, 2),
    (klein_four_group(), trivial_module(klein_four_group(), 2), 16, 2),
])
def test_classification(G, A, valid, classes):
    rep = classify(G, A)
    assert rep.valid_count == valid and rep.class_count == classes
    assert rep.d1_equals_symmetric_cocycles
    assert rep.class_count == rep.hs3.order


def test_exact_sequence_structure():
    # forgetting the A-label is a morphism onto T(G,0); the fibre over the
    # unit carrier is a copy of T(1,A)
    G = symmetric_group(3)
    A = sign_module(G, 3)
    T = build_T_G_A_alpha(G, A)
    T0 = build_T_G_0(G)
    s, n = A.size, G.order
    proj = lambda x: x // s
    for x in T.elements:
        assert len(T.carriers[T.carrier_of(x)]) == s
        assert proj(T.P(x)) == T0.P(proj(x)) and proj(T.Q(x)) == T0.Q(proj(x))
    for a, b, c in T.typed_triples():
        assert proj(T.m(a, b, c)) == T0.m(proj(a), proj(b), proj(c))
    T1 = build_trivial_base(trivial_module(cyclic_group(1), 3))
    unit = T.carriers[(G.identity, G.identity)]
    for a, b, c in itertools.product(range(s), repeat=3):
        assert T.m(unit[a], unit[b], unit[c]) - unit[0] == T1.m(a, b, c)


def test_delta_to_strong_examples():
    S = delta_to_strong(build_trivial_base(trivial_module(Z1, 2)))
    assert S.dim == 2
    assert S.u == {(0, 0): Fraction(1, 2), (1, 1): Fraction(1, 2)}
    assert verify_strong(S).ok
    S = delta_to_strong(build_T_G_0(Z2))
    assert S.dim == 4 and len(S.u) == 4 and set(S.u.values()) == {1}
    assert verify_strong(S).ok


def test_delta_to_strong_u_symmetry():
    for T in (build_T_G_0(Z3), build_trivial_base(trivial_module(Z1, 4)),
              build_T_G_A_alpha(Z2, A22)):
        S = delta_to_strong(T)
        assert check_identity(strong_identities(S)[0], S.dim).passed


def test_json_roundtrip():
    T = build_T_G_A_alpha(Z2, A22, I111)
    back = delta_from_json(delta_to_json(T))
    assert dict(back.m_table) == dict(T.m_table)
    assert verify_delta_axioms(back).to_json() == verify_delta_axioms(T).to_json()
