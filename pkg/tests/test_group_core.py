import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from deltacoh.group_core import (GroupError, cyclic_group, direct_product, group_from_table,
                                 klein_four_group, make_gmodule, rank_one_modules, sign_module,
                                 small_groups, symmetric_group, trivial_module)


def test_cyclic_small_cases():
    assert cyclic_group(1).table == ((0,),)
    Z2 = cyclic_group(2)
    assert Z2.table == ((0, 1), (1, 0))
    assert Z2.inverse == (0, 1)
    assert cyclic_group(6).inv(2) == 4


def test_cyclic_rejects_zero():
    with pytest.raises(GroupError):
        cyclic_group(0)


def test_s3_from_permutation_table():
    S3 = symmetric_group(3)
    G = group_from_table(S3.table)
    assert G.order == 6 and not G.is_abelian()


def test_missing_inverse_is_named():
    with pytest.raises(GroupError, match="no inverse for element 1") as exc:
        group_from_table([[0, 1], [1, 1]])
    assert exc.value.witness == (1,)


def test_non_associative_table_reports_triple():
    # a Latin square with identity 0 that is not associative
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError, match="not associative") as exc:
        group_from_table(table)
    assert len(exc.value.witness) == 3


def test_klein_every_element_self_inverse():
    V = klein_four_group()
    assert all(V.inv(g) == g for g in V.elements())


def test_identity_need_not_be_zero():
    # Z/2 with the identity stored as element 1
    G = group_from_table([[1, 0], [0, 1]])
    assert G.identity == 1


@pytest.mark.parametrize("name,G", small_groups(7))
def test_group_axioms_exhaustive(name, G):
    for g, h, k in itertools.product(G.elements(), repeat=3):
        assert G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k))
    for g in G.elements():
        assert G.inv(G.inv(g)) == g
        assert G.mul(g, G.inv(g)) == G.identity


def test_direct_product_order():
    assert direct_product(cyclic_group(2), cyclic_group(3)).order == 6


def test_trivial_and_sign_modules():
    Z2 = cyclic_group(2)
    trivial_module(Z2, 2)
    A = make_gmodule(Z2, 3, 1, [[[1]], [[2]]])
    assert A.act(1, (1,)) == (2,)
    assert sign_module(symmetric_group(3), 3).act(1, (1,)) in {(1,), (2,)}


def test_non_invertible_action_rejected():
    with pytest.raises(GroupError, match="not invertible"):
        make_gmodule(cyclic_group(2), 4, 1, [[[1]], [[2]]])


def test_non_homomorphism_rejected():
    with pytest.raises(GroupError, match="homomorphism"):
        make_gmodule(cyclic_group(3), 3, 1, [[[1]], [[2]], [[2]]])


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_rank_one_modules_are_valid(m):
    G = cyclic_group(4)
    for _, A in rank_one_modules(G, m):
        for g in G.elements():
            inv = A.action[G.inv(g)]
            assert np.array_equal(inv @ A.action[g] % m, np.eye(1, dtype=np.int64))


@given(st.integers(1, 4), st.integers(2, 5), st.data())
def test_module_encode_roundtrip(k, m, data):
    A = trivial_module(cyclic_group(2), m, k)
    x = tuple(data.draw(st.lists(st.integers(0, m - 1), min_size=k, max_size=k)))
    assert A.decode(A.encode(x)) == x
