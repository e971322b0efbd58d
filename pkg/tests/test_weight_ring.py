from itertools import product as iproduct
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from z2schur.errors import InvalidWeight, ScaleExceeded
from z2schur.weight_ring import (
    class_members,
    class_members_recursive,
    class_product,
    class_product_oracle,
    class_size,
    even_odd_unions,
    is_sgroup,
    product_multiplicity_table,
    structure_constant_closed,
    structure_constant_oracle,
    verify_ring,
)


def test_class_size_is_binomial():
    for n in range(1, 10):
        for k in range(n + 1):
            assert class_size(n, k) == comb(n, k)
    assert class_size(3, -1) == 0


def test_class_members_sorted_and_complete():
    for n in range(1, 9):
        for k in range(n + 1):
            members = list(class_members(n, k))
            assert len(members) == comb(n, k)
            assert all(str(x).count("+") == k for x in members)
            assert members == sorted(members)


def test_recursive_decomposition_reproduces_members():
    for n in range(1, 10):
        for k in range(n + 1):
            assert set(class_members(n, k)) == set(class_members_recursive(n, k))
    assert set(class_members(12, 5)) == set(class_members_recursive(12, 5))


def test_structure_constant_fixed_values():
    assert structure_constant_closed(4, 1, 1, 2) == 2
    assert structure_constant_closed(4, 1, 1, 0) == 4
    assert structure_constant_closed(4, 1, 1, 1) == 0
    assert structure_constant_closed(4, 1, 1, 4) == 0


def test_structure_constant_parity_vanishing():
    for n in range(1, 8):
        for i, j, k in iproduct(range(n + 1), repeat=3):
            if (i + j - k) % 2:
                assert structure_constant_closed(n, i, j, k) == 0


def test_structure_constants_match_oracle_exhaustively():
    for n in range(1, 9):
        for i, j, k in iproduct(range(n + 1), repeat=3):
            assert structure_constant_closed(n, i, j, k) == \
                structure_constant_oracle(n, i, j, k)


@given(st.integers(1, 10), st.data())
def test_multiplicity_table_mass(n, data):
    a = data.draw(st.integers(0, n))
    b = data.draw(st.integers(0, n))
    table = product_multiplicity_table(n, a, b)
    assert table.mass == class_size(n, a) * class_size(n, b)


@given(st.integers(1, 10), st.data())
def test_multiplicity_table_support_is_class_product(n, data):
    a = data.draw(st.integers(0, n))
    b = data.draw(st.integers(0, n))
    assert product_multiplicity_table(n, a, b).support() == class_product(n, a, b)


def test_class_product_fixed_values():
    assert class_product(4, 4, 4) == {4}
    assert class_product(5, 1, 5) == {1}
    assert class_product(4, 1, 1) == {2, 4}
    assert class_product(6, 2, 3) == {1, 3, 5}
    assert class_product(5, 0, 3) == {2}
    assert class_product(6, 3, 3) == {0, 2, 4, 6}


def test_identity_class_is_full_weight():
    for n in range(1, 8):
        for b in range(n + 1):
            assert class_product(n, n, b) == {b}


def test_class_product_matches_oracle_exhaustively():
    for n in range(1, 10):
        for a in range(n + 1):
            for b in range(n + 1):
                assert class_product(n, a, b) == class_product_oracle(n, a, b)


@given(st.integers(1, 12), st.data())
def test_class_product_commutes(n, data):
    a = data.draw(st.integers(0, n))
    b = data.draw(st.integers(0, n))
    assert class_product(n, a, b) == class_product(n, b, a)


@given(st.integers(1, 12), st.data())
def test_class_product_complement_symmetry(n, data):
    a = data.draw(st.integers(0, n))
    b = data.draw(st.integers(0, n))
    assert class_product(n, a, b) == class_product(n, n - a, n - b)


def test_weight_class_set_equality_semantics():
    s = class_product(4, 1, 1)
    assert s == {2, 4}
    assert s == [2, 4]
    assert s == frozenset({4, 2})
    assert not s == {0, 1}
    assert s != 7


def test_even_odd_unions_and_sgroups():
    evens, odds = even_odd_unions(6)
    assert evens == {0, 2, 4, 6}
    assert odds == {1, 3, 5}
    assert is_sgroup(6, evens)
    assert not is_sgroup(6, odds)
    assert is_sgroup(5, {1, 3, 5})
    assert not is_sgroup(5, {1})
    assert is_sgroup(3, {0, 1, 2, 3})


def test_verify_ring_small_lengths():
    for n in (1, 2, 3, 6):
        rep = verify_ring(n)
        assert rep["product_ok"] and rep["lambda_ok"]
        assert rep["counterexamples"] == []


def test_scale_and_weight_guards():
    with pytest.raises(InvalidWeight):
        class_product(4, 5, 1)
    with pytest.raises(InvalidWeight):
        class_size(3, -2)
    with pytest.raises(ScaleExceeded):
        product_multiplicity_table(15, 2, 2)
