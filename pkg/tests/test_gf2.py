import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import independent, naive_gl_count
from smallcover.errors import InvalidArgumentError
from smallcover.gf2 import Gf2Vector, basis, gl_order, is_independent, rank

e1, e2, e3 = basis(1), basis(2), basis(3)


def test_examples():
    assert is_independent([e1, e2, e3], 3)
    assert not is_independent([e1, e2, e1 + e2], 3)
    assert is_independent([e1, e3, e2 + e3], 3)


def test_ints_are_bitmasks():
    assert is_independent([1, 2, 4])
    assert not is_independent([3, 5, 6])
    assert str(Gf2Vector(7)) == "e1+e2+e3"


def test_dimension_mismatch():
    with pytest.raises(InvalidArgumentError):
        is_independent([Gf2Vector(1, 3), Gf2Vector(1, 4)], 3)
    with pytest.raises(InvalidArgumentError):
        is_independent([8], 3)


def test_longer_than_dimension_is_dependent():
    assert not is_independent([1, 2, 4, 7], 3)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 6), (3, 168), (4, 20160)])
def test_gl_order(n, expected):
    assert gl_order(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gl_order_matches_matrix_count(n):
    assert gl_order(n) == naive_gl_count(n)


def test_all_triples_against_oracle():
    for trip in itertools.product(range(8), repeat=3):
        assert is_independent(trip) == independent(trip)


vecs = st.lists(st.integers(0, 15), max_size=6)


@given(vecs, st.randoms())
def test_permutation_invariant(vs, rnd):
    shuffled = list(vs)
    rnd.shuffle(shuffled)
    assert is_independent(vs, 4) == is_independent(shuffled, 4)
    assert rank(vs, 4) == rank(shuffled, 4)


@given(vecs)
def test_zero_vector_makes_dependent(vs):
    assert not is_independent(vs + [0], 4)


@given(vecs)
def test_matches_subset_sum_oracle(vs):
    assert is_independent(vs, 4) == independent(vs)
