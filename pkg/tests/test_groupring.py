from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from exotica.errors import RankMismatch
from exotica.groupring import (
    GroupRingElement,
    augmentation,
    coefficient_multiset,
    distinguishable,
    gr_add,
    gr_mul,
    gr_pow,
    laurent,
    laurent_array,
    minkowski_sum,
    multisets_match,
    substitute,
)

from conftest import group_ring_elements, laurent_elements

d = GroupRingElement.delta
P = laurent({1: 1, 0: -1, -1: 1})  # t - 1 + 1/t


def dense_power(coeffs, r):
    out = np.array([1], dtype=object)
    for _ in range(r):
        out = np.convolve(out, np.array(coeffs, dtype=object))
    return list(out)


def test_add_examples():
    assert gr_add(laurent({1: 1, 0: -1}), laurent({0: 1, -1: 1})) == laurent({1: 1, -1: 1})
    assert gr_add(P, GroupRingElement.zero(1)) == P
    assert d((3, -1)) + d((3, -1)) == d((3, -1), 2)


def test_mul_examples():
    assert gr_mul(P, P) == laurent({2: 1, 1: -2, 0: 3, -1: -2, -2: 1})
    assert GroupRingElement.one(1) * P == P
    assert d((1, 2)) * d((-3, 5)) == d((-2, 7))


def test_pow_examples():
    top, arr = laurent_array(gr_pow(P, 4))
    assert top == 4
    assert arr == [1, -4, 10, -16, 19, -16, 10, -4, 1]
    assert P**0 == GroupRingElement.one(1)
    assert P**1 == P


@pytest.mark.parametrize("r", range(7))
def test_pow_matches_numpy_convolution(r):
    top, arr = laurent_array(P**r)
    assert arr == dense_power([1, -1, 1], r)
    assert top == r


def test_augmentation_examples():
    for m in (1, 2, 7, 100):
        assert augmentation(laurent({1: m, 0: -(2 * m - 1), -1: m})) == 1
    assert augmentation(GroupRingElement.one(3)) == 1
    assert augmentation(GroupRingElement.zero(2)) == 0


def test_substitute_examples():
    g = (0, 2, -1)
    assert substitute(P, g) == d(g) - d((0, 0, 0)) + d((0, -2, 1))
    assert substitute(P, (0, 0)) == GroupRingElement.delta((0, 0), augmentation(P))
    assert substitute(laurent({2: 1}), (3,)) == d((6,))


def test_multiset_examples():
    assert coefficient_multiset(P**4) == Counter([1, 1, -4, -4, 10, 10, -16, -16, 19])
    assert coefficient_multiset(substitute(P, (5,))) == Counter([1, -1, 1])
    assert coefficient_multiset(GroupRingElement.zero(1)) == Counter()


def test_sign_flip_matching():
    assert multisets_match(P, -P)
    assert not distinguishable(P, -P)
    assert distinguishable(P, P * 2)


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        d((1,)) + d((1, 0))
    with pytest.raises(RankMismatch):
        d((1,)) * d((1, 0))
    with pytest.raises(RankMismatch):
        GroupRingElement(2, {(1,): 3})


def test_zero_coefficients_pruned():
    assert GroupRingElement(1, {(1,): 0, (2,): 3}).support() == {(2,)}
    assert (P - P).is_zero()


def test_str():
    assert str(P) == "t - 1 + t^-1"
    assert str(laurent({1: 3, 0: -5, -1: 3})) == "3t - 5 + 3t^-1"


@given(group_ring_elements(), group_ring_elements(), group_ring_elements())
def test_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(group_ring_elements(), group_ring_elements())
def test_support_in_minkowski_sum(a, b):
    assert (a * b).support() <= minkowski_sum(a.support(), b.support())


@given(group_ring_elements(), group_ring_elements())
def test_augmentation_is_multiplicative(a, b):
    assert augmentation(a * b) == augmentation(a) * augmentation(b)
    assert augmentation(a + b) == augmentation(a) + augmentation(b)


@given(laurent_elements(), st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_substitute_negated_is_mirror(p, g):
    neg = tuple(-x for x in g)
    assert substitute(p, neg) == substitute(p.mirror(), g)


@given(laurent_elements(max_terms=3, span=2), st.integers(0, 4), st.integers(0, 4))
def test_pow_adds_exponents(a, r1, r2):
    assert a ** (r1 + r2) == (a**r1) * (a**r2)


@given(laurent_elements(), laurent_elements(), st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_substitute_is_ring_map(p, q, g):
    assert substitute(p * q, g) == substitute(p, g) * substitute(q, g)


@given(laurent_elements())
def test_multiset_invariant_under_mirror(p):
    assert coefficient_multiset(p.mirror()) == coefficient_multiset(p)
    assert coefficient_multiset(substitute(p, (3, -2))) == coefficient_multiset(p)
