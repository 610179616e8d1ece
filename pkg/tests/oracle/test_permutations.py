from itertools import permutations
from math import comb, factorial

import pytest

from qpower.algebra.scalars import qfact
from qpower.algebra.xpoly import XPoly
from qpower.oracle.permutations import (
    Weight,
    all_words,
    basic_decomposition,
    basic_poly,
    gamma_poly,
    inv,
    is_basic,
    noninv,
    subset_enumerator,
    verify_gessel_formula,
    verify_star_formula,
    verify_subset_lemma,
)


def test_inversion_counts():
    assert inv((1, 2, 3, 4)) == 0
    assert inv((4, 3, 2, 1)) == 6
    assert noninv((4, 3, 2, 1)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_inversions_and_noninversions_are_complementary(n):
    for word in all_words(n):
        assert inv(word) + noninv(word) == comb(n, 2)


def test_basic_decomposition():
    assert basic_decomposition((3, 1, 2)) == [(3, 1, 2)]
    assert basic_decomposition((1, 2, 3)) == [(1,), (2,), (3,)]
    assert basic_decomposition((2, 1, 4, 3)) == [(2, 1), (4, 3)]
    for word in permutations(range(1, 5)):
        blocks = basic_decomposition(word)
        assert all(is_basic(b) for b in blocks)
        assert tuple(a for b in blocks for a in b) == word


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_unit_weight_gives_q_factorial(n):
    assert gamma_poly(n) == XPoly.constant(qfact(n))
    assert gamma_poly(n, noninversions=True) == XPoly.constant(qfact(n))


def test_marker_weight_counts_blocks():
    # S_3 at q = 1: one permutation with 3 blocks, three with 2, two with 1
    x = XPoly.variable("x")
    assert gamma_poly(3, Weight.marker).eval_q(1) == x**3 + x * x * 3 + x * 2
    assert basic_poly(3, Weight.marker).eval_q(1) == x * factorial(2)


@pytest.mark.parametrize("weight", [Weight.unit, Weight.marker])
def test_exponential_formulas_by_enumeration(weight):
    assert verify_gessel_formula(5, weight)
    assert verify_star_formula(5, weight)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_subset_lemma(n):
    assert verify_subset_lemma(n)
    assert subset_enumerator(n, 0).is_one
