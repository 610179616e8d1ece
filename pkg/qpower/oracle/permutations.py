"""
Permutation statistics by brute force: inversions, non-inversions, the
factorization into basic blocks, and the enumerators that the two
q-exponential formulas predict.
"""
import logging
from enum import Enum
from itertools import combinations, permutations
from math import comb, factorial
from typing import List, Sequence, Tuple

from ..algebra.scalars import QScalar, qbinom
from ..algebra.series import Series
from ..algebra.xpoly import XPoly, XPolyRing
from ..qcalculus.exponentials import gessel_exp, star_exp
from ..qcalculus.powers import ordinary_coefficients

Word = Tuple[int, ...]

MARKER_RING = XPolyRing("x")


class Weight(str, Enum):
    unit = "unit"
    marker = "marker"


def inv(word: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(word)), 2) if word[i] > word[j])


def noninv(word: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(word)), 2) if word[i] < word[j])


def is_basic(word: Sequence[int]) -> bool:
    return bool(word) and word[0] == max(word)


def basic_decomposition(word: Sequence[int]) -> List[Word]:
    """Blocks start at each left-to-right maximum, so every block is basic."""
    blocks: List[List[int]] = []
    top = 0
    for a in word:
        if a > top:
            blocks.append([a])
            top = a
        else:
            blocks[-1].append(a)
    return [tuple(b) for b in blocks]


def weight_of(word: Sequence[int], weight: Weight) -> XPoly:
    """Multiplicative weight: 1 per block for unit, x per block for the marker."""
    if weight == Weight.unit:
        return MARKER_RING.one
    return XPoly.variable("x") ** len(basic_decomposition(word))


def _statistic(noninversions: bool):
    return noninv if noninversions else inv


def _accumulate(words, weight: Weight, noninversions: bool) -> XPoly:
    stat = _statistic(noninversions)
    acc = MARKER_RING.zero
    for word in words:
        acc = acc + weight_of(word, weight) * QScalar.q_power(stat(word))
    return acc


def all_words(n: int) -> List[Word]:
    words = list(permutations(range(1, n + 1)))
    assert len(words) == factorial(n)
    return words


def basic_words(n: int) -> List[Word]:
    """B_n: permutations of 1..n starting with n."""
    words = [(n,) + rest for rest in permutations(range(1, n))]
    assert len(words) == factorial(n - 1)
    return words


def gamma_poly(n: int, weight: Weight = Weight.unit, noninversions: bool = False) -> XPoly:
    """sum over S_n of ω(π) q^{I(π)} (or q^{Ī(π)})."""
    return _accumulate(all_words(n), weight, noninversions)


def basic_poly(n: int, weight: Weight = Weight.unit, noninversions: bool = False) -> XPoly:
    """sum over B_n of ω(β) q^{I(β)} (or q^{Ī(β)})."""
    return _accumulate(basic_words(n), weight, noninversions)


def formula_sides(n_max: int, weight: Weight, noninversions: bool) -> Tuple[Series, Series]:
    """
    (enumerated sum γ_n t^n/[n]!, exponential of sum f_n t^n/[n]!): e_q[.] for
    inversions, E_q[.]* for non-inversions.
    """
    gammas = [MARKER_RING.one] + [gamma_poly(n, weight, noninversions) for n in range(1, n_max + 1)]
    fs = [MARKER_RING.zero] + [basic_poly(n, weight, noninversions) for n in range(1, n_max + 1)]
    enumerated = Series(MARKER_RING, ordinary_coefficients(gammas))
    F = Series(MARKER_RING, ordinary_coefficients(fs))
    predicted = star_exp(F) if noninversions else gessel_exp(F)
    logging.debug(f"permutation oracle to n={n_max}, weight={weight.value}, noninversions={noninversions}")
    return enumerated, predicted


def verify_gessel_formula(n_max: int, weight: Weight = Weight.unit) -> bool:
    enumerated, predicted = formula_sides(n_max, weight, noninversions=False)
    return enumerated == predicted


def verify_star_formula(n_max: int, weight: Weight = Weight.unit) -> bool:
    enumerated, predicted = formula_sides(n_max, weight, noninversions=True)
    return enumerated == predicted


def subset_noninversions(n: int, subset: Sequence[int]) -> int:
    """Ī_n(V) = #{(v, w): v in V, w not in V, v < w}."""
    chosen = set(subset)
    return sum(1 for v in chosen for w in range(v + 1, n + 1) if w not in chosen)


def subset_enumerator(n: int, k: int) -> QScalar:
    """sum over k-subsets V of {1..n} of q^{Ī_n(V)}; equals [n k]."""
    acc = QScalar.zero()
    count = 0
    for subset in combinations(range(1, n + 1), k):
        acc = acc + QScalar.q_power(subset_noninversions(n, subset))
        count += 1
    assert count == comb(n, k)
    return acc


def verify_subset_lemma(n: int) -> bool:
    return all(subset_enumerator(n, k) == qbinom(n, k) for k in range(n + 1))
