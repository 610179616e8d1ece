"""
The verification suites behind `qpower verify`. Every @identity method yields
(params, expected, actual) cases; the runner stops an identity at its first
mismatch and reports where the two sides part.
"""
from fractions import Fraction
from typing import Dict, Iterator, List, Type

from ..algebra.ring import SCALARS
from ..algebra.scalars import QScalar, qbinom, qfact
from ..algebra.series import Series, compose_classical, exp_series, random_series
from ..algebra.xpoly import XPoly
from ..oracle.classical import classical_newton_p, classical_power_r, classical_power_sum
from ..oracle.permutations import Weight, formula_sides, gamma_poly, subset_enumerator
from ..oracle.trees import MAX_TREE_SIZE, J_poly, J_reciprocal, reciprocal
from ..qcalculus.exponentials import (
    E_q_series,
    e_q_series,
    gessel_exp,
    invert_gessel_exp,
    invert_star_exp,
    star_exp,
)
from ..qcalculus.powers import q_bracket_power, q_compose, q_star_compose, q_star_power
from ..qcalculus.products import (
    functional_equation_e,
    functional_equation_star,
    lambda_product_E,
    lambda_product_H,
    qproduct_E,
    qproduct_e,
    reciprocal_products,
)
from ..specializations import hermite, trees
from ..specializations.qbinomial import A_RING, closed_form_p, defining_series, qbinomial_routes
from ..specializations.specialization import Mode, specialize
from ..symfun.combinatorics import partitions_of, q_z, q_z_h, z_classical
from ..symfun.qpowers import (
    P_series,
    e,
    e_det_from_p,
    e_expansion,
    e_series,
    eval_finite_variables,
    girard_e_sides,
    girard_h_sides,
    h,
    h_det_from_p,
    h_expansion,
    h_series,
    lemma_sum_e,
    lemma_sum_h,
    p_det_from_h,
    q_power_det,
    q_power_r,
    q_power_r_series,
)
from .utils import Case, SuiteClass, identity

# rational points for the q = 1 evaluation checks
SAMPLE_POINTS = (Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(3))


class GirardSuite(SuiteClass):

    @property
    def name(self) -> str:
        return "girard"

    @identity("Girard-Newton e-recurrence")
    def girard_e(self) -> Iterator[Case]:
        m = self.config.base_m
        for n in range(1, self.config.max_n + 1):
            lhs, rhs = girard_e_sides(n, m, self.powers)
            yield {"n": n, "m": m}, rhs, lhs

    @identity("Girard-Newton h-recurrence")
    def girard_h(self) -> Iterator[Case]:
        m = self.config.base_m
        for n in range(1, self.config.max_n + 1):
            lhs, rhs = girard_h_sides(n, m, self.powers)
            yield {"n": n, "m": m}, rhs, lhs

    @identity("[p_n] at q = 1 is the Newton power sum")
    def classical_limit(self) -> Iterator[Case]:
        m = self.config.base_m
        for n in range(1, self.config.max_n + 1):
            yield {"n": n, "m": m}, classical_newton_p(n), self.powers(n, m).eval_q(1)

    @identity("[p_n] at q = 1 on finitely many variables", randomized=True)
    def finite_variables(self) -> Iterator[Case]:
        m = self.config.base_m
        rng = self.rng("finite_variables")
        for trial in range(self.config.random_trials):
            xs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
            for n in range(1, self.config.max_n + 1):
                actual = eval_finite_variables(self.powers(n, m).eval_q(1), xs)
                yield {"n": n, "trial": trial}, classical_power_sum(n, xs), actual


class DeterminantSuite(SuiteClass):
    """Each determinant is checked in base q^m and in base q^{-m}."""

    @property
    def name(self) -> str:
        return "determinants"

    def _bases(self) -> List[int]:
        return [self.config.base_m, -self.config.base_m]

    @identity("[p_n] by Girard-Newton solve and by determinant")
    def power_routes(self) -> Iterator[Case]:
        for m in self._bases():
            for n in range(1, self.config.max_n + 1):
                yield {"n": n, "m": m}, q_power_det(n, m), self.powers(n, m)

    @identity("e_n as a determinant in [p]")
    def e_from_p(self) -> Iterator[Case]:
        for m in self._bases():
            for n in range(1, self.config.max_n + 1):
                yield {"n": n, "m": m}, e(n), e_det_from_p(n, m, self.powers)

    @identity("h_n as a determinant in [p]")
    def h_from_p(self) -> Iterator[Case]:
        for m in self._bases():
            for n in range(1, self.config.max_n + 1):
                yield {"n": n, "m": m}, h(n), h_det_from_p(n, m, self.powers)

    @identity("[p_n] as a determinant in h")
    def p_from_h(self) -> Iterator[Case]:
        for m in self._bases():
            for n in range(1, self.config.max_n + 1):
                yield {"n": n, "m": m}, self.powers(n, m), p_det_from_h(n, m)

    @identity("[p_n^(r)] determinant against its defining series")
    def power_r_routes(self) -> Iterator[Case]:
        for m in self._bases():
            for n in range(self.config.max_n + 1):
                for r in range(n + 1):
                    yield {"n": n, "r": r, "m": m}, q_power_r(n, r, m), q_power_r_series(n, r, m)

    @identity("[p_n^(r)] at q = 1 is a sum of monomial functions")
    def power_r_classical(self) -> Iterator[Case]:
        m = self.config.base_m
        for n in range(1, self.config.max_n + 1):
            for r in range(1, n + 1):
                actual = eval_finite_variables(q_power_r(n, r, m).eval_q(1), SAMPLE_POINTS)
                yield {"n": n, "r": r}, classical_power_r(n, r, SAMPLE_POINTS), actual


class PartitionSuite(SuiteClass):

    @property
    def name(self) -> str:
        return "partition-expansions"

    @identity("e_n as a sum over partitions")
    def e_partitions(self) -> Iterator[Case]:
        m = self.config.base_m
        for n in range(1, self.config.max_n + 1):
            yield {"n": n, "m": m}, e(n), e_expansion(n, m, self.powers)

    @identity("h_n as a sum over partitions")
    def h_partitions(self) -> Iterator[Case]:
        m = self.config.base_m
        for n in range(1, self.config.max_n + 1):
            yield {"n": n, "m": m}, h(n), h_expansion(n, m, self.powers)

    @identity("chain sum equals [n]! e_n")
    def chain_e(self) -> Iterator[Case]:
        m = self.config.base_m
        for n in range(1, self.config.max_n + 1):
            yield {"n": n, "m": m}, e(n) * qfact(n, m), lemma_sum_e(n, m, self.powers)

    @identity("chain sum equals [n]! h_n")
    def chain_h(self) -> Iterator[Case]:
        m = self.config.base_m
        for n in range(1, self.config.max_n + 1):
            yield {"n": n, "m": m}, h(n) * qfact(n, m), lemma_sum_h(n, m, self.powers)

    @identity("[z_λ] and its h-form at q = 1")
    def z_classical_limit(self) -> Iterator[Case]:
        m = self.config.base_m
        for n in range(1, self.config.max_n + 1):
            for partition in partitions_of(n):
                expected = QScalar.constant(z_classical(partition))
                params = {"partition": partition.render(), "m": m}
                yield {**params, "form": "e"}, expected, q_z(partition, m).eval_q(1)
                yield {**params, "form": "h"}, expected, q_z_h(partition, m).eval_q(1)


class ExpFormulaSuite(SuiteClass):

    @property
    def name(self) -> str:
        return "exp-formulas"

    # brute-force permutation enumeration stops here
    PERMUTATION_LIMIT = 6

    def _minus_P(self) -> Series:
        """-P_q(-t)"""
        return -P_series(self.config.t_order, self.config.base_m).scale_arg(-1)

    @identity("E(t) = e_q[-P_q(-t)]")
    def e_formula(self) -> Iterator[Case]:
        N, m = self.config.t_order, self.config.base_m
        yield {"N": N, "m": m}, e_series(N), gessel_exp(self._minus_P(), m)

    @identity("H(t) = E_q[P_q(t)]*")
    def h_formula(self) -> Iterator[Case]:
        N, m = self.config.t_order, self.config.base_m
        yield {"N": N, "m": m}, h_series(N), star_exp(P_series(N, m), m)

    @identity("logarithms of E(t) and H(t)")
    def logarithms(self) -> Iterator[Case]:
        N, m = self.config.t_order, self.config.base_m
        yield {"N": N, "m": m, "side": "E"}, self._minus_P(), invert_gessel_exp(e_series(N), m)
        yield {"N": N, "m": m, "side": "H"}, P_series(N, m), invert_star_exp(h_series(N), m)

    @identity("E(t) = exp(-P(-t)) at q = 1")
    def classical_formula(self) -> Iterator[Case]:
        N = self.config.t_order
        minus_p = self._minus_P().eval_q(1)
        yield {"N": N}, e_series(N), compose_classical(exp_series(N, minus_p.ring), minus_p)

    @identity("exponential recurrences against sums of q-powers", randomized=True)
    def recurrence_routes(self) -> Iterator[Case]:
        N, m = self.config.t_order, self.config.base_m
        rng = self.rng("recurrence_routes")
        for trial in range(self.config.random_trials):
            F = random_series(rng, N)
            yield {"trial": trial, "form": "e"}, q_compose(e_q_series(N, m), F, m), gessel_exp(F, m)
            yield {"trial": trial, "form": "E*"}, q_star_compose(E_q_series(N, m), F, m), star_exp(F, m)

    @identity("exponentials invert", randomized=True)
    def round_trip(self) -> Iterator[Case]:
        N, m = self.config.t_order, self.config.base_m
        rng = self.rng("round_trip")
        for trial in range(self.config.random_trials):
            F = random_series(rng, N)
            yield {"trial": trial, "form": "e"}, F, invert_gessel_exp(gessel_exp(F, m), m)
            yield {"trial": trial, "form": "E*"}, F, invert_star_exp(star_exp(F, m), m)

    @identity("q-chain rules", randomized=True)
    def chain_rules(self) -> Iterator[Case]:
        N, m = self.config.t_order, self.config.base_m
        psi = QScalar.q_power(m)
        rng = self.rng("chain_rules")
        for trial in range(self.config.random_trials):
            G, F = random_series(rng, N), random_series(rng, N)
            DF = F.q_derive(m)
            yield (
                {"trial": trial, "form": "bracket"},
                q_compose(G.q_derive(m), F, m) * DF,
                q_compose(G, F, m).q_derive(m),
            )
            shifted = q_star_compose(G.q_derive(m), F.scalar_mul(QScalar.one() / psi), m).scale_arg(psi)
            yield {"trial": trial, "form": "star"}, shifted * DF, q_star_compose(G, F, m).q_derive(m)

    @identity("permutation enumeration of both exponential formulas")
    def permutations(self) -> Iterator[Case]:
        n_max = min(self.config.max_n, self.PERMUTATION_LIMIT)
        for weight in Weight:
            for noninversions in (False, True):
                enumerated, predicted = formula_sides(n_max, weight, noninversions)
                yield {"n_max": n_max, "weight": weight.value, "noninversions": noninversions}, enumerated, predicted

    @identity("inversions over S_n give [n]!")
    def inversion_factorial(self) -> Iterator[Case]:
        for n in range(1, min(self.config.max_n, self.PERMUTATION_LIMIT) + 1):
            yield {"n": n}, XPoly.constant(qfact(n)), gamma_poly(n)

    @identity("non-inversions over k-subsets give [n k]")
    def subset_lemma(self) -> Iterator[Case]:
        for n in range(self.config.max_n + 1):
            for k in range(n + 1):
                yield {"n": n, "k": k}, qbinom(n, k), subset_enumerator(n, k)


class LinkSuite(SuiteClass):
    """Base change ψ -> ψ^{-1} turns the star family into the bracket family."""

    @property
    def name(self) -> str:
        return "link"

    POWER_LIMIT = 6

    def _bases(self) -> List[int]:
        return [self.config.base_m, 2 * self.config.base_m]

    @identity("F^{[k]*} in base ψ is F^{[k]} in base ψ^{-1}", randomized=True)
    def powers_link(self) -> Iterator[Case]:
        N = self.config.t_order
        rng = self.rng("powers_link")
        for trial in range(self.config.random_trials):
            F = random_series(rng, N)
            for m in self._bases():
                for k in range(min(N, self.POWER_LIMIT) + 1):
                    yield {"trial": trial, "m": m, "k": k}, q_bracket_power(F, k, -m), q_star_power(F, k, m)

    @identity("E_ψ[F]*_ψ = e_{ψ^{-1}}[F]_{ψ^{-1}}", randomized=True)
    def exponential_link(self) -> Iterator[Case]:
        N = self.config.t_order
        rng = self.rng("exponential_link")
        for trial in range(self.config.random_trials):
            F = random_series(rng, N)
            for m in self._bases():
                yield {"trial": trial, "m": m}, gessel_exp(F, -m), star_exp(F, m)

    @identity("E_ψ(t) = e_{ψ^{-1}}(t)")
    def series_link(self) -> Iterator[Case]:
        N = self.config.t_order
        for m in self._bases():
            yield {"N": N, "m": m}, e_q_series(N, -m), E_q_series(N, m)

    @identity("star powers scale by θ^k", randomized=True)
    def scaling(self) -> Iterator[Case]:
        N, m = self.config.t_order, self.config.base_m
        theta = QScalar.from_coefficients([1, 2])
        rng = self.rng("scaling")
        for trial in range(self.config.random_trials):
            F = random_series(rng, N)
            for k in range(min(N, self.POWER_LIMIT) + 1):
                expected = q_star_power(F, k, m).scalar_mul(theta ** k)
                yield {"trial": trial, "k": k}, expected, q_star_power(F.scalar_mul(theta), k, m)


class ProductSuite(SuiteClass):
    """Products need ψ of positive order, so the base here is |m|."""

    @property
    def name(self) -> str:
        return "products"

    LAMBDA_T_ORDER = 6
    LAMBDA_Q_ORDER = 8

    @property
    def _m(self) -> int:
        return abs(self.config.base_m)

    @identity("e_q(t) and E_q(t) as products")
    def classical_products(self) -> Iterator[Case]:
        N, M, m = self.config.t_order, self.config.q_order, self._m
        t = Series.variable(SCALARS, N)
        params = {"N": N, "M": M, "m": m}
        yield {**params, "form": "e"}, e_q_series(N, m).reduce_mod_q(M), qproduct_e(t, m, M)
        yield {**params, "form": "E"}, E_q_series(N, m).reduce_mod_q(M), qproduct_E(t, m, M)

    @identity("products of a random F", randomized=True)
    def random_products(self) -> Iterator[Case]:
        N, M, m = self.config.t_order, self.config.q_order, self._m
        rng = self.rng("random_products")
        for trial in range(self.config.random_trials):
            F = random_series(rng, N)
            yield {"trial": trial, "form": "e"}, gessel_exp(F, m).reduce_mod_q(M), qproduct_e(F, m, M)
            yield {"trial": trial, "form": "E"}, star_exp(F, m).reduce_mod_q(M), qproduct_E(F, m, M)

    @identity("one-step functional equations", randomized=True)
    def functional_equations(self) -> Iterator[Case]:
        N, m = self.config.t_order, self._m
        rng = self.rng("functional_equations")
        for trial in range(self.config.random_trials):
            F = random_series(rng, N)
            G, rhs = functional_equation_e(F, m)
            yield {"trial": trial, "form": "e"}, G, rhs
            G, rhs = functional_equation_star(F, m)
            yield {"trial": trial, "form": "E*"}, G, rhs

    @identity("e_q[-F] and E_q[F]* are reciprocal", randomized=True)
    def reciprocity(self) -> Iterator[Case]:
        N, m = self.config.t_order, self.config.base_m
        one = Series.one(SCALARS, N)
        rng = self.rng("reciprocity")
        samples = [("t", Series.variable(SCALARS, N)), ("t^2", Series.variable(SCALARS, N) ** 2)]
        samples += [(f"trial {i}", random_series(rng, N)) for i in range(self.config.random_trials)]
        for label, F in samples:
            first, second = reciprocal_products(F, m)
            yield {"F": label, "form": "e_q[-F] E_q[F]*"}, one, first
            yield {"F": label, "form": "E_q[-F]* e_q[F]"}, one, second

    @identity("E(t) and H(t) as products over [p_n]")
    def symmetric_products(self) -> Iterator[Case]:
        N = min(self.config.t_order, self.LAMBDA_T_ORDER)
        M = min(self.config.q_order, self.LAMBDA_Q_ORDER)
        yield {"N": N, "M": M, "form": "E"}, e_series(N).reduce_mod_q(M), lambda_product_E(N, M)
        yield {"N": N, "M": M, "form": "H"}, h_series(N).reduce_mod_q(M), lambda_product_H(N, M)


class QBinomialSuite(SuiteClass):

    @property
    def name(self) -> str:
        return "qbinomial"

    @identity("three routes of the q-binomial theorem (symbolic a)")
    def routes(self) -> Iterator[Case]:
        N, M = self.config.t_order, self.config.q_order
        routes = qbinomial_routes(N, M)
        yield {"N": N, "route": "composition"}, routes["sum"], routes["composition"]
        yield {"N": N, "M": M, "route": "product"}, routes["sum"].reduce_mod_q(M), routes["product"]

    @identity("a = 0 and a = q degenerations")
    def degenerations(self) -> Iterator[Case]:
        N, M = self.config.t_order, self.config.q_order
        euler = qbinomial_routes(N, M, 0)
        yield {"a": "0", "N": N, "M": M}, euler["sum"].reduce_mod_q(M), euler["product"]
        geometric = Series(A_RING, [A_RING.one] * (N + 1))
        yield {"a": "q", "N": N}, geometric, defining_series(N, QScalar.q())

    @identity("extracted [p_n] = (-a)^{n-1}(1-a)/(1-q)")
    def closed_form(self) -> Iterator[Case]:
        n_max = self.config.max_n
        spec = specialize(Mode.E, defining_series(n_max))
        for n in range(1, n_max + 1):
            yield {"n": n}, closed_form_p(n), spec.p(n)


class TreeSuite(SuiteClass):

    @property
    def name(self) -> str:
        return "trees"

    PRODUCT_T_ORDER = 5
    PRODUCT_Q_ORDER = 8

    @property
    def _n_max(self) -> int:
        # J_{n+1} is the largest enumerator an identity at n needs
        return min(self.config.max_n, MAX_TREE_SIZE - 1)

    def _each_n(self, sides, start: int = 1) -> Iterator[Case]:
        for n in range(start, self._n_max + 1):
            lhs, rhs = sides(n)
            yield {"n": n}, rhs, lhs

    @identity("labelled trees are counted by n^{n-2}")
    def cayley(self) -> Iterator[Case]:
        for n in range(2, self._n_max + 2):
            yield {"n": n}, QScalar.constant(n ** (n - 2)), J_poly(n).eval_q(1)

    @identity("reciprocal enumerator is an involution")
    def double_reciprocal(self) -> Iterator[Case]:
        for n in range(1, self._n_max + 2):
            yield {"n": n}, J_poly(n), reciprocal(J_reciprocal(n), n)

    @identity("extracted [p_n] = (1-q)^{n-1} J_{n+1}/n!")
    def extraction(self) -> Iterator[Case]:
        for n in range(1, self._n_max + 1):
            extracted, closed = trees.extraction_sides(n)
            yield {"n": n}, closed, extracted

    @identity("[n] q^{binom(n,2)} as a tree sum")
    def shifted_binomial(self) -> Iterator[Case]:
        yield from self._each_n(trees.shifted_binomial_sides)

    @identity("tree enumerator as a determinant of the exponential")
    def determinant_from_exponential(self) -> Iterator[Case]:
        yield from self._each_n(trees.determinant_from_exponential_sides)

    @identity("[n]! q^{binom(n,2)}/n! as a determinant of tree [p]")
    def determinant_from_trees(self) -> Iterator[Case]:
        yield from self._each_n(trees.determinant_from_trees_sides)

    @identity("E_xp(t) as e_q of the tree series")
    def composition(self) -> Iterator[Case]:
        N = min(self.config.t_order, self._n_max)
        lhs, rhs = trees.composition_sides(N)
        yield {"N": N}, lhs, rhs

    @identity("E_xp(t) as a product")
    def product(self) -> Iterator[Case]:
        N = min(self.config.t_order, self.PRODUCT_T_ORDER, self._n_max)
        M = min(self.config.q_order, self.PRODUCT_Q_ORDER)
        lhs, rhs = trees.product_sides(N, M)
        yield {"N": N, "M": M}, lhs, rhs

    @identity("[n] as a reciprocal tree sum")
    def reciprocal_integer(self) -> Iterator[Case]:
        yield from self._each_n(trees.reciprocal_integer_sides)

    @identity("1 as a reciprocal tree sum")
    def reciprocal_unit(self) -> Iterator[Case]:
        yield from self._each_n(trees.reciprocal_unit_sides, start=0)

    @identity("reciprocal exponential as E_q[.]*")
    def reciprocal_exponential(self) -> Iterator[Case]:
        N = min(self.config.t_order, self._n_max)
        lhs, rhs = trees.reciprocal_exponential_sides(N)
        yield {"N": N}, lhs, rhs


class HermiteSuite(SuiteClass):

    @property
    def name(self) -> str:
        return "hermite"

    SECOND_KIND_LIMIT = 6

    @identity("first kind: all routes agree")
    def first_kind_routes(self) -> Iterator[Case]:
        for n in range(self.config.max_n + 1):
            routes = hermite.hermite_I_routes(n)
            reference = routes.pop("e-determinant")
            for name, value in routes.items():
                yield {"n": n, "route": name}, reference, value

    @identity("second kind: all routes agree")
    def second_kind_routes(self) -> Iterator[Case]:
        for n in range(min(self.config.max_n, self.SECOND_KIND_LIMIT) + 1):
            routes = hermite.hermite_II_routes(n)
            reference = routes.pop("phi-determinant")
            for name, value in routes.items():
                yield {"n": n, "route": name}, reference, value

    @identity("H_4 as a moment determinant")
    def moment_determinant(self) -> Iterator[Case]:
        H4 = hermite.hermite_I(4)
        yield {"method": "bareiss"}, H4, hermite.hermite_moment_determinant()
        yield {"method": "cofactor"}, H4, hermite.hermite_moment_cofactor()

    @identity("first kind generating function as e_q[F]")
    def first_kind_qexp(self) -> Iterator[Case]:
        N = self.config.t_order
        G, composed = hermite.hermite_I_qexp_sides(N)
        yield {"N": N, "direction": "exp"}, G, composed
        yield {"N": N, "direction": "log"}, hermite.hermite_I_exponent(N), invert_gessel_exp(G)

    @identity("extracted [p_n] and [p_n^h] of the first kind")
    def extraction(self) -> Iterator[Case]:
        N = self.config.t_order
        e_mode, closed_e, h_mode, closed_h = hermite.extraction_sides(N)
        for n in range(1, N + 1):
            yield {"n": n, "mode": "E"}, closed_e[n - 1], e_mode[n - 1]
            yield {"n": n, "mode": "H"}, closed_h[n - 1], h_mode[n - 1]

    @identity("mode E of G and mode H of 1/G(-t) agree")
    def mode_duality(self) -> Iterator[Case]:
        e_mode, h_mode = hermite.mode_duality_sides(self.config.t_order)
        for n, (a, b) in enumerate(zip(e_mode, h_mode), start=1):
            yield {"n": n}, a, b

    @identity("second kind generating function as E_q[F]*")
    def second_kind_qexp(self) -> Iterator[Case]:
        N = min(self.config.t_order, self.SECOND_KIND_LIMIT + 1)
        G, composed = hermite.hermite_II_star_sides(N)
        yield {"N": N}, G, composed

    @identity("generating functions as truncated products")
    def products(self) -> Iterator[Case]:
        N, M = self.config.t_order, self.config.q_order
        for kind, (lhs, rhs) in hermite.hermite_product_sides(N, M).items():
            yield {"N": N, "M": M, "kind": kind}, lhs, rhs

    @identity("rescaled limit at q = 1 is H_n(x)/2^n")
    def classical_limit(self) -> Iterator[Case]:
        for n in range(self.config.max_n + 1):
            ours, theirs = hermite.hermite_limit(n)
            for j, (a, b) in enumerate(zip(ours, theirs)):
                yield {"n": n, "power": n - 2 * j}, QScalar.constant(b), QScalar.constant(a)


SUITES: Dict[str, Type[SuiteClass]] = {
    "girard": GirardSuite,
    "determinants": DeterminantSuite,
    "partition-expansions": PartitionSuite,
    "exp-formulas": ExpFormulaSuite,
    "link": LinkSuite,
    "products": ProductSuite,
    "qbinomial": QBinomialSuite,
    "trees": TreeSuite,
    "hermite": HermiteSuite,
}
