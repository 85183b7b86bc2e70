import itertools

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from formulas.linearity import is_c_linear, is_cohen_macaulay, is_support_linear, two_var_linearity
from formulas.models import BettiParams, GuvTriple, IntervalSummary, SingleCase, Witness, WitnessReason
from formulas.utils import (
    betti_params,
    betti_params_recursive,
    betti_table_formula,
    cohomology_table_formula,
    guv,
    interval_nakayama_summary,
    local_cohomology,
    multiplication_rank_formula,
    reduce_k,
    thecalc1_params,
)
from formulas.vanishing import nonvanishing_witness, two_var_report, vanishing_h0, vanishing_top
from helpers import degrees
from helpers.degrees import Box
from helpers.errors import UsageError
from helpers.linalg import GF2, QQ
from ideals.utils import all_t_determined_ideals, minimalize, zero_ideal
from modreps.models import CohomologyTable
from modreps.utils import (
    alexander_dual_module,
    betti_table,
    cohomology_table,
    concentrated,
    koszul_tensor,
    nakayama_table,
    quotient_module,
)

XY = minimalize([(1, 1)])
XYZ = minimalize([(1, 1, 1)])
SQUARES = minimalize([(2, 0), (0, 2)])


class ParameterTestCase(SimpleTestCase):

    def test_guv(self):
        self.assertEqual(guv((2,), (5,), (3,)), GuvTriple(0, (1,), (3,)))
        self.assertEqual(guv((1,), (1,), (0,)), GuvTriple(1, (1,), (1,)))
        self.assertEqual(guv((0, 0), (3, 2), (1, 2)), GuvTriple(0, (1, 2), (3, 2)))

    def test_guv_rejects_large_k(self):
        with self.assertRaises(UsageError):
            guv((3,), (1,), (0,))
        with self.assertRaises(UsageError):
            guv((1,), (1,), (2,))

    def test_thecalc1_params(self):
        self.assertEqual(thecalc1_params((1, 1), (1, 1), (1, 1)), GuvTriple(0, (0, 0), (0, 0)))
        self.assertEqual(thecalc1_params((1, 1), (1, 1), (1, 0)), GuvTriple(1, (0, 1), (0, 1)))
        self.assertEqual(thecalc1_params((4, 1), (1, 1), (1, 0)), GuvTriple(3, (0, 1), (0, 1)))

    def test_reduce_k(self):
        self.assertEqual(reduce_k((7, 2), (1, 2)), ((1, 2), 2))
        self.assertEqual(reduce_k((0,), (5,)), ((0,), 0))

    def test_interval_summary(self):
        self.assertEqual(interval_nakayama_summary((1,), (1,), (0,), (1,)), IntervalSummary(1, (0,), (0,)))
        self.assertEqual(interval_nakayama_summary((2,), (3,), (1,), (1,)), IntervalSummary(2, (0,), (0,)))
        self.assertEqual(interval_nakayama_summary((2, 2), (0, 0), (1, 0), (2, 1)), IntervalSummary(0, (1, 0), (2, 1)))
        self.assertTrue(interval_nakayama_summary((2,), (1,), (2,), (1,)).is_zero)

    def test_interval_summary_period(self):
        for t in range(4):
            for a in range(t + 1):
                for b in range(a, t + 1):
                    summary = interval_nakayama_summary((t,), (t + 2,), (a,), (b,))
                    self.assertEqual(summary, IntervalSummary(2, (a,), (b,)))

    def test_betti_params(self):
        self.assertEqual(betti_params((0, 0), (1, 1), (1, 1)), BettiParams(-2, (0, 0), (0, 0)))
        self.assertEqual(betti_params((0, 0), (2, 1), (0, 0)), BettiParams(0, (0, 0), (2, 1)))
        self.assertEqual(betti_params((2,), (3,), (1,)), BettiParams(1, (3,), (3,)))

    def test_betti_params_closed_form_matches_recursion(self):
        for t in Box.upto((3, 2)):
            for k in Box.upto(degrees.add(t, (3, 3))):
                for r in Box.upto(t):
                    self.assertEqual(betti_params(k, t, r), betti_params_recursive(k, t, r))

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 3), st.integers(0, 3), st.data())
    def test_guv_matches_interval_rule(self, t0, t1, data):
        t = (t0, t1)
        k = tuple(data.draw(st.integers(0, tj + 1)) for tj in t)
        r = tuple(data.draw(st.integers(0, tj)) for tj in t)
        params = guv(k, t, r)
        summary = interval_nakayama_summary(t, k, (0, 0), degrees.sub(t, r))
        self.assertEqual(summary.gamma, params.gamma)
        self.assertEqual(summary.lo, degrees.sub(t, params.v))
        self.assertEqual(summary.hi, degrees.sub(t, params.u))


class FormulaTableTestCase(SimpleTestCase):

    def test_xy(self):
        table = cohomology_table_formula(XY, (1, 1), (1, 1), GF2)
        self.assertEqual(table.dims, {(1, (0, 1)): 1, (1, (1, 0)): 1, (1, (1, 1)): 1})

    def test_xyz_circle(self):
        table = cohomology_table_formula(XYZ, (1, 1, 1), (1, 1, 1), GF2)
        self.assertEqual(table.dim(2, (1, 1, 1)), 1)

    def test_unit_ideal(self):
        unit = minimalize([(0, 0)])
        self.assertTrue(cohomology_table_formula(unit, (1, 1), (1, 1), GF2).is_empty())
        self.assertTrue(betti_table_formula(unit, (1, 1), (0, 0), GF2).is_empty())

    def test_classical_betti_numbers(self):
        table = betti_table_formula(XY, (1, 1), (0, 0), GF2)
        self.assertEqual(table.dims, {(0, (0, 0)): 1, (-1, (1, 1)): 1})

    def test_cohomology_matches_oracle_two_variables(self):
        t = (2, 1)
        for I in all_t_determined_ideals(t):
            for k in Box.upto((3, 2)):
                self.assertEqual(
                    cohomology_table_formula(I, t, k, GF2, with_mult=True),
                    nakayama_table(I, t, k, GF2, with_mult=True),
                    f"{I} at k={k}",
                )

    def test_cohomology_matches_oracle_squarefree(self):
        t = (1, 1, 1)
        for I in all_t_determined_ideals(t):
            self.assertEqual(
                cohomology_table_formula(I, t, t, QQ, with_mult=True),
                nakayama_table(I, t, t, QQ, with_mult=True),
                f"{I}",
            )

    def test_rational_tables_match_oracle(self):
        t = (2, 1)
        for I in all_t_determined_ideals(t):
            for k in Box.upto((3, 2)):
                self.assertEqual(
                    cohomology_table_formula(I, t, k, QQ, with_mult=True),
                    nakayama_table(I, t, k, QQ, with_mult=True),
                    f"{I} at k={k}",
                )
                self.assertEqual(betti_table_formula(I, t, k, QQ), betti_table(I, t, k, QQ), f"{I} at k={k}")

    def test_betti_matches_oracle(self):
        t = (1, 2)
        for I in all_t_determined_ideals(t):
            for k in [(0, 0), (1, 1), (2, 0), (1, 3)]:
                self.assertEqual(betti_table_formula(I, t, k, GF2), betti_table(I, t, k, GF2), f"{I} at k={k}")

    def test_periodicity(self):
        t = (1, 1)
        for I in all_t_determined_ideals(t):
            base = cohomology_table_formula(I, t, (1, 0), GF2)
            self.assertEqual(cohomology_table_formula(I, t, (4, 0), GF2), base.shifted(-2))

    def test_multiplication_rank_examples(self):
        self.assertEqual(multiplication_rank_formula(XY, (1, 1), (1, 1), 1, (1, 1), 0, GF2), 1)
        self.assertEqual(multiplication_rank_formula(XY, (1, 1), (1, 1), 1, (1, 0), 0, GF2), 0)
        oracle = nakayama_table(XYZ, (1, 1, 1), (1, 1, 1), GF2, with_mult=True)
        self.assertEqual(
            multiplication_rank_formula(XYZ, (1, 1, 1), (1, 1, 1), 2, (1, 1, 1), 0, GF2),
            oracle.mult_rank(2, (1, 1, 1), 0),
        )

    def test_multiplication_rank_needs_predecessor(self):
        with self.assertRaises(UsageError):
            multiplication_rank_formula(XY, (1, 1), (1, 1), 1, (0, 1), 0, GF2)
        with self.assertRaises(UsageError):
            multiplication_rank_formula(XY, (1, 1), (1, 1), 1, (1, 1), 2, GF2)


class LocalCohomologyTestCase(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(local_cohomology(XY, (1, 1), 1, (0, -5), GF2), 1)
        self.assertEqual(local_cohomology(XYZ, (1, 1, 1), 2, (0, 0, 0), GF2), 1)
        self.assertEqual(local_cohomology(XY, (1, 1), 1, (1, -1), GF2), 0)

    def test_far_negative_degrees_stabilize(self):
        for z in [(-1, -1), (-3, -1), (-1, -9)]:
            self.assertEqual(local_cohomology(zero_ideal(2), (1, 1), 2, z, GF2), 1)
        self.assertEqual(local_cohomology(zero_ideal(2), (1, 1), 2, (0, -1), GF2), 0)

    def test_independent_of_the_box(self):
        for z in itertools.product(range(-3, 2), repeat=3):
            for i in range(4):
                self.assertEqual(
                    local_cohomology(XYZ, (1, 1, 1), i, z, GF2),
                    local_cohomology(XYZ, (2, 2, 2), i, z, GF2),
                    f"H^{i} at z={z}",
                )

    def test_artinian_quotient(self):
        # S/(x^2, y^2) is its own H^0
        for z in Box.upto((1, 1)):
            self.assertEqual(local_cohomology(SQUARES, (2, 2), 0, z, GF2), 1)
        self.assertEqual(local_cohomology(SQUARES, (2, 2), 2, (-1, -1), GF2), 0)


class VanishingTestCase(SimpleTestCase):

    def test_h0(self):
        self.assertFalse(vanishing_h0(SQUARES, (2, 2), (1, 1)))
        self.assertFalse(vanishing_h0(minimalize([(1,)]), (1,), (1,)))
        self.assertTrue(vanishing_h0(zero_ideal(2), (1, 1), (1, 1)))

    def test_top(self):
        self.assertFalse(vanishing_top(zero_ideal(1), (2,), (1,)))
        self.assertTrue(vanishing_top(SQUARES, (2, 2), (1, 1)))
        self.assertFalse(vanishing_top(XY, (1, 1), (2, 2)))

    def test_window(self):
        with self.assertRaises(UsageError):
            vanishing_h0(XY, (1, 1), (0, 1))
        with self.assertRaises(UsageError):
            vanishing_top(XY, (1, 1), (3, 1))

    def test_witnesses(self):
        self.assertEqual(
            nonvanishing_witness(SQUARES, (2, 2), (2, 2)), [Witness(2, WitnessReason.PEAK, (1, 1))],
        )
        self.assertEqual(
            nonvanishing_witness(SQUARES, (2, 2), (1, 1)), [Witness(0, WitnessReason.PEAK, (1, 1))],
        )
        self.assertEqual(nonvanishing_witness(minimalize([(0, 0)]), (1, 1), (1, 1)), [])

    def test_predicates_match_oracle(self):
        for t in [(1, 1), (2, 1), (1, 1, 1)]:
            n = len(t)
            for I in all_t_determined_ideals(t):
                for k in Box(degrees.ones(n), degrees.add(t, degrees.ones(n))):
                    oracle = nakayama_table(I, t, k, GF2)
                    self.assertEqual(vanishing_h0(I, t, k), oracle.vanishes(0), f"H0 of {I} at {k}")
                    self.assertEqual(vanishing_top(I, t, k), oracle.vanishes(2 * n - 1), f"top of {I} at {k}")
                    for w in nonvanishing_witness(I, t, k):
                        self.assertFalse(oracle.vanishes(w.i), f"{w} for {I} at {k}")


class TwoVariableTestCase(SimpleTestCase):

    def test_xy(self):
        report = two_var_report(XY, (1, 1), (1, 1))
        self.assertEqual(report.vanishing(), {0: True, 1: False, 2: True, 3: True})
        self.assertEqual(report.case, SingleCase.LOWER_COMPLEMENT)
        self.assertTrue(report.single_nonvanishing)

    def test_polynomial_ring(self):
        report = two_var_report(zero_ideal(2), (1, 1), (1, 1))
        self.assertEqual(report.vanishing(), {0: True, 1: True, 2: False, 3: True})
        self.assertEqual(report.case, SingleCase.UPPER_INTERVAL)

    def test_squares(self):
        report = two_var_report(SQUARES, (2, 2), (1, 1))
        self.assertEqual(report.vanishing(), {0: False, 1: True, 2: True, 3: True})
        self.assertEqual(report.case, SingleCase.SUPPORT_LOW)
        self.assertEqual(report.as_json()["case"], "a")

    def test_needs_two_variables(self):
        with self.assertRaises(UsageError):
            two_var_report(XYZ, (1, 1, 1), (1, 1, 1))

    def test_report_matches_oracle(self):
        for t in [(1, 1), (2, 1), (2, 2)]:
            for I in all_t_determined_ideals(t):
                for k in Box((1, 1), degrees.add(t, (1, 1))):
                    oracle = nakayama_table(I, t, k, GF2)
                    report = two_var_report(I, t, k)
                    for i, vanishes in report.vanishing().items():
                        self.assertEqual(vanishes, oracle.vanishes(i), f"H{i} of {I} at {k}")
                    self.assertEqual(report.single_nonvanishing, len(oracle.indices()) <= 1, f"{I} at {k}")


class LinearityTestCase(SimpleTestCase):

    def test_c_linear_edge_cases(self):
        self.assertTrue(is_c_linear(CohomologyTable(t=(2, 2)), (1, 1)))
        self.assertTrue(is_c_linear(CohomologyTable(t=(2, 2), dims={(-1, (0, 0)): 1}), (1, 1)))
        with self.assertRaises(UsageError):
            is_c_linear(CohomologyTable(t=(2, 2)), (1,))

    def test_c_linear_koszul_shape(self):
        # counts climb by one per index and then stay at n
        dims = {(0, (0, 0)): 1, (-1, (1, 0)): 1, (-1, (0, 1)): 1, (-2, (1, 1)): 1, (-3, (1, 1)): 1}
        self.assertTrue(is_c_linear(CohomologyTable(t=(1, 1), dims=dims), (1, 1)))
        dims[(-3, (0, 0))] = 1
        self.assertFalse(is_c_linear(CohomologyTable(t=(1, 1), dims=dims), (1, 1)))

    def test_support_linear(self):
        self.assertTrue(is_support_linear(CohomologyTable(t=(1, 1), dims={(0, (0, 0)): 1})))
        self.assertTrue(is_support_linear(CohomologyTable(t=(1, 1), dims={
            (0, (1, 0)): 1, (0, (0, 1)): 1, (-1, (1, 1)): 1,
        })))
        self.assertFalse(is_support_linear(CohomologyTable(t=(1, 1), dims={(0, (1, 0)): 1, (0, (1, 1)): 1})))
        self.assertFalse(is_support_linear(CohomologyTable(t=(1, 1, 1), dims={
            (0, (1, 0, 0)): 1, (-1, (1, 1, 1)): 1,
        })))

    def test_cohen_macaulay(self):
        self.assertTrue(is_cohen_macaulay(nakayama_table(XY, (1, 1), (1, 1), GF2)))
        self.assertTrue(is_cohen_macaulay(nakayama_table(zero_ideal(2), (1, 1), (1, 1), GF2)))
        embedded = minimalize([(2, 0), (1, 1)])
        self.assertFalse(is_cohen_macaulay(nakayama_table(embedded, (2, 1), (1, 1), GF2)))

    def test_support_linear_dual_iff_cohen_macaulay(self):
        cases = [
            (XY, (1, 1)),
            (minimalize([(1, 0), (0, 1)]), (1, 1)),
            (minimalize([(1, 1, 0), (1, 0, 1), (0, 1, 1)]), (1, 1, 1)),
            (minimalize([(1, 1, 0), (0, 0, 1)]), (1, 1, 1)),
            (minimalize([(1, 0, 0), (0, 1, 1)]), (1, 1, 1)),
            (minimalize([(2, 0), (1, 1)]), (2, 1)),
        ]
        for I, t in cases:
            n = len(t)
            cm = is_cohen_macaulay(nakayama_table(I, t, degrees.ones(n), GF2))
            dual = alexander_dual_module(quotient_module(I, t, GF2))
            linear = is_support_linear(cohomology_table(koszul_tensor(concentrated(dual))))
            self.assertEqual(cm, linear, f"{I}")

    def test_two_variable_classification(self):
        self.assertTrue(two_var_linearity(minimalize([(2, 2)]), (2, 2), (1, 1)))
        self.assertFalse(two_var_linearity(minimalize([(2, 0)]), (2, 2), (1, 1)))
        self.assertTrue(two_var_linearity(minimalize([(1, 0), (0, 1)]), (2, 2), (1, 1)))
        self.assertTrue(two_var_linearity(SQUARES, (2, 2), (1, 1)))
        with self.assertRaises(UsageError):
            two_var_linearity(XY, (1, 1), (2, 1))

    def test_classification_matches_oracle(self):
        for t in [(1, 1), (2, 1), (2, 2)]:
            for I in all_t_determined_ideals(t):
                for k in Box((1, 1), t):
                    window = degrees.sub(degrees.add(t, (1, 1)), k)
                    linear = is_c_linear(betti_table(I, t, window, GF2).shifted(4), degrees.sub(t, k), 2)
                    self.assertEqual(two_var_linearity(I, t, k), linear, f"{I} at k={k}")
