from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from helpers.errors import ComplexError, ComplexTooLarge, UsageError
from helpers.linalg import GF2, QQ, ExactMatrix, PrimeField
from ideals.utils import all_t_determined_ideals, minimalize, zero_ideal
from modreps.models import CohomologyTable, ComplexOfReps, ModuleRep
from modreps.utils import (
    alexander_dual_module,
    betti_table,
    cohomology_table,
    concentrated,
    interval_complex,
    interval_module,
    koszul_tensor,
    module_table,
    nakayama,
    nakayama_step,
    nakayama_table,
    pullback,
    quotient_module,
    same_module,
    shift,
)

GF3 = PrimeField(3)
XY = minimalize([(1, 1)])


class ModuleRepTestCase(SimpleTestCase):

    def test_quotient_module(self):
        M = quotient_module(XY, (1, 1), GF2)
        self.assertEqual(sorted(M.dims), [(0, 0), (0, 1), (1, 0)])
        self.assertEqual(M.x(0, (0, 0)), ExactMatrix.identity(GF2, 1))
        self.assertEqual(M.x(0, (0, 1)).shape, (0, 1))

    def test_quotient_module_needs_t_determined(self):
        with self.assertRaises(UsageError):
            quotient_module(minimalize([(2, 0)]), (1, 1), GF2)

    def test_interval_module(self):
        M = interval_module((2,), (1,), (2,), QQ)
        self.assertEqual(M.dims, {(1,): 1, (2,): 1})
        self.assertTrue(interval_module((2, 2), (2, 0), (1, 2), QQ).is_zero())
        with self.assertRaises(UsageError):
            interval_module((2,), (0,), (3,), QQ)

    def test_rejects_non_commuting_square(self):
        one = ExactMatrix.identity(GF2, 1)
        dims = {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
        mult = {(0, (0, 0)): one, (1, (0, 0)): one, (1, (1, 0)): one}
        with self.assertRaises(ComplexError):
            ModuleRep(t=(1, 1), field=GF2, dims=dims, mult=mult)

    def test_rejects_bad_shape(self):
        with self.assertRaises(ComplexError):
            ModuleRep(t=(1,), field=GF2, dims={(0,): 1, (1,): 1}, mult={(0, (0,)): ExactMatrix.zeros(GF2, 2, 1)})

    def test_complex_rejects_nonzero_square(self):
        one = ExactMatrix.identity(GF2, 1)
        dims = {(0, (0,)): 1, (-1, (0,)): 1, (-2, (0,)): 1}
        with self.assertRaises(ComplexError):
            ComplexOfReps(t=(0,), field=GF2, dims=dims, diff={(0, (0,)): one, (-1, (0,)): one})

    def test_term_of_concentrated_module(self):
        M = quotient_module(XY, (1, 1), GF3)
        self.assertTrue(same_module(concentrated(M, 4).term(4), M))
        self.assertTrue(concentrated(M, 4).term(0).is_zero())


class CohomologyTableTestCase(SimpleTestCase):

    def test_zero_entries_are_dropped(self):
        table = CohomologyTable(t=(1,), dims={(0, (0,)): 0, (1, (1,)): 2})
        self.assertEqual(table.indices(), [1])
        self.assertTrue(table.vanishes(0))
        self.assertEqual(table, CohomologyTable(t=(1,), dims={(1, (1,)): 2}))

    def test_shifted_and_reindexed(self):
        table = CohomologyTable(t=(1,), dims={(1, (1,)): 2})
        self.assertEqual(table.shifted(1).degrees_at(0), [(1,)])
        wide = table.reindexed(lambda d: (min(d[0], 1),), (3,))
        self.assertEqual(wide.degrees_at(1), [(1,), (2,), (3,)])

    def test_first_difference(self):
        left = CohomologyTable(t=(1,), dims={(1, (1,)): 2})
        right = CohomologyTable(t=(1,), dims={(1, (1,)): 1})
        self.assertIsNone(left.first_difference(left))
        self.assertEqual(left.first_difference(right), {"i": 1, "r": [1], "left": 2, "right": 1})

    def test_json_rows(self):
        table = CohomologyTable(t=(1, 1), dims={(1, (1, 0)): 1}, ranks={(1, (1, 1), 0): 1}, with_mult=True)
        self.assertEqual(table.as_json(), {
            "t": [1, 1],
            "rows": [{"i": 1, "r": [1, 0], "dim": 1}],
            "mult": [{"i": 1, "r": [1, 1], "j": 1, "mult_rank": 1}],
        })


class NakayamaTestCase(SimpleTestCase):

    def test_no_steps_gives_the_module(self):
        M = quotient_module(XY, (1, 1), GF2)
        self.assertEqual(nakayama_table(XY, (1, 1), (0, 0), GF2), module_table(M))

    def test_xy(self):
        table = nakayama_table(XY, (1, 1), (1, 1), GF2)
        self.assertEqual(table.indices(), [1])
        self.assertEqual(table.degrees_at(1), [(0, 1), (1, 0), (1, 1)])

    def test_one_variable_full_box(self):
        # one step on K[x]/(x^2) leaves K in degree 0 at index 1
        table = nakayama_table(zero_ideal(1), (1,), (1,), QQ)
        self.assertEqual(table.dims, {(1, (0,)): 1})

    def test_unit_ideal_is_zero(self):
        table = nakayama_table(minimalize([(0, 0)]), (1, 1), (2, 1), GF2)
        self.assertTrue(table.is_empty())

    def test_step_validates_direction(self):
        C = concentrated(quotient_module(XY, (1, 1), GF2))
        with self.assertRaises(UsageError):
            nakayama_step(C, 2)
        with self.assertRaises(UsageError):
            nakayama(C, (1, 0), order=[0, 0])
        with self.assertRaises(UsageError):
            nakayama(C, (1,))

    def test_step_produces_a_complex(self):
        for I in all_t_determined_ideals((1, 2)):
            C = concentrated(quotient_module(I, (1, 2), GF3))
            for j in range(2):
                nakayama_step(nakayama_step(C, j), 1 - j)

    def test_order_of_directions(self):
        for I in all_t_determined_ideals((1, 1)):
            C = concentrated(quotient_module(I, (1, 1), GF2))
            default = cohomology_table(nakayama(C, (2, 1)))
            swapped = cohomology_table(nakayama(C, (2, 1), order=[0, 1]))
            self.assertEqual(default, swapped)

    def test_periodicity(self):
        for I in all_t_determined_ideals((1, 1)):
            base = nakayama_table(I, (1, 1), (0, 0), GF2)
            self.assertEqual(nakayama_table(I, (1, 1), (3, 0), GF2), base.shifted(-2))
            self.assertEqual(nakayama_table(I, (1, 1), (0, 3), GF2), base.shifted(-2))

    def test_euler_characteristic_per_degree(self):
        for I in all_t_determined_ideals((2, 1)):
            C = nakayama(concentrated(quotient_module(I, (2, 1), QQ)), (1, 2))
            table = cohomology_table(C)
            for r in C.box:
                self.assertEqual(
                    C.slice(r).euler_characteristic(),
                    sum((-1) ** (i % 2) * table.dim(i, r) for i in table.indices()),
                )

    def test_multiplication_ranks_of_module(self):
        table = cohomology_table(concentrated(quotient_module(XY, (1, 1), GF2)), with_mult=True)
        self.assertEqual(table.mult_rank(0, (1, 0), 0), 1)
        self.assertEqual(table.mult_rank(0, (1, 1), 0), 0)

    @override_settings(NAK_MAX_CELLS=5)
    def test_cell_cap_from_settings(self):
        with self.assertRaises(ComplexTooLarge) as caught:
            nakayama_table(zero_ideal(2), (2, 2), (1, 1), GF2)
        self.assertEqual(caught.exception.returncode, 4)

    def test_cell_cap_argument(self):
        C = concentrated(quotient_module(zero_ideal(2), (1, 1), GF2))
        with self.assertRaises(ComplexTooLarge):
            nakayama(C, (1, 1), max_cells=2)
        with self.assertRaises(ComplexTooLarge):
            koszul_tensor(C, max_cells=3)


class BettiTestCase(SimpleTestCase):

    def test_principal(self):
        table = betti_table(XY, (1, 1), (0, 0), GF2)
        self.assertEqual(table.dims, {(0, (0, 0)): 1, (-1, (1, 1)): 1})

    def test_three_points(self):
        I = minimalize([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
        table = betti_table(I, (1, 1, 1), (0, 0, 0), QQ)
        self.assertEqual(table.dims, {
            (0, (0, 0, 0)): 1,
            (-1, (0, 1, 1)): 1,
            (-1, (1, 0, 1)): 1,
            (-1, (1, 1, 0)): 1,
            (-2, (1, 1, 1)): 2,
        })

    def test_polynomial_ring(self):
        table = betti_table(zero_ideal(3), (1, 1, 1), (0, 0, 0), GF2)
        self.assertEqual(table.dims, {(0, (0, 0, 0)): 1})

    def test_koszul_of_a_complex_is_a_complex(self):
        C = nakayama(concentrated(quotient_module(XY, (1, 1), GF3)), (1, 1))
        koszul_tensor(C)


class DualityTestCase(SimpleTestCase):

    def test_dual_of_xy_quotient(self):
        A = alexander_dual_module(quotient_module(XY, (1, 1), GF2))
        self.assertEqual(sorted(A.dims), [(0, 1), (1, 0), (1, 1)])
        self.assertEqual(A.x(0, (0, 1)), ExactMatrix.identity(GF2, 1))

    def test_dual_of_interval(self):
        M = interval_module((3, 2), (1, 0), (2, 1), GF3)
        self.assertTrue(same_module(alexander_dual_module(M), interval_module((3, 2), (1, 1), (2, 2), GF3)))

    def test_involution(self):
        for I in all_t_determined_ideals((2, 1)):
            M = quotient_module(I, (2, 1), GF2)
            self.assertTrue(same_module(alexander_dual_module(alexander_dual_module(M)), M))

    def test_same_module_sees_matrices(self):
        M = quotient_module(zero_ideal(1), (1,), GF2)
        N = ModuleRep(t=(1,), field=GF2, dims={(0,): 1, (1,): 1})
        self.assertFalse(same_module(M, N))
        self.assertTrue(same_module(M, M))


class ShiftAndIntervalTestCase(SimpleTestCase):

    @settings(max_examples=20, deadline=None)
    @given(st.integers(-3, 3))
    def test_shift_moves_the_table(self, m):
        C = nakayama(concentrated(quotient_module(XY, (1, 1), GF2)), (1, 0))
        self.assertEqual(cohomology_table(shift(C, m)), cohomology_table(C).shifted(m))

    def test_interval_complex_examples(self):
        self.assertEqual(cohomology_table(interval_complex(2, 2, 0, GF2)).dims, {(1, (1,)): 1})
        self.assertEqual(cohomology_table(interval_complex(0, 2, 1, GF2)).dims, {(0, (0,)): 1, (0, (1,)): 1})
        with self.assertRaises(UsageError):
            interval_complex(4, 2, 0, GF2)
        with self.assertRaises(UsageError):
            interval_complex(1, 2, 3, GF2)

    def test_interval_complex_matches_nakayama(self):
        for t in range(3):
            for y in range(t + 1):
                start = concentrated(interval_module((t,), (0,), (t - y,), GF3))
                for k in range(t + 2):
                    self.assertEqual(
                        cohomology_table(interval_complex(k, t, y, GF3), with_mult=True),
                        cohomology_table(nakayama(start, (k,)), with_mult=True),
                    )

    def test_pullback(self):
        C = interval_complex(1, 1, 0, GF2)
        wide = pullback(C, (0,), (2,))
        self.assertEqual(wide.t, (3,))
        self.assertEqual(
            cohomology_table(wide, with_mult=True),
            cohomology_table(interval_complex(3, 3, 2, GF2), with_mult=True),
        )
        with self.assertRaises(UsageError):
            pullback(C, (2,), (1,))
