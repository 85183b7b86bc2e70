import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from helpers.errors import NotTDeterminedError, UsageError
from ideals.models import monomial_name
from ideals.utils import (
    alexander_dual,
    all_t_determined_ideals,
    from_support,
    indents,
    is_finite_length,
    is_interval,
    is_t_determined,
    minimalize,
    peaks,
    random_t_determined_ideal,
    relative_dimension,
    require_t_determined,
    support_profile,
    with_pure_powers,
    zero_ideal,
)


class IdealTestCase(SimpleTestCase):

    def test_minimalize_drops_multiples_and_duplicates(self):
        I = minimalize([(1, 1), (1, 0), (1, 0), (2, 3)])
        self.assertEqual(I.gens, ((1, 0),))
        self.assertEqual(str(I), "(x)")

    def test_minimalize_keeps_antichain(self):
        I = minimalize([(0, 1, 1), (1, 0, 1), (1, 1, 0)])
        self.assertEqual(len(I.gens), 3)
        self.assertEqual(str(I), "(yz, xz, xy)")

    def test_zero_ideal_needs_n(self):
        with self.assertRaises(UsageError):
            minimalize([])
        self.assertTrue(minimalize([], n=2).is_zero())
        self.assertEqual(zero_ideal(3).as_json(), [])

    def test_ragged_generators(self):
        with self.assertRaises(UsageError):
            minimalize([(1, 0), (1, 0, 0)])
        with self.assertRaises(UsageError):
            minimalize([(1, -1)])

    def test_contains(self):
        I = minimalize([(1, 1)])
        self.assertTrue(I.contains((1, 1)))
        self.assertTrue(I.contains((3, 2)))
        self.assertFalse(I.contains((1, 0)))
        self.assertTrue(minimalize([(0, 0)]).is_unit())

    def test_t_determined(self):
        I = minimalize([(2, 0)])
        self.assertFalse(is_t_determined(I, (1, 1)))
        with self.assertRaises(NotTDeterminedError):
            require_t_determined(I, (1, 1))
        with self.assertRaises(UsageError):
            require_t_determined(I, (2, 0, 0))
        require_t_determined(I, (2, 0))

    def test_monomial_name(self):
        self.assertEqual(monomial_name((2, 1, 0)), "x^2y")
        self.assertEqual(monomial_name((0, 0)), "1")
        self.assertEqual(monomial_name((1, 0, 0, 0, 3)), "x1*x5^3")


class SupportTestCase(SimpleTestCase):

    def test_profile_of_xy(self):
        profile = support_profile(minimalize([(1, 1)]), (1, 1))
        self.assertEqual(profile.points(), [(0, 0), (0, 1), (1, 0)])
        self.assertTrue(profile.is_downward_closed())
        self.assertNotIn((1, 1), profile)

    def test_from_support_inverts_profile(self):
        for I in all_t_determined_ideals((2, 1)):
            profile = support_profile(I, (2, 1))
            self.assertEqual(from_support(profile.nonzero, (2, 1)), I)

    def test_enumeration_counts(self):
        # order ideals of a 3x3 grid and of the Boolean lattice on three atoms
        self.assertEqual(len(all_t_determined_ideals((2, 2))), 20)
        self.assertEqual(len(all_t_determined_ideals((1, 1, 1))), 20)
        self.assertEqual(len(all_t_determined_ideals((3,))), 5)

    def test_enumeration_includes_extremes(self):
        found = all_t_determined_ideals((1, 1))
        self.assertTrue(any(I.is_zero() for I in found))
        self.assertTrue(any(I.is_unit() for I in found))
        self.assertEqual(len(set(found)), len(found))

    def test_random_ideals_are_t_determined(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            I = random_t_determined_ideal(rng, (2, 1, 3))
            self.assertTrue(is_t_determined(I, (2, 1, 3)))

    def test_peaks_and_indents(self):
        I = minimalize([(1, 1)])
        self.assertEqual(peaks(I, (1, 1)), [(0, 1), (1, 0)])
        self.assertEqual(indents(I, (1, 1)), [(1, 1)])
        J = minimalize([(2, 0), (0, 1)])
        self.assertEqual(peaks(J, (2, 2)), [(1, 0)])
        self.assertEqual(indents(J, (2, 2)), [(0, 1), (2, 0)])

    def test_zero_ideal_has_corner_peak(self):
        self.assertEqual(peaks(zero_ideal(2), (1, 2)), [(1, 2)])
        self.assertEqual(indents(zero_ideal(2), (1, 2)), [])

    def test_relative_dimension(self):
        self.assertEqual(relative_dimension((0, 0, 1), (1, 2, 1)), 2)
        self.assertEqual(relative_dimension((3, 1), (1, 1), mode="above"), 1)
        with self.assertRaises(UsageError):
            relative_dimension((2, 0), (1, 1))
        with self.assertRaises(UsageError):
            relative_dimension((0, 0), (1, 1), mode="sideways")

    def test_is_interval(self):
        self.assertTrue(is_interval([]))
        self.assertTrue(is_interval([(0, 1), (0, 2), (1, 1), (1, 2)]))
        self.assertFalse(is_interval([(0, 0), (1, 1)]))
        self.assertTrue(is_interval([(2,)]))


class AlexanderDualTestCase(SimpleTestCase):

    def test_xy_and_maximal_ideal(self):
        xy = minimalize([(1, 1)])
        m = minimalize([(1, 0), (0, 1)])
        self.assertEqual(alexander_dual(xy, (1, 1)), m)
        self.assertEqual(alexander_dual(m, (1, 1)), xy)

    def test_powers(self):
        self.assertEqual(alexander_dual(minimalize([(1,)]), (2,)), minimalize([(2,)]))

    def test_zero_and_unit_swap(self):
        self.assertTrue(alexander_dual(zero_ideal(2), (1, 1)).is_unit())
        self.assertTrue(alexander_dual(minimalize([(0, 0)]), (1, 1)).is_zero())

    def test_involution_on_small_boxes(self):
        for t in [(1, 2), (1, 1, 1), (3,)]:
            for I in all_t_determined_ideals(t):
                self.assertEqual(alexander_dual(alexander_dual(I, t), t), I)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_involution_on_random_ideals(self, seed):
        rng = np.random.default_rng(seed)
        t = (2, 1, 2)
        I = random_t_determined_ideal(rng, t)
        self.assertEqual(alexander_dual(alexander_dual(I, t), t), I)


class FiniteLengthTestCase(SimpleTestCase):

    def test_is_finite_length(self):
        self.assertTrue(is_finite_length(minimalize([(1, 0), (0, 1)])))
        self.assertTrue(is_finite_length(minimalize([(2, 0), (1, 1), (0, 3)])))
        self.assertTrue(is_finite_length(minimalize([(0, 0)])))
        self.assertFalse(is_finite_length(minimalize([(1, 1)])))
        self.assertFalse(is_finite_length(minimalize([(2, 0), (1, 1)])))
        self.assertFalse(is_finite_length(zero_ideal(2)))

    def test_with_pure_powers(self):
        self.assertEqual(with_pure_powers(minimalize([(1, 1)]), (1, 1)), minimalize([(1, 0), (0, 1)]))
        self.assertEqual(with_pure_powers(zero_ideal(2), (2, 1)), minimalize([(2, 0), (0, 1)]))
        self.assertTrue(with_pure_powers(zero_ideal(2), (0, 1)).is_unit())
        for I in all_t_determined_ideals((2, 1)):
            closed = with_pure_powers(I, (2, 1))
            self.assertTrue(is_finite_length(closed))
            self.assertTrue(is_t_determined(closed, (2, 1)))
