from django.test import SimpleTestCase

from helpers.errors import UsageError
from helpers.linalg import GF2, QQ, PrimeField
from ideals.utils import all_t_determined_ideals, minimalize, support_profile, zero_ideal
from simplicial.models import SimplicialComplex
from simplicial.utils import (
    delta_complex,
    is_cone,
    link,
    mv_connecting,
    reduced_cohomology,
    reduced_euler_characteristic,
    restriction,
    restriction_map,
)

GF3 = PrimeField(3)


def xy_profile():
    return support_profile(minimalize([(1, 1)]), (1, 1))


class SimplicialComplexTestCase(SimpleTestCase):

    def test_void_and_empty_face_differ(self):
        void = SimplicialComplex.void(2)
        empty = SimplicialComplex.empty_face(2)
        self.assertTrue(void.is_void())
        self.assertFalse(empty.is_void())
        self.assertEqual(reduced_cohomology(void, GF2).dims(), {})
        self.assertEqual(reduced_cohomology(empty, GF2).dims(), {-1: 1})

    def test_rejects_non_closed_families(self):
        with self.assertRaises(UsageError):
            SimplicialComplex(2, frozenset({frozenset({1})}))
        with self.assertRaises(UsageError):
            SimplicialComplex.from_facets(2, [[1, 3]])

    def test_boundary_of_triangle_is_a_circle(self):
        circle = SimplicialComplex.boundary_of_simplex(3)
        self.assertEqual(len(circle), 7)
        for field in (GF2, GF3, QQ):
            self.assertEqual(reduced_cohomology(circle, field).dims(), {1: 1})
        self.assertEqual(reduced_euler_characteristic(circle), -1)

    def test_full_simplex_is_acyclic(self):
        simplex = SimplicialComplex.from_facets(3, [[1, 2, 3]])
        self.assertEqual(reduced_cohomology(simplex, QQ).dims(), {})
        self.assertEqual(reduced_euler_characteristic(simplex), 0)

    def test_euler_characteristic_matches_cohomology(self):
        for facets in ([[1], [2], [3]], [[1, 2], [3]], [[1, 2], [2, 3], [1, 3]], [[1, 2], [1, 3]]):
            delta = SimplicialComplex.from_facets(3, facets)
            self.assertEqual(
                reduced_euler_characteristic(delta),
                reduced_cohomology(delta, GF2).euler_characteristic(),
            )

    def test_link_and_restriction(self):
        circle = SimplicialComplex.boundary_of_simplex(3)
        self.assertEqual(link(circle, {1}), SimplicialComplex.from_facets(3, [[2], [3]]))
        self.assertEqual(restriction(circle, {1, 2}), SimplicialComplex.from_facets(3, [[1, 2]]))
        self.assertTrue(link(circle, {1, 2, 3}).is_void())

    def test_is_cone(self):
        fan = SimplicialComplex.from_facets(3, [[1, 2], [1, 3]])
        self.assertTrue(is_cone(fan, 1))
        self.assertFalse(is_cone(fan, 2))
        self.assertFalse(is_cone(SimplicialComplex.void(3), 1))


class DeltaComplexTestCase(SimpleTestCase):

    def test_two_points_for_xy(self):
        delta = delta_complex(xy_profile(), (0, 0), (0, 0))
        self.assertEqual(delta, SimplicialComplex.from_facets(2, [[1], [2]]))
        self.assertEqual(reduced_cohomology(delta, GF2).dims(), {0: 1})

    def test_only_the_empty_face(self):
        delta = delta_complex(xy_profile(), (0, 0), (1, 1))
        self.assertEqual(delta, SimplicialComplex.empty_face(2))

    def test_unit_ideal_gives_void(self):
        profile = support_profile(minimalize([(0, 0)]), (1, 1))
        self.assertTrue(delta_complex(profile, (0, 0), (0, 0)).is_void())

    def test_zero_ideal_is_full_simplex_at_bottom(self):
        profile = support_profile(zero_ideal(2), (1, 1))
        delta = delta_complex(profile, (0, 0), (0, 0))
        self.assertEqual(delta, SimplicialComplex.from_facets(2, [[1, 2]]))

    def test_corner_conditions(self):
        profile = xy_profile()
        with self.assertRaises(UsageError):
            delta_complex(profile, (0, 0), (2, 0))
        with self.assertRaises(UsageError):
            delta_complex(profile, (2, 0), (0, 0))
        with self.assertRaises(UsageError):
            delta_complex(profile, (0,), (0, 0))

    def test_every_delta_is_a_complex(self):
        t = (2, 1)
        for I in all_t_determined_ideals(t):
            profile = support_profile(I, t)
            for a in [(0, 0), (1, 0), (1, 1), (3, 2)]:
                for b in [(0, 0), (2, 1), (2, 0)]:
                    if all(x <= y + 1 for x, y in zip(a, b)):
                        delta_complex(profile, a, b)


class MapsTestCase(SimpleTestCase):

    def test_restriction_onto_fewer_points(self):
        three = SimplicialComplex.from_facets(3, [[1], [2], [3]])
        two = SimplicialComplex.from_facets(3, [[1], [2]])
        self.assertEqual(restriction_map(two, three, QQ).ranks(), {0: 1})

    def test_restriction_to_itself_is_identity(self):
        circle = SimplicialComplex.boundary_of_simplex(3)
        self.assertEqual(restriction_map(circle, circle, GF3).ranks(), {1: 1})

    def test_restriction_needs_subcomplex(self):
        with self.assertRaises(UsageError):
            restriction_map(
                SimplicialComplex.from_facets(2, [[1, 2]]),
                SimplicialComplex.from_facets(2, [[1]]),
                GF2,
            )

    def test_mayer_vietoris_for_xy(self):
        delta = mv_connecting(xy_profile(), (0, 0), (0, 0), 1, 1, 0, GF2)
        self.assertEqual(delta.ranks(), {-1: 1})

    def test_mayer_vietoris_with_trivial_cover(self):
        profile = support_profile(zero_ideal(2), (1, 1))
        delta = mv_connecting(profile, (0, 0), (1, 1), 1, 0, 1, QQ)
        self.assertEqual(delta.ranks(), {})

    def test_mayer_vietoris_bounds(self):
        with self.assertRaises(UsageError):
            mv_connecting(xy_profile(), (0, 0), (0, 0), 2, 1, 0, GF2)
        with self.assertRaises(UsageError):
            mv_connecting(xy_profile(), (0, 0), (0, 0), -1, 1, 0, GF2)

    def test_degenerate_cover(self):
        delta = mv_connecting(xy_profile(), (0, 0), (0, 0), 0, 1, 0, GF2)
        self.assertEqual(delta.ranks(), {})
