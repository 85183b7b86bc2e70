from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from helpers import degrees
from helpers.degrees import Box
from helpers.errors import ComplexError, ParseError, UsageError
from helpers.linalg import (
    GF2,
    QQ,
    CochainComplex,
    ExactMatrix,
    PrimeField,
    cohomology,
    connecting_map,
    get_field,
    induced_map,
    kernel_basis,
    mapping_cone,
    rank,
    rref,
    shift_cochain,
    solve,
)

GF3 = PrimeField(3)

small_matrices = st.integers(1, 5).flatmap(
    lambda rows: st.integers(1, 5).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(-1, 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows
        )
    )
)


class DegreeTestCase(SimpleTestCase):

    def test_leq(self):
        self.assertTrue(degrees.leq((0, 0), (1, 1)))
        self.assertFalse(degrees.leq((1, 0), (0, 1)))
        self.assertTrue(degrees.leq((2, 1, 0), (2, 1, 0)))

    def test_leq_length_mismatch(self):
        with self.assertRaises(UsageError):
            degrees.leq((0, 0), (0, 0, 0))

    def test_p_clamp(self):
        self.assertEqual(degrees.p_clamp((2, 2), (5, 1)), (2, 1))
        self.assertEqual(degrees.p_clamp((2, 2), (0, 0)), (0, 0))
        self.assertEqual(degrees.p_clamp((1,), (7,)), (1,))

    def test_p_clamp_is_idempotent(self):
        t = (2, 3)
        for a in Box.upto((5, 5)):
            once = degrees.p_clamp(t, a)
            self.assertEqual(degrees.p_clamp(t, once), once)

    def test_q_map(self):
        self.assertEqual(degrees.q_map(1, 2, 0), 0)
        self.assertEqual(degrees.q_map(1, 2, 2), 1)
        self.assertEqual(degrees.q_map(1, 2, 5), 3)

    def test_q_map_order_preserving_and_onto(self):
        for k in range(9):
            for r in range(9):
                values = [degrees.q_map(k, r, x) for x in range(9 + r)]
                self.assertEqual(values, sorted(values))
                self.assertEqual(sorted(set(values)), list(range(max(values) + 1)))

    def test_q_vector(self):
        self.assertEqual(degrees.q_vector((1, 0), (2, 1), (2, 2)), (1, 1))

    def test_support(self):
        self.assertEqual(degrees.support((0, 3, 0)), frozenset({2}))
        self.assertEqual(degrees.support((0, 0)), frozenset())
        self.assertEqual(degrees.support((1, 1, 1)), frozenset({1, 2, 3}))

    def test_box_points_lexicographic(self):
        self.assertEqual(list(Box.upto((1, 1))), [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.assertEqual(list(Box((1, 0), (0, 1))), [])
        self.assertTrue(Box((1, 0), (0, 1)).is_empty())
        self.assertEqual(Box.upto((2, 1)).volume(), 6)

    def test_parse_degree(self):
        self.assertEqual(degrees.parse_degree("1,0,2"), (1, 0, 2))
        with self.assertRaises(ParseError):
            degrees.parse_degree("1,x")

    @given(st.lists(st.integers(0, 4), min_size=3, max_size=3), st.lists(st.integers(0, 4), min_size=3, max_size=3))
    def test_leq_matches_coordinate_loop(self, a, b):
        expected = True
        for x, y in zip(a, b):
            if x > y:
                expected = False
        self.assertEqual(degrees.leq(a, b), expected)


class FieldTestCase(SimpleTestCase):

    def test_get_field(self):
        self.assertEqual(get_field("gf2"), GF2)
        self.assertEqual(get_field("q"), QQ)
        self.assertEqual(get_field("gfp:5"), PrimeField(5))
        self.assertEqual(get_field({"type": "gfp", "p": 2}), GF2)
        self.assertEqual(get_field({"type": "q"}), QQ)

    def test_bad_fields(self):
        with self.assertRaises(UsageError):
            PrimeField(4)
        with self.assertRaises(ParseError):
            get_field("reals")


class MatrixTestCase(SimpleTestCase):

    def test_rank_examples(self):
        for field in (GF2, GF3, QQ):
            self.assertEqual(rank(ExactMatrix.identity(field, 2)), 2)
            self.assertEqual(rank(ExactMatrix.zeros(field, 3, 2)), 0)
        self.assertEqual(rank(ExactMatrix.from_rows(GF2, [[1, 1], [1, 1]])), 1)

    def test_rank_depends_on_characteristic(self):
        rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
        self.assertEqual(rank(ExactMatrix.from_rows(GF2, rows)), 2)
        self.assertEqual(rank(ExactMatrix.from_rows(QQ, rows)), 3)

    def test_kernel_basis(self):
        self.assertEqual(kernel_basis(ExactMatrix.identity(QQ, 3)).cols, 0)
        self.assertEqual(kernel_basis(ExactMatrix.zeros(QQ, 3, 3)).cols, 3)
        K = kernel_basis(ExactMatrix.from_rows(QQ, [[1, 1]]))
        self.assertEqual(K.shape, (2, 1))
        self.assertEqual(K.data[0, 0], -K.data[1, 0])

    def test_rational_entries_stay_exact(self):
        M = ExactMatrix.from_rows(QQ, [[Fraction(1, 3), Fraction(2, 3)], [1, 2]])
        self.assertEqual(rank(M), 1)
        R, pivots = rref(M)
        self.assertEqual(pivots, [0])
        self.assertEqual(R[0, 1], Fraction(2))

    def test_solve(self):
        A = ExactMatrix.from_rows(GF3, [[1, 0], [0, 2]])
        Y = ExactMatrix.from_rows(GF3, [[1], [1]])
        X = solve(A, Y)
        self.assertEqual(A @ X, Y)
        with self.assertRaises(ComplexError):
            solve(ExactMatrix.zeros(GF3, 2, 2), Y)

    @settings(max_examples=60, deadline=None)
    @given(small_matrices)
    def test_kernel_dimension(self, rows):
        for field in (GF2, GF3, QQ):
            M = ExactMatrix.from_rows(field, rows)
            K = kernel_basis(M)
            self.assertTrue((M @ K).is_zero())
            self.assertEqual(rank(K), M.cols - rank(M))

    @settings(max_examples=60, deadline=None)
    @given(small_matrices)
    def test_rank_of_transpose(self, rows):
        for field in (GF2, GF3, QQ):
            M = ExactMatrix.from_rows(field, rows)
            self.assertEqual(rank(M), rank(M.T))
            self.assertEqual(rank(M), len(rref(M)[1]))


def two_term(field, matrix_rows, lo=0):
    """The complex K^a → K^b in degrees lo, lo+1."""
    d = ExactMatrix.from_rows(field, matrix_rows)
    return CochainComplex(field, {lo: d.cols, lo + 1: d.rows}, {lo: d})


class CohomologyTestCase(SimpleTestCase):

    def test_acyclic(self):
        C = two_term(GF2, [[1]])
        self.assertEqual(cohomology(C).dims(), {})

    def test_single_term(self):
        C = CochainComplex(GF2, {3: 1})
        self.assertEqual(cohomology(C).dims(), {3: 1})

    def test_two_points(self):
        # reduced cochains of two points: K → K², the augmentation
        C = two_term(QQ, [[1], [1]], lo=-1)
        self.assertEqual(cohomology(C).dims(), {0: 1})

    def test_rejects_nonzero_square(self):
        d = ExactMatrix.identity(GF2, 1)
        with self.assertRaises(ComplexError):
            CochainComplex(GF2, {0: 1, 1: 1, 2: 1}, {0: d, 1: d})

    def test_euler_characteristic(self):
        C = two_term(GF3, [[1, 0, 0], [0, 0, 0]])
        self.assertEqual(C.euler_characteristic(), cohomology(C).euler_characteristic())

    def test_shift(self):
        C = two_term(GF3, [[1, 0]])
        shifted = shift_cochain(C, 1)
        self.assertEqual(cohomology(shifted).dims(), {-1: 1})
        self.assertEqual(shifted.d(-1), -C.d(0))

    def test_induced_identity_and_zero(self):
        C = two_term(QQ, [[1, 1]])
        identity = {i: ExactMatrix.identity(QQ, C.dim(i)) for i in C.dims}
        self.assertEqual(induced_map(identity, C, C).ranks(), {0: 1})
        zero = {i: ExactMatrix.zeros(QQ, C.dim(i), C.dim(i)) for i in C.dims}
        self.assertEqual(induced_map(zero, C, C).ranks(), {})

    def test_induced_rejects_non_chain_map(self):
        C = CochainComplex(GF2, {0: 1})
        D = two_term(GF2, [[1]])
        with self.assertRaises(ComplexError):
            induced_map({0: ExactMatrix.identity(GF2, 1)}, C, D)

    def test_connecting_two_term_snake(self):
        # 0 → (0 → K) → (K → K) → (K → 0) → 0
        field = GF3
        one = ExactMatrix.identity(field, 1)
        A = CochainComplex(field, {1: 1})
        B = two_term(field, [[1]])
        C = CochainComplex(field, {0: 1})
        delta = connecting_map({1: one}, {0: one}, A, B, C)
        self.assertEqual(delta.ranks(), {0: 1})

    def test_connecting_split(self):
        field = QQ
        A = CochainComplex(field, {0: 1})
        C = CochainComplex(field, {1: 1})
        B = CochainComplex(field, {0: 1, 1: 1})
        inj = {0: ExactMatrix.identity(field, 1)}
        surj = {1: ExactMatrix.identity(field, 1)}
        self.assertEqual(connecting_map(inj, surj, A, B, C).ranks(), {})

    def test_connecting_rejects_non_exact(self):
        field = GF2
        A = CochainComplex(field, {0: 1})
        B = CochainComplex(field, {0: 1})
        C = CochainComplex(field, {0: 1})
        one = ExactMatrix.identity(field, 1)
        with self.assertRaises(ComplexError):
            connecting_map({0: one}, {0: one}, A, B, C)

    def test_mapping_cone_of_isomorphism_is_acyclic(self):
        field = GF3
        C = CochainComplex(field, {0: 2})
        g = {0: ExactMatrix.from_rows(field, [[1, 1], [0, 1]])}
        cone = mapping_cone(g, C, C)
        self.assertEqual(cohomology(cone.cone).dims(), {})

    def test_mapping_cone_connecting_rank(self):
        field = QQ
        C = CochainComplex(field, {0: 2})
        D = CochainComplex(field, {0: 2})
        g = {0: ExactMatrix.from_rows(field, [[1, 0], [0, 0]])}
        cone = mapping_cone(g, C, D)
        # 0 → D → cone → C[1] → 0 and δ is the map g on cohomology
        delta = connecting_map(cone.inclusion, cone.projection, D, cone.cone, cone.shifted_source)
        self.assertEqual(delta.rank(-1), 1)
        self.assertEqual(cohomology(cone.cone).dims(), {-1: 1, 0: 1})
