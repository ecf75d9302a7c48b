from unittest import TestCase

from blocksym.exactalg import MPoly, ONE, ZERO
from blocksym.exceptions import InvalidParameterError, InvalidProfileError, InvalidShapeError
from blocksym.formulas import thm1_rhs
from blocksym.paths import *
from blocksym.shapes import BlockProfile, compositions

q = MPoly.var_q()
t = MPoly.var_t()


class TestPathWeights(TestCase):

    def test_closed_small(self):
        self.assertEqual(path_weight_closed(0, 0), ONE)
        self.assertEqual(path_weight_closed(0, 1), t)
        self.assertEqual(path_weight_closed(-1, 1), t * (1 + q))
        self.assertFalse(path_weight_closed(1, 2))
        self.assertFalse(path_weight_closed(0, -1))

    def test_closed_matches_recursion(self):
        for a in range(-6, 7):
            for b in range(-6, 7):
                self.assertEqual(path_weight_closed(a, b), path_weight_recursive(a, b), f"({a}, {b})")

    def test_between_is_translation_invariant(self):
        for a, b in [(-2, 1), (-1, 2), (0, 3)]:
            self.assertEqual(
                path_weight_between(LatticePoint(a + 2, b + 2), LatticePoint(2, 2)),
                path_weight_closed(a, b),
            )

    def test_between_below_diagonal(self):
        with self.assertRaises(InvalidParameterError):
            path_weight_between(LatticePoint(0, 0), LatticePoint(2, 1))

    def test_merged_end_points(self):
        for n in range(1, 4):
            for m in range(1, 5):
                for r in compositions(m, n):
                    for i in range(1, n + 1):
                        for j in range(1, n + 1):
                            merged = lgv_entry(i, j, r, m, method='merged')
                            self.assertEqual(merged, lgv_entry(i, j, r, m, method='lattice'), f"{r} ({i}, {j})")
                            self.assertEqual(merged, lgv_entry(i, j, r, m), f"{r} ({i}, {j})")

    def test_merged_sums_individual_weights(self):
        start = LatticePoint(1, 4)
        ends = [LatticePoint(2, 2), LatticePoint(3, 3), LatticePoint(1, 1)]
        self.assertEqual(path_weight_to_any(start, ends),
                         sum((path_weight_between(start, e) for e in ends), ZERO))
        self.assertFalse(path_weight_to_any(start, []))
        with self.assertRaises(InvalidParameterError):
            path_weight_to_any(start, [LatticePoint(3, 1)])


class TestLGV(TestCase):

    def test_matrix_r11(self):
        matrix = lgv_matrix(BlockProfile((1, 1)), 2, 2)
        self.assertEqual(matrix, PolyMatrix([
            [t + q * t + q * t ** 2, ONE],
            [q * t ** 2, 1 + t + q * t],
        ]))
        self.assertEqual(det_polymatrix(matrix), thm1_rhs(BlockProfile((1, 1))))

    def test_lattice_method_agrees(self):
        profile = BlockProfile((2, 0, 1))
        for i in range(1, 4):
            for j in range(1, 4):
                self.assertEqual(
                    lgv_entry(i, j, profile, 3, 'closed'),
                    lgv_entry(i, j, profile, 3, 'lattice'),
                )

    def test_determinant_is_product(self):
        for m in range(1, 4):
            for n in range(1, 5 - m):
                for r in compositions(m, n):
                    self.assertEqual(det_polymatrix(lgv_matrix(r, m, n)), thm1_rhs(r), str(r))

    def test_profile_must_fit(self):
        with self.assertRaises(InvalidProfileError):
            lgv_matrix(BlockProfile((1, 1)), 3, 2)


class TestDeterminants(TestCase):

    def test_bareiss_matches_cofactor(self):
        matrix = PolyMatrix([
            [1 + q, t, 0],
            [q, 1, t],
            [1, q, 1 + t],
        ])
        self.assertEqual(det_bareiss(matrix), det_cofactor(matrix))

    def test_zero_pivot(self):
        matrix = PolyMatrix([[0, 1], [1, 0]])
        self.assertEqual(det_bareiss(matrix), -ONE)
        self.assertEqual(det_cofactor(matrix), -ONE)
        self.assertFalse(det_bareiss(PolyMatrix([[0, 1], [0, q]])))

    def test_not_square(self):
        with self.assertRaises(InvalidShapeError):
            PolyMatrix([[1, 2], [3]])
        with self.assertRaises(InvalidShapeError):
            PolyMatrix([])

    def test_text(self):
        self.assertEqual(PolyMatrix([[q, 1], [0, t]]).to_text(), [["q", "1"], ["0", "t"]])


class TestKrattenthaler(TestCase):

    def test_small(self):
        self.assertEqual(krattenthaler_sides((0,), 1, 1), (ONE, ONE))
        det, prod = krattenthaler_sides((1,), 3, 1)
        self.assertEqual(det, q * (1 + q + q ** 2))
        self.assertEqual(det, prod)

    def test_sides_agree(self):
        for L, M in [((1, 0), 3), ((2, 0), 4), ((3, 1), 5), ((2, 1, 0), 4), ((4, 2, 1), 6)]:
            det, prod = krattenthaler_sides(L, M, len(L))
            self.assertEqual(det, prod, f"L={L}, M={M}")

    def test_repeated_entries_vanish(self):
        for L, M in [((1, 1), 3), ((2, 2, 0), 4), ((3, 1, 1), 5), ((0, 0), 1)]:
            self.assertEqual(krattenthaler_sides(L, M, len(L)), (ZERO, ZERO), f"L={L}, M={M}")
        with self.assertRaises(InvalidParameterError):
            krattenthaler_sides((1, -1), 3, 2)

    def test_invalid(self):
        with self.assertRaises(InvalidParameterError):
            krattenthaler_sides((0, 1), 3, 2)
        with self.assertRaises(InvalidParameterError):
            krattenthaler_sides((2,), 2, 1)
        with self.assertRaises(InvalidParameterError):
            krattenthaler_sides((1,), 3, 2)
