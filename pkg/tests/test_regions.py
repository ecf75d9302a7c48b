from math import prod
from unittest import TestCase

from blocksym.exceptions import InvalidDentSetError, InvalidParameterError, InvalidProfileError
from blocksym.regions import *
from blocksym.shapes import BlockProfile, compositions, lambda_of_dents


class TestTriangles(TestCase):

    def test_neighbours_are_mutual(self):
        for tri in HexagonRegion(2, 3, 2).triangles():
            for nb in tri.neighbours():
                self.assertIn(tri, nb.neighbours())
                self.assertNotEqual(nb.side, tri.side)

    def test_neighbours_share_an_edge(self):
        tri = Triangle(LEFT, 2, 3)
        for nb in tri.neighbours():
            self.assertEqual(len(set(tri.vertices()) & set(nb.vertices())), 2)

    def test_mirror_is_involution(self):
        hexagon = HexagonRegion(3, 3, 2)
        tris = hexagon.triangles()
        for tri in tris:
            image = mirror_triangle(tri, 3)
            self.assertNotEqual(image.side, tri.side)
            self.assertIn(image, tris)
            self.assertEqual(mirror_triangle(image, 3), tri)


class TestHexagon(TestCase):

    def test_triangle_count(self):
        for a, b, c in [(1, 1, 1), (2, 2, 2), (1, 2, 3), (3, 1, 2)]:
            hexagon = HexagonRegion(a, b, c)
            self.assertEqual(len(hexagon.triangles()), 2 * (a * b + b * c + c * a))
            self.assertTrue(hexagon.is_balanced())

    def test_outline_on_boundary(self):
        hexagon = HexagonRegion(2, 1, 3)
        for u, y in hexagon.outline():
            self.assertTrue(hexagon.contains_point(u, y))
        self.assertEqual(hexagon.width, 3)
        self.assertEqual(str(hexagon), "H(2,1,3)")

    def test_invalid(self):
        with self.assertRaises(InvalidParameterError):
            HexagonRegion(0, 1, 1)


class TestTrapezoid(TestCase):

    def test_triangle_counts(self):
        self.assertEqual(len(TrapezoidRegion(1, 1, (2,)).triangles()), 2)
        self.assertEqual(len(TrapezoidRegion(2, 2, (2, 4)).triangles()), 10)
        self.assertEqual(len(TrapezoidRegion(2, 2, (2, 4))._all_triangles()) + 2, 12)
        self.assertTrue(TrapezoidRegion(2, 2, (2, 4)).is_balanced())

    def test_dents_removed(self):
        region = TrapezoidRegion(2, 1, (1, 3), (1,))
        tris = region.triangles()
        self.assertNotIn(Triangle(LEFT, 1, 1), tris)
        self.assertNotIn(Triangle(LEFT, 1, 3), tris)
        self.assertNotIn(Triangle(RIGHT, 1, 1), tris)
        self.assertEqual(tris, frozenset({Triangle(LEFT, 1, 2), Triangle(RIGHT, 1, 2)}))
        self.assertEqual(str(region), "T(2,1;{1,3};{1})")

    def test_dent_count_mismatch(self):
        with self.assertRaises(InvalidDentSetError):
            TrapezoidRegion(2, 2, (2,))
        with self.assertRaises(InvalidDentSetError):
            TrapezoidRegion(2, 2, (2, 5))
        with self.assertRaises(InvalidDentSetError):
            TrapezoidRegion(2, 2, (3, 2))
        with self.assertRaises(InvalidParameterError):
            TrapezoidRegion(1, 0, ())


class TestDentSets(TestCase):

    def test_right_dent_sets_small(self):
        self.assertEqual(
            right_dent_sets(BlockProfile((1, 1)), 4),
            [(1, 3), (1, 4), (2, 3), (2, 4)],
        )

    def test_right_dent_set_count(self):
        r = BlockProfile((2, 0, 2, 1, 3))
        sets = right_dent_sets(r, 13)
        self.assertEqual(len(sets), prod(v + 1 for v in r.r))
        self.assertEqual(len(sets), 72)
        for P in sets:
            self.assertEqual(len(P), 8)
            for k in range(1, r.n + 1):
                window = range(r.S[k - 1] + k, r.S[k] + k + 1)
                self.assertEqual(sum(1 for p in P if p in window), r.r[k - 1])

    def test_ground_size_checked(self):
        with self.assertRaises(InvalidProfileError):
            right_dent_sets(BlockProfile((1, 1)), 5)

    def test_extremal_dents(self):
        r = BlockProfile((2, 0, 2, 1, 3))
        p_min, _ = extremal_dents(r)
        self.assertEqual(p_min, (1, 2, 5, 6, 8, 10, 11, 12))
        self.assertEqual(min(right_dent_sets(r, 13), key=sum), p_min)

    def test_extremal_left_dents(self):
        p_min, p_max = extremal_dents(BlockProfile((2,)), BlockProfile((1,)))
        self.assertEqual(p_min, (1, 2))
        self.assertEqual(p_max, (2,))
        _, p_max = extremal_dents(BlockProfile((2, 1, 0)), BlockProfile.ones(2, 3))
        self.assertEqual(p_max, (2, 4))
        self.assertEqual(left_dent_sets(BlockProfile.ones(1, 2), 3), [(1,), (2,)])

    def test_dent_distance(self):
        self.assertEqual(dent_distance((2, 4), (1, 3)), 2)
        self.assertEqual(dent_distance((1,), (2,), DentDirection.BELOW_MAX), 1)
        with self.assertRaises(InvalidDentSetError):
            dent_distance((1, 2), (1,))
        r = BlockProfile((2, 0, 2, 1, 3))
        p_min, _ = extremal_dents(r)
        distances = {dent_distance(P, p_min) for P in right_dent_sets(r, 13)}
        self.assertEqual(distances, set(range(0, 9)))

    def test_dent_distance_is_box_count(self):
        for n in range(1, 6):
            for total in range(1, 7):
                for r in compositions(total, n):
                    sets = right_dent_sets(r, total + n)
                    self.assertEqual(len(sets), prod(k + 1 for k in r.r), str(r))
                    self.assertEqual(len(set(sets)), len(sets))
                    p_min, _ = extremal_dents(r)
                    base = lambda_of_dents(p_min, total).size
                    for P in sets:
                        self.assertEqual(dent_distance(P, p_min), lambda_of_dents(P, total).size - base)


class TestAxisCells(TestCase):

    def test_cells_cover_axis(self):
        for r in [(1, 1), (2, 0, 1), (0, 3)]:
            profile = BlockProfile(r)
            m = profile.total
            hexagon = HexagonRegion(m, m, profile.n)
            cells = axis_cells(profile, m)
            self.assertEqual(cells[0][0], hexagon.bottom(m))
            self.assertEqual(cells[-1][1], hexagon.top(m))
            for (_, high), (low, _) in zip(cells, cells[1:]):
                self.assertEqual(high, low)

    def test_cell_heights(self):
        self.assertEqual(axis_cells(BlockProfile((1, 1)), 2), [(-2, 2), (2, 6)])

    def test_wrong_size(self):
        with self.assertRaises(InvalidProfileError):
            axis_cells(BlockProfile((1, 1)), 3)
