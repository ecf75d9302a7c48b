from unittest import TestCase

from blocksym.exceptions import InvalidDentSetError, InvalidProfileError, InvalidShapeError
from blocksym.regions import dent_distance, extremal_dents, right_dent_sets
from blocksym.shapes import *


def P(*parts):
    return Partition(tuple(parts))


class TestPartition(TestCase):

    def test_trailing_zeros_trimmed(self):
        self.assertEqual(P(2, 1, 0, 0), P(2, 1))
        self.assertEqual(P(0, 0), EMPTY)
        self.assertEqual(P(2, 1)[5], 0)

    def test_parse_and_str(self):
        lam = Partition.parse("(4,4,4,3,2,2)")
        self.assertEqual(str(lam), "(4,4,4,3,2,2)")
        self.assertEqual(lam.size, 19)
        self.assertEqual(Partition.parse("()"), EMPTY)
        with self.assertRaises(InvalidShapeError):
            Partition.parse("(1,x)")

    def test_not_a_partition(self):
        with self.assertRaises(InvalidShapeError):
            P(1, 2)
        with self.assertRaises(InvalidShapeError):
            P(2, -1)

    def test_conjugate(self):
        self.assertEqual(P(3, 1).conjugate(), P(2, 1, 1))
        self.assertEqual(P(2, 2).conjugate(), P(2, 2))
        self.assertEqual(EMPTY.conjugate(), EMPTY)

    def test_contains(self):
        self.assertTrue(contains(P(1), P(2, 1)))
        self.assertFalse(contains(P(1, 1, 1), P(2, 1)))
        self.assertTrue(contains(EMPTY, EMPTY))


class TestBlockProfile(TestCase):

    def test_partial_sums(self):
        r = BlockProfile.parse("(2,0,2,1,3)")
        self.assertEqual(r.S, (0, 2, 2, 4, 5, 8))
        self.assertEqual(r.n, 5)
        self.assertEqual(r.total, 8)
        self.assertEqual(BlockProfile.parse("1,1,1"), BlockProfile((1, 1, 1)))

    def test_invalid_profiles(self):
        with self.assertRaises(InvalidProfileError):
            BlockProfile(())
        with self.assertRaises(InvalidProfileError):
            BlockProfile((1, -1))
        with self.assertRaises(InvalidProfileError) as ctx:
            BlockProfile.parse("1,a", flag="--r")
        self.assertEqual(ctx.exception.flag, "--r")

    def test_ones(self):
        self.assertEqual(BlockProfile.ones(2, 3).r, (1, 1, 0))

    def test_compositions(self):
        found = [c.r for c in compositions(2, 2)]
        self.assertEqual(found, [(2, 0), (1, 1), (0, 2)])
        self.assertEqual(len(list(compositions(3, 3))), 10)


class TestStrips(TestCase):

    def test_strip_check_examples(self):
        self.assertEqual(str(strip_check(SkewShape(P(2, 1), P(1)))), "both(2)")
        self.assertEqual(str(strip_check(SkewShape(P(2)))), "horizontal(2)")
        self.assertEqual(str(strip_check(SkewShape(P(1, 1)))), "vertical(2)")
        self.assertEqual(str(strip_check(SkewShape(P(2, 2)))), "neither")
        self.assertEqual(strip_check(SkewShape(P(3, 1), P(3, 1))).kind, StripKind.BOTH)

    def test_skew_shape_needs_containment(self):
        with self.assertRaises(InvalidShapeError):
            SkewShape(P(1), P(2))

    def test_skew_lengths(self):
        shape = SkewShape(P(3, 2, 2), P(1, 1))
        self.assertEqual(shape.row_lengths(), [2, 1, 2])
        self.assertEqual(shape.column_lengths(), [1, 3, 1])
        self.assertEqual(shape.size, 5)

    def test_vertical_strip_successors(self):
        self.assertEqual(vertical_strip_successors(P(1), 1), [P(2), P(1, 1)])
        self.assertEqual(vertical_strip_successors(P(1), 1, max_rows=1), [P(2)])
        self.assertEqual(vertical_strip_successors(EMPTY, 2), [P(1, 1)])
        for lam in vertical_strip_successors(P(2, 1), 2):
            self.assertTrue(is_vertical_strip(SkewShape(lam, P(2, 1))))
            self.assertEqual(lam.size, 5)

    def test_horizontal_strip_predecessors(self):
        self.assertEqual(horizontal_strip_predecessors(P(2, 1), 1), [P(2), P(1, 1)])
        self.assertEqual(horizontal_strip_predecessors(P(2, 1), 0), [P(2, 1)])
        self.assertEqual(horizontal_strip_predecessors(P(1), 2), [])


class TestDentMaps(TestCase):

    def test_lambda_of_dents(self):
        self.assertEqual(lambda_of_dents((1, 2, 3), 3), EMPTY)
        self.assertEqual(lambda_of_dents((2, 4), 2), P(2, 1))
        self.assertEqual(
            lambda_of_dents((1, 2, 5, 6, 8, 10, 11, 12), 8),
            P(4, 4, 4, 3, 2, 2),
        )

    def test_lambda_of_dents_errors(self):
        with self.assertRaises(InvalidDentSetError):
            lambda_of_dents((2, 1), 2)
        with self.assertRaises(InvalidDentSetError):
            lambda_of_dents((1, 2), 3)
        with self.assertRaises(InvalidDentSetError):
            check_dent_set((0, 1))
        with self.assertRaises(InvalidDentSetError):
            check_dent_set((1, 5), ground=4)

    def test_lambda_min_max(self):
        low, high = lambda_min_max(BlockProfile((2, 0, 2, 1, 3)))
        self.assertEqual(low, P(4, 4, 4, 3, 2, 2))
        self.assertEqual(high, P(5, 5, 5, 4, 3, 3, 1, 1))
        self.assertEqual(lambda_min_max(BlockProfile((1, 1))), (P(1), P(2, 1)))


class TestPartitionsOf(TestCase):

    def test_counts(self):
        self.assertEqual(len(partitions_of(4)), 5)
        self.assertEqual(partitions_of(4, max_rows=2), [P(4), P(3, 1), P(2, 2)])
        self.assertEqual(partitions_of(4, max_part=2), [P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)])
        self.assertEqual(partitions_of(0), [EMPTY])

    def test_up_to(self):
        self.assertEqual(len(list(iter_partitions_up_to(3))), 1 + 1 + 2 + 3)


class TestDentSetPartitions(TestCase):

    @staticmethod
    def profiles(limit: int):
        for n in range(1, limit):
            for total in range(0, limit - n + 1):
                yield from compositions(total, n)

    def test_lambda_between_extremes(self):
        for profile in self.profiles(8):
            m = profile.total
            low, high = lambda_min_max(profile)
            p_min, _ = extremal_dents(profile)
            self.assertEqual(lambda_of_dents(p_min, m), low, str(profile))
            for dents in right_dent_sets(profile, m + profile.n):
                lam = lambda_of_dents(dents, m)
                self.assertTrue(contains(low, lam), f"{profile} {dents}")
                self.assertTrue(contains(lam, high), f"{profile} {dents}")
                strip = SkewShape(lam, low)
                self.assertTrue(is_vertical_strip(strip), f"{profile} {dents}")
                self.assertEqual(strip.size, dent_distance(dents, p_min))

    def test_lambda_injective(self):
        for profile in self.profiles(8):
            sets = right_dent_sets(profile, profile.total + profile.n)
            shapes = {lambda_of_dents(dents, profile.total) for dents in sets}
            self.assertEqual(len(shapes), len(sets), str(profile))

    def test_vertical_strip_successors_exhaustive(self):
        self.assertEqual(vertical_strip_successors(P(1, 1), 2, 2), [P(2, 2)])
        for base in iter_partitions_up_to(4):
            for size in range(0, 4):
                for max_rows in (None, 2, 4):
                    rows = len(base) + size if max_rows is None else max_rows
                    brute = {
                        lam for lam in partitions_of(base.size + size, max_rows=rows)
                        if contains(base, lam) and is_vertical_strip(SkewShape(lam, base))
                    }
                    found = vertical_strip_successors(base, size, max_rows)
                    self.assertEqual(len(found), len(set(found)))
                    self.assertEqual(set(found), brute, f"{base} + {size}, rows {max_rows}")
