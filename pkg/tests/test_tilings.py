from unittest import TestCase

from blocksym.exactalg import MPoly, ONE, ZERO
from blocksym.exceptions import InvalidParameterError, InvalidProfileError, SizeLimitError
from blocksym.formulas import sym_pp_count, sym_pp_q, thm1_rhs
from blocksym.regions import HexagonRegion, TrapezoidRegion
from blocksym.schur import skew_schur
from blocksym.shapes import BlockProfile, compositions, lambda_of_dents, mu_of_dents
from blocksym.tilings import *

q = MPoly.var_q()
t = MPoly.var_t()
x1 = MPoly.var_x(1)
x2 = MPoly.var_x(2)


class TestEnumeration(TestCase):

    def test_hexagon_counts(self):
        self.assertEqual(len(enumerate_tilings(HexagonRegion(1, 1, 1))), 2)
        self.assertEqual(len(enumerate_tilings(HexagonRegion(2, 2, 2))), 20)
        self.assertEqual(len(enumerate_tilings(HexagonRegion(1, 2, 3))), 10)

    def test_tilings_cover_region(self):
        region = HexagonRegion(2, 2, 2)
        tilings = enumerate_tilings(region)
        self.assertEqual(len(set(tilings)), len(tilings))
        for tiling in tilings:
            self.assertTrue(tiling.covers(region))
            self.assertEqual(len(tiling), 12)

    def test_orientation_counts_fixed(self):
        # every tiling of H(a,b,c) uses the same number of each orientation
        for tiling in enumerate_tilings(HexagonRegion(2, 1, 2)):
            counts = {o: 0 for o in Orientation}
            for loz in tiling.lozenges:
                counts[loz.orientation] += 1
            self.assertEqual(sorted(counts.values()), [2, 2, 4])

    def test_single_lozenge_trapezoids(self):
        [tiling] = enumerate_tilings(TrapezoidRegion(1, 1, (2,)))
        [loz] = tiling.lozenges
        self.assertIs(loz.orientation, Orientation.NEGATIVE)
        self.assertEqual(tiling_weight_x(tiling, TrapezoidRegion(1, 1, (2,))), x1)
        [tiling] = enumerate_tilings(TrapezoidRegion(1, 1, (1,)))
        self.assertIs(tiling.lozenges[0].orientation, Orientation.POSITIVE)
        self.assertEqual(tiling_weight_x(tiling, TrapezoidRegion(1, 1, (1,))), ONE)

    def test_untileable(self):
        self.assertEqual(enumerate_tilings(TrapezoidRegion(2, 1, (1, 2), (2,))), [])
        self.assertEqual(weighted_region_sum(TrapezoidRegion(2, 1, (1, 2), (2,))), ZERO)

    def test_negatives_match_partition_size(self):
        region = TrapezoidRegion(2, 3, (1, 3, 5))
        size = lambda_of_dents(region.right_dents, 3).size
        for tiling in enumerate_tilings(region):
            self.assertEqual(len(tiling.negatives()), size)

    def test_size_limit(self):
        with self.assertRaises(SizeLimitError):
            enumerate_tilings(HexagonRegion(2, 2, 2), limit=19)
        self.assertEqual(len(enumerate_tilings(HexagonRegion(2, 2, 2), limit=None)), 20)

    def test_estimates(self):
        self.assertEqual(estimate_tiling_count(HexagonRegion(3, 3, 3)), 980)
        self.assertEqual(estimate_tiling_count(TrapezoidRegion(2, 2, (2, 4))), 2)
        self.assertEqual(estimate_tiling_count(TrapezoidRegion(2, 1, (1, 2), (2,))), 0)
        region = TrapezoidRegion(3, 2, (1, 3, 5), (2,))
        self.assertEqual(estimate_tiling_count(region), len(enumerate_tilings(region)))


class TestWeights(TestCase):

    def test_trapezoid_weights(self):
        region = TrapezoidRegion(2, 2, (2, 4))
        self.assertEqual(weighted_region_sum(region, 'x'), x1 ** 2 * x2 + x1 * x2 ** 2)
        self.assertEqual(weighted_region_sum(region, 'qt'), q * t ** 3 * (1 + q))

    def test_weight_sum_matches_tilings(self):
        region = TrapezoidRegion(3, 2, (1, 3, 5), (2,))
        by_tiling = sum((tiling_weight_x(tl, region) for tl in enumerate_tilings(region)), ZERO)
        self.assertEqual(weighted_region_sum(region), by_tiling)

    def test_bad_weight(self):
        with self.assertRaises(InvalidParameterError):
            weighted_region_sum(TrapezoidRegion(1, 1, (2,)), 'numeric')

    def test_ayyer_fischer_small(self):
        for height, m, P, Pp in [
            (2, 1, (1, 3), (1,)),
            (2, 1, (1, 3), (2,)),
            (2, 2, (1, 2, 4), (2,)),
            (3, 2, (2, 3, 5), (1,)),
            (3, 2, (1, 2, 4, 5), (1, 3)),
        ]:
            region = TrapezoidRegion(height, m, P, Pp)
            expected = skew_schur(lambda_of_dents(P, len(P)), mu_of_dents(Pp, len(Pp)), m)
            self.assertEqual(weighted_region_sum(region), expected, str(region))


class TestBlockSums(TestCase):

    def test_r11(self):
        total = block_symmetric_sum(BlockProfile((1, 1)), 2, 2)
        self.assertEqual(total, t * (1 + q) * (1 + t) * (1 + q * t))
        self.assertEqual(total.evaluate(), 8)

    def test_offdiagonal_count(self):
        self.assertEqual(block_symmetric_sum(BlockProfile((1, 1, 1)), 3, 3).evaluate(), 64)

    def test_matches_product_formula(self):
        for m in range(1, 4):
            for n in range(1, 5 - m):
                for r in compositions(m, n):
                    self.assertEqual(block_symmetric_sum(r, m, n), thm1_rhs(r), str(r))

    def test_profile_must_fit(self):
        with self.assertRaises(InvalidProfileError):
            block_symmetric_sum(BlockProfile((1, 1)), 3, 2)

    def test_all_dents_sum(self):
        for m, n in [(1, 1), (2, 1), (2, 2), (3, 1)]:
            total = all_dents_sum(m, n, 'qt')
            self.assertEqual(total.evaluate(), sym_pp_count(m, n))
            self.assertEqual(total.t_to_q(), sym_pp_q(m, n))

    def test_pair_sums(self):
        r, rp = BlockProfile((2,)), BlockProfile((1,))
        self.assertEqual(block_pair_sum(r, rp, 1, 1, 1), 2 + 2 * x1)
        self.assertEqual(signed_block_sum(r, rp, 1, 1, 1), ZERO)

    def test_pair_profile_must_fit(self):
        with self.assertRaises(InvalidProfileError):
            signed_block_sum(BlockProfile((1,)), BlockProfile((1,)), 1, 1, 1)


class TestSymmetricHexagon(TestCase):

    def test_counts(self):
        self.assertEqual(enumerate_symmetric_hexagon(BlockProfile((1, 1)), 2, 2).count, 8)
        self.assertEqual(enumerate_symmetric_hexagon(BlockProfile((2, 0)), 2, 2).count, 4)
        self.assertEqual(enumerate_symmetric_hexagon(BlockProfile((1, 1, 1)), 3, 3).count, 64)

    def test_genfun_matches_trapezoids(self):
        for r in [(1, 1), (2, 0), (0, 2), (2, 1), (1, 0, 1)]:
            profile = BlockProfile(r)
            m, n = profile.total, profile.n
            result = enumerate_symmetric_hexagon(profile, m, n)
            self.assertEqual(result.genfun, block_symmetric_sum(profile, m, n), str(profile))
            self.assertEqual(result.count, result.genfun.evaluate())

    def test_mirror_symmetry_predicate(self):
        tilings = enumerate_tilings(HexagonRegion(2, 2, 1))
        symmetric = [tl for tl in tilings if is_mirror_symmetric(tl, 2)]
        self.assertEqual(len(symmetric), sym_pp_count(2, 1))

    def test_estimate_is_symmetric_pp_count(self):
        for m in range(1, 5):
            for n in range(1, 5):
                self.assertEqual(symmetric_hexagon_estimate(m, n), sym_pp_count(m, n))
        self.assertEqual(symmetric_hexagon_estimate(16, 4), sym_pp_count(16, 4))

    def test_refuses_large_hexagons(self):
        with self.assertRaises(SizeLimitError) as ctx:
            enumerate_symmetric_hexagon(BlockProfile((4, 4, 4, 4)), 16, 4)
        self.assertEqual(ctx.exception.estimate, sym_pp_count(16, 4))
        self.assertEqual(ctx.exception.limit, MAX_TILINGS)
        self.assertEqual(ctx.exception.flag, "--r")

    def test_limit_is_configurable(self):
        with self.assertRaises(SizeLimitError):
            enumerate_symmetric_hexagon(BlockProfile((1, 1)), 2, 2, limit=9)
        self.assertEqual(enumerate_symmetric_hexagon(BlockProfile((1, 1)), 2, 2, limit=10).count, 8)
        self.assertEqual(enumerate_symmetric_hexagon(BlockProfile((1, 1)), 2, 2, limit=None).count, 8)
