from unittest import TestCase

from blocksym.exactalg import MPoly
from blocksym.exceptions import InvalidParameterError, InvalidProfileError
from blocksym.formulas import *
from blocksym.regions import TrapezoidRegion
from blocksym.shapes import BlockProfile, compositions
from blocksym.tilings import enumerate_tilings, signed_block_sum

q = MPoly.var_q()
t = MPoly.var_t()


class TestAlphaBeta(TestCase):

    def test_values(self):
        self.assertEqual(alpha_beta(BlockProfile((1, 1))), AlphaBeta(0, 1))
        self.assertEqual(alpha_beta(BlockProfile((2, 0, 2, 1, 3))), AlphaBeta(39, 19))
        self.assertEqual(alpha_beta(BlockProfile((3,))), AlphaBeta(0, 0))


class TestBlockFormulas(TestCase):

    def test_thm1_r11(self):
        self.assertEqual(thm1_rhs(BlockProfile((1, 1))), t * (1 + q) * (1 + t) * (1 + q * t))

    def test_offdiagonal_counts(self):
        for n in range(1, 7):
            self.assertEqual(cor1_count(BlockProfile((1,) * n)), aztec_count(n))

    def test_doubled_profiles(self):
        self.assertEqual(cor1_count(BlockProfile((2, 2))), 96)
        self.assertEqual(cor1_count(BlockProfile((2, 2, 2))), 12096)
        for n in range(1, 6):
            self.assertEqual(
                cor1_count(BlockProfile((2,) * n)),
                2 ** (2 * n) * 3 ** (n * (n - 1) // 2) * asm_count(n),
            )

    def test_count_is_evaluation(self):
        for total in range(2, 7):
            for m in range(1, total):
                for r in compositions(m, total - m):
                    self.assertEqual(thm1_rhs(r).evaluate(), cor1_count(r), str(r))

    def test_plane_partition_products(self):
        for r in [(1,), (2,), (1, 1), (2, 1), (0, 2, 1), (1, 1, 1)]:
            profile = BlockProfile(r)
            self.assertEqual(thm15_rhs(profile), thm1_rhs(profile).q_to_power(2), str(profile))
            self.assertEqual(cor3_rhs(profile), thm15_rhs(profile).t_to_q(), str(profile))
        self.assertEqual(thm15_rhs(BlockProfile((1,))), 1 + t)
        self.assertEqual(cor3_rhs(BlockProfile((2,))), (1 + q) * (1 + q ** 3))


class TestClassicalFormulas(TestCase):

    def test_macmahon(self):
        self.assertEqual(macmahon_count(1, 1, 1), 2)
        self.assertEqual(macmahon_count(2, 2, 2), 20)
        self.assertEqual(macmahon_count(3, 3, 3), 980)
        self.assertEqual(macmahon_q(1, 1, 1), 1 + q)
        self.assertEqual(macmahon_q(2, 2, 2).evaluate(), 20)
        with self.assertRaises(InvalidParameterError):
            macmahon_count(0, 1, 1)

    def test_symmetric_pp(self):
        self.assertEqual([sym_pp_count(1, 1), sym_pp_count(2, 1), sym_pp_count(2, 2)], [2, 4, 10])
        self.assertEqual(sym_pp_q(1, 1), 1 + q)
        self.assertEqual(sym_pp_q(3, 2).evaluate(), sym_pp_count(3, 2))
        with self.assertRaises(InvalidParameterError):
            sym_pp_q(1, 0)

    def test_asm(self):
        self.assertEqual([asm_count(n) for n in range(1, 6)], [1, 2, 7, 42, 429])
        with self.assertRaises(InvalidParameterError):
            asm_count(0)

    def test_trapezoid_count(self):
        self.assertEqual(trapezoid_count((2, 4), 2), 2)
        self.assertEqual(trapezoid_count((1, 2, 3), 3), 1)
        self.assertEqual(trapezoid_count((1, 3, 5), 3), 8)
        for P, m, height in [((2, 4), 2, 2), ((1, 3, 5), 3, 2), ((1, 4), 2, 3)]:
            self.assertEqual(
                trapezoid_count(P, m),
                len(enumerate_tilings(TrapezoidRegion(height, m, P))),
                str(P),
            )
        with self.assertRaises(InvalidParameterError):
            trapezoid_count((1, 2), 3)

    def test_aztec(self):
        self.assertEqual([aztec_count(n) for n in range(1, 4)], [2, 8, 64])


class TestSignedIdentity(TestCase):

    def test_vanishing_case(self):
        r, rp = BlockProfile((2,)), BlockProfile((1,))
        self.assertFalse(thm2_rhs(r, rp, 1, 1, 1))
        self.assertFalse(signed_block_sum(r, rp, 1, 1, 1))

    def test_r11(self):
        x1 = MPoly.var_x(1)
        r, rp = BlockProfile((1, 1)), BlockProfile((1, 0))
        self.assertEqual(thm2_rhs(r, rp, 1, 2, 1), 1 + x1)
        self.assertEqual(signed_block_sum(r, rp, 1, 2, 1), 1 + x1)

    def test_matches_signed_sum(self):
        for m in range(1, 3):
            for n in range(1, 3):
                for l in range(1, n + 1):
                    rp = BlockProfile.ones(l, n)
                    for r in compositions(m + l, n):
                        self.assertEqual(
                            thm2_rhs(r, rp, m, n, l),
                            signed_block_sum(r, rp, m, n, l),
                            f"r={r}, r'={rp}",
                        )

    def test_rejects_general_left_profile(self):
        with self.assertRaises(InvalidParameterError):
            thm2_rhs(BlockProfile((2, 1)), BlockProfile((0, 1)), 2, 2, 1)

    def test_rejects_wrong_sizes(self):
        with self.assertRaises(InvalidProfileError):
            thm2_rhs(BlockProfile((1, 1)), BlockProfile((1, 0)), 2, 2, 1)
