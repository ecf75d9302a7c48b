import random
from math import comb
from unittest import TestCase

from blocksym.exactalg import *
from blocksym.exceptions import InvalidParameterError, RingError

q = MPoly.var_q()
t = MPoly.var_t()
x1 = MPoly.var_x(1)
x2 = MPoly.var_x(2)
x3 = MPoly.var_x(3)


class TestMonomial(TestCase):

    def test_canonical_trim(self):
        self.assertEqual(Monomial.make(x=(1, 0, 0)), Monomial(0, 0, (1,)))
        self.assertEqual(Monomial.make(x={3: 2, 1: 0}).x, (0, 0, 2))
        self.assertEqual(Monomial.make(x={3: 2}).x_exps, {3: 2})

    def test_graded_lex_order(self):
        lo = Monomial.make(q=5)
        hi = Monomial.make(t=1, x={1: 5})
        self.assertLess(lo, hi)
        self.assertLess(Monomial.make(t=2), Monomial.make(q=1, t=1))
        self.assertGreater(Monomial.make(x={1: 1}), Monomial.make(x={2: 1}))

    def test_negative_exponent(self):
        with self.assertRaises(InvalidParameterError):
            Monomial.make(q=-1)


class TestMPoly(TestCase):

    def test_arith_examples(self):
        self.assertEqual(mpoly_arith(1 + t, 1 + q * t, 'mul'), 1 + t + q * t + q * t ** 2)
        p = 3 * x1 * x2 - q
        self.assertEqual(mpoly_arith(p, ZERO, 'add'), p)
        self.assertEqual(mpoly_arith(1 + q, 1 - q, 'mul'), 1 - q ** 2)
        self.assertEqual(mpoly_arith(p, p, 'sub'), ZERO)

    def test_no_zero_terms(self):
        p = (1 + q) - q
        self.assertEqual(len(p), 1)
        self.assertEqual(p, 1)
        self.assertTrue((q - q).is_zero())

    def test_ring_laws_random(self):
        rng = random.Random(7)
        gens = [q, t, x1, x2, x3]

        def rand_poly():
            p = ZERO
            for _ in range(rng.randint(0, 4)):
                term = MPoly.const(rng.randint(-3, 3))
                for _ in range(rng.randint(0, 3)):
                    term = term * rng.choice(gens)
                p = p + term
            return p

        for _ in range(30):
            a, b, c = rand_poly(), rand_poly(), rand_poly()
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)

    def test_substitute_qt(self):
        self.assertEqual(mpoly_substitute_qt(x1), t)
        self.assertEqual(mpoly_substitute_qt(x3), q ** 2 * t)
        self.assertEqual(mpoly_substitute_qt(x1 * x2 + x2), q * t ** 2 + q * t)

    def test_specialize_and_evaluate(self):
        p = (1 + t) * (1 + q * t)
        self.assertEqual(p.evaluate(), 4)
        self.assertEqual(p.specialize(t=1), 2 + 2 * q)
        self.assertEqual((x1 + x2 ** 2).specialize(x={2: 3}), x1 + 9)
        self.assertEqual(p.t_to_q(), (1 + q) * (1 + q ** 2))
        self.assertEqual((1 + q).q_to_power(2), 1 + q ** 2)
        self.assertEqual((x1 ** 2 * x2).swap_x(1, 2), x1 * x2 ** 2)

    def test_exact_div(self):
        a = (1 + t) * (1 + q * t) * (x1 - x2)
        self.assertEqual(a.exact_div(x1 - x2), (1 + t) * (1 + q * t))
        with self.assertRaises(RingError):
            (1 + q).exact_div(1 + t)
        with self.assertRaises(RingError):
            q.exact_div(ZERO)

    def test_canonical_text(self):
        self.assertEqual(str(q * t ** 2 + q * t + t + 1), "q*t^2 + q*t + t + 1")
        self.assertEqual(str(ZERO), "0")
        self.assertEqual(str(1 - q ** 2), "-q^2 + 1")
        self.assertEqual(str(2 * x1 * x3 - 3), "2*x1*x3 - 3")

    def test_parse_round_trip(self):
        for p in (ZERO, ONE, 1 - q ** 2, q * t ** 2 + 5 * x1 * x2 ** 3 - 7 * x3):
            self.assertEqual(MPoly.parse(str(p)), p)
        self.assertEqual(MPoly.parse("t + t + q*q"), 2 * t + q ** 2)
        with self.assertRaises(InvalidParameterError):
            MPoly.parse("y + 1")

    def test_json_round_trip(self):
        p = 12345678901234567890 * q * x2 - t
        data = p.to_json()
        self.assertEqual(data[0]["coeff"], "12345678901234567890")
        self.assertEqual(MPoly.from_json(data), p)
        self.assertEqual(MPoly.from_json([{"coeff": "2", "x": {"1": 1}}]), 2 * x1)


class TestQCalculus(TestCase):

    def test_q_int_and_factorial(self):
        self.assertEqual(q_int(3), 1 + q + q ** 2)
        self.assertEqual(q_int(0), ZERO)
        self.assertEqual(q_factorial(0), ONE)
        self.assertEqual(q_factorial(3), 1 + 2 * q + 2 * q ** 2 + q ** 3)
        with self.assertRaises(InvalidParameterError):
            q_factorial(-1)

    def test_q_binomial_examples(self):
        self.assertEqual(q_binomial(3, 1), 1 + q + q ** 2)
        self.assertEqual(q_binomial(4, 2), 1 + q + 2 * q ** 2 + q ** 3 + q ** 4)
        self.assertEqual(q_binomial(2, 3), ZERO)
        self.assertEqual(q_binomial(-1, 0), ZERO)

    def test_q_binomial_at_one(self):
        for n in range(13):
            for k in range(n + 1):
                self.assertEqual(q_binomial(n, k).evaluate(), comb(n, k))

    def test_q_binomial_theorem(self):
        for m in range(9):
            lhs = sum((q ** (k * (k - 1) // 2) * t ** k * q_binomial(m, k) for k in range(m + 1)), ZERO)
            rhs = ONE
            for i in range(1, m + 1):
                rhs = rhs * (1 + q ** (i - 1) * t)
            self.assertEqual(lhs, rhs)

    def test_cyclotomic(self):
        self.assertEqual(cyclotomic(2), 1 + q)
        self.assertEqual(cyclotomic(4), 1 + q ** 2)
        self.assertEqual(cyclotomic(6), 1 - q + q ** 2)
        for k in range(2, 16):
            prod = ONE
            for d in range(2, k + 1):
                if k % d == 0:
                    prod = prod * cyclotomic(d)
            self.assertEqual(prod, q_int(k))

    def test_qratio(self):
        self.assertEqual(QRatio().mul_qint(4).div_qint(2).to_mpoly(), 1 + q ** 2)
        binom = QRatio().mul_qfactorial(6).div_qfactorial(3).div_qfactorial(3)
        self.assertEqual(binom.to_mpoly(), q_binomial(6, 3))
        self.assertEqual(binom.at_one(), 20)
        self.assertEqual(binom.to_mpoly(base=2), q_binomial(6, 3).q_to_power(2))
        self.assertEqual(QRatio().mul_qint(0).to_mpoly(), ZERO)
        with self.assertRaises(RingError):
            QRatio().div_qint(2).to_mpoly()
        with self.assertRaises(RingError):
            QRatio().mul_qint(3).div_qint(2).at_one()

    def test_qratio_at_one_non_polynomial(self):
        # [4]/[2]^2 is not a polynomial but 4/(2*2) = 1
        ratio = QRatio().mul_qint(4).div_qint(2, power=2)
        self.assertFalse(ratio.is_polynomial())
        self.assertEqual(ratio.at_one(), 1)

    def test_prime_factorization(self):
        self.assertEqual(prime_factorization(12096), {2: 6, 3: 3, 7: 1})
        self.assertEqual(prime_factorization(1), {})
        with self.assertRaises(InvalidParameterError):
            prime_factorization(0)
