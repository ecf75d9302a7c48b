"""
Exact polynomial arithmetic in q, t and x_1, x_2, ... with integer coefficients,
and the q-calculus primitives built on it.

Python integers are already arbitrary precision, so coefficients are plain
``int`` values. Polynomials are sparse maps from monomials to non-zero
coefficients, ordered graded-lexicographically on
(total degree, q, t, x_1, x_2, ...).

Classes:
    Monomial: An exponent vector in q, t and the x variables.
    MPoly: An immutable sparse polynomial with integer coefficients.
    TermModel: JSON schema of one polynomial term.
    QRatio: A product/quotient of q-integers and q-factorials with exact cancellation.

Functions:
    mpoly_arith: Adds, subtracts or multiplies two polynomials.
    mpoly_substitute_qt: Replaces every x_k by q^(k-1)*t.
    q_int: The q-integer [k]_q.
    q_factorial: The q-factorial [k]_q!.
    q_binomial: The q-binomial coefficient, by the Pascal-type recurrence.
    cyclotomic: The cyclotomic polynomial Phi_d(q).
    prime_factorization: Prime factorisation of a positive integer.
    int_det: Fraction-free determinant of an integer matrix.
"""

import re
from collections import Counter
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Iterable, Literal, Mapping, NamedTuple, Optional, Union

from pydantic import BaseModel, conint, field_validator
from typing_extensions import Dict, List, Tuple

from blocksym.exceptions import InvalidParameterError, RingError


class Monomial(NamedTuple):
    """
    Exponents of q, t and x_1, x_2, ...

    ``x`` is the dense exponent tuple (x_1, x_2, ...) with trailing zeros
    trimmed, so every monomial has exactly one representation. Comparisons
    use the graded-lexicographic key, not plain tuple order.
    """
    q: int = 0
    t: int = 0
    x: Tuple[int, ...] = ()

    @classmethod
    def make(cls, q: int = 0, t: int = 0, x: Union[Mapping[int, int], Iterable[int]] = ()) -> 'Monomial':
        """
        Builds a monomial from exponents.

        Args:
            q (int): Exponent of q.
            t (int): Exponent of t.
            x (Mapping[int, int] | Iterable[int]): Either ``{index: exp}`` with
                1-based indices, or the dense exponent sequence (x_1, x_2, ...).

        Returns:
            Monomial: The canonical monomial.

        Raises:
            InvalidParameterError: On negative exponents or non-positive indices.
        """
        if isinstance(x, Mapping):
            size = max((i for i, e in x.items() if e), default=0)
            dense = [0] * size
            for i, e in x.items():
                if i < 1:
                    raise InvalidParameterError(f"x index must be positive, got {i}")
                if e:
                    dense[i - 1] = e
        else:
            dense = list(x)
        while dense and dense[-1] == 0:
            dense.pop()
        if q < 0 or t < 0 or any(e < 0 for e in dense):
            raise InvalidParameterError("monomial exponents must be non-negative")
        return cls(q, t, tuple(dense))

    @property
    def x_exps(self) -> Dict[int, int]:
        """``{index: exp}`` for the x variables, without zero exponents."""
        return {i + 1: e for i, e in enumerate(self.x) if e}

    @property
    def degree(self) -> int:
        return self.q + self.t + sum(self.x)

    @property
    def x_degree(self) -> int:
        return sum(self.x)

    def sort_key(self):
        return self.degree, self.q, self.t, self.x

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()

    def times(self, other: 'Monomial') -> 'Monomial':
        """Product of two monomials (``*`` on a tuple would repeat it)."""
        ax, bx = self.x, other.x
        if len(ax) < len(bx):
            ax, bx = bx, ax
        nb = len(bx)
        return Monomial(self.q + other.q, self.t + other.t,
                        tuple(e + bx[i] if i < nb else e for i, e in enumerate(ax)))

    def divides(self, other: 'Monomial') -> bool:
        if self.q > other.q or self.t > other.t or len(self.x) > len(other.x):
            return False
        return all(e <= other.x[i] for i, e in enumerate(self.x))

    def quotient(self, other: 'Monomial') -> 'Monomial':
        """``self / other``; the caller guarantees ``other.divides(self)``."""
        x = [e - (other.x[i] if i < len(other.x) else 0) for i, e in enumerate(self.x)]
        return Monomial.make(self.q - other.q, self.t - other.t, x)

    def __str__(self):
        parts = []
        for name, e in (("q", self.q), ("t", self.t)):
            if e:
                parts.append(name if e == 1 else f"{name}^{e}")
        for i, e in enumerate(self.x):
            if e:
                parts.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
        return "*".join(parts)


ONE_MONOMIAL = Monomial()

Scalar = int
PolyLike = Union['MPoly', int]

_FACTOR_RE = re.compile(r"^(q|t|x(\d+))(?:\^(\d+))?$")
_TERM_RE = re.compile(r"([+-]?)([^+-]+)")


class TermModel(BaseModel):
    """
    One term of the JSON form: ``{"coeff": "-3", "q": 1, "t": 0, "x": {"2": 1}}``.
    """
    coeff: str
    q: conint(ge=0) = 0
    t: conint(ge=0) = 0
    x: Dict[int, conint(gt=0)] = {}

    @field_validator('coeff', mode='before')
    def validate_coeff(cls, value):
        if isinstance(value, int):
            value = str(value)
        if not isinstance(value, str) or not re.fullmatch(r"-?\d+", value.strip()):
            raise ValueError("coeff must be a decimal integer string")
        return value.strip()

    @field_validator('x', mode='before')
    def validate_x(cls, value):
        if value is None:
            return {}
        for key in value:
            if int(key) < 1:
                raise ValueError("x indices are 1-based")
        return value


class MPoly:
    """
    Immutable sparse polynomial in q, t, x_1, x_2, ... with integer coefficients.

    No stored coefficient is zero, so two polynomials are equal exactly when
    their term maps are equal. Integers are accepted wherever a polynomial is
    expected in arithmetic.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> 'MPoly':
        # takes ownership; caller has already dropped zero coefficients
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def const(cls, c: int) -> 'MPoly':
        return cls._wrap({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def monomial(cls, coeff: int = 1, q: int = 0, t: int = 0,
                 x: Union[Mapping[int, int], Iterable[int]] = ()) -> 'MPoly':
        return cls({Monomial.make(q, t, x): coeff})

    @classmethod
    def var_q(cls, exp: int = 1) -> 'MPoly':
        return cls.monomial(q=exp)

    @classmethod
    def var_t(cls, exp: int = 1) -> 'MPoly':
        return cls.monomial(t=exp)

    @classmethod
    def var_x(cls, index: int, exp: int = 1) -> 'MPoly':
        return cls.monomial(x={index: exp})

    @classmethod
    def from_exponent_counts(cls, counts: Mapping[Tuple[int, ...], int], variable: Literal['x', 'q'] = 'x') -> 'MPoly':
        """
        Builds a polynomial from ``{dense exponent tuple: coefficient}``.

        Args:
            counts: Keys are dense x exponent tuples (``variable='x'``) or
                single q exponents wrapped in a 1-tuple (``variable='q'``).
            variable: Which variables the keys describe.

        Returns:
            MPoly: The collected polynomial.
        """
        terms = {}
        for key, c in counts.items():
            if not c:
                continue
            if variable == 'x':
                mono = Monomial.make(0, 0, key)
            else:
                mono = Monomial(key[0], 0, ())
            terms[mono] = terms.get(mono, 0) + c
        return cls(terms)

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONOMIAL in self._terms)

    def constant(self) -> int:
        """
        Returns:
            int: The coefficient of the constant monomial.
        """
        return self._terms.get(ONE_MONOMIAL, 0)

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def __int__(self):
        if not self.is_constant():
            raise RingError(f"polynomial {self} is not a constant")
        return self.constant()

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key(), reverse=True)

    def leading_term(self) -> Tuple[Monomial, int]:
        if not self._terms:
            raise RingError("the zero polynomial has no leading term")
        mono = max(self._terms, key=Monomial.sort_key)
        return mono, self._terms[mono]

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def x_degrees(self) -> set:
        """The set of total x-degrees over all terms."""
        return {m.x_degree for m in self._terms}

    def max_x_index(self) -> int:
        return max((len(m.x) for m in self._terms), default=0)

    @staticmethod
    def _coerce(other) -> Optional['MPoly']:
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return MPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        terms = dict(big)
        for m, c in small.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return MPoly._wrap(terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MPoly._wrap({})
            return MPoly._wrap({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1.times(m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return MPoly._wrap({m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InvalidParameterError("only non-negative integer powers are supported")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def exact_div(self, divisor: 'MPoly') -> 'MPoly':
        """
        Divides by ``divisor`` when the quotient is a polynomial.

        Leading terms are cancelled one at a time in graded-lex order, which
        is a monomial order, so an exact quotient is always found this way.

        Args:
            divisor (MPoly): A non-zero polynomial.

        Returns:
            MPoly: The quotient.

        Raises:
            RingError: If ``divisor`` is zero or does not divide ``self``.
        """
        divisor = self._coerce(divisor)
        if not divisor:
            raise RingError("division by the zero polynomial")
        lead_m, lead_c = divisor.leading_term()
        remainder = self
        quotient = {}
        while remainder:
            m, c = remainder.leading_term()
            if not lead_m.divides(m) or c % lead_c:
                raise RingError(f"inexact division of {self} by {divisor}")
            qm, qc = m.quotient(lead_m), c // lead_c
            quotient[qm] = quotient.get(qm, 0) + qc
            remainder = remainder - MPoly._wrap({qm: qc}) * divisor
        return MPoly(quotient)

    def map_monomials(self, fn: Callable[[Monomial], Tuple[int, Monomial]]) -> 'MPoly':
        """
        Applies a monomial substitution.

        Args:
            fn: Maps each monomial to ``(multiplier, new monomial)``.

        Returns:
            MPoly: The collected result.
        """
        terms = {}
        for m, c in self._terms.items():
            mult, new = fn(m)
            if mult:
                terms[new] = terms.get(new, 0) + c * mult
        return MPoly(terms)

    def substitute_qt(self) -> 'MPoly':
        """Replaces every x_k by q^(k-1)*t."""
        def sub(m: Monomial):
            return 1, Monomial(m.q + sum(i * e for i, e in enumerate(m.x)), m.t + sum(m.x), ())

        return self.map_monomials(sub)

    def q_to_power(self, k: int) -> 'MPoly':
        """Replaces q by q^k."""
        return self.map_monomials(lambda m: (1, Monomial(m.q * k, m.t, m.x)))

    def t_to_q(self) -> 'MPoly':
        """Replaces t by q."""
        return self.map_monomials(lambda m: (1, Monomial(m.q + m.t, 0, m.x)))

    def swap_x(self, i: int, j: int) -> 'MPoly':
        """Exchanges x_i and x_j."""
        def sub(m: Monomial):
            dense = list(m.x) + [0] * max(0, max(i, j) - len(m.x))
            dense[i - 1], dense[j - 1] = dense[j - 1], dense[i - 1]
            return 1, Monomial.make(m.q, m.t, dense)

        return self.map_monomials(sub)

    def specialize(self, q: Optional[int] = None, t: Optional[int] = None,
                   x: Union[None, int, Mapping[int, int]] = None) -> 'MPoly':
        """
        Substitutes integers for some variables.

        Args:
            q (int | None): Value for q, or None to keep q.
            t (int | None): Value for t, or None to keep t.
            x (int | Mapping[int, int] | None): One value for every x variable,
                or ``{index: value}`` for some of them, or None.

        Returns:
            MPoly: The partially evaluated polynomial.
        """
        def sub(m: Monomial):
            mult = 1
            nq, nt = m.q, m.t
            if q is not None:
                mult *= q ** m.q
                nq = 0
            if t is not None:
                mult *= t ** m.t
                nt = 0
            dense = list(m.x)
            if x is not None:
                for i, e in enumerate(dense):
                    if not e:
                        continue
                    if isinstance(x, int):
                        value = x
                    elif (i + 1) in x:
                        value = x[i + 1]
                    else:
                        continue
                    mult *= value ** e
                    dense[i] = 0
            return mult, Monomial.make(nq, nt, dense)

        return self.map_monomials(sub)

    def evaluate(self, q: int = 1, t: int = 1, x: Union[int, Mapping[int, int]] = 1) -> int:
        """Evaluates every variable; x defaults to 1 for all indices."""
        return int(self.specialize(q, t, x))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for n, (m, c) in enumerate(self.sorted_terms()):
            body = str(m)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if n == 0:
                out.append(f"-{text}" if c < 0 else text)
            else:
                out.append(f" - {text}" if c < 0 else f" + {text}")
        return "".join(out)

    def __repr__(self):
        return f"MPoly('{self}')"

    @classmethod
    def parse(cls, text: str) -> 'MPoly':
        """
        Parses the canonical text form, e.g. ``q*t^2 + 2*x1*x3 - 1``.

        Terms may come in any order and repeat; the result is collected.

        Raises:
            InvalidParameterError: If the text is not a polynomial in q, t, x<k>.
        """
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise InvalidParameterError("empty polynomial text")
        if compact == "0":
            return ZERO
        pos = 0
        terms = {}
        for match in _TERM_RE.finditer(compact):
            if match.start() != pos or (match.group(1) == "" and pos != 0):
                raise InvalidParameterError(f"cannot parse polynomial {text!r}")
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            coeff, q, t, x = 1, 0, 0, {}
            for factor in match.group(2).split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                fm = _FACTOR_RE.match(factor)
                if not fm:
                    raise InvalidParameterError(f"cannot parse factor {factor!r} in {text!r}")
                exp = int(fm.group(3)) if fm.group(3) else 1
                if fm.group(1) == "q":
                    q += exp
                elif fm.group(1) == "t":
                    t += exp
                else:
                    index = int(fm.group(2))
                    x[index] = x.get(index, 0) + exp
            mono = Monomial.make(q, t, x)
            terms[mono] = terms.get(mono, 0) + sign * coeff
        if pos != len(compact):
            raise InvalidParameterError(f"cannot parse polynomial {text!r}")
        return cls(terms)

    def to_json(self) -> List[dict]:
        """
        Returns:
            list[dict]: Terms in descending order, in the JSON term schema.
        """
        return [
            TermModel(coeff=str(c), q=m.q, t=m.t, x=m.x_exps).model_dump(mode='json')
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: List[dict]) -> 'MPoly':
        terms = {}
        for item in data:
            term = TermModel.model_validate(item)
            mono = Monomial.make(term.q, term.t, term.x)
            terms[mono] = terms.get(mono, 0) + int(term.coeff)
        return cls(terms)


ZERO = MPoly()
ONE = MPoly.const(1)


def mpoly_arith(a: PolyLike, b: PolyLike, op: Literal['add', 'sub', 'mul']) -> MPoly:
    """
    Exact ring operation on two polynomials.

    Args:
        a (MPoly | int): Left operand.
        b (MPoly | int): Right operand.
        op (str): 'add', 'sub' or 'mul'.

    Returns:
        MPoly: The result in canonical form.
    """
    a = MPoly._coerce(a)
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise InvalidParameterError(f"unknown operation {op!r}")


def mpoly_substitute_qt(p: MPoly) -> MPoly:
    """Replaces x_k by q^(k-1)*t in a polynomial in the x variables."""
    return p.substitute_qt()


@lru_cache(maxsize=None)
def q_int(k: int) -> MPoly:
    """
    The q-integer [k]_q = 1 + q + ... + q^(k-1); zero for k <= 0.
    """
    if k <= 0:
        return ZERO
    return MPoly({Monomial(i, 0, ()): 1 for i in range(k)})


@lru_cache(maxsize=None)
def q_factorial(k: int) -> MPoly:
    """
    The q-factorial [k]_q! = [k]_q [k-1]_q ... [1]_q, with [0]_q! = 1.

    Raises:
        InvalidParameterError: If ``k`` is negative.
    """
    if k < 0:
        raise InvalidParameterError(f"q-factorial of a negative number ({k})")
    if k == 0:
        return ONE
    return q_factorial(k - 1) * q_int(k)


@lru_cache(maxsize=None)
def _q_pascal_row(n: int) -> Tuple[MPoly, ...]:
    if n == 0:
        return (ONE,)
    prev = _q_pascal_row(n - 1)
    row = [ONE]
    for k in range(1, n):
        # [n k] = [n-1 k] + q^(n-k) [n-1 k-1]
        row.append(prev[k] + MPoly.var_q(n - k) * prev[k - 1])
    row.append(ONE)
    return tuple(row)


def q_binomial(n: int, k: int) -> MPoly:
    """
    The q-binomial coefficient [n choose k]_q.

    Built row by row from [n k] = [n-1 k] + q^(n-k) [n-1 k-1], so no
    polynomial division is involved.

    Args:
        n (int): Upper index.
        k (int): Lower index.

    Returns:
        MPoly: The coefficient, or zero unless n >= k >= 0.
    """
    if not n >= k >= 0:
        return ZERO
    if n > 0:
        # fill the cache bottom-up so deep rows never recurse far
        for i in range(n):
            _q_pascal_row(i)
    return _q_pascal_row(n)[k]


def prime_factorization(n: int) -> Dict[int, int]:
    """
    Args:
        n (int): A positive integer.

    Returns:
        dict[int, int]: ``{prime: exponent}`` in increasing prime order.
    """
    if n < 1:
        raise InvalidParameterError(f"cannot factor {n}")
    factors = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def int_det(rows: List[List[int]]) -> int:
    """
    Determinant of an integer matrix by fraction-free (Bareiss) elimination.

    Every division is exact, so only integers ever appear.
    """
    a = [list(row) for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _mobius(n: int) -> int:
    factors = prime_factorization(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def _totient(n: int) -> int:
    result = n
    for p in prime_factorization(n):
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(d: int) -> Tuple[int, ...]:
    # Phi_d = prod_{e | d} (1 - q^e)^mu(d/e) as a power series cut at deg phi(d)
    degree = _totient(d)
    coeffs = [1] + [0] * degree
    for e in _divisors(d):
        mu = _mobius(d // e)
        if mu == 1:
            for i in range(degree, e - 1, -1):
                coeffs[i] -= coeffs[i - e]
        elif mu == -1:
            for i in range(e, degree + 1):
                coeffs[i] += coeffs[i - e]
    return tuple(coeffs)


def cyclotomic(d: int) -> MPoly:
    """
    The cyclotomic polynomial Phi_d(q) for d >= 2.

    Computed from the Moebius product with truncated geometric series, which
    needs no polynomial division.
    """
    if d < 2:
        raise InvalidParameterError(f"Phi_{d} is not used here")
    return MPoly({Monomial(i, 0, ()): c for i, c in enumerate(_cyclotomic_coeffs(d)) if c})


def _coeff_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


class QRatio:
    """
    A product of q-integers and q-factorials divided by another such product.

    Every [k]_q is stored as its cyclotomic factors Phi_d(q), d | k, d > 1,
    so numerator and denominator cancel as multisets. The ratio is a
    polynomial exactly when no factor is left in the denominator, and only
    then can it be expanded.

    Example:
        >>> QRatio().mul_qint(4).div_qint(2).to_mpoly()
        MPoly('q^2 + 1')
    """

    def __init__(self):
        self._phi = Counter()
        self._q_shift = 0
        self._vanishes = False

    def _add_qint(self, k: int, sign: int) -> None:
        for d in _divisors(k):
            if d > 1:
                self._phi[d] += sign

    def mul_qint(self, k: int, power: int = 1) -> 'QRatio':
        """Multiplies by [k]_q^power; [0]_q makes the whole ratio vanish."""
        if k < 0:
            raise InvalidParameterError(f"negative q-integer [{k}]_q")
        if k == 0:
            self._vanishes = True
            return self
        self._add_qint(k, power)
        return self

    def div_qint(self, k: int, power: int = 1) -> 'QRatio':
        if k <= 0:
            raise RingError(f"division by [{k}]_q")
        self._add_qint(k, -power)
        return self

    def mul_qfactorial(self, k: int) -> 'QRatio':
        if k < 0:
            raise InvalidParameterError(f"q-factorial of a negative number ({k})")
        for i in range(2, k + 1):
            self._add_qint(i, 1)
        return self

    def div_qfactorial(self, k: int) -> 'QRatio':
        if k < 0:
            raise InvalidParameterError(f"q-factorial of a negative number ({k})")
        for i in range(2, k + 1):
            self._add_qint(i, -1)
        return self

    def mul_qpower(self, e: int) -> 'QRatio':
        self._q_shift += e
        return self

    @property
    def q_shift(self) -> int:
        return self._q_shift

    def is_polynomial(self) -> bool:
        return self._vanishes or (self._q_shift >= 0 and all(e >= 0 for e in self._phi.values()))

    def to_mpoly(self, base: int = 1) -> MPoly:
        """
        Expands the ratio with q replaced by q^base.

        Raises:
            RingError: If a cyclotomic factor or a power of q is left over in
                the denominator.
        """
        if self._vanishes:
            return ZERO
        if not self.is_polynomial():
            raise RingError("q-factor ratio does not cancel to a polynomial")
        coeffs = [1]
        for d in sorted(self._phi):
            e = self._phi[d]
            if not e:
                continue
            phi = _cyclotomic_coeffs(d)
            for _ in range(e):
                coeffs = _coeff_mul(coeffs, list(phi))
        return MPoly({Monomial(base * (i + self._q_shift), 0, ()): c for i, c in enumerate(coeffs) if c})

    def at_one(self) -> int:
        """
        The value at q = 1, as an exact integer.

        Phi_d(1) is p when d is a power of the prime p and 1 otherwise, so the
        value is a product of primes; a prime left with a negative exponent
        means the ratio is not integral.

        Raises:
            RingError: If the value is not an integer.
        """
        if self._vanishes:
            return 0
        primes = Counter()
        for d, e in self._phi.items():
            factors = prime_factorization(d)
            if len(factors) == 1:
                primes[next(iter(factors))] += e
        value = 1
        for p, e in primes.items():
            if e < 0:
                raise RingError("factorial ratio is not an integer")
            value *= p ** e
        return value


__all__ = (
    'Monomial',
    'MPoly',
    'TermModel',
    'QRatio',
    'ZERO',
    'ONE',
    'mpoly_arith',
    'mpoly_substitute_qt',
    'q_int',
    'q_factorial',
    'q_binomial',
    'cyclotomic',
    'prime_factorization',
    'int_det',
)
