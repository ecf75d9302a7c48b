"""
Skew Schur polynomials and the Pieri-type expansions around them.

Classes:
    Tableau: A semistandard filling of a skew shape.
    PieriTerm: One signed term (sign, lambda+, mu-) of a skew dual Pieri expansion.

Functions:
    iter_tableaux: All semistandard tableaux of a skew shape with entries <= m.
    skew_schur: s_{lambda/mu}(x_1, ..., x_m) by tableau enumeration.
    principal_spec: s_lambda(1, q, ..., q^(m-1)) from its product formula.
    elementary_sym: e_i(x_1, ..., x_m).
    dual_pieri_expand: Shapes lambda+ in s_lambda e_i.
    skew_dual_pieri_expand: Signed terms in s_{lambda/mu} e_i.
    split_product_sides: Both sides of the split product identity for q-integers.
    schur_side_sum: Sum of s_lambda(P) over the dent sets of a profile.
    schur_side_product: s_lambda(P_min) times prod(1 + x_i).
    doubled_staircase: (n-1, n-1, n-2, n-2, ..., 1, 1).
    asm_via_schur: Alternating sign matrix numbers from s_delta(1^2n).
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, NamedTuple, Set

from typing_extensions import List, Tuple

from blocksym.exactalg import Monomial, MPoly, ONE, QRatio, ZERO
from blocksym.exceptions import InvalidParameterError, InvalidShapeError, RingError
from blocksym.regions import extremal_dents, right_dent_sets
from blocksym.shapes import (
    BlockProfile, Partition, SkewShape, contains, horizontal_strip_predecessors,
    lambda_of_dents, vertical_strip_successors,
)


@dataclass(frozen=True)
class Tableau:
    """
    Attributes:
        shape (SkewShape): The skew shape.
        rows (tuple[tuple[int, ...], ...]): Entries of each row, left to right.
    """
    shape: SkewShape
    rows: Tuple[Tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """Entry in 1-based row i and column j."""
        return self.rows[i - 1][j - 1 - self.shape.inner[i - 1]]

    def is_semistandard(self, m: int) -> bool:
        for i, row in enumerate(self.rows, start=1):
            if any(not 1 <= v <= m for v in row):
                return False
            if any(row[k] > row[k + 1] for k in range(len(row) - 1)):
                return False
            for j in range(self.shape.inner[i - 1] + 1, self.shape.outer[i - 1] + 1):
                if i > 1 and self.shape.inner[i - 2] < j <= self.shape.outer[i - 2]:
                    if self.entry(i - 1, j) >= self.entry(i, j):
                        return False
        return True

    def weight(self) -> Tuple[int, ...]:
        counts = Counter(v for row in self.rows for v in row)
        size = max(counts, default=0)
        return tuple(counts.get(k, 0) for k in range(1, size + 1))


def iter_tableaux(shape: SkewShape, m: int) -> Iterator[Tableau]:
    """
    Semistandard tableaux of ``shape`` with entries in 1..m, filled row by
    row, each box at least its left neighbour and above the box over it.
    """
    outer, inner = shape.outer, shape.inner
    nrows = len(outer)
    grid = [dict() for _ in range(nrows)]
    cells = shape.cells()

    def fill(k: int):
        if k == len(cells):
            yield Tableau(shape, tuple(
                tuple(grid[i][j] for j in range(inner[i] + 1, outer[i] + 1)) for i in range(nrows)))
            return
        i, j = cells[k]
        low = grid[i - 1].get(j - 1, 1)
        if i > 1 and j in grid[i - 2]:
            low = max(low, grid[i - 2][j] + 1)
        for v in range(low, m + 1):
            grid[i - 1][j] = v
            yield from fill(k + 1)
        grid[i - 1].pop(j, None)

    yield from fill(0)


@lru_cache(maxsize=4096)
def skew_schur(outer: Partition, inner: Partition, m: int) -> MPoly:
    """
    The skew Schur polynomial in m variables.

    Args:
        outer (Partition): lambda.
        inner (Partition): mu, contained in lambda.
        m (int): Number of variables.

    Returns:
        MPoly: Sum of x^T over semistandard tableaux T of lambda/mu; zero
            when a column of the shape is longer than m.

    Raises:
        InvalidShapeError: If mu is not contained in lambda.
    """
    if not contains(inner, outer):
        raise InvalidShapeError(f"{inner} is not contained in {outer}")
    shape = SkewShape(outer, inner)
    if any(v > m for v in shape.column_lengths()):
        return ZERO
    counts = Counter(t.weight() for t in iter_tableaux(shape, m))
    return MPoly.from_exponent_counts(counts)


def principal_spec(lam: Partition, m: int) -> MPoly:
    """
    s_lambda(1, q, ..., q^(m-1)) as q^(sum (i-1) lambda_i) prod_(i<j) [lambda_i - lambda_j + j - i]_q / [j - i]_q.

    Raises:
        InvalidShapeError: If lambda has more than m parts.
    """
    if len(lam) > m:
        raise InvalidShapeError(f"{lam} has more than {m} parts")
    ratio = QRatio().mul_qpower(sum(i * v for i, v in enumerate(lam)))
    for i, j in combinations(range(1, m + 1), 2):
        ratio.mul_qint(lam[i - 1] - lam[j - 1] + j - i).div_qint(j - i)
    return ratio.to_mpoly()


def elementary_sym(i: int, m: int) -> MPoly:
    """e_i(x_1, ..., x_m); e_0 = 1 and e_i = 0 outside 0..m."""
    if i < 0 or i > m:
        return ZERO
    return MPoly({Monomial.make(x={k: 1 for k in subset}): 1 for subset in combinations(range(1, m + 1), i)})


def dual_pieri_expand(lam: Partition, i: int, m: int) -> List[Partition]:
    """All lambda+ with lambda+/lambda a vertical strip of i boxes and at most m rows."""
    return vertical_strip_successors(lam, i, m)


class PieriTerm(NamedTuple):
    sign: int
    outer: Partition
    inner: Partition

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'} {self.outer}/{self.inner}"


def skew_dual_pieri_expand(lam: Partition, mu: Partition, i: int, m: int) -> List[PieriTerm]:
    """
    Signed terms of s_{lambda/mu} e_i = sum_k (-1)^k sum s_{lambda+/mu-}.

    lambda+/lambda runs over vertical strips of i - k boxes and mu/mu- over
    horizontal strips of k boxes. Terms whose shape has a column longer
    than m vanish in m variables and are left out.

    Raises:
        InvalidShapeError: If mu is not contained in lambda.
    """
    if not contains(mu, lam):
        raise InvalidShapeError(f"{mu} is not contained in {lam}")
    if i < 0:
        return []
    terms = []
    for k in range(i + 1):
        sign = -1 if k % 2 else 1
        for plus in vertical_strip_successors(lam, i - k):
            for minus in horizontal_strip_predecessors(mu, k):
                if all(v <= m for v in SkewShape(plus, minus).column_lengths()):
                    terms.append(PieriTerm(sign, plus, minus))
    return terms


def split_product_sides(I: Set[int], J: Set[int], N: int) -> Tuple[MPoly, MPoly]:
    """
    Both sides of

        prod_(i1<i2 in I) [i2 - i1]_q
            = prod_(j1<j2 in J) [j2 - j1]_q prod_(i=1)^(N-1) [i]_q!
              / prod_(j in J) [j - 1]_q! [N - j]_q!

    Raises:
        InvalidParameterError: Unless I and J split [N].
    """
    I, J = set(I), set(J)
    if I & J or I | J != set(range(1, N + 1)):
        raise InvalidParameterError(f"I and J must partition [{N}]")
    lhs = QRatio()
    for a, b in combinations(sorted(I), 2):
        lhs.mul_qint(b - a)
    rhs = QRatio()
    for a, b in combinations(sorted(J), 2):
        rhs.mul_qint(b - a)
    for i in range(1, N):
        rhs.mul_qfactorial(i)
    for j in J:
        rhs.div_qfactorial(j - 1).div_qfactorial(N - j)
    return lhs.to_mpoly(), rhs.to_mpoly()


def schur_side_sum(profile: BlockProfile) -> MPoly:
    """Sum of s_lambda(P)(x_1, ..., x_m) over the admissible dent sets P, m = |r|."""
    m = profile.total
    total = ZERO
    for P in right_dent_sets(profile, m + profile.n):
        total = total + skew_schur(lambda_of_dents(P, m), Partition(), m)
    return total


def schur_side_product(profile: BlockProfile) -> MPoly:
    """s_lambda(P_min)(x_1, ..., x_m) prod_i (1 + x_i)."""
    m = profile.total
    p_min, _ = extremal_dents(profile)
    total = skew_schur(lambda_of_dents(p_min, m), Partition(), m)
    for k in range(1, m + 1):
        total = total * (ONE + MPoly.var_x(k))
    return total


def doubled_staircase(n: int) -> Partition:
    return Partition(tuple(v for k in range(n - 1, 0, -1) for v in (k, k)))


def asm_via_schur(n: int) -> int:
    """
    s_delta(1^(2n)) / 3^(n(n-1)/2) for the doubled staircase delta.

    Raises:
        RingError: If the division is not exact.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be positive, got {n}")
    value = principal_spec(doubled_staircase(n), 2 * n).evaluate()
    power = 3 ** (n * (n - 1) // 2)
    if value % power:
        raise RingError(f"s_delta(1^{2 * n}) = {value} is not divisible by {power}")
    return value // power


__all__ = (
    'Tableau',
    'PieriTerm',
    'iter_tableaux',
    'skew_schur',
    'principal_spec',
    'elementary_sym',
    'dual_pieri_expand',
    'skew_dual_pieri_expand',
    'split_product_sides',
    'schur_side_sum',
    'schur_side_product',
    'doubled_staircase',
    'asm_via_schur',
)
