"""
Lattice paths with east and south steps, their (q,t)-weights, the LGV matrix
of a block profile and exact determinants over MPoly.

A south step leaving (x, y) has weight q^(y-x-1) t and an east step has
weight 1, so weights are invariant under translation along the diagonal.

Classes:
    LatticePoint: A point of Z^2.
    PolyMatrix: A square matrix of MPoly entries.

Functions:
    path_weight_closed: Weight of all paths (a, b) -> (0, 0) in closed form.
    path_weight_recursive: The same weight by the first-step recurrence.
    path_weight_between: Weight of all paths between two arbitrary points.
    path_weight_to_any: Weight of all paths into a set of end points.
    lgv_matrix: The path matrix of a block profile.
    det_polymatrix: Exact determinant (cofactor expansion or Bareiss).
    det_bareiss: Fraction-free determinant with exact division.
    det_cofactor: Determinant by Laplace expansion.
    krattenthaler_sides: Both sides of the q-binomial determinant evaluation.
"""

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Sequence

from typing_extensions import List, Tuple

from blocksym.exactalg import MPoly, ONE, QRatio, ZERO, q_binomial
from blocksym.exceptions import InvalidParameterError, InvalidProfileError, InvalidShapeError
from blocksym.shapes import BlockProfile

COFACTOR_MAX_DIM = 4


class LatticePoint(NamedTuple):
    x: int
    y: int


def _south_step(x: int, y: int) -> MPoly:
    return MPoly.monomial(q=y - x - 1, t=1)


def path_weight_closed(a: int, b: int) -> MPoly:
    """
    Total weight of the paths from (a, b) to (0, 0).

    Args:
        a (int): Start abscissa; paths only go east, so a <= 0.
        b (int): Start ordinate; paths only go south, so b >= 0.

    Returns:
        MPoly: q^(b(b-1)/2) t^b [b-a choose b]_q, or zero when no path exists.
    """
    if a > 0 or b < 0 or b < a:
        return ZERO
    return MPoly.monomial(q=b * (b - 1) // 2, t=b) * q_binomial(b - a, b)


@lru_cache(maxsize=None)
def path_weight_recursive(a: int, b: int) -> MPoly:
    """
    The weight of :func:`path_weight_closed` from wt(a, b) = wt(a+1, b) + q^(b-a-1) t wt(a, b-1).
    """
    if a > 0 or b < 0:
        return ZERO
    if a == 0 and b == 0:
        return ONE
    return path_weight_recursive(a + 1, b) + _south_step(a, b) * path_weight_recursive(a, b - 1)


def path_weight_between(start: LatticePoint, end: LatticePoint) -> MPoly:
    """
    Total weight of the east/south paths from ``start`` to ``end``.

    Args:
        start (LatticePoint): First point.
        end (LatticePoint): Last point; must satisfy ``end.y >= end.x`` so
            every south step has a non-negative q-exponent.

    Returns:
        MPoly: The summed weight, zero if ``end`` is not reachable.

    Raises:
        InvalidParameterError: If the end point lies below the diagonal.
    """
    if end.y < end.x:
        raise InvalidParameterError(f"path end {tuple(end)} lies below the diagonal")
    return _between(start.x, start.y, end.x, end.y)


def path_weight_to_any(start: LatticePoint, ends: Sequence[LatticePoint]) -> MPoly:
    """
    Weight of the paths from ``start`` to the merged end point set ``ends``,
    computed in one pass with every end point as a sink.

    A path through two sinks is counted once for each, so the result is the
    sum of the individual weights; on one diagonal run no path meets two sinks.

    Raises:
        InvalidParameterError: If an end point lies below the diagonal.
    """
    targets = frozenset(LatticePoint(*e) for e in ends)
    if not targets:
        return ZERO
    for end in targets:
        if end.y < end.x:
            raise InvalidParameterError(f"path end {tuple(end)} lies below the diagonal")

    @lru_cache(maxsize=None)
    def weight(x: int, y: int) -> MPoly:
        # only points with a target to the south-east carry weight
        if not any(e.x >= x and e.y <= y for e in targets):
            return ZERO
        here = ONE if (x, y) in targets else ZERO
        below = weight(x, y - 1)
        if below:
            here += _south_step(x, y) * below
        return here + weight(x + 1, y)

    return weight(start.x, start.y)


@lru_cache(maxsize=None)
def _between(x: int, y: int, z: int, w: int) -> MPoly:
    if x > z or y < w:
        return ZERO
    if x == z and y == w:
        return ONE
    return _between(x + 1, y, z, w) + _south_step(x, y) * _between(x, y - 1, z, w)


class PolyMatrix:
    """
    A square matrix over MPoly.

    Raises:
        InvalidShapeError: If the rows are not square or the matrix is empty.
    """

    def __init__(self, rows: Sequence[Sequence[MPoly]]):
        self.rows = tuple(tuple(MPoly._coerce(v) for v in row) for row in rows)
        if not self.rows or any(len(row) != len(self.rows) for row in self.rows):
            raise InvalidShapeError("a PolyMatrix must be square with dimension >= 1")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: Tuple[int, int]) -> MPoly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_text(self) -> List[List[str]]:
        return [[str(v) for v in row] for row in self.rows]


def lgv_entry(i: int, j: int, profile: BlockProfile, m: int, method: str = 'closed') -> MPoly:
    """
    Weight of the paths from u_i = (i, m + i) to any point of V_j.

    V_j is the run of diagonal points (z, z) with S_(j-1) + j <= z <= S_j + j.
    ``method='closed'`` uses the translated closed form, ``'lattice'`` runs
    the path recurrence between the actual points, and ``'merged'`` joins the
    points of V_j into one sink set.
    """
    start = LatticePoint(i, m + i)
    run = range(profile.S[j - 1] + j, profile.S[j] + j + 1)
    if method == 'merged':
        return path_weight_to_any(start, [LatticePoint(z, z) for z in run])
    total = ZERO
    for z in run:
        if method == 'closed':
            total = total + path_weight_closed(i - z, m + i - z)
        else:
            total = total + path_weight_between(start, LatticePoint(z, z))
    return total


def lgv_matrix(profile: BlockProfile, m: int, n: int) -> PolyMatrix:
    """
    The n x n matrix whose (i, j) entry sums the path weights from u_i to V_j.

    Raises:
        InvalidProfileError: Unless |r| = m and r has n entries.
    """
    if profile.total != m or profile.n != n:
        raise InvalidProfileError(f"profile {profile} must have {n} entries summing to {m}", "--r")
    return PolyMatrix([[lgv_entry(i, j, profile, m) for j in range(1, n + 1)] for i in range(1, n + 1)])


def det_cofactor(matrix: PolyMatrix) -> MPoly:
    """Laplace expansion along the first row."""
    rows = [list(row) for row in matrix.rows]

    def expand(cols: Tuple[int, ...], r: int) -> MPoly:
        if not cols:
            return ONE
        total = ZERO
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if not entry:
                continue
            minor = expand(cols[:pos] + cols[pos + 1:], r + 1)
            total = total + (entry * minor if pos % 2 == 0 else -(entry * minor))
        return total

    return expand(tuple(range(matrix.dim)), 0)


def det_bareiss(matrix: PolyMatrix) -> MPoly:
    """
    Fraction-free Gaussian elimination.

    Each step divides by the previous pivot, and that division is exact in
    the polynomial ring; an inexact one raises RingError.
    """
    a = [list(row) for row in matrix.rows]
    n = len(a)
    sign, prev = 1, ONE
    for k in range(n - 1):
        if not a[k][k]:
            pivot = next((r for r in range(k + 1, n) if a[r][k]), None)
            if pivot is None:
                return ZERO
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def det_polymatrix(matrix: PolyMatrix) -> MPoly:
    """
    Exact determinant: cofactor expansion up to dimension 4, Bareiss beyond.
    """
    if matrix.dim <= COFACTOR_MAX_DIM:
        return det_cofactor(matrix)
    return det_bareiss(matrix)


def krattenthaler_sides(L: Sequence[int], M: int, n: int) -> Tuple[MPoly, MPoly]:
    """
    Both sides of

        det(q^(j L_i) [M choose L_i + j]_q) =
            q^(sum i L_i) prod_(i<j) [L_i - L_j]_q prod_i [M + i - 1]_q!
            / prod_i ([L_i + n]_q! [M - L_i - 1]_q!)

    at integer values of L_1 >= ... >= L_n >= 0 and M. A repeated L_i
    makes both sides vanish. Negative L_i are rejected since q^(j L_i)
    would leave the polynomial ring.

    Args:
        L (Sequence[int]): Non-increasing non-negative integers.
        M (int): Upper index, at least L_1 + 1.
        n (int): Dimension, equal to ``len(L)``.

    Returns:
        tuple[MPoly, MPoly]: (determinant, product).

    Raises:
        InvalidParameterError: If the parameters are out of range.
    """
    L = list(L)
    if len(L) != n or n < 1:
        raise InvalidParameterError(f"expected {n} values of L, got {len(L)}")
    if any(v < 0 for v in L) or any(L[i] < L[i + 1] for i in range(n - 1)):
        raise InvalidParameterError(f"L = {tuple(L)} must be non-increasing and non-negative")
    if M - L[0] - 1 < 0:
        raise InvalidParameterError(f"M = {M} must exceed L_1 = {L[0]}")
    matrix = PolyMatrix([
        [MPoly.var_q(j * L[i - 1]) * q_binomial(M, L[i - 1] + j) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ])
    if len(set(L)) < n:
        # [L_i - L_j]_q = 0
        return det_polymatrix(matrix), ZERO
    ratio = QRatio().mul_qpower(sum(i * L[i - 1] for i in range(1, n + 1)))
    for a, b in combinations(range(n), 2):
        ratio.mul_qint(L[a] - L[b])
    for i in range(1, n + 1):
        ratio.mul_qfactorial(M + i - 1)
        ratio.div_qfactorial(L[i - 1] + n)
        ratio.div_qfactorial(M - L[i - 1] - 1)
    return det_polymatrix(matrix), ratio.to_mpoly()


__all__ = (
    'LatticePoint',
    'PolyMatrix',
    'path_weight_closed',
    'path_weight_recursive',
    'path_weight_between',
    'path_weight_to_any',
    'lgv_entry',
    'lgv_matrix',
    'det_cofactor',
    'det_bareiss',
    'det_polymatrix',
    'krattenthaler_sides',
)
