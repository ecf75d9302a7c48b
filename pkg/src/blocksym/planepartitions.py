"""
Boxed plane partitions, the r-block symmetry predicate and their generating
functions.

Plane partitions are generated straight from the matrix definition: the
entry at (i, j) ranges over 0..min(entry above, entry to the left), so
every generated matrix is valid and nothing is filtered afterwards except
the block condition.

Classes:
    PlanePartition: An a x b matrix bounded by c, weakly decreasing along rows and columns.
    PPWeights: The statistics |pi|, |pi|_d and |pi|_n.

Functions:
    enumerate_pp: All plane partitions in PP^c(a x b).
    enumerate_symmetric_pp: All transpose-invariant plane partitions in PP^n(m x m).
    is_r_block_symmetric: The r-block diagonal window rule.
    enumerate_r_block_pp: The r-block symmetric plane partitions of a box.
    pp_weights: (|pi|, |pi|_d, |pi|_n).
    half_size: |pi|' = sum of entries on and above the diagonal.
    r_block_pp_genfun: Sum of q^|pi|_n t^|pi|_d over r-block symmetric plane partitions.
    volume_genfun: Sum of q^|pi| over PP^c(a x b).
    symmetric_half_genfun: Sum of q^|pi|' over symmetric PP^n(m x m).
"""

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

from typing_extensions import List, Tuple

from blocksym.exactalg import MPoly, QRatio
from blocksym.exceptions import InvalidParameterError, InvalidProfileError, InvalidShapeError, SizeLimitError
from blocksym.logger import logger
from blocksym.shapes import BlockProfile

PP_MAX_CELLS = 9
PP_MAX_HEIGHT = 4
SYM_PP_MAX = 5_000_000


@dataclass(frozen=True)
class PlanePartition:
    """
    A boxed plane partition.

    Attributes:
        entries (tuple[tuple[int, ...], ...]): The rows.
        bound (int): The box height c; every entry is <= c.

    Raises:
        InvalidShapeError: If the matrix is ragged, negative, above the bound,
            or increases along a row or a column.
    """
    entries: Tuple[Tuple[int, ...], ...]
    bound: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, 'entries', rows)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise InvalidShapeError("plane partition rows have different lengths")
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if not 0 <= v <= self.bound:
                    raise InvalidShapeError(f"entry {v} at ({i + 1},{j + 1}) is outside 0..{self.bound}")
                if (i and rows[i - 1][j] < v) or (j and row[j - 1] < v):
                    raise InvalidShapeError(f"entry at ({i + 1},{j + 1}) breaks monotonicity")

    @property
    def a(self) -> int:
        return len(self.entries)

    @property
    def b(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        """Entry at 1-based (i, j)."""
        i, j = ij
        return self.entries[i - 1][j - 1]

    def transpose(self) -> 'PlanePartition':
        return PlanePartition(tuple(zip(*self.entries)), self.bound)

    def is_symmetric(self) -> bool:
        return self.a == self.b and self.entries == self.transpose().entries

    @property
    def volume(self) -> int:
        return sum(map(sum, self.entries))

    def to_json(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[int]], bound: Optional[int] = None) -> 'PlanePartition':
        if bound is None:
            bound = max((max(row) for row in rows if row), default=0)
        return cls(tuple(tuple(row) for row in rows), bound)


class PPWeights(NamedTuple):
    total: int
    diagonal: int
    off_diagonal: int


def pp_weights(pi: PlanePartition) -> PPWeights:
    """
    Returns:
        PPWeights: |pi| (all entries), |pi|_d (diagonal) and |pi|_n (the rest).
    """
    total = pi.volume
    diagonal = sum(pi.entries[i][i] for i in range(min(pi.a, pi.b)))
    return PPWeights(total, diagonal, total - diagonal)


def half_size(pi: PlanePartition) -> int:
    return sum(v for i, row in enumerate(pi.entries) for j, v in enumerate(row) if i <= j)


def _iter_pp(a: int, b: int, c: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    grid = [[0] * b for _ in range(a)]

    def fill(k: int):
        if k == a * b:
            yield tuple(tuple(row) for row in grid)
            return
        i, j = divmod(k, b)
        cap = c
        if i:
            cap = min(cap, grid[i - 1][j])
        if j:
            cap = min(cap, grid[i][j - 1])
        for v in range(cap + 1):
            grid[i][j] = v
            yield from fill(k + 1)
        grid[i][j] = 0

    yield from fill(0)


def enumerate_pp(a: int, b: int, c: int, max_cells: Optional[int] = PP_MAX_CELLS,
                 max_height: Optional[int] = PP_MAX_HEIGHT) -> List[PlanePartition]:
    """
    All plane partitions in PP^c(a x b), in lexicographic row-major order.

    Args:
        a (int): Number of rows.
        b (int): Number of columns.
        c (int): Bound on entries.
        max_cells (int | None): Refuse boxes with more than this many cells.
        max_height (int | None): Refuse bounds above this.

    Returns:
        list[PlanePartition]: The plane partitions.

    Raises:
        InvalidParameterError: If a dimension is negative.
        SizeLimitError: If the box exceeds the limits.
    """
    if min(a, b, c) < 0:
        raise InvalidParameterError(f"box {a}x{b}x{c} has a negative side")
    if max_cells is not None and a * b > max_cells:
        raise SizeLimitError(f"plane partitions in a {a}x{b}x{c} box", a * b, max_cells, "--a", unit="cells")
    if max_height is not None and c > max_height:
        raise SizeLimitError(f"plane partitions in a {a}x{b}x{c} box", c, max_height, "--c", unit="levels")
    return [PlanePartition(rows, c) for rows in _iter_pp(a, b, c)]


def _iter_symmetric(m: int, n: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    grid = [[0] * m for _ in range(m)]
    cells = [(i, j) for i in range(m) for j in range(i, m)]

    def fill(k: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        i, j = cells[k]
        cap = n
        if i:
            cap = min(cap, grid[i - 1][j])
        if j > i:
            cap = min(cap, grid[i][j - 1])
        for v in range(cap + 1):
            grid[i][j] = grid[j][i] = v
            yield from fill(k + 1)
        grid[i][j] = grid[j][i] = 0

    yield from fill(0)


def enumerate_symmetric_pp(m: int, n: int, limit: Optional[int] = SYM_PP_MAX) -> List[PlanePartition]:
    """
    All pi in PP^n(m x m) with tr(pi) = pi; only entries on and above the
    diagonal are chosen.

    Raises:
        SizeLimitError: If there are more than ``limit`` of them.
    """
    if m < 1 or n < 0:
        raise InvalidParameterError(f"bad symmetric box {m}x{m}x{n}")
    ratio = QRatio()
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            ratio.mul_qint(n + i + j - 1).div_qint(i + j - 1)
    estimate = ratio.at_one()
    logger.debug(f"symmetric PP^{n}({m}x{m}): {estimate} plane partitions expected")
    if limit is not None and estimate > limit:
        raise SizeLimitError(f"symmetric plane partitions in a {m}x{m}x{n} box", estimate, limit)
    return [PlanePartition(rows, n) for rows in _iter_symmetric(m, n)]


def diagonal_windows(profile: BlockProfile) -> List[Tuple[int, int, int]]:
    """
    (first, last, k): diagonal rows first..last must hold k - 1 or k.

    Row i belongs to block k when S_n - S_k < i <= S_n - S_(k-1).
    """
    s_n = profile.total
    return [(s_n - profile.S[k] + 1, s_n - profile.S[k - 1], k) for k in range(1, profile.n + 1)]


def is_r_block_symmetric(pi: PlanePartition, profile: BlockProfile, n: int) -> bool:
    """
    Args:
        pi (PlanePartition): A plane partition in PP^n(m x m).
        profile (BlockProfile): r with |r| = m.
        n (int): The height bound.

    Returns:
        bool: True iff pi is transpose-invariant and pi_(i,i) is k-1 or k for
            every row i of block k.

    Raises:
        InvalidShapeError: If pi is not m x m with entries <= n.
    """
    m = profile.total
    if pi.a != m or pi.b != m:
        raise InvalidShapeError(f"expected an {m}x{m} plane partition for profile {profile}, got {pi.a}x{pi.b}")
    if any(v > n for row in pi.entries for v in row):
        raise InvalidShapeError(f"entries exceed the bound {n}")
    if not pi.is_symmetric():
        return False
    for first, last, k in diagonal_windows(profile):
        for i in range(first, last + 1):
            if pi[i, i] not in (k - 1, k):
                return False
    return True


def enumerate_r_block_pp(m: int, n: int, profile: BlockProfile,
                         limit: Optional[int] = SYM_PP_MAX) -> List[PlanePartition]:
    """
    The r-block symmetric plane partitions in PP^n(m x m).

    Raises:
        InvalidProfileError: Unless |r| = m and r has n entries.
        SizeLimitError: If the symmetric ones number more than ``limit``.
    """
    if profile.total != m or profile.n != n:
        raise InvalidProfileError(f"profile {profile} must have {n} entries summing to {m}", "--r")
    return [pi for pi in enumerate_symmetric_pp(m, n, limit) if is_r_block_symmetric(pi, profile, n)]


def r_block_pp_genfun(m: int, n: int, profile: BlockProfile, limit: Optional[int] = SYM_PP_MAX) -> MPoly:
    """
    Sum of q^|pi|_n t^|pi|_d over the r-block symmetric pi in PP^n(m x m).

    Raises:
        InvalidProfileError: Unless |r| = m and r has n entries.
    """
    counts = Counter()
    for pi in enumerate_r_block_pp(m, n, profile, limit):
        w = pp_weights(pi)
        counts[(w.off_diagonal, w.diagonal)] += 1
    return sum((MPoly.monomial(c, q=qe, t=te) for (qe, te), c in counts.items()), MPoly())


def volume_genfun(a: int, b: int, c: int, max_cells: Optional[int] = PP_MAX_CELLS,
                  max_height: Optional[int] = PP_MAX_HEIGHT) -> MPoly:
    """Sum of q^|pi| over PP^c(a x b)."""
    counts = Counter(pi.volume for pi in enumerate_pp(a, b, c, max_cells, max_height))
    return MPoly.from_exponent_counts({(v,): k for v, k in counts.items()}, variable='q')


def symmetric_half_genfun(m: int, n: int, limit: Optional[int] = SYM_PP_MAX) -> MPoly:
    """Sum of q^|pi|' over transpose-invariant pi in PP^n(m x m)."""
    counts = Counter(half_size(pi) for pi in enumerate_symmetric_pp(m, n, limit))
    return MPoly.from_exponent_counts({(v,): k for v, k in counts.items()}, variable='q')


__all__ = (
    'PP_MAX_CELLS',
    'PP_MAX_HEIGHT',
    'PlanePartition',
    'PPWeights',
    'pp_weights',
    'half_size',
    'enumerate_pp',
    'enumerate_symmetric_pp',
    'diagonal_windows',
    'is_r_block_symmetric',
    'enumerate_r_block_pp',
    'r_block_pp_genfun',
    'volume_genfun',
    'symmetric_half_genfun',
)
