"""
Brute-force lozenge tilings: enumeration, weights and the summed generating
functions over dent sets.

The tiler always covers the least uncovered triangle (column, then height)
next, so all triangles before it are already covered and only lozenges
reaching forward need to be tried. A left-pointing triangle has exactly one
forward partner and a right-pointing one at most two.

Classes:
    Orientation: Horizontal, positive or negative lozenge.
    Lozenge: A pair of edge-adjacent unit triangles.
    Tiling: A set of lozenges covering a region.
    SymmetricHexagonResult: Count and (q,t)-weight of r-block symmetric hexagon tilings.

Functions:
    iter_tilings: Lazily yields the tilings of a region.
    enumerate_tilings: All tilings of a region, guarded by a size limit.
    tiling_weight_x: x-weight of one tiling.
    weighted_region_sum: M_x or M_{q,t} of a region.
    block_symmetric_sum: Sum over the dent sets of a block profile.
    block_pair_sum: Unsigned sum over both dent families.
    signed_block_sum: Signed sum over both dent families.
    all_dents_sum: Sum over every m-subset of right dents.
    enumerate_symmetric_hexagon: Direct count of r-block symmetric tilings of H(m, m, n).
    is_mirror_symmetric: Mirror test for hexagon tilings.
    estimate_tiling_count: Number of tilings predicted before enumeration.
    symmetric_hexagon_estimate: Number of mirror-symmetric tilings of H(m, m, n).
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterator, NamedTuple, Optional, Union

from typing_extensions import List, Tuple

from blocksym.exactalg import MPoly, QRatio, ZERO, int_det
from blocksym.exceptions import InvalidParameterError, InvalidProfileError, InvalidShapeError, SizeLimitError
from blocksym.logger import logger
from blocksym.regions import (
    LEFT, RIGHT, HexagonRegion, Region, TrapezoidRegion, Triangle,
    axis_cells, extremal_dents, dent_distance, DentDirection,
    left_dent_sets, mirror_triangle, right_dent_sets,
)
from blocksym.shapes import BlockProfile, contains, lambda_of_dents, mu_of_dents

MAX_TILINGS = 5_000_000


class Orientation(Enum):
    HORIZONTAL = "horizontal"
    POSITIVE = "positive"
    NEGATIVE = "negative"


class Lozenge(NamedTuple):
    """
    A lozenge, stored as its right-pointing and left-pointing triangle.

    Attributes:
        right (Triangle): The ``R`` triangle.
        left (Triangle): The ``L`` triangle.
    """
    right: Triangle
    left: Triangle

    @classmethod
    def of(cls, a: Triangle, b: Triangle) -> 'Lozenge':
        """
        Raises:
            InvalidShapeError: If the triangles do not share an edge.
        """
        if a.side == LEFT:
            a, b = b, a
        if a.side != RIGHT or b.side != LEFT or b not in a.neighbours():
            raise InvalidShapeError(f"{a} and {b} do not form a lozenge")
        return cls(a, b)

    @property
    def orientation(self) -> Orientation:
        if self.left.c == self.right.c + 1:
            return Orientation.HORIZONTAL
        if self.left.i == self.right.i:
            return Orientation.NEGATIVE
        return Orientation.POSITIVE

    @property
    def column_from_right(self) -> int:
        """Full columns between the lozenge's right edge and the right boundary."""
        return self.right.c - 1

    @property
    def x_index(self) -> int:
        """k + 1 for a negative lozenge k columns from the right, else 0."""
        if self.orientation is Orientation.NEGATIVE:
            return self.column_from_right + 1
        return 0

    def vertices(self) -> List[Tuple[int, int]]:
        """The four corners in (u, Y) coordinates."""
        return sorted(set(self.right.vertices()) | set(self.left.vertices()))

    def mirrored(self, m: int) -> 'Lozenge':
        return Lozenge.of(mirror_triangle(self.right, m), mirror_triangle(self.left, m))

    def to_dict(self) -> dict:
        return {
            "triangles": [[t.side, t.c, t.i] for t in (self.right, self.left)],
            "orientation": self.orientation.value,
        }


@dataclass(frozen=True)
class Tiling:
    """
    A tiling, lozenges kept sorted so equal tilings compare equal.
    """
    lozenges: Tuple[Lozenge, ...]

    def __post_init__(self):
        object.__setattr__(self, 'lozenges', tuple(sorted(self.lozenges)))

    def __len__(self):
        return len(self.lozenges)

    def covers(self, region: Region) -> bool:
        """True iff the lozenges partition the region's triangles exactly."""
        seen = []
        for loz in self.lozenges:
            seen += [loz.right, loz.left]
        return len(seen) == len(set(seen)) and set(seen) == region.triangles()

    def negatives(self) -> List[Lozenge]:
        return [loz for loz in self.lozenges if loz.orientation is Orientation.NEGATIVE]

    def x_exponents(self) -> Tuple[int, ...]:
        """Dense exponents (of x_1, x_2, ...) of the tiling's weight."""
        counts = Counter(loz.x_index for loz in self.negatives())
        size = max(counts, default=0)
        return tuple(counts.get(k, 0) for k in range(1, size + 1))

    def to_json(self) -> List[dict]:
        return [loz.to_dict() for loz in self.lozenges]


def _tri_key(tri: Triangle):
    return tri.c, tri.i, 0 if tri.side == LEFT else 1


class _Board:
    """Triangles of a region indexed in search order, with forward moves."""

    def __init__(self, region: Region):
        self.tris = sorted(region.triangles(), key=_tri_key)
        self.index = {tri: k for k, tri in enumerate(self.tris)}
        self.moves = []
        for k, tri in enumerate(self.tris):
            forward = []
            for nb in tri.neighbours():
                j = self.index.get(nb)
                if j is not None and j > k:
                    forward.append((j, Lozenge.of(tri, nb).x_index))
            self.moves.append(tuple(sorted(forward)))

    def matchings(self) -> Iterator[List[Tuple[int, int, int]]]:
        """
        Yields every perfect matching as a list of (pos, partner, x_index).

        The yielded list is reused; copy it to keep it.
        """
        size = len(self.tris)
        if size % 2:
            return
        covered = bytearray(size)
        placed = []

        def search(pos: int):
            while pos < size and covered[pos]:
                pos += 1
            if pos == size:
                yield placed
                return
            covered[pos] = 1
            for j, weight in self.moves[pos]:
                if covered[j]:
                    continue
                covered[j] = 1
                placed.append((pos, j, weight))
                yield from search(pos + 1)
                placed.pop()
                covered[j] = 0
            covered[pos] = 0

        yield from search(0)


def estimate_tiling_count(region: Region) -> int:
    """
    Number of tilings of a region, computed without enumerating.

    Hexagons use MacMahon's box formula. A dented trapezoid has as many
    tilings as there are semistandard tableaux of the skew shape
    lambda(P)/mu(P') with entries <= m, counted by the Jacobi-Trudi
    determinant with h_k(1^m) = C(m+k-1, k).

    Args:
        region (Region): A hexagon or a dented trapezoid.

    Returns:
        int: The exact number of tilings.
    """
    if isinstance(region, HexagonRegion):
        ratio = QRatio()
        for i in range(1, region.a + 1):
            for j in range(1, region.b + 1):
                for k in range(1, region.c + 1):
                    ratio.mul_qint(i + j + k - 1).div_qint(i + j + k - 2)
        return ratio.at_one()
    if isinstance(region, TrapezoidRegion):
        outer = lambda_of_dents(region.right_dents, len(region.right_dents))
        inner = mu_of_dents(region.left_dents, len(region.left_dents))
        if not contains(inner, outer):
            return 0
        m = region.m
        rows = len(outer)

        def h(k: int) -> int:
            if k < 0:
                return 0
            return comb(m + k - 1, k)

        return int_det([[h(outer[i] - inner[j] - i + j) for j in range(rows)] for i in range(rows)])
    raise InvalidShapeError(f"cannot estimate tilings of {region}")


def guard_size(region: Region, limit: Optional[int]) -> int:
    """
    Raises:
        SizeLimitError: If the region has more than ``limit`` tilings.
    """
    estimate = estimate_tiling_count(region)
    logger.debug(f"{region}: {estimate} tilings expected")
    if limit is not None and estimate > limit:
        raise SizeLimitError(f"tilings of {region}", estimate, limit)
    return estimate


def iter_tilings(region: Region) -> Iterator[Tiling]:
    """Yields the tilings of a region in search order, without a size check."""
    board = _Board(region)
    for placed in board.matchings():
        yield Tiling(tuple(Lozenge.of(board.tris[a], board.tris[b]) for a, b, _ in placed))


def enumerate_tilings(region: Region, limit: Optional[int] = MAX_TILINGS) -> List[Tiling]:
    """
    All lozenge tilings of a region.

    Args:
        region (Region): A hexagon or a dented trapezoid.
        limit (int | None): Refuse regions with more tilings than this.

    Returns:
        list[Tiling]: Tilings in deterministic search order; empty if the
            region cannot be tiled.

    Raises:
        SizeLimitError: If the region is too large.
    """
    guard_size(region, limit)
    return list(iter_tilings(region))


def tiling_weight_x(tiling: Tiling, region: Region) -> MPoly:
    """
    Product of x_(k+1) over the negative lozenges, k columns from the right boundary.

    Raises:
        InvalidShapeError: If the tiling does not tile the region.
    """
    if not tiling.covers(region):
        raise InvalidShapeError(f"the tiling does not tile {region}")
    return MPoly.monomial(x=tiling.x_exponents())


@lru_cache(maxsize=4096)
def _x_weight_counts(region: Region) -> Dict[Tuple[int, ...], int]:
    board = _Board(region)
    counts = Counter()
    width = region.width
    for placed in board.matchings():
        exps = [0] * (width + 1)
        for _, _, weight in placed:
            exps[weight] += 1
        counts[tuple(exps[1:])] += 1
    return dict(counts)


def _weight_name(weight) -> str:
    name = getattr(weight, 'value', weight)
    if name not in ('x', 'qt'):
        raise InvalidParameterError(f"unsupported weight {weight!r}", "--weight")
    return name


def weighted_region_sum(region: Region, weight: Union[str, Enum] = 'x',
                        limit: Optional[int] = MAX_TILINGS) -> MPoly:
    """
    Total weight of all tilings of a region.

    Args:
        region (Region): A hexagon or a dented trapezoid.
        weight (str): 'x' for M_x, 'qt' for M_{q,t} (x_k replaced by q^(k-1) t).
        limit (int | None): Size limit passed to the enumeration.

    Returns:
        MPoly: The generating function.
    """
    name = _weight_name(weight)
    guard_size(region, limit)
    total = MPoly.from_exponent_counts(_x_weight_counts(region))
    return total.substitute_qt() if name == 'qt' else total


def _check_profile(profile: BlockProfile, total: int, n: int, flag: str = "--r") -> None:
    if profile.total != total or profile.n != n:
        raise InvalidProfileError(
            f"profile {profile} must have {n} entries summing to {total}", flag)


def block_symmetric_sum(profile: BlockProfile, m: int, n: int, weight: Union[str, Enum] = 'qt',
                        limit: Optional[int] = MAX_TILINGS) -> MPoly:
    """
    Sum of M(T(n, m; P)) over the admissible right dent sets of r.

    With ``weight='qt'`` this is the generating function of r-block
    diagonally symmetric tilings of H(m, m, n).

    Raises:
        InvalidProfileError: Unless |r| = m and r has n entries.
    """
    _check_profile(profile, m, n)
    total = ZERO
    for P in right_dent_sets(profile, m + n):
        total = total + weighted_region_sum(TrapezoidRegion(n, m, P), weight, limit)
    return total


def _pair_terms(r: BlockProfile, rp: BlockProfile, m: int, n: int, l: int):
    _check_profile(r, m + l, n)
    _check_profile(rp, l, n, "--rprime")
    _, p_max = extremal_dents(r, rp)
    for P in right_dent_sets(r, m + n + l):
        for Pp in left_dent_sets(rp, n + l):
            sign = -1 if dent_distance(Pp, p_max, DentDirection.BELOW_MAX) % 2 else 1
            yield sign, TrapezoidRegion(n + l, m, P, Pp)


def block_pair_sum(r: BlockProfile, rp: BlockProfile, m: int, n: int, l: int,
                   weight: Union[str, Enum] = 'x', limit: Optional[int] = MAX_TILINGS) -> MPoly:
    """Sum of M(T(n+l, m; P, P')) over both dent families, without signs."""
    total = ZERO
    for _, region in _pair_terms(r, rp, m, n, l):
        total = total + weighted_region_sum(region, weight, limit)
    return total


def signed_block_sum(r: BlockProfile, rp: BlockProfile, m: int, n: int, l: int,
                     limit: Optional[int] = MAX_TILINGS) -> MPoly:
    """
    Signed enumeration of (r, r')-block diagonally symmetric tilings.

    Args:
        r (BlockProfile): Right profile, |r| = m + l, n entries.
        rp (BlockProfile): Left profile, |r'| = l, n entries.
        m (int): Trapezoid width.
        n (int): Number of blocks.
        l (int): Number of left dents.

    Returns:
        MPoly: sum over (P, P') of (-1)^d'(P') M_x(T(n+l, m; P, P')).
    """
    total = ZERO
    for sign, region in _pair_terms(r, rp, m, n, l):
        total = total + sign * weighted_region_sum(region, 'x', limit)
    return total


def all_dents_sum(m: int, n: int, weight: Union[str, Enum] = 'x',
                  limit: Optional[int] = MAX_TILINGS) -> MPoly:
    """Sum of M(T(n, m; P)) over every m-subset P of [m + n]."""
    total = ZERO
    for P in combinations(range(1, m + n + 1), m):
        total = total + weighted_region_sum(TrapezoidRegion(n, m, P), weight, limit)
    return total


@lru_cache(maxsize=64)
def _symmetric_hexagon_table(m: int, n: int) -> Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int]:
    # every mirror-symmetric tiling of H(m, m, n), keyed by the labels of the
    # horizontal lozenges crossing the axis and the left half's x-exponents
    hexagon = HexagonRegion(m, m, n)
    tris = sorted(hexagon.triangles(), key=_tri_key)
    index = {tri: k for k, tri in enumerate(tris)}
    mirror = [index[mirror_triangle(tri, m)] for tri in tris]
    size = len(tris)
    covered = bytearray(size)
    crossing = []
    exps = [0] * (m + 1)
    table = Counter()

    def half_weight(loz: Lozenge) -> int:
        if loz.orientation is Orientation.NEGATIVE and loz.right.c > m:
            return loz.right.c - m
        return 0

    def search(pos: int):
        while pos < size and covered[pos]:
            pos += 1
        if pos == size:
            table[(tuple(sorted(crossing)), tuple(exps[1:]))] += 1
            return
        for nb in tris[pos].neighbours():
            j = index.get(nb)
            if j is None or covered[j]:
                continue
            loz = Lozenge.of(tris[pos], nb)
            mp, mj = mirror[pos], mirror[j]
            if {mp, mj} == {pos, j}:
                covered[pos] = covered[j] = 1
                crossing.append(loz.right.i + m)
                search(pos + 1)
                crossing.pop()
                covered[pos] = covered[j] = 0
                continue
            if covered[mp] or covered[mj] or {mp, mj} & {pos, j}:
                continue
            image = Lozenge.of(tris[mp], tris[mj])
            w = half_weight(loz) or half_weight(image)
            for k in (pos, j, mp, mj):
                covered[k] = 1
            exps[w] += 1
            search(pos + 1)
            exps[w] -= 1
            for k in (pos, j, mp, mj):
                covered[k] = 0

    search(0)
    logger.debug(f"H({m},{m},{n}): {sum(table.values())} mirror-symmetric tilings")
    return dict(table)


class SymmetricHexagonResult(NamedTuple):
    count: int
    genfun: MPoly


def symmetric_hexagon_estimate(m: int, n: int) -> int:
    """Number of mirror-symmetric tilings of H(m, m, n): prod_(1<=i<=j<=m) (n + i + j - 1) / (i + j - 1)."""
    ratio = QRatio()
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            ratio.mul_qint(n + i + j - 1).div_qint(i + j - 1)
    return ratio.at_one()


def enumerate_symmetric_hexagon(profile: BlockProfile, m: int, n: int,
                                limit: Optional[int] = MAX_TILINGS) -> SymmetricHexagonResult:
    """
    Counts the r-block diagonally symmetric tilings of H(m, m, n) directly.

    Every mirror-symmetric tiling of the hexagon is enumerated, and a tiling
    is kept when the k-th cell on the axis (bottom to top) is crossed by
    exactly r_k horizontal lozenges. The weight of a kept tiling is the
    (q,t)-weight of its left half.

    Args:
        profile (BlockProfile): The block profile r.
        m (int): Side length of the two equal sides.
        n (int): Length of the vertical sides.
        limit (int | None): Refuse when H(m, m, n) has more mirror-symmetric
            tilings than this; None disables the check.

    Returns:
        SymmetricHexagonResult: The count and the (q,t) generating function.

    Raises:
        InvalidProfileError: Unless |r| = m and r has n entries.
        SizeLimitError: If the estimate is above ``limit``.
    """
    _check_profile(profile, m, n)
    estimate = symmetric_hexagon_estimate(m, n)
    logger.debug(f"H({m},{m},{n}): {estimate} mirror-symmetric tilings expected")
    if limit is not None and estimate > limit:
        raise SizeLimitError(f"mirror-symmetric tilings of H({m},{m},{n})", estimate, limit, "--r", unit="tilings")
    cells = axis_cells(profile, m)
    count = 0
    weights = Counter()
    for (labels, exps), mult in _symmetric_hexagon_table(m, n).items():
        spans = [(2 * p - m - 2, 2 * p - m) for p in labels]
        if all(sum(1 for lo, hi in spans if low <= lo and hi <= high) == r_k
               for (low, high), r_k in zip(cells, profile.r)):
            count += mult
            weights[exps] += mult
    return SymmetricHexagonResult(count, MPoly.from_exponent_counts(weights).substitute_qt())


def is_mirror_symmetric(tiling: Tiling, m: int) -> bool:
    """True iff the tiling is invariant under reflection in the line u = m."""
    return {loz.mirrored(m) for loz in tiling.lozenges} == set(tiling.lozenges)


__all__ = (
    'MAX_TILINGS',
    'Orientation',
    'Lozenge',
    'Tiling',
    'SymmetricHexagonResult',
    'estimate_tiling_count',
    'guard_size',
    'iter_tilings',
    'enumerate_tilings',
    'tiling_weight_x',
    'weighted_region_sum',
    'block_symmetric_sum',
    'block_pair_sum',
    'signed_block_sum',
    'all_dents_sum',
    'enumerate_symmetric_hexagon',
    'symmetric_hexagon_estimate',
    'is_mirror_symmetric',
)
