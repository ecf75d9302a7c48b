"""
Lattice regions on the triangular lattice and the admissible dent sets of a
block profile.

Coordinates: ``u`` is the horizontal distance from the right boundary in
units of one column, ``Y`` is the doubled vertical coordinate, and every
lattice vertex satisfies ``Y = u (mod 2)``. Column ``c`` is the strip
``c-1 <= u <= c``. It holds left-pointing triangles ``L(c, i)`` (vertical edge
on ``u = c-1``, spanning ``Y`` in ``[c+2i-3, c+2i-1]``) and right-pointing
triangles ``R(c, i)`` (vertical edge on ``u = c``, spanning
``[c+2i-2, c+2i]``).

A trapezoid T(h, m) has its long vertical side on the right (``m + h`` unit
segments, labelled bottom to top by the triangles ``L(1, i)``) and its short
side on the left (``h`` segments, labelled by ``R(m, i)``). Dents are removed
from the triangle set.

Classes:
    Triangle: A unit triangle ``L(c, i)`` or ``R(c, i)``.
    Region: Common base of the lattice regions.
    HexagonRegion: The hexagon H(a, b, c).
    TrapezoidRegion: The dented trapezoid T(height, m; P, P').
    DentDirection: Which extremal set a dent distance is measured from.

Functions:
    region_triangles: The unit triangles of a region.
    right_dent_sets: Admissible right dent sets of a block profile.
    left_dent_sets: Admissible left dent sets of a block profile.
    extremal_dents: P_min and P'_max.
    dent_distance: d(P) and d'(P').
    axis_cells: Vertical spans of the cells placed on a hexagon's symmetry axis.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import FrozenSet, NamedTuple, Optional, Sequence

from typing_extensions import List, Tuple

from blocksym.exceptions import InvalidDentSetError, InvalidParameterError, InvalidProfileError
from blocksym.shapes import BlockProfile, check_dent_set

LEFT = "L"
RIGHT = "R"


class Triangle(NamedTuple):
    side: str  # LEFT or RIGHT pointing
    c: int
    i: int

    def vertices(self) -> Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]:
        """The three (u, Y) corners, vertical edge first."""
        c, i = self.c, self.i
        if self.side == LEFT:
            return (c - 1, c + 2 * i - 3), (c - 1, c + 2 * i - 1), (c, c + 2 * i - 2)
        return (c, c + 2 * i - 2), (c, c + 2 * i), (c - 1, c + 2 * i - 1)

    def neighbours(self) -> Tuple['Triangle', 'Triangle', 'Triangle']:
        """Edge-adjacent triangles on the infinite lattice."""
        c, i = self.c, self.i
        if self.side == LEFT:
            return Triangle(RIGHT, c, i), Triangle(RIGHT, c, i - 1), Triangle(RIGHT, c - 1, i)
        return Triangle(LEFT, c, i), Triangle(LEFT, c, i + 1), Triangle(LEFT, c + 1, i)

    def __str__(self):
        return f"{self.side}({self.c},{self.i})"


class Region:
    """Base class of the regions; subclasses are frozen dataclasses."""

    @property
    def width(self) -> int:
        """Number of columns."""
        raise NotImplementedError

    def bounds(self) -> Tuple[int, int]:
        """(lowest, highest) doubled Y reached by the outline."""
        raise NotImplementedError

    def _all_triangles(self) -> FrozenSet[Triangle]:
        raise NotImplementedError

    def triangles(self) -> FrozenSet[Triangle]:
        return region_triangles(self)

    def is_balanced(self) -> bool:
        tris = self.triangles()
        lefts = sum(1 for t in tris if t.side == LEFT)
        return 2 * lefts == len(tris)


@dataclass(frozen=True)
class HexagonRegion(Region):
    """
    The hexagon H(a, b, c), sides listed clockwise from the top-left.

    The right vertical side has length c and sits on ``u = 0``; the hexagon is
    ``a + b`` columns wide, and H(m, m, n) is symmetric about ``u = m``.
    """
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise InvalidParameterError(f"hexagon sides must be positive, got {self.a},{self.b},{self.c}", "--hex")

    @property
    def width(self) -> int:
        return self.a + self.b

    def top(self, u: int) -> int:
        return 2 * self.c + min(u, 2 * self.b - u)

    def bottom(self, u: int) -> int:
        return max(-u, u - 2 * self.a)

    def bounds(self) -> Tuple[int, int]:
        return -self.a, 2 * self.c + self.b

    def outline(self) -> List[Tuple[int, int]]:
        """Corners of the boundary, counter-clockwise from the bottom-right."""
        a, b, c = self.a, self.b, self.c
        return [(0, 0), (0, 2 * c), (b, 2 * c + b), (a + b, 2 * c + b - a),
                (a + b, b - a), (a, -a)]

    def contains_point(self, u: int, y: int) -> bool:
        return 0 <= u <= self.width and self.bottom(u) <= y <= self.top(u)

    def _all_triangles(self) -> FrozenSet[Triangle]:
        lo, hi = self.bounds()
        tris = set()
        for col in range(1, self.width + 1):
            for i in range((lo - col) // 2 - 1, (hi - col) // 2 + 3):
                for side in (LEFT, RIGHT):
                    tri = Triangle(side, col, i)
                    if all(self.contains_point(u, y) for u, y in tri.vertices()):
                        tris.add(tri)
        return frozenset(tris)

    def __str__(self):
        return f"H({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class TrapezoidRegion(Region):
    """
    The trapezoid T(height, m; P, P').

    Attributes:
        height (int): Number of unit segments on the left side.
        m (int): Width in columns.
        right_dents (tuple[int, ...]): P, labels in ``[m + height]``.
        left_dents (tuple[int, ...]): P', labels in ``[height]``.
    """
    height: int
    m: int
    right_dents: Tuple[int, ...] = ()
    left_dents: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.height < 0 or self.m < 1:
            raise InvalidParameterError(f"bad trapezoid size {self.height},{self.m}", "--trap")
        object.__setattr__(self, 'right_dents', check_dent_set(self.right_dents, self.m + self.height, "--P"))
        object.__setattr__(self, 'left_dents', check_dent_set(self.left_dents, self.height, "--Pprime"))
        if len(self.right_dents) - len(self.left_dents) != self.m:
            raise InvalidDentSetError(
                f"|P| - |P'| must equal m = {self.m}, got {len(self.right_dents)} - {len(self.left_dents)}", "--P")

    @property
    def width(self) -> int:
        return self.m

    def bounds(self) -> Tuple[int, int]:
        return 0, 2 * (self.m + self.height)

    def outline(self) -> List[Tuple[int, int]]:
        m, h = self.m, self.height
        return [(0, 0), (0, 2 * (m + h)), (m, m + 2 * h), (m, m)]

    def _all_triangles(self) -> FrozenSet[Triangle]:
        top = self.m + self.height
        tris = set()
        for col in range(1, self.m + 1):
            tris.update(Triangle(LEFT, col, i) for i in range(1, top - col + 2))
            tris.update(Triangle(RIGHT, col, i) for i in range(1, top - col + 1))
        tris.difference_update(Triangle(LEFT, 1, p) for p in self.right_dents)
        tris.difference_update(Triangle(RIGHT, self.m, p) for p in self.left_dents)
        return frozenset(tris)

    def __str__(self):
        dents = "{" + ",".join(map(str, self.right_dents)) + "}"
        if self.left_dents:
            dents += ";{" + ",".join(map(str, self.left_dents)) + "}"
        return f"T({self.height},{self.m};{dents})"


@lru_cache(maxsize=1024)
def region_triangles(region: Region) -> FrozenSet[Triangle]:
    """
    Args:
        region (Region): A hexagon or a dented trapezoid.

    Returns:
        frozenset[Triangle]: The unit triangles, dents already removed.
    """
    return region._all_triangles()


def _window_dent_sets(profile: BlockProfile, ground: int, flag: str) -> List[Tuple[int, ...]]:
    if profile.total + profile.n != ground:
        raise InvalidProfileError(
            f"profile {profile} needs a ground set of {profile.total + profile.n} labels, got {ground}", flag)
    choices = []
    for k in range(1, profile.n + 1):
        window = range(profile.S[k - 1] + k, profile.S[k] + k + 1)
        # r_k of the r_k + 1 labels are dents: pick the one left out
        choices.append([tuple(v for v in window if v != skip) for skip in window])
    return sorted(sum(parts, ()) for parts in product(*choices))


def right_dent_sets(profile: BlockProfile, m_plus_n: int) -> List[Tuple[int, ...]]:
    """
    All P in [m + n] with exactly r_k labels in {S_(k-1)+k, ..., S_k+k} for each k.

    Args:
        profile (BlockProfile): r = (r_1, ..., r_n).
        m_plus_n (int): Size of the ground set, must be |r| + n.

    Returns:
        list[tuple[int, ...]]: Dent sets in lexicographic order; there are prod(r_k + 1).

    Raises:
        InvalidProfileError: If the sizes do not fit together.
    """
    return _window_dent_sets(profile, m_plus_n, "--r")


def left_dent_sets(profile: BlockProfile, n_plus_l: int) -> List[Tuple[int, ...]]:
    """Same window rule for P' in [n + l]."""
    return _window_dent_sets(profile, n_plus_l, "--rprime")


def extremal_dents(profile: BlockProfile, profile_prime: Optional[BlockProfile] = None
                   ) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    The minimal right dent set and the maximal left dent set.

    P_min drops the top label S_k + k of every window and P'_max drops the
    bottom label S'_(k-1) + k.

    Returns:
        tuple: (P_min, P'_max); P'_max is empty without a second profile.
    """
    tops = {profile.S[k] + k for k in range(1, profile.n + 1)}
    p_min = tuple(v for v in range(1, profile.total + profile.n + 1) if v not in tops)
    if profile_prime is None:
        return p_min, ()
    bottoms = {profile_prime.S[k - 1] + k for k in range(1, profile_prime.n + 1)}
    p_max = tuple(v for v in range(1, profile_prime.total + profile_prime.n + 1) if v not in bottoms)
    return p_min, p_max


class DentDirection(Enum):
    ABOVE_MIN = "above_min"
    BELOW_MAX = "below_max"


def dent_distance(P: Sequence[int], P_ref: Sequence[int],
                  direction: DentDirection = DentDirection.ABOVE_MIN) -> int:
    """
    d(P) = sum(P) - sum(P_min), or d'(P') = sum(P'_max) - sum(P').

    Raises:
        InvalidDentSetError: If the two sets differ in size.
    """
    if len(P) != len(P_ref):
        raise InvalidDentSetError(f"dent sets {tuple(P)} and {tuple(P_ref)} differ in size")
    if direction is DentDirection.ABOVE_MIN:
        return sum(P) - sum(P_ref)
    return sum(P_ref) - sum(P)


def axis_cells(profile: BlockProfile, m: int) -> List[Tuple[int, int]]:
    """
    Doubled-Y spans of the cells stacked bottom to top on the axis u = m of H(m, m, n).

    The k-th cell is a hexagonal cell of height r_k, so it covers r_k + 1
    unit segments of the axis, and the cells cover the axis exactly.

    Returns:
        list[tuple[int, int]]: (low, high) for k = 1..n.
    """
    if profile.total != m:
        raise InvalidProfileError(f"profile {profile} must sum to m = {m}", "--r")
    cells = []
    for k in range(1, profile.n + 1):
        first = profile.S[k - 1] + k
        last = profile.S[k] + k
        cells.append((2 * first - m - 2, 2 * last - m))
    return cells


def mirror_triangle(tri: Triangle, m: int) -> Triangle:
    """Reflection across the vertical line u = m."""
    if tri.side == LEFT:
        return Triangle(RIGHT, 2 * m - tri.c + 1, tri.c + tri.i - m - 1)
    return Triangle(LEFT, 2 * m - tri.c + 1, tri.c + tri.i - m)


__all__ = (
    'LEFT',
    'RIGHT',
    'Triangle',
    'Region',
    'HexagonRegion',
    'TrapezoidRegion',
    'DentDirection',
    'region_triangles',
    'right_dent_sets',
    'left_dent_sets',
    'extremal_dents',
    'dent_distance',
    'axis_cells',
    'mirror_triangle',
)
