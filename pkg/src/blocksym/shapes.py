"""
Partitions, skew shapes and block profiles, strip predicates, and the maps
from dent sets to partitions.

Classes:
    Partition: A weakly decreasing tuple of non-negative integers, trailing zeros trimmed.
    SkewShape: A pair of partitions inner <= outer.
    BlockProfile: The block sizes r = (r_1, ..., r_n) with partial sums S_k.
    StripKind: Classification of a skew shape as a strip.
    StripCheck: A strip classification together with the box count.

Functions:
    contains: Componentwise containment of partitions.
    strip_check: Classifies a skew shape as a vertical/horizontal strip.
    lambda_of_dents: The partition (p_len - len, ..., p_1 - 1) of a dent set.
    mu_of_dents: Same map, used for left dent sets.
    lambda_min_max: The partitions of the extremal dent sets of a profile.
    vertical_strip_successors: All partitions obtained by adding a vertical strip.
    horizontal_strip_predecessors: All partitions obtained by removing a horizontal strip.
    partitions_of: All partitions of an integer, optionally bounded.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from typing_extensions import List, Tuple

from blocksym.exceptions import InvalidDentSetError, InvalidProfileError, InvalidShapeError


def _parse_int_list(text: str) -> List[int]:
    body = text.strip().strip("(){}[]").strip()
    if not body:
        return []
    return [int(v) for v in body.split(",")]


@dataclass(frozen=True, order=True)
class Partition:
    """
    A partition, stored without trailing zeros.

    Indexing is zero-padded: ``p[i]`` is 0 for any ``i`` past the last part.
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(v) for v in self.parts)
        if any(v < 0 for v in parts):
            raise InvalidShapeError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidShapeError(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, *parts: int) -> 'Partition':
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """Parses ``(4,4,4,3,2,2)``, ``4,4,4`` or ``()``."""
        try:
            return cls(tuple(_parse_int_list(text)))
        except ValueError as err:
            raise InvalidShapeError(f"cannot parse partition {text!r}") from err

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def padded(self, n: int) -> Tuple[int, ...]:
        return self.parts + (0,) * max(0, n - len(self.parts))

    def conjugate(self) -> 'Partition':
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for v in self.parts if v > j) for j in range(self.parts[0])))

    def cells(self) -> List[Tuple[int, int]]:
        """(row, col) of every box, 1-based, row by row."""
        return [(i + 1, j + 1) for i, v in enumerate(self.parts) for j in range(v)]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


EMPTY = Partition()


def contains(inner: Partition, outer: Partition) -> bool:
    """
    Args:
        inner (Partition): The candidate subshape mu.
        outer (Partition): The candidate supershape lambda.

    Returns:
        bool: True iff mu_i <= lambda_i for every i (zero-padded).
    """
    return len(inner) <= len(outer) and all(v <= outer[i] for i, v in enumerate(inner))


@dataclass(frozen=True)
class SkewShape:
    """
    The skew shape outer/inner.

    Raises:
        InvalidShapeError: If inner is not contained in outer.
    """
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if not contains(self.inner, self.outer):
            raise InvalidShapeError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_lengths(self) -> List[int]:
        return [self.outer[i] - self.inner[i] for i in range(len(self.outer))]

    def column_lengths(self) -> List[int]:
        return [self.outer.conjugate()[j] - self.inner.conjugate()[j] for j in range(self.outer[0])]

    def cells(self) -> List[Tuple[int, int]]:
        """(row, col) of every box of the skew shape, 1-based, row by row."""
        return [(i + 1, j + 1) for i in range(len(self.outer))
                for j in range(self.inner[i], self.outer[i])]

    def __str__(self):
        return f"{self.outer}/{self.inner}"


@dataclass(frozen=True)
class BlockProfile:
    """
    Block sizes r = (r_1, ..., r_n), zero entries allowed.

    Attributes:
        r (tuple[int, ...]): The block sizes.
        S (tuple[int, ...]): Partial sums S_0 = 0, S_1, ..., S_n.
    """
    r: Tuple[int, ...]
    S: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        r = tuple(int(v) for v in self.r)
        if not r:
            raise InvalidProfileError("a block profile needs at least one entry")
        if any(v < 0 for v in r):
            raise InvalidProfileError(f"negative block size in {r}")
        sums = [0]
        for v in r:
            sums.append(sums[-1] + v)
        object.__setattr__(self, 'r', r)
        object.__setattr__(self, 'S', tuple(sums))

    @classmethod
    def parse(cls, text: str, flag: Optional[str] = None) -> 'BlockProfile':
        try:
            return cls(tuple(_parse_int_list(text)))
        except ValueError as err:
            raise InvalidProfileError(f"cannot parse block profile {text!r}", flag) from err

    @classmethod
    def ones(cls, l: int, n: int) -> 'BlockProfile':
        """The profile (1^l, 0^(n-l))."""
        return cls((1,) * l + (0,) * (n - l))

    @property
    def n(self) -> int:
        return len(self.r)

    @property
    def total(self) -> int:
        return self.S[-1]

    def __str__(self):
        return "(" + ",".join(map(str, self.r)) + ")"


def compositions(total: int, parts: int) -> Iterator[BlockProfile]:
    """All profiles with ``parts`` entries summing to ``total``, zeros allowed."""
    if parts == 1:
        yield BlockProfile((total,))
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield BlockProfile((first,) + rest.r)


class StripKind(Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    BOTH = "both"
    NEITHER = "neither"


class StripCheck(NamedTuple):
    kind: StripKind
    size: int

    def __str__(self):
        if self.kind is StripKind.NEITHER:
            return "neither"
        return f"{self.kind.value}({self.size})"


def is_vertical_strip(shape: SkewShape) -> bool:
    """No two boxes in the same row."""
    return all(v <= 1 for v in shape.row_lengths())


def is_horizontal_strip(shape: SkewShape) -> bool:
    """No two boxes in the same column, i.e. inner_i >= outer_(i+1)."""
    return all(shape.inner[i] >= shape.outer[i + 1] for i in range(len(shape.outer)))


def strip_check(shape: SkewShape) -> StripCheck:
    """
    Classifies a skew shape.

    Args:
        shape (SkewShape): The shape to classify.

    Returns:
        StripCheck: ``both(k)`` if there is at most one box in every row and
            every column, ``vertical(k)`` / ``horizontal(k)`` if only one of
            these holds, and ``neither`` otherwise; k is the box count.
    """
    vertical = is_vertical_strip(shape)
    horizontal = is_horizontal_strip(shape)
    if vertical and horizontal:
        kind = StripKind.BOTH
    elif vertical:
        kind = StripKind.VERTICAL
    elif horizontal:
        kind = StripKind.HORIZONTAL
    else:
        kind = StripKind.NEITHER
    return StripCheck(kind, shape.size)


def check_dent_set(P: Sequence[int], ground: Optional[int] = None, flag: Optional[str] = None) -> Tuple[int, ...]:
    """
    Validates a dent set: strictly increasing positive labels, all <= ground.

    Returns:
        tuple[int, ...]: The labels.

    Raises:
        InvalidDentSetError: On a malformed set.
    """
    labels = tuple(P)
    if any(labels[i] >= labels[i + 1] for i in range(len(labels) - 1)):
        raise InvalidDentSetError(f"dent labels {labels} are not strictly increasing", flag)
    if labels and labels[0] < 1:
        raise InvalidDentSetError(f"dent labels {labels} must be positive", flag)
    if ground is not None and labels and labels[-1] > ground:
        raise InvalidDentSetError(f"dent label {labels[-1]} exceeds {ground}", flag)
    return labels


def lambda_of_dents(P: Sequence[int], expected_len: int) -> Partition:
    """
    Maps a dent set to the partition (p_len - len, ..., p_2 - 2, p_1 - 1).

    Args:
        P (Sequence[int]): Strictly increasing labels.
        expected_len (int): Required number of labels.

    Returns:
        Partition: The partition, trailing zeros trimmed.

    Raises:
        InvalidDentSetError: If P is not increasing, has the wrong size, or p_i < i.
    """
    labels = check_dent_set(P)
    if len(labels) != expected_len:
        raise InvalidDentSetError(f"expected {expected_len} dents, got {len(labels)}")
    if any(p < i + 1 for i, p in enumerate(labels)):
        raise InvalidDentSetError(f"dent set {labels} has a label p_i < i")
    return Partition(tuple(labels[i] - (i + 1) for i in range(len(labels) - 1, -1, -1)))


mu_of_dents = lambda_of_dents


def lambda_min_max(profile: BlockProfile) -> Tuple[Partition, Partition]:
    """
    Returns:
        tuple[Partition, Partition]: (n-1)^(r_n) ... 0^(r_1) and n^(r_n) ... 1^(r_1).
    """
    low, high = [], []
    for k in range(profile.n, 0, -1):
        low += [k - 1] * profile.r[k - 1]
        high += [k] * profile.r[k - 1]
    return Partition(tuple(low)), Partition(tuple(high))


def vertical_strip_successors(base: Partition, size: int, max_rows: Optional[int] = None) -> List[Partition]:
    """
    All lambda+ containing ``base`` with lambda+/base a vertical strip of ``size`` boxes.

    Args:
        base (Partition): The partition to grow.
        size (int): Number of boxes to add, at most one per row.
        max_rows (int | None): Cap on the number of rows of lambda+; None for no cap.

    Returns:
        list[Partition]: Results in decreasing lexicographic order.
    """
    if size < 0:
        return []
    rows = len(base) + size
    if max_rows is not None:
        rows = min(rows, max_rows)
    if rows < len(base):
        return []
    padded = base.padded(rows)
    found = []

    def grow(i: int, left: int, acc: List[int]):
        if left > rows - i:
            return
        if i == rows:
            if left == 0:
                found.append(Partition(tuple(acc)))
            return
        for add in (1, 0):
            if add > left:
                continue
            value = padded[i] + add
            if i and value > acc[-1]:
                continue
            acc.append(value)
            grow(i + 1, left - add, acc)
            acc.pop()

    grow(0, size, [])
    return sorted(set(found), reverse=True)


def horizontal_strip_predecessors(mu: Partition, size: int) -> List[Partition]:
    """
    All mu- contained in ``mu`` with mu/mu- a horizontal strip of ``size`` boxes.

    These are the partitions interlacing mu: mu_(i+1) <= mu-_i <= mu_i.

    Returns:
        list[Partition]: Results in decreasing lexicographic order.
    """
    if size < 0 or size > mu.size:
        return []
    ranges = [range(mu[i + 1], mu[i] + 1) for i in range(len(mu))]
    found = [Partition(choice) for choice in product(*ranges) if mu.size - sum(choice) == size]
    return sorted(found, reverse=True)


def partitions_of(n: int, max_rows: Optional[int] = None, max_part: Optional[int] = None) -> List[Partition]:
    """
    All partitions of n with optional bounds on length and largest part.

    Returns:
        list[Partition]: In decreasing lexicographic order.
    """
    found = []

    def build(left: int, cap: int, acc: List[int]):
        if left == 0:
            found.append(Partition(tuple(acc)))
            return
        if max_rows is not None and len(acc) == max_rows:
            return
        for part in range(min(left, cap), 0, -1):
            acc.append(part)
            build(left - part, part, acc)
            acc.pop()

    if n < 0:
        return []
    build(n, n if max_part is None else max_part, [])
    return found


def iter_partitions_up_to(size: int, max_rows: Optional[int] = None) -> Iterable[Partition]:
    for n in range(size + 1):
        yield from partitions_of(n, max_rows)


__all__ = (
    'Partition',
    'EMPTY',
    'SkewShape',
    'BlockProfile',
    'StripKind',
    'StripCheck',
    'compositions',
    'contains',
    'strip_check',
    'is_vertical_strip',
    'is_horizontal_strip',
    'check_dent_set',
    'lambda_of_dents',
    'mu_of_dents',
    'lambda_min_max',
    'vertical_strip_successors',
    'horizontal_strip_predecessors',
    'partitions_of',
    'iter_partitions_up_to',
)
