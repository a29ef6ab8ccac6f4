"""Integer partitions, marked partitions, and the marked <-> (lambda, (a^b)) correspondence.

Parts are stored largest first.  Every enumerator yields partitions in
lexicographically decreasing order so that downstream tables are stable.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence

__all__ = [
    "NotSuperDistinct",
    "Partition",
    "MarkedPartition",
    "RectPair",
    "PartitionClass",
    "enumerate_partitions",
    "marked_partitions",
    "total_parts",
    "conjugate",
    "partition_sum",
    "marked_to_pair",
    "pair_to_marked",
    "largest_part_at_most",
    "staircase",
    "staircase_decompose",
    "is_super_distinct",
]


class NotSuperDistinct(ValueError):
    """The partition has two parts differing by less than 2."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be non-increasing, got {parts}")

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> Partition:
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, k: int) -> int:
        """The k-th part (1-based), with the convention that it is 0 past the end."""
        if k < 1:
            raise IndexError("parts are indexed from 1")
        return self.parts[k - 1] if k <= len(self.parts) else 0

    def __contains__(self, value: object) -> bool:
        return value in self.parts

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def without(self, value: int, count: int = 1) -> Partition:
        """Remove `count` copies of `value`; raises ValueError if there are not enough."""
        parts = list(self.parts)
        for _ in range(count):
            parts.remove(value)
        return Partition(tuple(parts))

    def with_parts(self, *values: int) -> Partition:
        """Insert parts; zeros are ignored because parts are positive."""
        return Partition.from_parts(self.parts + tuple(v for v in values if v != 0))

    def render(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


@dataclass(frozen=True)
class MarkedPartition:
    """A partition with one occurrence of a part distinguished (1-based index)."""

    partition: Partition
    marked_index: int

    def __post_init__(self) -> None:
        if not 1 <= self.marked_index <= self.partition.length:
            raise ValueError(
                f"marked index {self.marked_index} out of range for {self.partition}"
            )

    @property
    def c(self) -> int:
        return self.partition.part(self.marked_index)

    @property
    def x(self) -> int:
        return self.partition.part(self.marked_index + 1)

    @property
    def y(self) -> int:
        return self.c - self.x

    @property
    def size(self) -> int:
        return self.partition.size

    def unmarked_rest(self) -> Partition:
        """The partition with the marked part removed."""
        parts = list(self.partition.parts)
        del parts[self.marked_index - 1]
        return Partition(tuple(parts))

    def __str__(self) -> str:
        cells = [
            f"{p}*" if i == self.marked_index else str(p)
            for i, p in enumerate(self.partition.parts, start=1)
        ]
        return "(" + ",".join(cells) + ")"


@dataclass(frozen=True, order=True)
class RectPair:
    """The pair (lambda, (a^b)): a partition together with b copies of a."""

    lam: Partition
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise ValueError(f"a and b must be positive, got a={self.a}, b={self.b}")

    @property
    def size(self) -> int:
        return self.lam.size + self.a * self.b

    def render(self) -> str:
        return f"lambda={self.lam.render()} a={self.a} b={self.b}"

    def __str__(self) -> str:
        rect = f"({self.a})" if self.b == 1 else f"({self.a}^{self.b})"
        return f"({self.lam}, {rect})"


def is_super_distinct(parts: Sequence[int]) -> bool:
    return all(parts[i] - parts[i + 1] >= 2 for i in range(len(parts) - 1))


def _distinct(parts: Sequence[int]) -> bool:
    return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


def _one_even_value(parts: Sequence[int]) -> bool:
    return len({p for p in parts if p % 2 == 0}) == 1


def _one_repeated_value(parts: Sequence[int]) -> bool:
    return sum(1 for m in Counter(parts).values() if m >= 2) == 1


class PartitionClass(enum.Enum):
    ALL = "all"
    ODD_PARTS = "odd_parts"
    DISTINCT = "distinct"
    SUPER_DISTINCT = "super_distinct"
    SUPER_DISTINCT_GT1 = "super_distinct_gt1"
    MOD5_PM1 = "mod5_pm1"
    MOD5_PM2 = "mod5_pm2"
    EXACTLY_ONE_EVEN_PART = "exactly_one_even_part"
    EXACTLY_ONE_REPEATED_PART = "exactly_one_repeated_part"

    def admits(self, parts: Sequence[int]) -> bool:
        """Membership test straight from the class definition."""
        return _PREDICATES[self](tuple(parts))

    @property
    def part_condition(self) -> Optional[Callable[[int], bool]]:
        """The per-part condition, for classes defined purely by which parts are allowed."""
        return _PART_CONDITIONS.get(self)


_PART_CONDITIONS: dict[PartitionClass, Callable[[int], bool]] = {
    PartitionClass.ALL: lambda p: True,
    PartitionClass.ODD_PARTS: lambda p: p % 2 == 1,
    PartitionClass.MOD5_PM1: lambda p: p % 5 in (1, 4),
    PartitionClass.MOD5_PM2: lambda p: p % 5 in (2, 3),
}

_PREDICATES: dict[PartitionClass, Callable[[tuple[int, ...]], bool]] = {
    PartitionClass.ALL: lambda ps: True,
    PartitionClass.ODD_PARTS: lambda ps: all(p % 2 for p in ps),
    PartitionClass.DISTINCT: _distinct,
    PartitionClass.SUPER_DISTINCT: is_super_distinct,
    PartitionClass.SUPER_DISTINCT_GT1: lambda ps: is_super_distinct(ps) and all(p > 1 for p in ps),
    PartitionClass.MOD5_PM1: lambda ps: all(p % 5 in (1, 4) for p in ps),
    PartitionClass.MOD5_PM2: lambda ps: all(p % 5 in (2, 3) for p in ps),
    PartitionClass.EXACTLY_ONE_EVEN_PART: _one_even_value,
    PartitionClass.EXACTLY_ONE_REPEATED_PART: _one_repeated_value,
}


def _gen(n: int, max_part: int, allowed: Callable[[int], bool], gap: int, min_part: int):
    """Partitions of n with parts in [min_part, max_part], consecutive parts >= gap apart.

    Largest first part first, so the output is lexicographically decreasing.
    """
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), min_part - 1, -1):
        if not allowed(p):
            continue
        for rest in _gen(n - p, p - gap, allowed, gap, min_part):
            yield (p,) + rest


def _merge(base: tuple[int, ...], value: int, count: int) -> tuple[int, ...]:
    return tuple(sorted(base + (value,) * count, reverse=True))


@lru_cache(maxsize=None)
def _raw(n: int, cls: PartitionClass) -> tuple[tuple[int, ...], ...]:
    if n < 0:
        return ()
    yes = _PART_CONDITIONS.get(cls)
    if yes is not None:
        return tuple(_gen(n, n, yes, 0, 1))
    if cls is PartitionClass.DISTINCT:
        return tuple(_gen(n, n, lambda p: True, 1, 1))
    if cls is PartitionClass.SUPER_DISTINCT:
        return tuple(_gen(n, n, lambda p: True, 2, 1))
    if cls is PartitionClass.SUPER_DISTINCT_GT1:
        return tuple(_gen(n, n, lambda p: True, 2, 2))
    out: list[tuple[int, ...]] = []
    if cls is PartitionClass.EXACTLY_ONE_EVEN_PART:
        # e^k glued onto an odd-part partition of the remainder
        for e in range(2, n + 1, 2):
            for k in range(1, n // e + 1):
                for rest in _raw(n - k * e, PartitionClass.ODD_PARTS):
                    out.append(_merge(rest, e, k))
    elif cls is PartitionClass.EXACTLY_ONE_REPEATED_PART:
        # v^k (k >= 2) glued onto a distinct-part partition avoiding v
        for v in range(1, n // 2 + 1):
            for k in range(2, n // v + 1):
                for rest in _raw(n - k * v, PartitionClass.DISTINCT):
                    if v not in rest:
                        out.append(_merge(rest, v, k))
    else:  # pragma: no cover - every enum member is handled above
        raise ValueError(f"unknown class {cls}")
    out.sort(reverse=True)
    return tuple(out)


def enumerate_partitions(n: int, cls: PartitionClass = PartitionClass.ALL) -> list[Partition]:
    """Every partition of n in `cls`, once each, lexicographically decreasing."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _raw(n, cls)]


def marked_partitions(n: int, cls: PartitionClass = PartitionClass.ALL) -> Iterator[MarkedPartition]:
    for lam in enumerate_partitions(n, cls):
        for i in range(1, lam.length + 1):
            yield MarkedPartition(lam, i)


def total_parts(n: int, cls: PartitionClass) -> int:
    """Number of parts summed over all partitions of n in `cls`."""
    return sum(len(p) for p in _raw(n, cls))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(tuple(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1)))


def partition_sum(lam: Partition, mu: Partition) -> Partition:
    """Componentwise sum, the shorter one padded with zeros."""
    k = max(lam.length, mu.length)
    return Partition(tuple(lam.part(i) + mu.part(i) for i in range(1, k + 1)))


def marked_to_pair(mu: MarkedPartition) -> RectPair:
    """Strip the first b copies of the marked value a, where the mark sits on the b-th copy."""
    a = mu.c
    b = mu.partition.parts[: mu.marked_index].count(a)
    return RectPair(mu.partition.without(a, b), a, b)


def pair_to_marked(pair: RectPair) -> MarkedPartition:
    parts = pair.lam.with_parts(*([pair.a] * pair.b)).parts
    first = parts.index(pair.a)
    return MarkedPartition(Partition(parts), first + pair.b)


def largest_part_at_most(lam: Partition, u: int) -> Optional[int]:
    for p in lam.parts:
        if p <= u:
            return p
    return None


def staircase(m: int) -> Partition:
    """The odd staircase (2m-1, 2m-3, ..., 3, 1)."""
    return Partition(tuple(range(2 * m - 1, 0, -2)))


def staircase_decompose(lam: Partition) -> tuple[int, Partition]:
    """Write a super-distinct lam as staircase(m) + conjugate(eta), eta with parts <= m."""
    if not is_super_distinct(lam.parts):
        raise NotSuperDistinct(f"{lam} does not have super-distinct parts")
    m = lam.length
    # n_i = lam_i - (2(m-i)+1) is non-increasing in i; those are the columns of eta.
    excess = tuple(p - (2 * (m - i) - 1) for i, p in enumerate(lam.parts))
    return m, conjugate(Partition(tuple(e for e in excess if e > 0)))
