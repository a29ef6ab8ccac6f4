"""The injections phi and psi on marked partitions, and the image-set predicates I1..I7.

phi sends a marked super-distinct partition to a pair (lambda, (1^b)) by
turning the marked row into a column.  psi sends a marked super-distinct
partition with parts > 1 to a pair (lambda, (a^b)) with a = +-2 mod 5; it is
defined by a ladder of cases on the marked part c, the next part x and the gap
y = c - x.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

from .partitions import (
    MarkedPartition,
    Partition,
    PartitionClass,
    RectPair,
    enumerate_partitions,
    is_super_distinct,
    largest_part_at_most,
    marked_partitions,
)

__all__ = [
    "PreconditionViolated",
    "NotInImage",
    "ImageClassLabel",
    "PsiBranch",
    "PsiResult",
    "phi",
    "phi_inverse",
    "phi_image_member",
    "psi",
    "psi_traced",
    "image_class_member",
    "image_class_violations",
    "in_s1",
    "s1_set",
    "t1_set",
    "s_set",
]


class PreconditionViolated(ValueError):
    pass


class NotInImage(ValueError):
    pass


class ImageClassLabel(enum.Enum):
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"
    I5 = "I5"
    I6 = "I6"
    I7 = "I7"
    COMPLEMENT = "S"


class PsiBranch(enum.Enum):
    """Leaf of the psi case ladder that produced an output."""

    EVEN = "1"
    ODD_MOD5_23 = "2A"
    GAP_2_OR_3 = "2B(i)"
    MOD5_0_LAST = "2B(ii) x=0"
    MOD5_0_INNER = "2B(ii) x>0"
    MOD5_4_LAST = "2B(iii) x=0"
    MOD5_4_INNER = "2B(iii) x>0"
    MOD20_11_H0_LAST = "2B(iv)(a) h=0 x=0"
    MOD20_11_H0_INNER = "2B(iv)(a) h=0 x>0"
    MOD20_11_LAST = "2B(iv)(a) h>0 x=0"
    MOD20_11_INNER = "2B(iv)(a) h>0 x>0"
    MOD20_1_R0_LAST = "2B(iv)(b) r=0 x=0"
    MOD20_1_R0_INNER = "2B(iv)(b) r=0 x>0"
    MOD20_1_R1_LAST = "2B(iv)(b) r=1 x=0"
    MOD20_1_R1_INNER = "2B(iv)(b) r=1 x>0"
    MOD20_1_R2_LAST = "2B(iv)(b) r=2 x=0"
    MOD20_1_R2_INNER = "2B(iv)(b) r=2 x>0"


@dataclass(frozen=True)
class PsiResult:
    pair: RectPair
    label: ImageClassLabel
    branch: PsiBranch


# ---------------------------------------------------------------------------
# phi


def phi(mu: MarkedPartition) -> RectPair:
    if not is_super_distinct(mu.partition.parts):
        raise PreconditionViolated(f"{mu} is not super-distinct")
    return RectPair(mu.unmarked_rest(), 1, mu.c)


def phi_image_member(pair: RectPair) -> bool:
    lam, b = pair.lam, pair.b
    return pair.a == 1 and b - 1 not in lam and b not in lam and b + 1 not in lam


def phi_inverse(pair: RectPair) -> MarkedPartition:
    if not is_super_distinct(pair.lam.parts) or not phi_image_member(pair):
        raise NotInImage(f"{pair} is not in the image of phi")
    parts = pair.lam.with_parts(pair.b).parts
    return MarkedPartition(Partition(parts), parts.index(pair.b) + 1)


# ---------------------------------------------------------------------------
# psi


def _replace(lam: Partition, old: int, new: int) -> Partition:
    return lam.without(old).with_parts(new)


def psi_traced(mu: MarkedPartition) -> PsiResult:
    """psi together with the ladder branch that produced the output."""
    parts = mu.partition.parts
    if not is_super_distinct(parts) or any(p < 2 for p in parts):
        raise PreconditionViolated(f"{mu} must be super-distinct with all parts > 1")
    c, x, y = mu.c, mu.x, mu.y
    rest = mu.unmarked_rest()
    L, B = ImageClassLabel, PsiBranch

    if c % 2 == 0:
        return PsiResult(RectPair(rest, 2, c // 2), L.I1, B.EVEN)
    k = (c - 1) // 2
    if c % 5 in (2, 3):
        return PsiResult(RectPair(rest, c, 1), L.I2, B.ODD_MOD5_23)
    # c odd, c = 0, 1, 4 mod 5, so c >= 5
    if y in (2, 3):
        return PsiResult(RectPair(_replace(rest, x, x + 1), 2, k), L.I3, B.GAP_2_OR_3)

    if c % 5 == 0:
        j = (c - 5) // 10
        if x:
            return PsiResult(RectPair(_replace(rest, x, x + 1), 5 * j + 2, 2), L.I4, B.MOD5_0_INNER)
        return PsiResult(RectPair(rest.with_parts(5 * j + 3), 5 * j + 2, 1), L.I4, B.MOD5_0_LAST)

    if c % 5 == 4:
        j = (c - 9) // 10
        a = 5 * j + 3
        if x:
            return PsiResult(RectPair(_replace(rest, x, x + 3), a, 2), L.I5, B.MOD5_4_INNER)
        return PsiResult(RectPair(rest.with_parts(3), a, 2), L.I5, B.MOD5_4_LAST)

    # c = 1 mod 10
    if c % 20 == 11:
        h = (c - 11) // 20
        if h > 0:
            a = 5 * h + 2
            if x:
                return PsiResult(RectPair(_replace(rest, x, x + 3), a, 4), L.I6, B.MOD20_11_INNER)
            return PsiResult(RectPair(rest.with_parts(3), a, 4), L.I6, B.MOD20_11_LAST)
        if x:
            return PsiResult(RectPair(_replace(rest, x, x + 2), 3, 3), L.I6, B.MOD20_11_H0_INNER)
        return PsiResult(RectPair(rest.with_parts(2), 3, 3), L.I6, B.MOD20_11_H0_LAST)

    # c = 20h + 1, h >= 1
    h = (c - 1) // 20
    m, r = divmod(c, 3)
    inner = (B.MOD20_1_R0_INNER, B.MOD20_1_R1_INNER, B.MOD20_1_R2_INNER)[r]
    last = (B.MOD20_1_R0_LAST, B.MOD20_1_R1_LAST, B.MOD20_1_R2_LAST)[r]
    if x:
        lam = _replace(rest, x, x + r) if r else rest
        return PsiResult(RectPair(lam, 3, m), L.I7, inner)
    if r != 1:
        # with_parts drops a zero, so r = 0 leaves rest unchanged
        return PsiResult(RectPair(rest.with_parts(r), 3, m), L.I7, last)
    base = 5 * (h - 1)
    lam = rest.with_parts(base + 8, base + 6, base + 4)
    return PsiResult(RectPair(lam, base + 3, 1), L.I7, last)


def psi(mu: MarkedPartition) -> tuple[RectPair, ImageClassLabel]:
    res = psi_traced(mu)
    return res.pair, res.label


# ---------------------------------------------------------------------------
# S1, T1 and the complement S(n)


def in_s1(pair: RectPair) -> bool:
    parts = pair.lam.parts
    return (
        pair.a % 5 in (2, 3)
        and is_super_distinct(parts)
        and all(p > 1 for p in parts)
    )


def _pairs(n: int, lam_cls: PartitionClass, a_ok: Callable[[int], bool]) -> list[RectPair]:
    """All (lambda, (a^b)) of total size n with lambda in lam_cls and a_ok(a)."""
    out = []
    for a in range(1, n + 1):
        if not a_ok(a):
            continue
        for b in range(1, n // a + 1):
            for lam in enumerate_partitions(n - a * b, lam_cls):
                out.append(RectPair(lam, a, b))
    return out


def s1_set(n: int) -> list[RectPair]:
    """Pairs with lambda super-distinct, parts > 1, a = +-2 mod 5; empty for n = 0."""
    if n < 1:
        return []
    return _pairs(n, PartitionClass.SUPER_DISTINCT_GT1, lambda a: a % 5 in (2, 3))


def t1_set(n: int) -> list[RectPair]:
    """Pairs with lambda super-distinct and a = +-1 mod 5."""
    return _pairs(n, PartitionClass.SUPER_DISTINCT, lambda a: a % 5 in (1, 4))


def s_set(n: int) -> list[RectPair]:
    """Pairs in S1(n) that psi never reaches, sorted canonically."""
    if n < 1:
        return []
    image = {psi(mu)[0] for mu in marked_partitions(n, PartitionClass.SUPER_DISTINCT_GT1)}
    return sorted((p for p in s1_set(n) if p not in image), key=_pair_key)


def _pair_key(p: RectPair):
    return (p.a, p.b, tuple(-x for x in p.lam.parts))


# ---------------------------------------------------------------------------
# literal image-set conditions


Condition = tuple[str, Callable[[RectPair], bool]]


def _z(u: int, p: RectPair) -> Optional[int]:
    return largest_part_at_most(p.lam, u)


def _has(v: Callable[[RectPair], int]) -> Callable[[RectPair], bool]:
    return lambda p: v(p) in p.lam


def _lacks(*vs: Callable[[RectPair], int]) -> Callable[[RectPair], bool]:
    return lambda p: all(v(p) not in p.lam for v in vs)


def _z_at_least(u: Callable[[RectPair], int], lo: int, ts: tuple[int, ...]) -> Callable[[RectPair], bool]:
    """z_{u,lambda} exists, is >= lo, and z - t is not a part for each t in ts."""

    def check(p: RectPair) -> bool:
        z = _z(u(p), p)
        return z is not None and z >= lo and all(z - t not in p.lam for t in ts)

    return check


def _z_at_least_mixed(u_lo: Callable[[RectPair], int], u_t: Callable[[RectPair], int]) -> Callable[[RectPair], bool]:
    """z_{u_lo} >= 5 and z_{u_t} - t not a part for t = 2, 3, 4 (two different subscripts)."""

    def check(p: RectPair) -> bool:
        z1, z2 = _z(u_lo(p), p), _z(u_t(p), p)
        return z1 is not None and z1 >= 5 and z2 is not None and all(z2 - t not in p.lam for t in (2, 3, 4))

    return check


def _only_parts_up_to(bound: Callable[[RectPair], int], allowed: Callable[[RectPair], tuple[int, ...]]):
    """Every part z <= bound is one of `allowed`."""
    return lambda p: all(z > bound(p) or z in allowed(p) for z in p.lam)


def _mod20(r: int) -> Callable[[RectPair], bool]:
    return lambda p: p.b % 20 == r


_A = lambda p: p.a  # noqa: E731
_B = lambda p: p.b  # noqa: E731

# Each label maps to a union of subsets; a subset is a conjunction of named conditions.
# The conditions transcribe the printed set definitions as they stand.
IMAGE_SETS: dict[ImageClassLabel, list[list[Condition]]] = {
    ImageClassLabel.I1: [[
        ("a = 2", lambda p: p.a == 2),
        ("2k-1, 2k, 2k+1 not in lambda", _lacks(lambda p: 2 * p.b - 1, lambda p: 2 * p.b, lambda p: 2 * p.b + 1)),
    ]],
    ImageClassLabel.I2: [[
        ("b = 1", lambda p: p.b == 1),
        ("a odd", lambda p: p.a % 2 == 1),
        ("a-1, a, a+1 not in lambda", _lacks(lambda p: p.a - 1, _A, lambda p: p.a + 1)),
    ]],
    ImageClassLabel.I3: [
        [
            ("a = 2", lambda p: p.a == 2),
            ("k >= 2", lambda p: p.b >= 2),
            ("2k in lambda", _has(lambda p: 2 * p.b)),
            ("2k-2, 2k+2 not in lambda", _lacks(lambda p: 2 * p.b - 2, lambda p: 2 * p.b + 2)),
        ],
        [
            ("a = 2", lambda p: p.a == 2),
            ("k >= 2", lambda p: p.b >= 2),
            ("2k-1 in lambda", _has(lambda p: 2 * p.b - 1)),
            ("2k-3, 2k+1, 2k+2 not in lambda",
             _lacks(lambda p: 2 * p.b - 3, lambda p: 2 * p.b + 1, lambda p: 2 * p.b + 2)),
        ],
    ],
    ImageClassLabel.I4: [
        [
            ("b = 2", lambda p: p.b == 2),
            ("a > 2", lambda p: p.a > 2),
            ("a = 2 mod 5", lambda p: p.a % 5 == 2),
            ("2a-1, 2a, 2a+1, 2a+2 not in lambda",
             _lacks(lambda p: 2 * p.a - 1, lambda p: 2 * p.a, lambda p: 2 * p.a + 1, lambda p: 2 * p.a + 2)),
            ("z_{2a-2} >= 3 and z_{2a-2}-2 not in lambda", _z_at_least(lambda p: 2 * p.a - 2, 3, (2,))),
        ],
        [
            ("b = 1", lambda p: p.b == 1),
            ("a = 2 mod 5", lambda p: p.a % 5 == 2),
            ("a+1 in lambda", _has(lambda p: p.a + 1)),
            ("no other part <= 2a+2", _only_parts_up_to(lambda p: 2 * p.a + 2, lambda p: (p.a + 1,))),
        ],
    ],
    ImageClassLabel.I5: [
        [
            ("b = 2", lambda p: p.b == 2),
            ("a = 3 mod 5", lambda p: p.a % 5 == 3),
            ("2a+3, 2a+4 not in lambda", _lacks(lambda p: 2 * p.a + 3, lambda p: 2 * p.a + 4)),
            ("z_{2a+2} >= 5 and z_{2a+2}-t not in lambda, t=2,3,4",
             _z_at_least(lambda p: 2 * p.a + 2, 5, (2, 3, 4))),
        ],
        [
            ("b = 2", lambda p: p.b == 2),
            ("a = 3 mod 5", lambda p: p.a % 5 == 3),
            ("3 in lambda", _has(lambda p: 3)),
            ("no other part <= 2a+4", _only_parts_up_to(lambda p: 2 * p.a + 4, lambda p: (3,))),
        ],
    ],
    ImageClassLabel.I6: [
        [
            ("b = 4", lambda p: p.b == 4),
            ("a = 2 mod 5", lambda p: p.a % 5 == 2),
            ("a > 2", lambda p: p.a > 2),
            ("4a+3, 4a+4 not in lambda", _lacks(lambda p: 4 * p.a + 3, lambda p: 4 * p.a + 4)),
            ("z_{4a+2} >= 5 and z_{2a+2}-t not in lambda, t=2,3,4",
             _z_at_least_mixed(lambda p: 4 * p.a + 2, lambda p: 2 * p.a + 2)),
        ],
        [
            ("b = 4", lambda p: p.b == 4),
            ("a = 2 mod 5", lambda p: p.a % 5 == 2),
            ("a > 2", lambda p: p.a > 2),
            ("3 in lambda", _has(lambda p: 3)),
            ("no other part <= 4a+4", _only_parts_up_to(lambda p: 4 * p.a + 4, lambda p: (3,))),
        ],
        [
            ("a = 3, b = 3", lambda p: p.a == 3 and p.b == 3),
            ("10, 11, 12 not in lambda", _lacks(lambda p: 10, lambda p: 11, lambda p: 12)),
            ("z_9 >= 4 and z_9-t not in lambda, t=2,3", _z_at_least(lambda p: 9, 4, (2, 3))),
        ],
        [
            ("a = 3, b = 3", lambda p: p.a == 3 and p.b == 3),
            ("2 in lambda", _has(lambda p: 2)),
            ("no other part <= 12", _only_parts_up_to(lambda p: 12, lambda p: (2,))),
        ],
    ],
    ImageClassLabel.I7: [
        [
            ("a = 3", lambda p: p.a == 3),
            ("m = 7 mod 20", _mod20(7)),
            ("3m-3 .. 3m+1 not in lambda", lambda p: all(3 * p.b + d not in p.lam for d in range(-3, 2))),
            ("some part <= 3m-4", lambda p: _z(3 * p.b - 4, p) is not None),
        ],
        [
            ("a = 3", lambda p: p.a == 3),
            ("m = 0 mod 20, m > 0", _mod20(0)),
            ("3m+1, 3m+2 not in lambda", _lacks(lambda p: 3 * p.b + 1, lambda p: 3 * p.b + 2)),
            ("z_{3m-2} >= 3 and z_{3m-2}-2 not in lambda", _z_at_least(lambda p: 3 * p.b - 2, 3, (2,))),
        ],
        [
            ("a = 3", lambda p: p.a == 3),
            ("m = 13 mod 20", _mod20(13)),
            ("3m+1, 3m+2, 3m+3 not in lambda",
             _lacks(lambda p: 3 * p.b + 1, lambda p: 3 * p.b + 2, lambda p: 3 * p.b + 3)),
            ("z_{3m} >= 4 and z_{3m}-t not in lambda, t=2,3", _z_at_least(lambda p: 3 * p.b, 4, (2, 3))),
        ],
        [
            ("a = 3", lambda p: p.a == 3),
            ("m = 7 mod 20", _mod20(7)),
            ("no part <= 3m+1", _only_parts_up_to(lambda p: 3 * p.b + 1, lambda p: ())),
        ],
        [
            ("a = 3", lambda p: p.a == 3),
            ("m = 13 mod 20", _mod20(13)),
            ("2 in lambda", _has(lambda p: 2)),
            ("no other part <= 3m+3", _only_parts_up_to(lambda p: 3 * p.b + 3, lambda p: (2,))),
        ],
        [
            ("b = 1", lambda p: p.b == 1),
            ("a = 13 mod 15", lambda p: p.a % 15 == 13),
            ("a+1, a+3, a+5 in lambda", lambda p: all(p.a + d in p.lam for d in (1, 3, 5))),
            ("no other part <= 4a+10",
             _only_parts_up_to(lambda p: 4 * p.a + 10, lambda p: (p.a + 1, p.a + 3, p.a + 5))),
        ],
    ],
}


def image_class_violations(pair: RectPair, label: ImageClassLabel) -> list[list[str]]:
    """For each subset in the union defining `label`, the names of the conditions `pair` fails.

    The pair is a member exactly when some inner list is empty.
    """
    if label is ImageClassLabel.COMPLEMENT:
        raise ValueError("the complement has no printed membership formula")
    return [[name for name, ok in subset if not ok(pair)] for subset in IMAGE_SETS[label]]


def image_class_member(pair: RectPair, label: ImageClassLabel) -> bool:
    return any(not failed for failed in image_class_violations(pair, label))
