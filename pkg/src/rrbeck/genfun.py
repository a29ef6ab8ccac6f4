"""Generating functions for both Rogers-Ramanujan identities and their part-count companions.

Every builder returns a :class:`~rrbeck.qseries.TruncatedSeries` at the
requested order.  Infinite sums over m stop at the first term whose lowest
exponent exceeds the order, since later terms vanish modulo q^(order+1).
"""

from __future__ import annotations

from .qseries import (
    DEFAULT_ORDER,
    TruncatedSeries,
    geometric_tail,
    invert,
    mul,
    pochhammer_finite,
    pochhammer_infinite,
    series_from_coeffs,
    zero,
)

__all__ = [
    "rr1_sum_side",
    "rr1_product_side",
    "rr2_sum_side",
    "rr2_product_side",
    "t1_series",
    "t2_series",
    "s1_series",
    "s2_series",
    "case_closed_form",
    "case5_series",
    "q_over_one_minus_q",
    "SERIES_BUILDERS",
]


def _qq(n: int, order: int) -> TruncatedSeries:
    """(q;q)_n"""
    return pochhammer_finite(1, 1, n, order)


def _weighted_sum_side(order: int, shift_linear: int, weight_by_n: bool) -> TruncatedSeries:
    """sum_n w(n) q^(n^2 + shift_linear*n) / (q;q)_n with w = 1 or w = n."""
    total = zero(order)
    n = 0
    while n * n + shift_linear * n <= order:
        w = n if weight_by_n else 1
        if w:
            term = invert(_qq(n, order)).shift(n * n + shift_linear * n)
            total = total + w * term
        n += 1
    return total


def rr1_sum_side(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return _weighted_sum_side(order, 0, False)


def rr1_product_side(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return invert(mul(pochhammer_infinite(1, 5, order), pochhammer_infinite(4, 5, order)))


def rr2_sum_side(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return _weighted_sum_side(order, 1, False)


def rr2_product_side(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return invert(mul(pochhammer_infinite(2, 5, order), pochhammer_infinite(3, 5, order)))


def _mod5_tails(residues: tuple[int, int], order: int, skip: frozenset[int] = frozenset()) -> TruncatedSeries:
    """sum over m >= 1 of q^a/(1-q^a) for a = 5m - r, r in residues, a not in skip."""
    total = zero(order)
    m = 1
    while 5 * m - max(residues) <= order:
        for r in residues:
            a = 5 * m - r
            if a not in skip and a <= order:
                total = total + geometric_tail(a, order)
        m += 1
    return total


def t1_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Parts in all partitions into parts congruent to +-1 mod 5."""
    return mul(rr1_sum_side(order), _mod5_tails((1, 4), order))


def t2_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Parts in all super-distinct partitions."""
    return _weighted_sum_side(order, 0, True)


def s1_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Parts in all partitions into parts congruent to +-2 mod 5."""
    return mul(rr2_sum_side(order), _mod5_tails((2, 3), order))


def s2_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Parts in all super-distinct partitions with parts greater than 1."""
    return _weighted_sum_side(order, 1, True)


def q_over_one_minus_q(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return geometric_tail(1, order)


def _poly(terms: dict[int, int], order: int) -> TruncatedSeries:
    cs = [0] * (order + 1)
    for e, c in terms.items():
        if 0 <= e <= order:
            cs[e] += c
    return series_from_coeffs(cs, order)


def _inner_polynomial(case: int, m: int) -> dict[int, int]:
    """The finite j-sum multiplying q^(m^2)/(q;q)_(m+1), as {exponent: coefficient}."""
    terms: dict[int, int] = {}

    def bump(e: int, c: int) -> None:
        terms[e] = terms.get(e, 0) + c

    if case in (1, 2):
        for j in range(1, m + 1):
            # q^(m+j) (1 - q^(m-j+1))
            bump(m + j, 1)
            bump(2 * m + 1, -1)
    elif case == 3:
        for j in range(2, m + 1):
            # q^(2j-2) (1 - q^(m-j+1)) (1 - q^(m-j+2))
            base = 2 * j - 2
            u, v = m - j + 1, m - j + 2
            bump(base, 1)
            bump(base + u, -1)
            bump(base + v, -1)
            bump(base + u + v, 1)
    elif case == 4:
        for j in range(1, m + 1):
            # q^(2j-1) (1 - q^(m-j+1))
            bump(2 * j - 1, 1)
            bump(2 * j - 1 + m - j + 1, -1)
    else:
        raise ValueError(f"case must be 1, 2, 3 or 4, got {case}")
    return terms


def case_closed_form(case: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Pairs (lambda, (1^b)) with lambda super-distinct, split by which of b-1, b, b+1 lie in lambda.

    case 1: b-1 in lambda, b+1 not;  case 2: b+1 in lambda, b-1 not;
    case 3: both b-1 and b+1;        case 4: b itself.
    """
    if case not in (1, 2, 3, 4):
        raise ValueError(f"case must be 1, 2, 3 or 4, got {case}")
    total = zero(order)
    m = 1
    while m * m <= order:
        inner = _poly(_inner_polynomial(case, m), order)
        if not inner.is_zero():
            front = invert(_qq(m + 1, order)).shift(m * m)
            total = total + mul(front, inner)
        m += 1
    return total


def case5_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Pairs (lambda, (a^b)) with lambda super-distinct and a > 1, a congruent to +-1 mod 5."""
    return mul(rr1_sum_side(order), _mod5_tails((1, 4), order, skip=frozenset({1})))


SERIES_BUILDERS = {
    "rr1_sum": rr1_sum_side,
    "rr1_prod": rr1_product_side,
    "rr2_sum": rr2_sum_side,
    "rr2_prod": rr2_product_side,
    "t1": t1_series,
    "t2": t2_series,
    "s1": s1_series,
    "s2": s2_series,
    "case1": lambda order=DEFAULT_ORDER: case_closed_form(1, order),
    "case2": lambda order=DEFAULT_ORDER: case_closed_form(2, order),
    "case3": lambda order=DEFAULT_ORDER: case_closed_form(3, order),
    "case4": lambda order=DEFAULT_ORDER: case_closed_form(4, order),
    "case5": case5_series,
}
