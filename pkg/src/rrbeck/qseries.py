"""Truncated formal power series in q with exact integer coefficients.

A :class:`TruncatedSeries` stores the coefficients of q^0 .. q^N and forgets
everything above q^N.  Binary operations truncate to the smaller of the two
orders, so a result never claims more precision than its inputs carry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "NonUnitConstantTerm",
    "TruncatedSeries",
    "series_from_coeffs",
    "zero",
    "one",
    "monomial",
    "add",
    "sub",
    "mul",
    "invert",
    "pochhammer_finite",
    "pochhammer_infinite",
    "geometric_tail",
    "gaussian_binomial",
]

DEFAULT_ORDER = 200


class NonUnitConstantTerm(ValueError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be non-negative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coeffs must have exactly order + 1 entries")

    def __getitem__(self, n: int) -> int:
        """Coefficient of q^n; zero for negative n, error above the order."""
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"q^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def __add__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        return sub(self, _coerce(other, self.order))

    def __rsub__(self, other: int) -> TruncatedSeries:
        return sub(_coerce(other, self.order), self)

    def __mul__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * c for c in self.coeffs), self.order)
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise ValueError("shift only supports non-negative exponents")
        if k > self.order:
            return zero(self.order)
        return TruncatedSeries((0,) * k + self.coeffs[: self.order + 1 - k], self.order)

    def truncate(self, order: int) -> TruncatedSeries:
        return series_from_coeffs(self.coeffs, min(order, self.order))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "q" if i == 1 else f"q^{i}"
                coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
                terms.append(coef + mono)
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def _coerce(value: TruncatedSeries | int, order: int) -> TruncatedSeries:
    if isinstance(value, TruncatedSeries):
        return value
    return series_from_coeffs([value], order)


def series_from_coeffs(coeffs: Iterable[int], order: int) -> TruncatedSeries:
    """Build a series from a coefficient list, zero-padding or truncating it to `order`."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    cs = [int(c) for c in coeffs][: order + 1]
    cs.extend([0] * (order + 1 - len(cs)))
    return TruncatedSeries(tuple(cs), order)


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries((0,) * (order + 1), order)


def one(order: int) -> TruncatedSeries:
    return series_from_coeffs([1], order)


def monomial(exponent: int, order: int, coeff: int = 1) -> TruncatedSeries:
    """coeff * q^exponent, which is the zero series when exponent > order."""
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    cs = [0] * (order + 1)
    if exponent <= order:
        cs[exponent] = coeff
    return TruncatedSeries(tuple(cs), order)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(a.coeffs[i] + b.coeffs[i] for i in range(n + 1)), n)


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(a.coeffs[i] - b.coeffs[i] for i in range(n + 1)), n)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    # Walk the sparser operand on the outside; most factors here are short polynomials.
    sa = [(i, c) for i, c in enumerate(a.coeffs[: n + 1]) if c]
    sb = [(j, c) for j, c in enumerate(b.coeffs[: n + 1]) if c]
    if len(sa) > len(sb):
        sa, sb = sb, sa
    out = [0] * (n + 1)
    for i, ci in sa:
        for j, cj in sb:
            if i + j > n:
                break
            out[i + j] += ci * cj
    return TruncatedSeries(tuple(out), n)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse modulo q^(order+1).

    Solves ``sum_{k<=i} a_k r_{i-k} = [i == 0]`` term by term, which only
    stays in the integers when the constant term is a unit.
    """
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {a0} is not invertible over the integers")
    n = a.order
    support = [(k, c) for k, c in enumerate(a.coeffs) if k and c]
    r = [0] * (n + 1)
    r[0] = a0  # 1/a0 == a0 for a0 in {1, -1}
    for i in range(1, n + 1):
        acc = 0
        for k, c in support:
            if k > i:
                break
            acc += c * r[i - k]
        r[i] = -acc * a0
    return TruncatedSeries(tuple(r), n)


def pochhammer_finite(start: int, step: int, n: int, order: int) -> TruncatedSeries:
    """The product (1 - q^s)(1 - q^(s+t)) ... (1 - q^(s+(n-1)t)), i.e. (q^s; q^t)_n."""
    if start < 1 or step < 1:
        raise ValueError("start and step must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    cs = [0] * (order + 1)
    cs[0] = 1
    for j in range(n):
        e = start + j * step
        if e > order:
            break
        # in-place multiply by (1 - q^e), high to low so each term is read before it is updated
        for i in range(order, e - 1, -1):
            cs[i] -= cs[i - e]
    return TruncatedSeries(tuple(cs), order)


def pochhammer_infinite(start: int, step: int, order: int) -> TruncatedSeries:
    """(q^s; q^t)_infinity; factors with exponent above `order` are 1 modulo q^(order+1)."""
    if start < 1 or step < 1:
        raise ValueError("start and step must be positive")
    n = 0 if start > order else (order - start) // step + 1
    return pochhammer_finite(start, step, n, order)


def geometric_tail(a: int, order: int) -> TruncatedSeries:
    """q^a / (1 - q^a) = q^a + q^2a + ..."""
    if a < 1:
        raise ValueError("a must be positive")
    cs = [0] * (order + 1)
    for e in range(a, order + 1, a):
        cs[e] = 1
    return TruncatedSeries(tuple(cs), order)


def gaussian_binomial(A: int, k: int, order: int) -> TruncatedSeries:
    """The q-binomial coefficient [A+k choose k]_q, truncated.

    Counts partitions with at most k parts, each at most A.  Zero when A, k or
    A+k is negative.
    """
    if A < 0 or k < 0:
        return zero(order)
    # Box recurrence P(j, w) = P(j-1, w) + q^j P(j, w-1): either fewer than j
    # parts, or exactly j parts with one column of height j stripped off.
    k, A = min(k, A), max(k, A)
    rows = [[1] for _ in range(A + 1)]  # rows[w] = P(0, w) = 1
    for j in range(1, k + 1):
        new = [[1]]
        for w in range(1, A + 1):
            prev_j = rows[w]
            left = new[w - 1]
            size = max(len(prev_j), len(left) + j)
            poly = [0] * size
            for i, c in enumerate(prev_j):
                poly[i] += c
            for i, c in enumerate(left):
                poly[i + j] += c
            new.append(poly)
        rows = new
    return series_from_coeffs(rows[A], order)
