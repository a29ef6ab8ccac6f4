"""Brute-force reference computations used as test oracles.

Nothing here imports rrbeck: these routines exist so that the package can be
checked against code that shares none of its logic.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def accel_asc(n):
    """All partitions of n (Kelleher's ascending composition algorithm), parts ascending."""
    if n == 0:
        yield ()
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        l = k + 1
        while x <= y:
            a[k] = x
            a[l] = y
            yield tuple(a[: k + 2])
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield tuple(a[: k + 1])


def partitions_desc(n):
    """All partitions of n as descending tuples."""
    return [tuple(reversed(p)) for p in accel_asc(n)]


def super_distinct(p, min_part=1):
    return all(x >= min_part for x in p) and all(p[i] - p[i + 1] >= 2 for i in range(len(p) - 1))


def poly_mul(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if x == 0 or i > order:
            continue
        for j, y in enumerate(b):
            if i + j > order:
                break
            out[i + j] += x * y
    return out


def box_polynomial(A, k):
    """Coefficients of partitions fitting in a k x A box, by listing every weakly increasing k-tuple."""
    if A < 0 or k < 0:
        return []
    out = [0] * (A * k + 1)
    for tup in product(range(A + 1), repeat=k):
        if all(tup[i] <= tup[i + 1] for i in range(k - 1)):
            out[sum(tup)] += 1
    return out


def count_pairs(n, lam_ok, a_ok, extra=lambda lam, a, b: True):
    """Pairs (lam, (a^b)) of total size n, counted by looping over a, b and all partitions."""
    total = 0
    for a in range(1, n + 1):
        if not a_ok(a):
            continue
        for b in range(1, n // a + 1):
            for lam in partitions_desc(n - a * b):
                if lam_ok(lam) and extra(lam, a, b):
                    total += 1
    return total


@lru_cache(maxsize=None)
def bounded_count(n, k, A):
    """Partitions of n into at most k parts each at most A, split on whether the largest part equals A."""
    if n == 0:
        return 1
    if n < 0 or k == 0 or A == 0:
        return 0
    return bounded_count(n, k, A - 1) + bounded_count(n - A, k - 1, A)
