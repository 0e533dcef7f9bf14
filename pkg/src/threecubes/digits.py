"""Signed decimal digit sums and their iteration to a fixed point.

The digit sum of a negative integer is defined as the negated digit sum
of its absolute value, so repeated application converges to a signed
single-digit value in [-9..9]: casting out nines, kept sign-aware.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ClassifiedInt:
    """An integer together with its digit-sum iteration trace.

    ``trace[0]`` is the original value and ``trace[-1]`` the digital
    root; every intermediate step strictly shrinks in absolute value.
    ``iterations`` counts digit-sum applications until the value first
    stops moving, so a value that is already single-digit has
    ``iterations == 0``.
    """

    value: int
    trace: tuple[int, ...]
    root: int
    iterations: int


def digital_sum(v: int) -> int:
    """Signed sum of the decimal digits of v (0 maps to 0)."""
    s = sum(map(int, str(abs(v))))
    return -s if v < 0 else s


def digital_root(v: int) -> ClassifiedInt:
    """Iterate digital_sum until it stops moving.

    Terminates because |digital_sum(v)| < |v| whenever |v| > 9, and
    every value in [-9..9] is a fixed point.
    """
    trace = [v]
    cur = v
    while abs(cur) > 9:
        cur = digital_sum(cur)
        trace.append(cur)
    return ClassifiedInt(value=v, trace=tuple(trace), root=cur, iterations=len(trace) - 1)


def fixed_points(k: int, lo: int, hi: int) -> set[int]:
    """All v in [lo..hi] that k applications of digital_sum map to themselves.

    k = 0 is rejected: zero applications fix everything, which is not a
    meaningful fixed-point set. Over any range the answer is the
    single-digit band [-9..9] intersected with [lo..hi], independent of
    k, because digit-sum iteration has no cycles longer than 1; this
    function verifies that by direct evaluation rather than assuming it.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    found = set()
    for v in range(lo, hi + 1):
        w = v
        for _ in range(k):
            w = digital_sum(w)
        if w == v:
            found.add(v)
    return found
