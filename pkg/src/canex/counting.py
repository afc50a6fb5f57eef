"""Exact and asymptotic counts of tree shapes, variable namings, and their pairs.

A canonical expression with ``n`` leaves pairs one of the catalan(n-1) tree
shapes with one of the bell(n) growth strings, so there are
``catalan(n-1) * bell(n)`` of them.
"""

from __future__ import annotations

import math
import threading
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan is defined for n >= 0")
    return math.comb(2 * n, n) // (n + 1)


_bell_lock = threading.Lock()
_bell_values = [1, 1]  # index n holds the n-th Bell number
_bell_row = [1]        # latest Bell-triangle row, grown on demand


def bell(n: int) -> int:
    if n < 0:
        raise ValueError("bell is defined for n >= 0")
    with _bell_lock:
        while len(_bell_values) <= n:
            row = _bell_row
            new = [row[-1]]
            for x in row:
                new.append(new[-1] + x)
            _bell_row[:] = new
            _bell_values.append(new[-1])
        return _bell_values[n]


def count_canonical(n: int) -> int:
    """Number of canonical expressions with ``n`` leaves (exact)."""
    if n < 1:
        raise ValueError("expressions have at least one leaf")
    return catalan(n - 1) * bell(n)


def lambert_root(n: int) -> float:
    """The positive root r of ``r * exp(r) = n + 1``.

    Newton iteration from ``log(n + 1)``; the residual ``|r*e^r - (n+1)|``
    stays below ``1e-10 * (n + 1)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    target = n + 1
    r = math.log(target) if target > 2 else 0.5
    for _ in range(80):
        er = math.exp(r)
        f = r * er - target
        if abs(f) <= 1e-13 * target:
            break
        r -= f / (er * (1.0 + r))
    return r


def log10_count_estimate(n: int) -> float:
    """log10 of the saddle-point estimate of ``count_canonical(n)``.

    Product of the shape estimate ``4^(n-1) / sqrt(pi (n-1)^3)`` and the
    naming estimate ``n! e^(e^r - 1) / (r^n sqrt(2 pi r (r+1) e^r))`` with
    ``r`` the root of ``r e^r = n + 1``; evaluated in the log domain.
    """
    if n < 2:
        raise ValueError("the estimate needs n >= 2")
    r = lambert_root(n)
    ln_value = (
        math.lgamma(n + 1)
        + (n - 1) * math.log(4.0)
        + (math.exp(r) - 1.0)
        - n * math.log(r)
        - math.log(math.pi)
        - 0.5 * (math.log(2.0) + 3.0 * math.log(n - 1.0)
                 + math.log(r) + math.log(r + 1.0) + r)
    )
    return ln_value / math.log(10.0)


_TAIL_EPSILON = 1e-12


@dataclass(frozen=True)
class StamTable:
    """Class-count distribution for uniform set partitions of ``n`` elements.

    ``probs[m-1]`` is the probability that a uniform partition has exactly
    ``m`` classes, ``m^n / (e * m! * bell(n))``; the table is truncated once
    the cumulative mass exceeds ``1 - 1e-12``.
    """

    n: int
    probs: tuple[float, ...]
    cumulative: tuple[float, ...]

    @property
    def m_max(self) -> int:
        return len(self.probs)

    def class_count(self, u: float) -> int:
        """Invert the cumulative table at ``u`` in [0, 1); clamps to m_max."""
        m = bisect_right(self.cumulative, u) + 1
        return m if m <= self.m_max else self.m_max


@lru_cache(maxsize=None)
def stam_table(n: int) -> StamTable:
    if n < 1:
        raise ValueError("partition tables need n >= 1")
    bell_n = bell(n)
    probs: list[float] = []
    cumulative: list[float] = []
    total = 0.0
    m = 0
    cap = 8 * n + 64
    while total < 1.0 - _TAIL_EPSILON:
        m += 1
        if m > cap:
            raise RuntimeError(f"class-count table for n={n} failed to converge")
        # Exact rational, correctly rounded to float, then one division by e.
        p = float(Fraction(m ** n, math.factorial(m) * bell_n)) / math.e
        total += p
        probs.append(p)
        cumulative.append(total)
    return StamTable(n=n, probs=tuple(probs), cumulative=tuple(cumulative))
