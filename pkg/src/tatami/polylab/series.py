"""Truncated power series with integer coefficients.

A series is a plain list ``c`` standing for ``sum(c[k] z^k)`` modulo
``z^len(c)``.
"""
from __future__ import annotations

import math
from typing import Sequence


def series_mul(a: Sequence[int], b: Sequence[int], order: int) -> list[int]:
    out = [0] * order
    for i, x in enumerate(a[:order]):
        if x:
            for j, y in enumerate(b[: order - i]):
                out[i + j] += x * y
    return out


def series_div(a: Sequence[int], b: Sequence[int], order: int) -> list[int]:
    """a / b for b with constant term +-1."""
    if b[0] not in (1, -1):
        raise ValueError("divisor must have a unit constant term")
    out = [0] * order
    for k in range(order):
        acc = a[k] if k < len(a) else 0
        for j in range(1, min(k, len(b) - 1) + 1):
            acc -= b[j] * out[k - j]
        out[k] = acc * b[0]
    return out


def inverse_sqrt_one_minus_4z2(order: int) -> list[int]:
    """1 / sqrt(1 - 4 z^2) = sum of C(2k, k) z^(2k)."""
    return [math.comb(k, k // 2) if k % 2 == 0 else 0 for k in range(order)]


def pn_neg1_series(N: int) -> list[int]:
    """First N + 1 coefficients of (1+z)(1-2z) / ((1-2z^2) sqrt(1-4z^2))."""
    if N < 0:
        raise ValueError("N must be non-negative")
    order = N + 1
    numerator = series_mul([1, -1, -2], inverse_sqrt_one_minus_4z2(order), order)
    return series_div(numerator, [1, 0, -2], order)


def distinct_parts(order: int, types: int = 1) -> list[int]:
    """Coefficients of prod_{m >= 1} (1 + z^m)^types up to z^(order-1)."""
    out = [1] + [0] * (order - 1)
    for m in range(1, order):
        for _ in range(types):
            for k in range(order - 1, m - 1, -1):
                out[k] += out[k - m]
    return out
