"""Generating polynomials of T_n and their cyclotomic structure."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..gensets import subset_sum_counts
from .intpoly import IntPoly, NonzeroRemainderError, mpz, product, unpack_coeffs


class TheoremViolation(AssertionError):
    """Two routes to a quantity that must agree did not."""


def nu(m: int) -> int:
    """Number of 1 bits of ``m``."""
    return bin(m).count("1")


def odd_part(k: int) -> int:
    """Largest odd divisor of ``k >= 1``."""
    if k < 1:
        raise ValueError("odd_part needs k >= 1")
    return k >> ((k & -k).bit_length() - 1)


def _check_n(n: int, low: int = 2) -> None:
    if not isinstance(n, int) or n < low:
        raise ValueError(f"need an integer n >= {low}, got {n!r}")


@lru_cache(maxsize=None)
def s_poly(n: int) -> IntPoly:
    """Product of (1 + z^i) for i = 1..n."""
    _check_n(n, 0)
    if n == 0:
        return IntPoly.one()
    for m in range(1, n):  # fill the cache bottom-up
        s_poly(m)
    return s_poly(n - 1).times_binomial(n)


def vh_degree(n: int) -> int:
    return (n * n - n) // 2 - (n - 1)


def vh_poly_direct(n: int) -> IntPoly:
    """vh_poly(n) built term by term from the defining sum of products."""
    _check_n(n)
    half = s_poly((n - 2) // 2)
    total = half * half
    for i in range(1, (n - 1) // 2 + 1):
        total = total + (s_poly(n - i - 2) * s_poly(i - 1)).shift(n - i - 1) * 2
    return total


@lru_cache(maxsize=None)
def vh_poly(n: int) -> IntPoly:
    """Generating polynomial of T_n by vertical (even n) or horizontal (odd n)
    dominoes.

    The sum over i of z^(n-i-1) S_{n-i-2} S_{i-1} is nested Horner-style:
    pulling out S_{n-h-2} (h the top index) leaves consecutive terms that
    differ by one factor (1 + z^m), so the whole sum costs one big product.
    Everything runs on integers packed at z = 2^B, with B wide enough for
    the largest coefficient n * 2^(n-3).
    """
    _check_n(n)
    nbytes = (n + n.bit_length() + 2) // 8 + 1
    bits = 8 * nbytes
    h = (n - 1) // 2
    half = (n - 2) // 2
    packed_s = [mpz(1)]
    for m in range(1, max(n - h - 2, half) + 1):
        packed_s.append(packed_s[-1] + (packed_s[-1] << (bits * m)))
    acc = mpz(0)
    for i in range(1, h + 1):
        shift = bits * (n - i - 1)
        if i > 1:
            acc += acc << shift
        acc += packed_s[i - 1] << shift
    total = packed_s[half] * packed_s[half]
    if h:
        total += 2 * packed_s[n - h - 2] * acc
    return IntPoly(unpack_coeffs(int(total), vh_degree(n) + 1, nbytes))


def _convolve_at(s1: int, s2: int, k: int) -> int:
    """Sum over k1 + k2 = k of S(s1, k1) S(s2, k2)."""
    if k < 0:
        return 0
    a, b = subset_sum_counts(s1), subset_sum_counts(s2)
    lo, hi = max(0, k - len(b) + 1), min(k, len(a) - 1)
    return sum(a[k1] * b[k - k1] for k1 in range(lo, hi + 1))


def vh_coeff(n: int, k: int) -> int:
    """Coefficient of z^k in vh_poly(n), summed directly from subset counts."""
    _check_n(n)
    total = sum(2 * _convolve_at(n - i - 2, i - 1, k - (n - i - 1)) for i in range(1, (n - 1) // 2 + 1))
    half = (n - 2) // 2
    return total + _convolve_at(half, half, k)


def divisors(m: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(m) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, by exact division of z^m - 1."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {m!r}")
    numerator = IntPoly.monomial(m) - 1
    return numerator.exact_divide(product([cyclotomic(d) for d in divisors(m) if d < m]))


def d_poly_from_s(n: int) -> IntPoly:
    """D_n as the product of S_{floor((n-2)/2^j)} over j >= 1."""
    _check_n(n)
    factors, j = [], 1
    while (n - 2) >> j:
        factors.append(s_poly((n - 2) >> j))
        j += 1
    return product(factors)


def d_poly_from_cyclotomic(n: int) -> IntPoly:
    """D_n as the product of Phi_{2j}^floor((n-2)/(2j)) over j >= 1."""
    _check_n(n)
    return product([cyclotomic(2 * j) ** ((n - 2) // (2 * j)) for j in range(1, (n - 2) // 2 + 1)])


@lru_cache(maxsize=None)
def d_poly(n: int) -> IntPoly:
    """The cyclotomic factor D_n of vh_poly(n); both constructions must agree."""
    by_cyclotomic = d_poly_from_cyclotomic(n)
    by_s = d_poly_from_s(n)
    if by_cyclotomic != by_s:
        raise TheoremViolation(f"D_{n}: S-product and cyclotomic product differ")
    return by_cyclotomic


@lru_cache(maxsize=None)
def p_poly(n: int) -> IntPoly:
    """vh_poly(n) / d_poly(n); raises NonzeroRemainderError if D_n does not divide."""
    return vh_poly(n).exact_divide(d_poly(n))


def predicted_deg_p(n: int) -> int:
    _check_n(n)
    by_odd_parts = sum(odd_part(k) for k in range(1, n - 1))
    by_binomials = math.comb(n - 1, 2)
    j = 1
    while (n - 2) >> j:
        by_binomials -= math.comb(((n - 2) >> j) + 1, 2)
        j += 1
    if by_odd_parts != by_binomials:
        raise TheoremViolation(f"deg P_{n}: {by_odd_parts} != {by_binomials}")
    return by_odd_parts


def p_at_one_predicted(n: int) -> int:
    _check_n(n)
    value = n * Fraction(2) ** (nu(n - 2) - 1)
    if value.denominator != 1:
        raise TheoremViolation(f"P_{n}(1) = {value} is not an integer")
    return int(value)


def d_at_one_predicted(n: int) -> int:
    _check_n(n)
    return 2 ** (n - 2 - nu(n - 2))


def floor_halving_sum(x) -> int:
    """Sum over k >= 1 of floor(x / 2^k + 1/2), in exact arithmetic."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be non-negative")
    total, k = 0, 1
    while 2 ** k <= 2 * x:
        total += math.floor(x / 2 ** k + Fraction(1, 2))
        k += 1
    return total


def r_poly(n: int) -> IntPoly:
    """R_n(x, 1): all four rotations of T_n counted by vertical dominoes."""
    vh = vh_poly(n)
    return vh * 2 + vh.reciprocal((n * n - n) // 2) * 2


def balanced_count(n: int) -> int | None:
    """Coverings in T_n with equal vertical and horizontal dominoes, or None
    when the domino count is odd."""
    _check_n(n)
    dominoes = n * n - n
    if dominoes % 4:
        return None
    return vh_poly(n)[dominoes // 4]


def balanced_sequence(nmax: int) -> list[int]:
    return [balanced_count(n) or 0 for n in range(2, nmax + 1)]


def s_poly_from_cyclotomic(n: int) -> IntPoly:
    """S_n as the product of Phi_{2j}^floor((n+j)/(2j))."""
    _check_n(n, 0)
    return product([cyclotomic(2 * j) ** ((n + j) // (2 * j)) for j in range(1, n + 1)])


__all__ = [
    "NonzeroRemainderError",
    "TheoremViolation",
    "balanced_count",
    "balanced_sequence",
    "cyclotomic",
    "d_at_one_predicted",
    "d_poly",
    "d_poly_from_cyclotomic",
    "d_poly_from_s",
    "divisors",
    "floor_halving_sum",
    "nu",
    "odd_part",
    "p_at_one_predicted",
    "p_poly",
    "predicted_deg_p",
    "r_poly",
    "s_poly",
    "s_poly_from_cyclotomic",
    "vh_coeff",
    "vh_degree",
    "vh_poly",
    "vh_poly_direct",
]
