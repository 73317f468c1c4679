"""Exact real-root counting with Sturm sequences.

Remainders are computed as sign-preserving pseudo-remainders over the
integers and reduced to primitive parts, so every member of the sequence is
a positive multiple of the classical rational one and sign counts agree.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .intpoly import IntPoly


def _primitive(coeffs: list[int]) -> list[int]:
    g = math.gcd(*coeffs) if coeffs else 0
    return [c // g for c in coeffs] if g > 1 else coeffs


def _neg_prem(a: list[int], b: list[int]) -> list[int]:
    """A positive multiple of -(a mod b)."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    scale, sign = abs(lead), (1 if lead > 0 else -1)
    while len(r) - 1 >= db and r:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [c * scale for c in r]
        f = top * sign
        for t, c in enumerate(b):
            r[shift + t] -= f * c
        while r and r[-1] == 0:
            r.pop()
        r = _primitive(r)
    return [-c for c in r]


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    if not p:
        raise ValueError("zero polynomial has no Sturm sequence")
    seq = [list(p.coeffs), list(p.derivative().coeffs)]
    if not seq[1]:
        return [p]
    while True:
        r = _neg_prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(_primitive(r))
    return [IntPoly(c) for c in seq]


def sign_at(p: IntPoly, x: Fraction) -> int:
    """Sign of p(x), using a homogenised integer Horner scheme."""
    x = Fraction(x)
    u, v = x.numerator, x.denominator
    acc, vpow = 0, 1
    for c in reversed(p.coeffs):
        acc = acc * u + c * vpow
        vpow *= v
    # acc == v^deg * p(u/v), and v > 0
    return (acc > 0) - (acc < 0)


def variations(seq: list[IntPoly], x: Fraction) -> int:
    signs = [s for s in (sign_at(q, x) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _linear_factor(x: Fraction) -> IntPoly:
    return IntPoly([-x.numerator, x.denominator])


def _deflate(p: IntPoly, x: Fraction) -> IntPoly:
    factor = _linear_factor(x)
    while sign_at(p, x) == 0:
        p = p.exact_divide(factor)
    return p


def count_roots(p: IntPoly, lo, hi, seq: list[IntPoly] | None = None) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        return 0
    extra = 0
    if sign_at(p, hi) == 0:
        p, extra, seq = _deflate(p, hi), 1, None
    if sign_at(p, lo) == 0:
        p, seq = _deflate(p, lo), None
    if seq is None:
        seq = sturm_sequence(p)
    return variations(seq, lo) - variations(seq, hi) + extra


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: every root has absolute value below it."""
    lead = abs(p.leading())
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), lead) if p.degree > 0 else Fraction(1)


def real_root_count(p: IntPoly) -> int:
    m = root_bound(p)
    return count_roots(p, -m, m)


def isolate_root(p: IntPoly, lo, hi, width=Fraction(1, 2**40)) -> tuple[Fraction, Fraction]:
    """Shrink (lo, hi] around its single root until narrower than ``width``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if count_roots(p, lo, hi) != 1:
        raise ValueError("interval must hold exactly one root")
    if sign_at(p, hi) == 0:
        return hi, hi
    seq = sturm_sequence(p)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if sign_at(p, mid) == 0:
            return mid, mid
        if variations(seq, lo) - variations(seq, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi
