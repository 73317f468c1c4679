"""Dense univariate polynomials with exact integer coefficients.

Large products and exact quotients go through Kronecker substitution: both
operands are evaluated at z = 2^B, multiplied or divided as single big
integers, and the result is read back B bits at a time.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - plain ints work, only slower
    mpz = int

ZERO_DEGREE = -math.inf
_KRONECKER_MIN_WORK = 4096


class NonzeroRemainderError(ArithmeticError):
    """Raised by :meth:`IntPoly.exact_divide` when the divisor does not divide."""

    def __init__(self, dividend, divisor, quotient, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.quotient = quotient
        self.remainder = remainder
        super().__init__(f"division leaves remainder {remainder}")


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


def _max_bits(coeffs: Sequence[int]) -> int:
    return max((abs(c).bit_length() for c in coeffs), default=0)


def pack_coeffs(coeffs: Sequence[int], nbytes: int) -> int:
    if all(c >= 0 for c in coeffs):
        return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little")
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def unpack_coeffs(value: int, length: int, nbytes: int) -> list[int]:
    """Inverse of :func:`pack_coeffs`, valid while every |coefficient| < 2^(8*nbytes-1)."""
    half = 1 << (8 * nbytes - 1)
    bias = int.from_bytes(half.to_bytes(nbytes, "little") * length, "little")
    raw = (value + bias).to_bytes(nbytes * length, "little")
    return [
        int.from_bytes(raw[k : k + nbytes], "little") - half
        for k in range(0, nbytes * length, nbytes)
    ]


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return out


def _kronecker(a: Sequence[int], b: Sequence[int]) -> list[int]:
    bits = _max_bits(a) + _max_bits(b) + min(len(a), len(b)).bit_length() + 1
    nbytes = bits // 8 + 1
    product = int(mpz(pack_coeffs(a, nbytes)) * mpz(pack_coeffs(b, nbytes)))
    return unpack_coeffs(product, len(a) + len(b) - 1, nbytes)


def multiply_coeffs(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) * len(b) < _KRONECKER_MIN_WORK or min(len(a), len(b)) <= 2:
        return _schoolbook(a, b)
    return _kronecker(a, b)


class IntPoly:
    """Immutable polynomial ``sum(coeffs[k] * z**k)``."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = _strip([int(c) for c in coeffs])
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    @classmethod
    def one(cls) -> "IntPoly":
        return cls([1])

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = ("" if mag == 1 and k else str(mag)) + ("z" if k else "") + (f"^{k}" if k > 1 else "")
            terms.append(("-" if c < 0 else "+") + body)
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly(multiply_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power")
        result, base = IntPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by z^k."""
        if k < 0:
            raise ValueError("negative shift")
        return IntPoly([0] * k + list(self.coeffs)) if self.coeffs else self

    def times_binomial(self, m: int) -> "IntPoly":
        """Multiply by (1 + z^m) in linear time."""
        a = self.coeffs
        if m == 0:
            return self * 2
        out = list(a) + [0] * m
        for k, c in enumerate(a):
            out[k + m] += c
        return IntPoly(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def reciprocal(self, degree: int | None = None) -> "IntPoly":
        """``z^d * p(1/z)``, with ``d`` the degree unless given."""
        if not self.coeffs:
            return self
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reciprocal degree below polynomial degree")
        return IntPoly((list(self.coeffs) + [0] * (d - self.degree))[::-1])

    def is_self_reciprocal(self, degree: int | None = None) -> bool:
        return self.reciprocal(degree) == self

    def abs_sum(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def derivative(self) -> "IntPoly":
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def divmod_rational(self, d: "IntPoly") -> tuple[list[Fraction], list[Fraction]]:
        """Long division over the rationals."""
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        dd = len(d.coeffs) - 1
        lead = d.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] / lead
            if q:
                quot[k - dd] = q
                for t, c in enumerate(d.coeffs):
                    rem[k - dd + t] -= q * c
        return quot, rem[:dd]

    def _long_divide(self, d: "IntPoly") -> "IntPoly":
        quot, rem = self.divmod_rational(d)
        if any(rem) or any(q.denominator != 1 for q in quot):
            qpoly = [q for q in quot]
            raise NonzeroRemainderError(self, d, qpoly, _strip(rem))
        return IntPoly([int(q) for q in quot])

    def exact_divide(self, d: "IntPoly") -> "IntPoly":
        """Quotient ``q`` with ``self == q * d``; raise NonzeroRemainderError otherwise."""
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return self
        if len(self) < len(d):
            raise NonzeroRemainderError(self, d, [], self.coeffs)
        if len(d) * (len(self) - len(d) + 1) < _KRONECKER_MIN_WORK:
            return self._long_divide(d)
        length = len(self) - len(d) + 1
        bits = max(_max_bits(self.coeffs), _max_bits(d.coeffs)) + length.bit_length() + 16
        for _ in range(3):
            nbytes = bits // 8 + 1
            x = mpz(pack_coeffs(self.coeffs, nbytes))
            y = mpz(pack_coeffs(d.coeffs, nbytes))
            q, r = divmod(x, y)
            if r:
                break
            try:
                quotient = IntPoly(unpack_coeffs(int(q), length, nbytes))
            except OverflowError:
                quotient = None
            if quotient is not None and quotient * d == self:
                return quotient
            bits *= 2
        return self._long_divide(d)

    def __floordiv__(self, d: "IntPoly") -> "IntPoly":
        return self.exact_divide(d)


def product(polys: Sequence[IntPoly]) -> IntPoly:
    """Balanced product tree."""
    polys = list(polys)
    if not polys:
        return IntPoly.one()
    while len(polys) > 1:
        nxt = [polys[k] * polys[k + 1] for k in range(0, len(polys) - 1, 2)]
        if len(polys) % 2:
            nxt.append(polys[-1])
        polys = nxt
    return polys[0]
