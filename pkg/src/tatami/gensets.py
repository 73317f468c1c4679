"""Subsets of {1..s} with a prescribed sum: counting and CAT generation.

The generator walks the standard recursion for fixed-sum subsets,
run twice back to back so that one call yields a cross product
``Sset(a, i) x Sset(b, j)``.  Each working list is a linked list threaded
through an array: ``L[0]`` is the head, ``L[x]`` the successor of ``x``, and
an unused slot holds ``L[x] == x + 1``.  Because every call leaves the arrays
as it found them, a generator allocated for the largest sizes can be reused
with two writes of setup per call.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable

SubsetPair = tuple[list[int], list[int]]


@lru_cache(maxsize=None)
def _sum_counts(s: int) -> tuple[int, ...]:
    if s == 0:
        return (1,)
    prev = _sum_counts(s - 1)
    row = list(prev) + [0] * s
    for k, count in enumerate(prev):
        row[k + s] += count
    return tuple(row)


def subset_sum_counts(s: int) -> tuple[int, ...]:
    """``counts[k]`` = number of subsets of {1..s} summing to k."""
    if s < 0:
        raise ValueError("s must be non-negative")
    for m in range(s):  # warm the cache bottom-up to keep recursion shallow
        _sum_counts(m)
    return _sum_counts(s)


def subset_sum_count(s: int, k: int) -> int:
    if s < 0:
        raise ValueError("s must be non-negative")
    if k < 0 or k > s * (s + 1) // 2:
        return 0
    return subset_sum_counts(s)[k]


def max_sum(s: int) -> int:
    return s * (s + 1) // 2


class SubsetPairGenerator:
    """Reusable generator of ``Sset(a, i) x Sset(b, j)`` for ``a <= A``, ``b <= B``.

    ``ops`` counts list writes plus recursive calls, the quantity whose
    ratio to ``outputs`` stays bounded.
    """

    def __init__(self, A: int, B: int):
        if A < 0 or B < 0:
            raise ValueError("sizes must be non-negative")
        self.first = list(range(1, A + 2))
        self.second = list(range(1, B + 2))
        self.A, self.B = A, B
        self.ops = 0
        self.outputs = 0
        self._visit: Callable[[list[int], list[int]], None] | None = None
        self._a = self._b = 0

    def run(self, a: int, i: int, b: int, j: int, visit: Callable[[list[int], list[int]], None]) -> int:
        """Visit every pair ``(X, Y)`` with ``X`` in Sset(a, i), ``Y`` in Sset(b, j);
        return the number of pairs."""
        if min(a, i, b, j) < 0:
            raise ValueError("parameters must be non-negative")
        if a > self.A or b > self.B:
            raise ValueError(f"generator sized for a <= {self.A}, b <= {self.B}")
        if i > max_sum(a) or j > max_sum(b):
            return 0
        before = self.outputs
        self._visit = visit
        self._a, self._b = a, b
        self.first[0] = a + 1
        self.second[0] = b + 1
        self.ops += 2
        self._gen(a, i, b, j, False, True)
        return self.outputs - before

    @staticmethod
    def _read(L: list[int], top: int) -> list[int]:
        out = []
        x = L[0]
        while x <= top:
            out.append(x)
            x = L[x]
        return out

    def _gen(self, a: int, i: int, b: int, j: int, comp: bool, is_first: bool) -> None:
        self.ops += 1
        if a == 0:
            if is_first:
                self._gen(b, j, 0, 0, False, False)
            else:
                self.outputs += 1
                self._visit(self._read(self.first, self._a), self._read(self.second, self._b))
            return
        L = self.first if is_first else self.second
        total = a * (a + 1) // 2
        if 2 * i > total:
            # recurse on the complement, whose sum is at most half the total
            i = total - i
            comp = not comp
        if i < a:
            if comp:
                # a, a-1, ..., i+1 all lie outside the complement: splice the run in
                L[a] = L[0]
                L[0] = i + 1
                self._gen(i, i, b, j, comp, is_first)
                L[0] = L[a]
                L[a] = a + 1
                self.ops += 4
            else:
                self._gen(i, i, b, j, comp, is_first)
        else:
            L[a] = L[0]
            L[0] = a
            self.ops += 2
            if comp:
                self._gen(a - 1, i, b, j, comp, is_first)
                L[0] = L[a]
                L[a] = a + 1
                self.ops += 2
                self._gen(a - 1, i - a, b, j, comp, is_first)
            else:
                self._gen(a - 1, i - a, b, j, comp, is_first)
                L[0] = L[a]
                L[a] = a + 1
                self.ops += 2
                self._gen(a - 1, i, b, j, comp, is_first)


def gen_subset_pairs(a: int, i: int, b: int, j: int, visit: Callable[[list[int], list[int]], None]) -> int:
    """One-shot form of :meth:`SubsetPairGenerator.run`."""
    if min(a, i, b, j) < 0:
        raise ValueError("parameters must be non-negative")
    return SubsetPairGenerator(a, b).run(a, i, b, j, visit)


def subset_pairs(a: int, i: int, b: int, j: int) -> list[SubsetPair]:
    out: list[SubsetPair] = []
    gen_subset_pairs(a, i, b, j, lambda x, y: out.append((x, y)))
    return out
