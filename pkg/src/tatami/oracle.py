"""Brute-force ground truth.

Nothing here goes through diagonal flips: coverings come from a cell-by-cell
backtracking search over the raw grid, and codes from filtering all 3^(n-2)
ternary strings.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .core import Covering, TernaryCode, census_value, validate_code

MAX_TILING_N = 12
MAX_CODE_N = 14


@dataclass
class CensusHistogram:
    n: int
    by_vertical: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.by_vertical.values())

    def row(self) -> list[int]:
        if not self.by_vertical:
            return []
        top = max(self.by_vertical)
        return [self.by_vertical.get(k, 0) for k in range(top + 1)]


def _check_bound(n: int, bound: int) -> None:
    if not isinstance(n, int) or not 2 <= n <= bound:
        raise ValueError(f"brute force is limited to 2 <= n <= {bound}, got {n!r}")


def enumerate_tn(n: int) -> Iterator[Covering]:
    """Every tatami covering of the n x n grid with n monominoes, two of them in
    the top corners."""
    _check_bound(n, MAX_TILING_N)
    grid = [[""] * n for _ in range(n)]
    corners = {(0, 0), (0, n - 1)}

    def vertex_ok(r: int, c: int) -> bool:
        # vertex above-left of (r, c); all four cells must already be placed
        if r == 0 or c == 0 or r == n or c == n:
            return True
        a, b, x, y = grid[r - 1][c - 1], grid[r - 1][c], grid[r][c - 1], grid[r][c]
        if not (a and b and x and y):
            return True
        return a + b == "LR" or x + y == "LR" or a + x == "TB" or b + y == "TB"

    def cell_ok(r: int, c: int) -> bool:
        return (
            vertex_ok(r, c)
            and vertex_ok(r, c + 1)
            and vertex_ok(r + 1, c)
            and vertex_ok(r + 1, c + 1)
        )

    def search(pos: int, monos: int) -> Iterator[Covering]:
        while pos < n * n and grid[pos // n][pos % n]:
            pos += 1
        if pos == n * n:
            if monos == n:
                yield Covering(n, tuple("".join(row) for row in grid))
            return
        r, c = divmod(pos, n)
        options = "M" if (r, c) in corners else "MLT"
        for opt in options:
            if opt == "M":
                if monos == n:
                    continue
                grid[r][c] = "M"
                if cell_ok(r, c):
                    yield from search(pos + 1, monos + 1)
                grid[r][c] = ""
            elif opt == "L":
                if c + 1 >= n or grid[r][c + 1] or (r, c + 1) in corners:
                    continue
                grid[r][c], grid[r][c + 1] = "L", "R"
                if cell_ok(r, c) and cell_ok(r, c + 1):
                    yield from search(pos + 2, monos)
                grid[r][c] = grid[r][c + 1] = ""
            else:
                if r + 1 >= n:
                    continue
                grid[r][c], grid[r + 1][c] = "T", "B"
                if cell_ok(r, c) and cell_ok(r + 1, c):
                    yield from search(pos + 1, monos)
                grid[r][c] = grid[r + 1][c] = ""

    yield from search(0, 0)


def vertical_histogram(n: int) -> CensusHistogram:
    """Coverings of T_n counted by vertical (even n) or horizontal (odd n)
    dominoes."""
    counts = Counter(census_value(cov) for cov in enumerate_tn(n))
    return CensusHistogram(n, dict(sorted(counts.items())))


def enumerate_valid_codes(n: int) -> list[TernaryCode]:
    _check_bound(n, MAX_CODE_N)
    codes = []
    for symbols in itertools.product((0, 1, -1), repeat=n - 2):
        code = TernaryCode(n, symbols)
        if validate_code(n, code).ok:
            codes.append(code)
    return codes
