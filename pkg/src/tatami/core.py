"""Grid model of maximal-monomino tatami coverings of the n x n grid.

Coordinates put row 0 at the top and column 0 at the left, so "up" decreases
the row.  A covering is stored as ``n`` strings of cell kinds:

    M   monomino
    L R left / right half of a horizontal domino
    T B top / bottom half of a vertical domino
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

MONOMINO = "M"
KINDS = frozenset("MLRTB")

Cell = tuple[int, int]


class Tile(NamedTuple):
    kind: str  # "monomino", "h-domino" or "v-domino"
    row: int
    col: int


class Diagonal(NamedTuple):
    side: str
    index: int
    direction: str

    def __str__(self) -> str:
        return f"{self.side}-{self.direction}[{self.index}]"


_TILE_OF_KIND = {"M": "monomino", "L": "h-domino", "T": "v-domino"}
_DIRECTIONS = {
    "left": ("up", "down"),
    "right": ("up", "down"),
    "top": ("left", "right"),
    "bottom": ("left", "right"),
}
# symbol +1 / -1 for each family
_SYMBOL_DIRECTION = {
    (0, 1): "up",
    (0, -1): "down",
    (1, 1): "right",
    (1, -1): "left",
}
_OPPOSITE = {"left": "right", "right": "left", "top": "bottom", "bottom": "top"}


@dataclass(frozen=True)
class Covering:
    n: int
    rows: tuple[str, ...]

    @property
    def cells(self) -> tuple[str, ...]:
        return self.rows

    def kind(self, r: int, c: int) -> str:
        return self.rows[r][c]

    @property
    def tiles(self) -> list[Tile]:
        return [
            Tile(_TILE_OF_KIND[ch], r, c)
            for r, row in enumerate(self.rows)
            for c, ch in enumerate(row)
            if ch in _TILE_OF_KIND
        ]

    @property
    def key(self) -> str:
        return canonical_key(self)

    @classmethod
    def from_key(cls, key: str) -> "Covering":
        rows = tuple(key.split("/"))
        return cls(len(rows), rows)

    def __str__(self) -> str:
        return "\n".join(self.rows)


@dataclass(frozen=True)
class TernaryCode:
    n: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))

    def __getitem__(self, i: int) -> int:
        """Symbol of the monomino with index ``i`` (1-based)."""
        if not 1 <= i <= self.n - 2:
            raise IndexError(i)
        return self.symbols[i - 1]

    def flips(self) -> list[Diagonal]:
        return [
            diagonal_for(self.n, i, s)
            for i, s in enumerate(self.symbols, start=1)
            if s != 0
        ]

    @classmethod
    def zeros(cls, n: int) -> "TernaryCode":
        return cls(n, (0,) * max(n - 2, 0))

    @classmethod
    def parse(cls, n: int, text: str) -> "TernaryCode":
        text = text.strip().strip("()")
        symbols = tuple(int(s) for s in text.split(",")) if text else ()
        return cls(n, symbols)

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.symbols)


@dataclass
class ValidationReport:
    violations: list[tuple[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, location: object) -> None:
        self.violations.append((kind, location))

    def kinds(self) -> set[str]:
        return {k for k, _ in self.violations}


class InvalidCodeError(ValueError):
    def __init__(self, code: TernaryCode, report: ValidationReport):
        self.code = code
        self.report = report
        super().__init__(f"invalid code {code} for n={code.n}: {report.violations}")


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"grid side must be an integer >= 2, got {n!r}")


def side_of(n: int, i: int) -> str:
    """Boundary carrying the movable monomino with index ``i``."""
    if n % 2 == 0:
        return "left" if i % 2 else "right"
    return "bottom" if i % 2 else "top"


def diagonal_for(n: int, i: int, symbol: int) -> Diagonal:
    if symbol not in (1, -1):
        raise ValueError(f"flip symbol must be +1 or -1, got {symbol!r}")
    return Diagonal(side_of(n, i), i, _SYMBOL_DIRECTION[n % 2, symbol])


def symbol_for(d: Diagonal) -> int:
    return 1 if d.direction in ("up", "right") else -1


def check_diagonal(n: int, d: Diagonal) -> None:
    if not 1 <= d.index <= n - 2:
        raise ValueError(f"diagonal index {d.index} outside 1..{n - 2}")
    if d.side != side_of(n, d.index) or d.direction not in _DIRECTIONS[d.side]:
        raise ValueError(f"{d} is not a diagonal of the {n}x{n} bond")


def diagonal_length(n: int, d: Diagonal) -> int:
    """Number of dominoes in diagonal ``d``."""
    check_diagonal(n, d)
    short = d.direction == {"left": "down", "right": "up", "top": "left", "bottom": "left"}[d.side]
    return d.index if short else n - d.index - 1


def other_diagonal(d: Diagonal) -> Diagonal:
    a, b = _DIRECTIONS[d.side]
    return d._replace(direction=b if d.direction == a else a)


def mirror(n: int, d: Diagonal) -> Diagonal:
    """Image of ``d`` under the left-right reflection of the grid."""
    if d.side in ("left", "right"):
        return Diagonal(_OPPOSITE[d.side], n - 1 - d.index, d.direction)
    return Diagonal(d.side, n - 1 - d.index, _OPPOSITE[d.direction])


def monomino_cell(n: int, side: str, i: int) -> Cell:
    return {
        "left": (n - 1 - i, 0),
        "right": (i, n - 1),
        "top": (0, i),
        "bottom": (n - 1, i),
    }[side]


def diagonal_cells(n: int, d: Diagonal) -> list[Cell]:
    """Cells of ``d`` in the running bond, starting at its monomino.

    The result has ``2 * length + 1`` cells; consecutive pairs after the first
    cell are the dominoes of the bond.
    """
    length = diagonal_length(n, d)
    r0, c0 = monomino_cell(n, d.side, d.index)
    cells = [(r0, c0)]
    if d.side in ("left", "right"):
        dr = -1 if d.direction == "up" else 1
        for k in range(1, length + 1):
            r = r0 + k * dr
            if d.side == "left":
                cells += [(r, k - 1), (r, k)]
            else:
                cells += [(r, n - k), (r, n - 1 - k)]
    else:
        dc = -1 if d.direction == "left" else 1
        for k in range(1, length + 1):
            c = c0 + k * dc
            if d.side == "top":
                cells += [(k - 1, c), (k, c)]
            else:
                cells += [(n - k, c), (n - 1 - k, c)]
    return cells


def bond_monomino_cells(n: int) -> set[Cell]:
    _check_n(n)
    mono = {(0, 0), (0, n - 1)}
    return mono | {monomino_cell(n, side_of(n, i), i) for i in range(1, n - 1)}


def running_bond(n: int) -> Covering:
    """The unique all-horizontal (even n) or all-vertical (odd n) covering."""
    _check_n(n)
    if n % 2 == 0:
        rows = tuple(
            "M" + "LR" * ((n - 2) // 2) + "M" if r % 2 == 0 else "LR" * (n // 2)
            for r in range(n)
        )
        return Covering(n, rows)
    columns = [
        "M" + "TB" * ((n - 1) // 2) if c % 2 == 0 else "TB" * ((n - 1) // 2) + "M"
        for c in range(n)
    ]
    rows = tuple("".join(col[r] for col in columns) for r in range(n))
    return Covering(n, rows)


def _conflict(n: int, a: Diagonal, b: Diagonal) -> str | None:
    if a.side == b.side:
        if a.direction == b.direction:
            return None
        # put the monomino nearer the start of the side first
        # (left side is ordered bottom to top, the others by increasing index)
        lo, hi = sorted((a, b), key=lambda d: d.index)
        if a.side == "left":
            toward = lo.direction == "up" and hi.direction == "down"
        elif a.side == "right":
            toward = lo.direction == "down" and hi.direction == "up"
        else:
            toward = lo.direction == "right" and hi.direction == "left"
        return "type1-conflict" if toward else None
    if a.side == _OPPOSITE[b.side] and a.direction == b.direction:
        if diagonal_length(n, a) + diagonal_length(n, b) >= n:
            return "type2-conflict"
    return None


def conflict(n: int, a: Diagonal, b: Diagonal) -> str | None:
    """Conflict kind between two flipped diagonals, or None."""
    check_diagonal(n, a)
    check_diagonal(n, b)
    if a.index == b.index:
        raise ValueError("a monomino is flipped on at most one diagonal")
    return _conflict(n, a, b)


def validate_code(n: int, code: TernaryCode) -> ValidationReport:
    _check_n(n)
    if code.n != n or len(code.symbols) != n - 2:
        raise ValueError(f"code must have exactly {n - 2} symbols for n={n}")
    bad = [s for s in code.symbols if s not in (-1, 0, 1)]
    if bad:
        raise ValueError(f"code symbols must be -1, 0 or +1, got {bad[0]!r}")
    report = ValidationReport()
    flips = code.flips()
    for x in range(len(flips)):
        for y in range(x + 1, len(flips)):
            kind = _conflict(n, flips[x], flips[y])
            if kind:
                report.add(kind, (flips[x], flips[y]))
    return report


def apply_flips(n: int, flips: Sequence[Diagonal]) -> list[list[str]]:
    grid = [list(row) for row in running_bond(n).rows]
    for d in flips:
        cells = diagonal_cells(n, d)
        for t in range(0, len(cells) - 1, 2):
            (r1, c1), (r2, c2) = cells[t], cells[t + 1]
            if r1 == r2:
                if c1 > c2:
                    c1, c2 = c2, c1
                grid[r1][c1], grid[r1][c2] = "L", "R"
            else:
                if r1 > r2:
                    r1, r2 = r2, r1
                grid[r1][c1], grid[r2][c1] = "T", "B"
        r, c = cells[-1]
        grid[r][c] = MONOMINO
    return grid


def decode_code(n: int, code: TernaryCode) -> Covering:
    """Covering obtained from the bond by flipping every diagonal in ``code``."""
    report = validate_code(n, code)
    if not report.ok:
        raise InvalidCodeError(code, report)
    grid = apply_flips(n, code.flips())
    return Covering(n, tuple("".join(row) for row in grid))


def four_tiles_meet(rows: Sequence[str], r: int, c: int) -> bool:
    """Whether the interior vertex above-left of cell (r, c) touches four tiles."""
    a, b = rows[r - 1][c - 1], rows[r - 1][c]
    x, y = rows[r][c - 1], rows[r][c]
    return not (a + b == "LR" or x + y == "LR" or a + x == "TB" or b + y == "TB")


def validate_covering(cov: Covering) -> ValidationReport:
    report = ValidationReport()
    n, rows = cov.n, cov.rows
    if len(rows) != n or any(len(row) != n for row in rows):
        report.add("bad-tile", "shape")
        return report
    for r, row in enumerate(rows):
        for c, ch in enumerate(row):
            if ch not in KINDS:
                report.add("bad-tile", (r, c))
            elif ch == "L" and (c + 1 >= n or row[c + 1] != "R"):
                report.add("bad-tile", (r, c))
            elif ch == "R" and (c == 0 or row[c - 1] != "L"):
                report.add("bad-tile", (r, c))
            elif ch == "T" and (r + 1 >= n or rows[r + 1][c] != "B"):
                report.add("bad-tile", (r, c))
            elif ch == "B" and (r == 0 or rows[r - 1][c] != "T"):
                report.add("bad-tile", (r, c))
    if not report.ok:
        return report
    for r in range(1, n):
        for c in range(1, n):
            if four_tiles_meet(rows, r, c):
                report.add("four-corner", (r, c))
    count = sum(row.count(MONOMINO) for row in rows)
    if count != n:
        report.add("monomino-count", count)
    for corner in ((0, 0), (0, n - 1)):
        if rows[corner[0]][corner[1]] != MONOMINO:
            report.add("corner-monomino", corner)
    return report


def tile_census(cov: Covering) -> tuple[int, int, int]:
    """``(vertical, horizontal, monominoes)`` tile counts."""
    text = "".join(cov.rows)
    return text.count("T"), text.count("L"), text.count(MONOMINO)


def census_value(cov: Covering) -> int:
    """Vertical dominoes for even n, horizontal dominoes for odd n."""
    v, h, _ = tile_census(cov)
    return v if cov.n % 2 == 0 else h


def canonical_key(cov: Covering) -> str:
    return "/".join(cov.rows)


def flipped_monominoes(cov: Covering) -> set[Cell]:
    bond = bond_monomino_cells(cov.n)
    return {
        (r, c)
        for r, row in enumerate(cov.rows)
        for c, ch in enumerate(row)
        if ch == MONOMINO and (r, c) not in bond
    }


def all_diagonals(n: int) -> Iterator[Diagonal]:
    for i in range(1, n - 1):
        side = side_of(n, i)
        for direction in _DIRECTIONS[side]:
            yield Diagonal(side, i, direction)
