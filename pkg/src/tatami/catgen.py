"""Exhaustive generation of the coverings of T_n with k vertical (even n) or
horizontal (odd n) dominoes.

T_n splits into classes T_n(a), one per diagonal ``a`` that can be the
longest flip of a covering, plus T_n(empty) where no monomino sits on its longer
diagonal.  Inside a class the remaining allowable flips form two groups whose
lengths are exactly 1..A and 1..B and vary freely, so a class
with a k-domino budget is a cross product of two fixed-sum subset families.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core import (
    Covering,
    Diagonal,
    TernaryCode,
    apply_flips,
    check_diagonal,
    decode_code,
    diagonal_length,
    mirror,
    other_diagonal,
    symbol_for,
)
from .gensets import SubsetPairGenerator, max_sum


@dataclass(frozen=True)
class FlipMenu:
    class_tag: Diagonal | None
    fixed_contribution: int
    group_a: dict[int, Diagonal]
    group_b: dict[int, Diagonal]

    @property
    def a_size(self) -> int:
        return len(self.group_a)

    @property
    def b_size(self) -> int:
        return len(self.group_b)

    def diagonals(self) -> list[Diagonal]:
        return list(self.group_a.values()) + list(self.group_b.values())


def _by_length(n: int, diagonals: list[Diagonal]) -> dict[int, Diagonal]:
    group = {diagonal_length(n, d): d for d in diagonals}
    assert len(group) == len(diagonals) and set(group) == set(range(1, len(group) + 1)), group
    return dict(sorted(group.items()))


def _even_groups(n: int, i: int | None) -> tuple[list[Diagonal], list[Diagonal]]:
    # short flips (length j) of monominoes below the split, long flips
    # (length n-1-j) of monominoes above it
    def short(j):
        return Diagonal("left", j, "down") if j % 2 else Diagonal("right", j, "up")

    def long(j):
        return Diagonal("left", j, "up") if j % 2 else Diagonal("right", j, "down")

    if i is None:
        half = (n - 2) // 2
        return [short(j) for j in range(1, half + 1)], [long(j) for j in range(half + 1, n - 1)]
    return [short(j) for j in range(1, i)], [long(j) for j in range(i + 1, n - 1)]


def _odd_groups(n: int, i: int | None) -> tuple[list[Diagonal], list[Diagonal]]:
    def top(j, direction):
        return Diagonal("top", j, direction)

    def bottom(j, direction):
        return Diagonal("bottom", j, direction)

    if i is None:
        half = (n - 1) / 2
        lefts = [(top if j % 2 == 0 else bottom)(j, "left") for j in range(1, n - 1) if j < half]
        rights = [(top if j % 2 == 0 else bottom)(j, "right") for j in range(1, n - 1) if j > half]
        return lefts, rights
    if i % 2 == 0:  # class tright_i
        group_a = [top(j, "left") for j in range(2, i - 1, 2)]
        group_a += [bottom(j, "right") for j in range(n - i, n - 1, 2)]
        group_b = [top(j, "right") for j in range(i + 2, n - 2, 2)]
        group_b += [bottom(j, "left") for j in range(1, n - i - 1, 2)]
    else:  # class bright_i
        group_a = [top(j, "right") for j in range(n - i, n - 2, 2)]
        group_a += [bottom(j, "left") for j in range(1, i - 1, 2)]
        group_b = [top(j, "left") for j in range(2, n - i - 1, 2)]
        group_b += [bottom(j, "right") for j in range(i + 2, n - 1, 2)]
    return group_a, group_b


def primary_class(n: int, i: int) -> Diagonal:
    """The long diagonal of monomino ``i``, for ``1 <= i <= (n-1)//2``."""
    if n % 2 == 0:
        return Diagonal("left", i, "up") if i % 2 else Diagonal("right", i, "down")
    return Diagonal("top", i, "right") if i % 2 == 0 else Diagonal("bottom", i, "right")


def class_tags(n: int) -> list[Diagonal | None]:
    """Partition classes in generation order; ``None`` stands for T_n(empty)."""
    tags: list[Diagonal | None] = []
    for i in range(1, (n - 1) // 2 + 1):
        pair = [primary_class(n, i), mirror(n, primary_class(n, i))]
        if n % 2 == 0:
            pair.sort(key=lambda d: d.side != "left")
        else:
            pair.sort(key=lambda d: d.direction != "left")
        tags += pair
    tags.append(None)
    return tags


def flip_menu(n: int, class_tag: Diagonal | None) -> FlipMenu:
    groups = _even_groups if n % 2 == 0 else _odd_groups
    if class_tag is None:
        a, b = groups(n, None)
        return FlipMenu(None, 0, _by_length(n, a), _by_length(n, b))
    check_diagonal(n, class_tag)
    fixed = diagonal_length(n, class_tag)
    if fixed < diagonal_length(n, other_diagonal(class_tag)):
        raise ValueError(f"{class_tag} is the shorter diagonal of its monomino")
    primary = class_tag
    if primary.index > (n - 1) // 2:
        primary = mirror(n, class_tag)
    a, b = groups(n, primary.index)
    if primary != class_tag:
        a = [mirror(n, d) for d in a]
        b = [mirror(n, d) for d in b]
    return FlipMenu(class_tag, fixed, _by_length(n, a), _by_length(n, b))


@dataclass
class GenStats:
    """Work counters for one generation run.

    ``ops`` is data-structure work (list writes, recursive calls, loop
    steps of the class walk); ``assembly`` is the extra cost of writing out
    each code and covering, which grows with n.
    """

    outputs: int = 0
    ops: int = 0
    assembly: int = 0
    per_call: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ops_per_output(self) -> float:
        return self.ops / self.outputs if self.outputs else 0.0

    @property
    def total_per_output(self) -> float:
        return (self.ops + self.assembly) / self.outputs if self.outputs else 0.0


def gen_vh_codes(
    n: int,
    k: int,
    visit: Callable[[TernaryCode], None],
    stats: GenStats | None = None,
) -> int:
    """Visit the code of every covering of T_n with census ``k``; return the count."""
    if n < 2 or k < 0:
        raise ValueError("need n >= 2 and k >= 0")
    stats = stats if stats is not None else GenStats()
    gen = SubsetPairGenerator(n, n)
    ops0 = gen.ops
    count = 0
    symbols = [0] * (n - 2)

    for tag in class_tags(n):
        stats.ops += 1
        menu = flip_menu(n, tag)
        rest = k - menu.fixed_contribution
        a_size, b_size = menu.a_size, menu.b_size
        lo, hi = max(0, rest - max_sum(a_size)), min(max_sum(b_size), rest)
        if lo > hi:
            continue
        group_a, group_b = menu.group_a, menu.group_b

        def emit(xs: list[int], ys: list[int]) -> None:
            touched = [group_b[m] for m in xs] + [group_a[m] for m in ys]
            if tag is not None:
                touched.append(tag)
            for d in touched:
                symbols[d.index - 1] = symbol_for(d)
            visit(TernaryCode(n, symbols))
            for d in touched:
                symbols[d.index - 1] = 0
            stats.assembly += 2 * len(touched) + n

        for k1 in range(lo, hi + 1):
            stats.ops += 1
            count += gen.run(b_size, k1, a_size, rest - k1, emit)

    stats.ops += gen.ops - ops0
    stats.outputs += count
    return count


def gen_vh(
    n: int,
    k: int,
    visit: Callable[[Covering], None],
    stats: GenStats | None = None,
    check: bool = False,
) -> int:
    """Visit every covering of T_n with exactly k vertical (even n) or
    horizontal (odd n) dominoes, in a fixed class order.

    With ``check`` each assembled code goes through full conflict validation
    before decoding.
    """
    stats = stats if stats is not None else GenStats()

    def materialize(code: TernaryCode) -> None:
        if check:
            cov = decode_code(n, code)
        else:
            grid = apply_flips(n, code.flips())
            cov = Covering(n, tuple("".join(row) for row in grid))
        stats.assembly += n * n
        visit(cov)

    return gen_vh_codes(n, k, materialize, stats)


def iter_vh(n: int, k: int) -> Iterator[Covering]:
    out: list[Covering] = []
    gen_vh(n, k, out.append)
    return iter(out)
