"""ASCII and SVG pictures of coverings.

The ASCII form draws a wall between every pair of neighbouring cells that
belong to different tiles, so it can be parsed back into the covering.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Sequence

from .core import MONOMINO, Covering, flipped_monominoes

MARK_MONOMINO = "o"
MARK_FLIPPED = "*"
_PARTNER = {"L": (0, 1), "R": (0, -1), "T": (1, 0), "B": (-1, 0)}


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    cell_size: int = 12
    highlight_flipped: bool = True
    columns: int = 6

    def __post_init__(self):
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown render format {self.format!r}")
        if self.cell_size <= 0:
            raise ValueError("cell_size must be positive")
        if self.columns <= 0:
            raise ValueError("columns must be positive")


def _same_tile(cov: Covering, a: tuple[int, int], b: tuple[int, int]) -> bool:
    kind = cov.kind(*a)
    if kind not in _PARTNER:
        return False
    dr, dc = _PARTNER[kind]
    return (a[0] + dr, a[1] + dc) == b


def render_ascii(cov: Covering, highlight_flipped: bool = True) -> str:
    n = cov.n
    flipped = flipped_monominoes(cov) if highlight_flipped else set()
    lines = []
    for r in range(n + 1):
        wall = ["+"]
        for c in range(n):
            open_ = 0 < r < n and _same_tile(cov, (r - 1, c), (r, c))
            wall.append("   " if open_ else "---")
            wall.append("+")
        lines.append("".join(wall))
        if r == n:
            break
        body = ["|"]
        for c in range(n):
            if cov.kind(r, c) == MONOMINO:
                body.append(f" {MARK_FLIPPED if (r, c) in flipped else MARK_MONOMINO} ")
            else:
                body.append("   ")
            open_ = c + 1 < n and _same_tile(cov, (r, c), (r, c + 1))
            body.append(" " if open_ else "|")
        lines.append("".join(body))
    return "\n".join(lines)


def parse_ascii(text: str) -> Covering:
    """Rebuild a covering from :func:`render_ascii` output."""
    lines = [line for line in text.strip("\n").split("\n")]
    if len(lines) % 2 != 1 or len(lines) < 3:
        raise ValueError("not an ASCII covering picture")
    n = (len(lines) - 1) // 2
    if any(len(line) != 4 * n + 1 for line in lines):
        raise ValueError("ragged ASCII covering picture")
    grid = [[""] * n for _ in range(n)]
    for r in range(n):
        body = lines[2 * r + 1]
        below = lines[2 * r + 2]
        for c in range(n):
            if grid[r][c]:
                continue
            mark = body[4 * c + 2]
            if mark in (MARK_MONOMINO, MARK_FLIPPED):
                grid[r][c] = MONOMINO
            elif c + 1 < n and body[4 * c + 4] == " ":
                grid[r][c], grid[r][c + 1] = "L", "R"
            elif r + 1 < n and below[4 * c + 1 : 4 * c + 4] == "   ":
                grid[r][c], grid[r + 1][c] = "T", "B"
            else:
                raise ValueError(f"cell ({r}, {c}) belongs to no tile")
    return Covering(n, tuple("".join(row) for row in grid))


_FILL = {"monomino": "#808080", "flipped": "#d62728", "domino": "#ffffff"}


def _draw(parent: ET.Element, cov: Covering, x0: int, y0: int, spec: RenderSpec) -> None:
    s = spec.cell_size
    flipped = flipped_monominoes(cov) if spec.highlight_flipped else set()
    for r in range(cov.n):
        for c in range(cov.n):
            kind = cov.kind(r, c)
            if kind in "RB":
                continue
            w, h = {"L": (2, 1), "T": (1, 2)}.get(kind, (1, 1))
            if kind == MONOMINO:
                fill = _FILL["flipped"] if (r, c) in flipped else _FILL["monomino"]
            else:
                fill = _FILL["domino"]
            ET.SubElement(parent, "rect", {
                "x": str(x0 + c * s), "y": str(y0 + r * s),
                "width": str(w * s), "height": str(h * s),
                "fill": fill, "stroke": "#000000", "stroke-width": "1",
            })


def render_svg_sheet(coverings: Sequence[Covering], spec: RenderSpec | None = None) -> str:
    """One SVG with the coverings laid out row-major, ``spec.columns`` per row."""
    spec = spec or RenderSpec(format="svg")
    n = coverings[0].n if coverings else 1
    thumb = n * spec.cell_size
    gap = spec.cell_size
    cols = min(spec.columns, max(len(coverings), 1))
    rows = -(-len(coverings) // cols) if coverings else 0
    width = cols * thumb + (cols + 1) * gap
    height = rows * thumb + (rows + 1) * gap
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(width), "height": str(height),
        "viewBox": f"0 0 {width} {height}",
    })
    for idx, cov in enumerate(coverings):
        row, col = divmod(idx, cols)
        group = ET.SubElement(svg, "g", {"id": f"covering-{idx}"})
        _draw(group, cov, gap + col * (thumb + gap), gap + row * (thumb + gap), spec)
    return ET.tostring(svg, encoding="unicode") + "\n"


def render_svg(cov: Covering, spec: RenderSpec | None = None) -> str:
    return render_svg_sheet([cov], spec)


def render(cov: Covering, spec: RenderSpec) -> str:
    if spec.format == "svg":
        return render_svg(cov, spec)
    return render_ascii(cov, spec.highlight_flipped)
