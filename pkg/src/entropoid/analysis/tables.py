"""Generated-set size grids for the small named entropoids."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..algebra import Element, is_unit_member
from ..generators import span, span2
from ..presets import PRESETS, preset

GRID_PRESETS = ("e7", "e11", "e13", "e19", "e23")


@dataclass
class GridReport:
    name: str
    p: int
    kind: str                  # "span" or "span2"
    grid: list[list[int]]      # grid[x1][x2]
    excluded: set[tuple[int, int]]
    maximal: set[tuple[int, int]]

    def to_text(self) -> str:
        width = len(str(max(max(row) for row in self.grid))) + 1
        head = " " * 4 + "".join(f"{c:>{width}}" for c in range(self.p))
        lines = [f"{self.name} {self.kind} sizes (rows x1, columns x2)", head]
        for r, row in enumerate(self.grid):
            lines.append(f"{r:>3} " + "".join(f"{v:>{width}}" for v in row))
        lines.append(f"cells outside E*: {len(self.excluded)}; "
                     f"cells of maximal size {self.max_size}: {len(self.maximal)}")
        return "\n".join(lines)

    @property
    def max_size(self) -> int:
        return max(max(row) for row in self.grid)


def size_grid(name: str, kind: str = "span", backend_name: Optional[str] = None) -> GridReport:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}")
    if kind not in ("span", "span2"):
        raise ValueError("kind must be 'span' or 'span2'")
    E = preset(name, backend_name)
    fn = span if kind == "span" else span2
    p = E.p
    grid = [[len(fn(E, Element(i, j))) for j in range(p)] for i in range(p)]
    excluded = {(i, j) for i in range(p) for j in range(p) if not is_unit_member(E, (i, j))}
    top = (p - 1) ** 2 if kind == "span" else 2 * (p - 1)
    maximal = {(i, j) for i in range(p) for j in range(p) if grid[i][j] == top}
    return GridReport(name, p, kind, grid, excluded, maximal)


def reproduce_tables(which: str, backend_name: Optional[str] = None) -> dict[str, GridReport]:
    """Both grids for one preset."""
    return {kind: size_grid(which, kind, backend_name) for kind in ("span2", "span")}
