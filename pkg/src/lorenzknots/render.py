"""Plain-text rendering of Lorenz braids."""

from __future__ import annotations

from .braids import LorenzPermutation

_COLUMN_WIDTH = 4


def ascii_braid(perm: LorenzPermutation) -> str:
    """Draw the braid with one labelled column per point.

    L strings are the thick '#' lines and are drawn after the thin R
    strings ('.') so they appear on top, matching the overcrossing
    convention.  Purely advisory output: only the column layout is stable.
    """
    n = perm.n
    height = max(n, 4)
    width = _COLUMN_WIDTH * (n - 1) + 1
    grid = [[" "] * width for _ in range(height)]

    def draw(point: int, ch: str) -> None:
        x0 = _COLUMN_WIDTH * (point - 1)
        x1 = _COLUMN_WIDTH * (perm(point) - 1)
        for row in range(height):
            frac = row / (height - 1)
            x = round(x0 + (x1 - x0) * frac)
            grid[row][x] = ch

    for point in range(perm.p + 1, n + 1):
        draw(point, ".")
    for point in range(1, perm.p + 1):
        draw(point, "#")

    header = "".join(str(i).ljust(_COLUMN_WIDTH) for i in range(1, n + 1)).rstrip()
    lines = [header]
    lines.extend("".join(row).rstrip() for row in grid)
    lines.append(header)
    return "\n".join(lines)
