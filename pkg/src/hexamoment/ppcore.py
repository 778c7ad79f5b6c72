"""Plane partitions in a box, the lozenge tilings they encode, and the
involutions acting on them.

Rows and columns are 1-indexed in every public function. A plane partition
is an ``a x b`` matrix with entries in ``0..c``, weakly decreasing along
rows and down columns.

Coordinates of the tiling are oblique: the x axis runs along the b-side of
the hexagon and the y axis along the c-side, both from the vertex where the
two meet. The hexagon has corners (0,0), (b,0), (a+b,a), (a+b,a+c),
(a,a+c), (0,c). A horizontal lozenge is identified by its lowest vertex.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class PlanePartitionError(ValueError):
    pass


class BadShape(PlanePartitionError):
    pass


class EntryOutOfRange(PlanePartitionError):
    pass


class NotDecreasing(PlanePartitionError):
    def __init__(self, direction: str, position: tuple[int, int]):
        self.direction = direction
        self.position = position
        super().__init__(f"not weakly decreasing along {direction} at cell {position}")


class NotSquare(PlanePartitionError):
    pass


@dataclass(frozen=True, order=True)
class BoxDims:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"box side {name} must be a positive integer, got {v!r}")

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    @property
    def x_range(self) -> range:
        return range(1, self.a + self.b)

    @property
    def y_range(self) -> range:
        return range(0, self.a + self.c)


def as_dims(dims) -> BoxDims:
    return dims if isinstance(dims, BoxDims) else BoxDims(*dims)


@dataclass(frozen=True)
class PlanePartition:
    dims: BoxDims
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    @property
    def volume(self) -> int:
        return sum(map(sum, self.entries))


@dataclass(frozen=True)
class ShiftedArray:
    """Plane partition with ``a - i`` added to row i.

    Rows stay weakly decreasing and columns become strictly decreasing.
    """

    dims: BoxDims
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]


@dataclass(frozen=True)
class LozengeTiling:
    """A tiling, stored by the lowest vertices of its horizontal lozenges."""

    dims: BoxDims
    horizontals: frozenset[tuple[int, int]]


def validate(entries: Sequence[Sequence[int]], dims) -> PlanePartition:
    dims = as_dims(dims)
    a, b, c = dims
    rows = [tuple(int(v) for v in row) for row in entries]
    if len(rows) != a or any(len(r) != b for r in rows):
        raise BadShape(f"expected a {a}x{b} matrix")
    for i, row in enumerate(rows, 1):
        for j, v in enumerate(row, 1):
            if not 0 <= v <= c:
                raise EntryOutOfRange(f"entry {v} at ({i},{j}) outside 0..{c}")
    for i, row in enumerate(rows, 1):
        for j in range(1, b):
            if row[j - 1] < row[j]:
                raise NotDecreasing("row", (i, j))
    for i in range(1, a):
        for j in range(1, b + 1):
            if rows[i - 1][j - 1] < rows[i][j - 1]:
                raise NotDecreasing("column", (i, j))
    return PlanePartition(dims, tuple(rows))


def complement(pp: PlanePartition) -> PlanePartition:
    """entry(i,j) -> c - entry(a+1-i, b+1-j): rotate the stack of cubes."""
    a, b, c = pp.dims
    rows = tuple(
        tuple(c - pp.entry(a + 1 - i, b + 1 - j) for j in range(1, b + 1))
        for i in range(1, a + 1)
    )
    return PlanePartition(pp.dims, rows)


def transpose_complement(pp: PlanePartition) -> PlanePartition:
    """entry(i,j) -> m - entry(n+1-j, n+1-i) on an n x n x m box."""
    n, n2, m = pp.dims
    if n != n2:
        raise NotSquare(f"transpose-complement needs a square base, got {n}x{n2}")
    rows = tuple(
        tuple(m - pp.entry(n + 1 - j, n + 1 - i) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return PlanePartition(pp.dims, rows)


def shift_rows(pp: PlanePartition) -> ShiftedArray:
    a = pp.dims.a
    rows = tuple(tuple(v + a - i for v in row) for i, row in enumerate(pp.entries, 1))
    return ShiftedArray(pp.dims, rows)


def unshift_rows(sa: ShiftedArray) -> PlanePartition:
    a = sa.dims.a
    rows = tuple(tuple(v - (a - i) for v in row) for i, row in enumerate(sa.entries, 1))
    return validate(rows, sa.dims)


def is_valid_shifted(sa: ShiftedArray) -> bool:
    a, b, c = sa.dims
    rows = sa.entries
    if len(rows) != a or any(len(r) != b for r in rows):
        return False
    for i, row in enumerate(rows, 1):
        if any(not a - i <= v <= c + a - i for v in row):
            return False
        if any(row[j] < row[j + 1] for j in range(b - 1)):
            return False
    return all(rows[i][j] > rows[i + 1][j] for i in range(a - 1) for j in range(b))


def content(sa: ShiftedArray) -> dict[int, int]:
    """Multiplicity of each value in the shifted array (zero counts omitted)."""
    return dict(sorted(Counter(v for row in sa.entries for v in row).items()))


def _bender_knuth_ssyt(rows: list[list[int]], m: int) -> list[list[int]]:
    """Swap the numbers of m's and (m+1)'s in a row-weak, column-strict
    (increasing) tableau, leaving every other entry in place."""
    out = [list(r) for r in rows]
    for r, row in enumerate(rows):
        free = []
        for col, v in enumerate(row):
            if v == m:
                below = rows[r + 1][col] if r + 1 < len(rows) and col < len(rows[r + 1]) else None
                if below != m + 1:
                    free.append(col)
            elif v == m + 1:
                above = rows[r - 1][col] if r > 0 else None
                if above != m:
                    free.append(col)
        if not free:
            continue
        n_low = sum(1 for col in free if row[col] == m)
        n_high = len(free) - n_low
        # free cells form one contiguous run: m's then (m+1)'s
        for t, col in enumerate(free):
            out[r][col] = m if t < n_high else m + 1
    return out


def bender_knuth_swap(sa: ShiftedArray, j: int) -> ShiftedArray:
    """Content-swapping involution exchanging the multiplicities of j and j+1.

    Negating the entries turns the row-decreasing, column-strict array into
    an ordinary semistandard tableau, where j+1, j become -j-1, -j.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    neg = [[-v for v in row] for row in sa.entries]
    swapped = _bender_knuth_ssyt(neg, -j - 1)
    return ShiftedArray(sa.dims, tuple(tuple(-v for v in row) for row in swapped))


def horizontal_positions(pp: PlanePartition) -> frozenset[tuple[int, int]]:
    """Cell (i,j) with entry e gives the horizontal lozenge at (j-i+a, e+a-i)."""
    a, b, _ = pp.dims
    return frozenset(
        (j - i + a, pp.entry(i, j) + a - i)
        for i in range(1, a + 1)
        for j in range(1, b + 1)
    )


def tiling_from_pp(pp: PlanePartition) -> LozengeTiling:
    return LozengeTiling(pp.dims, horizontal_positions(pp))


def pp_from_tiling(t: LozengeTiling) -> PlanePartition:
    """Inverse of :func:`tiling_from_pp`.

    Along a diagonal the heights ``entry + a - i`` strictly decrease with i,
    so sorting the y-values on each vertical line recovers the cells.
    """
    a, b, c = t.dims
    by_x: dict[int, list[int]] = {}
    for x, y in t.horizontals:
        by_x.setdefault(x, []).append(y)
    rows = [[0] * b for _ in range(a)]
    for x in range(1, a + b):
        cells = [i for i in range(1, a + 1) if 1 <= x - a + i <= b]
        ys = sorted(by_x.get(x, []), reverse=True)
        if len(ys) != len(cells):
            raise BadShape(f"line x={x} carries {len(ys)} horizontals, expected {len(cells)}")
        for i, y in zip(cells, ys):
            rows[i - 1][x - a + i - 1] = y - a + i
    return validate(rows, t.dims)


# -- rendering ---------------------------------------------------------------

_SQ3 = math.sqrt(3) / 2


def _project(beta: int, alpha: int, h: int, a: int) -> tuple[int, int]:
    """Cube-stack point -> oblique coordinates; beta runs along columns,
    alpha along rows, h is height."""
    return (a + beta - alpha, a - alpha + h)


def _cartesian(u: float, v: float) -> tuple[float, float]:
    # x axis (sqrt(3)/2, -1/2), y axis (0, 1)
    return (u * _SQ3, v - u / 2)


def lozenges(pp: PlanePartition) -> list[tuple[str, tuple[tuple[int, int], ...]]]:
    """All ab + bc + ca lozenges as (kind, oblique corners).

    ``kind`` is ``"h"`` for horizontal (cube tops), ``"r"`` for faces facing
    the column direction and ``"l"`` for faces facing the row direction.
    """
    a, b, c = pp.dims

    def h(i, j):
        if i < 1 or j < 1:
            return c
        if i > a or j > b:
            return 0
        return pp.entry(i, j)

    out = []
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            e = h(i, j)
            quad = ((j - 1, i - 1, e), (j, i - 1, e), (j, i, e), (j - 1, i, e))
            out.append(("h", tuple(_project(*p, a) for p in quad)))
    for i in range(1, a + 1):
        for j in range(0, b + 1):
            for z in range(h(i, j + 1), h(i, j)):
                quad = ((j, i - 1, z), (j, i, z), (j, i, z + 1), (j, i - 1, z + 1))
                out.append(("r", tuple(_project(*p, a) for p in quad)))
    for j in range(1, b + 1):
        for i in range(0, a + 1):
            for z in range(h(i + 1, j), h(i, j)):
                quad = ((j - 1, i, z), (j, i, z), (j, i, z + 1), (j - 1, i, z + 1))
                out.append(("l", tuple(_project(*p, a) for p in quad)))
    return out


def hexagon_outline(dims) -> tuple[tuple[int, int], ...]:
    a, b, c = as_dims(dims)
    return ((0, 0), (b, 0), (a + b, a), (a + b, a + c), (a, a + c), (0, c))


ASCII_GLYPHS = {"h": "=", "r": "/", "l": "\\"}


def _inside(pt, poly) -> bool:
    # convex polygon, either orientation
    sign = 0
    for k in range(len(poly)):
        (x1, y1), (x2, y2) = poly[k], poly[(k + 1) % len(poly)]
        cross = (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1)
        if abs(cross) < 1e-12:
            continue
        s = 1 if cross > 0 else -1
        if sign and s != sign:
            return False
        sign = s
    return True


def render_ascii(t: LozengeTiling, cols_per_unit: int = 4, rows_per_unit: int = 2) -> str:
    """Character raster of the tiling.

    Each character cell shows the lozenge covering its centre: ``=`` for
    horizontal lozenges, ``/`` and ``\\`` for the two tilted kinds, blank
    outside the hexagon.
    """
    pp = pp_from_tiling(t)
    a, b, c = t.dims
    polys = [
        (ASCII_GLYPHS[kind], [_cartesian(*p) for p in quad]) for kind, quad in lozenges(pp)
    ]
    xs = [p[0] for _, q in polys for p in q]
    ys = [p[1] for _, q in polys for p in q]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    dx = _SQ3 / cols_per_unit
    dy = 1 / rows_per_unit
    ncols = round((x1 - x0) / dx)
    nrows = round((y1 - y0) / dy)
    lines = []
    for r in range(nrows):
        cy = y1 - (r + 0.5) * dy
        line = []
        for k in range(ncols):
            cx = x0 + (k + 0.5) * dx
            ch = " "
            for glyph, poly in polys:
                if _inside((cx, cy), poly):
                    ch = glyph
                    break
            line.append(ch)
        lines.append("".join(line).rstrip())
    return "\n".join(lines) + "\n"


SVG_FILLS = {"h": "#f2c14e", "r": "#5b8e7d", "l": "#3d5a80"}


def render_svg(t: LozengeTiling, scale: float = 30.0) -> str:
    pp = pp_from_tiling(t)
    pad = scale / 2
    polys = [(kind, [_cartesian(*p) for p in quad]) for kind, quad in lozenges(pp)]
    outline = [_cartesian(*p) for p in hexagon_outline(t.dims)]
    xs = [p[0] for p in outline]
    ys = [p[1] for p in outline]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0) * scale + 2 * pad
    height = (y1 - min(ys)) * scale + 2 * pad

    def pts(poly):
        return " ".join(
            f"{(x - x0) * scale + pad:.3f},{(y1 - y) * scale + pad:.3f}" for x, y in poly
        )

    a, b, c = t.dims
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.3f}" height="{height:.3f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
        f"<title>lozenge tiling of the {a},{b},{c} hexagon</title>",
    ]
    for kind, poly in polys:
        out.append(
            f'<polygon class="lozenge-{kind}" points="{pts(poly)}" '
            f'fill="{SVG_FILLS[kind]}" stroke="#222" stroke-width="1"/>'
        )
    out.append(f'<polygon class="outline" points="{pts(outline)}" fill="none" stroke="#000" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def all_cells(dims) -> Iterable[tuple[int, int]]:
    a, b, _ = as_dims(dims)
    return ((i, j) for i in range(1, a + 1) for j in range(1, b + 1))
