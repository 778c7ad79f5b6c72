"""Young diagrams, semistandard tableaux, the hook-content generating
function, and staircase arrays with a prescribed boundary diagonal.

An array with parameters (a, n, c, k) fills the cells
``F = {(i, j) : 1 <= i <= a, 1 <= j <= i + n}`` with integers in 0..c,
weakly decreasing along rows and down columns, with ``T(i, i + n) = k_i``.
Its interior norm leaves out that boundary diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from .engine import TooLarge, default_limit
from .numeric import QPoly, mean_exponent, qpoly_div_exact, qpoly_mul


class NoTableaux(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Shape:
    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts) or any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @cached_property
    def conjugate(self) -> "Shape":
        if not self.parts:
            return Shape()
        return Shape([sum(1 for p in self.parts if p > j) for j in range(self.parts[0])])

    def cells(self) -> list[tuple[int, int]]:
        return [(r, col) for r, p in enumerate(self.parts, 1) for col in range(1, p + 1)]

    def hook(self, r: int, col: int) -> int:
        return self.parts[r - 1] - col + self.conjugate.parts[col - 1] - r + 1

    @staticmethod
    def content(r: int, col: int) -> int:
        return col - r


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Shape]:
    max_part = n if max_part is None else max_part

    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in rec(rem - p, p):
                yield (p,) + rest

    for parts in rec(n, max_part):
        yield Shape(parts)


@dataclass(frozen=True)
class SSYT:
    shape: Shape
    rows: tuple[tuple[int, ...], ...]
    max_entry: int

    @property
    def norm(self) -> int:
        return sum(map(sum, self.rows))

    def is_valid(self) -> bool:
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            return False
        for r, row in enumerate(self.rows):
            if any(not 1 <= v <= self.max_entry for v in row):
                return False
            if any(x > y for x, y in zip(row, row[1:])):
                return False
            if r and any(row[col] <= self.rows[r - 1][col] for col in range(len(row))):
                return False
        return True


def hook_content_gf(shape: Shape | Sequence[int], a: int) -> QPoly:
    """Sum of q^(norm) over tableaux of the shape with entries in 1..a."""
    shape = shape if isinstance(shape, Shape) else Shape(shape)
    cells = shape.cells()
    if any(a + Shape.content(r, col) <= 0 for r, col in cells):
        return QPoly()
    num = QPoly.monomial(sum(i * p for i, p in enumerate(shape.parts, 1)))
    for r, col in cells:
        num = qpoly_mul(num, QPoly.one_minus_q_pow(a + Shape.content(r, col)))
    for r, col in cells:
        num = qpoly_div_exact(num, QPoly.one_minus_q_pow(shape.hook(r, col)))
    return num


def enumerate_ssyt(
    shape: Shape | Sequence[int], max_entry: int, limit: int | None = None, force: bool = False
) -> Iterator[SSYT]:
    shape = shape if isinstance(shape, Shape) else Shape(shape)
    limit = default_limit() if limit is None else limit
    n = hook_content_gf(shape, max_entry).eval_at_one()
    if n > limit and not force:
        raise TooLarge(f"tableaux of shape {shape.parts}", n, limit)
    cells = shape.cells()
    grid = [[0] * p for p in shape.parts]

    def rec(k):
        if k == len(cells):
            yield SSYT(shape, tuple(tuple(r) for r in grid), max_entry)
            return
        r, col = cells[k]
        lo = 1
        if col > 1:
            lo = max(lo, grid[r - 1][col - 2])
        if r > 1:
            lo = max(lo, grid[r - 2][col - 1] + 1)
        for v in range(lo, max_entry + 1):
            grid[r - 1][col - 1] = v
            yield from rec(k + 1)

    return rec(0)


def mean_norm_ssyt(shape: Shape | Sequence[int], a: int) -> Fraction:
    gf = hook_content_gf(shape, a)
    if gf.is_zero():
        raise NoTableaux(f"no tableaux of shape {tuple(shape)} with entries up to {a}")
    return mean_exponent(gf)


# -- arrays on the staircase -------------------------------------------------

def staircase_cells(a: int, n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, a + 1) for j in range(1, i + n + 1)]


def _check_params(a: int, c: int, n: int, k: Sequence[int]) -> tuple[int, ...]:
    k = tuple(int(v) for v in k)
    if a < 1 or n < 0 or c < 0:
        raise ValueError("need a >= 1, n >= 0, c >= 0")
    if len(k) != a:
        raise ValueError(f"boundary sequence must have length {a}")
    if any(not 0 <= v <= c for v in k) or any(x < y for x, y in zip(k, k[1:])):
        raise ValueError(f"boundary sequence {k} must be decreasing within 0..{c}")
    return k


@dataclass(frozen=True)
class NKArray:
    a: int
    n: int
    c: int
    k: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]  # row i has i + n entries

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    @property
    def norm(self) -> int:
        return sum(map(sum, self.rows))

    @property
    def interior_norm(self) -> int:
        return self.norm - sum(self.k)

    def is_valid(self) -> bool:
        a, n, c = self.a, self.n, self.c
        if len(self.rows) != a or any(len(r) != i + n for i, r in enumerate(self.rows, 1)):
            return False
        for i, row in enumerate(self.rows, 1):
            if row[-1] != self.k[i - 1] or any(not 0 <= v <= c for v in row):
                return False
            if any(x < y for x, y in zip(row, row[1:])):
                return False
            if i > 1 and any(self.rows[i - 2][j] < row[j] for j in range(i + n - 1)):
                return False
        return True


def enumerate_nk_arrays(
    a: int, c: int, n: int, k: Sequence[int], limit: int | None = None, force: bool = False
) -> Iterator[NKArray]:
    k = _check_params(a, c, n, k)
    limit = default_limit() if limit is None else limit
    expected = hook_content_gf(Shape([c - v for v in reversed(k)]), a + n).eval_at_one()
    if expected > limit and not force:
        raise TooLarge(f"arrays for (a={a}, n={n}, c={c}, k={k})", expected, limit)
    grid = [[0] * (i + n) for i in range(1, a + 1)]
    for i in range(a):
        grid[i][-1] = k[i]
    free = [(i, j) for i in range(1, a + 1) for j in range(1, i + n)]

    def rec(t):
        if t == len(free):
            yield NKArray(a, n, c, k, tuple(tuple(r) for r in grid))
            return
        i, j = free[t]
        hi = c if i == 1 else grid[i - 2][j - 1]
        if j > 1:
            hi = min(hi, grid[i - 1][j - 2])
        for v in range(k[i - 1], hi + 1):
            grid[i - 1][j - 1] = v
            yield from rec(t + 1)

    return rec(0)


def nk_counts(a: int, c: int, n: int, k: Sequence[int], **kw) -> tuple[int, int]:
    """(number of arrays, sum of their interior norms) by exhaustive generation."""
    count = total = 0
    for arr in enumerate_nk_arrays(a, c, n, k, **kw):
        count += 1
        total += arr.interior_norm
    return count, total


def mean_norm_nk(a: int, c: int, n: int, k: Sequence[int]) -> Fraction:
    """Mean interior norm: (n a c + (a + n - 1) sum(k)) / 2."""
    k = _check_params(a, c, n, k)
    return Fraction(n * a * c + (a + n - 1) * sum(k), 2)


def mean_full_norm_nk(a: int, c: int, n: int, k: Sequence[int]) -> Fraction:
    """Mean norm including the boundary diagonal: (n a c + (a + n + 1) sum(k)) / 2."""
    k = _check_params(a, c, n, k)
    return Fraction(n * a * c + (a + n + 1) * sum(k), 2)


def _conjugate_parts(parts: Sequence[int]) -> list[int]:
    parts = [p for p in parts if p > 0]
    if not parts:
        return []
    return [sum(1 for p in parts if p > j) for j in range(max(parts))]


def array_to_ssyt(arr: NKArray) -> SSYT:
    a, n, c = arr.a, arr.n, arr.c
    stacked = []
    for row in arr.rows:
        part = sorted((c - v for v in row), reverse=True)
        stacked.append(sorted(_conjugate_parts(part)))  # length c - k_i, increasing
    # rotate by 180 degrees: stacked row i becomes tableau row a + 1 - i, reversed
    rows = [tuple(a + n + 1 - e for e in reversed(stacked[a - r])) for r in range(1, a + 1)]
    rows = [r for r in rows if r]
    shape = Shape([c - v for v in reversed(arr.k)])
    return SSYT(shape, tuple(rows), a + n)


def ssyt_to_array(t: SSYT, a: int, n: int, c: int) -> NKArray:
    parts = list(t.shape.parts)
    if len(parts) > a or (parts and parts[0] > c):
        raise ShapeMismatch(f"shape {tuple(parts)} does not fit a={a}, c={c}")
    if t.max_entry > a + n:
        raise ShapeMismatch(f"entries up to {t.max_entry} exceed a + n = {a + n}")
    parts += [0] * (a - len(parts))
    k = tuple(c - parts[a - i] for i in range(1, a + 1))
    padded = list(t.rows) + [()] * (a - len(t.rows))
    rows = []
    for i in range(1, a + 1):
        stacked = [a + n + 1 - e for e in reversed(padded[a - i])]
        part = _conjugate_parts(sorted(stacked, reverse=True))
        if len(part) > i + n:
            raise ShapeMismatch(f"row {i} needs {len(part)} cells, only {i + n} available")
        part += [0] * (i + n - len(part))
        rows.append(tuple(c - v for v in reversed(part)))
    arr = NKArray(a, n, c, k, tuple(rows))
    if not arr.is_valid():
        raise ShapeMismatch("tableau does not correspond to a valid array")
    return arr


def norm_relation_rhs(arr: NKArray, tableau_norm: int) -> int:
    a, n, c = arr.a, arr.n, arr.c
    cells = a * n + (a + 1) * a // 2
    return c * cells - (a + n + 1) * (a * c - sum(arr.k)) + tableau_norm


def check_norm_relation(arr: NKArray) -> bool:
    return arr.norm == norm_relation_rhs(arr, array_to_ssyt(arr).norm)


def decreasing_sequences(a: int, c: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing length-a sequences over 0..c."""
    for combo in itertools.combinations_with_replacement(range(c, -1, -1), a):
        yield combo
