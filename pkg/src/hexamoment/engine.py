"""Counting, marginals, enumeration and exact uniform sampling of plane
partitions in a box.

The DP runs over columns. A state is one column, a weakly decreasing
a-vector with entries in 0..c, and column j+1 must lie pointwise below
column j. Weights live in a numpy object array indexed by the full grid
``{0..c}^a``; cells that are not decreasing vectors are masked to zero. On
the full grid the sum over all pointwise-larger (or smaller) cells factors
into one cumulative sum per axis, which is the prefix-sum acceleration.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np

from .ppcore import BoxDims, PlanePartition, as_dims

DEFAULT_LIMIT = 10**7


class TooLarge(RuntimeError):
    def __init__(self, what: str, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(
            f"{what} has size {size}, above the limit {limit}; "
            "raise it with --limit / HEXAMOMENT_LIMIT or pass --force"
        )


def default_limit() -> int:
    env = os.environ.get("HEXAMOMENT_LIMIT")
    return int(env) if env else DEFAULT_LIMIT


def _upsum(g: np.ndarray) -> np.ndarray:
    """out[t] = sum of g[s] over all s >= t pointwise."""
    for ax in range(g.ndim):
        g = np.flip(np.cumsum(np.flip(g, ax), axis=ax), ax)
    return g


def _downsum(g: np.ndarray) -> np.ndarray:
    """out[s] = sum of g[t] over all t <= s pointwise."""
    for ax in range(g.ndim):
        g = np.cumsum(g, axis=ax)
    return g


@lru_cache(maxsize=None)
def _mask(a: int, c: int) -> np.ndarray:
    m = np.zeros((c + 1,) * a, dtype=object)
    for s in column_states(a, c):
        m[s] = 1
    return m


@lru_cache(maxsize=None)
def column_states(a: int, c: int) -> tuple[tuple[int, ...], ...]:
    """Weakly decreasing a-vectors over 0..c in lexicographic order."""
    out = [
        tuple(reversed(s))
        for s in itertools.combinations_with_replacement(range(c + 1), a)
    ]
    return tuple(sorted(out))


@dataclass(frozen=True)
class DPTable:
    """forward[j-1][s]: fillings of columns 1..j ending in s;
    backward[j-1][s]: fillings of columns j..b starting in s."""

    dims: BoxDims
    forward: tuple[np.ndarray, ...]
    backward: tuple[np.ndarray, ...]

    @property
    def total(self) -> int:
        return int(self.forward[-1].sum())


def _check_grid(dims: BoxDims, limit: int | None, force: bool) -> None:
    limit = default_limit() if limit is None else limit
    size = (dims.c + 1) ** dims.a
    if size > limit and not force:
        raise TooLarge(f"DP state grid for {tuple(dims)}", size, limit)


@lru_cache(maxsize=64)
def _dp_table(dims: BoxDims) -> DPTable:
    a, b, c = dims
    mask = _mask(a, c)
    fwd = [mask.copy()]
    for _ in range(b - 1):
        fwd.append(_upsum(fwd[-1]) * mask)
    bwd = [mask.copy()]
    for _ in range(b - 1):
        bwd.append(_downsum(bwd[-1]) * mask)
    bwd.reverse()
    return DPTable(dims, tuple(fwd), tuple(bwd))


def dp_table(dims, limit: int | None = None, force: bool = False) -> DPTable:
    dims = as_dims(dims)
    _check_grid(dims, limit, force)
    return _dp_table(dims)


def count_box(dims, limit: int | None = None, force: bool = False) -> int:
    return dp_table(dims, limit, force).total


def macmahon(dims) -> int:
    """Closed product for the number of plane partitions in the box."""
    a, b, c = as_dims(dims)
    num = den = 1
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    assert num % den == 0
    return num // den


def enumerate_box(dims, limit: int | None = None, force: bool = False) -> Iterator[PlanePartition]:
    """Every plane partition in the box once, row-major lexicographic order."""
    dims = as_dims(dims)
    a, b, c = dims
    limit = default_limit() if limit is None else limit
    n = count_box(dims, force=True)
    if n > limit and not force:
        raise TooLarge(f"enumeration of {tuple(dims)}", n, limit)

    cells = [(i, j) for i in range(a) for j in range(b)]
    grid = [[0] * b for _ in range(a)]

    def rec(k):
        if k == len(cells):
            yield PlanePartition(dims, tuple(tuple(r) for r in grid))
            return
        i, j = cells[k]
        hi = c
        if i:
            hi = min(hi, grid[i - 1][j])
        if j:
            hi = min(hi, grid[i][j - 1])
        for v in range(hi + 1):
            grid[i][j] = v
            yield from rec(k + 1)
        grid[i][j] = 0

    return rec(0)


@dataclass(frozen=True)
class CellMarginals:
    """counts[i-1][j-1][k] = number of plane partitions with entry(i,j) = k."""

    dims: BoxDims
    total: int
    counts: tuple[tuple[tuple[int, ...], ...], ...]

    def prob(self, i: int, j: int, k: int) -> Fraction:
        a, b, c = self.dims
        if not (1 <= i <= a and 1 <= j <= b and 0 <= k <= c):
            return Fraction(0)
        return Fraction(self.counts[i - 1][j - 1][k], self.total)

    def distribution(self, i: int, j: int) -> list[Fraction]:
        return [Fraction(n, self.total) for n in self.counts[i - 1][j - 1]]

    def expected(self, i: int, j: int) -> Fraction:
        return Fraction(sum(k * n for k, n in enumerate(self.counts[i - 1][j - 1])), self.total)

    def perturbed(self, i: int = 1, j: int = 1) -> "CellMarginals":
        """Copy with one unit of count moved up one value in cell (i,j).

        Only used to check that the verification harness notices a fault.
        """
        row = list(self.counts[i - 1][j - 1])
        k = next(k for k, n in enumerate(row) if n and k < len(row) - 1)
        row[k] -= 1
        row[k + 1] += 1
        counts = [list(map(list, r)) for r in self.counts]
        counts[i - 1][j - 1] = row
        return CellMarginals(self.dims, self.total, tuple(tuple(map(tuple, r)) for r in counts))


@lru_cache(maxsize=64)
def _cell_marginals(dims: BoxDims) -> CellMarginals:
    a, b, c = dims
    table = _dp_table(dims)
    counts = [[None] * b for _ in range(a)]
    for j in range(b):
        w = table.forward[j] * table.backward[j]
        for i in range(a):
            other = tuple(ax for ax in range(a) if ax != i)
            col = w.sum(axis=other) if other else w
            counts[i][j] = tuple(int(v) for v in col)
    return CellMarginals(dims, table.total, tuple(tuple(r) for r in counts))


def cell_marginals(dims, limit: int | None = None, force: bool = False) -> CellMarginals:
    dims = as_dims(dims)
    _check_grid(dims, limit, force)
    return _cell_marginals(dims)


def expected_entries(dims, limit: int | None = None, force: bool = False) -> list[list[Fraction]]:
    m = cell_marginals(dims, limit, force)
    a, b, _ = m.dims
    return [[m.expected(i, j) for j in range(1, b + 1)] for i in range(1, a + 1)]


# -- sampling ----------------------------------------------------------------

def _rng(seed: int, stream: int = 0) -> np.random.Philox:
    """Counter-based generator keyed by (seed, stream); stable across platforms."""
    key = np.array([seed & 0xFFFFFFFFFFFFFFFF, stream & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)
    return np.random.Philox(key=key)


def _randbelow(bitgen: np.random.Philox, n: int) -> int:
    """Uniform integer in [0, n) for arbitrary n, by rejection on raw words."""
    k = n.bit_length()
    words = (k + 63) // 64
    while True:
        raw = bitgen.random_raw(words)
        v = 0
        for w in raw:
            v = (v << 64) | int(w)
        v &= (1 << k) - 1
        if v < n:
            return v


def _pick(bitgen, states, weights) -> tuple[int, ...]:
    total = sum(weights)
    r = _randbelow(bitgen, total)
    for s, w in zip(states, weights):
        if r < w:
            return s
        r -= w
    raise AssertionError("unreachable")


def sample_uniform(dims, seed: int, stream: int = 0) -> PlanePartition:
    """Exactly uniform plane partition in the box.

    Columns are drawn left to right, each with probability proportional to
    the number of ways to complete the remaining columns.
    """
    dims = as_dims(dims)
    a, b, c = dims
    table = dp_table(dims)
    states = column_states(a, c)
    bitgen = _rng(seed, stream)
    cols = []
    prev = None
    for j in range(b):
        if prev is None:
            cand = states
        else:
            cand = [s for s in states if all(x <= y for x, y in zip(s, prev))]
        weights = [int(table.backward[j][s]) for s in cand]
        prev = _pick(bitgen, cand, weights)
        cols.append(prev)
    rows = tuple(tuple(cols[j][i] for j in range(b)) for i in range(a))
    return PlanePartition(dims, rows)
