"""Placement probabilities of horizontal lozenges and their moments.

p(x, y) is the probability that a uniformly random tiling contains the
horizontal lozenge with lowest vertex (x, y). It is assembled from the
per-cell entry distributions: cell (i, j) with entry e puts its lozenge at
x = j - i + a, y = e + a - i, and the cells on one diagonal never collide,
so

    p(x, y) = sum_i Prob(entry(i, x - a + i) = y - a + i).

Moments are taken about the centre ((a+b)/2, (a+c)/2); the vertical one
uses the offset 2(y - (a+c-1)/2) - (x - (a+b)/2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .engine import CellMarginals, cell_marginals
from .ppcore import BoxDims, as_dims

F = Fraction


class MomentMismatch(AssertionError):
    def __init__(self, report: "MomentReport"):
        self.report = report
        super().__init__(f"moment identities fail for {tuple(report.dims)}: {report.as_dict()}")


@dataclass(frozen=True)
class Center:
    sx: Fraction
    sy: Fraction

    @classmethod
    def of(cls, dims) -> "Center":
        a, b, c = as_dims(dims)
        return cls(F(a + b, 2), F(a + c, 2))


@dataclass(frozen=True)
class ProbTable:
    dims: BoxDims
    p: dict = field(hash=False, compare=True)

    def __getitem__(self, xy: tuple[int, int]) -> Fraction:
        return self.p.get(xy, F(0))

    def items(self):
        return sorted(self.p.items())

    def total(self) -> Fraction:
        return sum(self.p.values(), F(0))


def prob_table(dims, marginals: CellMarginals | None = None, **kw) -> ProbTable:
    if marginals is None:
        marginals = cell_marginals(dims, **kw)
    dims = marginals.dims
    a, b, c = dims
    p = {}
    for x in dims.x_range:
        for y in dims.y_range:
            acc = F(0)
            for i in range(1, a + 1):
                j = x - a + i
                if 1 <= j <= b:
                    acc += marginals.prob(i, j, y - a + i)
            p[(x, y)] = acc
    return ProbTable(dims, p)


def _table(dims, table: ProbTable | None) -> ProbTable:
    return table if table is not None else prob_table(dims)


def _check_x(dims: BoxDims, x0: int) -> None:
    if not 1 <= x0 <= dims.a + dims.b - 1:
        raise ValueError(f"x0={x0} outside 1..{dims.a + dims.b - 1}")


def row_sum(dims, y0: int, table: ProbTable | None = None) -> Fraction:
    dims = as_dims(dims)
    if not 0 <= y0 <= dims.a + dims.c - 1:
        raise ValueError(f"y0={y0} outside 0..{dims.a + dims.c - 1}")
    t = _table(dims, table)
    return sum((t[x, y0] for x in dims.x_range), F(0))


def row_sum_closed_form(dims) -> Fraction:
    a, b, c = as_dims(dims)
    return F(a * b, a + c)


def column_sum(dims, x0: int, table: ProbTable | None = None) -> Fraction:
    dims = as_dims(dims)
    _check_x(dims, x0)
    t = _table(dims, table)
    return sum((t[x0, y] for y in dims.y_range), F(0))


def lemma2_closed_form(dims, x0: int) -> int:
    """Number of horizontal lozenges on the vertical line x = x0; the same
    for every tiling."""
    dims = as_dims(dims)
    _check_x(dims, x0)
    a, b, _ = dims
    return min(x0, a, b, a + b - x0)


def column_first_moment(dims, x0: int, table: ProbTable | None = None) -> Fraction:
    dims = as_dims(dims)
    _check_x(dims, x0)
    t = _table(dims, table)
    ybar = F(dims.a + dims.c - 1, 2)
    return sum((t[x0, y] * (y - ybar) for y in dims.y_range), F(0))


def lemma3_closed_form(dims, x0: int) -> Fraction:
    """Piecewise closed form of the first moment along x = x0.

    At the seams (x0 = a or x0 = b) the neighbouring branches agree; the
    first matching branch is used.
    """
    dims = as_dims(dims)
    _check_x(dims, x0)
    a, b, c = dims
    den = 2 * (a + b)
    if x0 <= min(a, b):
        return F((-a * a - a * b - a * c + b * c + a * x0 + b * x0) * x0, den)
    if x0 >= max(a, b):
        return F((-b * b - a * b - b * c + a * c + a * x0 + b * x0) * (a + b - x0), den)
    if a <= b:
        return F(a * c * (a + b - 2 * x0), den)
    return F(-b * (a + b + c) * (a + b - 2 * x0), den)


def first_moment_branches(dims, x0: int) -> list[Fraction]:
    """Every branch of the piecewise form whose range contains x0."""
    dims = as_dims(dims)
    _check_x(dims, x0)
    a, b, c = dims
    den = 2 * (a + b)
    lo, hi = min(a, b), max(a, b)
    out = []
    if x0 <= lo:
        out.append(F((-a * a - a * b - a * c + b * c + a * x0 + b * x0) * x0, den))
    if lo <= x0 <= hi:
        if a <= b:
            out.append(F(a * c * (a + b - 2 * x0), den))
        if a >= b:
            out.append(F(-b * (a + b + c) * (a + b - 2 * x0), den))
    if x0 >= hi:
        out.append(F((-b * b - a * b - b * c + a * c + a * x0 + b * x0) * (a + b - x0), den))
    return out


def lemma4_closed_form(n: int, m: int, x0: int) -> Fraction:
    """First moment along x = x0 for the n, n, m hexagon."""
    if not 1 <= x0 <= 2 * n - 1:
        raise ValueError(f"x0={x0} outside 1..{2 * n - 1}")
    if x0 <= n:
        return F((x0 - n) * x0, 2)
    return F((x0 - n) * (2 * n - x0), 2)


def _diagonal_cells(dims: BoxDims, x: int):
    a, b, _ = dims
    return [(i, x - a + i) for i in range(1, a + 1) if 1 <= x - a + i <= b]


def diagonal_expected_sum(dims, x: int, marginals: CellMarginals | None = None) -> Fraction:
    """Sum of expected entries over the cells feeding vertical line x."""
    dims = as_dims(dims)
    _check_x(dims, x)
    m = marginals if marginals is not None else cell_marginals(dims)
    return sum((m.expected(i, j) for i, j in _diagonal_cells(dims, x)), F(0))


def diagonal_closed_form(dims, x: int) -> Fraction:
    dims = as_dims(dims)
    _check_x(dims, x)
    a, b, c = dims
    if x <= min(a, b):
        return F(b * c * x, a + b)
    if x >= max(a, b):
        return F(a * c * (a + b - x), a + b)
    if a <= b:
        # equals x * D(1) - (x - a) * c
        return F(a * c * (a + b - x), a + b)
    return F(b * c * x, a + b)


def horizontal_moment(dims, table: ProbTable | None = None) -> Fraction:
    dims = as_dims(dims)
    t = _table(dims, table)
    sx = Center.of(dims).sx
    return sum((p * (x - sx) ** 2 for (x, _), p in t.p.items()), F(0))


def vertical_moment(dims, table: ProbTable | None = None) -> Fraction:
    dims = as_dims(dims)
    t = _table(dims, table)
    sx = Center.of(dims).sx
    ybar = F(dims.a + dims.c - 1, 2)
    return sum((p * (2 * (y - ybar) - (x - sx)) ** 2 for (x, y), p in t.p.items()), F(0))


def closed_form_horizontal(dims) -> Fraction:
    a, b, c = as_dims(dims)
    return F(a * b * (a * a + b * b - 2), 12)


def closed_form_vertical(dims) -> Fraction:
    a, b, c = as_dims(dims)
    return F(a * b * (a * a + b * b - 2 + 4 * c * c + 4 * a * c + 4 * b * c), 12)


def closed_form_row_term(dims) -> Fraction:
    a, b, c = as_dims(dims)
    return F(a * b * (a + c - 1) * (a + c + 1), 3)


def closed_form_column_term(dims) -> Fraction:
    a, b, c = as_dims(dims)
    return F(a * b * (-1 + a * a + a * c - b * c), 3)


@dataclass(frozen=True)
class MomentReport:
    """Direct sums, closed forms, and the three-way split of the vertical
    moment: vertical = row_term - column_term + horizontal."""

    dims: BoxDims
    horizontal: Fraction
    vertical: Fraction
    closed_horizontal: Fraction
    closed_vertical: Fraction
    row_term: Fraction
    column_term: Fraction
    closed_row_term: Fraction
    closed_column_term: Fraction

    @property
    def split_total(self) -> Fraction:
        return self.row_term - self.column_term + self.horizontal

    @property
    def consistent(self) -> bool:
        return (
            self.horizontal == self.closed_horizontal
            and self.vertical == self.closed_vertical
            and self.row_term == self.closed_row_term
            and self.column_term == self.closed_column_term
            and self.split_total == self.vertical
        )

    def as_dict(self) -> dict:
        out = {"a": self.dims.a, "b": self.dims.b, "c": self.dims.c}
        for name in (
            "horizontal", "vertical", "closed_horizontal", "closed_vertical",
            "row_term", "column_term", "closed_row_term", "closed_column_term",
            "split_total",
        ):
            out[name] = str(getattr(self, name))
        out["consistent"] = self.consistent
        return out


def moment_report(dims, table: ProbTable | None = None) -> MomentReport:
    dims = as_dims(dims)
    t = _table(dims, table)
    sx = Center.of(dims).sx
    ybar = F(dims.a + dims.c - 1, 2)
    row_term = 4 * sum((row_sum(dims, y, t) * (y - ybar) ** 2 for y in dims.y_range), F(0))
    column_term = 4 * sum(
        (column_first_moment(dims, x, t) * (x - sx) for x in dims.x_range), F(0)
    )
    return MomentReport(
        dims=dims,
        horizontal=horizontal_moment(dims, t),
        vertical=vertical_moment(dims, t),
        closed_horizontal=closed_form_horizontal(dims),
        closed_vertical=closed_form_vertical(dims),
        row_term=row_term,
        column_term=column_term,
        closed_row_term=closed_form_row_term(dims),
        closed_column_term=closed_form_column_term(dims),
    )


def verify_theorem(dims, table: ProbTable | None = None) -> MomentReport:
    """Like :func:`moment_report`, but raises :class:`MomentMismatch` unless
    every identity holds exactly."""
    report = moment_report(dims, table)
    if not report.consistent:
        raise MomentMismatch(report)
    return report
