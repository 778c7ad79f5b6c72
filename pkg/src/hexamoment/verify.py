"""Checks every closed form and bijection against the exact DP and, where
the box is small enough, against brute-force enumeration."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import engine, ppcore, qcomb, stats
from .ppcore import BoxDims, as_dims

ENUMERATION_CAP = 10**4


@dataclass
class Check:
    name: str
    dims: tuple[int, ...] | None
    passed: bool
    expected: str = ""
    actual: str = ""
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "dims": list(self.dims) if self.dims is not None else None,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
            "detail": self.detail,
        }


@dataclass
class _Collector:
    dims: tuple[int, ...] | None
    checks: list[Check] = field(default_factory=list)

    def equal(self, name, expected, actual, detail=""):
        """Keep one record per name: the first failure, else a pass."""
        ok = expected == actual
        for chk in self.checks:
            if chk.name == name:
                if chk.passed and not ok:
                    chk.passed, chk.expected, chk.actual, chk.detail = False, str(expected), str(actual), detail
                return ok
        self.checks.append(Check(name, self.dims, ok, str(expected), str(actual), detail))
        return ok


def box_checks(dims, fault: bool = False, enumeration_cap: int = ENUMERATION_CAP) -> list[Check]:
    """All checks tied to one box. ``fault`` perturbs one cell marginal."""
    dims = as_dims(dims)
    a, b, c = dims
    col = _Collector(tuple(dims))
    marg = engine.cell_marginals(dims, force=True)
    if fault:
        marg = marg.perturbed()
    table = stats.prob_table(dims, marginals=marg)
    n_box = marg.total

    col.equal("count_product", engine.macmahon(dims), n_box)
    col.equal("total_mass", a * b, table.total())

    for y0 in dims.y_range:
        col.equal("row_sum", stats.row_sum_closed_form(dims), stats.row_sum(dims, y0, table), f"y0={y0}")
    for x0 in dims.x_range:
        col.equal("column_sum", stats.lemma2_closed_form(dims, x0), stats.column_sum(dims, x0, table), f"x0={x0}")
        branches = stats.first_moment_branches(dims, x0)
        col.equal("first_moment_seams", 1, len(set(branches)), f"x0={x0}")
        col.equal(
            "first_moment", stats.lemma3_closed_form(dims, x0),
            stats.column_first_moment(dims, x0, table), f"x0={x0}",
        )
        if a == b:
            col.equal(
                "first_moment_square", stats.lemma4_closed_form(a, c, x0),
                stats.column_first_moment(dims, x0, table), f"x0={x0}",
            )
        col.equal(
            "diagonal_sum", stats.diagonal_closed_form(dims, x0),
            stats.diagonal_expected_sum(dims, x0, marg), f"x={x0}",
        )
    col.equal(
        "diagonal_complement", c,
        stats.diagonal_expected_sum(dims, 1, marg) + stats.diagonal_expected_sum(dims, a + b - 1, marg),
    )

    for i, j in ppcore.all_cells(dims):
        col.equal(
            "complement_expectation", c, marg.expected(i, j) + marg.expected(a + 1 - i, b + 1 - j), f"cell=({i},{j})"
        )
        if a == b:
            col.equal(
                "transpose_complement_expectation", c,
                marg.expected(i, j) + marg.expected(a + 1 - j, a + 1 - i), f"cell=({i},{j})",
            )

    rep = stats.moment_report(dims, table)
    col.equal("horizontal_moment", rep.closed_horizontal, rep.horizontal)
    col.equal("vertical_moment", rep.closed_vertical, rep.vertical)
    col.equal("vertical_split_rows", rep.closed_row_term, rep.row_term)
    col.equal("vertical_split_columns", rep.closed_column_term, rep.column_term)
    col.equal("vertical_split_total", rep.vertical, rep.split_total)

    if n_box <= enumeration_cap:
        _enumeration_checks(dims, marg, table, col)
    return col.checks


def _enumeration_checks(dims: BoxDims, marg, table, col: _Collector) -> None:
    a, b, c = dims
    freq: Counter = Counter()
    cell_freq: Counter = Counter()
    n = 0
    for pp in engine.enumerate_box(dims, force=True):
        n += 1
        pos = ppcore.horizontal_positions(pp)
        freq.update(pos)
        per_line = Counter(x for x, _ in pos)
        for x0 in dims.x_range:
            col.equal("line_count_per_tiling", stats.lemma2_closed_form(dims, x0), per_line[x0], f"x0={x0}")
        for i, j in ppcore.all_cells(dims):
            cell_freq[(i, j, pp.entry(i, j))] += 1
    col.equal("count_enumeration", n, marg.total)
    for i, j in ppcore.all_cells(dims):
        for k in range(c + 1):
            col.equal("cell_marginals_enumeration", Fraction(cell_freq[(i, j, k)], n), marg.prob(i, j, k),
                      f"cell=({i},{j}) value={k}")
    for xy, p in table.p.items():
        col.equal("prob_table_enumeration", Fraction(freq[xy], n), p, f"(x,y)={xy}")


def array_checks(max_a: int = 3, max_n: int = 2, max_c: int = 3, cap: int = ENUMERATION_CAP) -> list[Check]:
    col = _Collector(None)
    for a in range(1, max_a + 1):
        for n in range(0, max_n + 1):
            for c in range(0, max_c + 1):
                for k in qcomb.decreasing_sequences(a, c):
                    tag = f"a={a} n={n} c={c} k={k}"
                    try:
                        arrays = list(qcomb.enumerate_nk_arrays(a, c, n, k, limit=cap))
                    except engine.TooLarge:
                        continue
                    count = len(arrays)
                    interior = sum(t.interior_norm for t in arrays)
                    col.equal("mean_norm_arrays", qcomb.mean_norm_nk(a, c, n, k), Fraction(interior, count), tag)
                    full = sum(t.norm for t in arrays)
                    col.equal("mean_norm_arrays_full", qcomb.mean_full_norm_nk(a, c, n, k), Fraction(full, count), tag)
                    shape = qcomb.Shape([c - v for v in reversed(k)])
                    col.equal("array_count_tableaux", qcomb.hook_content_gf(shape, a + n).eval_at_one(), count, tag)
                    round_trip = all(qcomb.ssyt_to_array(qcomb.array_to_ssyt(t), a, n, c) == t for t in arrays)
                    col.equal("array_tableau_round_trip", True, round_trip, tag)
                    col.equal("array_norm_relation", True, all(map(qcomb.check_norm_relation, arrays)), tag)
    return col.checks


def brute_force_gf(shape, a: int) -> dict[int, int]:
    return dict(Counter(t.norm for t in qcomb.enumerate_ssyt(shape, a, force=True)))


def hook_content_checks(max_size: int = 6, max_a: int = 4) -> list[Check]:
    col = _Collector(None)
    for size in range(0, max_size + 1):
        for shape in qcomb.partitions_of(size):
            for a in range(1, max_a + 1):
                tag = f"shape={shape.parts} a={a}"
                gf = qcomb.hook_content_gf(shape, a)
                brute = brute_force_gf(shape, a)
                as_dict = {k: v for k, v in enumerate(gf.coeffs) if v}
                col.equal("hook_content_gf", brute, as_dict, tag)
                if brute:
                    mean = Fraction(sum(k * v for k, v in brute.items()), sum(brute.values()))
                    col.equal("mean_norm_tableaux", Fraction((a + 1) * size, 2), mean, tag)
                    col.equal("mean_norm_tableaux_gf", mean, qcomb.mean_norm_ssyt(shape, a), tag)
    return col.checks


def sweep(max_side: int = 3) -> list[tuple[int, int, int]]:
    return list(itertools.product(range(1, max_side + 1), repeat=3))


def run(dims_list, fault: bool = False, global_checks: bool = True) -> list[Check]:
    out: list[Check] = []
    for dims in dims_list:
        out.extend(box_checks(dims, fault=fault))
    if global_checks:
        out.extend(array_checks())
        out.extend(hook_content_checks())
    return out
