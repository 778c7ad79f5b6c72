"""Acceptance gate: one test per criterion, all comparisons exact.

Independent oracles come from ``oracles.py`` (Cartesian-product filters that
share no code with the package). Where a box is too big for those, the
package enumerator or the exact DP is the reference and the brute force
covers the smaller cases.
"""

import io
import itertools
import math
from collections import Counter
from fractions import Fraction

from hexamoment import engine, ppcore, qcomb, stats
from hexamoment.cli import main

import oracles

F = Fraction
CUBE3 = list(itertools.product(range(1, 4), repeat=3))
BIG_SIDES = range(1, 7)


def horz(a, b, c):
    return F(a * b * (a * a + b * b - 2), 12)


def vert(a, b, c):
    return horz(a, b, c) + F(a * b * c * (a + b + c), 3)


def test_criterion_01_moment_formulas():
    for dims in CUBE3 + [(4, 2, 2), (2, 4, 3), (3, 5, 4)]:
        assert stats.horizontal_moment(dims) == horz(*dims), dims
        assert stats.vertical_moment(dims) == vert(*dims), dims
        rep = stats.verify_theorem(dims)
        assert rep.closed_horizontal == horz(*dims) and rep.closed_vertical == vert(*dims)
    # brute force over every tiling where the product space is small
    for dims in [(1, 1, 1), (2, 2, 2), (1, 2, 3), (3, 2, 1), (2, 3, 2), (2, 2, 3)]:
        assert oracles.moments(*dims) == (horz(*dims), vert(*dims))


def test_criterion_02_vertical_moment_cube():
    assert stats.vertical_moment((2, 2, 2)) == 18
    assert oracles.moments(2, 2, 2)[1] == 18
    for n in (1, 2, 3):
        assert stats.vertical_moment((n, n, n)) == F(7 * n**4, 6) - F(n**2, 6)


def _row_dims():
    return CUBE3 + [(3, 5, 4)]


def test_criterion_03_row_sums():
    for dims in _row_dims():
        a, b, c = dims
        t = stats.prob_table(dims)
        for y in range(a + c):
            assert stats.row_sum(dims, y, t) == F(a * b, a + c), (dims, y)


def _trapezoid(a, b, x):
    return min(x, a, b, a + b - x)


def test_criterion_04_column_sums_and_line_counts():
    for dims in _row_dims():
        a, b, c = dims
        t = stats.prob_table(dims)
        for x in range(1, a + b):
            assert stats.column_sum(dims, x, t) == _trapezoid(a, b, x), (dims, x)
            assert stats.lemma2_closed_form(dims, x) == _trapezoid(a, b, x)
    for dims in itertools.product(BIG_SIDES, repeat=3):
        if engine.count_box(dims) > 10**4:
            continue
        a, b, _ = dims
        want = Counter({x: _trapezoid(a, b, x) for x in range(1, a + b)})
        for pp in engine.enumerate_box(dims):
            assert Counter(x for x, _ in ppcore.horizontal_positions(pp)) == want, dims


def _first_moment_brute(dims):
    a, b, c = dims
    p = oracles.prob_field(*dims)
    ybar = F(a + c - 1, 2)
    out = {}
    for (x, y), v in p.items():
        out[x] = out.get(x, 0) + v * (y - ybar)
    return out


def test_criterion_05_first_moments():
    for dims in [(2, 3, 2), (3, 2, 2)]:
        brute = _first_moment_brute(dims)
        a, b, _ = dims
        for x in range(1, a + b):
            assert stats.column_first_moment(dims, x) == stats.lemma3_closed_form(dims, x) == brute[x]
    for dims in [(2, 4, 3), (3, 5, 4), (5, 3, 4), (4, 2, 2), (1, 3, 2), (3, 1, 2)]:
        t = stats.prob_table(dims)
        for x in range(1, dims[0] + dims[1]):
            assert stats.column_first_moment(dims, x, t) == stats.lemma3_closed_form(dims, x)
    for n, m in itertools.product(range(1, 4), repeat=2):
        t = stats.prob_table((n, n, m))
        for x in range(1, 2 * n):
            v = stats.column_first_moment((n, n, m), x, t)
            assert v == stats.lemma4_closed_form(n, m, x) == stats.lemma3_closed_form((n, n, m), x)


def _array_sweep():
    for a in range(1, 4):
        for n in range(0, 3):
            for c in range(0, 4):
                for k in qcomb.decreasing_sequences(a, c):
                    yield a, n, c, k


def test_criterion_06_array_mean():
    seen = 0
    for a, n, c, k in _array_sweep():
        arrays = list(qcomb.enumerate_nk_arrays(a, c, n, k))
        if len(arrays) > 10**4:
            continue
        seen += 1
        interior = sum(t.interior_norm for t in arrays)
        assert F(interior, len(arrays)) == F(n * a * c + (a + n - 1) * sum(k), 2), (a, n, c, k)
        assert qcomb.mean_norm_nk(a, c, n, k) == F(interior, len(arrays))
        free = sum(i + n - 1 for i in range(1, a + 1))
        if (c + 1) ** free <= 5000:
            brute = oracles.nk_arrays(a, n, c, k)
            assert len(brute) == len(arrays)
            assert interior == sum(v for t in brute for (i, j), v in t.items() if j != i + n)
    assert seen == 195


def test_criterion_07_hook_content():
    for size in range(0, 7):
        for shape in qcomb.partitions_of(size):
            for a in range(1, 5):
                gf = qcomb.hook_content_gf(shape, a)
                coeffs = {e: v for e, v in enumerate(gf.coeffs) if v}
                assert coeffs == oracles.ssyt_gf(shape.parts, a), (shape.parts, a)
                if len(shape) <= a:
                    assert qcomb.mean_norm_ssyt(shape, a) == F((a + 1) * size, 2)


def _swap_content(sa, j):
    out = ppcore.bender_knuth_swap(sa, j)
    mu, nu = ppcore.content(sa), ppcore.content(out)
    want = dict(mu)
    want[j], want[j + 1] = mu.get(j, 0), mu.get(j + 1, 0)
    want[j], want[j + 1] = want[j + 1], want[j]
    want = {key: v for key, v in want.items() if v}
    return ppcore.is_valid_shifted(out) and nu == want and ppcore.bender_knuth_swap(out, j) == sa


def test_criterion_08_bijections():
    for a, n, c, k in _array_sweep():
        for arr in qcomb.enumerate_nk_arrays(a, c, n, k):
            t = qcomb.array_to_ssyt(arr)
            assert t.is_valid()
            assert qcomb.ssyt_to_array(t, a, n, c) == arr
            assert qcomb.check_norm_relation(arr)

    for dims in [(2, 2, 2), (3, 2, 2)]:
        a, _, c = dims
        for pp in engine.enumerate_box(dims):
            sa = ppcore.shift_rows(pp)
            for j in range(0, a + c - 1):
                assert _swap_content(sa, j), (pp.entries, j)

    for dims in CUBE3:
        a, b, c = dims
        for pp in engine.enumerate_box(dims):
            assert ppcore.complement(ppcore.complement(pp)) == pp
            if a == b:
                assert ppcore.transpose_complement(ppcore.transpose_complement(pp)) == pp
        e = engine.expected_entries(dims)
        pps = oracles.plane_partitions(*dims)
        brute = [[F(sum(m[i][j] for m in pps), len(pps)) for j in range(b)] for i in range(a)]
        assert e == brute
        for i in range(a):
            for j in range(b):
                assert e[i][j] + e[a - 1 - i][b - 1 - j] == c
                if a == b:
                    assert e[i][j] + e[b - 1 - j][a - 1 - i] == c


def test_criterion_09_engine():
    for dims in itertools.product(BIG_SIDES, repeat=3):
        a, b, c = dims
        n = engine.count_box(dims)
        assert n == oracles.macmahon(*dims), dims
        if n <= 10**5:
            assert sum(1 for _ in engine.enumerate_box(dims)) == n, dims
        if (c + 1) ** (a * b) <= 3 * 10**5:
            assert len(oracles.plane_partitions(*dims)) == n, dims
        if n <= 10**4 and a * b * c <= 40:
            pps = list(engine.enumerate_box(dims))
            m = engine.cell_marginals(dims)
            freq = Counter((i, j, pp.entries[i - 1][j - 1]) for pp in pps
                           for i in range(1, a + 1) for j in range(1, b + 1))
            for i in range(1, a + 1):
                for j in range(1, b + 1):
                    for k in range(c + 1):
                        assert m.prob(i, j, k) == F(freq[i, j, k], n), (dims, i, j, k)
            pos = Counter(xy for pp in pps for xy in ppcore.horizontal_positions(pp))
            t = stats.prob_table(dims, marginals=m)
            assert {xy: p for xy, p in t.p.items() if p} == {xy: F(v, n) for xy, v in pos.items()}, dims
    for dims in [(2, 2, 2), (1, 2, 3), (2, 3, 2), (3, 2, 2)]:
        assert {xy: p for xy, p in stats.prob_table(dims).p.items() if p} == oracles.prob_field(*dims)


def test_criterion_10_sampler():
    draws = 20_000
    p = 1 / 20
    band = 5 * math.sqrt(draws * p * (1 - p))
    hits = Counter(engine.sample_uniform((2, 2, 2), 2024, stream=k) for k in range(draws))
    assert len(hits) == 20
    for pp, v in hits.items():
        assert abs(v - draws * p) <= band, (pp.entries, v)

    def once():
        out = io.StringIO()
        assert main(["sample", "2", "2", "2", "--seed", "2024", "--count", "500"], stdout=out) == 0
        return out.getvalue().encode()

    assert once() == once()
