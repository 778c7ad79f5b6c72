"""Brute-force reference implementations.

Nothing here imports the package; each oracle filters the full Cartesian
product of candidate fillings, so it shares no code path with the DP or the
recursive generators it checks.
"""

import itertools
from fractions import Fraction


def plane_partitions(a, b, c):
    out = []
    for flat in itertools.product(range(c + 1), repeat=a * b):
        m = [flat[i * b:(i + 1) * b] for i in range(a)]
        if all(m[i][j] >= m[i][j + 1] for i in range(a) for j in range(b - 1)) and all(
            m[i][j] >= m[i + 1][j] for i in range(a - 1) for j in range(b)
        ):
            out.append(tuple(tuple(r) for r in m))
    return out


def macmahon(a, b, c):
    num = den = 1
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    return Fraction(num, den)


def positions(m, a):
    """Lowest vertices of horizontal lozenges: cell (i,j) -> (j-i+a, e+a-i)."""
    return [(j - i + a, m[i - 1][j - 1] + a - i)
            for i in range(1, len(m) + 1) for j in range(1, len(m[0]) + 1)]


def prob_field(a, b, c):
    pps = plane_partitions(a, b, c)
    p = {}
    for m in pps:
        for xy in positions(m, a):
            p[xy] = p.get(xy, 0) + 1
    return {xy: Fraction(v, len(pps)) for xy, v in p.items()}


def moments(a, b, c):
    p = prob_field(a, b, c)
    sx, ybar = Fraction(a + b, 2), Fraction(a + c - 1, 2)
    hor = sum(v * (x - sx) ** 2 for (x, y), v in p.items())
    ver = sum(v * (2 * (y - ybar) - (x - sx)) ** 2 for (x, y), v in p.items())
    return hor, ver


def ssyt(shape, max_entry):
    cells = [(r, col) for r, p in enumerate(shape) for col in range(p)]
    out = []
    for vals in itertools.product(range(1, max_entry + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all(t[(r, col)] <= t[(r, col + 1)] for r, col in cells if (r, col + 1) in t) and all(
            t[(r, col)] < t[(r + 1, col)] for r, col in cells if (r + 1, col) in t
        ):
            out.append(t)
    return out


def ssyt_gf(shape, max_entry):
    gf = {}
    for t in ssyt(shape, max_entry):
        s = sum(t.values())
        gf[s] = gf.get(s, 0) + 1
    return gf


def nk_arrays(a, n, c, k):
    cells = [(i, j) for i in range(1, a + 1) for j in range(1, i + n + 1)]
    free = [(i, j) for i, j in cells if j != i + n]
    out = []
    for vals in itertools.product(range(c + 1), repeat=len(free)):
        t = dict(zip(free, vals))
        for i in range(1, a + 1):
            t[(i, i + n)] = k[i - 1]
        if all(t[(i, j)] >= t[(i, j + 1)] for i, j in cells if (i, j + 1) in t) and all(
            t[(i, j)] >= t[(i + 1, j)] for i, j in cells if (i + 1, j) in t
        ):
            out.append(t)
    return out
