"""Exact integers, rationals and integer q-polynomials.

Python ints are already unbounded, and :class:`fractions.Fraction` keeps
values in lowest terms with a positive denominator, so both are used
directly. Only the q-polynomial type is implemented here.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class QPoly:
    """Polynomial in q with integer coefficients, ``coeffs[k]`` is the q^k term.

    Instances are immutable and hashable. The zero polynomial has an empty
    coefficient tuple and degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "QPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [coeff])

    @classmethod
    def one_minus_q_pow(cls, k: int) -> "QPoly":
        """``1 - q**k``; zero when k == 0."""
        if k < 0:
            raise ValueError("negative exponent")
        if k == 0:
            return cls()
        return cls([1] + [0] * (k - 1) + [-1])

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mon = "q" if k == 1 else f"q^{k}"
                terms.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly([c * other for c in self.coeffs])
        return qpoly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = QPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def derivative_at_one(self) -> int:
        return sum(k * c for k, c in enumerate(self.coeffs))

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc


def qpoly_mul(p: QPoly, r: QPoly) -> QPoly:
    if p.is_zero() or r.is_zero():
        return QPoly()
    out = [0] * (len(p.coeffs) + len(r.coeffs) - 1)
    for i, x in enumerate(p.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(r.coeffs):
            out[i + j] += x * y
    return QPoly(out)


def qpoly_divmod(p: QPoly, r: QPoly) -> tuple[QPoly, QPoly]:
    """Long division over the integers.

    The divisor's leading coefficient must divide every intermediate leading
    term; for the monic-up-to-sign divisors used here that always holds.
    """
    if r.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    lead = r.coeffs[-1]
    dr = len(r.coeffs) - 1
    if len(rem) - 1 < dr:
        return QPoly(), p
    quot = [0] * (len(rem) - dr)
    for k in range(len(rem) - 1, dr - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        if c % lead:
            raise NotDivisible(f"leading coefficient {lead} does not divide {c}")
        f = c // lead
        quot[k - dr] = f
        for j, y in enumerate(r.coeffs):
            rem[k - dr + j] -= f * y
    return QPoly(quot), QPoly(rem)


def qpoly_div_exact(p: QPoly, r: QPoly) -> QPoly:
    quot, rem = qpoly_divmod(p, r)
    if not rem.is_zero():
        raise NotDivisible(f"{p} is not divisible by {r} (remainder {rem})")
    return quot


def qpoly_eval_at_one(p: QPoly) -> int:
    return p.eval_at_one()


def qpoly_derivative_at_one(p: QPoly) -> int:
    return p.derivative_at_one()


def mean_exponent(p: QPoly) -> Fraction:
    """p'(1) / p(1): the mean exponent when p is a generating function."""
    total = p.eval_at_one()
    if total == 0:
        raise ZeroDivisionError("polynomial vanishes at q = 1")
    return Fraction(p.derivative_at_one(), total)


def fmt(value: Fraction | int) -> str:
    """Exact ``num/den`` string; integers print without a denominator."""
    return str(Fraction(value))


def parse(text: str) -> Fraction:
    return Fraction(text)
