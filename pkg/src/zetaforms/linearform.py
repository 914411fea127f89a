"""Exact linear forms  c_0 + sum_s c_s * zeta(s)."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import mpmath

from .exactnum import DEFAULT_DIGITS, GUARD_DIGITS, to_mpf, zeta_int


class LinearForm:
    """Rational coefficients keyed by s; key 0 is the constant term."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for s, v in (coeffs or {}).items():
            v = Fraction(v)
            if s == 1 or s < 0:
                raise ValueError(f"zeta({s}) cannot appear in a linear form")
            if v:
                c[int(s)] = v
        self._c = c

    def __getitem__(self, s: int) -> Fraction:
        return self._c.get(s, Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"LinearForm({self.pretty()})"

    def items(self):
        return sorted(self._c.items(), key=lambda kv: -kv[0])

    @property
    def weights(self) -> list[int]:
        """The s > 1 with nonzero zeta(s) coefficient, descending."""
        return sorted((s for s in self._c if s > 1), reverse=True)

    @property
    def constant(self) -> Fraction:
        return self[0]

    def scaled(self, factor) -> "LinearForm":
        f = Fraction(factor)
        return LinearForm({s: v * f for s, v in self._c.items()})

    def __add__(self, other: "LinearForm") -> "LinearForm":
        keys = set(self._c) | set(other._c)
        return LinearForm({s: self[s] + other[s] for s in keys})

    def __neg__(self) -> "LinearForm":
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def denominator(self) -> int:
        return lcm(1, *(v.denominator for v in self._c.values()))

    def is_integral(self, multiplier=1) -> bool:
        m = Fraction(multiplier)
        return all((v * m).denominator == 1 for v in self._c.values())

    def magnitude_digits(self) -> int:
        """Rough decimal size of the largest coefficient."""
        big = max((abs(v) for v in self._c.values()), default=Fraction(0))
        if big == 0:
            return 0
        return max(0, len(str(big.numerator)) - len(str(big.denominator)) + 1)

    def evaluate(self, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
        """Numeric value; precision is raised to absorb coefficient cancellation."""
        work = digits + self.magnitude_digits() + GUARD_DIGITS
        with mpmath.workdps(work):
            total = mpmath.mpf(0)
            for s, v in self._c.items():
                term = to_mpf(v)
                if s:
                    term *= zeta_int(s, work)
                total += term
            return +total

    def pretty(self) -> str:
        parts = []
        for s, v in self.items():
            parts.append(f"{v}" if s == 0 else f"{v}*zeta({s})")
        return " + ".join(parts) if parts else "0"

    def as_strings(self) -> dict[str, str]:
        """{"zeta5": "18", ..., "const": "-98"}, exact rationals as strings."""
        out = {}
        for s, v in self.items():
            out["const" if s == 0 else f"zeta{s}"] = str(v)
        if "const" not in out:
            out["const"] = "0"
        return out
