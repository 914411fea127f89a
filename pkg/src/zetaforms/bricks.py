"""Elementary rational bricks and exact local expansions of their products.

A brick R(a, b; t) is

* ``(t+b)(t+b+1)...(t+a-1) / (a-b)!`` when a >= b (an integer-valued
  polynomial), and
* ``(b-a-1)! / ((t+a)(t+a+1)...(t+b-1))`` when a < b.

Every rational function used for constructing linear forms is a
:class:`BrickProduct`: a constant times a product of bricks, optionally times
the linear factor ``(h0 + 2t)``.  Derivatives at integers are read off
truncated Laurent expansions (:class:`LocalExpansion`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .exactnum import lcm_upto, ord_p


class PoleError(ZeroDivisionError):
    """Evaluation at a pole; ``order`` is the pole multiplicity."""

    def __init__(self, t, order: int):
        super().__init__(f"pole of order {order} at t = {t}")
        self.t = t
        self.order = order


@dataclass(frozen=True)
class Brick:
    a: int
    b: int

    @property
    def is_polynomial(self) -> bool:
        return self.a >= self.b

    @property
    def degree(self) -> int:
        return self.a - self.b

    @property
    def constant(self) -> int:
        """The factorial in front of the falling product."""
        if self.is_polynomial:
            return math.factorial(self.a - self.b)
        return math.factorial(self.b - self.a - 1)

    def linear_factors(self) -> range:
        """Shifts l of the factors (t + l) in the numerator or denominator."""
        if self.is_polynomial:
            return range(self.b, self.a)
        return range(self.a, self.b)

    def __call__(self, t) -> Fraction:
        return brick_eval(self, t)


def brick_eval(brick: Brick, t) -> Fraction:
    t = Fraction(t)
    prod = Fraction(1)
    for l in brick.linear_factors():
        prod *= t + l
    if brick.is_polynomial:
        return prod / brick.constant
    if prod == 0:
        raise PoleError(t, 1)
    return brick.constant / prod


@dataclass(frozen=True)
class LocalExpansion:
    """Truncated Laurent series at t = -center.

    ``coefficients[i]`` multiplies ``(t + center) ** (i - pole_order)``.
    """

    center: int
    pole_order: int
    coefficients: tuple[Fraction, ...]

    def coefficient(self, exponent: int) -> Fraction:
        i = exponent + self.pole_order
        if i < 0:
            return Fraction(0)
        if i >= len(self.coefficients):
            raise IndexError(f"exponent {exponent} beyond truncation")
        return self.coefficients[i]

    @property
    def top_exponent(self) -> int:
        """Largest exponent that is still known exactly."""
        return len(self.coefficients) - 1 - self.pole_order

    def derivative(self, j: int) -> Fraction:
        """j-th derivative at t = -center (only for pole_order 0)."""
        if self.pole_order:
            raise PoleError(-self.center, self.pole_order)
        return self.coefficient(j) * math.factorial(j)

    def __mul__(self, other: "LocalExpansion") -> "LocalExpansion":
        if self.center != other.center:
            raise ValueError("expansions at different centers")
        lo = -self.pole_order - other.pole_order
        hi = min(self.top_exponent - other.pole_order, other.top_exponent - self.pole_order)
        coeffs = []
        for e in range(lo, hi + 1):
            s = Fraction(0)
            for i, c in enumerate(self.coefficients):
                e1 = i - self.pole_order
                e2 = e - e1
                if -other.pole_order <= e2 <= other.top_exponent:
                    s += c * other.coefficients[e2 + other.pole_order]
            coeffs.append(s)
        return _normalize(self.center, lo, coeffs)


def _normalize(center: int, lowest: int, coeffs: list) -> LocalExpansion:
    """Build an expansion whose series starts at exponent ``lowest``."""
    if lowest >= 0:
        coeffs = [Fraction(0)] * lowest + list(coeffs)
        return LocalExpansion(center, 0, tuple(coeffs))
    # strip leading zeros of a principal part so pole_order is exact
    while lowest < 0 and coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
        lowest += 1
    if lowest >= 0:
        return _normalize(center, lowest, coeffs)
    return LocalExpansion(center, -lowest, tuple(coeffs))


@dataclass(frozen=True)
class BrickProduct:
    """constant * (h0 + 2t)^[prefactor] * product of bricks."""

    bricks: tuple[Brick, ...]
    prefactor_h0: int | None = None
    constant: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "bricks", tuple(self.bricks))
        object.__setattr__(self, "constant", Fraction(self.constant))

    @property
    def degree(self) -> int:
        """Degree at infinity (numerator degree minus denominator degree)."""
        return sum(b.degree for b in self.bricks) + (1 if self.prefactor_h0 is not None else 0)

    def scaled(self, c) -> "BrickProduct":
        return BrickProduct(self.bricks, self.prefactor_h0, self.constant * Fraction(c))

    def _split(self):
        num, den = [], []
        const = self.constant
        for br in self.bricks:
            if br.is_polynomial:
                num.extend(br.linear_factors())
                const /= br.constant
            else:
                den.extend(br.linear_factors())
                const *= br.constant
        return num, den, const

    def pole_order(self, k: int) -> int:
        """Multiplicity of t = -k as a pole (negative for a zero)."""
        num, den, _ = self._split()
        z = num.count(k) + (1 if self.prefactor_h0 is not None and self.prefactor_h0 == 2 * k else 0)
        return den.count(k) - z

    def poles(self) -> list[int]:
        """All k with a genuine pole at t = -k, ascending."""
        cand = set()
        for br in self.bricks:
            if not br.is_polynomial:
                cand.update(br.linear_factors())
        return sorted(k for k in cand if self.pole_order(k) > 0)

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        num, den, const = self._split()
        top = const
        for l in num:
            top *= t + l
        if self.prefactor_h0 is not None:
            top *= self.prefactor_h0 + 2 * t
        bottom = Fraction(1)
        for l in den:
            bottom *= t + l
        if bottom == 0:
            order = self.pole_order(-t) if t.denominator == 1 else 1
            if order > 0:
                raise PoleError(t, order)
            return self.expand(int(-t), 1).coefficient(0)
        return top / bottom

    def evaluate_mp(self, t) -> mpmath.mpf:
        """Floating evaluation at a real (non-pole) point."""
        num, den, const = self._split()
        val = mpmath.mpf(const.numerator) / const.denominator
        for l in num:
            val *= t + l
        if self.prefactor_h0 is not None:
            val *= self.prefactor_h0 + 2 * t
        for l in den:
            val /= t + l
        return val

    def expand(self, k: int, order: int) -> LocalExpansion:
        return local_expansion(self, k, order)


def _truncated_linear_product(shifts: Iterable[int], length: int, seed: list[int] | None = None) -> list[int]:
    """Coefficients in u of prod (c + u) over nonzero c, truncated."""
    poly = seed[:length] if seed is not None else [1]
    poly = poly + [0] * (length - len(poly))
    for c in shifts:
        for i in range(length - 1, 0, -1):
            poly[i] = c * poly[i] + poly[i - 1]
        poly[0] *= c
    return poly


def _series_quotient(P: Sequence[int], Q: Sequence[int], length: int) -> list[Fraction]:
    """First ``length`` coefficients of P/Q with Q[0] != 0.

    Works with the scaled integers G_i = g_i * Q0^(i+1) to stay in ``int``.
    """
    q0 = Q[0]
    G: list[int] = []
    pw = [1]
    for _ in range(length):
        pw.append(pw[-1] * q0)
    for i in range(length):
        acc = P[i] * pw[i]
        for j in range(1, i + 1):
            if Q[j]:
                acc -= Q[j] * G[i - j] * pw[j - 1]
        G.append(acc)
    return [Fraction(G[i], pw[i + 1]) for i in range(length)]


def local_expansion(product: BrickProduct, k: int, order: int) -> LocalExpansion:
    """Laurent expansion of ``product`` at t = -k with ``order`` coefficients.

    The coefficient list begins at exponent -pole_order when there is a pole,
    and at exponent 0 otherwise (zeros show up as leading zero coefficients).
    """
    num, den, const = product._split()
    # in u = t + k each factor (t + l) becomes (u + (l - k))
    num_shifts = [l - k for l in num]
    den_shifts = [l - k for l in den]
    zeros = num_shifts.count(0)
    poles = den_shifts.count(0)
    seed = None
    if product.prefactor_h0 is not None:
        c = product.prefactor_h0 - 2 * k
        if c == 0:
            zeros += 1
            const *= 2
        else:
            seed = [c, 2]
    net = poles - zeros
    lowest = -net
    if net > 0 and order < net:
        raise ValueError(f"order {order} below pole order {net} at k={k}")
    # number of series terms needed from the regular part
    length = order if net > 0 else max(order - zeros + poles, 0)
    if length == 0:
        return LocalExpansion(k, max(net, 0), tuple([Fraction(0)] * order))
    P = _truncated_linear_product((c for c in num_shifts if c), length, seed)
    Q = _truncated_linear_product((c for c in den_shifts if c), length)
    series = [const * g for g in _series_quotient(P, Q, length)]
    if net > 0:
        return LocalExpansion(k, net, tuple(series))
    return LocalExpansion(k, 0, tuple([Fraction(0)] * lowest + series)[:order])


def gamma_ratio(numer: Sequence[int], denom: Sequence[int], prefactor_h0: int | None = None, constant=1) -> BrickProduct:
    """prod Gamma(t + a_i) / prod Gamma(t + b_i) as a brick product.

    Numerator and denominator are paired in the given order.
    """
    if len(numer) != len(denom):
        raise ValueError("gamma_ratio needs equally many numerator and denominator parameters")
    const = Fraction(constant)
    bricks = []
    for a, b in zip(numer, denom):
        br = Brick(a, b)
        bricks.append(br)
        if br.is_polynomial:
            const *= br.constant
        else:
            const /= br.constant
    return BrickProduct(tuple(bricks), prefactor_h0, const)


# --- valuation and integrality checks for single bricks -----------------


def valuation_bound_interior(a: int, b: int, a0: int, b0: int, k: int, p: int, j: int) -> int:
    """Lower bound for the p-adic order of a brick derivative at t = -k.

    For a polynomial brick (b0 <= b < a <= a0, b0 <= k < a0) the bound is for
    ord_p R^(j)(-k); for a pole brick (a0 <= a < b <= b0, a0 <= k < b0) it is
    for ord_p (R(t)(t+k))^(j) at t = -k.
    """
    if j < 0:
        raise ValueError("derivative order must be nonnegative")
    if b < a:
        if not (b0 <= b < a <= a0 and b0 <= k < a0):
            raise ValueError("need b0 <= b < a <= a0 and b0 <= k < a0")
        if p * p <= a0 - b0 - 1:
            raise ValueError("need p > sqrt(a0 - b0 - 1)")
        return -j + (k - b) // p - (k - a) // p - (a - b) // p
    if a < b:
        if not (a0 <= a < b <= b0 and a0 <= k < b0):
            raise ValueError("need a0 <= a < b <= b0 and a0 <= k < b0")
        if p * p <= b0 - a0 - 1:
            raise ValueError("need p > sqrt(b0 - a0 - 1)")
        return -j + (b - a - 1) // p - (k - a) // p - (b - 1 - k) // p
    raise ValueError("a == b gives the constant brick; no bound")


def brick_derivatives(a: int, b: int, k: int, jmax: int, cleared: bool = False) -> list[Fraction]:
    """Taylor coefficients c_0..c_jmax of R(a,b;t) (times (t+k) if cleared) at t = -k."""
    prod = BrickProduct((Brick(a, b),))
    exp = prod.expand(k, jmax + 2)
    shift = 1 if cleared else 0
    return [exp.coefficient(j - shift) for j in range(jmax + 1)]


def polynomial_brick_integral(a: int, b: int, k: int, j: int) -> bool:
    """D_{a-b}^j * R^(j)(-k) / j! is an integer for a polynomial brick."""
    if a < b:
        raise ValueError("polynomial brick needs a >= b")
    c = brick_derivatives(a, b, k, j)[j]
    D = lcm_upto(a - b) if a > b else 1
    return (c * D**j).denominator == 1


def pole_brick_integral(a: int, b: int, a0: int, b0: int, k: int, j: int) -> bool:
    """D_{b0-a0-1}^j * (R(t)(t+k))^(j) / j! at t=-k is an integer."""
    if not (a0 <= a < b <= b0 and a0 <= k <= b0 - 1):
        raise ValueError("need a0 <= a < b <= b0 and a0 <= k <= b0 - 1")
    c = brick_derivatives(a, b, k, j, cleared=True)[j]
    D = lcm_upto(b0 - a0 - 1) if b0 - a0 > 1 else 1
    return (c * D**j).denominator == 1


def derivative_valuation(a: int, b: int, k: int, p: int, j: int) -> int | None:
    """ord_p of R^(j)(-k) (polynomial) or (R(t)(t+k))^(j)(-k) (pole brick).

    Returns ``None`` when the quantity is zero.
    """
    cleared = a < b
    c = brick_derivatives(a, b, k, j, cleared=cleared)[j] * math.factorial(j)
    if c == 0:
        return None
    return ord_p(c, p)
