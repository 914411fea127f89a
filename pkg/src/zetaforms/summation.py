"""Sums of rational functions over the integers, done two independent ways.

``form_from_sum`` expands at every pole and turns the principal parts into
exact zeta coefficients and harmonic partial sums.

``direct_sum`` never looks at principal parts: it adds the terms exactly up
to a cut-off and estimates the tail with the Euler-Maclaurin formula (or the
Euler-Boole formula for alternating sums), built from Taylor coefficients
at the cut-off.  It is the numeric oracle used to check every form.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from .bricks import BrickProduct
from .exactnum import bernoulli, harmonic, to_mpf
from .linearform import LinearForm


def principal_parts(product: BrickProduct) -> dict[int, list[Fraction]]:
    """k -> [c_1, ..., c_m] with R = sum_k sum_s c_s / (t+k)^s."""
    parts = {}
    for k in product.poles():
        m = product.pole_order(k)
        exp = product.expand(k, m)
        parts[k] = [exp.coefficient(-s) for s in range(1, m + 1)]
    return parts


def form_from_sum(product: BrickProduct, d: int, t0: int, parts=None) -> LinearForm:
    """Exact value of sum_{t >= t0} R^(d)(t) / d! as a linear form.

    R must vanish at infinity to order >= 2 (d = 0) or >= 1 (d >= 1) and
    have all its poles strictly left of t0.
    """
    if product.degree > -1 or (d == 0 and product.degree > -2):
        raise ValueError(f"series diverges: degree {product.degree} at infinity")
    if parts is None:
        parts = principal_parts(product)
    coeffs: dict[int, Fraction] = {}
    const = Fraction(0)
    for k, cs in parts.items():
        if k + t0 - 1 < 0:
            raise ValueError(f"pole at t = {-k} lies inside the summation range t >= {t0}")
        for s, c in enumerate(cs, start=1):
            if c == 0:
                continue
            # (1/d!) (d/dt)^d (t+k)^-s = (-1)^d binom(s+d-1, d) (t+k)^-(s+d)
            e = s + d
            w = c * (-1) ** d * math.comb(s + d - 1, d)
            coeffs[e] = coeffs.get(e, Fraction(0)) + w
            const -= w * harmonic(k + t0 - 1, e)
    if coeffs.pop(1, 0) != 0:
        raise ValueError("harmonic divergence: residues do not cancel")
    coeffs[0] = const
    return LinearForm(coeffs)


# --- direct summation ------------------------------------------------------


def _taylor_of_derivative(product: BrickProduct, t: int, d: int, length: int) -> list[Fraction]:
    """Taylor coefficients at t of f = R^(d)/d!."""
    exp = product.expand(-t, d + length)
    return [math.comb(d + i, d) * exp.coefficient(d + i) for i in range(length)]


def _em_weights(m: int) -> list[Fraction]:
    return [bernoulli(2 * i) / (2 * i) for i in range(1, m + 1)]


def direct_sum(product: BrickProduct, d: int, t0: int, digits: int = 30, cutoff: int | None = None, em_terms: int = 30):
    """Numeric sum_{t >= t0} R^(d)(t)/d! by partial sums plus an EM tail.

    Returns (value, tail_error_estimate) as mpf numbers.
    """
    poles = product.poles()
    reach = max([t0] + [-k for k in poles])
    T = cutoff if cutoff is not None else max(t0, reach) + 60
    head = Fraction(0)
    for t in range(t0, T):
        head += product.expand(-t, d + 1).coefficient(d)
    with mpmath.workdps(digits + 20):
        taylor = _taylor_of_derivative(product, T, d, 2 * em_terms + 1)
        f = [to_mpf(c) for c in taylor]
        if d >= 1:
            integral = -to_mpf(product.expand(-T, d).coefficient(d - 1)) / d
        else:
            integral = mpmath.quad(product.evaluate_mp, [T, 2 * T, mpmath.inf])
        tail = integral + f[0] / 2
        last = mpmath.mpf(0)
        for i, w in enumerate(_em_weights(em_terms), start=1):
            # B_2i/(2i)! f^(2i-1)(T) = B_2i/(2i) * Taylor coefficient 2i-1
            last = to_mpf(w) * f[2 * i - 1]
            tail -= last
        value = to_mpf(head) + tail
        return +value, abs(last)


def _boole_weights(m: int) -> list[Fraction]:
    """n! times the Taylor coefficients of 1/(e^z + 1), i.e. the weights of f^(n)/n!."""
    denom = [Fraction(1, math.factorial(i)) for i in range(m)]
    denom[0] += 1
    inv = [Fraction(0)] * m
    inv[0] = 1 / denom[0]
    for i in range(1, m):
        inv[i] = -sum(denom[j] * inv[i - j] for j in range(1, i + 1)) / denom[0]
    return [c * math.factorial(i) for i, c in enumerate(inv)]


def direct_sum_alternating(product: BrickProduct, t0: int, digits: int = 30, cutoff: int | None = None, terms: int = 60):
    """Numeric sum_{t >= t0} (-1)^t R(t) with an Euler-Boole tail.

    sum_{j >= 0} (-1)^j f(T + j) = sum_i w_i f_i(T), where w_i / i! are the
    Taylor coefficients of 1/(e^z + 1) and f_i those of f at T.
    """
    poles = product.poles()
    reach = max([t0] + [-k for k in poles])
    T = cutoff if cutoff is not None else max(t0, reach) + 60
    head = Fraction(0)
    for t in range(t0, T):
        head += (-1) ** t * product.expand(-t, 1).coefficient(0)
    weights = _boole_weights(terms)
    taylor = _taylor_of_derivative(product, T, 0, terms)
    with mpmath.workdps(digits + 20):
        tail = mpmath.mpf(0)
        last = mpmath.mpf(0)
        for w, c in zip(weights, taylor):
            last = to_mpf(w * c)
            tail += last
        value = to_mpf(head) + (-1) ** T * tail
        return +value, abs(last)
