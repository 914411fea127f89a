"""Irrationality-measure bounds for zeta(3) and zeta(2) from a direction.

The arithmetic side is the step function phi(x) built from the orbit of the
c-matrix; the analytic side is a saddle point of f0.  Both feed

    mu <= (C0 + C1) / (C0 - C2)    whenever C0 > C2.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .directions import Direction32, Direction33
from .exactnum import DEFAULT_DIGITS, digamma
from .forms import ConditionError
from .groups import PI_POSITIONS, CMatrix, Orbit, c_from_direction, direction_from_c, orbit_M

__all__ = [
    "Direction32",
    "Direction33",
    "MeasureReport",
    "arithmetic_constant",
    "StepFunction",
    "inv_square_integral",
    "measure_z2",
    "measure_z3",
    "phi_function",
    "phi_function_z2",
    "phi_function_z3",
    "saddle_z2",
    "saddle_z3",
    "search_directions",
    "stieltjes_dpsi",
]


@dataclass(frozen=True)
class StepFunction:
    """Right-continuous step function on [0, 1), extended with period 1.

    ``values[i]`` holds on ``[breakpoints[i], breakpoints[i+1])``; the first
    breakpoint is always 0.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[int, ...]

    def __call__(self, x) -> int:
        x = Fraction(x)
        x -= math.floor(x)
        lo, hi = 0, len(self.breakpoints)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.breakpoints[mid] <= x:
                lo = mid
            else:
                hi = mid
        return self.values[lo]

    def intervals(self):
        ends = self.breakpoints[1:] + (Fraction(1),)
        return zip(self.breakpoints, ends, self.values)

    @property
    def range(self) -> set[int]:
        return set(self.values)

    def simplified(self) -> "StepFunction":
        bps, vals = [self.breakpoints[0]], [self.values[0]]
        for b, v in zip(self.breakpoints[1:], self.values[1:]):
            if v != vals[-1]:
                bps.append(b)
                vals.append(v)
        return StepFunction(tuple(bps), tuple(vals))


def _pi_matrix(cs: list[CMatrix]) -> np.ndarray:
    pos = PI_POSITIONS[cs[0].kind]
    return np.array([[c.entries[i] for i in pos] for c in cs], dtype=np.int64)


@dataclass
class _OrbitTable:
    """Floor sums of every orbit element at the midpoints of the common grid."""

    breakpoints: list[Fraction]
    ends: list[Fraction]
    num: np.ndarray
    den: np.ndarray
    delta: np.ndarray  # (midpoints, elements): base floors minus element floors
    elements: list[CMatrix]


def _orbit_table(c: CMatrix, orbit: Orbit, extra: set[Fraction] = frozenset()) -> _OrbitTable:
    base = np.array([c.entries[i] for i in PI_POSITIONS[c.kind]], dtype=np.int64)
    others = _pi_matrix(orbit.elements)
    denoms = set(int(x) for x in others.ravel()) | set(int(x) for x in base)
    bps = sorted({Fraction(k, d) for d in denoms if d > 0 for k in range(d)} | set(extra))
    ends = bps[1:] + [Fraction(1)]
    mids = [(a + b) / 2 for a, b in zip(bps, ends)]
    num = np.array([m.numerator for m in mids], dtype=np.int64)
    den = np.array([m.denominator for m in mids], dtype=np.int64)
    base_floor = (np.outer(num, base) // den[:, None]).sum(axis=1)
    floors = ((num[:, None, None] * others[None, :, :]) // den[:, None, None]).sum(axis=2)
    return _OrbitTable(bps, ends, num, den, base_floor[:, None] - floors, orbit.elements)


def phi_function(c: CMatrix, orbit: Orbit | None = None) -> StepFunction:
    """phi(x) = max over c' of sum floor(c x) - sum floor(c' x), Pi positions."""
    orbit = orbit or orbit_M(c)
    tab = _orbit_table(c, orbit)
    vals = tab.delta.max(axis=1)
    return StepFunction(tuple(tab.breakpoints), tuple(int(v) for v in vals)).simplified()


phi_function_z3 = phi_function
phi_function_z2 = phi_function


def stieltjes_dpsi(f: StepFunction, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """Integral of f against d psi over [0, 1]."""
    if f.values[0] != 0:
        raise ValueError("step function is nonzero near 0: the integral diverges")
    with mpmath.workdps(digits):
        total = mpmath.mpf(0)
        for lo, hi, v in f.intervals():
            if v:
                total += v * (digamma(hi, digits) - digamma(lo, digits))
        return +total


def inv_square_integral(f: StepFunction, m3: int, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """Integral of f(x)/x^2 over [0, 1/m3]; exact, returned as mpf."""
    if f.values[0] != 0:
        raise ValueError("step function is nonzero near 0: the integral diverges")
    top = Fraction(1, m3)
    total = Fraction(0)
    for lo, hi, v in f.intervals():
        if lo >= top:
            break
        if v:
            total += v * (1 / lo - 1 / min(hi, top))
    with mpmath.workdps(digits):
        return mpmath.mpf(total.numerator) / total.denominator


# --- saddle points ---------------------------------------------------------


def _poly_from_roots(roots) -> list[int]:
    """Coefficients, highest first, of prod (t - r)."""
    coeffs = [1]
    for r in roots:
        coeffs = [a - r * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


def _saddle_roots(alpha, beta, digits):
    pa, pb = _poly_from_roots(alpha), _poly_from_roots(beta)
    poly = [x - y for x, y in zip(pa, pb)]
    while poly and poly[0] == 0:
        poly.pop(0)
    if len(poly) < 3:
        raise ConditionError("degenerate saddle polynomial", f"coefficients {poly}")
    with mpmath.workdps(digits):
        if len(poly) == 3:
            a, b, c = poly
            disc = b * b - 4 * a * c
            if disc <= 0:
                raise ConditionError("complex saddle points", f"discriminant {disc}")
            s = mpmath.sqrt(disc)
            roots = sorted([(-b - s) / (2 * a), (-b + s) / (2 * a)])
        else:
            roots = sorted(
                mpmath.re(r) for r in mpmath.polyroots(poly, maxsteps=200, extraprec=2 * digits) if abs(mpmath.im(r)) < mpmath.mpf(10) ** (-digits // 2)
            )
    return poly, roots


def _xlogx(x):
    return x * mpmath.log(x) if x else mpmath.mpf(0)


def _f0_z3(d: Direction33, tau):
    al, be = d.alpha, d.beta
    val = sum(a * mpmath.log(abs(a - tau)) for a in al)
    val -= be[0] * mpmath.log(abs(tau - be[0])) if be[0] else 0
    val -= be[1] * mpmath.log(abs(tau - be[1])) if be[1] else 0
    val -= be[2] * mpmath.log(abs(be[2] - tau)) + be[3] * mpmath.log(abs(be[3] - tau))
    val -= _xlogx(al[0] - be[0]) + _xlogx(al[1] - be[1])
    val += _xlogx(be[2] - al[2]) + _xlogx(be[3] - al[3])
    return val


def _f0_z2(d: Direction32, tau):
    al, be = d.alpha, d.beta
    val = sum(a * mpmath.log(abs(a - tau)) for a in al)
    val -= be[0] * mpmath.log(abs(tau - be[0])) if be[0] else 0
    val -= be[1] * mpmath.log(abs(be[1] - tau)) + be[2] * mpmath.log(abs(be[2] - tau))
    val += -_xlogx(al[0] - be[0]) + _xlogx(be[1] - al[1]) + _xlogx(be[2] - al[2])
    return val


def saddle_z3(d: Direction33, digits: int = DEFAULT_DIGITS):
    """(tau0, tau1, C0, C1); real parts of principal logs are log|.|."""
    (a1, _, _, a4), (_, b2, _, _) = d.ordered()
    _, roots = _saddle_roots(d.alpha, d.beta, digits)
    with mpmath.workdps(digits):
        inner = [r for r in roots if b2 < r < a1]
        outer = [r for r in roots if r > a4]
        if not inner or not outer:
            raise ConditionError("saddle points out of range", f"roots {roots}")
        t0, t1 = inner[0], outer[0]
        return t0, t1, -_f0_z3(d, t0), _f0_z3(d, t1)


def saddle_z2(d: Direction32, digits: int = DEFAULT_DIGITS):
    (a1, _, a3), (b1, _, _) = d.ordered()
    _, roots = _saddle_roots(d.alpha, d.beta, digits)
    with mpmath.workdps(digits):
        inner = [r for r in roots if r < b1]
        outer = [r for r in roots if r > a3]
        if not inner or not outer:
            raise ConditionError("saddle points out of range", f"roots {roots}")
        t0, t1 = inner[-1], outer[0]
        return t0, t1, -_f0_z2(d, t0), _f0_z2(d, t1)


# --- reports ---------------------------------------------------------------


@dataclass
class MeasureReport:
    """Constants of one direction.

    ``C2`` uses the per-prime exponent optimized over the whole orbit (see
    ``arithmetic_constant``); ``C2_single`` is the cruder bound
    ``lead(m) - (psi_integral - inv_square)`` that uses the m-values of the
    given labeling only.  They agree whenever that labeling is already optimal.
    """

    direction: object
    m_values: tuple[int, int, int, int]
    tau0: object
    tau1: object
    C0: mpmath.mpf
    C1: mpmath.mpf
    C2: mpmath.mpf
    C2_single: mpmath.mpf
    psi_integral: mpmath.mpf
    inv_square: mpmath.mpf
    phi_range: tuple[int, ...] = ()
    mode: str = "full"
    mu_bound: mpmath.mpf | None = field(init=False)
    verdict: str = field(init=False)

    def __post_init__(self):
        if self.C0 > self.C2:
            self.mu_bound = (self.C0 + self.C1) / (self.C0 - self.C2)
            self.verdict = "measure"
        else:
            self.mu_bound = None
            self.verdict = "no-conclusion"

    def as_dict(self, digits: int = 15) -> dict:
        s = lambda x: mpmath.nstr(x, digits) if x is not None else None
        return {
            "direction": str(self.direction),
            "mode": self.mode,
            "m": list(self.m_values),
            "tau0": s(self.tau0),
            "tau1": s(self.tau1),
            "C0": s(self.C0),
            "C1": s(self.C1),
            "C2": s(self.C2),
            "C2_single_labeling": s(self.C2_single),
            "psi_integral": s(self.psi_integral),
            "inv_square_integral": s(self.inv_square),
            "phi_range": list(self.phi_range),
            "mu_bound": s(self.mu_bound),
            "verdict": self.verdict,
        }


def _frac_mpf(q: Fraction) -> mpmath.mpf:
    return mpmath.mpf(q.numerator) / q.denominator


def arithmetic_constant(c: CMatrix, orbit: Orbit, digits: int = DEFAULT_DIGITS):
    """Growth rate of the best common denominator of H(cn), per n.

    For a prime p > sqrt(m0 n) and every c' in the orbit, H(cn) is
    Pi(cn)/Pi(c'n) times H(c'n), whose denominator has p-exponent
    e(c', n/p) = w [p <= m1' n] + [p <= m2' n] (w = 2 for zeta(3), 1 for
    zeta(2)).  So the exponent for H(cn) is E(x) = min over c' of
    e(c', x) - delta(c', x) at x = n/p, and by the prime number theorem the
    logarithm of the product over p grows like n times the integral of
    E(x)/x^2 over x > 0.  Beyond x = 1 every e equals its full weight, which
    turns the tail into the periodic phi integrals.

    Returns (constant, phi step function, psi integral).
    """
    w = 2 if c.kind == "z3" else 1
    ms = np.array([direction_from_c(e).m_values() for e in orbit.elements], dtype=np.int64)
    extra = {Fraction(1, int(m)) for m in set(ms[:, 1]) | set(ms[:, 2])}
    tab = _orbit_table(c, orbit, extra)
    num, den = tab.num[:, None], tab.den[:, None]
    e = w * (num * ms[None, :, 1] >= den) + (num * ms[None, :, 2] >= den)
    E = (e - tab.delta).min(axis=1)
    phi_vals = tab.delta.max(axis=1)
    if E[0] != 0 or phi_vals[0] != 0:
        raise ValueError("denominator exponent is nonzero near 0")
    with mpmath.workdps(digits):
        body = Fraction(0)
        inv_phi = Fraction(0)
        I1 = mpmath.mpf(0)
        for lo, hi, ev, pv in zip(tab.breakpoints[1:], tab.ends[1:], E[1:], phi_vals[1:]):
            span = 1 / lo - 1 / hi
            body += int(ev) * span
            if pv:
                inv_phi += int(pv) * span
                I1 += int(pv) * (digamma(hi, digits) - digamma(lo, digits))
        const = _frac_mpf(body) + (w + 1) - (I1 - _frac_mpf(inv_phi))
        phi = StepFunction(tuple(tab.breakpoints), tuple(int(v) for v in phi_vals)).simplified()
        return +const, phi, +I1


def _measure(d, saddle, lead, mode: str, digits: int) -> MeasureReport:
    c = c_from_direction(d)
    if not c.admissible:
        raise ConditionError("non-admissible matrix", "some entry vanishes")
    m = d.m_values()
    orbit = orbit_M(c, mode)
    with mpmath.workdps(digits):
        C2, phi, I1 = arithmetic_constant(c, orbit, digits)
        I2 = inv_square_integral(phi, m[3], digits)
        t0, t1, C0, C1 = saddle(d, digits)
        single = lead(m) - (I1 - I2)
        return MeasureReport(d, m, t0, t1, C0, C1, C2, single, I1, I2, tuple(sorted(phi.range)), mode)


def measure_z3(d: Direction33, mode: str = "full", digits: int = DEFAULT_DIGITS) -> MeasureReport:
    """Bound for mu(zeta(3)); mode 'hata' uses only the parameter-trivial orbit."""
    if mode == "full" and not d.balanced:
        raise ConditionError("sum condition violated", "the full group needs sum(alpha) == sum(beta)")
    return _measure(d, saddle_z3, lambda m: 2 * m[1] + m[2], mode, digits)


def measure_z2(d: Direction32, digits: int = DEFAULT_DIGITS) -> MeasureReport:
    return _measure(d, saddle_z2, lambda m: m[1] + m[2], "full", digits)


# --- search ----------------------------------------------------------------


def _directions_z3(bound: int, balanced: bool):
    for be2 in range(0, bound):
        for al in itertools.combinations_with_replacement(range(be2 + 1, bound), 4):
            sa = sum(al)
            if sa > bound:
                continue
            lo = al[3] + 1
            for b3 in range(lo, bound - be2 - lo + 1):
                rest = bound - be2 - b3  # beta4 <= rest
                if balanced:
                    b4 = sa - be2 - b3
                    if b3 <= b4 <= rest:
                        yield Direction33(al, (0, be2, b3, b4))
                else:
                    for b4 in range(max(b3, sa - be2 - b3), rest + 1):
                        yield Direction33(al, (0, be2, b3, b4))


def _directions_z2(bound: int):
    for al in itertools.combinations_with_replacement(range(1, bound), 3):
        lo = al[2] + 1
        for b2 in range(lo, bound - lo + 1):
            for b3 in range(max(b2, sum(al) - b2 + 1), bound - b2 + 1):
                yield Direction32(al, (0, b2, b3))


def _canonical_members(dirs: list, kind: str, mode: str) -> list:
    """Smallest normalized member of each direction's class, vectorized."""
    if not dirs:
        return []
    if mode == "hata":
        return [d.normalized() for d in dirs]
    from .groups import _collection_perms

    perms = np.array(_collection_perms(kind, mode), dtype=np.int64)
    entries = np.array([c_from_direction(d).entries for d in dirs], dtype=np.int64)
    imgs = entries[:, perms]  # (N, collections, size)
    if kind == "z3":
        al = imgs[:, :, [0, 4, 8, 12]]
        b2 = al[:, :, 0] - imgs[:, :, 1]
        b3 = al[:, :, 0] + imgs[:, :, 2]
        b4 = al[:, :, 0] + imgs[:, :, 3]
        low = np.minimum(0, b2)
        al = np.sort(al - low[..., None], axis=2)
        be = np.stack([np.zeros_like(b2), np.abs(b2), np.minimum(b3, b4) - low, np.maximum(b3, b4) - low], axis=2)
    else:
        al = imgs[:, :, [1, 4, 7]]
        b2 = al[:, :, 0] + imgs[:, :, 2]
        b3 = al[:, :, 0] + imgs[:, :, 3]
        al = np.sort(al, axis=2)
        be = np.stack([np.zeros_like(b2), np.minimum(b2, b3), np.maximum(b2, b3)], axis=2)
    keys = np.concatenate([al, be], axis=2)
    out = []
    for row in keys:
        best = min(map(tuple, row.tolist()))
        n = len(best) // 2
        out.append((Direction33 if kind == "z3" else Direction32)(best[:n], best[n:]))
    return out


def _evaluate(args):
    kind, d, mode, digits = args
    try:
        if kind == "z3":
            return measure_z3(d, mode, digits)
        return measure_z2(d, digits)
    except ConditionError:
        return None


def search_directions(kind: str, sum_bound: int, orbit_mode: str = "full", digits: int = 20, workers: int = 1) -> list[MeasureReport]:
    """Rank group classes of directions by their bound for mu.

    z3 directions satisfy sum(alpha) == sum(beta) <= bound ('full') or
    sum(alpha) <= sum(beta) <= bound ('hata'); z2 directions have
    sum(beta) <= bound.  All have beta1 = 0 and sorted parts.  Classes are
    represented by their lexicographically smallest normalized member.
    """
    if kind == "z3":
        pool = _directions_z3(sum_bound, orbit_mode == "full")
    elif kind == "z2":
        pool = _directions_z2(sum_bound)
        orbit_mode = "full"
    else:
        raise ValueError(f"unknown kind {kind!r}")
    classes: set = set()
    batch: list = []
    for d in itertools.chain(pool, [None]):
        if d is not None:
            batch.append(d)
        if len(batch) >= 4096 or (d is None and batch):
            classes.update(_canonical_members(batch, kind, orbit_mode))
            batch = []
    classes = sorted(classes, key=lambda x: x.key())
    jobs = [(kind, d, orbit_mode, digits) for d in classes]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_evaluate, jobs, chunksize=16))
    else:
        results = [_evaluate(j) for j in jobs]
    ranked = [r for r in results if r is not None and r.mu_bound is not None and r.mu_bound > 0]
    ranked.sort(key=lambda r: (r.mu_bound, r.direction.key()))
    return ranked
