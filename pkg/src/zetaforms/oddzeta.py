"""Very-well-poised linear forms in 1 and odd zeta values.

For odd r, q with q >= r + 4 and parameters h = (h0; h1, ..., hq) the
rational function

    R~(t) = (h0 + 2t) Gamma(h0+t)^r prod Gamma(hj+t)
            / (Gamma(1+t)^r prod Gamma(1+h0-hj+t))

is odd under t -> -t - h0, so (1/(r-1)!) sum_t R~^(r-1)(t) only involves
zeta values of odd weight r+2, ..., q-2.  This module builds these forms
exactly, tracks their denominators (the Phi factor that cancels from them),
computes the asymptotic constants that decide irrationality, and checks the
sharper denominator conjecture with one D factor fewer.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .bricks import Brick, BrickProduct
from .exactnum import DEFAULT_DIGITS, harmonic, lcm_upto, primes_upto
from .forms import ConditionError
from .linearform import LinearForm
from .measures import StepFunction, inv_square_integral, stieltjes_dpsi
from .summation import direct_sum, principal_parts

__all__ = [
    "WellPoisedParams",
    "ContiguousSet",
    "DirectionEta",
    "OddFormData",
    "OddMeasureReport",
    "ConjectureResult",
    "odd_rational_function",
    "coefficient_table",
    "linear_form_odd",
    "numeric_check_odd",
    "F_kn",
    "F_kn_params",
    "asymptotic_slope",
    "phi_arith",
    "check_lemma19",
    "check_odd_denominators",
    "phi0_xy",
    "phi_x",
    "saddle_odd",
    "measure_odd",
    "conjecture_check",
    "conjecture_sweep",
    "sweep_params",
    "nu_from_phi0",
    "denominator_multiplier",
    "check_vanishing",
    "saddle_polynomial",
    "f0_odd",
    "h_permutation_invariance",
    "normalization_factor",
    "THEOREM3_ETA",
]


@dataclass(frozen=True)
class WellPoisedParams:
    """h0 and h1..hq with odd r, q.

    ``ordered=True`` (the default) also demands h1 <= ... <= hq < h0/2,
    which the arithmetic normalization needs.  Permuted copies used for the
    symmetry checks pass ``ordered=False`` and only keep every hj < h0/2.
    """

    r: int
    q: int
    h0: int
    h: tuple[int, ...]
    ordered: bool = True

    def __post_init__(self):
        hs = tuple(int(x) for x in self.h)
        object.__setattr__(self, "h", hs)
        r, q, h0 = self.r, self.q, self.h0
        if r < 1 or r % 2 == 0 or q % 2 == 0:
            raise ConditionError("parity violated", "r and q must be odd positive integers")
        if q < r + 4:
            raise ConditionError("q >= r+4 violated", f"q={q}, r={r}")
        if len(hs) != q:
            raise ConditionError("shape", f"need {q} parameters h1..hq, got {len(hs)}")
        if h0 < 1 or min(hs) < 1:
            raise ConditionError("positivity violated", "all h must be positive integers")
        if 2 * sum(hs) > h0 * (q - r):
            raise ConditionError("decay condition violated", f"need h1+...+hq <= h0*(q-r)/2, got {sum(hs)} > {h0 * (q - r) / 2}")
        if 2 * max(hs) >= h0:
            raise ConditionError("ordering violated", "need every hj < h0/2")
        if self.ordered and list(hs) != sorted(hs):
            raise ConditionError("ordering violated", "need h1 <= h2 <= ... <= hq")

    def permuted(self, perm) -> "WellPoisedParams":
        return WellPoisedParams(self.r, self.q, self.h0, tuple(self.h[i] for i in perm), ordered=False)

    def m_values(self) -> tuple[int, ...]:
        """m1 >= ... >= m_{q-r} bounding the denominators (needs ordering)."""
        r, q, h0, h = self.r, self.q, self.h0, self.h
        m0 = max(h[r - 1] - 1, h0 - 2 * h[r])
        return tuple(max(m0, h0 - h[0] - h[r + j - 1]) for j in range(1, q - r + 1))

    @property
    def contiguous(self) -> "ContiguousSet":
        return ContiguousSet.from_params(self)

    def __str__(self):
        return f"r={self.r}, q={self.q}, h=({self.h0}; {','.join(map(str, self.h))})"


@dataclass(frozen=True)
class ContiguousSet:
    """e0k = hk - 1 and e_jk = h0 - hj - hk (j < k)."""

    e0: tuple[int, ...]
    e: dict

    @classmethod
    def from_params(cls, p: WellPoisedParams) -> "ContiguousSet":
        h, q = p.h, p.q
        e0 = tuple(x - 1 for x in h)
        e = {(j + 1, k + 1): p.h0 - h[j] - h[k] for j in range(q) for k in range(j + 1, q)}
        return cls(e0, e)

    def values(self) -> list[int]:
        return list(self.e0) + list(self.e.values())

    def successive_maxima(self, count: int) -> tuple[int, ...]:
        """The ``count`` largest entries of the multiset, descending."""
        vals = sorted(self.values(), reverse=True)
        if count > len(vals):
            raise ValueError(f"only {len(vals)} entries available")
        return tuple(vals[:count])


@dataclass(frozen=True)
class DirectionEta:
    """h0 = eta0 n + 2 and hj = etaj n + 1."""

    eta0: int
    eta: tuple[int, ...]
    r: int = 3

    def __post_init__(self):
        object.__setattr__(self, "eta", tuple(int(x) for x in self.eta))
        q = len(self.eta)
        if self.r % 2 == 0 or q % 2 == 0 or q < self.r + 4:
            raise ConditionError("q >= r+4 violated", f"need odd r, odd q >= r+4; got r={self.r}, q={q}")
        if list(self.eta) != sorted(self.eta) or 2 * self.eta[-1] >= self.eta0 or self.eta[0] < 1:
            raise ConditionError("ordering violated", "need 1 <= eta1 <= ... <= etaq < eta0/2")
        if 2 * sum(self.eta) > self.eta0 * (q - self.r):
            raise ConditionError("decay condition violated", "need eta1+...+etaq <= eta0*(q-r)/2")

    @property
    def q(self) -> int:
        return len(self.eta)

    def params(self, n: int) -> WellPoisedParams:
        return WellPoisedParams(self.r, self.q, self.eta0 * n + 2, tuple(x * n + 1 for x in self.eta))

    def m_values(self) -> tuple[int, ...]:
        r, e0, e = self.r, self.eta0, self.eta
        base = max(e[r - 1], e0 - 2 * e[r])
        return tuple(max(base, e0 - e[0] - e[r + j - 1]) for j in range(1, self.q - r + 1))

    def __str__(self):
        return f"r={self.r}, eta=({self.eta0}; {','.join(map(str, self.eta))})"


THEOREM3_ETA = DirectionEta(91, (27, 27, 27) + tuple(25 + j for j in range(4, 14)), r=3)


# --- the rational function -------------------------------------------------


def odd_rational_function(p: WellPoisedParams, normalization: str = "ordered") -> BrickProduct:
    """R(t) as (h0 + 2t) times a product of bricks.

    ``ordered``: the r bricks R(hj, 1), the r bricks R(h0, 1+h0-hj) for
    j <= r, and R(hj, 1+h0-hj) for j > r.  Needs h sorted.

    ``contiguous``: the pairing a = (h1..hq, h0 x r), b = (1 x r,
    1+h0-h1, ..., 1+h0-hq), valid for any order of h1..hq.

    Both equal R~(t) times a factorial constant (``normalization_factor``).
    """
    r, q, h0, h = p.r, p.q, p.h0, p.h
    if normalization == "ordered":
        if not p.ordered:
            raise ConditionError("ordering violated", "the ordered normalization needs h1 <= ... <= hq")
        bricks = [Brick(h[j], 1) for j in range(r)]
        bricks += [Brick(h0, 1 + h0 - h[j]) for j in range(r)]
        bricks += [Brick(h[j], 1 + h0 - h[j]) for j in range(r, q)]
    elif normalization == "contiguous":
        a = list(h) + [h0] * r
        b = [1] * r + [1 + h0 - x for x in h]
        bricks = [Brick(x, y) for x, y in zip(a, b)]
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    return BrickProduct(tuple(bricks), prefactor_h0=h0)


def normalization_factor(p: WellPoisedParams, normalization: str = "ordered") -> Fraction:
    """F(h) / F~(h): the factorial ratio carried by the bricks."""
    r, q, h0, h = p.r, p.q, p.h0, p.h
    f = math.factorial
    if normalization == "ordered":
        return Fraction(math.prod(f(h0 - 2 * x) for x in h[r:]), math.prod(f(x - 1) ** 2 for x in h[:r]))
    top = math.prod(f(h0 - h[j - r - 1] - h[j - 1]) for j in range(r + 1, q + 1))
    bottom = math.prod(f(x - 1) for x in h[:r]) * math.prod(f(x - 1) for x in h[q - r:])
    return Fraction(top, bottom)


# --- exact coefficients ----------------------------------------------------


@dataclass
class OddFormData:
    """Principal parts B[(j, k)] and the assembled coefficients A."""

    params: WellPoisedParams
    B: dict
    A: dict
    A0: Fraction
    t0: int

    def form(self) -> LinearForm:
        coeffs = {s: a for s, a in self.A.items() if a}
        coeffs[0] = -self.A0
        return LinearForm(coeffs)


def coefficient_table(p: WellPoisedParams, normalization: str = "ordered") -> OddFormData:
    """B_jk = coefficient of (t+k)^-(j-r) in R, then A_{j-1} and A0.

    Summing (1/(r-1)!) R^(r-1) over t >= t0 turns B_jk / (t+k)^(j-r) into
    binom(j-2, r-1) B_jk (zeta(j-1) - H_{k+t0-1}(j-1)), r being odd.
    """
    r, q = p.r, p.q
    R = odd_rational_function(p, normalization)
    t0 = 1 - min(p.h)
    parts = principal_parts(R)
    B = {}
    for k, cs in parts.items():
        if len(cs) > q - r:
            raise ArithmeticError(f"pole of order {len(cs)} > q-r at t={-k}")
        for s, c in enumerate(cs, start=1):
            B[(s + r, k)] = c
    A = {}
    A0 = Fraction(0)
    for (j, k), c in B.items():
        w = math.comb(j - 2, r - 1) * c
        A[j - 1] = A.get(j - 1, Fraction(0)) + w
        A0 += w * harmonic(k + t0 - 1, j - 1)
    for j in range(r + 1, q + 1):
        A.setdefault(j - 1, Fraction(0))
    return OddFormData(p, B, A, A0, t0)


def check_vanishing(data: OddFormData) -> None:
    """A_r = 0, A_{j-1} = 0 for odd j, and B_jk = (-1)^j B_{j,h0-k}."""
    p = data.params
    bad = [s for s, a in data.A.items() if a and (s == p.r or s % 2 == 0)]
    if bad:
        raise ArithmeticError(f"coefficients at zeta({bad}) do not vanish")
    for (j, k), c in data.B.items():
        mirror = data.B.get((j, p.h0 - k), Fraction(0))
        if c != (-1) ** j * mirror:
            raise ArithmeticError(f"antisymmetry fails at j={j}, k={k}")


def linear_form_odd(p: WellPoisedParams, normalization: str = "ordered") -> LinearForm:
    """F(h) = sum_j A_{j-1} zeta(j-1) - A0, with the vanishing verified."""
    data = coefficient_table(p, normalization)
    check_vanishing(data)
    return data.form()


def numeric_check_odd(p: WellPoisedParams, digits: int = 30, normalization: str = "ordered"):
    """(value of the exact form, direct summation of the series)."""
    form = linear_form_odd(p, normalization)
    R = odd_rational_function(p, normalization)
    extra = form.magnitude_digits()
    direct, _ = direct_sum(R, p.r - 1, 1 - min(p.h), digits + extra)
    return form.evaluate(digits + extra), direct


# --- the F_{k,n} family ------------------------------------------------------


def F_kn_params(k: int, n: int) -> WellPoisedParams:
    if k < 3 or k % 2 == 0:
        raise ConditionError("k must be odd and at least 3", f"got k={k}")
    if n < 1:
        raise ConditionError("n must be positive", f"got n={n}")
    return WellPoisedParams(1, k + 2, 3 * n + 2, (n + 1,) * (k + 2))


def F_kn(k: int, n: int) -> LinearForm:
    """2 n!^(k-1) sum_{t>=1} (t + n/2) (t-1)..(t-n) (t+n+1)..(t+2n) / (t..(t+n))^(k+1)."""
    return linear_form_odd(F_kn_params(k, n))


def _log_term(k: int, n: int, t: int):
    lg = mpmath.loggamma
    return (
        mpmath.log(t + mpmath.mpf(n) / 2)
        + lg(t) - lg(t - n)
        + lg(t + 2 * n + 1) - lg(t + n + 1)
        - (k + 1) * (lg(t + n + 1) - lg(t))
    )


def asymptotic_slope(k: int, n: int, digits: int = 30) -> mpmath.mpf:
    """log|F_{k,n}| / n from the positive series (terms with t <= n vanish)."""
    F_kn_params(k, n)
    with mpmath.workdps(digits):
        logs = []
        t = n + 1
        best = None
        while True:
            v = _log_term(k, n, t)
            logs.append(v)
            best = v if best is None or v > best else best
            # terms are unimodal in t; stop once far below the peak
            if v < best - 2.3 * (digits + 5) and v < logs[-2 if len(logs) > 1 else -1]:
                break
            t += 1
        total = best + mpmath.log(mpmath.fsum(mpmath.exp(x - best) for x in logs))
        total += mpmath.log(2) + (k - 1) * mpmath.loggamma(n + 1)
        return total / n


# --- arithmetic ------------------------------------------------------------


def _nu_kp(p: WellPoisedParams, k: int, prime: int) -> int:
    r, h0, h = p.r, p.h0, p.h
    fl = lambda x: x // prime
    v = 0
    for hj in h[:r]:
        v += fl(k - 1) + fl(h0 - k - 1) - fl(k - hj) - fl(h0 - hj - k) - 2 * fl(hj - 1)
    for hj in h[r:]:
        v += fl(h0 - 2 * hj) - fl(k - hj) - fl(h0 - hj - k)
    return v


def phi_arith(p: WellPoisedParams) -> tuple[dict, int]:
    """({prime: nu_p}, Phi) over primes sqrt(h0) < p <= m_{q-r}."""
    ms = p.m_values()
    lo_k, hi_k = p.h[p.r], p.h0 - p.h[p.r]
    table = {}
    Phi = 1
    for prime in primes_upto(ms[-1]):
        if prime * prime <= p.h0:
            continue
        nu = min(_nu_kp(p, k, prime) for k in range(lo_k, hi_k + 1))
        table[prime] = nu
        Phi *= prime**nu
    return table, Phi


def denominator_multiplier(p: WellPoisedParams) -> Fraction:
    """D_{m1}^r D_{m2} ... D_{m_{q-r}} / Phi."""
    ms = p.m_values()
    D = lcm_upto(ms[0]) ** p.r * math.prod(lcm_upto(m) for m in ms[1:])
    return Fraction(D, phi_arith(p)[1])


def check_odd_denominators(p: WellPoisedParams, form: LinearForm | None = None) -> bool:
    form = form if form is not None else linear_form_odd(p)
    return form.is_integral(denominator_multiplier(p))


check_lemma19 = check_odd_denominators


# --- the step functions phi0 and phi ---------------------------------------


def phi0_xy(eta: DirectionEta, x, y) -> int:
    x, y = Fraction(x), Fraction(y)
    fl = math.floor
    e0, r = eta.eta0, eta.r
    v = 0
    for j, ej in enumerate(eta.eta):
        v -= fl(y - ej * x) + fl((e0 - ej) * x - y)
        if j < r:
            v += fl(y) + fl(e0 * x - y) - 2 * fl(ej * x)
        else:
            v += fl((e0 - 2 * ej) * x)
    return v


def _phi_at(eta: DirectionEta, x: Fraction) -> int:
    """min over y of phi0(x, y), via breakpoints and the gaps between them."""
    P, Q = x.numerator, x.denominator
    e0, r = eta.eta0, eta.r
    ej = np.array(eta.eta, dtype=np.int64)
    coef = np.unique(np.concatenate([[0, e0], ej, e0 - ej]))
    # everything in units of 1/(2Q): y = Y / (2Q)
    M = 2 * Q
    bps = np.unique((2 * coef * P) % M)
    gaps = (bps + np.append(bps[1:], bps[0] + M)) // 2
    Y = np.concatenate([bps, gaps])[:, None]
    X = 2 * P
    terms = -((Y - ej * X) // M) - (((e0 - ej) * X - Y) // M)
    head = (Y // M) + ((e0 * X - Y) // M) - 2 * ((ej * X) // M)
    tail = ((e0 - 2 * ej) * X) // M
    vals = terms.sum(axis=1) + head[:, :r].sum(axis=1) + int(tail[r:].sum())
    return int(vals.min())


def _x_breakpoints(eta: DirectionEta) -> list[Fraction]:
    coef = {0, eta.eta0} | set(eta.eta) | {eta.eta0 - e for e in eta.eta}
    dens = {abs(a - b) for a in coef for b in coef} | set(eta.eta) | {eta.eta0 - 2 * e for e in eta.eta}
    dens.discard(0)
    return sorted({Fraction(k, d) for d in dens for k in range(d)})


def phi_x(eta: DirectionEta) -> StepFunction:
    """phi(x) = min_y phi0(x, y) as a right-continuous step function.

    Between consecutive x-breakpoints the y-breakpoints keep their cyclic
    order and no floor in x jumps, so one midpoint per interval suffices.
    """
    bps = _x_breakpoints(eta)
    ends = bps[1:] + [Fraction(1)]
    vals = tuple(_phi_at(eta, (a + b) / 2) for a, b in zip(bps, ends))
    return StepFunction(tuple(bps), vals).simplified()


def nu_from_phi0(eta: DirectionEta, n: int, prime: int) -> int:
    """min over the k-range of phi0(n/p, (k-1)/p); equals nu_p of the h at n."""
    x = Fraction(n, prime)
    lo, hi = eta.eta[eta.r] * n, (eta.eta0 - eta.eta[eta.r]) * n
    return min(phi0_xy(eta, x, Fraction(k1, prime)) for k1 in range(lo, hi + 1))


# --- saddle point ----------------------------------------------------------


def _poly(roots) -> list[int]:
    coeffs = [1]
    for z in roots:
        coeffs = [a - z * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


def saddle_polynomial(eta: DirectionEta) -> list[int]:
    """(t-eta0)^r prod (t-etaj) - t^r prod (t-eta0+etaj), highest first."""
    r, e0 = eta.r, eta.eta0
    left = _poly([e0] * r + list(eta.eta))
    right = _poly([0] * r + [e0 - e for e in eta.eta])
    poly = [a - b for a, b in zip(left, right)]
    while poly and poly[0] == 0:
        poly.pop(0)
    return poly


def f0_odd(eta: DirectionEta, tau):
    r, e0, e = eta.r, eta.eta0, eta.eta
    log = mpmath.log
    val = r * e0 * log(e0 - tau)
    for ej in e:
        val += ej * log(tau - ej) - (e0 - ej) * log(tau - e0 + ej)
    val -= 2 * sum(ej * log(ej) for ej in e[:r])
    val += sum((e0 - 2 * ej) * log(e0 - 2 * ej) for ej in e[r:])
    return val


@dataclass
class SaddleResult:
    tau0: mpmath.mpc
    C0: mpmath.mpf
    roots: list
    re_below_eta0: bool
    im_f0_off_pi_z: bool
    off_cut: bool
    proven: bool

    @property
    def hypotheses_hold(self) -> bool:
        return self.re_below_eta0 and self.im_f0_off_pi_z and self.off_cut


def saddle_odd(eta: DirectionEta, digits: int = DEFAULT_DIGITS, tol: float = 1e-6) -> SaddleResult:
    """Root with Im > 0 and maximal real part; C0 = -Re f0(tau0).

    Companion-matrix eigenvalues give starting points, Newton steps on the
    exact integer polynomial polish them.  ``proven`` is False for r != 3,
    where the asymptotic statement is only heuristic.
    """
    poly = saddle_polynomial(eta)
    if len(poly) < 2:
        raise ConditionError("degenerate saddle polynomial", f"coefficients {poly}")
    start = np.roots(np.array(poly, dtype=float))
    with mpmath.workdps(digits + 10):
        dpoly = [c * (len(poly) - 1 - i) for i, c in enumerate(poly[:-1])]
        roots = []
        for z0 in start:
            z = mpmath.mpc(z0.real, z0.imag)
            for _ in range(100):
                step = mpmath.polyval(poly, z) / mpmath.polyval(dpoly, z)
                z -= step
                if abs(step) < mpmath.mpf(10) ** (-digits - 5) * max(1, abs(z)):
                    break
            roots.append(z)
        upper = [z for z in roots if mpmath.im(z) > mpmath.mpf(10) ** (-digits // 2)]
        if not upper:
            raise ConditionError("no complex saddle point", "all roots of the saddle polynomial are real")
        tau0 = max(upper, key=lambda z: mpmath.re(z))
        f = f0_odd(eta, tau0)
        im_ratio = mpmath.im(f) / mpmath.pi
        off_pi = abs(im_ratio - mpmath.nint(im_ratio)) * mpmath.pi > tol
        return SaddleResult(
            tau0=+tau0,
            C0=-mpmath.re(f),
            roots=roots,
            re_below_eta0=mpmath.re(tau0) < eta.eta0,
            im_f0_off_pi_z=bool(off_pi),
            off_cut=mpmath.im(tau0) != 0,
            proven=eta.r == 3,
        )


# --- the measure -----------------------------------------------------------


@dataclass
class OddMeasureReport:
    direction: DirectionEta
    m_values: tuple[int, ...]
    tau0: mpmath.mpc
    C0: mpmath.mpf
    C2: mpmath.mpf
    lead: int
    psi_integral: mpmath.mpf
    inv_square: mpmath.mpf
    phi_range: tuple[int, ...]
    saddle: SaddleResult
    verdict: str = field(init=False)
    zetas: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        r, q = self.direction.r, self.direction.q
        self.zetas = tuple(range(r + 2, q - 1, 2))
        if self.C0 > self.C2 and self.saddle.hypotheses_hold:
            self.verdict = "irrational-among"
        else:
            self.verdict = "no-conclusion"

    @property
    def proven(self) -> bool:
        return self.saddle.proven

    def as_dict(self, digits: int = 15) -> dict:
        s = lambda x: mpmath.nstr(x, digits)
        return {
            "direction": str(self.direction),
            "m": list(self.m_values),
            "lead": self.lead,
            "tau0": {"re": s(mpmath.re(self.tau0)), "im": s(mpmath.im(self.tau0))},
            "C0": s(self.C0),
            "C2": s(self.C2),
            "psi_integral": s(self.psi_integral),
            "inv_square_integral": s(self.inv_square),
            "phi_range": list(self.phi_range),
            "hypotheses": {
                "re_tau0_below_eta0": bool(self.saddle.re_below_eta0),
                "im_f0_off_pi_Z": bool(self.saddle.im_f0_off_pi_z),
                "off_cut": bool(self.saddle.off_cut),
            },
            "asymptotics": "proven" if self.proven else "heuristic (r != 3)",
            "verdict": self.verdict,
            "zetas": [f"zeta({k})" for k in self.zetas],
        }


def measure_odd(eta: DirectionEta, digits: int = DEFAULT_DIGITS) -> OddMeasureReport:
    """C0 from the saddle point against C2 from the denominators and Phi."""
    ms = eta.m_values()
    lead = eta.r * ms[0] + sum(ms[1:])
    phi = phi_x(eta)
    with mpmath.workdps(digits):
        I1 = stieltjes_dpsi(phi, digits)
        I2 = inv_square_integral(phi, ms[-1], digits)
        sad = saddle_odd(eta, digits)
        C2 = lead - (I1 - I2)
        return OddMeasureReport(eta, ms, sad.tau0, sad.C0, C2, lead, I1, I2, tuple(sorted(phi.range)), sad)


# --- the conjecture with one D factor fewer --------------------------------


@dataclass
class ConjectureResult:
    params: WellPoisedParams
    passed: bool
    multiplier: int
    maxima: tuple[int, ...]
    prime: int | None = None


def _smallest_prime_factor(n: int) -> int:
    for p in primes_upto(math.isqrt(n) + 1):
        if n % p == 0:
            return p
    return n


def conjecture_check(p: WellPoisedParams) -> ConjectureResult:
    """D_{m1}^r D_{m2} ... D_{m_{q-r-1}} F(h) integral, F in the contiguous normalization.

    m1 >= m2 >= ... are the largest entries of the contiguous set e.
    """
    ms = p.contiguous.successive_maxima(p.q - p.r - 1)
    mult = lcm_upto(ms[0]) ** p.r * math.prod(lcm_upto(m) for m in ms[1:])
    form = linear_form_odd(p, "contiguous")
    den = 1
    for _, c in form.items():
        den = math.lcm(den, (c * mult).denominator)
    if den == 1:
        return ConjectureResult(p, True, mult, ms)
    return ConjectureResult(p, False, mult, ms, _smallest_prime_factor(den))


def sweep_params(r: int, q: int, h0_max: int, h0_min: int = 1):
    """Every ordered h with h0 <= h0_max."""

    def rec(prefix, lo, hmax, budget):
        if len(prefix) == q:
            yield tuple(prefix)
            return
        left = q - len(prefix)
        for x in range(lo, hmax + 1):
            if x * left > budget:
                break
            yield from rec(prefix + [x], x, hmax, budget - x)

    for h0 in range(max(h0_min, 3), h0_max + 1):
        hmax = (h0 - 1) // 2
        budget = h0 * (q - r) // 2
        for hs in rec([], 1, hmax, budget):
            yield WellPoisedParams(r, q, h0, hs)


def conjecture_sweep(r: int = 1, q: int = 5, h0_max: int = 14, stop_at_first: bool = True):
    """(number checked, list of failures)."""
    checked, failures = 0, []
    for p in sweep_params(r, q, h0_max):
        res = conjecture_check(p)
        checked += 1
        if not res.passed:
            failures.append(res)
            if stop_at_first:
                break
    return checked, failures


def h_permutation_invariance(p: WellPoisedParams, trials: int = 10, seed: int = 0, perms=None) -> bool:
    """F~(h) = F(h) / normalization is unchanged by permuting h1..hq."""

    def tilde(pp):
        return linear_form_odd(pp, "contiguous").scaled(1 / normalization_factor(pp, "contiguous"))

    base = tilde(p)
    if perms is None:
        rng = random.Random(seed)
        perms = [rng.sample(range(p.q), p.q) for _ in range(trials)]
    return all(tilde(p.permuted(perm)) == base for perm in perms)
