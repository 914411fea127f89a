"""Linear forms in 1, zeta(3) and in 1, zeta(2) built from integer parameters.

The zeta(3) construction takes eight integers a1..a4, b1..b4 and the
rational function

    R(t) = R(a1,b1;t) R(a2,b2;t) R(a3,b3;t) R(a4,b4;t),

whose derivative summed over the integers gives ``2A zeta(3) - B``.  The
zeta(2) construction does the same with six parameters and without the
derivative.  Both identities of well-poised type (the 7F6 at 1 and the 6F5 at
-1) are checked by direct summation of both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .bricks import Brick, BrickProduct, gamma_ratio
from .exactnum import DEFAULT_DIGITS, lcm_upto
from .linearform import LinearForm
from .summation import direct_sum, direct_sum_alternating, form_from_sum, principal_parts

__all__ = [
    "ConditionError",
    "ParamSet33",
    "ParamSet32",
    "HParams6",
    "LinearForm",
    "IntegralityReport",
    "partial_fractions_z3",
    "linear_form_z3",
    "check_integrality_z3",
    "partial_fractions_z2",
    "linear_form_z2",
    "check_integrality_z2",
    "normalized_form_z3",
    "h_from_ab",
    "ab_from_h",
    "apery_params",
    "apery_form",
    "ball_product",
    "ball_form",
    "verify_bailey",
    "verify_whipple",
    "numeric_check_z3",
    "numeric_check_z2",
]


class ConditionError(ValueError):
    """A parameter set violates one of the standing conditions."""

    def __init__(self, condition: str, detail: str = ""):
        msg = condition + (f": {detail}" if detail else "")
        super().__init__(msg)
        self.condition = condition


def _D(n: int) -> int:
    return lcm_upto(n) if n >= 1 else 1


@dataclass(frozen=True)
class ParamSet33:
    a: tuple[int, int, int, int]
    b: tuple[int, int, int, int]

    def __post_init__(self):
        a, b = tuple(map(int, self.a)), tuple(map(int, self.b))
        if len(a) != 4 or len(b) != 4:
            raise ConditionError("shape", "need four a's and four b's")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not (max(b[0], b[1]) <= min(a) and max(a) < min(b[2], b[3])):
            raise ConditionError("ordering violated", "need {b1,b2} <= {a1..a4} < {b3,b4}")
        if sum(a) > sum(b) - 2:
            raise ConditionError("decay violated", "need a1+a2+a3+a4 <= b1+b2+b3+b4-2")

    @property
    def balanced(self) -> bool:
        return sum(self.a) == sum(self.b) - 2

    def ordered(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(a*, b*): a sorted, b1* <= b2*, b3* <= b4*."""
        b = self.b
        return tuple(sorted(self.a)), tuple(sorted(b[:2]) + sorted(b[2:]))

    def shifted(self, s: int) -> "ParamSet33":
        return ParamSet33(tuple(x + s for x in self.a), tuple(x + s for x in self.b))

    def normalized(self) -> "ParamSet33":
        """Shift so that b1 = 1."""
        return self.shifted(1 - self.b[0])

    def rational_function(self) -> BrickProduct:
        return BrickProduct(tuple(Brick(x, y) for x, y in zip(self.a, self.b)))

    def gamma_function(self) -> BrickProduct:
        """prod Gamma(t+a_j) / prod Gamma(t+b_j), no factorial normalization."""
        return gamma_ratio(self.a, self.b)

    def sign(self) -> int:
        return -1 if (self.b[0] + self.b[1]) % 2 else 1


@dataclass(frozen=True)
class ParamSet32:
    a: tuple[int, int, int]
    b: tuple[int, int, int]

    def __post_init__(self):
        a, b = tuple(map(int, self.a)), tuple(map(int, self.b))
        if len(a) != 3 or len(b) != 3:
            raise ConditionError("shape", "need three a's and three b's")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not (b[0] <= min(a) and max(a) < min(b[1], b[2])):
            raise ConditionError("ordering violated", "need b1 <= {a1,a2,a3} < {b2,b3}")
        if sum(a) > sum(b) - 2:
            raise ConditionError("decay violated", "need a1+a2+a3 <= b1+b2+b3-2")

    def ordered(self):
        return tuple(sorted(self.a)), (self.b[0],) + tuple(sorted(self.b[1:]))

    def shifted(self, s: int) -> "ParamSet32":
        return ParamSet32(tuple(x + s for x in self.a), tuple(x + s for x in self.b))

    def normalized(self) -> "ParamSet32":
        return self.shifted(1 - self.b[0])

    def rational_function(self) -> BrickProduct:
        return BrickProduct(tuple(Brick(x, y) for x, y in zip(self.a, self.b)))


@dataclass(frozen=True)
class HParams6:
    h0: int
    h: tuple[int, int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(map(int, self.h)))
        if len(self.h) != 5:
            raise ConditionError("shape", "need h1..h5")
        if any(1 + self.h0 <= 2 * x for x in self.h):
            raise ConditionError("well-poised convergence violated", "need 1 + h0 > 2 h_j")


@dataclass
class IntegralityReport:
    passed: bool
    multiplier: int
    denominator_A: int
    denominator_B: int
    detail: str = ""


# --- zeta(3) ---------------------------------------------------------------


def partial_fractions_z3(p: ParamSet33):
    """({k: A_k}, {k: B_k}) with R = sum A_k/(t+k)^2 + sum B_k/(t+k)."""
    parts = principal_parts(p.rational_function())
    A = {k: (cs[1] if len(cs) > 1 else Fraction(0)) for k, cs in parts.items() if len(cs) > 1}
    B = {k: cs[0] for k, cs in parts.items()}
    if any(len(cs) > 2 for cs in parts.values()):
        raise ConditionError("ordering violated", "pole of order above two")
    return A, B


def linear_form_z3(p: ParamSet33) -> LinearForm:
    """G = -(-1)^(b1+b2) sum_{t >= t0} R'(t) as 2A zeta(3) - B."""
    a_star, _ = p.ordered()
    form = form_from_sum(p.rational_function(), 1, 1 - a_star[0])
    return form.scaled(-p.sign())


def _a_b_of_z3(form: LinearForm) -> tuple[Fraction, Fraction]:
    return form[3] / 2, -form[0]


def check_integrality_z3(p: ParamSet33, form: LinearForm | None = None) -> IntegralityReport:
    """A integral and D^2_{b4*-a1*-1} D_{max(...)} B integral."""
    if form is None:
        form = linear_form_z3(p)
    A, B = _a_b_of_z3(form)
    (a1s, a2s, a3s, a4s), (b1s, b2s, b3s, b4s) = p.ordered()
    a, b = p.a, p.b
    mmax = max(a[0] - b[0], a[1] - b[1], b4s - a[2] - 1, b4s - a[3] - 1, b3s - a1s - 1)
    mult = _D(b4s - a1s - 1) ** 2 * _D(mmax)
    ok = A.denominator == 1 and (mult * B).denominator == 1
    return IntegralityReport(ok, mult, A.denominator, B.denominator)


def normalized_form_z3(p: ParamSet33) -> LinearForm:
    """G~ = (a1-b1)!(a2-b2)! / ((b3-a3-1)!(b4-a4-1)!) * G."""
    a, b = p.a, p.b
    f = Fraction(
        math.factorial(a[0] - b[0]) * math.factorial(a[1] - b[1]),
        math.factorial(b[2] - a[2] - 1) * math.factorial(b[3] - a[3] - 1),
    )
    return linear_form_z3(p).scaled(f)


def numeric_check_z3(p: ParamSet33, digits: int = 30):
    """(form value, direct-sum value) for the zeta(3) construction."""
    form = linear_form_z3(p)
    a_star, b_star = p.ordered()
    t0 = 1 - b_star[1]
    direct, _ = direct_sum(p.rational_function(), 1, t0, digits + form.magnitude_digits())
    return form.evaluate(digits), -p.sign() * direct


def apery_params(n: int) -> ParamSet33:
    return ParamSet33((n + 1,) * 4, (1, 1, 2 * n + 2, 2 * n + 2))


def apery_form(n: int) -> LinearForm:
    return linear_form_z3(apery_params(n))


def ball_product(n: int) -> BrickProduct:
    """n!^2 (n + 2t) (t-1)..(t-n) (t+n+1)..(t+2n) / (t(t+1)..(t+n))^4."""
    bricks = (Brick(0, -n), Brick(2 * n + 1, n + 1)) + (Brick(0, n + 1),) * 4
    # the bricks carry n! * n! / n!^4 relative to the bare products
    return BrickProduct(bricks, prefactor_h0=n, constant=Fraction(1))


def ball_form(n: int) -> LinearForm:
    """The well-poised zeta(3) form summed over t >= 1."""
    return form_from_sum(ball_product(n), 0, 1)


# --- zeta(2) ---------------------------------------------------------------


def partial_fractions_z2(p: ParamSet32):
    parts = principal_parts(p.rational_function())
    A = {k: cs[1] for k, cs in parts.items() if len(cs) > 1}
    B = {k: cs[0] for k, cs in parts.items()}
    return A, B


def linear_form_z2(p: ParamSet32) -> LinearForm:
    """G = sum_{t >= t0} R(t) as A zeta(2) - B."""
    a_star, _ = p.ordered()
    return form_from_sum(p.rational_function(), 0, 1 - a_star[0])


def check_integrality_z2(p: ParamSet32, form: LinearForm | None = None) -> IntegralityReport:
    """A integral and D_{b3*-a1*-1} D_{max(...)} B integral."""
    if form is None:
        form = linear_form_z2(p)
    A, B = form[2], -form[0]
    (a1s, a2s, a3s), (b1s, b2s, b3s) = p.ordered()
    a, b = p.a, p.b
    mmax = max(a[0] - b[0], b3s - a[1] - 1, b3s - a[2] - 1, b2s - a1s - 1)
    mult = _D(b3s - a1s - 1) * _D(mmax)
    ok = A.denominator == 1 and (mult * B).denominator == 1
    return IntegralityReport(ok, mult, A.denominator, B.denominator)


def numeric_check_z2(p: ParamSet32, digits: int = 30):
    form = linear_form_z2(p)
    t0 = 1 - p.b[0]
    direct, _ = direct_sum(p.rational_function(), 0, t0, digits + form.magnitude_digits())
    return form.evaluate(digits), direct


# --- parameter maps --------------------------------------------------------


def h_from_ab(p: ParamSet33) -> HParams6:
    if not p.balanced:
        raise ConditionError("balance violated", "need a1+a2+a3+a4 = b1+b2+b3+b4-2")
    a, b = p.a, p.b
    return HParams6(
        b[2] + b[3] - b[0] - a[0],
        (1 - b[0] + a[1], 1 - b[0] + a[2], 1 - b[0] + a[3], b[3] - a[0], b[2] - a[0]),
    )


def ab_from_h(h: HParams6) -> ParamSet33:
    h0 = h.h0
    h1, h2, h3, h4, h5 = h.h
    return ParamSet33(
        (1 + h0 - h4 - h5, h1, h2, h3),
        (1, h1 + h2 + h3 - h0, 1 + h0 - h4, 1 + h0 - h5),
    )


def well_poised_product(h0: int, hs) -> BrickProduct:
    """(h0 + 2t) Gamma(h0+t) prod Gamma(h_j+t) / (Gamma(1+t) prod Gamma(1+h0-h_j+t))."""
    numer = [h0] + list(hs)
    denom = [1] + [1 + h0 - x for x in hs]
    return gamma_ratio(numer, denom, prefactor_h0=h0)


def verify_bailey(p: ParamSet33, digits: int = 30) -> mpmath.mpf:
    """Relative residual between the two sides of the 7F6 identity.

    Left: G~ / (prod (a_j - b1)! prod (a_j - b2)!), with G~ summed directly.
    Right: F~(h) / (prod (h_j - 1)! (1 + 2h0 - sum h)!), summing the 7F6 terms.
    """
    h = h_from_ab(p)
    q = p.normalized()
    a, b = q.a, q.b
    with mpmath.workdps(digits + 20):
        # G~ = -(-1)^(b1+b2) sum R~'(t), R~ the bare Gamma ratio
        g_tilde, _ = direct_sum(q.gamma_function(), 1, 1 - min(a), digits + 10)
        g_tilde = -q.sign() * g_tilde
        lhs_den = math.prod(math.factorial(x - b[0]) for x in a) * math.prod(math.factorial(x - b[1]) for x in a)
        lhs = g_tilde / lhs_den
        f_tilde, _ = direct_sum(well_poised_product(h.h0, h.h), 0, 0, digits + 10)
        g = 1 + 2 * h.h0 - sum(h.h)
        rhs_den = math.prod(math.factorial(x - 1) for x in h.h) * math.factorial(g)
        rhs = f_tilde / rhs_den
        return abs(lhs - rhs) / max(abs(lhs), abs(rhs))


def verify_whipple(p: ParamSet32, digits: int = 30) -> mpmath.mpf:
    """Relative residual between the two sides of the 3F2 / 6F5 identity.

    Left: G~ / (Gamma(a1)Gamma(a2)Gamma(a3)Gamma(b2+b3-a1-a2-a3)).
    Right: F~(h) / (Gamma(h1)...Gamma(h4)) with the alternating 6F5 at -1.
    """
    q = p.normalized()
    a, b = q.a, q.b
    c00 = b[1] + b[2] - sum(a)
    if c00 < 1:
        raise ConditionError("decay violated", "need b2+b3-a1-a2-a3 >= 1")
    h0 = b[1] + b[2] - 1 - a[0]
    hs = (a[1], a[2], b[2] - a[0], b[1] - a[0])
    with mpmath.workdps(digits + 20):
        g_tilde, _ = direct_sum(gamma_ratio(a, b), 0, 0, digits + 10)
        lhs = g_tilde / (math.prod(math.factorial(x - 1) for x in a) * math.factorial(c00 - 1))
        f_tilde, _ = direct_sum_alternating(well_poised_product(h0, hs), 0, digits + 10)
        rhs = f_tilde / math.prod(math.factorial(x - 1) for x in hs)
        return abs(lhs - rhs) / max(abs(lhs), abs(rhs))
