import itertools
import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaforms.exactnum import lcm_upto
from zetaforms.forms import (
    ConditionError,
    HParams6,
    ParamSet32,
    ParamSet33,
    ab_from_h,
    apery_form,
    apery_params,
    ball_form,
    check_integrality_z2,
    check_integrality_z3,
    h_from_ab,
    linear_form_z2,
    linear_form_z3,
    normalized_form_z3,
    numeric_check_z2,
    numeric_check_z3,
    partial_fractions_z2,
    partial_fractions_z3,
    verify_bailey,
    verify_whipple,
)
from zetaforms.groups import c_from_ab
from zetaforms.presets import RV_ZETA2, RV_ZETA3

TOL = mpmath.mpf(10) ** -12


def random_z3(rng, top=12, balanced=False):
    while True:
        b1, b2 = rng.randint(1, 4), rng.randint(1, 4)
        lo = max(b1, b2)
        a = [rng.randint(lo, min(lo + 5, top - 1)) for _ in range(4)]
        b3, b4 = rng.randint(max(a) + 1, top), rng.randint(max(a) + 1, top)
        gap = b1 + b2 + b3 + b4 - 2 - sum(a)
        if gap < 0 or (balanced and gap != 0):
            continue
        return ParamSet33(tuple(a), (b1, b2, b3, b4))


def random_balanced_z3(rng, top=14):
    """Balanced sets are rare by rejection; fix b4 from the balance instead."""
    while True:
        b1, b2 = rng.randint(1, 4), rng.randint(1, 4)
        lo = max(b1, b2)
        a = [rng.randint(lo, lo + 5) for _ in range(4)]
        b3 = rng.randint(max(a) + 1, max(a) + 4)
        b4 = sum(a) + 2 - b1 - b2 - b3
        if max(a) < b4 <= top:
            return ParamSet33(tuple(a), (b1, b2, b3, b4))


def random_z2(rng, top=12):
    while True:
        b1 = rng.randint(1, 4)
        a = [rng.randint(b1, min(b1 + 5, top - 1)) for _ in range(3)]
        b2, b3 = rng.randint(max(a) + 1, top), rng.randint(max(a) + 1, top)
        if sum(a) <= b1 + b2 + b3 - 2:
            return ParamSet32(tuple(a), (b1, b2, b3))


# --- clearing-denominators oracle ------------------------------------------


def _shifts(p):
    num, den, const = [], [], Fraction(1)
    for x, y in zip(p.a, p.b):
        if x >= y:
            num += list(range(y, x))
            const /= math.factorial(x - y)
        else:
            den += list(range(x, y))
            const *= math.factorial(y - x - 1)
    return num, den, const


def cleared_parts(p, k):
    """(A_k, B_k) from g(t) = (t+k)^m R(t): A = g(-k), B = g'(-k) (double pole)."""
    num, den, const = _shifts(p)
    m = den.count(k) - num.count(k)
    den = list(den)
    for _ in range(m):
        den.remove(k)
    g = const
    for l in num:
        g *= l - k
    for l in den:
        g /= l - k
    if m == 1:
        return Fraction(0), g
    logder = sum(Fraction(1, l - k) for l in num) - sum(Fraction(1, l - k) for l in den)
    return g, g * logder


def rational_value(p, t):
    num, den, const = _shifts(p)
    v = const
    for l in num:
        v *= t + l
    for l in den:
        v /= t + l
    return v


# --- partial fractions -----------------------------------------------------


def test_apery_partial_fractions_against_clearing():
    p = apery_params(1)
    A, B = partial_fractions_z3(p)
    assert sum(B.values()) == 0
    for k in B:
        a_k, b_k = cleared_parts(p, k)
        assert A.get(k, 0) == a_k
        assert B[k] == b_k


def test_partial_fractions_reconstruct_function():
    rng = random.Random(1)
    for _ in range(10):
        p = random_z3(rng)
        A, B = partial_fractions_z3(p)
        assert sum(B.values()) == 0
        for _ in range(10):
            t = Fraction(rng.randint(-200, 200), rng.randint(1, 50)) + Fraction(1, 97)
            recon = sum(c / (t + k) ** 2 for k, c in A.items()) + sum(c / (t + k) for k, c in B.items())
            assert recon == rational_value(p, t)


def test_single_double_pole():
    # b3* = a4* + 1: exactly one double pole
    A, B = partial_fractions_z3(ParamSet33((1, 1, 1, 1), (1, 1, 2, 2)))
    assert list(A) == [1]


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_residues_sum_to_zero(rnd):
    p = random_z3(rnd)
    _, B = partial_fractions_z3(p)
    assert sum(B.values()) == 0


# --- the zeta(3) form ------------------------------------------------------


def test_apery_small_cases():
    f1 = apery_form(1)
    assert f1[3] == 10 and f1[0] == -12
    assert apery_form(2)[3] / 2 == 73
    for form in (f1, apery_form(2)):
        assert form[2] == 0 and set(form.weights) <= {3}


def test_apery_value_small():
    with mpmath.workdps(40):
        v = apery_form(1).evaluate(30)
        assert abs(v - mpmath.mpf("0.0205690315959428539973816")) < mpmath.mpf(10) ** -24


@pytest.mark.parametrize("n", range(1, 7))
def test_apery_integrality(n):
    form = apery_form(n)
    A, B = form[3] / 2, -form[0]
    assert A.denominator == 1
    assert (lcm_upto(n) ** 3 * B).denominator == 1
    assert check_integrality_z3(apery_params(n), form).passed


def test_integrality_reports_multiplier_apery_one():
    rep = check_integrality_z3(apery_params(1))
    assert rep.passed and rep.multiplier == 1


def test_integrality_random_z3():
    rng = random.Random(2024)
    for _ in range(50):
        p = random_z3(rng)
        rep = check_integrality_z3(p)
        assert rep.passed, p


def test_integrality_direction_sets():
    assert check_integrality_z3(RV_ZETA3.params(1)).passed
    assert check_integrality_z2(RV_ZETA2.params(1)).passed


def test_numeric_agreement_z3():
    rng = random.Random(5)
    cases = [apery_params(1), apery_params(3), RV_ZETA3.params(1)] + [random_z3(rng) for _ in range(4)]
    for p in cases:
        form_val, direct = numeric_check_z3(p, 30)
        assert abs(form_val - direct) <= TOL * max(1, abs(form_val)), p


def test_condition_errors_name_the_condition():
    with pytest.raises(ConditionError, match="ordering"):
        ParamSet33((2, 2, 2, 2), (3, 1, 4, 4))
    with pytest.raises(ConditionError, match="decay"):
        ParamSet33((2, 2, 2, 2), (1, 1, 3, 3))
    with pytest.raises(ConditionError, match="decay"):
        ParamSet32((2, 2, 2), (1, 3, 3))


def test_normalized_form_invariant_under_parameter_swaps():
    rng = random.Random(9)
    for _ in range(6):
        p = random_z3(rng)
        ref = normalized_form_z3(p)
        for perm in itertools.permutations(range(4)):
            a = tuple(p.a[i] for i in perm)
            for b12 in ((p.b[0], p.b[1]), (p.b[1], p.b[0])):
                for b34 in ((p.b[2], p.b[3]), (p.b[3], p.b[2])):
                    q = ParamSet33(a, b12 + b34)
                    assert normalized_form_z3(q) == ref


# --- the zeta(2) form ------------------------------------------------------


def test_small_z2_form():
    p = ParamSet32((2, 2, 2), (1, 3, 4))
    form = linear_form_z2(p)
    assert form[3] == 0 and set(form.weights) <= {2}
    val, direct = numeric_check_z2(p, 30)
    assert abs(val - direct) < TOL


def test_z2_partial_fractions_reconstruct():
    rng = random.Random(21)
    for _ in range(10):
        p = random_z2(rng)
        A, B = partial_fractions_z2(p)
        t = Fraction(rng.randint(1, 300), 7) + Fraction(1, 101)
        recon = sum(c / (t + k) ** 2 for k, c in A.items()) + sum(c / (t + k) for k, c in B.items())
        assert recon == rational_value(p, t)


def test_integrality_random_z2():
    rng = random.Random(77)
    for _ in range(50):
        p = random_z2(rng)
        assert check_integrality_z2(p).passed, p


def test_numeric_agreement_z2():
    rng = random.Random(8)
    for p in [RV_ZETA2.params(1)] + [random_z2(rng) for _ in range(4)]:
        val, direct = numeric_check_z2(p, 30)
        assert abs(val - direct) <= TOL * max(1, abs(val)), p


# --- parameter maps --------------------------------------------------------


def test_h_of_apery():
    h = h_from_ab(apery_params(1))
    assert h == HParams6(5, (2, 2, 2, 2, 2))
    for n in range(1, 5):
        assert h_from_ab(apery_params(n)) == HParams6(3 * n + 2, (n + 1,) * 5)


def test_h_of_direction_set():
    p = RV_ZETA3.params(1)
    h = h_from_ab(p)
    a, b = p.a, p.b
    assert h.h0 == b[2] + b[3] - b[0] - a[0]
    assert ab_from_h(h) == p.normalized()
    assert all(1 + h.h0 > 2 * x for x in h.h)


def test_h_round_trip_random():
    rng = random.Random(31)
    done = rejected = 0
    while done < 100:
        p = random_balanced_z3(rng)
        if not c_from_ab(p).admissible:
            continue
        h0 = p.b[2] + p.b[3] - p.b[0] - p.a[0]
        hs = (1 - p.b[0] + p.a[1], 1 - p.b[0] + p.a[2], 1 - p.b[0] + p.a[3], p.b[3] - p.a[0], p.b[2] - p.a[0])
        if any(1 + h0 <= 2 * x for x in hs):
            # admissible but outside the convergent well-poised range
            with pytest.raises(ConditionError, match="well-poised"):
                h_from_ab(p)
            rejected += 1
            continue
        h = h_from_ab(p)
        assert ab_from_h(h) == p.normalized()
        done += 1
    assert rejected > 0


def test_h_requires_balance():
    with pytest.raises(ConditionError, match="balance"):
        h_from_ab(ParamSet33((2, 2, 2, 2), (1, 1, 4, 5)))


# --- hypergeometric identities ---------------------------------------------


@pytest.mark.parametrize("p", [apery_params(1), apery_params(2), RV_ZETA3.params(1)], ids=["apery1", "apery2", "rv3"])
def test_bailey_residual(p):
    assert verify_bailey(p, 30) < TOL


@pytest.mark.parametrize("p", [ParamSet32((2, 2, 2), (1, 3, 4)), RV_ZETA2.params(1)], ids=["small", "rv2"])
def test_whipple_residual(p):
    assert verify_whipple(p, 30) < TOL


@pytest.mark.parametrize("n", range(1, 5))
def test_ball_equals_apery(n):
    assert ball_form(n) == apery_form(n)
