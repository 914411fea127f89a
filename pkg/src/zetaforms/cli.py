"""Command-line front end.

Every subcommand writes one JSON report

    {command, inputs, exact, numeric: {..., precision}, verdicts, timings}

except ``search`` (CSV ranking) and ``group --count-only`` (a bare integer).
Exit status: 0 success, 1 a verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import mpmath

from . import forms, groups, measures, oddzeta, presets
from .directions import Direction32, Direction33
from .forms import ConditionError, ParamSet32, ParamSet33

MIN_PRECISION = 20
DEFAULT_PRECISION = 50
TOLERANCE = mpmath.mpf("1e-6")


# --- report plumbing --------------------------------------------------------


def _exact(x):
    """Exact data as strings: rationals become 'num/den'."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    if isinstance(x, dict):
        return {str(k): _exact(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_exact(v) for v in x]
    return x


def _form_exact(form) -> dict:
    return {k: _exact(Fraction(v)) for k, v in form.as_strings().items()}


class Report:
    def __init__(self, command: str, precision: int):
        self.command = command
        self.precision = precision
        self.inputs: dict = {}
        self.exact: dict = {}
        self.numeric: dict = {}
        self.verdicts: list = []
        self.timings: dict = {}

    def num(self, key, value):
        if isinstance(value, dict):
            self.numeric[key] = value
        elif value is None:
            self.numeric[key] = None
        else:
            self.numeric[key] = mpmath.nstr(value, self.precision)

    def verdict(self, name: str, ok: bool, detail: str = "", informational: bool = False):
        """Record a check; informational ones describe an outcome and never fail the run."""
        entry = {"check": name, "passed": bool(ok)}
        if detail:
            entry["detail"] = detail
        if informational:
            entry["informational"] = True
        self.verdicts.append(entry)

    @contextmanager
    def timed(self, name: str):
        t = time.perf_counter()
        yield
        self.timings[name] = round(time.perf_counter() - t, 4)

    @property
    def failed(self) -> bool:
        return any(not v["passed"] and not v.get("informational") for v in self.verdicts)

    def as_dict(self, timings: bool = True) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "exact": self.exact,
            "numeric": {**self.numeric, "precision": self.precision},
            "verdicts": self.verdicts,
            "timings": self.timings if timings else {},
        }


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(";", ",").split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _precision(arg: int | None) -> int:
    if arg is None:
        env = os.environ.get("ZETAFORMS_PRECISION")
        arg = int(env) if env else DEFAULT_PRECISION
    if arg < MIN_PRECISION:
        raise ConditionError("precision too low", f"need at least {MIN_PRECISION} digits, got {arg}")
    return arg


def _close(value, target: str) -> bool:
    return abs(mpmath.mpf(value) - mpmath.mpf(target)) < TOLERANCE


# --- parameter resolution ---------------------------------------------------


def _z3_params(args) -> ParamSet33:
    if args.preset:
        return presets.Z3_PRESETS[args.preset].params(args.n)
    if args.a is None or args.b is None:
        raise ConditionError("missing parameters", "give --a and --b or --preset")
    return ParamSet33(args.a, args.b)


def _z2_params(args) -> ParamSet32:
    if args.preset:
        return presets.Z2_PRESETS[args.preset].params(args.n)
    if args.a is None or args.b is None:
        raise ConditionError("missing parameters", "give --a and --b or --preset")
    return ParamSet32(args.a, args.b)


def _z3_direction(args):
    if args.preset:
        return presets.Z3_PRESETS[args.preset], args.mode or presets.Z3_MODES[args.preset]
    if args.alpha is None or args.beta is None:
        raise ConditionError("missing parameters", "give --alpha and --beta or --preset")
    return Direction33(args.alpha, args.beta), args.mode or "full"


def _z2_direction(args):
    if args.preset:
        return presets.Z2_PRESETS[args.preset]
    if args.alpha is None or args.beta is None:
        raise ConditionError("missing parameters", "give --alpha and --beta or --preset")
    return Direction32(args.alpha, args.beta)


def _eta(args) -> oddzeta.DirectionEta:
    if args.preset:
        return presets.ODD_PRESETS[args.preset]
    if args.eta0 is None or args.eta is None:
        raise ConditionError("missing parameters", "give --eta0 and --eta or --preset")
    return oddzeta.DirectionEta(args.eta0, args.eta, r=args.r)


def _odd_params(args) -> oddzeta.WellPoisedParams:
    if args.preset:
        return presets.ODD_PRESETS[args.preset].params(args.n)
    if args.h0 is None or args.h is None:
        raise ConditionError("missing parameters", "give --h0 and --h or --preset")
    return oddzeta.WellPoisedParams(args.r, len(args.h) if args.q is None else args.q, args.h0, args.h)


# --- commands -----------------------------------------------------------------


def cmd_form_z3(args, rep: Report):
    p = _z3_params(args)
    rep.inputs = {"a": list(p.a), "b": list(p.b), "preset": args.preset, "n": args.n if args.preset else None}
    with rep.timed("form"):
        form = forms.linear_form_z3(p)
        integ = forms.check_integrality_z3(p, form)
    rep.exact = {"form": _form_exact(form), "A": _exact(form[3] / 2), "B": _exact(-form[0]), "multiplier": str(integ.multiplier)}
    with rep.timed("numeric"):
        val, direct = forms.numeric_check_z3(p, rep.precision)
    rep.num("value", val)
    rep.num("direct_sum", direct)
    rep.verdict("integrality", integ.passed)
    rep.verdict("numeric agreement", abs(val - direct) <= mpmath.mpf(10) ** (-rep.precision // 2) * max(1, abs(val)))


def cmd_form_z2(args, rep: Report):
    p = _z2_params(args)
    rep.inputs = {"a": list(p.a), "b": list(p.b), "preset": args.preset, "n": args.n if args.preset else None}
    with rep.timed("form"):
        form = forms.linear_form_z2(p)
        integ = forms.check_integrality_z2(p, form)
    rep.exact = {"form": _form_exact(form), "A": _exact(form[2]), "B": _exact(-form[0]), "multiplier": str(integ.multiplier)}
    with rep.timed("numeric"):
        val, direct = forms.numeric_check_z2(p, rep.precision)
    rep.num("value", val)
    rep.num("direct_sum", direct)
    rep.verdict("integrality", integ.passed)
    rep.verdict("numeric agreement", abs(val - direct) <= mpmath.mpf(10) ** (-rep.precision // 2) * max(1, abs(val)))


def cmd_form_odd(args, rep: Report):
    p = _odd_params(args)
    rep.inputs = {"r": p.r, "q": p.q, "h0": p.h0, "h": list(p.h), "preset": args.preset}
    with rep.timed("form"):
        form = oddzeta.linear_form_odd(p)
    rep.exact = {"form": _form_exact(form), "m": list(p.m_values())}
    with rep.timed("arithmetic"):
        table, Phi = oddzeta.phi_arith(p)
        ok_den = form.is_integral(oddzeta.denominator_multiplier(p))
    rep.exact["nu"] = {str(k): v for k, v in table.items()}
    rep.exact["Phi"] = str(Phi)
    rep.verdict("odd weights only", all(s % 2 == 1 and p.r + 2 <= s <= p.q - 2 for s in form.weights))
    rep.verdict("denominator inclusion", ok_den)
    if not args.skip_numeric:
        with rep.timed("numeric"):
            val, direct = oddzeta.numeric_check_odd(p, rep.precision)
        rep.num("value", val)
        rep.num("direct_sum", direct)
        rep.verdict("numeric agreement", abs(val - direct) <= mpmath.mpf(10) ** (-rep.precision // 2) * max(1, abs(val)))


def cmd_apery(args, rep: Report):
    rep.inputs = {"n": args.n}
    with rep.timed("form"):
        form = forms.apery_form(args.n)
    rep.exact = {"form": _form_exact(form), "A": _exact(form[3] / 2), "B": _exact(-form[0])}
    rep.num("value", form.evaluate(rep.precision))
    rep.verdict("integrality", forms.check_integrality_z3(forms.apery_params(args.n), form).passed)


def cmd_ball(args, rep: Report):
    rep.inputs = {"n": args.n}
    with rep.timed("form"):
        ball = forms.ball_form(args.n)
        apery = forms.apery_form(args.n)
    rep.exact = {"ball": _form_exact(ball), "apery": _form_exact(apery)}
    rep.num("value", ball.evaluate(rep.precision))
    rep.verdict("equals the Apery form", ball == apery)


def cmd_verify_bailey(args, rep: Report):
    p = _z3_params(args)
    rep.inputs = {"a": list(p.a), "b": list(p.b), "preset": args.preset}
    with rep.timed("residual"):
        res = forms.verify_bailey(p, rep.precision)
    rep.num("residual", res)
    rep.verdict("residual below 1e-12", res < mpmath.mpf("1e-12"))


def cmd_verify_whipple(args, rep: Report):
    p = _z2_params(args)
    rep.inputs = {"a": list(p.a), "b": list(p.b), "preset": args.preset}
    with rep.timed("residual"):
        res = forms.verify_whipple(p, rep.precision)
    rep.num("residual", res)
    rep.verdict("residual below 1e-12", res < mpmath.mpf("1e-12"))


def cmd_group(args, rep: Report):
    with rep.timed("enumerate"):
        G = groups.enumerate_group(args.kind)
    if args.count_only:
        return G.order
    rep.inputs = {"kind": args.kind}
    G1 = groups.subgroup_perms(args.kind, "G1")
    G0 = groups.subgroup_perms(args.kind, "G0")
    rep.exact = {
        "order": G.order,
        "G1_order": len(G1),
        "G0_order": len(G0),
        "generators": sorted(groups.generators(args.kind)),
    }
    if args.kind == "z3":
        rep.exact["coset_words_G1"] = ["".join(w) or "id" for w in groups.coset_reps_z3()]
    rep.verdict("order divisible by the subgroup orders", G.order % len(G1) == 0 and len(G1) % len(G0) == 0)


def cmd_orbit(args, rep: Report):
    if args.kind == "z2" or (args.preset in presets.Z2_PRESETS):
        d = _z2_direction(args)
        mode = "full"
    else:
        d, mode = _z3_direction(args)
    c = groups.c_from_direction(d)
    rep.inputs = {"direction": str(d), "mode": mode}
    with rep.timed("orbit"):
        orb = groups.orbit_M(c, mode)
    rep.exact = {
        "c_matrix": [list(r) for r in c.rows()],
        "images": len(orb.coset_words),
        "distinct_images": len(orb.elements),
        "collections": [str(x) for x in orb.collections],
        "m": list(d.m_values()),
    }


def _measure_common(rep: Report, r):
    for key, val in r.as_dict(rep.precision).items():
        if key in ("direction", "mode", "m", "phi_range", "verdict"):
            rep.exact[key] = val
        else:
            rep.numeric[key] = val
    rep.verdict("C0 > C2", r.verdict == "measure", r.verdict, informational=True)


def cmd_measure_z3(args, rep: Report):
    d, mode = _z3_direction(args)
    rep.inputs = {"direction": str(d), "mode": mode}
    with rep.timed("measure"):
        r = measures.measure_z3(d, mode, rep.precision)
    _measure_common(rep, r)


def cmd_measure_z2(args, rep: Report):
    d = _z2_direction(args)
    rep.inputs = {"direction": str(d)}
    with rep.timed("measure"):
        r = measures.measure_z2(d, rep.precision)
    _measure_common(rep, r)


def _odd_common(rep: Report, r):
    out = r.as_dict(rep.precision)
    for key in ("direction", "m", "lead", "phi_range", "hypotheses", "asymptotics", "verdict", "zetas"):
        rep.exact[key] = out.pop(key)
    rep.numeric.update(out)
    rep.verdict("saddle hypotheses", r.saddle.hypotheses_hold, informational=True)
    rep.verdict("C0 > C2", r.C0 > r.C2, r.verdict, informational=True)


def cmd_measure_odd(args, rep: Report):
    eta = _eta(args)
    rep.inputs = {"direction": str(eta)}
    with rep.timed("measure"):
        r = oddzeta.measure_odd(eta, rep.precision)
    _odd_common(rep, r)


def _check_targets(rep: Report, targets: dict, values: dict):
    for key, target in targets.items():
        rep.verdict(f"{key} = {target}", _close(values[key], target))


def cmd_theorem1(args, rep: Report):
    rep.inputs = {"preset": "rv-zeta3"}
    with rep.timed("measure"):
        r = measures.measure_z3(presets.RV_ZETA3, "full", rep.precision)
    _measure_common(rep, r)
    _check_targets(rep, presets.THEOREM1_TARGETS, {
        "tau0": r.tau0, "C0": r.C0, "C1": r.C1, "psi_integral": r.psi_integral,
        "inv_square_integral": r.inv_square, "C2": r.C2, "mu_bound": r.mu_bound,
    })


def cmd_theorem2(args, rep: Report):
    rep.inputs = {"preset": "rv-zeta2"}
    with rep.timed("measure"):
        r = measures.measure_z2(presets.RV_ZETA2, rep.precision)
    _measure_common(rep, r)
    _check_targets(rep, presets.THEOREM2_TARGETS, {"mu_bound": r.mu_bound})


def cmd_theorem3(args, rep: Report):
    rep.inputs = {"preset": "theorem3"}
    with rep.timed("measure"):
        r = oddzeta.measure_odd(presets.THEOREM3_ETA, rep.precision)
    _odd_common(rep, r)
    _check_targets(rep, presets.THEOREM3_TARGETS, {
        "tau0_re": mpmath.re(r.tau0), "tau0_im": mpmath.im(r.tau0), "C0": r.C0, "C2": r.C2,
    })


SEARCH_FIELDS = ["rank", "direction", "mode", "m", "C0", "C1", "C2", "mu_bound"]


def cmd_search(args, rep: Report):
    if args.bound < 1:
        raise ConditionError("bound must be positive", f"got {args.bound}")
    mode = args.mode or "full"
    with rep.timed("search"):
        ranked = measures.search_directions(args.kind, args.bound, mode, digits=max(20, min(rep.precision, 30)), workers=args.workers)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SEARCH_FIELDS)
    for i, r in enumerate(ranked[: args.top] if args.top else ranked, start=1):
        w.writerow([i, str(r.direction), r.mode, " ".join(map(str, r.m_values)),
                    mpmath.nstr(r.C0, 12), mpmath.nstr(r.C1, 12), mpmath.nstr(r.C2, 12), mpmath.nstr(r.mu_bound, 12)])
    return buf.getvalue()


def cmd_fkn(args, rep: Report):
    rep.inputs = {"k": args.k, "n": args.n}
    with rep.timed("form"):
        form = oddzeta.F_kn(args.k, args.n)
    rep.exact = _form_exact(form)
    rep.num("value", form.evaluate(rep.precision))
    rep.verdict("weights are odd, between 3 and k", all(s % 2 == 1 and 3 <= s <= args.k for s in form.weights))


def cmd_slope(args, rep: Report):
    rep.inputs = {"k": args.k, "n": args.n}
    with rep.timed("slope"):
        s = oddzeta.asymptotic_slope(args.k, args.n, rep.precision)
    rep.num("slope", s)
    rep.verdict("finite", mpmath.isfinite(s))


def cmd_conjecture(args, rep: Report):
    if args.h is not None:
        p = oddzeta.WellPoisedParams(args.r, len(args.h), args.h0, args.h)
        rep.inputs = {"r": p.r, "q": p.q, "h0": p.h0, "h": list(p.h)}
        with rep.timed("check"):
            res = oddzeta.conjecture_check(p)
        rep.exact = {"maxima": list(res.maxima), "multiplier": str(res.multiplier), "prime": res.prime}
        rep.verdict("inclusion with one D factor fewer", res.passed, f"prime {res.prime}" if res.prime else "")
        return
    rep.inputs = {"r": args.r, "q": args.q, "h0_max": args.h0_max}
    with rep.timed("sweep"):
        checked, failures = oddzeta.conjecture_sweep(args.r, args.q, args.h0_max, stop_at_first=True)
    rep.exact = {"checked": checked, "counterexample": None}
    if failures:
        f = failures[0]
        rep.exact["counterexample"] = {"h0": f.params.h0, "h": list(f.params.h), "prime": f.prime}
    rep.verdict("no counterexample", not failures)


# --- parser -----------------------------------------------------------------


def _add_z3_params(sp, default_preset=None):
    sp.add_argument("--a", type=_ints, help="a1,a2,a3,a4")
    sp.add_argument("--b", type=_ints, help="b1,b2,b3,b4")
    sp.add_argument("--preset", choices=sorted(presets.Z3_PRESETS), default=default_preset)
    sp.add_argument("--n", type=int, default=1)


def _add_z2_params(sp, default_preset=None):
    sp.add_argument("--a", type=_ints, help="a1,a2,a3")
    sp.add_argument("--b", type=_ints, help="b1,b2,b3")
    sp.add_argument("--preset", choices=sorted(presets.Z2_PRESETS), default=default_preset)
    sp.add_argument("--n", type=int, default=1)


def _add_direction(sp, choices):
    sp.add_argument("--alpha", type=_ints)
    sp.add_argument("--beta", type=_ints)
    sp.add_argument("--preset", choices=sorted(choices))


def _add_common(parser, default):
    parser.add_argument("--precision", type=int, default=default, help="working digits (default $ZETAFORMS_PRECISION or 50, minimum 20)")
    parser.add_argument("--output", "-o", default=default, help="write the report to this file (UTF-8) instead of stdout")
    parser.add_argument("--no-timings", action="store_true", default=False if default is None else default, help="omit wall-clock timings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetaforms", description="Linear forms in zeta values and irrationality measures.")
    _add_common(parser, None)
    # the same options are accepted after the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)
    sub_add = sub.add_parser
    sub.add_parser = lambda name, **kw: sub_add(name, parents=[common], **kw)

    sp = sub.add_parser("form-z3", help="exact form 2A zeta(3) - B from a1..a4, b1..b4")
    _add_z3_params(sp)
    sp = sub.add_parser("form-z2", help="exact form A zeta(2) - B from a1..a3, b1..b3")
    _add_z2_params(sp)
    sp = sub.add_parser("form-odd", help="exact well-poised form in odd zeta values")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--q", type=int)
    sp.add_argument("--h0", type=int)
    sp.add_argument("--h", type=_ints, help="h1,...,hq")
    sp.add_argument("--preset", choices=sorted(presets.ODD_PRESETS))
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--skip-numeric", action="store_true")
    sp = sub.add_parser("apery", help="Apery's form for zeta(3)")
    sp.add_argument("--n", type=int, required=True)
    sp = sub.add_parser("ball", help="the well-poised zeta(3) form and its equality with Apery's")
    sp.add_argument("--n", type=int, required=True)
    sp = sub.add_parser("verify-bailey", help="check the 7F6 identity numerically")
    _add_z3_params(sp)
    sp = sub.add_parser("verify-whipple", help="check the 6F5 identity numerically")
    _add_z2_params(sp)
    sp = sub.add_parser("group", help="enumerate the permutation group on c-matrices")
    sp.add_argument("--kind", choices=["z3", "z2"], required=True)
    sp.add_argument("--count-only", action="store_true")
    sp = sub.add_parser("orbit", help="orbit of a direction's c-matrix")
    sp.add_argument("--kind", choices=["z3", "z2"], default="z3")
    _add_direction(sp, set(presets.Z3_PRESETS) | set(presets.Z2_PRESETS))
    sp.add_argument("--mode", choices=["full", "hata"])
    sp = sub.add_parser("measure-z3", help="irrationality measure bound for zeta(3)")
    _add_direction(sp, presets.Z3_PRESETS)
    sp.add_argument("--mode", choices=["full", "hata"])
    sp = sub.add_parser("measure-z2", help="irrationality measure bound for zeta(2)")
    _add_direction(sp, presets.Z2_PRESETS)
    sp = sub.add_parser("measure-odd", help="compare C0 and C2 for an odd-zeta direction")
    sp.add_argument("--eta0", type=int)
    sp.add_argument("--eta", type=_ints)
    sp.add_argument("--r", type=int, default=3)
    sp.add_argument("--preset", choices=sorted(presets.ODD_PRESETS))
    sub.add_parser("theorem1", help="mu(zeta(3)) bound from the rv-zeta3 direction")
    sub.add_parser("theorem2", help="mu(zeta(2)) bound from the rv-zeta2 direction")
    sub.add_parser("theorem3", help="one of zeta(5), ..., zeta(11) is irrational")
    sp = sub.add_parser("search", help="rank directions by their measure bound (CSV)")
    sp.add_argument("--kind", choices=["z3", "z2"], required=True)
    sp.add_argument("--bound", type=int, required=True, help="bound on the sum of betas")
    sp.add_argument("--mode", choices=["full", "hata"])
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--top", type=int, default=0, help="keep only the best K rows (0 = all)")
    sp = sub.add_parser("fkn", help="exact F_{k,n}")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp = sub.add_parser("slope", help="log|F_{k,n}|/n")
    sp.add_argument("--k", type=int, default=5)
    sp.add_argument("--n", type=int, required=True)
    sp = sub.add_parser("conjecture", help="denominator conjecture: single check or sweep")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--q", type=int, default=5)
    sp.add_argument("--h0-max", type=int, default=14)
    sp.add_argument("--h0", type=int)
    sp.add_argument("--h", type=_ints, help="h1,...,hq for a single check")
    return parser


COMMANDS = {
    "form-z3": cmd_form_z3,
    "form-z2": cmd_form_z2,
    "form-odd": cmd_form_odd,
    "apery": cmd_apery,
    "ball": cmd_ball,
    "verify-bailey": cmd_verify_bailey,
    "verify-whipple": cmd_verify_whipple,
    "group": cmd_group,
    "orbit": cmd_orbit,
    "measure-z3": cmd_measure_z3,
    "measure-z2": cmd_measure_z2,
    "measure-odd": cmd_measure_odd,
    "theorem1": cmd_theorem1,
    "theorem2": cmd_theorem2,
    "theorem3": cmd_theorem3,
    "search": cmd_search,
    "fkn": cmd_fkn,
    "slope": cmd_slope,
    "conjecture": cmd_conjecture,
}


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        precision = _precision(args.precision)
        rep = Report(args.command, precision)
        with mpmath.workdps(precision):
            out = COMMANDS[args.command](args, rep)
    except ConditionError as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return 2
    if isinstance(out, int):
        _emit(f"{out}\n", args.output)
        return 0
    if isinstance(out, str):
        _emit(out, args.output)
        return 0
    _emit(json.dumps(rep.as_dict(not args.no_timings), indent=2) + "\n", args.output)
    return 1 if rep.failed else 0


if __name__ == "__main__":
    sys.exit(main())
