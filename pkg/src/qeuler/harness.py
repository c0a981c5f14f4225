"""Theorem-verification harness.

A suite is a list of grid points ``(check, params)``.  ``check`` names an
entry of :data:`CHECKS`; ``params`` holds plain values only (numbers,
strings, ``"a/b"`` rationals, character specs) so points pickle cleanly and
serialize into the report.  Records come back in grid order however the
points are sharded over workers.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import dirichlet, euler, measure, zeta
from .characters import enumerate_characters, parse_character
from .emit import to_json
from .numkit import qbracket, qpow
from .padic import padic_exp, padic_log
from .records import EXPECTED_FAIL, FAIL, PASS, VerificationRecord, archimedean_record, padic_record

SUITES = ("euler", "dirichlet", "zeta", "partial-zeta", "padic", "continuation")


@dataclass
class SuiteConfig:
    suite: str
    grid: list | None = None  # None: the default grid of the suite
    tol: float = 1e-10
    seed: int = 0
    jobs: int = 1
    extra_random: int = 4  # seeded points appended to a default grid

    def __post_init__(self):
        if self.suite not in SUITES + ("all",):
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")


@dataclass
class Report:
    suite: str
    seed: int
    records: list = field(default_factory=list)

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, EXPECTED_FAIL: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def exit_code(self) -> int:
        return 0 if all(r.ok for r in self.records) else 1

    def to_json(self) -> str:
        return to_json(dict(suite=self.suite, seed=self.seed, summary=self.counts(),
                            records=self.records))

    def table(self) -> str:
        rows = [("status", "identity", "residual", "parameters")]
        for r in self.records:
            res = r.residual
            res = f"{float(res):.3e}" if isinstance(res, float) else str(res)
            params = " ".join(f"{k}={_short(v)}" for k, v in r.parameters.items())
            rows.append((r.status, r.identity_id, res, params))
        w = [max(len(row[i]) for row in rows) for i in range(3)]
        lines = [f"{a:<{w[0]}}  {b:<{w[1]}}  {c:>{w[2]}}  {d}" for a, b, c, d in rows]
        c = self.counts()
        lines.append(f"{c[PASS]} pass, {c[FAIL]} fail, {c[EXPECTED_FAIL]} expected-fail")
        return "\n".join(lines) + "\n"


def _short(v) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


# parameter decoding --------------------------------------------------------

def _num(v):
    """``"1/2"`` becomes an exact Fraction; numbers pass through."""
    if isinstance(v, str):
        return Fraction(v)
    return v


def _chi(spec: str):
    # "enum:d:i" picks the i-th character of modulus d in enumeration order
    if spec.startswith("enum:"):
        _, d, i = spec.split(":")
        return enumerate_characters(int(d))[int(i)]
    return parse_character(spec)


def _mq(p, k, alpha=1, beta=1, chi="trivial:1", offset=1, precision=12):
    return measure.MeasureQuery(k, measure.q_of(p, offset, precision), alpha, beta, _chi(chi))


def _bool_record(ident, params, ok, lhs, rhs, residual, tol, note=None):
    return VerificationRecord(ident, params, lhs, rhs, residual, PASS if ok else FAIL, tol,
                              dict(note or {}))


# euler ----------------------------------------------------------------------

def _euler_routes(q, alpha, n, x, tol):
    with mpmath.workdps(30):
        qm, xm = mpmath.mpf(q), mpmath.mpf(x)
        closed = euler.euler_poly_closed(n, xm, alpha, qm)
        series = euler.euler_poly_series(n, xm, alpha, qm, tol=mpmath.mpf(10) ** -20).value
        umbral = euler.euler_poly_umbral(n, xm, alpha, qm)
        dev = max(abs(closed - series), abs(closed - umbral), abs(series - umbral))
    params = dict(q=q, alpha=alpha, n=n, x=x)
    return _bool_record("euler:routes", params, dev <= tol, float(closed), float(series),
                        float(dev), tol, dict(umbral=float(umbral)))


def _euler_spot(n, q, expected, tol):
    exact = euler.euler_number(n, 1, _num(q))
    flt = euler.euler_number(n, 1, float(_num(q)))
    ok = exact == _num(expected) and abs(flt - float(_num(expected))) <= 1e-12
    return _bool_record("euler:spot", dict(n=n, q=q), ok, exact, _num(expected),
                        abs(flt - float(_num(expected))), 1e-12)


def _shift(k, n, alpha, q, tol):
    return euler.check_shift_identity(k, n, alpha, _num(q), tol)


def _thm12(k, n, alpha, q, tol, printed=False):
    fn = euler.check_odd_identity if k % 2 else euler.check_even_identity
    return fn(k, n, alpha, _num(q), 1e-12, printed=printed)


def _generating_shift_printed(n, x, alpha, q, tol):
    # the printed assembly carries an extra q^{-alpha x}
    q = _num(q)
    lhs = euler.euler_poly_closed(n, x, alpha, q)
    rhs = qpow(q ** alpha, -x) * euler.euler_poly_umbral(n, x, alpha, q)
    return archimedean_record("eq8-printed", dict(n=n, x=x, alpha=alpha, q=q), lhs, rhs, tol,
                              expect_fail=True)


def _classical_limit(n, x, tol):
    gaps = euler.classical_limit_gaps(n, _num(x))
    worst = max(b / a for a, b in zip(gaps, gaps[1:]))
    return _bool_record("euler:classical-limit", dict(n=n, x=x), worst < 1, gaps, None, worst, 1.0)


def _classical_values(n, x, expected, tol):
    got = euler.classical_euler_poly(n, _num(x))
    return _bool_record("euler:classical-values", dict(n=n, x=x), got == _num(expected), got,
                        _num(expected), abs(got - _num(expected)), 0)


# dirichlet -------------------------------------------------------------------

def _dir_routes(n, x, chi, alpha, beta, q, tol):
    c = _chi(chi)
    series = dirichlet.dirichlet_euler_series(n, x, c, alpha, beta, q, tol=tol * 1e-3).value
    closed = dirichlet.dirichlet_euler_closed(n, x, c, alpha, beta, q)
    umbral = dirichlet.dirichlet_euler_umbral(n, x, c, alpha, beta, q)
    dev = max(abs(series - closed), abs(closed - umbral))
    params = dict(n=n, x=x, chi=chi, alpha=alpha, beta=beta, q=q)
    return _bool_record("dirichlet:routes", params, dev <= tol, closed, series, dev, tol)


def _dir_trivial(n, x, alpha, beta, q, tol):
    lhs = dirichlet.dirichlet_euler_closed(n, x, dirichlet.TRIVIAL, alpha, beta, q)
    rhs = euler.euler_ab_poly(n, x, alpha, beta, q)
    return archimedean_record("dirichlet:trivial", dict(n=n, x=x, alpha=alpha, beta=beta, q=q),
                              lhs, rhs, tol)


def _character_shift(n, x, chi, alpha, q, tol):
    return dirichlet.check_character_shift(n, x, _chi(chi), alpha, q, tol=tol)


def _distribution(n, x, chi, alpha, beta, q, variant, tol, printed=False):
    return dirichlet.distribution_check(n, x, _chi(chi), alpha, beta, q, variant, printed, tol)


def _stirling_bracket(k, x, alpha, q, tol):
    lhs = dirichlet.stirling_bracket_power(k, x, alpha, q, cap=40)
    rhs = qbracket(x, q ** alpha) ** k
    return archimedean_record("stirling:bracket", dict(k=k, x=x, alpha=alpha, q=q, cap=40),
                              lhs, rhs, 1e-8)


def _stirling(n, x, chi, alpha, q, tol):
    return dirichlet.stirling_expansion_check(n, x, _chi(chi), alpha, 1, q, 40, 1e-8)


# zeta -------------------------------------------------------------------------

def _hurwitz_special(n, x, alpha, q, tol):
    lhs = zeta.zeta_hurwitz_weighted(-n, x, alpha, q, tol * 1e-3).value
    rhs = euler.euler_poly_closed(n, x, alpha, q)
    return archimedean_record("zeta:hurwitz-special", dict(n=n, x=x, alpha=alpha, q=q),
                              lhs, rhs, tol)


def _number_special(n, alpha, q, tol):
    lhs = zeta.zeta_weighted(-n, alpha, q, tol * 1e-3).value
    rhs = euler.euler_number(n, alpha, q)
    return archimedean_record("zeta:number-special", dict(n=n, alpha=alpha, q=q), lhs, rhs, tol)


def _n0(alpha, q, tol):
    z0 = zeta.zeta_weighted(0, alpha, q, tol * 1e-3).value
    e0 = euler.euler_number(0, alpha, q)
    ok = abs(z0 + q) <= tol and abs(e0 - 1) <= tol
    return _bool_record("zeta:n0-discrepancy", dict(alpha=alpha, q=q), ok, z0, e0,
                        max(abs(z0 + q), abs(e0 - 1)), tol, dict(zeta0=-q, number0=1))


def _large_n(n, alpha, q, tol):
    # the limit holds; the approach is governed by the m = 2 term
    res = zeta.large_n_residual(n, alpha, q)
    lead = q * q * (1 + q) / qbracket(2, q ** alpha) ** n
    rel = abs(res / lead - 1)
    return _bool_record("zeta:large-n", dict(n=n, alpha=alpha, q=q), rel <= 0.5, res, lead,
                        rel, 0.5)


def _hurwitz_x1(s, alpha, q, tol):
    lhs = zeta.zeta_hurwitz_weighted(s, 1, alpha, q, tol * 1e-3).value
    rhs = -zeta.zeta_weighted(s, alpha, q, tol * 1e-3).value / q
    return archimedean_record("zeta:hurwitz-x1", dict(s=s, alpha=alpha, q=q), lhs, rhs, tol)


def _l_zero(chi, alpha, q, tol):
    return zeta.l_zero_check(_chi(chi), 1.0, alpha, q, tol)


def _l_decomp(s, x, chi, alpha, q, tol):
    return zeta.l_decomposition_check(s, x, _chi(chi), alpha, q, tol)


def _eq21(s, x, a, F, chi, alpha, q, tol, printed=False):
    return zeta.check_partial_factored(s, x, a, F, _chi(chi), alpha, q, tol, printed)


def _eq24(s, x, chi, alpha, q, tol, printed=False):
    return zeta.check_partition(s, x, _chi(chi), alpha, q, tol=tol, printed=printed)


def _eq22(n, x, a, F, chi, alpha, q, tol):
    c = _chi(chi)
    lhs = zeta.partial_zeta(-n, x, a, F, c, alpha, q, tol * 1e-3).value
    rhs = zeta.partial_zeta_number_form(n, x, a, F, c, alpha, q)
    return archimedean_record("eq:22", dict(n=n, x=x, a=a, F=F, chi=chi, alpha=alpha, q=q),
                              lhs, rhs, tol)


def _eq23(s, x, a, F, chi, alpha, q, tol):
    c = _chi(chi)
    lhs = zeta.partial_zeta(s, x, a, F, c, alpha, q, tol * 1e-3).value
    rep = zeta.partial_zeta_binomial(s, x, a, F, c, alpha, q)
    return archimedean_record("eq:23", dict(s=s, x=x, a=a, F=F, chi=chi, alpha=alpha, q=q),
                              lhs, rep.value, tol, note=dict(terms=rep.terms_used))


# continuation -------------------------------------------------------------

def _continuation(n, w, alpha, q, tol, printed=False):
    return zeta.check_continuation(n, w, alpha, q, 1e-8, printed)


def _curve(steps, alpha, q, tol):
    grid = zeta.curve_sample(steps_s=steps, steps_w=steps, alpha=alpha, q=q)
    bad = sum(1 for _, _, v in grid if not math.isfinite(v))
    return _bool_record("continuation:curve", dict(steps=steps, alpha=alpha, q=q), bad == 0,
                        len(grid), steps * steps, bad, 0)


def _derivative(s, which, alpha, q, tol):
    h = 1e-5
    if which == "zeta":
        f = lambda t: zeta.zeta_weighted(t, alpha, q, 1e-15).value
        term = zeta.zeta_derivative(s, alpha, q, 1e-15)
    else:
        f = lambda t: zeta.continuation_number(t, alpha, q, 1e-15)
        term = zeta.continuation_number_derivative(s, alpha, q, 1e-15)
    central = (f(s + h) - f(s - h)) / (2 * h)
    return archimedean_record(f"derivative:{which}", dict(s=s, alpha=alpha, q=q), term,
                              central, 1e-6)


# p-adic -------------------------------------------------------------------

def _cauchy(p, k, top, precision, chi="trivial:1", alpha=1):
    q = measure.q_of(p, 1, precision)
    c = _chi(chi)
    sums = measure.riemann_sums(k, q, range(1, top + 1), 0, alpha, 1, c)
    out = []
    for m in range(1, top):
        params = dict(p=p, k=k, m=m, alpha=alpha, chi=chi, precision=precision)
        out.append(padic_record("padic:cauchy", params, sums[m], sums[m - 1], max(m - 2, 0)))
    closed, budget = measure.dirichlet_ab_padic(k, 0, c, alpha, 1, q)
    need = min(budget.surviving, top - 2)
    params = dict(p=p, k=k, level=top, alpha=alpha, chi=chi, precision=precision)
    out.append(padic_record("padic:riemann-closed", params, sums[-1], closed, need,
                            note=dict(loss=budget.loss_incurred)))
    return out


def _padic_character_shift(p, k, m, d, x, alpha, chi, precision):
    return measure.integral_shift_check(k, measure.q_of(p, 1, precision), m, d, x, alpha,
                                        _chi(chi))


def _additivity(p, k, alpha, beta, chi, a, n):
    mq = _mq(p, k, alpha, beta, chi)
    return measure.measure_additivity_check(measure.BallAddress(a, n, mq.d), mq)


def _int_x(p, k, alpha, beta, chi, level):
    mq = _mq(p, k, alpha, beta, chi)
    rec = measure.integral_X_check(mq, level)
    bound = measure.loss_bound(mq) + 2
    ledger = _bool_record("padic:loss-bound", dict(rec.parameters), rec.note["loss"] <= bound,
                          rec.note["loss"], bound, rec.note["loss"], bound)
    return [rec, ledger]


def _int_px(p, k, alpha, beta, chi, level, printed=False):
    return measure.integral_pX_check(_mq(p, k, alpha, beta, chi), level, printed)


def _twisted(p, k, alpha, beta, chi, c, which, level):
    return measure.twisted_check(_mq(p, k, alpha, beta, chi), c, which, level)


def _regularized(p, k, alpha, beta, chi, c, level, printed=None):
    return measure.regularized_identity_check(_mq(p, k, alpha, beta, chi), c, level, printed)


def _criterion(p, k, alpha, beta, a, n, printed=False):
    return measure.measure_criterion_check(a, n, _mq(p, k, alpha, beta), printed)


def _exp_log(p, offset, precision):
    q = measure.q_of(p, offset, precision)
    back = padic_exp(padic_log(q))
    return padic_record("padic:exp-log", dict(p=p, offset=offset, precision=precision),
                        back, q, precision)


CHECKS = {
    "euler:routes": _euler_routes,
    "euler:spot": _euler_spot,
    "shift": _shift,
    "thm12": _thm12,
    "eq8-printed": _generating_shift_printed,
    "euler:classical-limit": _classical_limit,
    "euler:classical-values": _classical_values,
    "dirichlet:routes": _dir_routes,
    "dirichlet:trivial": _dir_trivial,
    "eq:15": _character_shift,
    "distribution": _distribution,
    "stirling:bracket": _stirling_bracket,
    "thm:stirling": _stirling,
    "zeta:hurwitz-special": _hurwitz_special,
    "zeta:number-special": _number_special,
    "zeta:n0-discrepancy": _n0,
    "zeta:large-n": _large_n,
    "zeta:hurwitz-x1": _hurwitz_x1,
    "thm:l-zero": _l_zero,
    "thm:l-decomposition": _l_decomp,
    "eq:21": _eq21,
    "eq:22": _eq22,
    "eq:23": _eq23,
    "eq:24": _eq24,
    "continuation": _continuation,
    "continuation:curve": _curve,
    "derivative": _derivative,
    "padic:cauchy": _cauchy,
    "padic:eq15": _padic_character_shift,
    "measure:additivity": _additivity,
    "thm:integral-X": _int_x,
    "thm:integral-pX": _int_px,
    "twisted": _twisted,
    "thm:regularized": _regularized,
    "measure:criterion": _criterion,
    "padic:exp-log": _exp_log,
}

# checks whose runners take the suite tolerance
_TAKES_TOL = {name for name, fn in CHECKS.items() if "tol" in fn.__code__.co_varnames[
    :fn.__code__.co_argcount]}


# default grids --------------------------------------------------------------

def _euler_grid():
    pts = []
    for q in (0.1, 0.3, 0.5, 0.7, 0.9):
        for alpha in (1, 2, 3):
            for n in range(9):
                for x in (0, 0.5, 1, 2):
                    pts.append(("euler:routes", dict(q=q, alpha=alpha, n=n, x=x)))
    pts += [("euler:spot", dict(n=1, q="1/2", expected="-2/5")),
            ("euler:spot", dict(n=2, q="1/2", expected="-4/15"))]
    for k in range(1, 5):
        for n in range(4):
            pts.append(("shift", dict(k=k, n=n, alpha=2, q="1/2")))
    for k in (1, 2, 3, 4, 5, 6):
        for n in range(7):
            for alpha in (1, 2):
                for q in ("1/2", "3/10"):
                    pts.append(("thm12", dict(k=k, n=n, alpha=alpha, q=q)))
    pts += [("thm12", dict(k=2, n=2, alpha=2, q="1/2", printed=True)),
            ("thm12", dict(k=3, n=2, alpha=2, q="1/2", printed=True)),
            ("eq8-printed", dict(n=2, x=1, alpha=1, q="1/2"))]
    for n in range(1, 5):
        for x in ("0", "1/2", "1"):
            pts.append(("euler:classical-limit", dict(n=n, x=x)))
    pts += [("euler:classical-values", dict(n=1, x="0", expected="-1/2")),
            ("euler:classical-values", dict(n=3, x="0", expected="1/4"))]
    return pts


def _euler_random(r: random.Random, count):
    pts = []
    for _ in range(count):
        pts.append(("euler:routes", dict(q=round(r.uniform(0.1, 0.9), 6), alpha=r.randint(1, 3),
                                         n=r.randint(0, 8), x=round(r.uniform(0, 2), 6))))
    return pts


def _dirichlet_grid():
    pts = []
    for chi in ("trivial:1", "quadratic:3", "quadratic:5", "enum:5:2"):
        for n in range(4):
            pts.append(("dirichlet:routes", dict(n=n, x=0.5, chi=chi, alpha=2, beta=1, q=0.5)))
    for n in range(4):
        pts.append(("dirichlet:trivial", dict(n=n, x=0.5, alpha=2, beta=2, q=0.4)))
    for chi in ("trivial:3", "quadratic:3", "quadratic:5"):
        for n in range(4):
            for alpha in (1, 2):
                pts.append(("eq:15", dict(n=n, x=0.5, chi=chi, alpha=alpha, q=0.5)))
    for chi in ("trivial:3", "quadratic:3"):
        for n in range(5):
            for x in (0, 0.5):
                for alpha in (1, 2):
                    pts.append(("distribution", dict(n=n, x=x, chi=chi, alpha=alpha, beta=1,
                                                     q=0.5, variant="single-weight")))
                    pts.append(("distribution", dict(n=n, x=x, chi=chi, alpha=alpha, beta=2,
                                                     q=0.5, variant="alpha-beta")))
    pts += [("distribution", dict(n=2, x=0.5, chi="quadratic:3", alpha=1, beta=1, q=0.5,
                                  variant="single-weight", printed=True)),
            ("distribution", dict(n=2, x=0.5, chi="quadratic:3", alpha=1, beta=2, q=0.5,
                                  variant="alpha-beta", printed=True))]
    for q in (0.2, 0.3, 0.4, 0.5):
        for alpha in (1, 2):
            for k in range(4):
                for x in (0.25, 0.5, 1):
                    pts.append(("stirling:bracket", dict(k=k, x=x, alpha=alpha, q=q)))
    for n in range(4):
        pts.append(("thm:stirling", dict(n=n, x=0.5, chi="quadratic:3", alpha=1, q=0.4)))
    return pts


def _zeta_grid():
    pts = []
    for alpha in (1, 2):
        for n in range(9):
            for x in (0.5, 1, 2):
                pts.append(("zeta:hurwitz-special", dict(n=n, x=x, alpha=alpha, q=0.5)))
        for n in range(1, 9):
            pts.append(("zeta:number-special", dict(n=n, alpha=alpha, q=0.5)))
        pts.append(("zeta:n0-discrepancy", dict(alpha=alpha, q=0.5)))
        for q in (0.3, 0.5):
            pts.append(("zeta:large-n", dict(n=40, alpha=alpha, q=q)))
        for s in (-2, 0.5, 3):
            pts.append(("zeta:hurwitz-x1", dict(s=s, alpha=alpha, q=0.5)))
    for d in (3, 5, 7):
        for i in range(len(enumerate_characters(d))):
            pts.append(("thm:l-zero", dict(chi=f"enum:{d}:{i}", alpha=1, q=0.5)))
    for chi in ("trivial:3", "quadratic:3", "quadratic:5", "enum:5:1"):
        for s in (-2, 0.5, 2):
            pts.append(("thm:l-decomposition", dict(s=s, x=1.0, chi=chi, alpha=2, q=0.5)))
    pts += [("eq:21", dict(s=2, x=1.0, a=1, F=3, chi="quadratic:3", alpha=1, q=0.5,
                           printed=True)),
            ("eq:24", dict(s=2, x=1.0, chi="quadratic:3", alpha=1, q=0.5, printed=True))]
    return pts


def _partial_grid():
    pts = []
    for chi in ("trivial:3", "quadratic:3", "quadratic:5"):
        F = int(chi.split(":")[1])
        for s in (-2, 0.5, 2):
            for a in range(F):
                pts.append(("eq:21", dict(s=s, x=1.0, a=a, F=F, chi=chi, alpha=1, q=0.5)))
            pts.append(("eq:24", dict(s=s, x=1.0, chi=chi, alpha=1, q=0.5)))
        pts.append(("eq:21", dict(s=1.5, x=0.5, a=1, F=F, chi=chi, alpha=2, q=0.5,
                                  printed=True)))
        pts.append(("eq:24", dict(s=1.5, x=0.5, chi=chi, alpha=2, q=0.5, printed=True)))
        for n in range(4):
            pts.append(("eq:22", dict(n=n, x=1.0, a=1, F=F, chi=chi, alpha=1, q=0.5)))
    for s in (-2, 0.5, 2):
        for a in (1, 2):
            pts.append(("eq:23", dict(s=s, x=1.0, a=a, F=3, chi="quadratic:3", alpha=2, q=0.3)))
    return pts


def _padic_grid():
    pts = []
    for p, prec in ((3, 12), (5, 12), (7, 11)):
        for k in (1, 2, 3):
            pts.append(("padic:cauchy", dict(p=p, k=k, top=8, precision=prec)))
    for chi, d in (("trivial:1", 1), ("quadratic:3", 3)):
        for m in (2, 4):
            pts.append(("padic:eq15", dict(p=5, k=2, m=m, d=3 if d == 1 else d, x=0, alpha=1,
                                           chi=chi, precision=12)))
    for chi in ("trivial:1", "quadratic:3"):
        for k in (0, 1, 2):
            for beta in (1, 2):
                pts.append(("thm:integral-X", dict(p=5, k=k, alpha=1, beta=beta, chi=chi,
                                                   level=2)))
                pts.append(("thm:integral-pX", dict(p=5, k=k, alpha=1, beta=beta, chi=chi,
                                                    level=2)))
            for a, n in ((0, 0), (2, 1), (7, 2)):
                pts.append(("measure:additivity", dict(p=5, k=k, alpha=2, beta=1, chi=chi, a=a,
                                                       n=n)))
        for k in (1, 2):
            for which in ("X-twisted", "pX-twisted"):
                pts.append(("twisted", dict(p=5, k=k, alpha=1, beta=1, chi=chi, c=7,
                                            which=which, level=2)))
            pts.append(("thm:regularized", dict(p=5, k=k, alpha=1, beta=1, chi=chi, c=7,
                                                level=2)))
    pts += [
        ("thm:integral-pX", dict(p=5, k=2, alpha=1, beta=1, chi="trivial:1", level=2,
                                 printed=True)),
        ("thm:regularized", dict(p=5, k=2, alpha=1, beta=1, chi="trivial:1", c=7, level=2,
                                 printed="operator")),
        ("thm:regularized", dict(p=5, k=1, alpha=1, beta=1, chi="trivial:1", c=7, level=2,
                                 printed="display")),
    ]
    for k in (1, 2):
        for n in (1, 2):
            pts.append(("measure:criterion", dict(p=5, k=k, alpha=1, beta=1, a=3, n=n)))
    pts.append(("measure:criterion", dict(p=5, k=1, alpha=1, beta=1, a=3, n=2, printed=True)))
    for p in (3, 5, 7):
        pts.append(("padic:exp-log", dict(p=p, offset=1, precision=12)))
    return pts


def _continuation_grid():
    pts = []
    for alpha in (1, 2):
        for n in range(1, 7):
            for w in (-0.5, 0.0, 0.5):
                pts.append(("continuation", dict(n=n, w=w, alpha=alpha, q=0.5)))
    pts.append(("continuation", dict(n=2, w=0.5, alpha=1, q=0.5, printed=True)))
    pts.append(("continuation:curve", dict(steps=41, alpha=1, q=0.5)))
    for s in (0.5, 1.5, 2.5, 3.5):
        pts.append(("derivative", dict(s=s, which="zeta", alpha=1, q=0.5)))
    for s in (0.5, 1.5):
        pts.append(("derivative", dict(s=s, which="continuation", alpha=2, q=0.5)))
    return pts


def default_grid(suite: str, seed: int = 0, extra_random: int = 4) -> list:
    r = random.Random(seed)
    if suite == "euler":
        return _euler_grid() + _euler_random(r, extra_random)
    if suite == "dirichlet":
        return _dirichlet_grid()
    if suite == "zeta":
        return _zeta_grid()
    if suite == "partial-zeta":
        return _partial_grid()
    if suite == "padic":
        return _padic_grid()
    if suite == "continuation":
        return _continuation_grid()
    if suite == "all":
        return [pt for s in SUITES for pt in default_grid(s, seed, extra_random)]
    raise ValueError(f"unknown suite {suite!r}")


def _validate(grid) -> None:
    for pt in grid:
        if not (isinstance(pt, (tuple, list)) and len(pt) == 2 and isinstance(pt[1], dict)):
            raise ValueError(f"malformed grid point {pt!r}")
        if pt[0] not in CHECKS:
            raise ValueError(f"unknown check {pt[0]!r}")


def run_point(point, tol: float = 1e-10) -> list:
    name, params = point
    kw = dict(params)
    if name in _TAKES_TOL:
        kw.setdefault("tol", tol)
    try:
        out = CHECKS[name](**kw)
    except TypeError as exc:
        raise ValueError(f"malformed grid point {point!r}: {exc}") from None
    return out if isinstance(out, list) else [out]


def _run_chunk(args):
    points, tol = args
    return [run_point(pt, tol) for pt in points]


def run_suite(config: SuiteConfig) -> Report:
    grid = (default_grid(config.suite, config.seed, config.extra_random)
            if config.grid is None else list(config.grid))
    _validate(grid)
    if config.jobs == 1 or len(grid) < 2:
        results = _run_chunk((grid, config.tol))
    else:
        # contiguous shards; map() returns them in submission order
        size = math.ceil(len(grid) / config.jobs)
        chunks = [(grid[i:i + size], config.tol) for i in range(0, len(grid), size)]
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = [r for chunk in pool.map(_run_chunk, chunks) for r in chunk]
    records = [rec for recs in results for rec in recs]
    return Report(config.suite, config.seed, records)
