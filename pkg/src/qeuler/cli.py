"""``qeuler`` command line.

Every subcommand shares the global flags, so they may appear before or
after the subcommand.  ``--config file.toml`` supplies defaults for any flag
(keys are flag names without dashes, ``q-offset`` or ``q_offset``); flags on
the command line win.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import dirichlet, euler, harness, measure, zeta
from .characters import parse_character
from .emit import emit, padic_to_dict
from .padic import PAdicInt, padic_ord

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib


def _number(text: str):
    """``"1/2"`` parses as an exact rational, anything else as a float."""
    if "/" in text:
        return Fraction(text)
    return float(text)


def _rational(v):
    # --x arrives as float or Fraction; p-adic commands need it exact
    r = Fraction(v)
    return r.numerator if r.denominator == 1 else r


def _pair(text: str) -> tuple[float, float]:
    lo, hi = (float(t) for t in text.split(","))
    return lo, hi


def _common(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies suppress their defaults so flags given before the
    # subcommand are not overwritten
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global flags")
    g.add_argument("--q", type=_number, default=0.5, help="real q in (0,1); a/b for exact rationals")
    g.add_argument("--alpha", type=int, default=1)
    g.add_argument("--beta", type=int, default=1)
    g.add_argument("--n", type=int, default=1)
    g.add_argument("--k", type=int, default=None, help="integrand power (p-adic); defaults to --n")
    g.add_argument("--x", type=_number, default=0)
    g.add_argument("--s", type=float, default=2.0)
    g.add_argument("--char", default="trivial:1", help="trivial:d, quadratic:d or table:d:v0,...")
    g.add_argument("--tol", type=float, default=1e-10)
    g.add_argument("--prime", "--p", dest="prime", type=int, default=5)
    g.add_argument("--precision", type=int, default=12)
    g.add_argument("--q-offset", type=int, default=1, help="p-adic q = 1 + offset*p")
    g.add_argument("--level", type=int, default=2)
    g.add_argument("--out", default=None, help="write output here instead of stdout")
    g.add_argument("--format", choices=("json", "csv", "table"), default=None)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--jobs", type=int, default=1)
    g.add_argument("--config", default=None, help="TOML file with flag defaults")
    if suppress:
        for action in p._actions:
            action.default = argparse.SUPPRESS
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    parser = argparse.ArgumentParser(prog="qeuler", parents=[_common(suppress=False)],
                                     description="Weighted q-Euler numbers, q-zeta functions "
                                                 "and p-adic q-measures.")
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", parents=[common], help="evaluate one object")
    comp.add_argument("kind", choices=("number", "poly", "dirichlet", "zeta", "hurwitz",
                                       "lfunction", "partial-zeta", "continuation"))
    comp.add_argument("--method", default=None,
                      help="closed|series|umbral (Euler kinds) or direct|factored|binomial")
    comp.add_argument("--a", type=int, default=0, help="residue class for partial-zeta")
    comp.add_argument("--F", type=int, default=None, help="modulus for partial-zeta")

    curve = sub.add_parser("curve", parents=[common], help="continuation grid as CSV")
    curve.add_argument("--s-range", type=_pair, default=(1.0, 2.0))
    curve.add_argument("--w-range", type=_pair, default=(-0.5, 0.5),
                       help="write negative ranges as --w-range=-0.5,0.5")
    curve.add_argument("--steps", default="41", help="N or Ns,Nw")

    pad = sub.add_parser("padic", parents=[common], help="p-adic integrals and digits")
    pad.add_argument("action", choices=("integrate", "measure", "ord", "digits"))
    pad.add_argument("--domain", choices=("X", "pX"), default="X")
    pad.add_argument("--ball", default=None, help="a,n for the ball a + d p^n Z_p")

    ver = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ver.add_argument("suite", choices=harness.SUITES + ("all",))
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    known, _ = pre.parse_known_args(argv)
    if known.config is None:
        return
    with open(known.config, "rb") as fh:
        raw = tomllib.load(fh)
    defaults = {k.replace("-", "_"): v for k, v in raw.items()}
    for key in ("q", "x"):
        if isinstance(defaults.get(key), str):
            defaults[key] = _number(defaults[key])
    parser.set_defaults(**defaults)


# commands -------------------------------------------------------------------

def _report(rep, method: str) -> dict:
    return dict(value=rep.value, method=method, terms_used=rep.terms_used,
                tail_bound=rep.tail_bound, converged=rep.converged)


def _exact(value, method: str, terms: int) -> dict:
    return dict(value=value, method=method, terms_used=terms, tail_bound=0.0)


def _euler_family(args, chi=None) -> dict:
    method = args.method or "closed"
    n, x, al, be, q = args.n, args.x, args.alpha, args.beta, args.q
    if chi is None:
        chi = dirichlet.TRIVIAL
    if method == "series":
        rep = dirichlet.dirichlet_euler_series(n, x, chi, al, be, float(q), tol=args.tol)
        return _report(rep, method)
    if method == "closed":
        if chi.modulus == 1:
            return _exact(euler.euler_ab_poly(n, x, al, be, q), method, n + 1)
        return _exact(dirichlet.dirichlet_euler_closed(n, x, chi, al, be, q), method,
                      (n + 1) * chi.modulus)
    if method == "umbral":
        return _exact(dirichlet.dirichlet_euler_umbral(n, x, chi, al, be, q), method, n + 1)
    raise ValueError(f"unknown method {method!r}")


def cmd_compute(args) -> dict:
    kind = args.kind
    chi = parse_character(args.char)
    params = dict(n=args.n, x=args.x, alpha=args.alpha, beta=args.beta, q=args.q, s=args.s,
                  char=chi.label())
    if kind == "number":
        args.x = 0
        out = _euler_family(args)
    elif kind == "poly":
        out = _euler_family(args)
    elif kind == "dirichlet":
        out = _euler_family(args, chi)
    elif kind == "zeta":
        out = _report(zeta.zeta_weighted(args.s, args.alpha, float(args.q), args.tol), "series")
    elif kind == "hurwitz":
        out = _report(zeta.zeta_hurwitz_weighted(args.s, float(args.x), args.alpha,
                                                 float(args.q), args.tol), "series")
    elif kind == "lfunction":
        out = _report(zeta.l_function(args.s, float(args.x), chi, args.alpha, float(args.q),
                                      args.tol), "series")
    elif kind == "partial-zeta":
        F = chi.modulus if args.F is None else args.F
        method = args.method or "direct"
        s, x, q = args.s, float(args.x), float(args.q)
        if method == "direct":
            out = _report(zeta.partial_zeta(s, x, args.a, F, chi, args.alpha, q, args.tol),
                          method)
        elif method == "factored":
            out = dict(value=zeta.partial_zeta_factored(s, x, args.a, F, chi, args.alpha, q,
                                                        args.tol), method=method)
        elif method == "binomial":
            out = _report(zeta.partial_zeta_binomial(s, x, args.a, F, chi, args.alpha, q),
                          method)
        else:
            raise ValueError(f"unknown method {method!r}")
        params.update(a=args.a, F=F)
    elif kind == "continuation":
        out = dict(value=zeta.continuation_poly(args.s, float(args.x), args.alpha,
                                                float(args.q)), method="gamma-ratio")
    else:  # pragma: no cover - argparse restricts the choices
        raise ValueError(kind)
    out["parameters"] = params
    return out


def cmd_curve(args):
    steps = [int(t) for t in args.steps.split(",")]
    ns, nw = (steps[0], steps[0]) if len(steps) == 1 else steps
    return zeta.curve_sample(*args.s_range, *args.w_range, ns, nw, args.alpha, float(args.q))


def _mq(args) -> measure.MeasureQuery:
    k = args.n if args.k is None else args.k
    q = measure.q_of(args.prime, args.q_offset, args.precision)
    return measure.MeasureQuery(k, q, args.alpha, args.beta, parse_character(args.char))


def cmd_padic(args) -> dict:
    p = args.prime
    if args.action == "ord":
        return dict(prime=p, x=args.x, ord=padic_ord(_rational(args.x), p))
    if args.action == "digits":
        return dict(value=padic_to_dict(PAdicInt.of(_rational(args.x), p,
                                                    args.precision)))
    mq = _mq(args)
    params = dict(prime=p, q_offset=args.q_offset, k=mq.k, alpha=mq.alpha, beta=mq.beta,
                  char=mq.character.label())
    if args.action == "measure":
        if args.ball is None:
            raise ValueError("padic measure needs --ball a,n")
        a, n = (int(t) for t in args.ball.split(","))
        value, budget = measure.measure_on_ball(measure.BallAddress(a, n, mq.d), mq)
        params.update(ball=[a, n])
        return dict(value=padic_to_dict(value, budget), parameters=params)
    if args.domain == "X":
        value, budget = measure.integrate_over_X(mq, args.level)
    else:
        value, budget = measure.integrate_over_pX(mq, args.level)
    params.update(level=args.level, domain=args.domain)
    return dict(value=padic_to_dict(value, budget), parameters=params)


def _write(data: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
        args = parser.parse_args(argv)
        if args.command == "verify":
            rep = harness.run_suite(harness.SuiteConfig(args.suite, tol=args.tol,
                                                        seed=args.seed, jobs=args.jobs))
            fmt = args.format or ("json" if args.out else "table")
            text = rep.to_json() if fmt == "json" else rep.table()
            _write(text.encode(), args.out)
            return rep.exit_code
        if args.command == "compute":
            data = emit(cmd_compute(args), args.format or "json")
        elif args.command == "curve":
            data = emit(cmd_curve(args), args.format or "csv")
        else:
            data = emit(cmd_padic(args), "json")
        _write(data, args.out)
        return 0
    except (ValueError, ZeroDivisionError, OSError, tomllib.TOMLDecodeError) as exc:
        print(f"qeuler: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
