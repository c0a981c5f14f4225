"""Weighted q-Euler numbers and polynomials.

Three independent routes evaluate the same polynomial ``E~_{n,q}(x|alpha)``:

* :func:`euler_poly_closed` -- finite binomial sum (exact for rational q),
* :func:`euler_poly_series` -- truncated alternating series with a tail bound,
* :func:`euler_poly_umbral` -- assembly from the numbers ``E~_{k,q}(alpha)``.

All routes accept ``float``, :class:`~fractions.Fraction` or ``mpmath.mpf``
values of ``q``; the number type of the result follows ``q``.  Double
precision loses roughly ``n*log10(1/(1-q**alpha))`` digits to cancellation
in the closed form, so use mpmath when q is close to 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .numkit import QParam, _raw, binom, qbracket, qpow
from .records import TruncationReport, archimedean_record

MAX_TERMS = 10 ** 6


@dataclass(frozen=True)
class WeightParams:
    alpha: int = 1
    beta: int = 1

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("weights must be nonnegative integers")


def _check_weight(n: int, alpha: int) -> None:
    if n < 0:
        raise ValueError("n must be a natural number")
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if alpha == 0 and n >= 1:
        # the 1/[alpha:q]^n prefactor has no value at alpha = 0
        raise ValueError("alpha = 0 is degenerate for n >= 1")


def _real_q(q):
    q = _raw(q)
    if not QParam.of(q).is_real:
        raise ValueError("series routes need a real q in (0, 1)")
    return q


def euler_poly_closed(n: int, x, alpha: int = 1, q=0.5):
    """``E~_{n,q}(x|alpha)`` from the finite binomial sum.

    >>> from fractions import Fraction
    >>> euler_poly_closed(1, 0, 1, Fraction(1, 2))
    Fraction(-2, 5)
    """
    _check_weight(n, alpha)
    q = _raw(q)
    total = 0
    for l in range(n + 1):
        total += binom(n, l) * (-1) ** l * qpow(q, alpha * l * x) / (1 + q ** (alpha * l + 1))
    return (1 + q) / (1 - q ** alpha) ** n * total


def euler_number(n: int, alpha: int = 1, q=0.5):
    """Weighted q-Euler number, the polynomial at ``x = 0``."""
    return euler_poly_closed(n, 0, alpha, q)


def euler_poly_series(n: int, x, alpha: int = 1, q=0.5, tol=1e-12,
                      max_terms: int = MAX_TERMS) -> TruncationReport:
    """Coefficient series ``[2:q] sum_m (-q)^m [m+x:q^alpha]^n``.

    The tail after ``M`` terms is at most ``[2:q] B^n q^M / (1-q)`` with
    ``B = 2/(1-q^alpha)`` bounding every bracket.
    """
    _check_weight(n, alpha)
    q = _real_q(q)
    if x < 0:
        raise ValueError("series route needs x >= 0")
    return _alternating_bracket_series(n, x, alpha, q, q, tol, max_terms)


def _alternating_bracket_series(n, x, alpha, q, weight, tol, max_terms, chi=None):
    """``[2:w] sum_m (-w)^m chi(m) [m+x:q^alpha]^n`` with ``w`` the sign weight base."""
    qa = q ** alpha
    base = qbracket(x, qa) if x != 0 else 0 * q
    step = qpow(qa, x)
    coef = (1 + weight) * (2 / (1 - qa)) ** n / (1 - weight)
    total = 0 * q
    sign = 1 + 0 * q
    bm = 0 * q
    pm = 1 + 0 * q
    bound = coef
    m = 0
    while m < max_terms:
        c = 1 if chi is None else chi(m)
        if c != 0:
            total += c * sign * (base + step * bm) ** n
        m += 1
        sign *= -weight
        bm += pm
        pm *= qa
        bound = coef * abs(sign)
        if bound <= tol:
            break
    value = (1 + weight) * total
    return TruncationReport(value, m, float(bound), bool(bound <= tol))


def euler_poly_umbral(n: int, x, alpha: int = 1, q=0.5):
    """Polynomial assembled from the numbers: ``sum_k C(n,k) q^{alpha k x} E~_k [x:q^alpha]^{n-k}``."""
    _check_weight(n, alpha)
    q = _raw(q)
    qa = q ** alpha
    shift = qpow(qa, x)
    b = qbracket(x, qa) if x != 0 else 0 * q
    total = 0
    for k in range(n + 1):
        total += binom(n, k) * shift ** k * euler_number(k, alpha, q) * b ** (n - k)
    return total


def euler_ab_poly(n: int, x, alpha: int = 1, beta: int = 1, q=0.5):
    """(alpha, beta)-weighted polynomial, closed form.

    Fermionic weight ``-q^beta`` replaces ``-q``; ``beta = 1`` gives
    :func:`euler_poly_closed`.
    """
    _check_weight(n, alpha)
    if beta < 1:
        raise ValueError("beta must be >= 1")
    q = _raw(q)
    total = 0
    for j in range(n + 1):
        total += binom(n, j) * (-1) ** j * qpow(q, alpha * j * x) / (1 + q ** (alpha * j + beta))
    return (1 + q ** beta) / (1 - q ** alpha) ** n * total


def euler_ab_series(n: int, x, alpha: int = 1, beta: int = 1, q=0.5, tol=1e-12,
                    max_terms: int = MAX_TERMS) -> TruncationReport:
    """``[2:q^beta] sum_m (-q^beta)^m [m+x:q^alpha]^n``."""
    _check_weight(n, alpha)
    q = _real_q(q)
    if beta < 1:
        raise ValueError("beta must be >= 1")
    return _alternating_bracket_series(n, x, alpha, q, q ** beta, tol, max_terms)


def _classical_values(n: int, x, half) -> list:
    # (E(x) + 1)^n + E_n(x) = 2 x^n, solved for E_n(x)
    vals = []
    for m in range(n + 1):
        acc = sum(binom(m, k) * vals[k] for k in range(m))
        vals.append(x ** m - acc * half)
    return vals


@lru_cache(maxsize=None)
def _classical_exact(n: int, x: Fraction) -> Fraction:
    return _classical_values(n, x, Fraction(1, 2))[n]


def classical_euler_poly(n: int, x):
    """Classical Euler polynomial ``E_n(x)``; exact for rational ``x``."""
    if isinstance(x, (int, Fraction)):
        return _classical_exact(n, Fraction(x))
    return _classical_values(n, x, 0.5 if isinstance(x, float) else mpmath.mpf(1) / 2)[n]


def classical_limit_gaps(n: int, x, exponents=(1, 2, 3, 4), dps: int = 80) -> list[float]:
    """``|E~_{n,q}(x|1) - E_n(x)|`` along ``q = 1 - 10**-j``.

    Run in mpmath: the closed form divides by ``(1-q)^n``.
    """
    x = Fraction(x)
    target = classical_euler_poly(n, x)
    out = []
    with mpmath.workdps(dps):
        xm = mpmath.mpf(x.numerator) / x.denominator
        tm = mpmath.mpf(target.numerator) / target.denominator
        for j in exponents:
            q = 1 - mpmath.mpf(10) ** (-j)
            out.append(float(abs(euler_poly_closed(n, xm, 1, q) - tm)))
    return out


def _bracket_alt_sum(k: int, n: int, alpha: int, q):
    """``[2:q] sum_{l<k} (-1)^l q^l [l:q^alpha]^n``."""
    qa = q ** alpha
    return (1 + q) * sum((-1) ** l * q ** l * qbracket(l, qa) ** n for l in range(k))


def check_shift_identity(k: int, n: int, alpha: int, q, tol=1e-12):
    """Shift by an integer ``k``: the polynomial at ``k`` against the number.

    Even ``k``: ``E~_n - q^k E~_n(k)``; odd ``k``: ``E~_n + q^k E~_n(k)``; both
    equal the finite alternating bracket sum.
    """
    q = _raw(q)
    sgn = -1 if k % 2 == 0 else 1
    lhs = euler_number(n, alpha, q) + sgn * q ** k * euler_poly_closed(n, k, alpha, q)
    rhs = _bracket_alt_sum(k, n, alpha, q)
    ident = "eq:6" if k % 2 == 0 else "eq:7"
    return archimedean_record(ident, dict(k=k, n=n, alpha=alpha, q=q), lhs, rhs, tol)


def _recurrence_rhs(k: int, n: int, alpha: int, q, sign: int, printed: bool):
    qa = q ** alpha
    lead = q ** (k * (1 - alpha + alpha * n)) if printed else q ** (k * (1 + alpha * n))
    tail_scale = q ** (k * (1 - alpha)) if printed else q ** k
    bk = qbracket(k, qa)
    tail = sum(binom(n, l) * q ** (alpha * l * k) * euler_number(l, alpha, q) * bk ** (n - l)
               for l in range(n))
    if sign < 0:
        return (1 - lead) * euler_number(n, alpha, q) - tail_scale * tail
    return (lead + 1) * euler_number(n, alpha, q) + tail_scale * tail


def check_even_identity(k: int, n: int, alpha: int = 1, q=Fraction(1, 2), tol=1e-12,
                        printed: bool = False):
    """Recurrence for even ``k`` linking the bracket sum to the numbers ``E~_l``.

    ``printed=True`` evaluates the variant carrying ``q^{k(1-alpha)}``, which
    inherits a spurious ``q^{-alpha x}`` rescaling and fails; it is kept for
    the discrepancy ledger.
    """
    if k < 2 or k % 2:
        raise ValueError("k must be an even positive integer")
    _check_weight(n, alpha)
    q = _raw(q)
    lhs = _bracket_alt_sum(k, n, alpha, q)
    rhs = _recurrence_rhs(k, n, alpha, q, -1, printed)
    ident = "thm1-printed" if printed else "thm1"
    return archimedean_record(ident, dict(k=k, n=n, alpha=alpha, q=q), lhs, rhs, tol,
                              expect_fail=printed)


def check_odd_identity(k: int, n: int, alpha: int = 1, q=Fraction(1, 2), tol=1e-12,
                       printed: bool = False):
    """Odd-``k`` companion of :func:`check_even_identity` (plus-sign combination)."""
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be an odd positive integer")
    _check_weight(n, alpha)
    q = _raw(q)
    lhs = _bracket_alt_sum(k, n, alpha, q)
    rhs = _recurrence_rhs(k, n, alpha, q, +1, printed)
    ident = "thm2-printed" if printed else "thm2"
    return archimedean_record(ident, dict(k=k, n=n, alpha=alpha, q=q), lhs, rhs, tol,
                              expect_fail=printed)
