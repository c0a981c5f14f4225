"""Dirichlet-type weighted q-Euler numbers and polynomials.

The general object is the character twist with weights ``(alpha, beta)``::

    E~^chi_{n,q}(x|alpha:beta) = [2:q^beta] sum_m (-q^beta)^m chi(m) [x+m:q^alpha]^n

``beta = 1`` is the single-weight family.  Everything takes the modulus of
the character as ``d``; only odd ``d`` occur.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial, log

from .characters import DirichletCharacter, trivial_character
from .euler import MAX_TERMS, _alternating_bracket_series, _check_weight, _real_q, euler_ab_poly
from .numkit import _raw, binom, qbracket, qpow, stirling2
from .records import TruncationReport, VerificationRecord, archimedean_record

TRIVIAL = trivial_character(1)


@dataclass(frozen=True)
class DirichletEulerQuery:
    n: int
    x: object = 0
    character: DirichletCharacter = field(default=TRIVIAL)
    alpha: int = 1
    beta: int = 1
    q: object = 0.5


def _check(n, alpha, beta, chi):
    _check_weight(n, alpha)
    if beta < 1:
        raise ValueError("beta must be >= 1")
    if chi.modulus % 2 == 0:
        raise ValueError("character modulus must be odd")


def dirichlet_euler_series(n: int, x=0, chi: DirichletCharacter = TRIVIAL, alpha: int = 1,
                           beta: int = 1, q=0.5, tol=1e-12,
                           max_terms: int = MAX_TERMS) -> TruncationReport:
    """Truncated defining series; tail bound as for the untwisted series (``|chi| <= 1``)."""
    _check(n, alpha, beta, chi)
    q = _real_q(q)
    if x < 0:
        raise ValueError("series route needs x >= 0")
    return _alternating_bracket_series(n, x, alpha, q, q ** beta, tol, max_terms, chi=chi)


def dirichlet_euler_closed(n: int, x=0, chi: DirichletCharacter = TRIVIAL, alpha: int = 1,
                           beta: int = 1, q=0.5):
    """Finite double sum obtained by splitting the series into classes mod ``d``.

    >>> from fractions import Fraction
    >>> dirichlet_euler_closed(1, 0, q=Fraction(1, 2))
    Fraction(-2, 5)
    """
    _check(n, alpha, beta, chi)
    q = _raw(q)
    d = chi.modulus
    total = 0
    for j in range(n + 1):
        e = alpha * j + beta
        inner = sum(chi(l) * (-1) ** l * q ** (e * l) for l in range(d))
        total += binom(n, j) * (-1) ** j * qpow(q, alpha * j * x) * inner / (1 + q ** (e * d))
    return (1 + q ** beta) / (1 - q ** alpha) ** n * total


def dirichlet_euler_number(n: int, chi: DirichletCharacter = TRIVIAL, alpha: int = 1,
                           beta: int = 1, q=0.5):
    return dirichlet_euler_closed(n, 0, chi, alpha, beta, q)


def dirichlet_euler_umbral(n: int, x=0, chi: DirichletCharacter = TRIVIAL, alpha: int = 1,
                           beta: int = 1, q=0.5):
    """``sum_k C(n,k) q^{alpha k x} E~^chi_k [x:q^alpha]^{n-k}`` built from the numbers."""
    _check(n, alpha, beta, chi)
    q = _raw(q)
    qa = q ** alpha
    shift = qpow(qa, x)
    b = qbracket(x, qa) if x != 0 else 0 * q
    return sum(binom(n, k) * shift ** k * dirichlet_euler_number(k, chi, alpha, beta, q)
               * b ** (n - k) for k in range(n + 1))


def check_character_shift(n: int, x=0, chi: DirichletCharacter = TRIVIAL, alpha: int = 1, q=0.5,
               d: int | None = None, tol=1e-10) -> VerificationRecord:
    """Shift relation for ``f(m) = chi(m)[x+m:q^alpha]^n`` and odd ``d``.

    ``q^d I(f(.+d)) + I(f) = [2:q] sum_{l<d} (-1)^{d-1-l} q^l f(l)`` where ``I``
    is the fermionic series; both ``I`` terms are summed directly.
    """
    q = _real_q(q)
    d = chi.modulus if d is None else d
    if d % 2 == 0 or d % chi.modulus:
        raise ValueError("d must be an odd multiple of the character modulus")
    qa = q ** alpha

    def f(m):
        return chi(m) * qbracket(x + m, qa) ** n

    shifted = _alternating_bracket_series(n, x + d, alpha, q, q, tol * 1e-3, MAX_TERMS, chi=chi)
    plain = _alternating_bracket_series(n, x, alpha, q, q, tol * 1e-3, MAX_TERMS, chi=chi)
    lhs = q ** d * shifted.value + plain.value
    rhs = (1 + q) * sum((-1) ** (d - 1 - l) * q ** l * f(l) for l in range(d))
    return archimedean_record("eq:15", dict(n=n, x=x, d=d, alpha=alpha, q=q,
                                            chi=chi.label()), lhs, rhs, tol)


def distribution_rhs(n: int, x, chi: DirichletCharacter, alpha: int = 1, beta: int = 1, q=0.5,
                     *, exponent: int | None = None, sign_base=None):
    """``([d:q^alpha]^n/[d:-q^beta]) sum_a (-q^beta)^a chi(a) E~_{n,q^d}((x+a)/d|alpha:beta)``.

    ``exponent`` and ``sign_base`` override the bracket exponent and the base of
    the sign weight; they exist to evaluate misprinted variants.
    """
    q = _raw(q)
    d = chi.modulus
    e = n if exponent is None else exponent
    w = q ** beta if sign_base is None else sign_base
    qd = q ** d
    pref = qbracket(d, q ** alpha) ** e / qbracket(d, -q ** beta)
    total = 0
    for a in range(d):
        if chi(a) == 0:
            continue
        y = (x + a) / d
        total += (-w) ** a * chi(a) * euler_ab_poly(n, y, alpha, beta, qd)
    return pref * total


def distribution_check(n: int, x=0, chi: DirichletCharacter = TRIVIAL, alpha: int = 1,
                       beta: int = 1, q=0.5, variant: str = "single-weight",
                       printed: bool = False, tol=1e-10) -> VerificationRecord:
    """Distribution relation over the classes mod ``d``; left side by the series.

    ``printed=True`` drops the exponent on ``[d:q^alpha]`` (single weight) or
    weights the classes by ``(-q)^a`` instead of ``(-q^beta)^a`` (alpha-beta).
    """
    if variant == "single-weight":
        beta = 1
        ident = "thm-distribution-printed" if printed else "thm:distribution"
        kw = dict(exponent=1) if printed else {}
    elif variant == "alpha-beta":
        ident = "thm-distribution-ab-printed" if printed else "thm:distribution-ab"
        kw = dict(sign_base=_raw(q)) if printed else {}
    else:
        raise ValueError(f"unknown variant {variant!r}")
    lhs = dirichlet_euler_series(n, x, chi, alpha, beta, q, tol=tol * 1e-3).value
    rhs = distribution_rhs(n, x, chi, alpha, beta, q, **kw)
    params = dict(n=n, x=x, alpha=alpha, beta=beta, q=q, chi=chi.label())
    return archimedean_record(ident, params, lhs, rhs, tol, expect_fail=printed)


def stirling_bracket_power(k: int, x, alpha: int = 1, q=0.5, cap: int = 40) -> float:
    """``[x:q^alpha]^k`` through the Stirling/negative-binomial double series.

    ``(1-q^alpha)^{-k} = sum_m C(k+m-1,m) q^{alpha m}`` and
    ``(q^{alpha x}-1)^k = k! sum_j S(j,k) t^j/j!`` with ``t = alpha x log q``;
    both indices stop at ``cap``.
    """
    if k == 0:
        return 1.0
    q = float(_raw(q))
    if not 0 < q < 1:
        raise ValueError("needs a real q in (0, 1)")
    t = alpha * float(x) * log(q)
    geo = sum(comb(k + m - 1, m) * q ** (alpha * m) for m in range(cap + 1))
    exp_part = sum(stirling2(j, k) * t ** j / factorial(j) for j in range(k, cap + 1))
    return factorial(k) * (-1) ** k * geo * exp_part


def stirling_expansion(n: int, x, chi: DirichletCharacter = TRIVIAL, alpha: int = 1,
                       beta: int = 1, q=0.5, cap: int = 40) -> float:
    """Polynomial from the numbers with every bracket power replaced by its truncated series."""
    q = float(_raw(q))
    qa1 = q ** alpha - 1
    total = 0.0
    for l in range(n + 1):
        num = dirichlet_euler_number(l, chi, alpha, beta, q)
        inner = sum(binom(l, j) * qa1 ** j * stirling_bracket_power(n - l + j, x, alpha, q, cap)
                    for j in range(l + 1))
        total += binom(n, l) * num * inner
    return total


def stirling_expansion_check(n: int, x, chi: DirichletCharacter = TRIVIAL, alpha: int = 1,
                             beta: int = 1, q=0.5, cap: int = 40, tol=1e-8) -> VerificationRecord:
    lhs = dirichlet_euler_closed(n, x, chi, alpha, beta, float(_raw(q)))
    rhs = stirling_expansion(n, x, chi, alpha, beta, q, cap)
    params = dict(n=n, x=x, alpha=alpha, beta=beta, q=q, cap=cap, chi=chi.label())
    return archimedean_record("thm:stirling", params, lhs, rhs, tol)
