"""Fermionic p-adic q-integrals and the Dirichlet-type (alpha, beta) measure.

Conventions
-----------
``q`` is a :class:`~qeuler.padic.PAdicInt` with ``q = 1 mod p``.  Balls of
``X_d`` at level ``n`` are ``a + N' Z_p`` with ``N' = d p^n``.  On such a ball

    mu(a) = ([N':q^alpha]^k / [N':-q^beta]) chi(a) (-q^beta)^a E~_{k,Q}(a/N'|alpha:beta),

``Q = q^{N'}``.  Since ``[N':q^alpha]^k / (1-Q^alpha)^k = (1-q^alpha)^{-k}``
every measure value is ``numerator / (1-q^alpha)^k`` with a p-integral
numerator; the single division at the end is the only source of lost digits.

Riemann sums are evaluated on residue tables held in numpy ``int64`` arrays
whenever ``p^N`` is small enough for products to fit, else in object arrays.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .characters import DirichletCharacter, require_sign_valued, trivial_character
from .numkit import binom
from .padic import (
    PAdicInt,
    PAdicPrecisionBudget,
    divide_tracking_loss,
    padic_inv,
    padic_power,
)
from .records import VerificationRecord, padic_record

TRIVIAL = trivial_character(1)
_INT64_SAFE = 3_037_000_499  # floor(sqrt(2**63 - 1))


@dataclass(frozen=True)
class BallAddress:
    base: int
    level: int
    modulus_factor: int = 1

    def __post_init__(self):
        if self.level < 0 or self.modulus_factor < 1:
            raise ValueError("level must be >= 0 and modulus_factor >= 1")

    def radius(self, p: int) -> int:
        return self.modulus_factor * p ** self.level

    def check(self, p: int) -> None:
        if not 0 <= self.base < self.radius(p):
            raise ValueError(f"base {self.base} outside [0, {self.radius(p)})")
        if math.gcd(self.modulus_factor, p) != 1:
            raise ValueError("modulus factor must be prime to p")

    def children(self, p: int) -> list["BallAddress"]:
        r = self.radius(p)
        return [BallAddress(self.base + b * r, self.level + 1, self.modulus_factor)
                for b in range(p)]


@dataclass(frozen=True)
class MeasureQuery:
    k: int
    q: PAdicInt
    alpha: int = 1
    beta: int = 1
    character: DirichletCharacter = field(default=TRIVIAL)

    def __post_init__(self):
        p = self.q.prime
        if self.q.residue % p != 1 % p:
            raise ValueError("q must be congruent to 1 mod p")
        if self.k < 0 or self.alpha < 1 or self.beta < 1:
            raise ValueError("need k >= 0 and alpha, beta >= 1")
        require_sign_valued(self.character, p)

    @property
    def prime(self) -> int:
        return self.q.prime

    @property
    def d(self) -> int:
        return self.character.modulus

    def with_q(self, q: PAdicInt) -> "MeasureQuery":
        return MeasureQuery(self.k, q, self.alpha, self.beta, self.character)


def q_of(p: int, offset: int = 1, precision: int = 12) -> PAdicInt:
    """``q = 1 + offset*p`` as a truncated p-adic integer."""
    return PAdicInt.of(1 + offset * p, p, precision)


# residue tables -----------------------------------------------------------

def _dtype(mod: int):
    return np.int64 if mod <= _INT64_SAFE else object


def _power_table(r: int, length: int, mod: int) -> np.ndarray:
    """``r**j mod mod`` for ``j < length`` by a block outer product."""
    dt = _dtype(mod)
    block = math.isqrt(length) + 1
    small = np.empty(block, dtype=dt)
    v = 1
    for j in range(block):
        small[j] = v
        v = v * r % mod
    nbig = -(-length // block)
    big = np.empty(nbig, dtype=dt)
    u = 1
    for i in range(nbig):
        big[i] = u
        u = u * v % mod
    return (np.outer(big, small) % mod).ravel()[:length]


def _bracket_table(r: int, length: int, mod: int) -> np.ndarray:
    """``[j:r] = 1 + r + ... + r^{j-1}`` for ``j < length``."""
    out = np.zeros(length, dtype=_dtype(mod))
    if length > 1:
        out[1:] = np.cumsum(_power_table(r, length - 1, mod)) % mod
    return out


def integrand_table(k: int, length: int, q: PAdicInt, x: int = 0, alpha: int = 1,
                    chi: DirichletCharacter | None = None) -> np.ndarray:
    """Residues of ``chi(eta) [x+eta:q^alpha]^k`` for ``eta < length``."""
    if x < 0:
        raise ValueError("integer shift x must be >= 0")
    mod = q.modulus
    br = _bracket_table(pow(q.residue, alpha, mod), length + x, mod)[x:]
    out = np.ones(length, dtype=_dtype(mod)) % mod
    for _ in range(k):
        out = out * br % mod
    if chi is not None and chi.modulus > 1:
        vals = np.array([int(v) % mod for v in chi.values], dtype=_dtype(mod))
        out = out * np.resize(vals, length) % mod
    return out


def _neg_qbeta(q: PAdicInt, beta: int) -> int:
    return (-pow(q.residue, beta, q.modulus)) % q.modulus


def _fermionic_normalizer(q: PAdicInt, beta: int, length: int) -> PAdicInt:
    """``[L:-q^beta] = (1 + q^{beta L})/(1 + q^beta)`` for odd ``L``, a unit."""
    qb = q ** beta
    return (1 + qb ** length) * padic_inv(1 + qb)


def fermionic_sum_level(f, q: PAdicInt, m: int, beta: int = 1, d: int = 1) -> PAdicInt:
    """Level-``m`` Riemann sum ``(1/[dp^m:-q^beta]) sum_{eta<dp^m} (-q^beta)^eta f(eta)``.

    ``f`` is a callable returning integers (or p-integral rationals) or a
    residue table of length at least ``d p^m``.
    """
    p, mod = q.prime, q.modulus
    length = d * p ** m
    if callable(f):
        table = np.array([PAdicInt.of(f(e), p, q.precision).residue for e in range(length)],
                         dtype=_dtype(mod))
    else:
        table = np.asarray(f)[:length]
        if len(table) < length:
            raise ValueError("residue table shorter than the level")
    w = _power_table(_neg_qbeta(q, beta), length, mod)
    total = int((w * table % mod).sum()) % mod
    return PAdicInt(p, q.precision, total) * padic_inv(_fermionic_normalizer(q, beta, length))


def riemann_sums(k: int, q: PAdicInt, levels, x: int = 0, alpha: int = 1, beta: int = 1,
                 chi: DirichletCharacter = TRIVIAL) -> list[PAdicInt]:
    """Riemann sums of ``chi(eta)[x+eta:q^alpha]^k`` at each requested level.

    One table is built at the top level; lower levels are prefixes of it.
    """
    require_sign_valued(chi, q.prime)
    levels = list(levels)
    p, mod, d = q.prime, q.modulus, chi.modulus
    top = d * p ** max(levels)
    table = integrand_table(k, top, q, x, alpha, chi)
    w = _power_table(_neg_qbeta(q, beta), top, mod)
    csum = np.cumsum(w * table % mod)
    out = []
    for m in levels:
        length = d * p ** m
        s = PAdicInt(p, q.precision, int(csum[length - 1]) % mod)
        out.append(s * padic_inv(_fermionic_normalizer(q, beta, length)))
    return out


def integral_shift_check(k: int, q: PAdicInt, m: int, d: int = 3, x: int = 0, alpha: int = 1,
                         chi: DirichletCharacter = TRIVIAL, slack: int = 2) -> VerificationRecord:
    """``q^d I(f(.+d)) + (-1)^{d-1} I(f) = [2:q] sum_{l<d} q^l (-1)^{d-1-l} f(l)`` at level ``m``.

    ``f = chi [x+.:q^alpha]^k`` and the right side is exact; agreement is
    required to ``m - slack`` digits.
    """
    if d % 2 == 0 or d % chi.modulus:
        raise ValueError("d must be an odd multiple of the character modulus")
    p = q.prime
    e = chi.modulus
    # a character mod e is only locally constant on X_e, so sum over e p^m cells
    table = integrand_table(k, e * p ** m + d, q, x, alpha, chi)
    i_shift = fermionic_sum_level(table[d:], q, m, d=e)
    i_plain = fermionic_sum_level(table, q, m, d=e)
    lhs = q ** d * i_shift + (-1) ** (d - 1) * i_plain
    rhs = (1 + q) * sum((-1) ** (d - 1 - l) * (q ** l) * int(table[l]) for l in range(d))
    params = dict(k=k, p=p, m=m, d=d, x=x, alpha=alpha, chi=chi.label())
    return padic_record("eq:15", params, lhs, rhs, max(m - slack, 0))


# closed forms -------------------------------------------------------------

def _dirichlet_numerator(k: int, chi: DirichletCharacter, alpha: int, beta: int, Q: PAdicInt,
                         x: int = 0) -> PAdicInt:
    """``(1-Q^alpha)^k E~^chi_{k,Q}(x|alpha:beta)``, a p-adic integer."""
    d = chi.modulus
    total = PAdicInt(Q.prime, Q.precision, 0)
    for j in range(k + 1):
        e = alpha * j + beta
        Qe = Q ** e
        inner = sum((chi(l) * (-1) ** l) * Qe ** l for l in range(d) if chi(l) != 0)
        term = inner * padic_inv(1 + Qe ** d) * (Q ** (alpha * j * x))
        total = total + (binom(k, j) * (-1) ** j) * term
    return (1 + Q ** beta) * total


def dirichlet_ab_padic(k: int, x: int = 0, chi: DirichletCharacter = TRIVIAL, alpha: int = 1,
                       beta: int = 1, q: PAdicInt = None):
    """``E~^chi_{k,q}(x|alpha:beta)`` evaluated in Z_p, returned with its precision budget."""
    require_sign_valued(chi, q.prime)
    num = _dirichlet_numerator(k, chi, alpha, beta, q, x)
    return divide_tracking_loss(num, (1 - q ** alpha) ** k)


def euler_ab_padic(k: int, a: int, denom: int, alpha: int = 1, beta: int = 1,
                   q: PAdicInt = None):
    """``E~_{k,Q}(a/denom|alpha:beta)`` with ``Q = q^denom``.

    ``Q^{alpha j a/denom} = q^{alpha j a}`` keeps every exponent integral.
    """
    Q = q ** denom
    total = PAdicInt(q.prime, q.precision, 0)
    for j in range(k + 1):
        total = total + (binom(k, j) * (-1) ** j) * (q ** (alpha * j * a)) * padic_inv(
            1 + Q ** (alpha * j + beta))
    num = (1 + Q ** beta) * total
    return divide_tracking_loss(num, (1 - Q ** alpha) ** k)


def _cell_rest(mq: MeasureQuery, b: int, n: int, q: PAdicInt | None = None) -> PAdicInt:
    """Measure numerator of the ball ``b + dp^n Z_p`` without the ``chi`` factor."""
    q = mq.q if q is None else q
    big = mq.d * mq.prime ** n
    Q = q ** big
    total = PAdicInt(q.prime, q.precision, 0)
    for j in range(mq.k + 1):
        total = total + (binom(mq.k, j) * (-1) ** j) * (q ** (mq.alpha * j * b)) * padic_inv(
            1 + Q ** (mq.alpha * j + mq.beta))
    sign = (-1) ** b * (q ** mq.beta) ** b
    return sign * (1 + Q ** mq.beta) * total * padic_inv(_fermionic_normalizer(q, mq.beta, big))


def _cell_numerator(mq: MeasureQuery, a: int, n: int) -> PAdicInt:
    chi_a = mq.character(a)
    if chi_a == 0:
        return PAdicInt(mq.prime, mq.q.precision, 0)
    return chi_a * _cell_rest(mq, a, n)


def _denominator(mq: MeasureQuery, q: PAdicInt | None = None) -> PAdicInt:
    q = mq.q if q is None else q
    return (1 - q ** mq.alpha) ** mq.k


def measure_on_ball(addr: BallAddress, mq: MeasureQuery):
    """``mu^{(alpha,beta)}_{k,q}(a + dp^n Z_p | chi)`` with its precision budget."""
    if addr.modulus_factor != mq.d:
        raise ValueError("ball modulus factor must equal the character modulus")
    addr.check(mq.prime)
    return divide_tracking_loss(_cell_numerator(mq, addr.base, addr.level), _denominator(mq))


def measure_additivity_check(addr: BallAddress, mq: MeasureQuery) -> VerificationRecord:
    """``mu(ball)`` against the sum over its ``p`` children, at surviving precision."""
    whole, budget = measure_on_ball(addr, mq)
    parts = None
    for child in addr.children(mq.prime):
        v, _ = measure_on_ball(child, mq)
        parts = v if parts is None else parts + v
    params = dict(p=mq.prime, k=mq.k, alpha=mq.alpha, beta=mq.beta, a=addr.base,
                  n=addr.level, d=mq.d, chi=mq.character.label())
    return padic_record("measure:additivity", params, whole, parts, budget.surviving,
                        note=dict(loss=budget.loss_incurred))


def _sum_cells(mq: MeasureQuery, level: int, only_p_multiples: bool = False) -> PAdicInt:
    big = mq.d * mq.prime ** level
    step = mq.prime if only_p_multiples else 1
    total = PAdicInt(mq.prime, mq.q.precision, 0)
    for a in range(0, big, step):
        total = total + _cell_numerator(mq, a, level)
    return total


def integrate_over_X(mq: MeasureQuery, level: int):
    """Sum of the measure over every level-``level`` cell of ``X_d``."""
    return divide_tracking_loss(_sum_cells(mq, level), _denominator(mq))


def integrate_over_pX(mq: MeasureQuery, level: int):
    """Sum over the cells whose base is divisible by ``p`` (``level >= 1``)."""
    if level < 1:
        raise ValueError("pX is a union of cells only from level 1 on")
    return divide_tracking_loss(_sum_cells(mq, level, True), _denominator(mq))


def _scaled_number(mq: MeasureQuery, y_num: int, q: PAdicInt | None = None) -> PAdicInt:
    """Numerator of ``([y:q^alpha]^k/[y:-q^beta]) E~^chi_{k,q^y}`` over ``(1-q^alpha)^k``.

    ``[y:-q^beta] = (1+q^{y beta})/(1+q^beta)`` for odd ``y``.
    """
    q = mq.q if q is None else q
    qy = q ** y_num
    ratio = (1 + q ** mq.beta) * padic_inv(1 + qy ** mq.beta)
    return ratio * _dirichlet_numerator(mq.k, mq.character, mq.alpha, mq.beta, qy)


def integral_X_check(mq: MeasureQuery, level: int) -> VerificationRecord:
    lhs, budget = integrate_over_X(mq, level)
    rhs, _ = dirichlet_ab_padic(mq.k, 0, mq.character, mq.alpha, mq.beta, mq.q)
    params = dict(p=mq.prime, k=mq.k, alpha=mq.alpha, beta=mq.beta, level=level, d=mq.d,
                  chi=mq.character.label())
    return padic_record("thm:integral-X", params, lhs, rhs, budget.surviving,
                        note=dict(loss=budget.loss_incurred))


def integral_pX_check(mq: MeasureQuery, level: int, printed: bool = False) -> VerificationRecord:
    """``chi(p) [p:q^alpha]^k/[p:-q^beta] E~^chi_{k,q^p}`` against the cell sum.

    The printed statement carries ``[p:q^alpha]`` without the exponent ``k``;
    with ``printed=True`` both sides are scaled by ``[p:q^alpha]^{k-1}`` so that
    no division by the non-unit bracket is needed.
    """
    p = mq.prime
    num_l = _sum_cells(mq, level, True)
    num_r = mq.character(p) * _scaled_number(mq, p)
    params = dict(p=p, k=mq.k, alpha=mq.alpha, beta=mq.beta, level=level, d=mq.d,
                  chi=mq.character.label())
    if printed:
        bp = _padic_bracket(p, mq.q ** mq.alpha)
        if mq.k >= 1:
            num_l = num_l * bp ** (mq.k - 1)
        else:
            num_r = num_r * bp
        return padic_record("int-pX-printed", params, num_l, num_r, mq.q.precision,
                            expect_fail=True)
    lhs, budget = divide_tracking_loss(num_l, _denominator(mq))
    rhs, _ = divide_tracking_loss(num_r, _denominator(mq))
    return padic_record("thm:integral-pX", params, lhs, rhs, budget.surviving,
                        note=dict(loss=budget.loss_incurred))


def _padic_bracket(n: int, r: PAdicInt) -> PAdicInt:
    total = PAdicInt(r.prime, r.precision, 0)
    term = PAdicInt(r.prime, r.precision, 1)
    for _ in range(n):
        total = total + term
        term = term * r
    return total


# c-twisted integrals ------------------------------------------------------

def _check_twist(mq: MeasureQuery, c: int) -> None:
    if c < 3 or c % 2 == 0 or math.gcd(c, mq.d * mq.prime) != 1:
        raise ValueError("c must be an odd integer > 1 prime to d*p")


def root_q(mq: MeasureQuery, c: int) -> PAdicInt:
    """``q^{1/c}`` through the p-adic exponential and logarithm."""
    return padic_power(mq.q, Fraction(1, c))


def _twisted_cells(mq: MeasureQuery, c: int, level: int, qc: PAdicInt, cells) -> PAdicInt:
    """``sum chi(a) rest_{q^{1/c}}(c a mod dp^n)``: the ball ``a`` carries its own label."""
    big = mq.d * mq.prime ** level
    total = PAdicInt(mq.prime, mq.q.precision, 0)
    for a in cells:
        chi_a = mq.character(a)
        if chi_a != 0:
            total = total + chi_a * _cell_rest(mq, c * a % big, level, qc)
    return total


def twisted_integrals(mq: MeasureQuery, c: int, which: str = "X-twisted", level: int = 2):
    """``int d mu_{k,q^{1/c}}(cx|chi)`` over ``X`` or ``pX`` by summing level cells."""
    _check_twist(mq, c)
    qc = root_q(mq, c)
    big = mq.d * mq.prime ** level
    if which == "X-twisted":
        cells = range(big)
    elif which == "pX-twisted":
        cells = range(0, big, mq.prime)
    else:
        raise ValueError(f"unknown twisted integral {which!r}")
    return divide_tracking_loss(_twisted_cells(mq, c, level, qc, cells), _denominator(mq, qc))


def twisted_rhs(mq: MeasureQuery, c: int, which: str = "X-twisted"):
    """``chi(1/c) E~^chi_{k,q^{1/c}}`` or ``chi(p/c)[p:q^{alpha/c}]^k/[p:(-q^beta)^{1/c}] E~^chi_{k,q^{p/c}}``."""
    _check_twist(mq, c)
    qc = root_q(mq, c)
    inv_c = mq.character.inverse_value(c)
    if which == "X-twisted":
        num = inv_c * _dirichlet_numerator(mq.k, mq.character, mq.alpha, mq.beta, qc)
    elif which == "pX-twisted":
        num = (inv_c * mq.character(mq.prime)) * _scaled_number(mq, mq.prime, qc)
    else:
        raise ValueError(f"unknown twisted integral {which!r}")
    return divide_tracking_loss(num, _denominator(mq, qc))


def twisted_check(mq: MeasureQuery, c: int, which: str = "X-twisted",
                  level: int = 2) -> VerificationRecord:
    lhs, budget = twisted_integrals(mq, c, which, level)
    rhs, _ = twisted_rhs(mq, c, which)
    params = dict(p=mq.prime, k=mq.k, alpha=mq.alpha, beta=mq.beta, c=c, level=level, d=mq.d,
                  chi=mq.character.label())
    return padic_record(f"thm:{which}", params, lhs, rhs, budget.surviving,
                        note=dict(loss=budget.loss_incurred))


# regularized measure ------------------------------------------------------

def regularized_integral(mq: MeasureQuery, c: int, level: int = 2):
    """``int_{X*} d mu_{k,c,q}(cx|chi)`` with ``mu_{k,c,q} = mu_{k,q} - c^{-1} K mu_{k,q^{1/c}}(c.)``.

    ``K = [c^{-1}:q^alpha]^k/[c^{-1}:-q^beta]``; ``K`` times the twisted
    measure collapses to ``(1+q^beta)/(1+q^{beta/c})`` times the twisted
    numerator over ``(1-q^alpha)^k``.
    """
    _check_twist(mq, c)
    qc = root_q(mq, c)
    p = mq.prime
    big = mq.d * p ** level
    inv_c = PAdicInt.of(Fraction(1, c), p, mq.q.precision)
    kfac = (1 + mq.q ** mq.beta) * padic_inv(1 + qc ** mq.beta)
    units = [a for a in range(big) if a % p]
    plain = PAdicInt(p, mq.q.precision, 0)
    for a in units:
        plain = plain + _cell_numerator(mq, a, level)
    twisted = _twisted_cells(mq, c, level, qc, units)
    return divide_tracking_loss(plain - inv_c * kfac * twisted, _denominator(mq))


def _regularized_terms(mq: MeasureQuery, c: int):
    """The four numerators ``(y, sign-and-weight, term)`` for ``y = 1, p, 1/c, p/c``."""
    p = mq.prime
    qc = root_q(mq, c)
    chi = mq.character
    inv_c = PAdicInt.of(Fraction(1, c), p, mq.q.precision)
    cinv = chi.inverse_value(c)
    return qc, [
        ("1", 1, _scaled_number(mq, 1)),
        ("p", -chi(p), _scaled_number(mq, p)),
        ("1/c", -cinv * inv_c, _scaled_number(mq, 1, qc) * (1 + mq.q ** mq.beta)
         * padic_inv(1 + qc ** mq.beta)),
        ("p/c", chi(p) * cinv * inv_c, _scaled_number(mq, p, qc) * (1 + mq.q ** mq.beta)
         * padic_inv(1 + qc ** mq.beta)),
    ]


def regularized_rhs(mq: MeasureQuery, c: int):
    """``(1-chi^p)(1-c^{-1}chi^{1/c}) E~^chi_{k,q}(alpha:beta)`` with
    ``chi^y f(q) = ([y:q^alpha]^k/[y:-q^beta]) chi(y) f(q^y)``."""
    _, terms = _regularized_terms(mq, c)
    num = sum((w * t for _, w, t in terms[1:]), terms[0][2])
    return divide_tracking_loss(num, _denominator(mq))


def regularized_identity_check(mq: MeasureQuery, c: int, level: int = 2,
                               printed: str | None = None) -> VerificationRecord:
    """Regularized integral over ``X*`` against the operator expansion.

    ``printed="operator"`` uses ``chi^y`` without the exponent ``k`` on
    ``[y:q^alpha]``; ``printed="display"`` uses the four-term combination as
    displayed (no exponent on the ``p`` brackets, no ``c^{-1}K`` on the last
    term).  Both are scaled to avoid dividing by non-units.
    """
    params = dict(p=mq.prime, k=mq.k, alpha=mq.alpha, beta=mq.beta, c=c, level=level, d=mq.d,
                  chi=mq.character.label())
    lhs, budget = regularized_integral(mq, c, level)
    if printed is None:
        rhs, _ = regularized_rhs(mq, c)
        return padic_record("thm:regularized", params, lhs, rhs, budget.surviving,
                            note=dict(loss=budget.loss_incurred))
    num_l = lhs * _denominator(mq)
    qc, terms = _regularized_terms(mq, c)
    k = mq.k
    P = _padic_bracket(mq.prime, mq.q ** mq.alpha)
    Pc = _padic_bracket(mq.prime, qc ** mq.alpha)
    u, _ = divide_tracking_loss(1 - qc ** mq.alpha, 1 - mq.q ** mq.alpha)  # [1/c:q^alpha]
    t1, t_p, t_c, t_pc = (w * t for _, w, t in terms)
    if printed == "operator":
        # each chi^y term picks up [y:q^alpha]^{1-k}; [p/c:q^alpha] = u * Pc
        if k >= 1:
            scale = (P * Pc) ** (k - 1)
            rhs = (scale * t1 + Pc ** (k - 1) * t_p + scale * u ** (1 - k) * t_c
                   + P ** (k - 1) * u ** (1 - k) * t_pc)
            num_l = num_l * scale
        else:
            rhs = t1 + P * t_p + u * t_c + u * Pc * t_pc
        ident = "regularized-operator-printed"
    elif printed == "display":
        if k > 1:
            raise ValueError("the printed display is evaluated for k <= 1 only")
        inv_c = PAdicInt.of(Fraction(1, c), mq.prime, mq.q.precision)
        kfac = (1 + mq.q ** mq.beta) * padic_inv(1 + qc ** mq.beta)
        # drop c^{-1}K from the last term and the exponent from the p brackets
        last = t_pc * padic_inv(inv_c * kfac) * u ** (-k)
        rhs = t1 + P ** (1 - k) * t_p + t_c + Pc ** (1 - k) * last
        ident = "regularized-display-printed"
    else:
        raise ValueError(f"unknown printed variant {printed!r}")
    return padic_record(ident, params, num_l, rhs, min(num_l.precision, rhs.precision),
                        expect_fail=True)


# printed measure criterion -------------------------------------------------

def measure_criterion_check(a: int, n: int, mq: MeasureQuery,
                            printed: bool = False) -> VerificationRecord:
    """Refinement of ``f = E~_{k,Q}(y|alpha:beta)`` at ``y = a/p^n``, ``Q = q^{p^n}``.

    Correct form: ``f_Q(y) = ([p:Q^alpha]^k/[p:-Q^beta]) sum_b (-Q^beta)^b f_{Q^p}((y+b)/p)``.
    The printed criterion uses ``[p^n:q^{p alpha}]^k/[p^n:-q^{p beta}]`` and
    weights ``(-1)^b q^{b p^n}``.  Both sides are multiplied by
    ``(1-Q^{p alpha})^k`` before comparing.
    """
    if mq.d != 1:
        raise ValueError("the criterion is stated on Z_p (d = 1)")
    p, q, k, al, be = mq.prime, mq.q, mq.k, mq.alpha, mq.beta
    pn = p ** n
    Q = q ** pn
    Qp = Q ** p

    def num(base, expo):
        # (1-base^alpha)^k E~_{k,base}(expo/(...)|alpha:beta); expo already integral
        tot = PAdicInt(p, q.precision, 0)
        for j in range(k + 1):
            tot = tot + (binom(k, j) * (-1) ** j) * (q ** (al * j * expo)) * padic_inv(
                1 + base ** (al * j + be))
        return (1 + base ** be) * tot

    lhs = _padic_bracket(p, Q ** al) ** k * num(Q, a)
    if printed:
        pref = _padic_bracket(pn, q ** (p * al)) ** k * padic_inv(
            _fermionic_normalizer(q ** p, be, pn))
        weights = [(-1) ** b * q ** (b * pn) for b in range(p)]
    else:
        pref = _padic_bracket(p, Q ** al) ** k * padic_inv(_fermionic_normalizer(Q, be, p))
        weights = [(-1) ** b * (Q ** be) ** b for b in range(p)]
    rhs = pref * sum((w * num(Qp, a + b * pn) for b, w in enumerate(weights)),
                     PAdicInt(p, q.precision, 0))
    params = dict(p=p, k=k, alpha=al, beta=be, a=a, n=n)
    ident = "measure-criterion-printed" if printed else "measure:criterion"
    return padic_record(ident, params, lhs, rhs, q.precision, expect_fail=printed)


def loss_bound(mq: MeasureQuery) -> int:
    """Digits a measure value can lose: ``k v(1 - q^alpha)``."""
    return mq.k * int((1 - mq.q ** mq.alpha).valuation)


__all__ = [
    "BallAddress",
    "MeasureQuery",
    "PAdicPrecisionBudget",
    "q_of",
    "integrand_table",
    "fermionic_sum_level",
    "riemann_sums",
    "integral_shift_check",
    "dirichlet_ab_padic",
    "euler_ab_padic",
    "measure_on_ball",
    "measure_additivity_check",
    "integrate_over_X",
    "integrate_over_pX",
    "integral_X_check",
    "integral_pX_check",
    "twisted_integrals",
    "twisted_rhs",
    "twisted_check",
    "regularized_integral",
    "regularized_rhs",
    "regularized_identity_check",
    "measure_criterion_check",
    "loss_bound",
]
