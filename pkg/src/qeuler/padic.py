"""Truncated p-adic integers.

A :class:`PAdicInt` is a residue modulo ``p**N`` with its valuation made
explicit.  Division by non-units is only possible through
:func:`divide_tracking_loss`, which hands back how many digits were lost.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Integral

import sympy

INF = math.inf
DEFAULT_PRECISION = 12


def _check_prime(p: int) -> None:
    if not isinstance(p, Integral) or p < 3 or not sympy.isprime(p):
        raise ValueError(f"expected an odd prime, got {p!r}")


def _int_ord(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_ord(x, p: int):
    """Exponent of ``p`` in the rational ``x``; ``inf`` for zero."""
    _check_prime(p)
    x = Fraction(x)
    if x == 0:
        return INF
    return _int_ord(x.numerator, p) - _int_ord(x.denominator, p)


def padic_norm(x, p: int) -> Fraction:
    """``|x|_p = p**(-ord_p(x))`` with ``|0|_p = 0``."""
    v = padic_ord(x, p)
    if v == INF:
        return Fraction(0)
    return Fraction(p) ** -v


@dataclass(frozen=True)
class PAdicPrecisionBudget:
    requested: int
    loss_incurred: int

    def __post_init__(self):
        if not 0 <= self.loss_incurred <= self.requested:
            raise ValueError("loss must lie between 0 and the requested precision")

    @property
    def surviving(self) -> int:
        return self.requested - self.loss_incurred


@dataclass(frozen=True)
class PAdicInt:
    """Element of Z_p known modulo ``p**precision``."""

    prime: int
    precision: int
    residue: int
    valuation: float = field(init=False, compare=False)

    def __post_init__(self):
        _check_prime(self.prime)
        if self.precision < 0:
            raise ValueError("precision must be nonnegative")
        mod = self.prime ** self.precision
        object.__setattr__(self, "residue", self.residue % mod)
        if self.residue == 0:
            object.__setattr__(self, "valuation", INF)
        else:
            object.__setattr__(self, "valuation", _int_ord(self.residue, self.prime))

    @classmethod
    def of(cls, x, p: int, precision: int = DEFAULT_PRECISION) -> "PAdicInt":
        """Embed an integer or a p-integral rational."""
        if isinstance(x, PAdicInt):
            return x
        x = Fraction(x)
        if x.denominator % p == 0:
            raise ValueError(f"{x} is not a {p}-adic integer")
        mod = p ** precision
        res = x.numerator * pow(x.denominator, -1, mod) if mod > 1 else 0
        return cls(p, precision, res)

    @property
    def modulus(self) -> int:
        return self.prime ** self.precision

    def is_unit(self) -> bool:
        return self.valuation == 0

    def agrees(self, other: "PAdicInt", digits: int) -> bool:
        """True when both values coincide modulo ``p**digits``."""
        other = self._coerce(other)
        if digits > min(self.precision, other.precision):
            raise ValueError("comparison beyond known precision")
        return (self.residue - other.residue) % self.prime ** digits == 0

    def _coerce(self, other) -> "PAdicInt":
        if isinstance(other, PAdicInt):
            if other.prime != self.prime:
                raise ValueError(f"prime mismatch: {self.prime} vs {other.prime}")
            return other
        return PAdicInt.of(other, self.prime, self.precision)

    def _join(self, other, residue_fn):
        other = self._coerce(other)
        n = min(self.precision, other.precision)
        return PAdicInt(self.prime, n, residue_fn(self.residue, other.residue))

    def __add__(self, other):
        return self._join(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._join(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._join(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._join(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return PAdicInt(self.prime, self.precision, -self.residue)

    def __pow__(self, e: int):
        if not isinstance(e, Integral):
            raise TypeError("use padic_power for non-integer exponents")
        if e < 0:
            return padic_inv(self) ** (-e)
        return PAdicInt(self.prime, self.precision, pow(self.residue, e, self.modulus))

    def with_precision(self, n: int) -> "PAdicInt":
        if n > self.precision:
            raise ValueError("cannot raise precision")
        return PAdicInt(self.prime, n, self.residue)

    def __repr__(self):
        return f"PAdicInt(p={self.prime}, N={self.precision}, residue={self.residue})"


def padic_add(a: PAdicInt, b: PAdicInt) -> PAdicInt:
    return a + b


def padic_mul(a: PAdicInt, b: PAdicInt) -> PAdicInt:
    return a * b


def padic_neg(a: PAdicInt) -> PAdicInt:
    return -a


def padic_inv(a: PAdicInt) -> PAdicInt:
    """Multiplicative inverse of a unit."""
    if not a.is_unit():
        raise ZeroDivisionError(
            f"{a!r} is not a unit; use divide_tracking_loss for non-unit divisors")
    return PAdicInt(a.prime, a.precision, pow(a.residue, -1, a.modulus))


def divide_tracking_loss(a: PAdicInt, b: PAdicInt):
    """Exact quotient ``a / b`` for ``v(a) >= v(b)``.

    Returns the quotient, known modulo ``p**(N - v(b))``, and the precision
    budget recording the ``v(b)`` digits given up.
    """
    b = a._coerce(b)
    if not isinstance(a, PAdicInt):
        raise TypeError("dividend must be a PAdicInt")
    n = min(a.precision, b.precision)
    vb = b.valuation
    if vb == INF or vb >= n:
        raise ZeroDivisionError("divisor vanishes at the working precision")
    if a.valuation < vb:
        raise ValueError(
            f"quotient is not a {a.prime}-adic integer (v(a)={a.valuation} < v(b)={vb})")
    p = a.prime
    vb = int(vb)
    keep = n - vb
    unit = b.residue // p ** vb
    mod = p ** keep
    q_res = (a.residue % p ** n) // p ** vb * pow(unit, -1, mod) if mod > 1 else 0
    return PAdicInt(p, keep, q_res), PAdicPrecisionBudget(n, vb)


def hensel_digits(a: PAdicInt) -> list[int]:
    """Base-p digits ``a_0, a_1, ...`` of the residue, least significant first."""
    digits = []
    r = a.residue
    for _ in range(a.precision):
        r, d = divmod(r, a.prime)
        digits.append(d)
    return digits


def from_digits(digits, p: int) -> PAdicInt:
    res = 0
    for i, d in enumerate(digits):
        if not 0 <= d < p:
            raise ValueError(f"digit {d} out of range for p={p}")
        res += d * p ** i
    return PAdicInt(p, len(digits), res)


def padic_log(a: PAdicInt) -> PAdicInt:
    """p-adic logarithm on ``1 + pZ_p`` (p odd).

    Summed exactly in integers; each term ``u**k / k`` is computed before
    reduction so no digits are lost.
    """
    p, n = a.prime, a.precision
    if a.residue % p != 1 % p:
        raise ValueError("padic_log needs a = 1 mod p")
    u = a.residue - 1
    if u == 0 or n == 0:
        return PAdicInt(p, n, 0)
    mod = p ** n
    total = 0
    # v(u**k / k) >= k - v(k) >= n for every k past 2n + 2
    for k in range(1, 2 * n + 3):
        vk = _int_ord(k, p)
        term = u ** k // p ** vk * pow(k // p ** vk, -1, mod)
        total += term if k % 2 else -term
    return PAdicInt(p, n, total)


def padic_exp(a: PAdicInt) -> PAdicInt:
    """Exponential on ``pZ_p`` (p odd), exact at the working precision."""
    p, n = a.prime, a.precision
    if a.residue % p != 0:
        raise ValueError("padic_exp needs v(a) >= 1")
    mod = p ** n
    u = a.residue
    total = 1
    fact = 1
    vfact = 0
    # v(u**k / k!) >= k - (k - 1)/(p - 1) >= n for every k past 2n + 2
    for k in range(1, 2 * n + 3):
        fact *= k
        vfact += _int_ord(k, p)
        term = u ** k // p ** vfact * pow(fact // p ** vfact, -1, mod)
        total += term
    return PAdicInt(p, n, total)


def padic_power(q: PAdicInt, e) -> PAdicInt:
    """``q**e`` for ``q = 1 mod p`` and rational ``e`` with denominator prime to p."""
    e = Fraction(e)
    if e.denominator == 1:
        return q ** int(e)
    p, n = q.prime, q.precision
    if q.residue % p != 1 % p:
        raise ValueError("fractional powers need q = 1 mod p")
    if e.denominator % p == 0:
        raise ValueError("exponent denominator must be prime to p")
    mod = p ** n
    scale = e.numerator * pow(e.denominator, -1, mod) if mod > 1 else 0
    return padic_exp(padic_log(q) * scale)


def padic_qbracket(x, q: PAdicInt) -> PAdicInt:
    """``[x:q] = 1 + q + ... + q**(x-1)`` for integer ``x >= 0``.

    The geometric sum avoids dividing by the non-unit ``q - 1``.
    """
    if not isinstance(x, Integral) or x < 0:
        raise ValueError("p-adic brackets take nonnegative integer arguments")
    total = 0
    term = 1
    mod = q.modulus
    for _ in range(x):
        total += term
        term = term * q.residue % mod
    return PAdicInt(q.prime, q.precision, total)
