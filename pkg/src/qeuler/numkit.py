"""Scalar building blocks: q-brackets, binomials, Stirling numbers, Gamma.

Every routine here is written against the generic number protocol so the
same code runs on ``float``, ``complex``, :class:`fractions.Fraction` and
``mpmath.mpf``.  Exact rationals are the oracle layer; mpmath is used when
double precision is not enough (q close to 1, large n).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Number

import mpmath
import scipy.special

ExactRational = Fraction

REAL_UNIT_INTERVAL = "real-unit-interval"
COMPLEX_OPEN_DISK = "complex-open-disk"
PADIC_UNIT = "padic-unit"
_DOMAINS = (REAL_UNIT_INTERVAL, COMPLEX_OPEN_DISK, PADIC_UNIT)


@dataclass(frozen=True)
class QParam:
    """Deformation parameter ``q`` together with the domain it lives in.

    ``padic-unit`` is only a marker; the p-adic value itself is a
    :class:`qeuler.padic.PAdicInt`.
    """

    value: Number
    domain: str

    def __post_init__(self):
        if self.domain not in _DOMAINS:
            raise ValueError(f"unknown q domain {self.domain!r}")
        if self.domain == REAL_UNIT_INTERVAL:
            if not _is_real(self.value) or not 0 < self.value < 1:
                raise ValueError(f"real q must lie in (0, 1), got {self.value!r}")
        elif self.domain == COMPLEX_OPEN_DISK:
            if abs(self.value) >= 1 or self.value == 1:
                raise ValueError(f"complex q must satisfy |q| < 1, got {self.value!r}")

    @classmethod
    def of(cls, q) -> "QParam":
        if isinstance(q, QParam):
            return q
        if _is_real(q) and 0 < q < 1:
            return cls(q, REAL_UNIT_INTERVAL)
        return cls(q, COMPLEX_OPEN_DISK)

    @property
    def is_real(self) -> bool:
        return self.domain == REAL_UNIT_INTERVAL


def _is_real(x) -> bool:
    if isinstance(x, (Integral, Fraction, float, mpmath.mpf)):
        return True
    return False


def _is_integer(x) -> bool:
    if isinstance(x, Integral):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    if isinstance(x, (float, mpmath.mpf)):
        return x == int(x)
    return False


def _raw(q):
    return q.value if isinstance(q, QParam) else q


def qpow(q, x):
    """``q**x``; integer ``x`` for any ``q``, real ``x`` only for real ``q`` in (0, 1).

    Integer exponents keep exact types exact.
    """
    q = _raw(q)
    if _is_integer(x):
        return q ** int(x)
    if not (_is_real(q) and 0 < q < 1):
        raise ValueError("non-integer powers need a real q in (0, 1)")
    if isinstance(q, Fraction):
        q = float(q)
    if isinstance(x, Fraction):
        x = float(x)
    if isinstance(x, complex):
        return cmath.exp(x * math.log(q))
    return q ** x


def qbracket(x, q):
    """The q-number ``[x:q] = (q**x - 1) / (q - 1)``.

    For nonnegative integer ``x`` this is ``1 + q + ... + q**(x-1)``.
    Non-integer ``x`` requires a real ``q`` in (0, 1); complex ``q`` only
    admits integer ``x``.
    """
    q = _raw(q)
    if q == 1:
        raise ValueError("[x:q] is undefined at q = 1")
    if _is_integer(x):
        x = int(x)
        if isinstance(q, float) and q > 0 and x != 0:
            # expm1 keeps full relative accuracy when q is close to 1
            return math.expm1(x * math.log(q)) / (q - 1)
        if isinstance(q, mpmath.mpf) and q > 0 and x != 0:
            return mpmath.expm1(x * mpmath.log(q)) / (q - 1)
        return (q ** x - 1) / (q - 1)
    if not (_is_real(q) and 0 < q < 1):
        raise ValueError("non-integer x needs a real q in (0, 1) (branch ambiguity)")
    if isinstance(q, mpmath.mpf):
        return mpmath.expm1(x * mpmath.log(q)) / (q - 1)
    qf = float(q)
    if isinstance(x, complex):
        return (cmath.exp(x * math.log(qf)) - 1) / (qf - 1)
    return math.expm1(float(x) * math.log(qf)) / (qf - 1)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 when ``k > n``."""
    if k < 0:
        return 0
    return math.comb(n, k)


def gen_binom(s, k: int):
    """Generalized binomial ``s(s-1)...(s-k+1)/k!``; exact for int/Fraction ``s``."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num = num * (s - i)
    if isinstance(num, Integral):
        return num // math.factorial(k)
    return num / math.factorial(k)


def falling_factorial(x, k: int):
    out = 1
    for i in range(k):
        out = out * (x - i)
    return out


def stirling2(n: int, k: int) -> int:
    """Second-kind Stirling number by inclusion-exclusion."""
    if n < 0 or k < 0:
        return 0
    if k > n:
        return 0
    total = sum((-1) ** j * math.comb(k, j) * (k - j) ** n for j in range(k + 1))
    return total // math.factorial(k)


def gamma(s):
    """Euler Gamma; raises at the poles 0, -1, -2, ..."""
    if _is_real(s) and _is_integer(s) and s <= 0:
        raise ValueError(f"Gamma has a pole at {s}")
    if isinstance(s, complex):
        if s.imag == 0 and s.real == int(s.real) and s.real <= 0:
            raise ValueError(f"Gamma has a pole at {s}")
        return complex(scipy.special.gamma(s))
    return float(scipy.special.gamma(float(s)))


def reciprocal_gamma(s):
    """``1/Gamma(s)``, zero at the nonpositive integers."""
    if isinstance(s, complex):
        return complex(scipy.special.rgamma(s))
    return float(scipy.special.rgamma(float(s)))
