"""Dirichlet characters of odd modulus, stored as dense value tables."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import product

from sympy.functions.combinatorial.numbers import jacobi_symbol
from sympy.ntheory import factorint, primitive_root

_TOL = 1e-12


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    values: tuple
    is_sign_valued: bool

    def __call__(self, n: int):
        return self.values[n % self.modulus]

    @property
    def is_principal(self) -> bool:
        return all(v in (0, 1) for v in self.values)

    def inverse_value(self, c: int):
        """``chi(1/c)``, read through the inverse of ``c`` modulo the modulus."""
        if self.modulus == 1:
            return self.values[0]
        if math.gcd(c, self.modulus) != 1:
            return 0
        return self(pow(c, -1, self.modulus))

    def label(self) -> str:
        body = ",".join(_fmt_value(v) for v in self.values)
        return f"table:{self.modulus}:{body}"


def _fmt_value(v) -> str:
    if isinstance(v, int):
        return str(v)
    return f"{v.real:.17g}{v.imag:+.17g}j"


def _snap(v):
    """Collapse numerically real +-1/0 values onto exact integers."""
    for target in (0, 1, -1):
        if abs(v - target) <= _TOL:
            return target
    return complex(v)


def character_from_table(d: int, values) -> DirichletCharacter:
    """Validate a value table as a Dirichlet character modulo ``d``."""
    if d < 1 or d % 2 == 0:
        raise ValueError(f"modulus must be an odd positive integer, got {d}")
    values = tuple(_snap(v) for v in values)
    if len(values) != d:
        raise ValueError(f"expected {d} values, got {len(values)}")
    for n, v in enumerate(values):
        unit = math.gcd(n, d) == 1
        if unit and v == 0:
            raise ValueError(f"chi({n}) must be nonzero on a unit")
        if not unit and v != 0:
            raise ValueError(f"chi({n}) must vanish on a non-unit")
    if values[1 % d] != 1:
        raise ValueError("chi(1) must equal 1")
    for m in range(d):
        for n in range(d):
            if abs(values[m * n % d] - values[m] * values[n]) > _TOL:
                raise ValueError(f"multiplicativity fails at ({m}, {n})")
    sign = all(v in (-1, 0, 1) for v in values)
    return DirichletCharacter(d, values, sign)


def trivial_character(d: int = 1) -> DirichletCharacter:
    """Principal character modulo ``d`` (the constant 1 when ``d = 1``)."""
    return character_from_table(d, [1 if math.gcd(n, d) == 1 else 0 for n in range(d)])


def quadratic_character(d: int) -> DirichletCharacter:
    """``n -> (n | d)``, the Jacobi symbol."""
    if d < 1 or d % 2 == 0:
        raise ValueError(f"modulus must be an odd positive integer, got {d}")
    if d == 1:
        return trivial_character(1)
    return character_from_table(d, [int(jacobi_symbol(n, d)) for n in range(d)])


def enumerate_characters(d: int) -> list[DirichletCharacter]:
    """All ``phi(d)`` characters modulo a small odd ``d``.

    (Z/dZ)^x splits over the odd prime powers of ``d`` into cyclic factors;
    a character is fixed by the root of unity it sends each generator to.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError(f"modulus must be an odd positive integer, got {d}")
    if d > 15:
        raise ValueError("enumeration is limited to d <= 15")
    if d == 1:
        return [trivial_character(1)]
    factors = []
    for p, e in factorint(d).items():
        pe = p ** e
        order = pe - pe // p
        factors.append((pe, primitive_root(pe), order))
    # discrete logs of every residue against each factor's generator
    dlog = []
    for pe, g, order in factors:
        table = {pow(g, k, pe): k for k in range(order)}
        dlog.append(table)
    out = []
    for exps in product(*(range(order) for _, _, order in factors)):
        vals = []
        for n in range(d):
            if math.gcd(n, d) != 1:
                vals.append(0)
                continue
            v = 1
            for (pe, _, order), j, table in zip(factors, exps, dlog):
                v *= cmath.exp(2j * math.pi * j * table[n % pe] / order)
            vals.append(v)
        out.append(character_from_table(d, vals))
    return out


def parse_character(text: str) -> DirichletCharacter:
    """Read ``trivial:d``, ``quadratic:d`` or ``table:d:v0,v1,...``."""
    kind, _, rest = text.partition(":")
    if kind == "trivial":
        return trivial_character(int(rest or 1))
    if kind == "quadratic":
        return quadratic_character(int(rest))
    if kind == "table":
        d, _, body = rest.partition(":")
        vals = [complex(v.replace(" ", "")) for v in body.split(",")]
        vals = [int(v.real) if v.imag == 0 and v.real == int(v.real) else v for v in vals]
        return character_from_table(int(d), vals)
    raise ValueError(f"unrecognised character spec {text!r}")


def require_sign_valued(chi: DirichletCharacter, p: int | None = None) -> None:
    """Guard for p-adic use: values must be -1, 0, 1 and the modulus prime to p."""
    if not chi.is_sign_valued:
        raise ValueError("p-adic computations need a sign-valued character")
    if p is not None and math.gcd(chi.modulus, p) != 1:
        raise ValueError(f"character modulus {chi.modulus} is not prime to p={p}")


__all__ = [
    "DirichletCharacter",
    "character_from_table",
    "trivial_character",
    "quadratic_character",
    "enumerate_characters",
    "parse_character",
    "require_sign_valued",
]
