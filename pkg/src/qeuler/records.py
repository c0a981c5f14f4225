"""Result containers shared by the evaluators and the verification harness."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
EXPECTED_FAIL = "expected-fail"

# printed identities known to be inconsistent; kept as expected-fail checks
LEDGER_IDS = frozenset({
    "eq8-printed",
    "thm1-printed",
    "thm2-printed",
    "eq21-printed",
    "eq24-printed",
    "thm-distribution-printed",
    "thm-distribution-ab-printed",
    "measure-criterion-printed",
    "int-pX-printed",
    "regularized-display-printed",
    "regularized-operator-printed",
    "continuation-printed",
})


@dataclass
class TruncationReport:
    """Partial sum of an infinite series with a rigorous bound on what was dropped."""

    value: Any
    terms_used: int
    tail_bound: float
    converged: bool


@dataclass
class VerificationRecord:
    identity_id: str
    parameters: dict
    lhs: Any
    rhs: Any
    residual: Any
    status: str
    tolerance: Any = None
    note: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status == EXPECTED_FAIL and self.identity_id not in LEDGER_IDS:
            raise ValueError(f"{self.identity_id!r} is not a ledger identity")

    @property
    def ok(self) -> bool:
        return self.status in (PASS, EXPECTED_FAIL)


def archimedean_record(identity_id, parameters, lhs, rhs, tol, *, expect_fail=False, note=None):
    """Compare two numbers; ``expect_fail`` marks a ledger entry that must disagree."""
    residual = abs(lhs - rhs)
    agrees = residual <= tol
    if expect_fail:
        status = EXPECTED_FAIL if not agrees else FAIL
    else:
        status = PASS if agrees else FAIL
    return VerificationRecord(identity_id, dict(parameters), lhs, rhs, residual, status,
                              tol, dict(note or {}))


def padic_record(identity_id, parameters, lhs, rhs, required_digits, *, expect_fail=False,
                 note=None):
    """Compare two p-adic values; the residual is the valuation of their difference."""
    diff = lhs - rhs
    digits = min(lhs.precision, rhs.precision)
    residual = diff.valuation if diff.valuation != float("inf") else digits
    agrees = residual >= required_digits
    if expect_fail:
        status = EXPECTED_FAIL if not agrees else FAIL
    else:
        status = PASS if agrees else FAIL
    return VerificationRecord(identity_id, dict(parameters), lhs, rhs, residual, status,
                              required_digits, dict(note or {}))
