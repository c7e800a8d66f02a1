"""Check a public key against every weak-generator condition the attacks exploit.

A ``safe`` verdict only says that none of these attacks works within the
budgets given. It is not a proof of security.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .attacks import (
    DEFAULT_DLOG_BUDGET,
    DEFAULT_MAX_EXPONENT,
    DEFAULT_SMOOTH_BOUND,
    _require_public,
    disqualify_beta,
    find_smooth_exponent,
)
from .dlog import DlogInstance, bsgs
from .elgamal import PublicKey
from .errors import BudgetExceededError, IncompleteFactorizationError
from .numtheory import DEFAULT_EFFORT, Effort, factorize, is_primitive_root, mod_inv

__all__ = ["AuditReport", "Check", "Condition", "Overall", "Status", "audit_key"]


class Condition(str, Enum):
    COR1_ALPHA = "cor1_alpha"
    THM2B_INVERSE = "thm2b_inverse"
    THM2C_ALPHA_SQUARED = "thm2c_alpha_squared"
    COR2_NEGATED_ALPHA = "cor2_negated_alpha"
    COR2_NEGATED_INVERSE = "cor2_negated_inverse"
    COR3_TWO = "cor3_two"
    THM3_SEARCH = "thm3_search"

    @property
    def has_forgery_path(self) -> bool:
        return self is not Condition.THM2C_ALPHA_SQUARED


class Status(str, Enum):
    VULNERABLE = "vulnerable"
    SAFE = "safe"
    INDETERMINATE = "indeterminate"


class Overall(str, Enum):
    FORGEABLE = "forgeable"
    NOT_FORGEABLE = "not_forgeable_within_budget"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Check:
    condition: Condition
    status: Status
    witness: tuple[int, int] | None = None
    notes: str = ""


@dataclass(frozen=True)
class AuditReport:
    key: PublicKey
    p_mod_4: int
    checks: tuple[Check, ...]
    overall: Overall
    bound: int
    max_i: int

    def check(self, condition: Condition | str) -> Check:
        condition = Condition(condition)
        return next(c for c in self.checks if c.condition is condition)

    def to_text(self) -> str:
        lines = [
            f"p = {self.key.p}  alpha = {self.key.alpha}  y = {self.key.y}",
            f"p mod 4 = {self.p_mod_4}  bound = {self.bound}  max_i = {self.max_i}",
        ]
        for c in self.checks:
            witness = "" if c.witness is None else f"  i={c.witness[0]} beta={c.witness[1]}"
            note = f"  ({c.notes})" if c.notes else ""
            lines.append(f"{c.condition.value:<22} {c.status.value:<13}{witness}{note}")
        lines.append(f"overall: {self.overall.value}")
        if self.overall is not Overall.FORGEABLE:
            lines.append("note: 'safe' means not exploitable by these attacks within the budgets above")
        return "\n".join(lines) + "\n"


def _divisor_check(condition, p, i, beta, bound, effort, note="") -> Check:
    try:
        reason = disqualify_beta(p, beta, bound, effort)
    except IncompleteFactorizationError as exc:
        return Check(condition, Status.INDETERMINATE, None, str(exc))
    if reason:
        return Check(condition, Status.SAFE, None, reason)
    return Check(condition, Status.VULNERABLE, (i, beta), note)


def _cor3_check(pub: PublicKey, dlog_budget: int, effort: Effort) -> Check:
    p, alpha = pub.p, pub.alpha
    cond = Condition.COR3_TWO
    if p % 4 != 1:
        return Check(cond, Status.SAFE, None, "requires p = 1 (mod 4)")
    if alpha == 2:
        return Check(cond, Status.VULNERABLE, (1, 2), "alpha = 2")
    try:
        # factor under the caller's effort, not whatever was cached at key load
        phi = factorize(p - 1, effort)
    except IncompleteFactorizationError as exc:
        return Check(cond, Status.INDETERMINATE, None, f"p-1 not factored: {exc}")
    if not is_primitive_root(2, p, phi):
        return Check(cond, Status.SAFE, None, "2 is not a primitive root")
    try:
        i = bsgs(DlogInstance(alpha, 2, p, p - 1), max_steps=dlog_budget)
    except BudgetExceededError as exc:
        return Check(cond, Status.INDETERMINATE, None, f"2 is primitive but {exc}")
    return Check(cond, Status.VULNERABLE, (i, 2), "2 is a primitive root")


def audit_key(
    pub: PublicKey,
    bound: int = DEFAULT_SMOOTH_BOUND,
    max_i: int = DEFAULT_MAX_EXPONENT,
    effort: Effort = DEFAULT_EFFORT,
    dlog_budget: int = DEFAULT_DLOG_BUDGET,
) -> AuditReport:
    _require_public(pub)
    p, alpha = pub.p, pub.alpha
    n = p - 1
    inv = mod_inv(alpha, p)
    one_mod_4 = p % 4 == 1
    parity_note = "" if one_mod_4 else "p = 3 (mod 4): forgery for one digest parity class only"

    checks = [
        _divisor_check(Condition.COR1_ALPHA, p, 1, alpha, bound, effort, parity_note),
        _divisor_check(Condition.THM2B_INVERSE, p, p - 2, inv, bound, effort, parity_note),
        _divisor_check(
            Condition.THM2C_ALPHA_SQUARED, p, 2, alpha * alpha % p, bound, effort,
            "detected only; no forgery is implemented for this condition",
        ),
    ]
    if one_mod_4:
        half = n // 2
        checks.append(_divisor_check(Condition.COR2_NEGATED_ALPHA, p, half + 1, p - alpha, bound, effort))
        checks.append(_divisor_check(Condition.COR2_NEGATED_INVERSE, p, half - 1, p - inv, bound, effort))
    else:
        for cond in (Condition.COR2_NEGATED_ALPHA, Condition.COR2_NEGATED_INVERSE):
            checks.append(Check(cond, Status.SAFE, None, "requires p = 1 (mod 4)"))
    checks.append(_cor3_check(pub, dlog_budget, effort))

    try:
        found = find_smooth_exponent(pub, bound, max_i)
    except IncompleteFactorizationError as exc:
        checks.append(Check(Condition.THM3_SEARCH, Status.INDETERMINATE, None, str(exc)))
    else:
        if found is None:
            checks.append(Check(Condition.THM3_SEARCH, Status.SAFE, None, f"no usable i <= {max_i}"))
        else:
            checks.append(Check(Condition.THM3_SEARCH, Status.VULNERABLE, found, parity_note))

    if any(c.status is Status.VULNERABLE and c.condition.has_forgery_path for c in checks):
        overall = Overall.FORGEABLE
    elif any(c.status is Status.INDETERMINATE for c in checks):
        overall = Overall.INDETERMINATE
    else:
        overall = Overall.NOT_FORGEABLE
    return AuditReport(pub, p % 4, tuple(checks), overall, bound, max_i)
