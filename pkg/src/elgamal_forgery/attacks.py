"""Universal forgery against ElGamal keys with a weak generator.

Everything here works from the public key alone. The central construction:
if ``beta = alpha**i mod p`` divides ``p - 1``, is smooth, and
``gcd(i, p - 1) = 1``, then ``(p, beta, y**i mod p)`` is itself a key whose
generator divides ``p - 1``. A signature ``(u, v)`` forged for that key
under the classical smooth-generator attack gives ``(u, v / i)`` for the
original key.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

from .dlog import DlogInstance, bsgs, pohlig_hellman
from .elgamal import PublicKey, Signature, verify
from .errors import (
    AttackInapplicableError,
    BudgetExceededError,
    DomainError,
    IncompleteFactorizationError,
    NoSolutionError,
    ParityError,
    PreconditionError,
    SubgroupOrderError,
)
from .numtheory import (
    DEFAULT_EFFORT,
    Effort,
    factorize,
    is_b_smooth,
    is_primitive_root,
    mod_inv,
    multiplicative_order,
    solve_linear_congruence,
    two_adic_split,
)

__all__ = [
    "DEFAULT_DLOG_BUDGET",
    "DEFAULT_MAX_EXPONENT",
    "DEFAULT_SMOOTH_BOUND",
    "Candidate",
    "FictiveKey",
    "ForgeryOutcome",
    "Intermediates",
    "Strategy",
    "corollary2_candidates",
    "find_smooth_exponent",
    "forge_auto",
    "forge_bleichenbacher",
    "forge_corollary2",
    "forge_corollary3",
    "forge_theorem3",
    "iter_smooth_exponents",
]

# tool defaults, not derived from any analysis
DEFAULT_SMOOTH_BOUND = 1 << 16
DEFAULT_MAX_EXPONENT = 10**6
DEFAULT_DLOG_BUDGET = 1 << 20


class Strategy(str, Enum):
    ALPHA_DIRECT = "alpha_direct"
    INVERSE_ALPHA = "inverse_alpha"
    NEGATED_ALPHA = "negated_alpha"
    NEGATED_INVERSE_ALPHA = "negated_inverse_alpha"
    EXPONENT_SEARCH = "exponent_search"
    TWO_GENERATOR = "two_generator"


@dataclass(frozen=True)
class Intermediates:
    """Values computed along the way, kept so a forgery can be audited by hand.

    ``subgroup_target`` is ``y**w`` (or ``z**w`` for a fictive key), ``x0`` its
    logarithm to the base ``b``, and ``(u, v)`` the signature on the key the
    attack was actually run against.
    """

    k: int
    w: int
    b: int
    subgroup_target: int
    x0: int
    u: int
    v: int


@dataclass(frozen=True)
class ForgeryOutcome:
    signature: Signature
    strategy: Strategy
    exponent_i: int
    intermediates: Intermediates


@dataclass(frozen=True)
class FictiveKey:
    """The key ``(p, alpha**i, y**i)`` derived from ``base_key``."""

    base_key: PublicKey
    i: int
    beta: int
    z: int

    @classmethod
    def from_exponent(cls, pub: PublicKey, i: int) -> FictiveKey:
        n = pub.p - 1
        if i < 1 or math.gcd(i, n) != 1:
            raise DomainError(f"exponent {i} is not coprime to p-1 = {n}")
        return cls(pub, i, pow(pub.alpha, i, pub.p), pow(pub.y, i, pub.p))

    @property
    def public(self) -> PublicKey:
        return PublicKey(self.base_key.p, self.beta, self.z, validate=False)


class Candidate(NamedTuple):
    variant: Strategy
    i: int
    beta: int


def _require_public(pub):
    if type(pub) is not PublicKey:
        raise TypeError(f"attacks take a PublicKey, got {type(pub).__name__}")


def disqualify_beta(p: int, beta: int, bound: int, effort: Effort = DEFAULT_EFFORT) -> str | None:
    """Why ``beta`` cannot serve as a smooth divisor generator, or None if it can."""
    n = p - 1
    if beta <= 1 or beta >= n:
        return f"{beta} is outside (1, p-1)"
    if n % beta:
        return f"{beta} does not divide p-1 = {n}"
    if not is_b_smooth(beta, bound, effort):
        return f"{beta} is not {bound}-smooth"
    return None


def _algorithm1(pub: PublicKey, m: int) -> tuple[Signature, Intermediates]:
    """Forge on ``pub`` whose generator divides ``p - 1`` (smoothness checked by caller)."""
    p, alpha, y = pub.p, pub.alpha, pub.y
    n = p - 1
    k = (p - 3) // 2
    r = pow(alpha, k, p)
    w = n // alpha
    if r != w:
        raise SubgroupOrderError(
            f"alpha^((p-3)/2) = {r} differs from (p-1)/alpha = {w}; alpha is not a primitive root"
        )
    b = pow(alpha, w, p)
    target = pow(y, w, p)
    alpha_factors = factorize(alpha)
    try:
        order_b = multiplicative_order(b, p, alpha_factors)
    except DomainError:
        order_b = None
    if order_b != alpha:
        raise SubgroupOrderError(f"b = {b} does not have order {alpha}")
    try:
        x0 = pohlig_hellman(DlogInstance(b, target, p, alpha), alpha_factors)
    except NoSolutionError as exc:
        raise SubgroupOrderError(f"y^w = {target} is outside the subgroup of b") from exc

    rhs = (m - r * x0) % n
    if math.gcd(k, n) == 1:
        candidates = [rhs * mod_inv(k, n) % n]
    else:
        # p = 3 (mod 4): k is even, only one digest parity class is solvable
        candidates = solve_linear_congruence(k, rhs, n)
    for s in candidates:
        sig = Signature(r, s)
        if verify(pub, m, sig):
            return sig, Intermediates(k, w, b, target, x0, r, s)
    if math.gcd(k, n) == 1:
        raise AttackInapplicableError(f"forged ({r}, {candidates[0]}) failed verification")
    raise ParityError(f"digest {m} is in the unreachable parity class for p = {p} = 3 (mod 4)")


def forge_bleichenbacher(pub: PublicKey, m: int, bound: int = DEFAULT_SMOOTH_BOUND) -> ForgeryOutcome:
    """Forge directly when ``alpha`` is smooth and divides ``p - 1``."""
    _require_public(pub)
    reason = disqualify_beta(pub.p, pub.alpha, bound)
    if reason:
        raise PreconditionError(f"smooth-generator attack needs alpha | p-1: {reason}")
    sig, inter = _algorithm1(pub, m)
    return ForgeryOutcome(sig, Strategy.ALPHA_DIRECT, 1, inter)


def iter_smooth_exponents(
    pub: PublicKey,
    bound: int = DEFAULT_SMOOTH_BOUND,
    max_i: int = DEFAULT_MAX_EXPONENT,
    start: int = 1,
) -> Iterator[tuple[int, int]]:
    """Yield every ``(i, alpha**i mod p)`` in ``[start, max_i]`` usable for forgery, ascending."""
    _require_public(pub)
    if max_i < 1 or start < 1:
        raise DomainError("max_i and start must be >= 1")
    p, alpha = pub.p, pub.alpha
    n = p - 1
    beta = pow(alpha, start - 1, p)
    for i in range(start, min(max_i, n - 1) + 1):
        beta = beta * alpha % p
        if beta > 1 and n % beta == 0 and beta < n and math.gcd(i, n) == 1:
            if is_b_smooth(beta, bound):
                yield i, beta


def find_smooth_exponent(
    pub: PublicKey, bound: int = DEFAULT_SMOOTH_BOUND, max_i: int = DEFAULT_MAX_EXPONENT
) -> tuple[int, int] | None:
    """Smallest ``i <= max_i`` coprime to ``p-1`` with ``alpha**i mod p`` a smooth divisor of ``p-1``."""
    return next(iter_smooth_exponents(pub, bound, max_i), None)


def forge_theorem3(
    pub: PublicKey,
    m: int,
    i: int,
    bound: int = DEFAULT_SMOOTH_BOUND,
    strategy: Strategy = Strategy.EXPONENT_SEARCH,
) -> ForgeryOutcome:
    """Forge through the fictive key ``(p, alpha**i, y**i)``."""
    _require_public(pub)
    fictive = FictiveKey.from_exponent(pub, i)
    reason = disqualify_beta(pub.p, fictive.beta, bound)
    if reason:
        raise PreconditionError(f"alpha^{i} mod p unusable: {reason}")
    inner, inter = _algorithm1(fictive.public, m)
    u, v = inner.r, inner.s
    n = pub.p - 1
    sig = Signature(u, v * mod_inv(i, n) % n)
    if not verify(pub, m, sig):
        raise AttackInapplicableError(f"forged {sig} failed verification under the original key")
    return ForgeryOutcome(sig, strategy, i, inter)


def corollary2_candidates(pub: PublicKey) -> list[Candidate]:
    """The four exponents whose powers are alpha, 1/alpha, -alpha and -1/alpha.

    With ``p - 1 = 2**k * l`` and ``p = 1 (mod 4)``, ``alpha**(2**(k-1)*l) = -1``
    for primitive alpha, so ``-alpha`` and ``-1/alpha`` sit at exponents
    ``2**(k-1)*l +/- 1``, both coprime to ``p - 1``.
    """
    _require_public(pub)
    p, alpha = pub.p, pub.alpha
    if p % 4 != 1:
        raise DomainError(f"p = {p} is not 1 (mod 4)")
    k, l = two_adic_split(p - 1)
    half = 2 ** (k - 1) * l
    inv = mod_inv(alpha, p)
    candidates = [
        Candidate(Strategy.ALPHA_DIRECT, 1, alpha),
        Candidate(Strategy.INVERSE_ALPHA, p - 2, inv),
        Candidate(Strategy.NEGATED_ALPHA, half + 1, p - alpha),
        Candidate(Strategy.NEGATED_INVERSE_ALPHA, half - 1, p - inv),
    ]
    for c in candidates:
        if pow(alpha, c.i, p) != c.beta:
            raise DomainError(f"alpha^{c.i} != {c.beta} (mod p); alpha is not a primitive root")
    return candidates


def _safe_candidates(pub: PublicKey) -> list[Candidate]:
    if pub.p % 4 == 1:
        return corollary2_candidates(pub)
    # the +/- construction needs 4 | p-1; alpha and 1/alpha remain usable
    return [
        Candidate(Strategy.ALPHA_DIRECT, 1, pub.alpha),
        Candidate(Strategy.INVERSE_ALPHA, pub.p - 2, mod_inv(pub.alpha, pub.p)),
    ]


def _try_candidates(pub, m, candidates, bound, reasons, effort=DEFAULT_EFFORT) -> ForgeryOutcome | None:
    for c in candidates:
        try:
            reason = disqualify_beta(pub.p, c.beta, bound, effort)
        except IncompleteFactorizationError as exc:
            reason = str(exc)
        if reason:
            reasons[c.variant.value] = reason
            continue
        try:
            return forge_theorem3(pub, m, c.i, bound, strategy=c.variant)
        except AttackInapplicableError as exc:
            reasons[c.variant.value] = str(exc)
    return None


def forge_corollary2(pub: PublicKey, m: int, bound: int = DEFAULT_SMOOTH_BOUND) -> ForgeryOutcome:
    reasons: dict[str, str] = {}
    outcome = _try_candidates(pub, m, corollary2_candidates(pub), bound, reasons)
    if outcome is None:
        raise AttackInapplicableError("none of alpha, 1/alpha, -alpha, -1/alpha qualifies", reasons)
    return outcome


def forge_corollary3(
    pub: PublicKey,
    m: int,
    dlog_budget: int = DEFAULT_DLOG_BUDGET,
    bound: int = DEFAULT_SMOOTH_BOUND,
    effort: Effort = DEFAULT_EFFORT,
) -> ForgeryOutcome:
    """Forge when alpha is 2, or when 2 is primitive and ``log_alpha(2)`` is within budget."""
    _require_public(pub)
    p, alpha = pub.p, pub.alpha
    if p % 4 != 1:
        raise PreconditionError(f"p = {p} is not 1 (mod 4)")
    if alpha == 2:
        outcome = forge_bleichenbacher(pub, m, max(bound, 2))
        return ForgeryOutcome(outcome.signature, Strategy.TWO_GENERATOR, 1, outcome.intermediates)
    try:
        phi = pub.phi_factors(effort)
    except IncompleteFactorizationError as exc:
        raise AttackInapplicableError(f"cannot decide whether 2 is primitive: {exc}") from exc
    if not is_primitive_root(2, p, phi):
        raise PreconditionError(f"2 is not a primitive root mod {p}")
    try:
        i = bsgs(DlogInstance(alpha, 2, p, p - 1), max_steps=dlog_budget)
    except BudgetExceededError as exc:
        raise AttackInapplicableError(str(exc)) from exc
    return forge_theorem3(pub, m, i, max(bound, 2), strategy=Strategy.TWO_GENERATOR)


def forge_auto(
    pub: PublicKey,
    m: int,
    bound: int = DEFAULT_SMOOTH_BOUND,
    max_i: int = DEFAULT_MAX_EXPONENT,
    dlog_budget: int = DEFAULT_DLOG_BUDGET,
    effort: Effort = DEFAULT_EFFORT,
) -> ForgeryOutcome:
    """Try the closed-form exponents, then the generator 2, then a linear exponent scan."""
    _require_public(pub)
    reasons: dict[str, str] = {}
    try:
        candidates = _safe_candidates(pub)
    except DomainError as exc:
        reasons["candidates"] = str(exc)
        candidates = []
    outcome = _try_candidates(pub, m, candidates, bound, reasons, effort)
    if outcome is not None:
        return outcome

    try:
        return forge_corollary3(pub, m, dlog_budget, bound, effort)
    except (PreconditionError, AttackInapplicableError) as exc:
        reasons[Strategy.TWO_GENERATOR.value] = str(exc)

    search_reason = f"no usable exponent i <= {max_i}"
    try:
        for i, _ in iter_smooth_exponents(pub, bound, max_i):
            try:
                return forge_theorem3(pub, m, i, bound)
            except AttackInapplicableError as exc:
                search_reason = f"last candidate i = {i}: {exc}"
    except IncompleteFactorizationError as exc:
        search_reason = str(exc)
    reasons[Strategy.EXPONENT_SEARCH.value] = search_reason
    raise AttackInapplicableError("no attack applies within the given budgets", reasons)
