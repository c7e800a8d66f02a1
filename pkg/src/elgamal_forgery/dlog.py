"""Discrete logarithms in subgroups of smooth order modulo a prime."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BudgetExceededError, DomainError, NoSolutionError
from .numtheory import Factorization, crt, multiplicative_order

__all__ = [
    "DlogInstance",
    "StepCounter",
    "brute_force_dlog",
    "bsgs",
    "pohlig_hellman",
]

BRUTE_FORCE_LIMIT = 10**7


@dataclass(frozen=True)
class DlogInstance:
    """Solve ``base**e = target (mod prime_modulus)``; ``order`` is the order of ``base``."""

    base: int
    target: int
    prime_modulus: int
    order: int

    def __post_init__(self):
        p = self.prime_modulus
        if p < 2:
            raise DomainError("modulus must be >= 2")
        if not (1 <= self.base < p and 1 <= self.target < p):
            raise DomainError("base and target must lie in [1, p)")
        if self.order < 1 or pow(self.base, self.order, p) != 1:
            raise DomainError(f"{self.base}^{self.order} != 1 (mod {p})")


@dataclass
class StepCounter:
    """Group operations performed by :func:`bsgs` (baby plus giant steps)."""

    steps: int = 0


def brute_force_dlog(inst: DlogInstance) -> int:
    if inst.order > BRUTE_FORCE_LIMIT:
        raise DomainError(f"order {inst.order} too large for brute force")
    p = inst.prime_modulus
    acc = 1
    for e in range(inst.order):
        if acc == inst.target:
            return e
        acc = acc * inst.base % p
    raise NoSolutionError(f"{inst.target} is not a power of {inst.base} mod {p}")


def bsgs(inst: DlogInstance, counter: StepCounter | None = None, max_steps: int | None = None) -> int:
    """Baby-step giant-step; returns the smallest exponent in ``[0, order)``.

    ``max_steps`` caps the total work; :class:`BudgetExceededError` is raised
    before any table is built when ``2*ceil(sqrt(order))`` would exceed it.
    """
    n = inst.order
    p = inst.prime_modulus
    m = math.isqrt(n - 1) + 1 if n > 1 else 1
    if max_steps is not None and 2 * m > max_steps:
        raise BudgetExceededError(f"bsgs over order {n} needs ~{2 * m} steps, budget {max_steps}")
    counter = counter if counter is not None else StepCounter()

    table: dict[int, int] = {}
    acc = 1
    for j in range(m):
        table.setdefault(acc, j)
        acc = acc * inst.base % p
    counter.steps += m

    giant = pow(inst.base, -m, p)
    gamma = inst.target
    for i in range(m + 1):
        counter.steps += 1
        j = table.get(gamma)
        if j is not None:
            e = i * m + j
            if e < n:
                return e
        gamma = gamma * giant % p
    raise NoSolutionError(f"{inst.target} is not a power of {inst.base} mod {p}")


def pohlig_hellman(inst: DlogInstance, order_factors: Factorization) -> int:
    """Smallest ``e >= 0`` with ``base**e = target``, solved prime power by prime power."""
    if order_factors.value != inst.order:
        raise DomainError(f"factorization is of {order_factors.value}, order is {inst.order}")
    p = inst.prime_modulus
    n = inst.order
    residues = []
    for q, e in order_factors:
        qe = q**e
        g = pow(inst.base, n // qe, p)
        h = pow(inst.target, n // qe, p)
        # gamma generates the order-q layer; lift one base-q digit at a time
        gamma = pow(g, qe // q, p)
        g_inv = pow(g, -1, p)
        x = 0
        for k in range(e):
            hk = pow(pow(g_inv, x, p) * h % p, qe // q ** (k + 1), p)
            d = bsgs(DlogInstance(gamma, hk, p, q))
            x += d * q**k
        residues.append((x, qe))
    x, _ = crt(residues)
    if pow(inst.base, x, p) != inst.target:
        raise NoSolutionError(f"{inst.target} is not in the subgroup generated by {inst.base}")
    # a non-minimal ``order`` leaves several valid exponents; keep the smallest
    return x % multiplicative_order(inst.base, p, order_factors)
