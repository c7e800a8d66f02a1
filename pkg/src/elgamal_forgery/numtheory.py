"""Arbitrary-precision modular arithmetic and elementary number theory.

Every function here is pure. Integers are plain Python ``int`` so there is
no width limit; primality and factoring are deterministic (no RNG).
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError, IncompleteFactorizationError, NotInvertibleError

__all__ = [
    "Effort",
    "Factorization",
    "crt",
    "egcd",
    "factorize",
    "is_b_smooth",
    "is_prime",
    "is_primitive_root",
    "mod_inv",
    "mod_pow",
    "multiplicative_order",
    "primes_up_to",
    "solve_linear_congruence",
    "two_adic_split",
]

_EXACT_PRIMALITY_LIMIT = 1 << 16


@dataclass(frozen=True)
class Effort:
    """Work budget for :func:`factorize`.

    Trial division runs over primes up to ``trial_bound``; whatever composite
    part survives gets at most ``rho_iterations`` Pollard-rho steps in total.
    """

    trial_bound: int = 10**6
    rho_iterations: int = 200_000
    rounds: int = 40

    def __post_init__(self):
        if self.trial_bound < 2:
            raise DomainError("trial_bound must be at least 2")
        if self.rho_iterations < 0 or self.rounds < 1:
            raise DomainError("rho_iterations must be >= 0 and rounds >= 1")


DEFAULT_EFFORT = Effort()


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``value = prod(q**e for q, e in factors)``."""

    factors: tuple[tuple[int, int], ...]
    value: int = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        factors = tuple((int(q), int(e)) for q, e in self.factors)
        object.__setattr__(self, "factors", factors)
        product = 1
        previous = 1
        for q, e in factors:
            if q <= previous or e < 1:
                raise DomainError(f"malformed factor entry ({q}, {e})")
            previous = q
            product *= q**e
        if self.value is None:
            object.__setattr__(self, "value", product)
        elif product != self.value:
            raise DomainError(f"factors multiply to {product}, not {self.value}")

    @classmethod
    def from_dict(cls, mapping: dict[int, int], value: int | None = None) -> Factorization:
        return cls(tuple(sorted(mapping.items())), value)

    @property
    def primes(self) -> list[int]:
        return [q for q, _ in self.factors]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def largest_prime(self) -> int:
        return self.factors[-1][0] if self.factors else 1

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise DomainError("negative exponent; invert the base explicitly")
    return pow(base, exponent, modulus)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = gcd(a, b) = u*a + v*b``."""
    if a == 0 and b == 0:
        raise DomainError("egcd(0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def mod_inv(a: int, n: int) -> int:
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    g, u, _ = egcd(a % n, n)
    if g != 1:
        raise NotInvertibleError(a, n, g)
    return u % n


def solve_linear_congruence(a: int, c: int, n: int) -> list[int]:
    """All ``s`` in ``[0, n)`` with ``a*s = c (mod n)``, ascending."""
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    a %= n
    c %= n
    g = math.gcd(a, n)
    if c % g:
        return []
    step = n // g
    if step == 1:
        return list(range(n))
    s0 = (c // g) * mod_inv(a // g, step) % step
    return [s0 + t * step for t in range(g)]


@lru_cache(maxsize=8)
def _sieve(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for q in range(2, math.isqrt(limit) + 1):
        if flags[q]:
            flags[q * q :: q] = bytearray(len(range(q * q, limit + 1, q)))
    return tuple(i for i, f in enumerate(flags) if f)


def primes_up_to(limit: int) -> Sequence[int]:
    """Primes ``<= limit`` in increasing order."""
    if limit <= DEFAULT_EFFORT.trial_bound:
        table = _sieve(DEFAULT_EFFORT.trial_bound)
        return table[: bisect_right(table, limit)]
    return _sieve(limit)


def is_prime(n: int, rounds: int = 40) -> bool:
    """Miller-Rabin with the first ``rounds`` prime bases.

    Exact below 2**16 (trial division) and, since the first 13 prime bases
    are a deterministic witness set there, for every n < 3.3e24 as well.
    """
    if n < 2:
        return False
    if n < _EXACT_PRIMALITY_LIMIT:
        for q in primes_up_to(255):
            if q * q > n:
                return True
            if n % q == 0:
                return n == q
        return True
    for q in primes_up_to(255):
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    bases = primes_up_to(1000)[: max(1, rounds)]
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, c: int, budget: int) -> tuple[int | None, int]:
    """One Brent-rho run; returns (nontrivial factor or None, steps used)."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            used += min(m, r - k)
            g = math.gcd(q, n)
            k += m
            if used >= budget and g == 1:
                return None, used
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            used += 1
        if g == n:
            return None, used
    return g, used


def _iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) by Newton iteration."""
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_power(n: int) -> tuple[int, int] | None:
    for k in primes_up_to(n.bit_length()):
        root = _iroot(n, k)
        if root**k == n:
            return root, k
    return None


def factorize(n: int, effort: Effort = DEFAULT_EFFORT) -> Factorization:
    """Complete factorization of ``n`` or :class:`IncompleteFactorizationError`."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    found: dict[int, int] = {}
    m = n
    for q in primes_up_to(effort.trial_bound):
        if q * q > m:
            break
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            found[q] = e
    if m == 1:
        return Factorization.from_dict(found, n)

    # from here on no cofactor has a prime factor <= trial_bound
    small_square = effort.trial_bound**2
    stack = [m]
    stuck = []
    budget = effort.rho_iterations
    while stack:
        c = stack.pop()
        if c < small_square or is_prime(c, effort.rounds):
            found[c] = found.get(c, 0) + 1
            continue
        power = _perfect_power(c)
        if power is not None:
            root, k = power
            stack.extend([root] * k)
            continue
        factor = None
        seed = 1
        while factor is None and budget > 0:
            factor, used = _brent_rho(c, seed, budget)
            budget -= used
            seed += 1
        if factor is None:
            stuck.append(c)
        else:
            stack.extend((factor, c // factor))
    if stuck:
        cofactor = math.prod(stuck)
        partial = Factorization.from_dict(found)
        raise IncompleteFactorizationError(n, partial, cofactor)
    return Factorization.from_dict(found, n)


def is_b_smooth(n: int, bound: int, effort: Effort = DEFAULT_EFFORT) -> bool:
    """True iff every prime factor of ``n`` is at most ``bound``."""
    if bound < 2:
        raise DomainError(f"smoothness bound must be >= 2, got {bound}")
    if n < 1:
        raise DomainError(f"smoothness is defined for n >= 1, got {n}")
    limit = min(bound, effort.trial_bound)
    for q in primes_up_to(limit):
        if q * q > n:
            # what is left is 1 or a prime
            return n <= bound
        while n % q == 0:
            n //= q
    if n == 1:
        return True
    if bound <= effort.trial_bound:
        return False
    return factorize(n, effort).largest_prime() <= bound


def multiplicative_order(a: int, n: int, group_order: Factorization) -> int:
    """Order of ``a`` modulo ``n`` given the factored order of a group containing it."""
    if pow(a, group_order.value, n) != 1:
        raise DomainError(f"{a}^{group_order.value} != 1 (mod {n})")
    order = group_order.value
    for q, e in group_order:
        for _ in range(e):
            if pow(a, order // q, n) == 1:
                order //= q
            else:
                break
    return order


def is_primitive_root(a: int, p: int, phi_factors: Factorization) -> bool:
    if phi_factors.value != p - 1:
        raise DomainError(f"factorization of {phi_factors.value} given, need p-1 = {p - 1}")
    if not 1 <= a < p:
        raise DomainError(f"{a} outside [1, {p})")
    return all(pow(a, (p - 1) // q, p) != 1 for q in phi_factors.primes)


def crt(pairs: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Combine ``x = r_j (mod n_j)`` for pairwise coprime moduli into ``(x, N)``."""
    x, modulus = 0, 1
    for residue, n in pairs:
        if n < 2:
            raise DomainError(f"modulus must be >= 2, got {n}")
        g, u, _ = egcd(modulus, n)
        if g != 1:
            raise DomainError(f"moduli {modulus} and {n} are not coprime")
        # x + modulus * t = residue (mod n)
        t = (residue - x) * u % n
        x += modulus * t
        modulus *= n
        x %= modulus
    return x, modulus


def two_adic_split(n: int) -> tuple[int, int]:
    """Write even ``n`` as ``2**k * l`` with ``l`` odd; returns ``(k, l)``."""
    if n <= 0 or n & 1:
        raise DomainError(f"two_adic_split needs a positive even number, got {n}")
    k = (n & -n).bit_length() - 1
    return k, n >> k
