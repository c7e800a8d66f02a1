"""Textbook ElGamal signatures over the multiplicative group modulo a prime.

A signature ``(r, s)`` on digest ``m`` is valid when
``alpha**m == y**r * r**s (mod p)``.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import InitVar, dataclass

from .errors import DomainError, IncompleteFactorizationError, KeygenError
from .numtheory import Effort, Factorization, factorize, is_prime, is_primitive_root, mod_inv

__all__ = [
    "KEY_CHECK_EFFORT",
    "PrivateKey",
    "PublicKey",
    "Signature",
    "digest_of",
    "keygen",
    "sign",
    "verify",
]

# construction-time primitivity check; kept light so large keys stay cheap to load
KEY_CHECK_EFFORT = Effort(trial_bound=1 << 16, rho_iterations=20_000)


@dataclass(frozen=True)
class PublicKey:
    """Public key ``(p, alpha, y)``.

    With ``validate`` (the default) the constructor checks that ``p`` is prime
    and, when ``p - 1`` factors within :data:`KEY_CHECK_EFFORT`, that ``alpha``
    is a primitive root. Pass ``validate=False`` to build deliberately
    malformed keys, e.g. in tests.
    """

    p: int
    alpha: int
    y: int
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if not validate:
            return
        p = self.p
        if p < 5 or not is_prime(p):
            raise DomainError(f"p = {p} is not a prime >= 5")
        if not 2 <= self.alpha <= p - 2:
            raise DomainError(f"alpha = {self.alpha} outside [2, p-2]")
        if not 1 <= self.y <= p - 1:
            raise DomainError(f"y = {self.y} outside [1, p-1]")
        try:
            phi = factorize(p - 1, KEY_CHECK_EFFORT)
        except IncompleteFactorizationError:
            return
        object.__setattr__(self, "_phi", phi)
        if not is_primitive_root(self.alpha, p, phi):
            raise DomainError(f"alpha = {self.alpha} is not a primitive root mod {p}")

    def phi_factors(self, effort: Effort | None = None) -> Factorization:
        """Factorization of ``p - 1`` (may raise IncompleteFactorizationError)."""
        cached = self.__dict__.get("_phi")
        if cached is not None:
            return cached
        phi = factorize(self.p - 1) if effort is None else factorize(self.p - 1, effort)
        object.__setattr__(self, "_phi", phi)
        return phi


@dataclass(frozen=True)
class PrivateKey:
    public: PublicKey
    x: int

    def __post_init__(self):
        pub = self.public
        if not 2 <= self.x <= pub.p - 2:
            raise DomainError(f"x = {self.x} outside [2, p-2]")
        if pow(pub.alpha, self.x, pub.p) != pub.y:
            raise DomainError("alpha^x != y (mod p)")


@dataclass(frozen=True)
class Signature:
    r: int
    s: int


def keygen(
    bit_length: int,
    rng: random.Random | None = None,
    require_1_mod_4: bool = False,
    effort: Effort = KEY_CHECK_EFFORT,
    max_attempts: int = 1000,
) -> PrivateKey:
    """Random key with a ``bit_length``-bit prime modulus.

    ``p - 1`` must factor within ``effort`` so that a primitive root can be
    certified; primes for which it does not are skipped.
    """
    if bit_length < 8:
        raise DomainError(f"bit_length must be >= 8, got {bit_length}")
    rng = rng if rng is not None else random.Random()
    for _ in range(max_attempts):
        p = _random_prime(bit_length, rng, require_1_mod_4)
        try:
            phi = factorize(p - 1, effort)
        except IncompleteFactorizationError:
            continue
        while True:
            alpha = rng.randint(2, p - 2)
            if is_primitive_root(alpha, p, phi):
                break
        x = rng.randint(2, p - 2)
        pub = PublicKey(p, alpha, pow(alpha, x, p), validate=False)
        object.__setattr__(pub, "_phi", phi)
        return PrivateKey(pub, x)
    raise KeygenError(f"no {bit_length}-bit prime with factorable p-1 in {max_attempts} tries")


def _random_prime(bits: int, rng: random.Random, one_mod_4: bool) -> int:
    while True:
        n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if one_mod_4:
            n = (n & ~3) | 1
        if is_prime(n):
            return n


def sign(key: PrivateKey, m: int, rng: random.Random | None = None, k: int | None = None) -> Signature:
    pub = key.public
    n = pub.p - 1
    if k is None:
        rng = rng if rng is not None else random.Random()
        while True:
            k = rng.randrange(1, n)
            if math.gcd(k, n) == 1:
                break
    elif math.gcd(k, n) != 1:
        raise DomainError(f"nonce {k} is not invertible modulo {n}")
    r = pow(pub.alpha, k, pub.p)
    s = (m - key.x * r) * mod_inv(k, n) % n
    return Signature(r, s)


def verify(pub: PublicKey, m: int, sig: Signature, strict: bool = True) -> bool:
    """Check ``alpha**m == y**r * r**s (mod p)``.

    ``strict`` additionally requires ``0 < r < p``; without it any ``r``
    congruent modulo ``p*(p-1)`` to a valid one is accepted.
    """
    p = pub.p
    r, s = sig.r, sig.s
    if s < 0 or r < 0:
        return False
    if strict and not 0 < r < p:
        return False
    lhs = pow(pub.alpha, m % (p - 1), p)
    rhs = pow(pub.y, r, p) * pow(r, s, p) % p
    return lhs == rhs


def digest_of(message: bytes, pub: PublicKey, mode: str = "pass-through", hash_name: str = "sha256") -> int:
    """Map message bytes to a digest in ``[0, p-2]``.

    ``pass-through`` reads the bytes as a decimal integer; ``hash`` applies
    ``hashlib.new(hash_name)`` and reads the digest big-endian.
    """
    if mode == "pass-through":
        try:
            value = int(message.decode("ascii").strip())
        except (UnicodeDecodeError, ValueError) as exc:
            raise DomainError(f"not a decimal integer: {message[:32]!r}") from exc
    elif mode == "hash":
        value = int.from_bytes(hashlib.new(hash_name, message).digest(), "big")
    else:
        raise DomainError(f"unknown digest mode {mode!r}")
    return value % (pub.p - 1)
