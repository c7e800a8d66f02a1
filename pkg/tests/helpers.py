"""Brute-force oracles and weak-key constructors shared by the test modules.

The oracles deliberately avoid the package so they stay independent of the
code they check.
"""

import math
import random

from elgamal_forgery.elgamal import PublicKey


def trial_factor(n):
    """Naive trial division; returns {prime: exponent}."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def trial_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def brute_order(a, p):
    acc, e = a % p, 1
    while acc != 1:
        acc = acc * a % p
        e += 1
    return e


def brute_is_primitive(a, p):
    return brute_order(a, p) == p - 1


def divisors(factors):
    divs = [1]
    for q, e in factors.items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def oracle_primitive(a, p, factors):
    return all(pow(a, (p - 1) // q, p) != 1 for q in factors)


def random_prime(rng, bits, residue=None, modulus=None):
    while True:
        n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if modulus is not None:
            n -= (n - residue) % modulus
            if n.bit_length() != bits:
                continue
        if trial_is_prime(n) if n < 1 << 40 else pow(2, n - 1, n) == 1:
            return n


def random_primitive_root(rng, p, factors):
    while True:
        a = rng.randint(2, p - 2)
        if oracle_primitive(a, p, factors):
            return a


KINDS = (
    "alpha_direct",
    "inverse_alpha",
    "negated_alpha",
    "negated_inverse_alpha",
    "exponent_search",
    "two_generator",
)


def weak_key(rng, bits, kind, max_exponent=2000):
    """A key with p = 1 (mod 4) planted with the weakness named by ``kind``.

    Returns (PublicKey, x).
    """
    while True:
        p = random_prime(rng, bits, 1, 4)
        n = p - 1
        factors = trial_factor(n)
        if kind == "two_generator":
            if not oracle_primitive(2, p, factors):
                continue
            alpha = random_primitive_root(rng, p, factors)
        else:
            smooth = [
                d for d in divisors(factors)[1:-1]
                if max(trial_factor(d)) <= 1 << 16 and oracle_primitive(d, p, factors)
            ]
            if not smooth:
                continue
            beta = rng.choice(smooth)
            if kind == "alpha_direct":
                alpha = beta
            elif kind == "inverse_alpha":
                alpha = pow(beta, -1, p)
            elif kind == "negated_alpha":
                alpha = p - beta
            elif kind == "negated_inverse_alpha":
                alpha = pow(p - beta, -1, p)
            elif kind == "exponent_search":
                while True:
                    i = rng.randint(2, max_exponent)
                    if math.gcd(i, n) == 1:
                        break
                alpha = pow(beta, pow(i, -1, n), p)
            else:
                raise ValueError(kind)
        if not 2 <= alpha <= p - 2:
            continue
        x = rng.randint(2, p - 2)
        return PublicKey(p, alpha, pow(alpha, x, p)), x


def strong_key(rng, bits):
    """p = 8q + 1 with q prime > 2**16: no smooth divisor of p-1 is primitive.

    The only smooth divisors are 2, 4 and 8, all quadratic residues since
    p = 1 (mod 8), so none of the attacks applies for any budget.
    """
    while True:
        q = random_prime(rng, bits - 3)
        p = 8 * q + 1
        if q > 1 << 16 and trial_is_prime(p):
            factors = {2: 3, q: 1}
            alpha = random_primitive_root(rng, p, factors)
            x = rng.randint(2, p - 2)
            return PublicKey(p, alpha, pow(alpha, x, p)), x


def key_from_x(p, alpha, x):
    return PublicKey(p, alpha, pow(alpha, x, p))


def seeded(seed):
    return random.Random(seed)
