"""Acceptance suite: one test per criterion, summarised at the end of the run.

Run alone with ``pytest tests/test_acceptance.py``.
"""

import math
import random
import time
from collections import Counter

import pytest

from elgamal_forgery.attacks import (
    find_smooth_exponent,
    forge_auto,
    forge_bleichenbacher,
    forge_theorem3,
)
from elgamal_forgery.audit import Overall, audit_key
from elgamal_forgery.dlog import DlogInstance, brute_force_dlog, pohlig_hellman
from elgamal_forgery.elgamal import PublicKey, Signature, keygen, sign, verify
from elgamal_forgery.errors import AttackInapplicableError, NoSolutionError
from elgamal_forgery.numtheory import factorize, is_prime, mod_pow, primes_up_to, two_adic_split

from helpers import KINDS, divisors, oracle_primitive, random_primitive_root, strong_key, trial_factor, weak_key

criterion = pytest.mark.criterion
EXAMPLE = PublicKey(1597, 11, 159)


@criterion(1, "golden forgery (42, 370) on the 1597 key")
def test_golden_forgery():
    start = time.perf_counter()
    out = forge_theorem3(EXAMPLE, 1234, 275)
    elapsed = time.perf_counter() - start
    assert (out.signature.r, out.signature.s) == (42, 370)
    assert verify(EXAMPLE, 1234, out.signature)
    assert elapsed < 1.0


@criterion(2, "inner forgery (42, 1202) on the fictive key")
def test_inner_forgery():
    start = time.perf_counter()
    out = forge_bleichenbacher(PublicKey(1597, 38, 1287), 1234)
    elapsed = time.perf_counter() - start
    assert (out.signature.r, out.signature.s) == (42, 1202)
    assert elapsed < 1.0


@criterion(3, "minimal exponent search returns (275, 38)")
def test_exponent_search():
    assert find_smooth_exponent(EXAMPLE, bound=19, max_i=10**4) == (275, 38)
    # minimality against a plain scan
    for i in range(1, 275):
        beta = pow(11, i, 1597)
        assert not (math.gcd(i, 1596) == 1 and 1 < beta < 1596 and 1596 % beta == 0
                    and max(trial_factor(beta)) <= 19)


@criterion(4, "key consistency y = 11^856, z = 159^275")
def test_key_consistency():
    assert mod_pow(11, 856, 1597) == 159
    assert mod_pow(159, 275, 1597) == 1287


@criterion(5, "every forge_auto result verifies on 200 weak keys")
def test_forgery_soundness():
    rng = random.Random(20240501)
    tally = Counter()
    start = time.perf_counter()
    for n in range(200):
        kind = KINDS[n % len(KINDS)]
        pub, _ = weak_key(rng, rng.randint(16, 24), kind)
        assert pub.p % 4 == 1
        m = rng.randrange(pub.p - 1)
        out = forge_auto(pub, m, max_i=10**4)
        assert verify(pub, m, out.signature), (pub, m, out)
        tally[out.strategy.value] += 1
    elapsed = time.perf_counter() - start
    print(f"strategies used: {dict(tally)}; {elapsed:.2f} s")
    assert elapsed < 60
    assert set(tally) == set(KINDS)


def _element_of_order(p, order, rng):
    while True:
        g = pow(rng.randrange(2, p - 1), (p - 1) // order, p)
        if all(pow(g, order // q, p) != 1 for q in trial_factor(order)):
            return g


@criterion(6, "Pohlig-Hellman agrees with brute force on 1000 smooth orders")
def test_pohlig_hellman_oracle():
    rng = random.Random(6)
    small = [q for q in primes_up_to(100)]
    outside = 0
    for _ in range(1000):
        order = 1
        while True:
            nxt = order * rng.choice(small)
            if nxt > 10**4:
                break
            order = nxt
            if order > 1 and rng.random() < 0.25:
                break
        if order == 1:
            order = rng.choice(small)
        t = rng.randint(1, 500)
        while not is_prime(order * t + 1):
            t += 1
        p = order * t + 1
        g = _element_of_order(p, order, rng)
        if rng.random() < 0.1 and t > 1:
            target = rng.randrange(2, p)
        else:
            target = pow(g, rng.randrange(order), p)
        inst = DlogInstance(g, target, p, order)
        try:
            expected = brute_force_dlog(inst)
        except NoSolutionError:
            outside += 1
            with pytest.raises(NoSolutionError):
                pohlig_hellman(inst, factorize(order))
            continue
        assert pohlig_hellman(inst, factorize(order)) == expected
    assert outside < 150


@criterion(7, "exponent lemmas for p < 10^5, p = 1 (mod 4); see test for alpha coverage")
def test_lemmas():
    rng = random.Random(7)
    for p in primes_up_to(10**5):
        if p % 4 != 1:
            continue
        n = p - 1
        k, l = two_adic_split(n)
        half = 2 ** (k - 1) * l
        assert math.gcd((p - 3) // 2, n) == 1
        assert math.gcd(half + 1, n) == 1 and math.gcd(half - 1, n) == 1
        factors = trial_factor(n)
        # every primitive divisor of p - 1, exhaustively
        for a in divisors(factors)[1:-1]:
            if oracle_primitive(a, p, factors):
                assert pow(a, (p - 3) // 2, p) == n // a
                assert pow(a, half, p) == n
        if p < 3000:
            roots = [a for a in range(2, p) if oracle_primitive(a, p, factors)]
        else:
            roots = [random_primitive_root(rng, p, factors) for _ in range(5)]
        for a in roots:
            assert pow(a, half, p) == n


@criterion(8, "500 honest round trips accept, 10^4 perturbations reject")
def test_round_trip_and_perturbation():
    rng = random.Random(8)
    keys = [keygen(rng.choice([48, 64, 96]), rng) for _ in range(25)]
    for j in range(500):
        key = keys[j % len(keys)]
        m = rng.randrange(key.public.p - 1)
        assert verify(key.public, m, sign(key, m, rng))
    rejected = 0
    for j in range(10**4):
        key = keys[j % len(keys)]
        pub = key.public
        p, n = pub.p, pub.p - 1
        m = rng.randrange(n)
        sig = sign(key, m, rng)
        kind = j % 4
        if kind == 0:
            bad, digest = Signature(sig.r, (sig.s + rng.randrange(1, n)) % n), m
        elif kind == 1:
            bad, digest = sig, (m + rng.randrange(1, n)) % n
        elif kind == 2:
            r = rng.randrange(1, p)
            bad, digest = Signature(r if r != sig.r else r % (p - 1) + 1, sig.s), m
        else:
            bad, digest = Signature(sig.r + p * n * rng.randint(1, 5), sig.s), m
        rejected += not verify(pub, digest, bad)
    assert rejected == 10**4


@criterion(9, "negative control: no attack, audit agrees")
def test_negative_control():
    pub, _ = strong_key(random.Random(9), 24)
    with pytest.raises(AttackInapplicableError):
        forge_auto(pub, 1234 % (pub.p - 1), bound=1 << 16, max_i=10**5)
    report = audit_key(pub, bound=1 << 16, max_i=10**5)
    assert report.overall is Overall.NOT_FORGEABLE
