import random

import pytest

from elgamal_forgery.elgamal import PrivateKey, PublicKey, Signature, digest_of, keygen, sign, verify
from elgamal_forgery.errors import DomainError

from helpers import brute_is_primitive, trial_is_prime

EXAMPLE = PublicKey(1597, 11, 159)


@pytest.fixture
def example_key():
    return PrivateKey(EXAMPLE, 856)


class TestKeys:
    def test_example_key_is_consistent(self, example_key):
        assert example_key.public.y == pow(11, 856, 1597)

    @pytest.mark.parametrize(
        "p, alpha, y",
        [(1596, 11, 159), (1597, 1, 1), (1597, 1596, 1), (1597, 11, 0), (1597, 2, 5)],
    )
    def test_invalid_public_keys(self, p, alpha, y):
        # 2 has order 532 mod 1597, so it is rejected as a generator
        with pytest.raises(DomainError):
            PublicKey(p, alpha, y)

    def test_unvalidated_key(self):
        assert PublicKey(13, 5, 1, validate=False).alpha == 5

    def test_private_key_must_match(self):
        with pytest.raises(DomainError):
            PrivateKey(EXAMPLE, 857)
        with pytest.raises(DomainError):
            PrivateKey(EXAMPLE, 1)


class TestKeygen:
    def test_deterministic(self):
        assert keygen(16, random.Random(7)) == keygen(16, random.Random(7))

    @pytest.mark.parametrize("bits", [8, 12, 16, 24, 32])
    def test_invariants(self, bits):
        rng = random.Random(bits)
        for _ in range(5):
            key = keygen(bits, rng)
            pub = key.public
            assert pub.p.bit_length() == bits and trial_is_prime(pub.p)
            assert 2 <= pub.alpha <= pub.p - 2
            assert 2 <= key.x <= pub.p - 2 and pow(pub.alpha, key.x, pub.p) == pub.y
            if bits <= 16:
                assert brute_is_primitive(pub.alpha, pub.p)

    def test_one_mod_four(self):
        rng = random.Random(1)
        for _ in range(20):
            assert keygen(12, rng, require_1_mod_4=True).public.p % 4 == 1

    def test_too_small(self):
        with pytest.raises(DomainError):
            keygen(7)

    def test_large_key(self):
        key = keygen(256, random.Random(2))
        assert verify(key.public, 42, sign(key, 42, random.Random(3)))


class TestSignVerify:
    def test_honest_signature_verifies(self, example_key):
        rng = random.Random(0)
        for _ in range(50):
            assert verify(EXAMPLE, 1234, sign(example_key, 1234, rng))

    def test_fixed_nonce(self, example_key):
        sig = sign(example_key, 1234, k=5)
        assert sig.r == pow(11, 5, 1597)
        assert verify(EXAMPLE, 1234, sig)
        assert sign(example_key, 1234, k=5) == sig

    def test_non_invertible_nonce(self, example_key):
        with pytest.raises(DomainError):
            sign(example_key, 1234, k=4)

    def test_zero_s(self, example_key):
        k = 5
        r = pow(11, k, 1597)
        m = 856 * r % 1596
        sig = sign(example_key, m, k=k)
        assert sig.s == 0 and verify(EXAMPLE, m, sig)

    def test_example_forgery_verifies(self):
        assert verify(EXAMPLE, 1234, Signature(42, 370))

    def test_perturbed_rejected(self):
        lhs_ok = pow(11, 1234, 1597) == pow(159, 42, 1597) * pow(42, 371, 1597) % 1597
        assert not lhs_ok
        assert not verify(EXAMPLE, 1234, Signature(42, 371))

    @pytest.mark.parametrize("r", [0, 1597, 1597 * 3 + 42])
    def test_r_range(self, r):
        assert not verify(EXAMPLE, 1234, Signature(r, 370))

    def test_aliased_r(self):
        aliased = Signature(42 + 1597 * 1596, 370)
        assert not verify(EXAMPLE, 1234, aliased)
        assert verify(EXAMPLE, 1234, aliased, strict=False)

    def test_negative_s(self):
        assert not verify(EXAMPLE, 1234, Signature(42, -1226))

    def test_verify_is_pure(self):
        sig = Signature(42, 370)
        assert [verify(EXAMPLE, 1234, sig) for _ in range(3)] == [True] * 3

    def test_soundness_sample(self):
        rng = random.Random(99)
        key = keygen(24, rng)
        n = key.public.p - 1
        hits = 0
        for _ in range(10**4):
            m = rng.randrange(n)
            sig = sign(key, m, rng)
            m2 = (m + rng.randrange(1, n)) % n
            hits += verify(key.public, m2, sig)
        assert hits == 0


class TestDigest:
    def test_pass_through(self):
        assert digest_of(b"1234", EXAMPLE) == 1234
        assert digest_of(b"0", EXAMPLE) == 0
        assert digest_of(b"1596", EXAMPLE) == 0
        assert digest_of(b" 1234\n", EXAMPLE) == 1234

    def test_unparseable(self):
        with pytest.raises(DomainError):
            digest_of(b"hello", EXAMPLE)

    def test_hash_mode(self):
        import hashlib

        expected = int.from_bytes(hashlib.sha256(b"hello").digest(), "big") % 1596
        assert digest_of(b"hello", EXAMPLE, mode="hash") == expected
        sha1 = int.from_bytes(hashlib.sha1(b"hello").digest(), "big") % 1596
        assert digest_of(b"hello", EXAMPLE, mode="hash", hash_name="sha1") == sha1

    def test_unknown_mode(self):
        with pytest.raises(DomainError):
            digest_of(b"1", EXAMPLE, mode="rot13")


def test_round_trip_many_keys():
    rng = random.Random(2024)
    for _ in range(100):
        key = keygen(rng.randint(16, 32), rng)
        m = rng.randrange(key.public.p - 1)
        sig = sign(key, m, rng)
        assert 0 < sig.r < key.public.p and 0 <= sig.s < key.public.p - 1
        assert verify(key.public, m, sig)
