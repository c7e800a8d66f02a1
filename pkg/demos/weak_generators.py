"""
Weak generator families
=======================

Builds small keys where the generator, its inverse or a negation of either
is a smooth divisor of p - 1, and shows which route forge_auto picks.
"""

from elgamal_forgery import PublicKey, verify
from elgamal_forgery.attacks import corollary2_candidates, forge_auto, forge_bleichenbacher, forge_corollary3
from elgamal_forgery.errors import ParityError

##############################################################################
# p = 13: the primitive roots are 2, 6, 7 and 11. Each one falls into one of
# the four families, so every key mod 13 is forgeable.

for alpha in (2, 6, 7, 11):
    pub = PublicKey(13, alpha, pow(alpha, 5, 13))
    out = forge_auto(pub, 9)
    cands = [(c.variant.value, c.beta) for c in corollary2_candidates(pub)]
    print(alpha, out.strategy.value, out.signature, verify(pub, 9, out.signature))
    print("   candidates:", cands)

##############################################################################
# For p = 3 (mod 4) the nonce (p-3)/2 is even, so only digests of one parity
# class can be reached.

pub = PublicKey(19, 2, pow(2, 7, 19))
reachable = []
for m in range(18):
    try:
        forge_bleichenbacher(pub, m)
        reachable.append(m)
    except ParityError:
        pass
print("p = 19, alpha = 2, forgeable digests:", reachable)

##############################################################################
# When 2 is primitive the discrete log of 2 in base alpha gives an exponent
# with beta = 2, which always divides p - 1. Here 6^5 = 2 (mod 13).

pub = PublicKey(13, 6, pow(6, 4, 13))
out = forge_corollary3(pub, 3)
print(out.strategy.value, "i =", out.exponent_i, out.signature, verify(pub, 3, out.signature))
