"""
Forging a signature on the 1597 key
===================================

The generator 11 does not divide p - 1 = 1596, so the direct smooth-generator
attack fails. Raising 11 to a suitable exponent reaches 38 = 2 * 19, which
does divide 1596, and that is enough to forge on any digest.
"""

from elgamal_forgery import PublicKey, verify
from elgamal_forgery.attacks import FictiveKey, find_smooth_exponent, forge_bleichenbacher, forge_theorem3

pub = PublicKey(1597, 11, 159)
m = 1234

##############################################################################
# Search for the smallest exponent i whose power is a 19-smooth divisor of
# p - 1 and that is coprime to p - 1.

i, beta = find_smooth_exponent(pub, bound=19, max_i=10**4)
print(f"i = {i}, beta = {beta}")

##############################################################################
# The pair (beta, y^i) behaves like somebody else's public key with the same
# prime. Forging on it is the direct attack again.

fictive = FictiveKey.from_exponent(pub, i)
inner = forge_bleichenbacher(fictive.public, m)
print("fictive key:", fictive.public.p, fictive.beta, fictive.z)
print("signature on fictive key:", inner.signature)
for name, value in vars(inner.intermediates).items():
    print(f"  {name} = {value}")

##############################################################################
# Dividing the second component by i maps it back to the real key.

out = forge_theorem3(pub, m, i)
print("forged:", out.signature, "verifies:", verify(pub, m, out.signature))
