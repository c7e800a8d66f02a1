"""
Auditing freshly generated keys
===============================

Random primes and random primitive roots are often weak at desk sizes.
This tallies the audit verdict over a batch of generated keys.
"""

import random
from collections import Counter

from elgamal_forgery import audit_key, keygen

rng = random.Random(3)
bits = 32

##############################################################################
# Generate keys and audit each with a small budget.

verdicts = Counter()
routes = Counter()
for _ in range(40):
    pub = keygen(bits, rng).public
    report = audit_key(pub, bound=1 << 16, max_i=10**4)
    verdicts[report.overall.value] += 1
    for check in report.checks:
        if check.status.value == "vulnerable":
            routes[check.condition.value] += 1

print(f"{bits}-bit keys:", dict(verdicts))
print("vulnerable conditions:", dict(routes))

##############################################################################
# The full report for the last key.

print(report.to_text())
