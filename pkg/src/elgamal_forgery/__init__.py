"""ElGamal signatures and universal forgery for keys with weak generators."""

from .attacks import (
    ForgeryOutcome,
    Strategy,
    corollary2_candidates,
    find_smooth_exponent,
    forge_auto,
    forge_bleichenbacher,
    forge_corollary2,
    forge_corollary3,
    forge_theorem3,
)
from .audit import AuditReport, audit_key
from .elgamal import PrivateKey, PublicKey, Signature, digest_of, keygen, sign, verify
from .errors import AttackInapplicableError, DomainError, PreconditionError

__version__ = "0.1.0"

__all__ = [
    "AttackInapplicableError",
    "AuditReport",
    "DomainError",
    "ForgeryOutcome",
    "PreconditionError",
    "PrivateKey",
    "PublicKey",
    "Signature",
    "Strategy",
    "audit_key",
    "corollary2_candidates",
    "digest_of",
    "find_smooth_exponent",
    "forge_auto",
    "forge_bleichenbacher",
    "forge_corollary2",
    "forge_corollary3",
    "forge_theorem3",
    "keygen",
    "sign",
    "verify",
]
