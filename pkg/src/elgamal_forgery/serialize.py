"""JSON documents for keys, signatures, forgeries and audit reports.

All integers travel as decimal strings. Field names are fixed:
keys use ``p``, ``alpha``, ``y`` (plus ``x`` for private keys) and
signatures use ``r``, ``s``.
"""

from __future__ import annotations

import json
import re
from dataclasses import asdict
from pathlib import Path

from .attacks import ForgeryOutcome
from .audit import AuditReport
from .elgamal import PrivateKey, PublicKey, Signature
from .errors import DomainError

__all__ = [
    "FormatError",
    "dumps",
    "key_from_dict",
    "key_to_dict",
    "load_key",
    "outcome_to_dict",
    "report_to_dict",
    "signature_from_dict",
    "signature_to_dict",
]

_DECIMAL = re.compile(r"[0-9]+")


class FormatError(ValueError):
    pass


def _decimal(doc: dict, name: str) -> int:
    try:
        raw = doc[name]
    except KeyError:
        raise FormatError(f"missing field {name!r}") from None
    if not isinstance(raw, str) or not _DECIMAL.fullmatch(raw):
        raise FormatError(f"field {name!r} must be a decimal string, got {raw!r}")
    return int(raw)


def key_to_dict(key: PublicKey | PrivateKey) -> dict[str, str]:
    if isinstance(key, PrivateKey):
        doc = key_to_dict(key.public)
        doc["x"] = str(key.x)
        return doc
    return {"p": str(key.p), "alpha": str(key.alpha), "y": str(key.y)}


def key_from_dict(doc: dict) -> PublicKey | PrivateKey:
    if not isinstance(doc, dict):
        raise FormatError("key document must be a JSON object")
    try:
        pub = PublicKey(_decimal(doc, "p"), _decimal(doc, "alpha"), _decimal(doc, "y"))
        if "x" in doc:
            return PrivateKey(pub, _decimal(doc, "x"))
    except DomainError as exc:
        raise FormatError(f"invalid key: {exc}") from exc
    return pub


def load_key(path: str | Path) -> PublicKey | PrivateKey:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read key file {path}: {exc}") from exc
    return key_from_dict(doc)


def signature_to_dict(sig: Signature) -> dict[str, str]:
    return {"r": str(sig.r), "s": str(sig.s)}


def signature_from_dict(doc: dict) -> Signature:
    if not isinstance(doc, dict):
        raise FormatError("signature document must be a JSON object")
    return Signature(_decimal(doc, "r"), _decimal(doc, "s"))


def outcome_to_dict(outcome: ForgeryOutcome) -> dict:
    return {
        "signature": signature_to_dict(outcome.signature),
        "strategy": outcome.strategy.value,
        "exponent_i": str(outcome.exponent_i),
        "intermediates": {k: str(v) for k, v in asdict(outcome.intermediates).items()},
    }


def report_to_dict(report: AuditReport) -> dict:
    return {
        "key": key_to_dict(report.key),
        "p_mod_4": str(report.p_mod_4),
        "bound": str(report.bound),
        "max_i": str(report.max_i),
        "checks": [
            {
                "condition": c.condition.value,
                "status": c.status.value,
                "witness": None if c.witness is None else {"i": str(c.witness[0]), "beta": str(c.witness[1])},
                "notes": c.notes,
            }
            for c in report.checks
        ],
        "overall": report.overall.value,
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"
