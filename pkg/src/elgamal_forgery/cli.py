"""Command line interface.

Exit codes: 0 success or valid signature, 1 invalid signature, 2 usage or
parameter error, 3 attack inapplicable.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import attacks
from .audit import audit_key
from .elgamal import PrivateKey, Signature, digest_of, keygen, sign, verify
from .errors import AttackInapplicableError, DomainError, KeygenError, PreconditionError
from .numtheory import Effort
from .serialize import (
    FormatError,
    dumps,
    key_to_dict,
    load_key,
    outcome_to_dict,
    report_to_dict,
    signature_from_dict,
    signature_to_dict,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INAPPLICABLE = 3


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=("text", "json"), default="text")


def _add_digest(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--digest", type=_natural, help="digest m as a decimal integer")
    g.add_argument("--message-file", type=Path, help="hash this file to obtain m")
    p.add_argument("--hash", default="sha256", help="hashlib algorithm for --message-file")


def _add_bounds(p: argparse.ArgumentParser) -> None:
    p.add_argument("--bound", type=_natural, default=attacks.DEFAULT_SMOOTH_BOUND, help="smoothness bound B")
    p.add_argument("--max-i", type=_natural, default=attacks.DEFAULT_MAX_EXPONENT, help="largest exponent scanned")
    p.add_argument("--dlog-budget", type=_natural, default=attacks.DEFAULT_DLOG_BUDGET, help="BSGS step budget")


def _add_effort(p: argparse.ArgumentParser) -> None:
    defaults = Effort()
    p.add_argument("--trial-bound", type=_natural, default=defaults.trial_bound)
    p.add_argument("--rho-iterations", type=_natural, default=defaults.rho_iterations)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="elgamal-forge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--bits", type=_natural, required=True)
    p.add_argument("--seed", type=_natural)
    p.add_argument("--require-1-mod-4", action="store_true")
    p.add_argument("--out", default="elgamal", help="writes OUT.pub.json and OUT.key.json")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("sign", help="sign a digest with a private key")
    p.add_argument("--key", type=Path, required=True)
    _add_digest(p)
    p.add_argument("--k", type=_natural, help="fixed nonce (must be invertible mod p-1)")
    p.add_argument("--seed", type=_natural)
    _add_output(p)
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("verify", help="verify a signature")
    p.add_argument("--key", type=Path, required=True)
    _add_digest(p)
    p.add_argument("--r", type=_natural)
    p.add_argument("--s", type=_natural)
    p.add_argument("--signature", type=Path, help='JSON file {"r", "s"}')
    p.add_argument("--no-strict", action="store_true", help="skip the 0 < r < p range check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("forge", help="forge a signature from the public key only")
    p.add_argument("--key", type=Path, required=True)
    _add_digest(p)
    p.add_argument(
        "--strategy",
        choices=("auto", "bleichenbacher", "theorem3", "corollary2", "corollary3"),
        default="auto",
    )
    p.add_argument("--i", type=_natural, help="exponent for --strategy theorem3")
    _add_bounds(p)
    _add_effort(p)
    _add_output(p)
    p.set_defaults(func=cmd_forge)

    p = sub.add_parser("audit", help="check a public key for weak-generator conditions")
    p.add_argument("--key", type=Path, required=True)
    _add_bounds(p)
    _add_effort(p)
    _add_output(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("search-exponent", help="find the smallest usable exponent i")
    p.add_argument("--key", type=Path, required=True)
    p.add_argument("--bound", type=_natural, default=attacks.DEFAULT_SMOOTH_BOUND)
    p.add_argument("--max-i", type=_natural, default=attacks.DEFAULT_MAX_EXPONENT)
    _add_output(p)
    p.set_defaults(func=cmd_search_exponent)
    return parser


def _public(path: Path):
    key = load_key(path)
    return key.public if isinstance(key, PrivateKey) else key


def _digest(args, pub) -> int:
    if args.digest is not None:
        return args.digest % (pub.p - 1)
    try:
        data = args.message_file.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {args.message_file}: {exc}") from exc
    return digest_of(data, pub, mode="hash", hash_name=args.hash)


def _effort(args) -> Effort:
    return Effort(trial_bound=max(args.trial_bound, 2), rho_iterations=args.rho_iterations)


def _check_bound(bound: int) -> None:
    if bound < 2:
        raise UsageError("--bound must be at least 2")


def cmd_keygen(args) -> int:
    rng = random.Random(args.seed)
    key = keygen(args.bits, rng, require_1_mod_4=args.require_1_mod_4)
    pub_path = Path(f"{args.out}.pub.json")
    key_path = Path(f"{args.out}.key.json")
    pub_path.write_text(dumps(key_to_dict(key.public)))
    key_path.write_text(dumps(key_to_dict(key)))
    print(f"wrote {pub_path} and {key_path}")
    return EXIT_OK


def cmd_sign(args) -> int:
    key = load_key(args.key)
    if not isinstance(key, PrivateKey):
        raise UsageError(f"{args.key} holds no private exponent x")
    m = _digest(args, key.public)
    sig = sign(key, m, rng=random.Random(args.seed), k=args.k)
    if args.output == "json":
        sys.stdout.write(dumps(signature_to_dict(sig)))
    else:
        print(f"r = {sig.r}\ns = {sig.s}")
    return EXIT_OK


def cmd_verify(args) -> int:
    pub = _public(args.key)
    m = _digest(args, pub)
    if args.signature is not None:
        try:
            sig = signature_from_dict(json.loads(args.signature.read_text()))
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read signature: {exc}") from exc
    elif args.r is not None and args.s is not None:
        sig = Signature(args.r, args.s)
    else:
        raise UsageError("give --r and --s, or --signature")
    ok = verify(pub, m, sig, strict=not args.no_strict)
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_INVALID


def _print_outcome(outcome, output: str) -> None:
    if output == "json":
        sys.stdout.write(dumps(outcome_to_dict(outcome)))
        return
    inter = outcome.intermediates
    print(f"r = {outcome.signature.r}")
    print(f"s = {outcome.signature.s}")
    print(f"strategy = {outcome.strategy.value}")
    print(f"i = {outcome.exponent_i}")
    for name in ("k", "w", "b", "subgroup_target", "x0", "u", "v"):
        print(f"{name} = {getattr(inter, name)}")


def cmd_forge(args) -> int:
    pub = _public(args.key)
    m = _digest(args, pub)
    _check_bound(args.bound)
    strategy = args.strategy
    if strategy == "auto":
        outcome = attacks.forge_auto(pub, m, args.bound, max(args.max_i, 1), args.dlog_budget, _effort(args))
    elif strategy == "bleichenbacher":
        outcome = attacks.forge_bleichenbacher(pub, m, args.bound)
    elif strategy == "theorem3":
        if args.i is None:
            raise UsageError("--strategy theorem3 needs --i")
        outcome = attacks.forge_theorem3(pub, m, args.i, args.bound)
    elif strategy == "corollary2":
        outcome = attacks.forge_corollary2(pub, m, args.bound)
    else:
        outcome = attacks.forge_corollary3(pub, m, args.dlog_budget, args.bound, _effort(args))
    _print_outcome(outcome, args.output)
    return EXIT_OK


def cmd_audit(args) -> int:
    pub = _public(args.key)
    _check_bound(args.bound)
    report = audit_key(pub, args.bound, max(args.max_i, 1), _effort(args), args.dlog_budget)
    if args.output == "json":
        sys.stdout.write(dumps(report_to_dict(report)))
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK


def cmd_search_exponent(args) -> int:
    pub = _public(args.key)
    _check_bound(args.bound)
    if args.max_i < 1:
        raise UsageError("--max-i must be at least 1")
    found = attacks.find_smooth_exponent(pub, args.bound, args.max_i)
    if args.output == "json":
        doc = None if found is None else {"i": str(found[0]), "beta": str(found[1])}
        sys.stdout.write(dumps(doc))
    else:
        print("none" if found is None else f"{found[0]} {found[1]}")
    return EXIT_OK if found is not None else EXIT_INAPPLICABLE


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AttackInapplicableError, PreconditionError) as exc:
        print(f"attack inapplicable: {exc}", file=sys.stderr)
        for name, reason in getattr(exc, "reasons", {}).items():
            print(f"  {name}: {reason}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except (UsageError, FormatError, DomainError, KeygenError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
