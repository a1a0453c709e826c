"""Command-line front end.

Exit status: 0 on success, 2 when no solution exists (or the attack does not
verify), 1 on malformed input.  Vector arguments are literal entry lists;
prefix a path with ``@`` to read it from a file instead.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import io
from .algebra import Field, GF
from .attack import (AttackError, all_keys, full_attack, primitive_candidates,
                     recover_primitive_elements, variety_attack)
from .codes import ReedSolomonCode, min_weight_codewords
from .codes import SearchBoundError as ScanBoundError
from .equivsolver import SearchBoundError, solve_equiv
from .linalg import Matrix
from .mceliece import DecryptionError, decrypt, encrypt, keygen
from .perm import Permutation
from .permdetect import detect_all, detect_first, detect_sorted, is_perm_equiv

EXIT_OK, EXIT_INPUT, EXIT_NONE = 0, 1, 2


class NoSolution(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise io.FormatError(f"cannot read {path}: {exc.strerror}") from None


def _vector(arg: str, F: Field) -> tuple:
    text = _read(arg[1:]) if arg.startswith("@") else arg
    return io.parse_vector(text, F)


def _write(path: str | None, text: str, out):
    if path:
        Path(path).write_text(text)
    else:
        out.write(text)


def _emit(args, out, text: str, obj):
    if args.json:
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text)


def _check_field(M: Matrix, args):
    q = getattr(args, "q", None)
    if q is not None and M.field != GF(q):
        raise io.FormatError(f"field mismatch: matrix is over {M.field}, --q is {q}")


# subcommands

def cmd_keygen(args, out):
    S = P = None
    if args.S:
        S = io.parse_matrix(_read(args.S))
    if args.P:
        P = Permutation.parse(args.P, args.q - 1)
    if (S is None or P is None) and args.seed is None:
        raise ValueError("--seed is required for random key generation")
    sec, pub = keygen(args.q, args.alpha, args.d, seed=args.seed, S=S, P=P)
    if args.json:
        obj = {"secret": io.secret_key_to_json(sec), "public": io.public_key_to_json(pub)}
        if args.secret or args.public:
            _write(args.secret, json.dumps(obj["secret"], indent=2) + "\n", out)
            _write(args.public, json.dumps(obj["public"], indent=2) + "\n", out)
        else:
            out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    _write(args.secret, io.format_secret_key(sec), out)
    _write(args.public, io.format_public_key(pub), out)
    return EXIT_OK


def cmd_encrypt(args, out):
    pub = io.parse_public_key(_read(args.public))
    if args.t is not None:
        pub = io.PublicKey(pub.G1, args.t)
    F = pub.G1.field
    x = _vector(args.message, F)
    e = _vector(args.error, F) if args.error else None
    if e is None and args.seed is None:
        raise ValueError("--seed is required for a random error vector")
    y = encrypt(pub, x, e=e, weight_=args.weight, seed=args.seed)
    _write(args.out, io.format_vector(y), out)
    return EXIT_OK


def cmd_decrypt(args, out):
    sec = io.parse_secret_key(_read(args.secret))
    y = _vector(args.ciphertext, sec.code.field)
    try:
        x = decrypt(sec, y)
    except DecryptionError as exc:
        raise NoSolution(str(exc)) from None
    _write(args.out, io.format_vector(x), out)
    return EXIT_OK


def cmd_attack(args, out):
    pub = io.parse_public_key(_read(args.public))
    G1 = pub.G1
    _check_field(G1, args)
    try:
        if args.all:
            if args.alpha is None:
                raise ValueError("--all needs --alpha")
            res = all_keys(G1, args.alpha, variety_route=args.method == "variety")
            if not res:
                raise NoSolution("no verified key")
            _emit(args, out, "\n".join(io.format_attack_report(r) for r in res),
                  [io.attack_report(r) for r in res])
            return EXIT_OK
        if args.method == "variety":
            if args.alpha is None:
                raise ValueError("--method variety needs --alpha")
            res = variety_attack(G1, args.alpha)
        else:
            start = _vector(args.start, G1.field) if args.start else None
            res = full_attack(G1, args.alpha, start=start)
    except AttackError as exc:
        raise NoSolution(str(exc)) from None
    _emit(args, out, io.format_attack_report(res), io.attack_report(res))
    return EXIT_OK if res.verified else EXIT_NONE


def cmd_solve_equiv(args, out):
    A = io.parse_matrix(_read(args.a))
    B = io.parse_matrix(_read(args.b))
    if A.field != B.field:
        raise io.FormatError(f"field mismatch: {A.field} vs {B.field}")
    sols = solve_equiv(A, B, strategy=args.strategy)
    if not sols:
        raise NoSolution("the matrices are not equivalent up to permutation")
    if not args.all:
        sols = sols[:1]
    _emit(args, out, "\n".join(io.format_solution(s) for s in sols),
          [io.solution_report(s) for s in sols])
    return EXIT_OK


def cmd_detect_perm(args, out):
    F = Field.from_str(args.field)
    v, w = _vector(args.v, F), _vector(args.w, F)
    if len(v) != len(w):
        raise ValueError("v and w have different lengths")
    method = "all" if args.all else args.method
    if not is_perm_equiv(v, w, F):
        raise NoSolution("w is not a rearrangement of v")
    if method == "all":
        perms = detect_all(v, w, F)
    else:
        res = (detect_first if method == "first" else detect_sorted)(v, w)
        perms = [res.witness]
    _emit(args, out, "".join(f"{s}\n" for s in perms), [str(s) for s in perms])
    return EXIT_OK


def cmd_min_codewords(args, out):
    if args.generator:
        G, _ = io.parse_generator(_read(args.generator))
    else:
        if None in (args.q, args.alpha, args.d):
            raise ValueError("give --generator or all of --q, --alpha, --d")
        G = ReedSolomonCode(args.q, args.alpha, args.d).generator
    words = min_weight_codewords(G, args.d if args.generator else None)
    text = f"count {len(words)}\n" + "".join(io.format_vector(w) for w in words)
    _emit(args, out, text, {"count": len(words), "codewords": [list(w) for w in words]})
    return EXIT_OK


def cmd_find_primitive(args, out):
    if args.public:
        G1 = io.parse_public_key(_read(args.public)).G1
        _check_field(G1, args)
        found = recover_primitive_elements(G1)
        if not found:
            raise NoSolution("no primitive candidate")
        text = "".join(f"{a} ({len(ws)} codewords)\n" for a, ws in found.items())
        obj = {"alphas": list(found), "codewords": {str(a): [list(w) for w in ws]
                                                     for a, ws in found.items()}}
    else:
        if args.w is None or args.d is None:
            raise ValueError("give --public, or --w with --d")
        F = Field.from_str(args.field) if args.field else GF(args.q)
        cands = primitive_candidates(_vector(args.w, F), args.d, F)
        if not cands:
            raise NoSolution("no primitive candidate")
        text = "".join(f"alpha {c.alpha} c {c.c}\n" for c in cands)
        obj = [{"alpha": c.alpha, "c": c.c} for c in cands]
    _emit(args, out, text, obj)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permequiv", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("keygen", parents=[common], help="generate a McEliece key pair")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--alpha", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("--S", help="matrix file for S instead of a random one")
    s.add_argument("--P", help="permutation in cycle notation instead of a random one")
    s.add_argument("--secret", help="write the secret key here")
    s.add_argument("--public", help="write the public key here")
    s.set_defaults(func=cmd_keygen)

    s = sub.add_parser("encrypt", parents=[common], help="y = x G1 + e")
    s.add_argument("--public", required=True)
    s.add_argument("--message", required=True, help="entries, or @file")
    s.add_argument("--error", help="explicit error vector, or @file")
    s.add_argument("--seed", type=int)
    s.add_argument("--weight", type=int, help="error weight (default t)")
    s.add_argument("--t", type=int, help="override the key's t")
    s.add_argument("--out")
    s.set_defaults(func=cmd_encrypt)

    s = sub.add_parser("decrypt", parents=[common], help="recover x from y")
    s.add_argument("--secret", required=True)
    s.add_argument("--ciphertext", required=True, help="entries, or @file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_decrypt)

    s = sub.add_parser("attack", parents=[common], help="recover S^-1 and P from G1")
    s.add_argument("--public", required=True, help="public key or bare G1 matrix")
    s.add_argument("--q", type=int)
    s.add_argument("--alpha", type=int, help="primitive element (proposed if omitted)")
    s.add_argument("--method", choices=["codewords", "variety"], default="codewords")
    s.add_argument("--all", action="store_true", help="report every verified key")
    s.add_argument("--start", help="candidate row to try first")
    s.set_defaults(func=cmd_attack)

    s = sub.add_parser("solve-equiv", parents=[common], help="solve X A = B Y")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--strategy", choices=["auto", "exhaustive", "backtrack"], default="auto")
    s.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_solve_equiv)

    s = sub.add_parser("detect-perm", parents=[common], help="find sigma with act(sigma, v) = w")
    s.add_argument("--field", "-f", required=True, help="prime p or Q")
    s.add_argument("--v", required=True)
    s.add_argument("--w", required=True)
    s.add_argument("--method", choices=["first", "sorted", "all"], default="first")
    s.add_argument("--all", action="store_true", help="same as --method all")
    s.set_defaults(func=cmd_detect_perm)

    s = sub.add_parser("min-codewords", parents=[common], help="projective minimum-weight codewords")
    s.add_argument("--generator")
    s.add_argument("--q", type=int)
    s.add_argument("--alpha", type=int)
    s.add_argument("--d", type=int)
    s.set_defaults(func=cmd_min_codewords)

    s = sub.add_parser("find-primitive", parents=[common], help="propose primitive elements")
    s.add_argument("--public")
    s.add_argument("--w")
    s.add_argument("--d", type=int)
    s.add_argument("--field", "-f")
    s.add_argument("--q", type=int)
    s.set_defaults(func=cmd_find_primitive)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except NoSolution as exc:
        err.write(f"no solution: {exc}\n")
        return EXIT_NONE
    except (ValueError, SearchBoundError, ScanBoundError, json.JSONDecodeError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
