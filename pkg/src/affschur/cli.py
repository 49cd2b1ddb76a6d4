"""Command-line entry point: ``affschur <command> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import combinat, kclasses, oracle, verify
from .circ import circ as circ_product
from .circ import factor as circ_factor


class UsageError(Exception):
    pass


def _load_json(arg, what):
    """Inline JSON or a path to a JSON file."""
    text = arg
    try:
        with open(arg) as fh:
            text = fh.read()
            src = arg
    except OSError:
        src = "<inline>"
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError("malformed JSON for %s in %s at line %d column %d: %s"
                         % (what, src, e.lineno, e.colno, e.msg)) from None


def _load_matrix(arg, what):
    data = _load_json(arg, what)
    try:
        return combinat.as_matrix(data)
    except (combinat.MatrixError, TypeError, ValueError) as e:
        raise UsageError("bad matrix for %s: %s" % (what, e)) from None


def _composition(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers, got %r" % text)


def _emit(args, payload, text):
    out = json.dumps(payload, sort_keys=True) + "\n" if args.json else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _mat(M):
    return [list(r) for r in M]


# commands

def cmd_orbits(args):
    if args.n < 1 or args.d < 0:
        raise UsageError("need n >= 1 and d >= 0")
    groups = []
    lines = []
    for R in combinat.compositions(args.d, args.n):
        for C in combinat.compositions(args.d, args.n):
            ms = combinat.matrices_with_margins(R, C)
            entries = [{"matrix": _mat(M), "dim": combinat.orbit_dim(M),
                        "kind": combinat.classify(M).kind} for M in ms]
            groups.append({"rows": list(R), "cols": list(C), "orbits": entries})
            lines.append("R=%s C=%s" % (R, C))
            for e in entries:
                lines.append("  %s dim=%d %s" % (combinat.matrix_label(e["matrix"]), e["dim"], e["kind"]))
    total = sum(len(g["orbits"]) for g in groups)
    lines.append("total %d" % total)
    _emit(args, {"n": args.n, "d": args.d, "total": total, "groups": groups}, "\n".join(lines) + "\n")
    return 0


def cmd_bruhat(args):
    N = _load_matrix(args.left, "--left")
    M = _load_matrix(args.right, "--right")
    leq = combinat.bruhat_leq(N, M)
    payload = {"leq": leq, "cover": combinat.is_cover(N, M)}
    if leq and args.chain:
        payload["chain"] = [_mat(X) for X in combinat.bruhat_chain(N, M)]
    text = "leq=%s cover=%s\n" % (payload["leq"], payload["cover"])
    if "chain" in payload:
        text += "".join(combinat.matrix_label(X) + "\n" for X in payload["chain"])
    _emit(args, payload, text)
    return 0


def cmd_hasse(args):
    mu, nu = args.mu, args.nu
    if sum(mu) != sum(nu) or len(mu) != len(nu):
        raise UsageError("mu and nu must be compositions of the same d and length")
    dot = combinat.hasse_dot(mu, nu)
    elems, edges = combinat.bruhat_interval(mu, nu)
    _emit(args, {"nodes": len(elems), "edges": len(edges), "dot": dot}, dot)
    return 0


def cmd_circ(args):
    if args.factor:
        M = _load_matrix(args.factor, "--factor")
        fs = [D.to_json() for D in circ_factor(M)]
        _emit(args, fs, json.dumps(fs) + "\n")
        return 0
    if not (args.left and args.right):
        raise UsageError("circ needs --left and --right, or --factor")
    M = _load_matrix(args.left, "--left")
    N = _load_matrix(args.right, "--right")
    P = circ_product(M, N)
    payload = None if P is None else _mat(P)
    _emit(args, payload, ("zero" if P is None else json.dumps(payload)) + "\n")
    return 0


def cmd_act(args):
    word = _load_json(args.word, "--word")
    data = _load_json(args.input, "--input")
    try:
        gens = [kclasses.GenSymbol.from_json(g) for g in word]
        v = kclasses.FlagFun.from_json(data)
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError("bad --word/--input: %s" % e) from None
    out = kclasses.apply_word(gens, v)
    _emit(args, out.to_json(), repr(out) + "\n")
    return 0


def cmd_verify(args):
    tags = [args.relation] if args.relation else None
    if args.relation and args.relation not in verify.RELATION_NAMES and args.relation != "plactic":
        raise UsageError("unknown relation %r" % args.relation)
    reports = []
    if args.relation != "plactic":
        reports = verify.verify_all(args.n, args.d, args.window, tags)
    if args.relation in (None, "plactic") and args.n >= 3:
        reports.append(verify.verify_plactic(args.n, args.d))
    ok = verify.all_ok(reports)
    lines = ["%-8s %s count=%d%s" % (r.tag, "PASS" if r.ok else "FAIL", r.count,
                                     "" if r.ok else " first=" + r.counterexample) for r in reports]
    _emit(args, [r.to_json() for r in reports], "\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_oracle(args):
    if args.what == "circ":
        M = _load_matrix(args.left, "--left")
        N = _load_matrix(args.right, "--right")
        try:
            P = oracle.circ_oracle(M, N, args.q)
        except oracle.OracleTooLarge as e:
            raise UsageError(str(e)) from None
        payload = None if P is None else _mat(P)
        _emit(args, payload, ("zero" if P is None else json.dumps(payload)) + "\n")
        return 0
    if not (args.mu and args.nu):
        raise UsageError("oracle realized needs --mu and --nu")
    try:
        got = sorted(oracle.realized_matrices(args.mu, args.nu, args.q))
    except oracle.OracleTooLarge as e:
        raise UsageError(str(e)) from None
    payload = [_mat(M) for M in got]
    _emit(args, payload, "".join(combinat.matrix_label(M) + "\n" for M in got))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    p = argparse.ArgumentParser(prog="affschur", description="Affine Schur algebra toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("orbits", parents=[common], help="list orbit matrices M(n,d)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("bruhat", parents=[common], help="compare N <= M, optionally with a cover chain")
    s.add_argument("--left", required=True, help="N (JSON or file)")
    s.add_argument("--right", required=True, help="M (JSON or file)")
    s.add_argument("--chain", action="store_true")
    s.set_defaults(func=cmd_bruhat)

    s = sub.add_parser("hasse", parents=[common], help="DOT Hasse diagram of M_{mu,nu}")
    s.add_argument("--mu", type=_composition, required=True)
    s.add_argument("--nu", type=_composition, required=True)
    s.set_defaults(func=cmd_hasse)

    s = sub.add_parser("circ", parents=[common], help="circ product or factorization")
    s.add_argument("--left")
    s.add_argument("--right")
    s.add_argument("--factor")
    s.set_defaults(func=cmd_circ)

    s = sub.add_parser("act", parents=[common], help="apply a generator word to a class")
    s.add_argument("--word", required=True)
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("verify", parents=[common], help="check the defining relations")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--window", type=int, default=3)
    s.add_argument("--relation", help="a single relation tag, or 'plactic'")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", parents=[common], help="finite-field ground truth")
    s.add_argument("what", choices=["circ", "realized"])
    s.add_argument("--left")
    s.add_argument("--right")
    s.add_argument("--mu", type=_composition)
    s.add_argument("--nu", type=_composition)
    s.add_argument("--q", type=int, default=2)
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    if getattr(args, "window", 0) is not None and getattr(args, "window", 0) < 0:
        parser.error("window must be >= 0")
    try:
        return args.func(args)
    except UsageError as e:
        parser.error(str(e))


if __name__ == "__main__":
    sys.exit(main())
