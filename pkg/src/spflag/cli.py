"""Command-line entry point: ``spflag <verb> [options]``.

Data goes to stdout (JSON unless ``--format text``), diagnostics to stderr.
Exit status: 0 success or PASS, 1 FAIL, 2 usage error or budget refusal.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .exactmath import GF, Mat, field_for, is_prime, rank, verify_lemma43
from .indices import enumerate_sp, is_sp_index, ranks, sp_ge, top, bottom
from .oracle import (BudgetExceeded, count_subspaces, enumerate_subspaces, gp_points,
                     verify_cell_partition, verify_containment, verify_prop35, verify_prop47,
                     verify_prop48, verify_thm44, verify_thm411)
from .pluecker import relation_table, verify_laplace
from .schubert import (RichardsonSpec, opp_schubert_member, richardson_generators,
                       richardson_member, richardson_sample, schubert_member)
from .smt import (PRIME_SCHEDULE, verify_basis, verify_independence_escalating)
from .symplectic import SymplecticContext, is_isotropic


class UsageError(ValueError):
    pass


def parse_tuple(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def parse_matrix(text: str) -> list:
    """Rows separated by ';', entries by ','."""
    return [[x.strip() for x in row.split(",")] for row in text.split(";") if row.strip()]


def _prime(text: str) -> int:
    q = int(text)
    if not is_prime(q):
        raise argparse.ArgumentTypeError(f"{q} is not prime")
    return q


def _field_arg(text: str) -> int:
    q = int(text)
    if q and not is_prime(q):
        raise argparse.ArgumentTypeError(f"{q} is neither 0 (rationals) nor prime")
    return q


def _check_nd(args):
    if not 1 <= args.d <= args.n:
        raise UsageError(f"need 1 <= d <= n, got n={args.n}, d={args.d}")


def _spec(args) -> RichardsonSpec:
    _check_nd(args)
    u = args.u if args.u is not None else top(args.d, args.n)
    v = args.v if args.v is not None else bottom(args.d, args.n)
    try:
        return RichardsonSpec(args.n, args.d, u, v)
    except ValueError as e:
        raise UsageError(str(e))


def _idx(t):
    return ",".join(map(str, t))


# ---------------------------------------------------------------------------
# verbs; each returns (payload, text_lines, passed)

def cmd_relations(args):
    _check_nd(args)
    table = relation_table(args.n, args.d)
    rows = [{"ibar": list(ibar), "form": f.to_dict(), "text": f.to_text()} for ibar, f in table]
    nonzero = [r for r in rows if r["form"]["terms"]]
    payload = {"n": args.n, "d": args.d, "relations": nonzero,
               "zero_relations": len(rows) - len(nonzero)}
    return payload, [r["text"] for r in nonzero], True


def cmd_ideal(args):
    spec = _spec(args)
    forms = richardson_generators(spec, args.level, args.reading)
    payload = {**spec.to_dict(), "level": args.level, "reading": args.reading,
               "generators": [f.to_dict() for f in forms]}
    return payload, [f.to_text() for f in forms], True


def cmd_orders(args):
    _check_nd(args)
    n = args.n
    elems = enumerate_sp(args.d, n)
    covers = []
    for a in elems:
        for b in elems:
            if a != b and sp_ge(a, b, n) and not any(
                    c not in (a, b) and sp_ge(a, c, n) and sp_ge(c, b, n) for c in elems):
                covers.append((a, b))
    payload = {"n": n, "d": args.d,
               "elements": [{"index": list(w), "ranks": list(ranks(w, n))} for w in elems],
               "covers": [[list(a), list(b)] for a, b in covers]}
    lines = [f"({_idx(w)}) ranks {_idx(ranks(w, n))}" for w in elems]
    lines += [f"({_idx(a)}) > ({_idx(b)})" for a, b in covers]
    return payload, lines, True


def cmd_enumerate(args):
    _check_nd(args)
    subs = count_subspaces(args.q, 2 * args.n, args.d)
    points = gp_points(args.q, args.n, args.d, args.budget)
    payload = {"q": args.q, "n": args.n, "d": args.d, "subspaces": subs,
               "isotropic": len(points)}
    lines = [f"subspaces {subs}", f"isotropic {len(points)}"]
    if args.points:
        payload["points"] = [u.to_json() for u in points]
        lines += [json.dumps(u.to_json()) for u in points]
    return payload, lines, True


def cmd_membership(args):
    _check_nd(args)
    F = field_for(args.q)
    ctx = SymplecticContext(args.n, F)
    try:
        u = Mat(F, parse_matrix(args.matrix))
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad --matrix: {e}")
    if u.shape != (2 * args.n, args.d):
        raise UsageError(f"--matrix must be {2 * args.n}x{args.d}, got {u.shape[0]}x{u.shape[1]}")
    if rank(u) != args.d:
        raise UsageError("--matrix is rank deficient")
    iso = is_isotropic(u, ctx, check_rank=False)
    out = {"isotropic": iso}
    if iso:
        for name, w, member in (("schubert", args.u, schubert_member),
                                ("opposite_schubert", args.v, opp_schubert_member)):
            if w is not None:
                if not is_sp_index(w, args.n) or len(w) != args.d:
                    raise UsageError(f"{w} is not in I^Sp for n={args.n}, d={args.d}")
                out[name] = member(u, w, ctx, check=False)
        if args.u is not None and args.v is not None:
            out["richardson"] = richardson_member(u, _spec(args), ctx, check=False)
    payload = {"n": args.n, "d": args.d, "q": args.q, **out}
    return payload, [f"{k} {str(v).lower()}" for k, v in out.items()], True


def cmd_sample(args):
    spec = _spec(args)
    F = field_for(args.q)
    ctx = SymplecticContext(spec.n, F)
    rng = random.Random(args.seed)
    samples, failures = [], 0
    for _ in range(args.count):
        u = richardson_sample(spec, rng, ctx)
        if u is None:
            failures += 1
        else:
            samples.append(u.to_json())
    payload = {**spec.to_dict(), "q": args.q, "seed": args.seed, "samples": samples,
               "failures": failures}
    return payload, [json.dumps(s) for s in samples], True


def _verdict(v):
    d = v.to_dict()
    line = (f"{v.claim} {'PASS' if v.passed else 'FAIL'} lhs={v.lhs_count} rhs={v.rhs_count}"
            + (f" universe={v.universe_count}" if v.universe_count is not None else ""))
    return d, [line] + [json.dumps(w) for w in d["witnesses_of_failure"]], v.passed


def _report(d):
    line = f"{d['claim']} {'PASS' if d['pass'] else 'FAIL'} " + json.dumps(d["achieved"])
    return d, [line], d["pass"]


def cmd_verify(args):
    claim = args.claim
    if claim in ("thm44", "prop35", "prop47", "prop48", "containment", "cells"):
        _check_nd(args)
        if claim == "thm44":
            return _verdict(verify_thm44(args.q, args.n, args.d, args.budget, args.workers))
        fn = {"prop35": verify_prop35, "prop47": verify_prop47, "prop48": verify_prop48,
              "containment": verify_containment, "cells": verify_cell_partition}[claim]
        enumerate_subspaces(args.q, 2 * args.n, args.d, args.budget)  # budget check
        return _verdict(fn(args.q, args.n, args.d))
    if claim == "thm411":
        return _verdict(verify_thm411(args.q, _spec(args), args.budget, args.workers,
                                      args.reading))
    if claim == "smt-basis":
        N = args.N or 2 * args.n
        F = field_for(args.q)
        try:
            rep = verify_basis(args.kind, args.d, N, args.m, F, args.samples,
                               random.Random(args.seed))
        except ValueError as e:
            raise UsageError(str(e))
        return _report(rep.to_dict())
    if claim == "smt-richardson":
        primes = (args.q,) if args.q else PRIME_SCHEDULE[:3]
        rep = verify_independence_escalating(_spec(args), args.m, primes, not args.overline,
                                             args.budget)
        return _report(rep.to_dict())
    if claim == "lemma43":
        return _report(verify_lemma43(GF(args.q), args.r, args.count, random.Random(args.seed)))
    if claim == "laplace":
        if not 2 <= args.d <= 2 * args.n:
            raise UsageError("laplace needs 2 <= d <= 2n")
        return _report(verify_laplace(args.n, args.d, GF(args.q), args.count,
                                      random.Random(args.seed)))
    raise UsageError(f"unknown claim {claim}")


VERIFY_CLAIMS = ("thm44", "thm411", "prop35", "prop47", "prop48", "smt-basis",
                 "smt-richardson", "lemma43", "laplace", "containment", "cells")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2)
    common.add_argument("--d", type=int, default=2)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None,
                        help="subspace enumeration limit (default: $SPFLAG_BUDGET or 10^7)")

    def with_uv(p):
        p.add_argument("--u", type=parse_tuple, default=None, help="e.g. 2,3 (default: top)")
        p.add_argument("--v", type=parse_tuple, default=None, help="e.g. 1,4 (default: bottom)")
        p.add_argument("--reading", choices=("interval", "literal"), default="interval")

    parser = argparse.ArgumentParser(prog="spflag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("relations", parents=[common], help="isotropy relations in Plücker coordinates")
    p = sub.add_parser("ideal", parents=[common], help="Richardson ideal generators")
    with_uv(p)
    p.add_argument("--level", choices=("quotient", "ambient"), default="quotient")
    sub.add_parser("orders", parents=[common], help="I^Sp with ranks and cover relations")
    p = sub.add_parser("enumerate", parents=[common], help="count subspaces and isotropic points")
    p.add_argument("--q", type=_prime, default=2)
    p.add_argument("--points", action="store_true", help="also list the isotropic points")
    p = sub.add_parser("membership", parents=[common], help="test a subspace against X_u, X^v")
    with_uv(p)
    p.add_argument("--q", type=_field_arg, default=0, help="0 for the rationals")
    p.add_argument("--matrix", required=True, help="rows ';'-separated, entries ','-separated")
    p = sub.add_parser("sample", parents=[common], help="certified random points of R(u,v)")
    with_uv(p)
    p.add_argument("--q", type=_field_arg, default=1009)
    p.add_argument("--count", type=int, default=10)
    p = sub.add_parser("verify", parents=[common], help="run one verification suite")
    p.add_argument("claim", choices=VERIFY_CLAIMS)
    with_uv(p)
    p.add_argument("--q", type=_field_arg, default=None)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--kind", choices=("A", "C"), default="C")
    p.add_argument("--N", type=int, default=None, help="ambient dimension for smt-basis")
    p.add_argument("--samples", type=int, default=40)
    p.add_argument("--r", type=int, default=5, help="largest matrix size for lemma43")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--overline", action="store_true",
                   help="smt-richardson: allow factors with a repeated hat")
    p.add_argument("--workers", type=int, default=1)
    return parser


# q defaults that depend on the claim
_VERIFY_Q = {"smt-basis": 0, "smt-richardson": 0, "lemma43": 1009, "laplace": 1009}

VERBS = {"relations": cmd_relations, "ideal": cmd_ideal, "orders": cmd_orders,
         "enumerate": cmd_enumerate, "membership": cmd_membership, "sample": cmd_sample,
         "verify": cmd_verify}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.verb == "verify" and args.q is None:
        args.q = _VERIFY_Q.get(args.claim, 2)
    if args.verb == "verify" and args.claim in ("thm44", "thm411", "prop35", "prop47", "prop48",
                                                 "containment", "cells", "lemma43", "laplace") \
            and not args.q:
        print("error: this claim needs a prime --q", file=err)
        return 2
    try:
        payload, lines, passed = VERBS[args.verb](args)
    except BudgetExceeded as e:
        print(f"error: refusing to enumerate {e.count} subspaces (budget {e.budget})", file=err)
        return 2
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=err)
        return 2
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("".join(line + "\n" for line in lines))
    return 0 if passed else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
