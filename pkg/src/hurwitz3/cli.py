"""Command-line front end.

Subcommands: ``nf`` (normal form), ``vertices``, ``components``, ``equiv``,
``orbit``, ``check``.  Words are given as signed tokens (``s0 s1- s2``);
factorization files use one ``conjugator : atom`` line per factor with an
optional leading ``target:`` line.

Exit codes: 0 success, 1 property failure, 2 parse error, 3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from ._backend import KERNEL_NAME
from .braid import Braid, TokenError, evaluate, parse_signed_word
from .factorizations import (
    Factorization,
    ORBIT_BUDGET,
    full_certificate,
    hurwitz_orbit,
    parse_factorization_file,
)
from .graph import (
    base_components,
    components_dot,
    components_report,
    decide_equivalence,
    decision_report,
)
from .words import format_hatted_word

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_INVALID_INPUT = 3


def _braid_from_text(text: str) -> Braid:
    return evaluate(parse_signed_word(text))


def cmd_nf(args) -> int:
    print(_braid_from_text(args.word).tokens())
    return EXIT_OK


def cmd_vertices(args) -> int:
    x = _braid_from_text(args.word)
    if x.p < 0:
        print(f"p = {x.p} < 0: single orbit, no vertex enumeration needed")
        return EXIT_OK
    comps = base_components(x)
    for w in comps.vertices:
        print(format_hatted_word(w))
    if not comps.vertices:
        print("no vertices: the braid is not quasipositive")
    return EXIT_OK


def cmd_components(args) -> int:
    x = _braid_from_text(args.word)
    if x.p < 0:
        if args.json:
            print(json.dumps({"normal_form": x.tokens(), "p": x.p,
                              "notice": "single orbit (p < 0)"}, indent=2))
        else:
            print(f"p = {x.p} < 0: single orbit, all factorizations of "
                  f"{x.tokens()} are equivalent")
        return EXIT_OK
    comps = base_components(x)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(components_dot(comps))
    if args.json:
        print(json.dumps(components_report(comps), indent=2))
        return EXIT_OK
    print(f"normal form: {x.tokens()}")
    print(f"vertices: {len(comps.vertices)}")
    print(f"components: {comps.component_count}")
    for cid, rep in enumerate(comps.representatives):
        size = len(comps.members(cid))
        print(f"  component {cid}: {size} vertex(es), representative "
              f"{format_hatted_word(rep)}")
    if not comps.vertices:
        print("not quasipositive (no valid factorization exists)")
    return EXIT_OK


def _load_factorization(path: str, x: Braid) -> Factorization:
    with open(path) as fh:
        factors, declared = parse_factorization_file(fh.read())
    if declared is not None and declared != x:
        raise ValueError(f"{path}: declared target {declared.tokens()!r} "
                         f"differs from the command word {x.tokens()!r}")
    return Factorization(factors, x)


def cmd_equiv(args) -> int:
    x = _braid_from_text(args.word)
    try:
        f1 = _load_factorization(args.file1, x)
        f2 = _load_factorization(args.file2, x)
    except ValueError as exc:
        if isinstance(exc, TokenError):
            raise
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    decision = decide_equivalence(f1, f2, x)
    if args.json:
        print(json.dumps(decision_report(decision), indent=2))
    else:
        if decision.reason:
            print(f"{decision.verdict} ({decision.reason})")
        else:
            print(decision.verdict)
        if decision.component_a is not None:
            print(f"vertices: {decision.vertex_a.tokens()}  /  "
                  f"{decision.vertex_b.tokens()}")
            print(f"components: {decision.component_a} vs "
                  f"{decision.component_b} (of {decision.component_count}; "
                  f"{decision.v0_size} vertices)")
    if decision.verdict == "invalid":
        if not args.json:
            print(f"invalid: {decision.reason}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    if args.certificate and decision.verdict == "equivalent":
        _print_certificate(decision, f1, f2)
    return EXIT_OK


def _print_certificate(decision, f1: Factorization, f2: Factorization) -> None:
    if decision.components is None:
        print("certificate: none needed (single orbit for p < 0)")
        return
    moves = full_certificate(decision, f1, f2)
    if moves is None:
        print("certificate: component-level only (the connecting path "
              "crosses a vertical move with no move sequence)")
        return
    if not moves:
        print("moves: (none: the factor tuples already agree)")
        return
    text = " ".join(f"{i}{'+' if d > 0 else '-'}" for i, d in moves)
    print(f"moves: {text}  (verified)")


def cmd_orbit(args) -> int:
    x = _braid_from_text(args.word)
    try:
        f = _load_factorization(args.factfile, x)
    except ValueError as exc:
        if isinstance(exc, TokenError):
            raise
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    from .factorizations import validate
    err = validate(f)
    if err is not None:
        print(f"invalid: factorization {err}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    orbit, saturated = hurwitz_orbit(f, args.budget)
    print(f"orbit size: {len(orbit)} "
          f"({'saturated' if saturated else 'budget reached, not saturated'})")
    return EXIT_OK


def cmd_check(args) -> int:
    from .checks import run_all
    print(f"kernel: {KERNEL_NAME}; seed: {args.seed}; "
          f"max-len: {args.max_len}; jobs: {args.jobs}")
    results = run_all(max_len=args.max_len, seed=args.seed, jobs=args.jobs,
                      budget=args.budget)
    failed = False
    for r in results:
        print(r.line())
        for msg in r.failures:
            print(f"    {msg}")
        failed = failed or not r.ok
    print("overall:", "FAIL" if failed else "PASS")
    return EXIT_PROPERTY_FAILURE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz3",
        description="Hurwitz equivalence of quasipositive factorizations "
                    "of 3-strand braids")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="right normal form of a signed word")
    p.add_argument("word")
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("vertices", help="weight-0 vertices of a braid")
    p.add_argument("word")
    p.set_defaults(fn=cmd_vertices)

    p = sub.add_parser("components",
                       help="weight-0 vertex components of a braid")
    p.add_argument("word")
    p.add_argument("--dot", metavar="FILE", help="write a DOT rendering")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_components)

    p = sub.add_parser("equiv",
                       help="decide Hurwitz equivalence of two factorizations")
    p.add_argument("word")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--certificate", action="store_true",
                   help="emit a move sequence when available")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_equiv)

    p = sub.add_parser("orbit", help="brute-force orbit of a factorization")
    p.add_argument("word")
    p.add_argument("factfile")
    p.add_argument("--budget", type=int, default=ORBIT_BUDGET)
    p.set_defaults(fn=cmd_orbit)

    p = sub.add_parser("check", help="run the property suites")
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=ORBIT_BUDGET)
    p.set_defaults(fn=cmd_check)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TokenError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
