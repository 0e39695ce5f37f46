"""Command-line entry point.

Subcommands: universe, star, inject, search, verify-bound,
random-family.  Families travel as JSONL (one family per line); with
--json stdout carries machine-readable JSON, otherwise human text.

Exit codes: 0 success, 2 invalid parameters or parse errors, 3 cap
exceeded, 4 input family not intersecting, 5 parameters outside the
constructed range (r < 2 or 2k > n), 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import DEFAULT_CAP, Params, star, universe
from .errors import (
    CapExceeded,
    Error,
    FormatError,
    NotIntersecting,
    TooLarge,
    UnsupportedRange,
)
from .injection import assemble_injection, verify_certificate
from .jsonl import (
    certificate_to_json,
    read_signed_families,
    signed_family_to_json,
    write_signed_families,
)
from .search import (
    DEFAULT_NODE_BUDGET,
    max_intersecting_exact,
    random_maximal_intersecting,
    verify_bound,
)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _format_set(sset) -> str:
    return "{" + ",".join(f"({x},{a})" for x, a in sset) + "}"


def _params(args) -> Params:
    return Params(args.n, args.k, args.r)


def _emit_family(fam, args) -> int:
    if args.out:
        write_signed_families(args.out, [fam])
        if args.json:
            print(_dump({"size": len(fam), "path": args.out}))
        else:
            print(len(fam))
    elif args.json:
        print(signed_family_to_json(fam))
    else:
        for m in fam.members:
            print(_format_set(m))
    return 0


def _cmd_universe(args) -> int:
    return _emit_family(universe(_params(args), cap=args.cap), args)


def _cmd_star(args) -> int:
    return _emit_family(star(_params(args), cap=args.cap), args)


def _cmd_random_family(args) -> int:
    fam = random_maximal_intersecting(_params(args), args.seed, cap=args.cap)
    return _emit_family(fam, args)


def _cmd_inject(args) -> int:
    families = read_signed_families(args.family)
    if len(families) != 1:
        print(
            f"error: expected exactly one family in {args.family}, "
            f"found {len(families)}",
            file=sys.stderr,
        )
        return 2
    cert = assemble_injection(families[0])
    text = certificate_to_json(cert)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
        report = verify_certificate(cert)
        if args.json:
            print(_dump({"size": report.domain_size, "bound": report.bound, "ok": report.ok}))
        else:
            print(f"mapped {report.domain_size} sets into the star (bound {report.bound})")
    else:
        print(text)
        report = verify_certificate(cert)
    return 0 if report.ok else 1


def _cmd_search(args) -> int:
    res = max_intersecting_exact(_params(args), node_budget=args.budget, cap=args.cap)
    if args.json:
        print(
            _dump(
                {
                    "params": {"n": args.n, "k": args.k, "r": args.r},
                    "max_size": res.max_size,
                    "nodes_explored": res.nodes_explored,
                    "exhausted": res.exhausted,
                    "witness": [[[x, a] for x, a in m] for m in res.witness.members],
                }
            )
        )
    else:
        state = "true" if res.exhausted else "false"
        print(f"max={res.max_size} nodes={res.nodes_explored} exhausted={state}")
    return 0


def _cmd_verify_bound(args) -> int:
    rep = verify_bound(_params(args), node_budget=args.budget, cap=args.cap)
    if args.json:
        print(
            _dump(
                {
                    "params": {"n": args.n, "k": args.k, "r": args.r},
                    "max_size": rep.max_size,
                    "bound": rep.bound,
                    "matches": rep.matches,
                    "conclusive": rep.conclusive,
                    "nodes_explored": rep.nodes_explored,
                }
            )
        )
    elif not rep.conclusive:
        print(f"max>={rep.max_size} bound={rep.bound} inconclusive (node budget exhausted)")
    elif rep.matches:
        print(f"max={rep.max_size} bound={rep.bound} ok")
    elif args.r == 1 and 2 * args.k > args.n:
        print(f"max={rep.max_size} bound={rep.bound} VIOLATION(expected: r=1 regime)")
    else:
        print(f"max={rep.max_size} bound={rep.bound} VIOLATION")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedfam",
        description="Intersecting families of signed sets: construction, "
        "exact search, and verified injections into the star.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(sp):
        sp.add_argument("-n", type=int, required=True, help="ground-set size")
        sp.add_argument("-k", type=int, required=True, help="set size")
        sp.add_argument("-r", type=int, required=True, help="number of signs")

    def add_common(sp):
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="family member cap")
        sp.add_argument("--json", action="store_true", help="machine-readable stdout")

    sp = sub.add_parser("universe", help="write all signed k-sets")
    add_params(sp)
    sp.add_argument("-o", "--out", help="output JSONL path")
    add_common(sp)
    sp.set_defaults(func=_cmd_universe)

    sp = sub.add_parser("star", help="write all signed k-sets containing (1,1)")
    add_params(sp)
    sp.add_argument("-o", "--out", help="output JSONL path")
    add_common(sp)
    sp.set_defaults(func=_cmd_star)

    sp = sub.add_parser("inject", help="map a family file into the star")
    sp.add_argument("family", help="input family JSONL (exactly one line)")
    sp.add_argument("-o", "--out", help="output certificate JSON path")
    sp.add_argument("--json", action="store_true", help="machine-readable stdout")
    sp.set_defaults(func=_cmd_inject)

    sp = sub.add_parser("search", help="exact maximum intersecting family size")
    add_params(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET, help="search node budget")
    add_common(sp)
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("verify-bound", help="compare exact search against the formula")
    add_params(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET, help="search node budget")
    add_common(sp)
    sp.set_defaults(func=_cmd_verify_bound)

    sp = sub.add_parser("random-family", help="seeded random maximal intersecting family")
    add_params(sp)
    sp.add_argument("--seed", type=int, required=True, help="64-bit seed (mandatory)")
    sp.add_argument("-o", "--out", help="output JSONL path")
    add_common(sp)
    sp.set_defaults(func=_cmd_random_family)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TooLarge, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotIntersecting as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except UnsupportedRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
