"""Command-line interface.

Exit codes: 0 on success (or a computed verdict), 1 on validation or
feasibility failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import construct, fileformat, maximality, search
from .core import MofsError, Params
from .search import InfeasibleSizeGuard, SearchConfig
from .verify import completeness_structure, upper_bound, verify_mofs


def _write_set(mset, path):
    text = fileformat.encode(mset)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_set(path):
    with open(path, encoding="utf-8") as fh:
        return fileformat.decode(fh.read())


def _cmd_construct(args):
    if args.prime_power is not None:
        m, h = args.prime_power
        mset = construct.construct_prime_power(m, h)
    else:
        mset = construct.construct_federer(construct.hadamard(args.hadamard))
    _write_set(mset, args.output)
    return 0


def _cmd_verify(args):
    mset = _read_set(args.file)
    report = None
    if mset.params.m >= 2:
        report = completeness_structure(mset)
    print(f"OK: {mset.t} mutually orthogonal squares of type {mset.params}")
    if report is not None:
        bound = report.bound
        exact = "exact" if bound.exact else "floor"
        print(f"upper bound: {bound.value} ({exact})")
        print(f"complete: {'yes' if report.is_complete else 'no'}")
    return 0


def _cmd_bound(args):
    params = Params(args.m, args.lam)
    b = upper_bound(params)
    print(f"{b.value} ({'exact' if b.exact else 'floor'})")
    return 0


def _cmd_count(args):
    params = Params(args.m, args.lam)
    config = SearchConfig(force=args.force)
    print(search.count_fsquares(params, config))
    return 0


def _cmd_analyze(args):
    mset = _read_set(args.file)
    params = mset.params
    print(f"type {params}: {mset.t} mutually orthogonal squares")
    if params.m >= 2:
        report = completeness_structure(mset)
        exact = "exact" if report.bound.exact else "floor"
        print(f"upper bound: {report.bound.value} ({exact})")
        print(f"complete: {'yes' if report.is_complete else 'no'}")
        print(f"completeness block structure matches: {report.structure_matches}")
    for a in range(1, params.m + 1):
        pm = maximality.parity_matrix(mset, (a,) * mset.t)
        cert = maximality.detect_full_relation(pm)
        if cert is None:
            print(f"symbol {a}: parity matrix has no full-relation block form")
        else:
            print(
                f"symbol {a}: full relation with x={cert.x} y={cert.y}"
                f" (canonical orientation)"
            )
            rep = maximality.parity_report(cert, params, mset.t)
            for name, flag in [
                ("x = y = t*lambda (mod 2)", rep.lemma6_i),
                ("m*lambda even", rep.lemma6_ii),
                ("t odd", rep.lemma7_t_odd),
                ("t = m(x+y) - (m+1) (mod 8)", rep.prop9),
                ("t = m - 1 (mod 4)", rep.cor10),
            ]:
                print(f"  {name}: {'pass' if flag else 'FAIL'}")
    verdict = maximality.maximality_verdict(mset)
    if verdict.certified:
        c = verdict.certificate
        print(
            f"maximal: yes (parity certificate, symbols {c.symbol_choice[0]},"
            f" x={c.x}, y={c.y})"
        )
    else:
        print("maximal: undetermined (no parity certificate; not a claim)")
    return 0


def _cmd_extend(args):
    mset = _read_set(args.file)
    config = SearchConfig(seed=args.seed, force=args.force)
    if args.exhaustive:
        found = sum(1 for _ in search.extensions(mset, config))
        print(f"extensions: {found}")
        if found == 0:
            print("maximal: yes (exhaustive search)")
        else:
            print("maximal: no (exhaustive search)")
        return 0
    grown = search.grow_maximal(mset, config)
    _write_set(grown, args.output)
    print(
        f"grew from {mset.t} to {grown.t} squares;"
        f" maximal: yes (exhaustive search)",
        file=sys.stderr,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mofs",
        description="Construct, verify, and analyze mutually orthogonal"
        " frequency squares.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a complete set")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--prime-power", nargs=2, type=int, metavar=("M", "H"), default=None
    )
    group.add_argument("--hadamard", type=int, metavar="ORDER", default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="validate a MOFS file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bound", help="print the size upper bound")
    p.add_argument("m", type=int)
    p.add_argument("lam", type=int)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("analyze", help="structure and maximality report")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("count", help="enumerate and count all F-squares")
    p.add_argument("m", type=int)
    p.add_argument("lam", type=int)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("extend", help="search for orthogonal extensions")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--greedy", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--force", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_extend)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "greedy", False) and args.seed is None:
        parser.error("--greedy requires an explicit --seed")
    try:
        return args.func(args)
    except InfeasibleSizeGuard as exc:
        print(f"refused: {exc} (use --force to override)", file=sys.stderr)
        return 1
    except (MofsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
