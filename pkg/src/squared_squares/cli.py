"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 budget exhausted, 4 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .compositions import CompositionError, FILTERS, border_compositions, filter_compositions
from .geometry import GeometryError, classify
from .lemmas import LEMMAS, UnknownLemma, verify_lemma
from .oracle import MAX_N, OracleLimitError, naive_enumerate
from .render import to_svg
from .search import BudgetExceeded, SearchOptions, enumerate_squares
from .serialize import ParseError, dumps, load, to_bouwkamp, to_document

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4

# Expected number of symmetry classes for every side up to 17.
THEOREM = {n: (1 if n in (11, 16) else 0) for n in range(1, 18)}


def _options(args) -> SearchOptions:
    collect = "count_only" if getattr(args, "count_only", False) else "canonical"
    if getattr(args, "no_prune", False):
        return SearchOptions.unpruned(collect=collect, node_budget=args.node_budget)
    return SearchOptions(collect=collect, node_budget=args.node_budget)


def _report_line(r) -> str:
    return (f"n={r.n:<3} classes={r.canonical_count} raw={r.raw_count} "
            f"rotation_classes={r.reflection_pair_count} nodes={r.nodes_expanded} "
            f"time={r.wall_time:.3f}s")


def cmd_enumerate(args) -> int:
    if not 1 <= args.min <= args.max:
        print("need 1 <= --min <= --max", file=sys.stderr)
        return EXIT_INVALID
    emit = args.emit or []
    if emit and (emit[0] not in ("json", "text", "bouwkamp", "svg-dir")
                 or (emit[0] == "svg-dir") != (len(emit) == 2) or len(emit) > 2):
        print("--emit takes json, text, bouwkamp or 'svg-dir PATH'", file=sys.stderr)
        return EXIT_INVALID
    opts = _options(args)
    reports = [enumerate_squares(n, opts, args.workers) for n in range(args.min, args.max + 1)]
    mode = emit[0] if emit else None
    if mode == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2))
        return EXIT_OK
    for r in reports:
        print(_report_line(r))
        for i, d in enumerate(r.representatives):
            if mode == "text":
                print(dumps(d), end="")
            elif mode == "bouwkamp":
                print(f"{d.n} {to_bouwkamp(d)}")
            elif mode == "svg-dir":
                out = Path(emit[1])
                out.mkdir(parents=True, exist_ok=True)
                (out / f"n{d.n}_{i}.svg").write_text(to_svg(d))
    return EXIT_OK


def cmd_classify(args) -> int:
    d = load(args.file)
    c = classify(d)
    print(f"n={d.n}")
    print(f"order={c.order}")
    print(f"perfect={str(c.perfect).lower()}")
    print(f"simple={str(c.simple).lower()}")
    print(f"trivial={str(c.trivial).lower()}")
    print(f"border_touch={c.border_touch_count}")
    return EXIT_OK


def cmd_compositions(args) -> int:
    comps = border_compositions(args.n, args.min_parts, args.max_parts)
    if args.apply_filters:
        comps = filter_compositions(comps, args.filters or tuple(FILTERS))
    for c in comps:
        print(c)
    print(f"# {len(comps)} compositions", file=sys.stderr)
    return EXIT_OK


def cmd_verify_lemma(args) -> int:
    ids = list(LEMMAS) if args.id == "all" else [args.id]
    ok = True
    for lemma_id in ids:
        report = verify_lemma(lemma_id, args.max_n)
        print(report.summary())
        if args.witnesses:
            for w in report.witnesses:
                print(f"    {w}")
        ok &= report.passed
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_render(args) -> int:
    d = load(args.file)
    Path(args.out).write_text(to_svg(d, args.cell_px))
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.include_trivial:
        opts = SearchOptions.all_tilings()
    else:
        opts = SearchOptions()
    r = naive_enumerate(args.n, args.include_trivial)
    print("oracle     " + _report_line(r))
    if not args.compare:
        return EXIT_OK
    e = enumerate_squares(args.n, opts)
    print("enumerator " + _report_line(e))
    same = r.canonical_keys == e.canonical_keys and r.raw_count == e.raw_count
    print("match" if same else "MISMATCH")
    return EXIT_OK if same else EXIT_VERIFY


def cmd_theorem(args) -> int:
    opts = SearchOptions(node_budget=args.node_budget)
    ok = True
    print(f"{'n':>3} {'expected':>8} {'classes':>7} {'raw':>4} {'rot':>4} {'nodes':>8} {'time':>8}  status")
    for n, expected in THEOREM.items():
        r = enumerate_squares(n, opts, args.workers)
        good = r.canonical_count == expected
        ok &= good
        print(f"{n:>3} {expected:>8} {r.canonical_count:>7} {r.raw_count:>4} "
              f"{r.reflection_pair_count:>4} {r.nodes_expanded:>8} {r.wall_time:>7.3f}s  "
              f"{'ok' if good else 'MISMATCH'}")
    print("theorem reproduced" if ok else "theorem NOT reproduced")
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="squared-squares", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="enumerate squared squares for a range of sizes")
    e.add_argument("--min", type=int, required=True)
    e.add_argument("--max", type=int, required=True)
    e.add_argument("--no-prune", action="store_true", help="disable all pruning rules")
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--emit", nargs="+", metavar="FORMAT", help="json | text | bouwkamp | svg-dir PATH")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--node-budget", type=int)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("classify", help="print order/perfect/simple/trivial/border-touch")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    k = sub.add_parser("compositions", help="list admissible border compositions")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--min-parts", type=int, default=1)
    k.add_argument("--max-parts", type=int)
    k.add_argument("--apply-filters", action="store_true")
    k.add_argument("--filter", dest="filters", action="append", choices=sorted(FILTERS),
                   help="restrict --apply-filters to these filters (repeatable)")
    k.set_defaults(func=cmd_compositions)

    v = sub.add_parser("verify-lemma", help="machine-check one lemma (or 'all')")
    v.add_argument("id", help=f"one of {', '.join(LEMMAS)} or 'all'")
    v.add_argument("--max-n", type=int, default=17)
    v.add_argument("--witnesses", action="store_true", help="list every individual check")
    v.set_defaults(func=cmd_verify_lemma)

    r = sub.add_parser("render", help="render a dissection file as SVG")
    r.add_argument("file")
    r.add_argument("--out", required=True)
    r.add_argument("--cell-px", type=int, default=20)
    r.set_defaults(func=cmd_render)

    o = sub.add_parser("oracle", help="run the brute-force oracle")
    o.add_argument("--n", type=int, required=True, help=f"1..{MAX_N}")
    o.add_argument("--include-trivial", action="store_true")
    o.add_argument("--compare", action="store_true", help="also run the enumerator and compare")
    o.set_defaults(func=cmd_oracle)

    t = sub.add_parser("theorem", help="reproduce the class counts for n = 1..17")
    t.add_argument("--workers", type=int, default=1)
    t.add_argument("--node-budget", type=int)
    t.set_defaults(func=cmd_theorem)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, GeometryError, CompositionError, OracleLimitError, UnknownLemma,
            OSError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
