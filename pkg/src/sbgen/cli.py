"""Command-line entry point.

Exit codes: 0 success, 1 no result, 2 input error, 3 edge budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .bench import run_bench, write_csv
from .chart import default_max_edges
from .errors import EdgeBudgetExceeded, SbgenError
from .generator import GenConfig, GenSession
from .grammar import read_bag, read_bilingual, read_grammar, render_bag
from .parser import extract_bag, parse
from .transfer import transfer

EXIT_OK, EXIT_NONE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class _Stage(Exception):
    def __init__(self, stage: str, error: Exception):
        super().__init__(f"{stage}: {error}")
        self.error = error


def _gen_flags(p: argparse.ArgumentParser, default_mode: str) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", dest="mode", action="store_const", const="all")
    g.add_argument("--first", dest="mode", action="store_const", const="first")
    p.set_defaults(mode=default_mode)
    p.add_argument("--agenda", choices=("fifo", "lifo"), default="fifo")
    p.add_argument("--no-redundancy-check", dest="redundancy", action="store_false",
                   help="skip the duplicate-edge check (may not terminate on cyclic grammars)")
    p.add_argument("--max-edges", type=int, default=None,
                   help="edge budget (default: $SBGEN_MAX_EDGES or 1000000)")


def _config(args) -> GenConfig:
    max_edges = args.max_edges if args.max_edges is not None else default_max_edges()
    return GenConfig(args.agenda, args.redundancy, max_edges, args.mode)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sbgen", description="Shake-and-Bake chart generation")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a sentence and print its leaf bags")
    p.add_argument("grammar")
    p.add_argument("words", nargs="+")

    p = sub.add_parser("generate", help="generate sentences from a bag")
    p.add_argument("grammar")
    p.add_argument("bag")
    _gen_flags(p, "all")

    p = sub.add_parser("translate", help="parse, transfer and generate")
    p.add_argument("source_grammar")
    p.add_argument("target_grammar")
    p.add_argument("bilingual")
    p.add_argument("words", nargs="+")
    _gen_flags(p, "all")

    p = sub.add_parser("bench", help="chart vs exhaustive timing table as CSV")
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=11)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--csv", default="-", help="output path, '-' for stdout")
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--time-budget", type=float, default=None,
                   help="seconds allowed per baseline run")
    return ap


def _words(args) -> list[str]:
    return " ".join(args.words).split()


def cmd_parse(args, out) -> int:
    g = read_grammar(args.grammar)
    result = parse(_words(args), g)
    if not result.analyses:
        print("no parse", file=sys.stderr)
        return EXIT_NONE
    for i, edge in enumerate(result.analyses):
        print(f"# analysis {i + 1}: {edge.lhs}", file=out)
        out.write(render_bag(extract_bag(result, i)))
    return EXIT_OK


def cmd_generate(args, out) -> int:
    g = read_grammar(args.grammar)
    bag = read_bag(args.bag)
    sentences = GenSession(bag, g, _config(args)).run()
    for s in sentences:
        print(" ".join(s), file=out)
    return EXIT_OK if sentences else EXIT_NONE


def translate_sentence(words, source, target, lexicon, config: GenConfig | None = None):
    """Every target sentence for ``words``, deduplicated in discovery order.

    Errors are re-raised tagged with the stage that produced them.
    """
    config = config or GenConfig()
    try:
        result = parse(words, source)
    except SbgenError as e:
        raise _Stage("parse", e) from e
    out: dict[tuple[str, ...], None] = {}
    for i in range(len(result.analyses)):
        try:
            targets = transfer(extract_bag(result, i), lexicon)
        except SbgenError as e:
            raise _Stage("transfer", e) from e
        for t in targets:
            try:
                for s in GenSession(t.bag, target, config).run():
                    out.setdefault(s, None)
            except EdgeBudgetExceeded:
                raise
            except SbgenError as e:
                raise _Stage("generate", e) from e
    return list(out)


def cmd_translate(args, out) -> int:
    src = read_grammar(args.source_grammar)
    tgt = read_grammar(args.target_grammar)
    lex = read_bilingual(args.bilingual)
    sentences = translate_sentence(_words(args), src, tgt, lex, _config(args))
    for s in sentences:
        print(" ".join(s), file=out)
    return EXIT_OK if sentences else EXIT_NONE


def cmd_bench(args, out) -> int:
    rows = run_bench(args.min, args.max, args.reps, max_edges=args.max_edges,
                     time_budget=args.time_budget)
    if args.csv == "-":
        write_csv(rows, out)
    else:
        write_csv(rows, args.csv)
    return EXIT_OK


COMMANDS = {"parse": cmd_parse, "generate": cmd_generate,
            "translate": cmd_translate, "bench": cmd_bench}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except EdgeBudgetExceeded as e:
        print(f"sbgen: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except _Stage as e:
        print(f"sbgen: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (SbgenError, OSError, ValueError) as e:
        print(f"sbgen: {e}", file=sys.stderr)
        return EXIT_INPUT


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
