"""Chart versus exhaustive generation on a family of growing bags.

The family is a reconstruction: a transitive clause ``Jean aime Marie``
plus ``size - 3`` pre-verbal adverbs whose event indices form a chain
``e0 -> e1 -> ... -> ek``.  The chain leaves exactly one way to attach each
adverb, so every bag has one sentence while the space of partial
hypotheses grows with the bag.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .errors import EdgeBudgetExceeded, OracleBudgetExceeded
from .generator import GenConfig, GenSession
from .grammar import Bag, Grammar, load_bag, load_grammar, render_bag
from .oracle import OracleConfig, oracle_run

MODES = ("chart-first", "chart-all", "baseline-first", "baseline-all")
CSV_HEADER = ("size", "mode", "seconds", "expansions", "sentences")

NOUNS = ("Jean", "Marie", "Paul", "Sophie", "Luc", "Claire", "Pierre", "Anne")
VERBS = ("aime", "voit", "connaît", "cherche", "écoute")
ADVERBS = ("souvent", "hier", "ici", "vraiment", "toujours", "encore",
           "déjà", "bien", "enfin", "alors", "aussi", "pourtant")


def bench_grammar_text() -> str:
    lines = [
        "# Benchmark grammar: transitive clauses with chained pre-verbal adverbs.",
        "start s.",
        "rule s(X|P) -> np(X) vp(X|P).",
        "rule vp(X,E) -> v(X,Y,E) np(Y).",
        "rule vp(X,E) -> adv(E0,E) vp(X,E0).",
    ]
    lines += [f'lex np({n.lower()}) -> "{n}".' for n in NOUNS]
    lines += [f'lex v(X,Y,e0) -> "{v}".' for v in VERBS]
    lines += [f'lex adv(E0,E) -> "{a}".' for a in ADVERBS]
    return "\n".join(lines) + "\n"


def bench_grammar() -> Grammar:
    return load_grammar(bench_grammar_text(), "<bench grammar>")


def bench_bag_text(size: int) -> str:
    """Signs of the size-``size`` bag, in a fixed order that is not the surface order."""
    if not 3 <= size <= 3 + len(ADVERBS):
        raise ValueError(f"bench bag size must be in 3..{3 + len(ADVERBS)}")
    core = ['np(marie) ["Marie"]', 'v(jean,marie,e0) ["aime"]', 'np(jean) ["Jean"]']
    advs = [f'adv(e{i - 1},e{i}) ["{ADVERBS[i - 1]}"]' for i in range(1, size - 2)]
    # interleave so bag order says nothing about word order
    signs = []
    while core or advs:
        if advs:
            signs.append(advs.pop())
        if core:
            signs.append(core.pop(0))
    return "\n".join(signs) + "\n"


def bench_bag(size: int) -> Bag:
    return load_bag(bench_bag_text(size), f"<bench bag {size}>")


def expected_sentence(size: int) -> tuple[str, ...]:
    advs = tuple(reversed(ADVERBS[: size - 3]))
    return ("Jean",) + advs + ("aime", "Marie")


def write_fixtures(directory) -> list[Path]:
    """Write ``bench.sbg`` and ``bench_NN.sbb`` for every supported size."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = [directory / "bench.sbg"]
    out[0].write_text(bench_grammar_text(), encoding="utf-8")
    for size in range(3, 4 + len(ADVERBS)):
        p = directory / f"bench_{size:02d}.sbb"
        p.write_text(render_bag(bench_bag(size)), encoding="utf-8")
        out.append(p)
    return out


@dataclass(frozen=True)
class BenchRow:
    size: int
    mode: str
    seconds: float
    expansions: int
    sentences: int


def run_cell(bag: Bag, grammar: Grammar, mode: str, max_edges: int | None = None,
             time_budget: float | None = None) -> BenchRow:
    """Run one (bag, mode) cell.  Budget overruns give ``sentences == -1``."""
    engine, _, which = mode.partition("-")
    if engine == "chart":
        cfg = GenConfig(mode=which) if max_edges is None else GenConfig(mode=which, max_edges=max_edges)
        session = GenSession(bag, grammar, cfg)
        t0 = time.perf_counter()
        try:
            sentences = len(session.run())
        except EdgeBudgetExceeded:
            sentences = -1
        seconds = time.perf_counter() - t0
        return BenchRow(len(bag), mode, seconds, len(session.chart), sentences)
    if engine == "baseline":
        t0 = time.perf_counter()
        try:
            run = oracle_run(bag, grammar, OracleConfig(time_budget=time_budget), which)
            return BenchRow(len(bag), mode, time.perf_counter() - t0,
                            run.expansions, len(run.sentences))
        except OracleBudgetExceeded as e:
            return BenchRow(len(bag), mode, time.perf_counter() - t0, e.expansions, -1)
    raise ValueError(f"unknown bench mode {mode!r}")


def run_bench(min_size: int = 3, max_size: int = 11, reps: int = 1,
              modes=MODES, grammar: Grammar | None = None, bag_for=bench_bag,
              max_edges: int | None = None, time_budget: float | None = None,
              progress=None) -> list[BenchRow]:
    if not 3 <= min_size <= max_size:
        raise ValueError("need 3 <= min <= max")
    grammar = grammar or bench_grammar()
    rows = []
    for size in range(min_size, max_size + 1):
        bag = bag_for(size)
        for mode in modes:
            for _ in range(reps):
                row = run_cell(bag, grammar, mode, max_edges, time_budget)
                rows.append(row)
                if progress:
                    progress(row)
    return rows


def write_csv(rows, out=None) -> str:
    """Write rows as CSV to a path or text stream; also returns the text."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        d = asdict(r)
        d["seconds"] = f"{r.seconds:.6f}"
        w.writerow([d[k] for k in CSV_HEADER])
    text = buf.getvalue()
    if out is None:
        return text
    if isinstance(out, (str, Path)):
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        out.write(text)
    return text


def read_csv(path) -> list[BenchRow]:
    with open(path, encoding="utf-8", newline="") as f:
        return [BenchRow(int(r["size"]), r["mode"], float(r["seconds"]),
                         int(r["expansions"]), int(r["sentences"]))
                for r in csv.DictReader(f)]
