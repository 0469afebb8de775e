"""Exhaustive top-down generator, used as an oracle and as the slow baseline.

Starting from the start symbol, the search expands the leftmost pending
category either by consuming an unused bag sign whose category unifies
with it, or by rewriting it with a phrasal rule.  A derivation succeeds
when no categories are pending and every sign is used.  Nothing is
memoized, so shared sub-derivations are rebuilt in every context; that is
the point of comparison with the chart.

This module deliberately shares nothing with the chart code apart from
the term operations.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import OracleBudgetExceeded
from .grammar import Bag, Grammar
from .terms import Category, IndexList, Var, apply, fresh_counter, standardize_apart, unify


@dataclass
class OracleConfig:
    """``depth_limit`` caps rule applications per derivation (default 2*|bag|)."""

    depth_limit: int | None = None
    time_budget: float | None = None


@dataclass
class OracleRun:
    sentences: list[tuple[str, ...]] = field(default_factory=list)
    expansions: int = 0
    seconds: float = 0.0
    derivations: int = 0


class _OutOfTime(Exception):
    pass


def oracle_run(bag: Bag, grammar: Grammar, cfg: OracleConfig | None = None,
               mode: str = "all") -> OracleRun:
    cfg = cfg or OracleConfig()
    n = len(bag)
    depth_limit = cfg.depth_limit if cfg.depth_limit is not None else 2 * n
    if depth_limit < n:
        raise ValueError(f"depth limit {depth_limit} is below bag size {n}")
    full = (1 << n) - 1
    signs = list(bag)
    by_lhs: dict[str, list] = {}
    for r in grammar.phrasal:
        by_lhs.setdefault(r.lhs.functor, []).append(r)
    stamps = fresh_counter()
    run = OracleRun()
    found: dict[tuple[str, ...], None] = {}
    truncated = False
    t0 = time.perf_counter()
    deadline = None if cfg.time_budget is None else t0 + cfg.time_budget

    def search(goals, used, s, words, depth):
        # yields once per complete derivation
        nonlocal truncated
        run.expansions += 1
        if deadline is not None and run.expansions % 256 == 0 and time.perf_counter() > deadline:
            raise _OutOfTime
        if not goals:
            if used == full:
                yield words
            return
        if len(goals) > n - bin(used).count("1"):
            return  # every pending category needs at least one sign
        goal = apply(s, goals[0])
        rest = goals[1:]
        for i, sign in enumerate(signs):
            if used >> i & 1:
                continue
            s2 = unify(goal, sign.category, s)
            if s2 is not None:
                yield from search(rest, used | 1 << i, s2, words + sign.phon, depth)
        for rule in by_lhs.get(goal.functor, ()):
            rule = standardize_apart(rule, stamps)
            s2 = unify(rule.lhs, goal, s)
            if s2 is None:
                continue
            if depth >= depth_limit:
                truncated = True
                continue
            yield from search(rule.rhs + rest, used, s2, words, depth + 1)

    top = Category(grammar.start, IndexList((), Var("Top", -1)))
    try:
        for words in search((top,), 0, {}, (), 0):
            run.derivations += 1
            found.setdefault(words, None)
            if mode == "first":
                break
    except _OutOfTime:
        run.sentences = list(found)
        run.seconds = time.perf_counter() - t0
        raise OracleBudgetExceeded(
            f"time budget {cfg.time_budget}s exceeded after {run.expansions} expansions",
            frozenset(found), run.expansions, run.seconds) from None
    run.sentences = list(found)
    run.seconds = time.perf_counter() - t0
    if truncated and mode == "all":
        raise OracleBudgetExceeded(
            f"depth limit {depth_limit} reached; result may be incomplete",
            frozenset(found), run.expansions, run.seconds)
    return run


def oracle_generate_all(bag: Bag, grammar: Grammar,
                        cfg: OracleConfig | None = None) -> set[tuple[str, ...]]:
    return set(oracle_run(bag, grammar, cfg).sentences)


def oracle_generate_first(bag: Bag, grammar: Grammar,
                          cfg: OracleConfig | None = None) -> tuple[str, ...] | None:
    run = oracle_run(bag, grammar, cfg, mode="first")
    return run.sentences[0] if run.sentences else None


@dataclass(frozen=True)
class HypothesisCount:
    expansions: int = 0
    wall_time: float = 0.0


def count_hypotheses(run=None) -> HypothesisCount:
    """Work done by a finished run.

    For a chart session this is the number of edges that entered the chart;
    for an oracle run it is the number of search nodes visited.
    """
    if run is None:
        return HypothesisCount()
    if isinstance(run, OracleRun):
        return HypothesisCount(run.expansions, run.seconds)
    # generator.GenSession, duck-typed to keep this module chart-free
    return HypothesisCount(len(run.chart), run.stats.seconds)
