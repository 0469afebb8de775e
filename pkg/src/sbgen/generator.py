"""Chart generation from an unordered bag of signs.

The loop is the bottom-up chart parsing loop with the string positions
replaced by sets of bag positions:

* every sign ``i`` seeds ``<{i}, C[w] -> .>``;
* rule invocation turns an inactive edge for ``C`` into ``A -> C . rest``
  for each rule whose first right-hand category unifies with ``C``
  (lexical entries whose words match a seed sign are invoked the same way);
* dot movement joins an active edge with an inactive edge whose node set
  is disjoint from it, concatenating the phrases in rule order;
* an inactive start-symbol edge covering every bag position is a sentence.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field, replace

from .chart import (
    Agenda,
    Chart,
    Edge,
    default_max_edges,
    ns_full,
)
from .errors import BagError, EdgeBudgetExceeded
from .grammar import Bag, Grammar
from .terms import fresh_counter, standardize_apart, unify, variables

log = logging.getLogger(__name__)


@dataclass
class GenConfig:
    discipline: str = "fifo"
    redundancy: bool = True
    max_edges: int = field(default_factory=default_max_edges)
    mode: str = "all"

    def __post_init__(self):
        if self.mode not in ("all", "first"):
            raise ValueError(f"mode must be 'all' or 'first', not {self.mode!r}")
        if self.discipline not in ("fifo", "lifo"):
            raise ValueError(f"unknown agenda discipline {self.discipline!r}")


@dataclass
class RunStats:
    edges_created: int = 0
    edges_processed: int = 0
    redundant: int = 0
    combinations_tried: int = 0
    seconds: float = 0.0


class GenSession:
    """One generation run: a chart and agenda over one bag."""

    def __init__(self, bag: Bag, grammar: Grammar, config: GenConfig | None = None):
        if not len(bag):
            raise BagError("cannot generate from an empty bag")
        self.grammar = grammar
        self.bag = bag
        self.config = config or GenConfig()
        self.all_bits = ns_full(len(bag))
        self.bag_vars = tuple(variables(bag))
        self.chart = Chart()
        self.agenda = Agenda(self.config.discipline)
        self.solutions: list[tuple[str, ...]] = []
        self.derivations: Counter = Counter()
        self.success_edges: list[Edge] = []
        self.stats = RunStats()
        self._stamps = fresh_counter()
        self._done = False

    # ------------------------------------------------------------------

    def seed(self) -> list[Edge]:
        seeds = []
        for i, sign in enumerate(self.bag):
            e = Edge(1 << i, sign.category, sign.phon, env=self.bag_vars)
            if self.add(e):
                seeds.append(e)
        return seeds

    def add(self, edge: Edge) -> bool:
        """Put ``edge`` on the agenda unless it is redundant; False if dropped."""
        key = None
        if self.config.redundancy:
            key = edge.redundancy_key()
            if self.chart.has_key(key) or self.agenda.has_key(key):
                self.stats.redundant += 1
                return False
        self.stats.edges_created += 1
        if self.stats.edges_created > self.config.max_edges:
            raise EdgeBudgetExceeded(self.stats.edges_created, len(self.chart),
                                     len(self.agenda), self.config.max_edges)
        self.agenda.push(edge, key)
        return True

    def rule_invocation(self, edge: Edge) -> list[Edge]:
        assert not edge.is_active
        new = []
        c = edge.lhs
        for rule in self.grammar.rules_starting_with(c.functor):
            rule = standardize_apart(rule, self._stamps)
            s = unify(rule.rhs[0], c)
            if s is None:
                continue
            e = Edge(edge.nodes, rule.lhs, edge.phrase, (c,), rule.rhs[1:],
                     edge.env).substitute(s)
            if self.add(e):
                new.append(e)
        if not edge.found:
            # seed sign: lexical entries A -> w act as rules A -> C[w]
            for rule in self.grammar.lexical_for(edge.phrase):
                rule = standardize_apart(rule, self._stamps)
                s = unify(rule.lhs, c)
                if s is None:
                    continue
                e = Edge(edge.nodes, rule.lhs, edge.phrase, (c,), (), edge.env).substitute(s)
                if self.add(e):
                    new.append(e)
        return new

    def dot_movement(self, edge: Edge) -> list[Edge]:
        new = []
        if edge.is_active:
            for other in self.chart.inactive_with(edge.next_category.functor):
                e = self.combine(edge, other)
                if e is not None and self.add(e):
                    new.append(e)
        else:
            for other in self.chart.active_expecting(edge.lhs.functor):
                e = self.combine(other, edge)
                if e is not None and self.add(e):
                    new.append(e)
        return new

    def combine(self, active: Edge, inactive: Edge) -> Edge | None:
        self.stats.combinations_tried += 1
        if active.nodes & inactive.nodes:
            return None
        s = unify(active.env, inactive.env) if active.env else {}
        if s is None:
            return None
        s = unify(active.remaining[0], inactive.lhs, s)
        if s is None:
            return None
        return Edge(
            active.nodes | inactive.nodes,
            active.lhs,
            active.phrase + inactive.phrase,
            active.found + (inactive.lhs,),
            active.remaining[1:],
            active.env,
        ).substitute(s)

    def is_success(self, edge: Edge) -> bool:
        return (not edge.is_active and edge.nodes == self.all_bits
                and edge.lhs.functor == self.grammar.start)

    def step(self) -> Edge | None:
        """Process one agenda edge; returns it, or None when the agenda is empty."""
        edge = self.agenda.pop()
        if edge is None:
            return None
        self.stats.edges_processed += 1
        self.chart.insert(edge, edge.redundancy_key() if self.config.redundancy else None)
        if edge.is_active:
            self.dot_movement(edge)
        else:
            if self.is_success(edge):
                self._record(edge)
            self.rule_invocation(edge)
            self.dot_movement(edge)
        return edge

    def _record(self, edge: Edge) -> None:
        self.success_edges.append(edge)
        if self.derivations[edge.phrase] == 0:
            self.solutions.append(edge.phrase)
            log.debug("sentence: %s", " ".join(edge.phrase))
        self.derivations[edge.phrase] += 1

    def run(self) -> list[tuple[str, ...]]:
        t0 = time.perf_counter()
        try:
            if not self._done and not self.stats.edges_created:
                self.seed()
            while True:
                if self.config.mode == "first" and self.solutions:
                    break
                if self.step() is None:
                    break
        finally:
            self.stats.seconds += time.perf_counter() - t0
        self._done = True
        return list(self.solutions)


def init_from_bag(bag: Bag, grammar: Grammar, config: GenConfig | None = None) -> GenSession:
    session = GenSession(bag, grammar, config)
    session.seed()
    return session


def rule_invocation_gen(edge: Edge, session: GenSession) -> list[Edge]:
    return session.rule_invocation(edge)


def dot_movement_gen(edge: Edge, session: GenSession) -> list[Edge]:
    return session.dot_movement(edge)


def is_success(edge: Edge, session: GenSession) -> bool:
    return session.is_success(edge)


def generate(bag: Bag, grammar: Grammar, mode: str | None = None,
             config: GenConfig | None = None) -> list[tuple[str, ...]]:
    """Sentences derivable from ``bag``, deduplicated, in discovery order.

    ``mode`` overrides ``config.mode`` when given.
    """
    if config is None:
        config = GenConfig(mode=mode or "all")
    elif mode is not None and config.mode != mode:
        config = replace(config, mode=mode)
    return GenSession(bag, grammar, config).run()
