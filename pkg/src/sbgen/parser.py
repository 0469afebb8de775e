"""Bottom-up active chart parser over word positions.

Edges are ``<start, end, A -> found . remaining>``.  Each edge also carries
the leaf signs it covers; every unifier applied to an edge is applied to
its leaves too, so a spanning edge reports its leaves with the indices its
derivation instantiated.  Those leaves are the bag handed to transfer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chart import Agenda, Chart, default_max_edges
from .errors import EdgeBudgetExceeded, SbgenError, UnknownWordError
from .grammar import Bag, Grammar, Sign
from .terms import Category, apply, canonical, fresh_counter, standardize_apart, unify


@dataclass(frozen=True)
class SpanEdge:
    start: int
    end: int
    lhs: Category
    found: tuple[Category, ...]
    remaining: tuple[Category, ...]
    phrase: tuple[str, ...]
    leaves: tuple[Sign, ...] = ()

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise ValueError(f"bad span {self.start}..{self.end}")

    @property
    def is_active(self) -> bool:
        return bool(self.remaining)

    @property
    def next_category(self) -> Category:
        return self.remaining[0]

    def index_key(self) -> str:
        return self.remaining[0].functor if self.remaining else self.lhs.functor

    def term_parts(self):
        return (self.lhs,) + self.found + self.remaining + self.leaves

    def substitute(self, s) -> "SpanEdge":
        return SpanEdge(self.start, self.end, apply(s, self.lhs), apply(s, self.found),
                        apply(s, self.remaining), self.phrase, apply(s, self.leaves))

    def redundancy_key(self):
        return (self.start, self.end, len(self.found), self.phrase,
                canonical(self.term_parts()))

    def __str__(self) -> str:
        found = " ".join(map(str, self.found)) or " ".join(self.phrase)
        rest = " ".join(map(str, self.remaining))
        return f"<{self.start}, {self.end}, {self.lhs} -> {found} .{' ' + rest if rest else ''}>"


@dataclass
class ParseResult:
    words: tuple[str, ...]
    analyses: list[SpanEdge] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.analyses)

    def leaves(self, which: int = 0) -> tuple[Sign, ...]:
        return self.analyses[which].leaves


class ParseSession:
    def __init__(self, words, grammar: Grammar, discipline: str = "fifo",
                 redundancy: bool = True, max_edges: int | None = None):
        self.words = tuple(words)
        if not self.words:
            raise SbgenError("cannot parse an empty sentence")
        self.grammar = grammar
        self.redundancy = redundancy
        self.max_edges = default_max_edges() if max_edges is None else max_edges
        self.chart = Chart()
        self.agenda = Agenda(discipline)
        self.analyses: list[SpanEdge] = []
        self.edges_created = 0
        self._stamps = fresh_counter()

    def add(self, edge: SpanEdge) -> bool:
        key = None
        if self.redundancy:
            key = edge.redundancy_key()
            if self.chart.has_key(key) or self.agenda.has_key(key):
                return False
        self.edges_created += 1
        if self.edges_created > self.max_edges:
            raise EdgeBudgetExceeded(self.edges_created, len(self.chart),
                                     len(self.agenda), self.max_edges)
        self.agenda.push(edge, key)
        return True

    def seed(self) -> list[SpanEdge]:
        """One inactive edge per lexical entry matching the words at a position."""
        new = []
        covered = [False] * len(self.words)
        longest = self.grammar.max_lexical_length
        for i in range(len(self.words)):
            for k in range(1, longest + 1):
                if i + k > len(self.words):
                    break
                chunk = self.words[i:i + k]
                for rule in self.grammar.lexical_for(chunk):
                    rule = standardize_apart(rule, self._stamps)
                    leaf = Sign(rule.lhs, chunk)
                    e = SpanEdge(i, i + k, rule.lhs, (), (), chunk, (leaf,))
                    if self.add(e):
                        new.append(e)
                    for j in range(i, i + k):
                        covered[j] = True
        for i, ok in enumerate(covered):
            if not ok:
                raise UnknownWordError(self.words[i], i + 1)
        return new

    def rule_invocation(self, edge: SpanEdge) -> list[SpanEdge]:
        new = []
        for rule in self.grammar.rules_starting_with(edge.lhs.functor):
            rule = standardize_apart(rule, self._stamps)
            s = unify(rule.rhs[0], edge.lhs)
            if s is None:
                continue
            e = SpanEdge(edge.start, edge.end, rule.lhs, (edge.lhs,), rule.rhs[1:],
                         edge.phrase, edge.leaves).substitute(s)
            if self.add(e):
                new.append(e)
        return new

    def dot_movement(self, edge: SpanEdge) -> list[SpanEdge]:
        new = []
        if edge.is_active:
            pairs = ((edge, i) for i in self.chart.inactive_with(edge.next_category.functor))
        else:
            pairs = ((a, edge) for a in self.chart.active_expecting(edge.lhs.functor))
        for active, inactive in pairs:
            e = combine(active, inactive)
            if e is not None and self.add(e):
                new.append(e)
        return new

    def is_success(self, edge: SpanEdge) -> bool:
        return (not edge.is_active and edge.start == 0 and edge.end == len(self.words)
                and edge.lhs.functor == self.grammar.start)

    def run(self) -> ParseResult:
        if not self.edges_created:
            self.seed()
        while (edge := self.agenda.pop()) is not None:
            self.chart.insert(edge)
            if edge.is_active:
                self.dot_movement(edge)
            else:
                if self.is_success(edge):
                    self.analyses.append(edge)
                self.rule_invocation(edge)
                self.dot_movement(edge)
        return ParseResult(self.words, list(self.analyses))


def combine(active: SpanEdge, inactive: SpanEdge) -> SpanEdge | None:
    if active.end != inactive.start:
        return None
    s = unify(active.remaining[0], inactive.lhs)
    if s is None:
        return None
    return SpanEdge(
        active.start,
        inactive.end,
        active.lhs,
        active.found + (inactive.lhs,),
        active.remaining[1:],
        active.phrase + inactive.phrase,
        active.leaves + inactive.leaves,
    ).substitute(s)


def init_from_string(words, grammar: Grammar) -> ParseSession:
    session = ParseSession(words, grammar)
    session.seed()
    return session


def rule_invocation_parse(edge: SpanEdge, session: ParseSession) -> list[SpanEdge]:
    return session.rule_invocation(edge)


def dot_movement_parse(edge: SpanEdge, session: ParseSession) -> list[SpanEdge]:
    return session.dot_movement(edge)


def parse(words, grammar: Grammar, **kwargs) -> ParseResult:
    if isinstance(words, str):
        words = words.split()
    return ParseSession(words, grammar, **kwargs).run()


def extract_bag(result: ParseResult, which: int = 0) -> Bag:
    if not 0 <= which < len(result.analyses):
        raise IndexError(f"analysis {which} out of range (have {len(result.analyses)})")
    return Bag(result.analyses[which].leaves)
