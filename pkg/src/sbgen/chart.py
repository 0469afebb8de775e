"""Node sets, edges, the indexed chart and the agenda.

A node set is a plain ``int``: bag position i (1-based) is bit i-1, so
``{2, 4, 5}`` is 26 and ``{1, 2, 3}`` is 7.  Union is ``|`` and two sets
are disjoint iff ``a & b == 0``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .terms import Category, apply, canonical

NODESET_WIDTH = 64
DEFAULT_MAX_EDGES = 1_000_000


def default_max_edges() -> int:
    """Edge budget, overridable through ``SBGEN_MAX_EDGES``."""
    value = os.environ.get("SBGEN_MAX_EDGES")
    return int(value) if value else DEFAULT_MAX_EDGES


# --------------------------------------------------------------------------
# node sets

def ns_encode(positions: Iterable[int], n: int = NODESET_WIDTH) -> int:
    bits = 0
    for p in positions:
        if not 1 <= p <= n:
            raise ValueError(f"position {p} outside 1..{n}")
        bits |= 1 << (p - 1)
    return bits


def ns_decode(bits: int) -> list[int]:
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def ns_disjoint(a: int, b: int) -> bool:
    return a & b == 0


def ns_union(a: int, b: int) -> int:
    return a | b


def ns_full(n: int) -> int:
    if not 1 <= n <= NODESET_WIDTH:
        raise ValueError(f"bag size {n} outside 1..{NODESET_WIDTH}")
    return (1 << n) - 1


def ns_size(bits: int) -> int:
    return bin(bits).count("1")


# --------------------------------------------------------------------------
# edges

@dataclass(frozen=True)
class Edge:
    """Hyperedge ``<nodes, lhs[phrase] -> found . remaining>``.

    The edge is inactive when ``remaining`` is empty.  A bag sign seeds an
    inactive edge with nothing found (``C[w] -> .``).

    ``env`` holds this edge's values for the variables that occur in the bag
    itself (usually none).  Those variables are shared between signs, so
    two edges may only be combined if their environments unify.
    """

    nodes: int
    lhs: Category
    phrase: tuple[str, ...]
    found: tuple[Category, ...] = ()
    remaining: tuple[Category, ...] = ()
    env: tuple = ()

    @property
    def is_active(self) -> bool:
        return bool(self.remaining)

    @property
    def next_category(self) -> Category:
        return self.remaining[0]

    def index_key(self) -> str:
        return self.remaining[0].functor if self.remaining else self.lhs.functor

    def term_parts(self):
        return (self.lhs,) + self.found + self.remaining + self.env

    def substitute(self, s) -> "Edge":
        return Edge(self.nodes, apply(s, self.lhs), self.phrase,
                    apply(s, self.found), apply(s, self.remaining), apply(s, self.env))

    def redundancy_key(self):
        return (self.nodes, len(self.found), self.phrase, canonical(self.term_parts()))

    def __str__(self) -> str:
        nodes = "{" + ",".join(map(str, ns_decode(self.nodes))) + "}"
        found = " ".join(map(str, self.found))
        rest = " ".join(map(str, self.remaining))
        body = " ".join(x for x in (found, ".", rest) if x)
        return f"<{nodes}, {self.lhs}[{' '.join(self.phrase)}] -> {body}>"


# --------------------------------------------------------------------------
# chart and agenda

class Chart:
    """Edges indexed by functor.

    Inactive edges are filed under their left-hand functor and active edges
    under the functor right after the dot, so dot movement only scans edges
    that could possibly unify.  Works for any edge type with ``lhs``,
    ``remaining``, ``is_active`` and ``redundancy_key``.
    """

    def __init__(self):
        self.inactive: dict[str, list] = {}
        self.active: dict[str, list] = {}
        self._keys: set = set()
        self._count = 0

    def insert(self, edge, key=None) -> None:
        table = self.active if edge.is_active else self.inactive
        table.setdefault(edge.index_key(), []).append(edge)
        self._keys.add(key if key is not None else edge.redundancy_key())
        self._count += 1

    def inactive_with(self, functor: str) -> list:
        return self.inactive.get(functor, [])

    def active_expecting(self, functor: str) -> list:
        return self.active.get(functor, [])

    def lookup(self, functor: str) -> list:
        return self.inactive_with(functor) + self.active_expecting(functor)

    def has_key(self, key) -> bool:
        return key in self._keys

    def __len__(self) -> int:
        return self._count

    def __iter__(self) -> Iterator:
        for table in (self.inactive, self.active):
            for edges in table.values():
                yield from edges


class Agenda:
    """Pending edges; ``fifo`` gives breadth-first, ``lifo`` depth-first."""

    def __init__(self, discipline: str = "fifo"):
        if discipline not in ("fifo", "lifo"):
            raise ValueError(f"unknown agenda discipline {discipline!r}")
        self.discipline = discipline
        self._items: deque = deque()
        self._keys: dict = {}

    def push(self, edge, key=None) -> None:
        self._items.append((edge, key))
        if key is not None:
            self._keys[key] = self._keys.get(key, 0) + 1

    def pop(self):
        if not self._items:
            return None
        if self.discipline == "fifo":
            edge, key = self._items.popleft()
        else:
            edge, key = self._items.pop()
        if key is not None:
            left = self._keys[key] - 1
            if left:
                self._keys[key] = left
            else:
                del self._keys[key]
        return edge

    def has_key(self, key) -> bool:
        return key in self._keys

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __iter__(self):
        return (e for e, _ in self._items)


def is_redundant(chart: Chart, agenda: Agenda, edge) -> bool:
    """True iff an alpha-equal edge over the same nodes is already stored."""
    key = edge.redundancy_key()
    return chart.has_key(key) or agenda.has_key(key)


def chart_insert(chart: Chart, edge) -> None:
    chart.insert(edge)


def agenda_push(agenda: Agenda, edge) -> None:
    agenda.push(edge, edge.redundancy_key())


def agenda_pop(agenda: Agenda):
    return agenda.pop()
