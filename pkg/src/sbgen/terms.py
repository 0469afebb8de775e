"""Categories with semantic-index lists, and unification over them.

A category is a functor plus an index list such as ``s(X|P)``: ``X`` is an
index variable and ``P`` an open tail that may later be bound to the rest
of the list.  Atoms are lowercase (``j``, ``m``, ``l``), variables are
uppercase.

Substitutions are plain dicts from :class:`Var` to either an index term
(item position) or an :class:`IndexList` (tail position).  Every
substitution produced here is idempotent: no bound variable occurs in any
binding value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Union


@dataclass(frozen=True, slots=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Var:
    """Index variable.

    ``stamp`` distinguishes renamed copies of the same surface variable; a
    freshly parsed ``X`` has stamp 0, standardized copies get 1, 2, ...
    """

    name: str
    stamp: int = 0

    def __str__(self) -> str:
        return self.name if self.stamp == 0 else f"{self.name}_{self.stamp}"


IndexTerm = Union[Atom, Var]


@dataclass(frozen=True, slots=True)
class IndexList:
    items: tuple[IndexTerm, ...] = ()
    tail: Var | None = None

    def __str__(self) -> str:
        body = ",".join(str(t) for t in self.items)
        if self.tail is not None:
            return f"{body}|{self.tail}"
        return body

    @property
    def is_open(self) -> bool:
        return self.tail is not None


@dataclass(frozen=True, slots=True)
class Category:
    functor: str
    indices: IndexList = IndexList()

    def __post_init__(self):
        if not self.functor:
            raise ValueError("category functor must be nonempty")

    def __str__(self) -> str:
        return f"{self.functor}({self.indices})"


Binding = Union[Atom, Var, IndexList]
Substitution = dict  # Var -> Binding


def cat(functor: str, *items: str, tail: str | None = None) -> Category:
    """Build a category from surface names: uppercase means variable.

    >>> str(cat("v", "X", "Y", "l"))
    'v(X,Y,l)'
    """
    return Category(
        functor,
        IndexList(tuple(_term(i) for i in items), Var(tail) if tail else None),
    )


def _term(name: str) -> IndexTerm:
    return Var(name) if name[:1].isupper() or name[:1] == "_" else Atom(name)


# --------------------------------------------------------------------------
# traversal

def variables(t) -> list[Var]:
    """Variables of ``t`` in first-occurrence order, without repeats."""
    seen: dict[Var, None] = {}
    for v in _iter_vars(t):
        seen.setdefault(v, None)
    return list(seen)


def _iter_vars(t) -> Iterator[Var]:
    if isinstance(t, Var):
        yield t
    elif isinstance(t, Atom):
        return
    elif isinstance(t, IndexList):
        for item in t.items:
            if isinstance(item, Var):
                yield item
        if t.tail is not None:
            yield t.tail
    elif isinstance(t, Category):
        yield from _iter_vars(t.indices)
    elif isinstance(t, (tuple, list)):
        for x in t:
            yield from _iter_vars(x)
    elif hasattr(t, "term_parts"):
        yield from _iter_vars(t.term_parts())
    elif isinstance(t, (str, int)) or t is None:
        return
    else:
        raise TypeError(f"not a term: {t!r}")


def apply(s: Substitution, t):
    """Replace every bound variable in ``t``; unbound ones are kept.

    Works on index terms, index lists, categories, tuples of those, and any
    object providing ``substitute(s)`` (edges, signs).
    """
    if not s:
        return t
    if isinstance(t, Var):
        b = s.get(t, t)
        if isinstance(b, IndexList):
            raise TypeError(f"list-valued variable {t} used as an index")
        return b
    if isinstance(t, Atom):
        return t
    if isinstance(t, IndexList):
        return _apply_list(s, t)
    if isinstance(t, Category):
        idx = _apply_list(s, t.indices)
        return t if idx is t.indices else Category(t.functor, idx)
    if isinstance(t, tuple):
        return tuple(apply(s, x) for x in t)
    if isinstance(t, list):
        return [apply(s, x) for x in t]
    if hasattr(t, "substitute"):
        return t.substitute(s)
    if isinstance(t, (str, int)) or t is None:
        return t
    raise TypeError(f"not a term: {t!r}")


def _apply_list(s: Substitution, lst: IndexList) -> IndexList:
    changed = False
    items = []
    for item in lst.items:
        new = apply(s, item)
        changed |= new is not item
        items.append(new)
    tail = lst.tail
    if tail is not None and tail in s:
        changed = True
        b = s[tail]
        if isinstance(b, Var):
            tail = b
        elif isinstance(b, IndexList):
            items.extend(b.items)
            tail = b.tail
        else:
            raise TypeError(f"tail variable {lst.tail} bound to index {b}")
    if not changed:
        return lst
    return IndexList(tuple(items), tail)


# --------------------------------------------------------------------------
# unification

class _Clash(Exception):
    pass


def unify(a, b, s: Substitution | None = None) -> Substitution | None:
    """Most general unifier of ``a`` and ``b`` extending ``s``, or None.

    ``a`` and ``b`` may be categories, index lists, index terms, or equal
    length tuples of categories.  The input substitution is not modified.
    """
    s = dict(s) if s else {}
    try:
        _unify(apply(s, a), apply(s, b), s)
    except _Clash:
        return None
    return s


def _unify(a, b, s: Substitution) -> None:
    # a and b are already fully instantiated under s on entry
    if isinstance(a, Category) and isinstance(b, Category):
        if a.functor != b.functor:
            raise _Clash
        _unify_lists(a.indices, b.indices, s)
    elif isinstance(a, IndexList) and isinstance(b, IndexList):
        _unify_lists(a, b, s)
    elif isinstance(a, (Atom, Var)) and isinstance(b, (Atom, Var)):
        _unify_items(a, b, s)
    elif isinstance(a, tuple) and isinstance(b, tuple):
        if len(a) != len(b):
            raise _Clash
        for x, y in zip(a, b):
            _unify(apply(s, x), apply(s, y), s)
    else:
        raise _Clash


def _unify_items(a: IndexTerm, b: IndexTerm, s: Substitution) -> None:
    if a == b:
        return
    if isinstance(a, Var):
        _bind(a, b, s)
    elif isinstance(b, Var):
        _bind(b, a, s)
    else:
        raise _Clash


def _unify_lists(a: IndexList, b: IndexList, s: Substitution) -> None:
    i = 0
    while i < len(a.items) and i < len(b.items):
        _unify_items(apply(s, a.items[i]), apply(s, b.items[i]), s)
        i += 1
    rest_a = IndexList(a.items[i:], a.tail)
    rest_b = IndexList(b.items[i:], b.tail)
    rest_a, rest_b = apply(s, rest_a), apply(s, rest_b)
    if rest_a.items and rest_b.items:
        # tails got bound while walking; keep going on the spliced lists
        _unify_lists(rest_a, rest_b, s)
        return
    if not rest_a.items and not rest_b.items:
        if rest_a.tail == rest_b.tail:
            return
        if rest_a.tail is None:
            _bind(rest_b.tail, IndexList(), s)
        elif rest_b.tail is None:
            _bind(rest_a.tail, IndexList(), s)
        else:
            _bind(rest_a.tail, IndexList((), rest_b.tail), s)
        return
    short, long_ = (rest_a, rest_b) if not rest_a.items else (rest_b, rest_a)
    if short.tail is None:
        raise _Clash
    _bind(short.tail, long_, s)


def _bind(v: Var, value: Binding, s: Substitution) -> None:
    if isinstance(value, IndexList) and not value.items:
        if value.tail == v:
            return
        if value.tail is not None:
            value = value.tail
    if v in set(_iter_vars(value)):
        raise _Clash  # occurs check
    one = {v: value}
    for k in list(s):
        s[k] = _apply_binding(one, s[k])
    s[v] = value


def _apply_binding(s: Substitution, b: Binding) -> Binding:
    # a Var stored as a binding may be a tail alias, so it can become a list
    if isinstance(b, Var):
        return s.get(b, b)
    return apply(s, b)


def compose(outer: Substitution, inner: Substitution) -> Substitution:
    """``outer`` after ``inner``: apply(compose(o, i), t) == apply(o, apply(i, t))."""
    out = {k: _apply_binding(outer, v) for k, v in inner.items()}
    for k, v in outer.items():
        out.setdefault(k, v)
    return {k: v for k, v in out.items() if not _is_identity(k, v)}


def _is_identity(k: Var, v: Binding) -> bool:
    return v == k or (isinstance(v, IndexList) and not v.items and v.tail == k)


# --------------------------------------------------------------------------
# renaming

def rename(t, mapping: dict[Var, Var]):
    return apply(mapping, t)


def standardize_apart(t, counter: Iterator[int], keep: Iterable[Var] = ()):
    """Copy of ``t`` with every variable (except ``keep``) renamed fresh.

    ``counter`` yields stamps; each call consumes one stamp, so variables of
    two consecutive copies never collide.
    """
    keep = set(keep)
    stamp = next(counter)
    mapping = {v: Var(v.name, stamp) for v in variables(t) if v not in keep}
    return apply(mapping, t) if mapping else t


def fresh_counter(start: int = 1) -> Iterator[int]:
    return itertools.count(start)


def canonical(t):
    """Rename variables to ``_0, _1, ...`` in order of first occurrence.

    Two terms are alpha-equal iff their canonical forms are equal, so this
    doubles as a hashable redundancy key.
    """
    mapping = {v: Var("_", n) for n, v in enumerate(variables(t))}
    return apply(mapping, t)


def alpha_equal(a, b) -> bool:
    """True iff ``a`` and ``b`` differ only by a bijective variable renaming."""
    return type(a) is type(b) and canonical(a) == canonical(b)


def is_ground(t) -> bool:
    return not variables(t)
