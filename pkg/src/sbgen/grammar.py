"""Grammar, bag and bilingual-lexicon files.

Three line-oriented formats share one category syntax, ``f(t1,t2|Tail)``,
where lowercase names are atoms and uppercase names are variables.  ``#``
starts a comment.

Grammar (``.sbg``)::

    start s.
    rule s(X|P) -> np(X) vp(X|P).
    lex np(j) -> "John".

Bag (``.sbb``), one sign per line, numbered from 1 in file order::

    np(m) ["Marie"]
    pp(m) ["à", "Jean"]

Bilingual lexicon (``.sbx``)::

    xfer { v(X,Y,E)["likes"] } => { v(Y,X,E)["plaît"], p(Y,X)["à"] }.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import IO, Iterator, Union

from .chart import NODESET_WIDTH
from .errors import BagError, GrammarError, GrammarSyntaxError
from .terms import Atom, Category, IndexList, Var, apply, variables

Text = Union[str, IO[str]]


# --------------------------------------------------------------------------
# domain types

@dataclass(frozen=True)
class Rule:
    """``lhs -> rhs...`` (phrasal) or ``lhs -> "w"...`` (lexical)."""

    lhs: Category
    rhs: tuple[Category, ...] = ()
    words: tuple[str, ...] = ()

    def __post_init__(self):
        if bool(self.rhs) == bool(self.words):
            raise GrammarError(
                f"rule for {self.lhs} needs either categories or words on the right"
            )

    @property
    def is_lexical(self) -> bool:
        return bool(self.words)

    def term_parts(self):
        return (self.lhs,) + self.rhs

    def substitute(self, s):
        return Rule(apply(s, self.lhs), apply(s, self.rhs), self.words)

    def __str__(self) -> str:
        return render_rule(self)


@dataclass(frozen=True)
class Grammar:
    rules: tuple[Rule, ...]
    start: str

    def __post_init__(self):
        if not any(r.lhs.functor == self.start for r in self.rules):
            raise GrammarError(f"start symbol {self.start!r} has no rule")

    @cached_property
    def phrasal(self) -> tuple[Rule, ...]:
        return tuple(r for r in self.rules if not r.is_lexical)

    @cached_property
    def lexical(self) -> tuple[Rule, ...]:
        return tuple(r for r in self.rules if r.is_lexical)

    @cached_property
    def _by_first(self) -> dict[str, tuple[Rule, ...]]:
        out: dict[str, list[Rule]] = {}
        for r in self.phrasal:
            out.setdefault(r.rhs[0].functor, []).append(r)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def _by_words(self) -> dict[tuple[str, ...], tuple[Rule, ...]]:
        out: dict[tuple[str, ...], list[Rule]] = {}
        for r in self.lexical:
            out.setdefault(r.words, []).append(r)
        return {k: tuple(v) for k, v in out.items()}

    def rules_starting_with(self, functor: str) -> tuple[Rule, ...]:
        """Phrasal rules whose first right-hand category has ``functor``."""
        return self._by_first.get(functor, ())

    def lexical_for(self, words: tuple[str, ...]) -> tuple[Rule, ...]:
        return self._by_words.get(tuple(words), ())

    @cached_property
    def max_lexical_length(self) -> int:
        return max((len(r.words) for r in self.lexical), default=0)


@dataclass(frozen=True)
class Sign:
    category: Category
    phon: tuple[str, ...]

    def __post_init__(self):
        if not self.phon:
            raise BagError(f"sign {self.category} has no words")
        for w in self.phon:
            if not w or any(c.isspace() for c in w):
                raise BagError(f"bad word {w!r} in sign {self.category}")

    def term_parts(self):
        return (self.category,)

    def substitute(self, s):
        return Sign(apply(s, self.category), self.phon)

    def __str__(self) -> str:
        return render_sign(self)


@dataclass(frozen=True)
class Bag:
    """Numbered signs; position i (1-based) owns bit i-1 of a node set."""

    signs: tuple[Sign, ...]

    def __post_init__(self):
        if not self.signs:
            raise BagError("empty bag")
        if len(self.signs) > NODESET_WIDTH:
            raise BagError(
                f"bag of {len(self.signs)} signs exceeds node-set width {NODESET_WIDTH}"
            )

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self) -> Iterator[Sign]:
        return iter(self.signs)

    def __getitem__(self, i):
        return self.signs[i]

    def term_parts(self):
        return self.signs

    def substitute(self, s):
        return Bag(tuple(x.substitute(s) for x in self.signs))

    def __str__(self) -> str:
        return render_bag(self)


@dataclass(frozen=True)
class BilingualEntry:
    source: tuple[Sign, ...]
    target: tuple[Sign, ...]

    def __post_init__(self):
        if not self.source or not self.target:
            raise GrammarError("bilingual entry needs signs on both sides")
        bound = set(variables(self.source))
        for v in variables(self.target):
            if v not in bound:
                raise GrammarError(f"target variable {v} is unbound in source")

    def term_parts(self):
        return self.source + self.target

    def substitute(self, s):
        return BilingualEntry(apply(s, self.source), apply(s, self.target))

    def __str__(self) -> str:
        return render_entry(self)


# --------------------------------------------------------------------------
# tokenizer

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<arrow>->)
  | (?P<darrow>=>)
  | (?P<punct>[(),|.{}\[\]])
  | (?P<name>[^\W\d]\w*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str, source: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise GrammarSyntaxError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1, source
            )
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Reader:
    def __init__(self, text: Text, source: str):
        if not isinstance(text, str):
            text = text.read()
        self.source = source
        self.toks = _tokenize(text, source)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, tok: _Tok | None = None) -> GrammarSyntaxError:
        tok = tok or self.tok
        found = tok.text or "end of input"
        return GrammarSyntaxError(f"{message} (found {found!r})", tok.line, tok.col, self.source)

    def take(self) -> _Tok:
        tok = self.tok
        self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.kind in ("punct", "arrow", "darrow", "name") and self.tok.text == text

    def expect(self, text: str) -> _Tok:
        if not self.at(text):
            raise self.error(f"expected {text!r}")
        return self.take()

    def name(self, what: str = "name") -> _Tok:
        if self.tok.kind != "name":
            raise self.error(f"expected {what}")
        return self.take()

    def string(self) -> str:
        if self.tok.kind != "string":
            raise self.error("expected quoted word")
        tok = self.take()
        word = json.loads(tok.text)
        if not word or any(c.isspace() for c in word):
            raise self.error("words must be nonempty and contain no whitespace", tok)
        return word

    # categories --------------------------------------------------------

    def category(self) -> Category:
        tok = self.name("category")
        if _is_var_name(tok.text):
            raise self.error("category functor must start lowercase", tok)
        if not self.at("("):
            return Category(tok.text)
        self.take()
        items = []
        tail = None
        if not self.at(")") and not self.at("|"):
            items.append(self.index())
            while self.at(","):
                self.take()
                items.append(self.index())
        if self.at("|"):
            self.take()
            t = self.name("tail variable")
            if not _is_var_name(t.text):
                raise self.error("list tail must be a variable", t)
            tail = Var(t.text)
        self.expect(")")
        return Category(tok.text, IndexList(tuple(items), tail))

    def index(self):
        tok = self.name("index")
        return Var(tok.text) if _is_var_name(tok.text) else Atom(tok.text)

    def sign(self) -> Sign:
        c = self.category()
        self.expect("[")
        words = [self.string()]
        while not self.at("]"):
            if self.at(","):
                self.take()
            words.append(self.string())
        self.expect("]")
        try:
            return Sign(c, tuple(words))
        except BagError as e:  # pragma: no cover - string() already validates
            raise self.error(str(e)) from None


def _is_var_name(name: str) -> bool:
    return name[0].isupper() or name[0] == "_"


def _check_var_kinds(t, where: str) -> None:
    """A variable may sit in index positions or tail positions, not both."""
    items, tails = set(), set()
    for c in _categories(t):
        items.update(x for x in c.indices.items if isinstance(x, Var))
        if c.indices.tail is not None:
            tails.add(c.indices.tail)
    both = items & tails
    if both:
        v = sorted(str(x) for x in both)[0]
        raise GrammarError(f"variable {v} used both as index and as list tail in {where}")


def _categories(t):
    if isinstance(t, Category):
        yield t
    elif isinstance(t, (tuple, list)):
        for x in t:
            yield from _categories(x)
    elif hasattr(t, "term_parts"):
        yield from _categories(t.term_parts())


# --------------------------------------------------------------------------
# loaders

def load_grammar(text: Text, source: str = "<grammar>") -> Grammar:
    r = _Reader(text, source)
    rules: list[Rule] = []
    start: str | None = None
    while r.tok.kind != "eof":
        kw = r.name("'start', 'rule' or 'lex'")
        if kw.text == "start":
            if start is not None:
                raise r.error("duplicate start declaration", kw)
            start = r.name("start symbol").text
            r.expect(".")
        elif kw.text == "rule":
            lhs = r.category()
            r.expect("->")
            rhs = []
            while not r.at("."):
                if r.tok.kind != "name":
                    raise r.error("expected right-hand category")
                rhs.append(r.category())
            if not rhs:
                raise r.error("empty right-hand side (epsilon rules are not allowed)")
            r.expect(".")
            rule = Rule(lhs, tuple(rhs))
            _check_var_kinds(rule, f"rule at line {kw.line}")
            rules.append(rule)
        elif kw.text == "lex":
            lhs = r.category()
            r.expect("->")
            words = []
            while r.tok.kind == "string":
                words.append(r.string())
            if not words:
                raise r.error("lexical entry needs at least one quoted word")
            r.expect(".")
            rule = Rule(lhs, words=tuple(words))
            _check_var_kinds(rule, f"lexical entry at line {kw.line}")
            rules.append(rule)
        else:
            raise r.error("expected 'start', 'rule' or 'lex'", kw)
    if start is None:
        raise GrammarError(f"{source}: no start declaration")
    return Grammar(tuple(rules), start)


def load_bag(text: Text, source: str = "<bag>") -> Bag:
    r = _Reader(text, source)
    signs = []
    last_line = 0
    while r.tok.kind != "eof":
        if r.tok.line == last_line:
            raise r.error("one sign per line")
        sign = r.sign()
        if r.at("."):
            r.take()
        last_line = r.toks[r.i - 1].line
        _check_var_kinds(sign, f"sign {len(signs) + 1}")
        signs.append(sign)
    if not signs:
        raise BagError(f"{source}: empty bag")
    return Bag(tuple(signs))


def load_bilingual(text: Text, source: str = "<lexicon>") -> list[BilingualEntry]:
    r = _Reader(text, source)
    entries = []
    while r.tok.kind != "eof":
        kw = r.name("'xfer'")
        if kw.text != "xfer":
            raise r.error("expected 'xfer'", kw)
        src = _sign_set(r)
        r.expect("=>")
        tgt = _sign_set(r)
        r.expect(".")
        try:
            entry = BilingualEntry(tuple(src), tuple(tgt))
        except GrammarError as e:
            raise GrammarError(f"{source}:{kw.line}: {e}") from None
        _check_var_kinds(entry, f"entry at line {kw.line}")
        entries.append(entry)
    return entries


def _sign_set(r: _Reader) -> list[Sign]:
    r.expect("{")
    out = [r.sign()]
    while r.at(","):
        r.take()
        out.append(r.sign())
    r.expect("}")
    return out


def parse_category(text: str) -> Category:
    r = _Reader(text, "<category>")
    c = r.category()
    if r.tok.kind != "eof":
        raise r.error("trailing input after category")
    return c


def parse_sign(text: str) -> Sign:
    r = _Reader(text, "<sign>")
    s = r.sign()
    if r.tok.kind != "eof":
        raise r.error("trailing input after sign")
    return s


def read_grammar(path) -> Grammar:
    path = Path(path)
    return load_grammar(path.read_text(encoding="utf-8"), str(path))


def read_bag(path) -> Bag:
    path = Path(path)
    return load_bag(path.read_text(encoding="utf-8"), str(path))


def read_bilingual(path) -> list[BilingualEntry]:
    path = Path(path)
    return load_bilingual(path.read_text(encoding="utf-8"), str(path))


# --------------------------------------------------------------------------
# rendering

def render_category(c: Category) -> str:
    return f"{c.functor}({c.indices})"


def _quote(word: str) -> str:
    return json.dumps(word, ensure_ascii=False)


def render_sign(s: Sign) -> str:
    return f"{render_category(s.category)} [{', '.join(_quote(w) for w in s.phon)}]"


def render_rule(r: Rule) -> str:
    if r.is_lexical:
        return f"lex {render_category(r.lhs)} -> {' '.join(_quote(w) for w in r.words)}."
    return f"rule {render_category(r.lhs)} -> {' '.join(render_category(c) for c in r.rhs)}."


def render_grammar(g: Grammar) -> str:
    lines = [f"start {g.start}."]
    lines.extend(render_rule(r) for r in g.rules)
    return "\n".join(lines) + "\n"


def render_bag(b: Bag) -> str:
    return "".join(render_sign(s) + "\n" for s in b)


def render_entry(e: BilingualEntry) -> str:
    src = ", ".join(render_sign(s) for s in e.source)
    tgt = ", ".join(render_sign(s) for s in e.target)
    return f"xfer {{ {src} }} => {{ {tgt} }}."


def render_bilingual(entries) -> str:
    return "".join(render_entry(e) + "\n" for e in entries)
