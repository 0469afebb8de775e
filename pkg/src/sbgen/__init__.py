"""
sbgen
=====

Shake-and-Bake machine translation built around an active chart generator.

A source sentence is parsed with a unification grammar, the leaves of the
parse (with their instantiated semantic indices) form a bag of signs, a
bilingual lexicon maps that bag to a bag of target-language signs, and the
chart generator finds every target sentence that uses each sign exactly
once.  An exhaustive top-down generator is included as an independent
oracle and as the baseline for timing comparisons.
"""

from importlib.resources import files

from .chart import Agenda, Chart, Edge, is_redundant, ns_disjoint, ns_encode, ns_full, ns_union
from .errors import (
    BagError,
    EdgeBudgetExceeded,
    GrammarError,
    GrammarSyntaxError,
    OracleBudgetExceeded,
    SbgenError,
    TransferError,
    UnknownWordError,
)
from .generator import GenConfig, GenSession, generate, init_from_bag
from .grammar import (
    Bag,
    BilingualEntry,
    Grammar,
    Rule,
    Sign,
    load_bag,
    load_bilingual,
    load_grammar,
    parse_category,
    read_bag,
    read_bilingual,
    read_grammar,
    render_bag,
    render_grammar,
    render_sign,
)
from .oracle import OracleConfig, count_hypotheses, oracle_generate_all, oracle_run
from .parser import ParseResult, extract_bag, parse
from .terms import Atom, Category, IndexList, Var, alpha_equal, apply, standardize_apart, unify
from .transfer import TransferResult, transfer

__version__ = "0.1.0"


def data_path(name: str):
    """Path of a bundled fixture file, e.g. ``data_path("french.sbg")``."""
    return files(__name__).joinpath("data", name)
