"""Shared checks for the test modules (kept out of conftest so they import plainly)."""

from pathlib import Path

from sbgen import alpha_equal, load_bag, parse, read_grammar, unify

FIXTURES = Path(__file__).parent / "fixtures"


def toy_grammar():
    return read_grammar(FIXTURES / "toy.sbg")


def corpus_bags():
    from corpus import CORPUS
    return [(name, load_bag(text, name), n) for name, text, n in CORPUS]


def reparses(sentence, bag, grammar) -> bool:
    """Some parse of ``sentence`` has leaves that match the bag one-to-one.

    Matching means equal words and categories that unify jointly, so index
    sharing between bag signs has to be respected by the parse too.
    """
    result = parse(list(sentence), grammar)
    signs = list(bag)

    def match(leaves, free, s):
        if not leaves:
            return True
        leaf = leaves[0]
        for i in free:
            if signs[i].phon != leaf.phon:
                continue
            s2 = unify(leaf.category, signs[i].category, s)
            if s2 is not None and match(leaves[1:], free - {i}, s2):
                return True
        return False

    return any(len(e.leaves) == len(signs) and match(e.leaves, frozenset(range(len(signs))), {})
               for e in result.analyses)


def chart_duplicates(session) -> list:
    """Pairs of chart edges over the same nodes that are alpha-equal."""
    groups: dict = {}
    for e in session.chart:
        groups.setdefault((e.nodes, e.phrase), []).append(e)
    dups = []
    for edges in groups.values():
        for i, a in enumerate(edges):
            for b in edges[i + 1:]:
                if alpha_equal(a, b):
                    dups.append((a, b))
    return dups
