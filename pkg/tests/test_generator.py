from collections import Counter

import pytest

from helpers import chart_duplicates, corpus_bags
from sbgen.chart import Edge
from sbgen.errors import EdgeBudgetExceeded
from sbgen.generator import (
    GenConfig,
    GenSession,
    dot_movement_gen,
    generate,
    init_from_bag,
    is_success,
    rule_invocation_gen,
)
from sbgen.grammar import load_bag, load_grammar
from sbgen.oracle import oracle_generate_all
from sbgen.terms import alpha_equal, cat

NP_M, NP_J, V = cat("np", "m"), cat("np", "j"), cat("v", "j", "m", "l")
VP = cat("vp", "j", "m", "l")

# the eleven edges of the worked example, in the order they are introduced
WORKED = {
    1: Edge(1, NP_M, ("Marie",)),
    2: Edge(2, NP_J, ("Jean",)),
    3: Edge(4, V, ("aime",)),
    4: Edge(1, NP_M, ("Marie",), (NP_M,)),
    5: Edge(2, NP_J, ("Jean",), (NP_J,)),
    6: Edge(4, V, ("aime",), (V,)),
    7: Edge(1, cat("s", "m", tail="P"), ("Marie",), (NP_M,), (cat("vp", "m", tail="P"),)),
    8: Edge(2, cat("s", "j", tail="P"), ("Jean",), (NP_J,), (cat("vp", "j", tail="P"),)),
    9: Edge(4, VP, ("aime",), (V,), (NP_M,)),
    10: Edge(5, VP, ("aime", "Marie"), (V, NP_M)),
    11: Edge(7, cat("s", "j", "m", "l"), ("Jean", "aime", "Marie"), (NP_J, VP)),
}


def contains(edges, target):
    return any(alpha_equal(e, target) for e in edges)


@pytest.fixture
def session(french, jam_bag):
    return init_from_bag(jam_bag, french)


def test_init_edges(session):
    seeds = list(session.agenda)
    assert len(seeds) == 3
    for n in (1, 2, 3):
        assert contains(seeds, WORKED[n])
    assert session.all_bits == 7


def test_single_sign_init(french):
    s = init_from_bag(load_bag('np(j) ["Jean"]\n'), french)
    (e,) = s.agenda
    assert e.nodes == 1 and not e.is_active


def test_rule_invocation_on_marie(session):
    new = rule_invocation_gen(WORKED[1], session)
    assert contains(new, WORKED[7])
    assert contains(new, WORKED[4])


def test_rule_invocation_on_verb(session):
    assert contains(rule_invocation_gen(WORKED[6], session), WORKED[9])


def test_rule_invocation_without_matching_rule(session):
    assert rule_invocation_gen(Edge(1, cat("pp", "m"), ("à",), (cat("pp", "m"),)), session) == []


def test_dot_movement_9_with_4(session):
    assert alpha_equal(session.combine(WORKED[9], WORKED[4]), WORKED[10])


def test_blocked_9_with_5(session):
    assert session.combine(WORKED[9], WORKED[5]) is None


def test_blocked_7_with_10(session):
    assert session.combine(WORKED[7], WORKED[10]) is None


def test_dot_movement_8_with_10(session):
    e = session.combine(WORKED[8], WORKED[10])
    assert e.nodes == 7 and e.phrase == ("Jean", "aime", "Marie")
    assert alpha_equal(e, WORKED[11])


def test_dot_movement_uses_chart(session):
    session.chart.insert(WORKED[4])
    new = dot_movement_gen(WORKED[9], session)
    assert len(new) == 1 and alpha_equal(new[0], WORKED[10])


def test_overlapping_nodes_do_not_combine(session):
    assert session.combine(WORKED[9], Edge(4, NP_M, ("Marie",), (NP_M,))) is None


def test_success(session):
    assert is_success(WORKED[11], session)
    assert not is_success(WORKED[10], session)
    assert not is_success(Edge(3, cat("s", "j", "m", "l"), ("Jean", "aime"), (NP_J, VP)), session)


def test_worked_example_chart_is_exactly_the_eleven_edges(french, jam_bag):
    s = GenSession(jam_bag, french)
    assert s.run() == [("Jean", "aime", "Marie")]
    chart = list(s.chart)
    assert len(chart) == 11
    for n, e in WORKED.items():
        assert contains(chart, e), n
    for e in chart:
        assert any(alpha_equal(e, w) for w in WORKED.values()), e


def test_generate_worked_example(french, jam_bag):
    out = generate(jam_bag, french, "all")
    assert out == [("Jean", "aime", "Marie")]
    assert ("Marie", "aime", "Jean") not in out


def test_single_sign_start():
    g = load_grammar('start np. lex np(j) -> "Jean".')
    assert generate(load_bag('np(j) ["Jean"]\n'), g) == [("Jean",)]


def test_no_applicable_rule(french):
    assert generate(load_bag('np(j) ["Jean"]\nnp(m) ["Marie"]\n'), french) == []


def test_ambiguous_modifier(toy):
    bag = dict((n, b) for n, b, _ in corpus_bags())["ambiguous-pp"]
    assert len(bag) == 5
    out = generate(bag, toy)
    assert set(out) == {("Jean", "voit", "Marie", "avec", "Paul"),
                        ("Jean", "avec", "Paul", "voit", "Marie")}
    assert set(out) == oracle_generate_all(bag, toy)


def test_shared_bag_variable_binds_once(toy):
    bag = dict((n, b) for n, b, _ in corpus_bags())["shared-host-variable"]
    out = set(generate(bag, toy))
    assert len(out) == 4
    # both prepositions share their host index, so they cannot split
    assert ("Jean", "avec", "Paul", "voit", "Marie", "de", "Luc") not in out
    assert ("Jean", "de", "Luc", "voit", "Marie", "avec", "Paul") not in out


def test_first_mode(toy):
    bag = dict((n, b) for n, b, _ in corpus_bags())["ambiguous-pp"]
    out = generate(bag, toy, "first")
    assert len(out) == 1 and out[0] in set(generate(bag, toy))


def test_mode_override(french, jam_bag):
    cfg = GenConfig(mode="first")
    assert generate(jam_bag, french, config=cfg) == [("Jean", "aime", "Marie")]
    with pytest.raises(ValueError):
        GenConfig(mode="some")


@pytest.mark.parametrize("discipline", ["fifo", "lifo"])
@pytest.mark.parametrize("redundancy", [True, False])
def test_search_settings_do_not_change_results(toy, discipline, redundancy):
    cfg = GenConfig(discipline=discipline, redundancy=redundancy)
    for name, bag, n in corpus_bags():
        assert len(generate(bag, toy, config=cfg)) == n, name


def test_budget(french, jam_bag):
    with pytest.raises(EdgeBudgetExceeded) as ei:
        GenSession(jam_bag, french, GenConfig(max_edges=1)).run()
    assert ei.value.limit == 1 and ei.value.created == 2


def test_derivation_counts(toy):
    bag = dict((n, b) for n, b, _ in corpus_bags())["nested-pp"]
    s = GenSession(bag, toy)
    assert s.run() == [("Jean", "de", "Marie", "de", "Paul", "dort")]
    assert s.derivations[s.solutions[0]] >= 1
    assert len(s.success_edges) == sum(s.derivations.values())


def test_chart_invariants(toy):
    for name, bag, _ in corpus_bags():
        s = GenSession(bag, toy)
        s.run()
        for e in s.chart:
            covered = [bag[i] for i in range(len(bag)) if e.nodes >> i & 1]
            # the phrase is exactly the words of the covered signs
            assert Counter(e.phrase) == Counter(w for sg in covered for w in sg.phon), (name, e)
            arity = len(e.found) + len(e.remaining)
            assert arity <= 1 or any(len(r.rhs) == arity and r.lhs.functor == e.lhs.functor
                                     for r in toy.phrasal), (name, e)
        assert not chart_duplicates(s), name
        assert s.stats.edges_created == len(s.chart)
