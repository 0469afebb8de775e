import pytest

from helpers import corpus_bags
from sbgen.errors import OracleBudgetExceeded
from sbgen.generator import GenSession, generate
from sbgen.grammar import load_bag, load_grammar
from sbgen.oracle import (
    OracleConfig,
    count_hypotheses,
    oracle_generate_all,
    oracle_generate_first,
    oracle_run,
)


def test_worked_example(french, jam_bag):
    assert oracle_generate_all(jam_bag, french) == {("Jean", "aime", "Marie")}


def test_single_sign():
    g = load_grammar('start np. lex np(j) -> "Jean".')
    assert oracle_generate_all(load_bag('np(j) ["Jean"]\n'), g) == {("Jean",)}


@pytest.mark.parametrize("name,bag,expected", corpus_bags(), ids=lambda x: x if isinstance(x, str) else "")
def test_corpus_counts(toy, name, bag, expected):
    assert len(oracle_generate_all(bag, toy)) == expected


def test_corpus_is_large_enough():
    bags = corpus_bags()
    assert len(bags) >= 20
    assert {len(b) for _, b, _ in bags} >= {3, 4, 5, 6, 7}
    assert sum(1 for *_, n in bags if n == 0) >= 5


def test_first(toy):
    bag = dict((n, b) for n, b, _ in corpus_bags())["ambiguous-pp"]
    first = oracle_generate_first(bag, toy)
    assert first in oracle_generate_all(bag, toy)
    unsat = dict((n, b) for n, b, _ in corpus_bags())["reflexive-unsat"]
    assert oracle_generate_first(unsat, toy) is None


def test_depth_limit_reports_incomplete():
    g = load_grammar('start a. rule a(X) -> b(X). rule b(X) -> a(X). lex a(j) -> "Jean".')
    bag = load_bag('a(j) ["Jean"]\n')
    with pytest.raises(OracleBudgetExceeded) as ei:
        oracle_run(bag, g)
    assert ("Jean",) in ei.value.partial
    # first mode stops at the first sentence, before the limit matters
    assert oracle_generate_first(bag, g) == ("Jean",)


def test_depth_limit_below_bag_size(french, jam_bag):
    with pytest.raises(ValueError):
        oracle_run(jam_bag, french, OracleConfig(depth_limit=1))


def test_time_budget():
    from sbgen.bench import bench_bag, bench_grammar
    with pytest.raises(OracleBudgetExceeded) as ei:
        oracle_run(bench_bag(15), bench_grammar(), OracleConfig(time_budget=0.0))
    assert ei.value.expansions > 0


def test_count_hypotheses(french, jam_bag):
    s = GenSession(jam_bag, french)
    s.run()
    chart = count_hypotheses(s)
    assert chart.expansions == 11
    # top-down search is goal directed, so on three signs it visits fewer
    # nodes than the chart holds edges; the bench shows where that flips
    base = count_hypotheses(oracle_run(jam_bag, french))
    assert base.expansions == 8
    empty = count_hypotheses()
    assert (empty.expansions, empty.wall_time) == (0, 0.0)


def test_agrees_with_chart_on_corpus(toy):
    for name, bag, _ in corpus_bags():
        assert set(generate(bag, toy)) == oracle_generate_all(bag, toy), name
