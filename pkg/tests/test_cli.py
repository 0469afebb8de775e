import io
import subprocess
import sys

import pytest

from sbgen import data_path
from sbgen.cli import main


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out)
    return code, out.getvalue()


D = data_path


def test_parse(capsys):
    code, out = run("parse", D("english.sbg"), "John", "loves", "Mary")
    assert code == 0
    assert 'v(j,m,l) ["loves"]' in out


def test_parse_no_result():
    assert run("parse", D("english.sbg"), "loves John Mary")[0] == 1


def test_parse_missing_grammar(tmp_path):
    assert run("parse", tmp_path / "nope.sbg", "John")[0] == 2


def test_parse_syntax_error(tmp_path, capsys):
    bad = tmp_path / "bad.sbg"
    bad.write_text("start s.\nrule s( -> x.\n")
    assert run("parse", bad, "John")[0] == 2
    assert "bad.sbg:2" in capsys.readouterr().err


def test_generate():
    code, out = run("generate", D("french.sbg"), D("jean_aime_marie.sbb"), "--all")
    assert (code, out) == (0, "Jean aime Marie\n")


@pytest.mark.parametrize("flags", [["--first"], ["--agenda", "lifo"], ["--no-redundancy-check"]])
def test_generate_flags(flags):
    code, out = run("generate", D("french.sbg"), D("jean_aime_marie.sbb"), *flags)
    assert (code, out) == (0, "Jean aime Marie\n")


def test_generate_unsatisfiable(tmp_path):
    bag = tmp_path / "b.sbb"
    bag.write_text('np(j) ["Jean"]\nnp(m) ["Marie"]\nv(j,j,l) ["aime"]\n')
    assert run("generate", D("french.sbg"), bag) == (1, "")


def test_generate_budget(capsys):
    code, _ = run("generate", D("french.sbg"), D("jean_aime_marie.sbb"), "--max-edges", "1")
    assert code == 3
    assert "edges" in capsys.readouterr().err


def test_generate_budget_from_env(monkeypatch):
    monkeypatch.setenv("SBGEN_MAX_EDGES", "2")
    assert run("generate", D("french.sbg"), D("jean_aime_marie.sbb"))[0] == 3


def test_translate():
    code, out = run("translate", D("english.sbg"), D("french.sbg"), D("en_fr.sbx"),
                    "John loves Mary")
    assert (code, out) == (0, "Jean aime Marie\n")


def test_translate_reversal():
    code, out = run("translate", D("english_ext.sbg"), D("french_ext.sbg"), D("en_fr_ext.sbx"),
                    "John", "likes", "Mary")
    assert (code, out) == (0, "Marie plaît à Jean\n")


def test_translate_unknown_word(capsys):
    code, _ = run("translate", D("english.sbg"), D("french.sbg"), D("en_fr.sbx"), "John sleeps")
    assert code == 2
    assert "parse:" in capsys.readouterr().err


def test_translate_transfer_error(capsys):
    # english_ext parses "likes" but en_fr has no entry for it
    code, _ = run("translate", D("english_ext.sbg"), D("french.sbg"), D("en_fr.sbx"),
                  "John likes Mary")
    assert code == 2
    assert "transfer:" in capsys.readouterr().err


def test_bench(tmp_path):
    out = tmp_path / "b.csv"
    assert run("bench", "--min", "3", "--max", "4", "--csv", out)[0] == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "size,mode,seconds,expansions,sentences"
    assert len(lines) == 1 + 2 * 4


def test_bench_stdout():
    code, out = run("bench", "--min", "3", "--max", "3", "--reps", "2")
    assert code == 0 and len(out.splitlines()) == 1 + 8


def test_bad_arguments():
    assert run("generate")[0] == 2
    assert run("frobnicate")[0] == 2


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "sbgen", "generate", str(D("french.sbg")),
                        str(D("jean_aime_marie.sbb"))], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "Jean aime Marie\n"
