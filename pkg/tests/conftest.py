import pytest

from sbgen import data_path, read_bag, read_bilingual, read_grammar

_ACCEPTANCE: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def english():
    return read_grammar(data_path("english.sbg"))


@pytest.fixture(scope="session")
def english_ext():
    return read_grammar(data_path("english_ext.sbg"))


@pytest.fixture(scope="session")
def french():
    return read_grammar(data_path("french.sbg"))


@pytest.fixture(scope="session")
def french_ext():
    return read_grammar(data_path("french_ext.sbg"))


@pytest.fixture(scope="session")
def en_fr():
    return read_bilingual(data_path("en_fr.sbx"))


@pytest.fixture(scope="session")
def en_fr_ext():
    return read_bilingual(data_path("en_fr_ext.sbx"))


@pytest.fixture(scope="session")
def jam_bag():
    return read_bag(data_path("jean_aime_marie.sbb"))


@pytest.fixture(scope="session")
def toy():
    from helpers import toy_grammar
    return toy_grammar()
