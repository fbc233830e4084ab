import shutil
from pathlib import Path

import pytest

# weights shipped as the offline demo scorer; tests reuse them so the
# example file itself stays exercised
EXAMPLE_LEXICON = Path(__file__).parent.parent / "examples" / "lexicon.json"

# acceptance-criterion outcomes, recorded by tests/test_acceptance.py
CRITERION_RESULTS: list[tuple[str, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in CRITERION_RESULTS:
        terminalreporter.write_line(f"[{status}] {name}")


@pytest.fixture(scope="session")
def stub_scorer():
    from sentiment_effects import LexiconScorer

    return LexiconScorer.from_file(EXAMPLE_LEXICON)


@pytest.fixture(scope="session")
def core_cli():
    """Path of the core decomposition CLI; its files are our only coupling."""
    exe = shutil.which("causaldecomp")
    if exe is None:
        pytest.skip("core CLI 'causaldecomp' is not on PATH")
    return exe


@pytest.fixture(scope="session")
def model_probe():
    """(scorer, None) when the sentiment model loads, else (None, reason)."""
    from sentiment_effects import ModelFetchError, TransformerScorer

    try:
        return TransformerScorer(), None
    except ModelFetchError as exc:
        return None, str(exc)
