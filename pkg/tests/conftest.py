import sys

import pytest

from lrl_tagger.corpus import Corpus, TaggedSentence


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion label")


_criteria = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.skipped):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if marker:
        status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _criteria.append((status, marker))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for status, name in _criteria:
        terminalreporter.write_line(f"{status}  {name}")


@pytest.fixture(autouse=True)
def _record_criterion(request):
    marker = request.node.get_closest_marker("criterion")
    if marker:
        request.node.user_properties.append(("criterion", marker.args[0]))


@pytest.fixture
def det_nn_corpus():
    """(the, DET) x3 and (dog, NN) x2 across three sentences."""
    return Corpus(
        (
            TaggedSentence(["the", "dog"], ["DET", "NN"]),
            TaggedSentence(["the", "dog"], ["DET", "NN"]),
            TaggedSentence(["the"], ["DET"]),
        )
    )


@pytest.fixture
def no_transformer_runtime(monkeypatch):
    """Make ``import torch`` / ``import transformers`` fail for the test's duration."""
    for name in list(sys.modules):
        if name == "torch" or name.startswith(("torch.", "transformers")):
            monkeypatch.delitem(sys.modules, name)
    monkeypatch.setitem(sys.modules, "torch", None)
    monkeypatch.setitem(sys.modules, "transformers", None)
    yield
