import pytest

from subint.corpus import SCRIPTS, corpus, entry, find

NAMES = [e.name for e in corpus()]


def test_corpus_contents():
    assert {"cusp", "node", "conjugate-gluing", "mixed", "mixed2", "chain", "dual-numbers",
            "split-quadratic", "full-ring"} <= set(NAMES)
    assert len(NAMES) == len(set(NAMES))
    assert {e.stem for e in corpus()} == set(SCRIPTS)


@pytest.mark.parametrize("name", NAMES)
def test_expectations_reproduce(name):
    e = entry(name)
    bad = [r.directive for r in e.verify() if r.ok is False]
    assert not bad


def test_expected_lookup():
    e = entry("cusp")
    assert e.expected("mi", 1) == "Z/2 x Z/2"
    assert e.expected("mi", 3).count("Z/2") == 6
    assert e.expected("pic") == "Z/2"
    assert entry("dual-numbers").expected("quasinormal") == "true"


def test_sources_recorded():
    sources = {x.source for e in corpus() for x in e.expectations}
    assert sources <= {"derived", "stated", "trivial"}
    assert {x.source for x in entry("dual-numbers").expectations} >= {"stated"}


def test_find_rings_and_errors():
    assert find("node.A").field.p == 3
    with pytest.raises(KeyError):
        find("nowhere")
    with pytest.raises(KeyError):
        entry("node.A")
