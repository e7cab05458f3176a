import pathlib

import pytest

import lpa_centroid as lpa

CORPUS = pathlib.Path(__file__).resolve().parents[2] / "corpus"

LOOP = "vertex v\nedge c v v\n"
COMET = "vertex v1\nvertex v2\nedge e v1 v2\nedge c v2 v2\n"
TOEPLITZ = "vertex u\nvertex w\nedge c u u\nedge e u w\n"


def test_analyze_reports_comet():
    props = lpa.analyze(COMET)
    assert props["comet"] is True
    assert props["mt3"] is True


def test_centroid_of_comet_is_laurent():
    report = lpa.centroid(COMET, degree=2)
    assert report["verdict"] == "Prime_Laurent"
    assert report["certification"]["ok"] is True
    assert report["seed_dims"] == {"2": 5, "3": 7}


def test_centroid_of_toeplitz_is_k():
    report = lpa.centroid(TOEPLITZ, degree=2)
    assert report["verdict"] == "Prime_K"
    assert report["branch"] == "CycleWithExits"


def test_products_and_normal_forms():
    assert lpa.multiply(TOEPLITZ, "e~", "e") == "w"
    assert lpa.multiply(TOEPLITZ, "u", "w") == "0"
    assert lpa.normal_form(TOEPLITZ, "e~e") == lpa.normal_form(TOEPLITZ, "u - c~c")


def test_seed_space_dimension():
    assert lpa.seed_space_dimension(LOOP, 3) == 7


def test_comet_matrix():
    assert lpa.comet_matrix(COMET, "e.c~e") == [["0", "0"], ["0", "x"]]


def test_errors_are_value_errors():
    with pytest.raises(lpa.GraphError):
        lpa.analyze("vertex a\nedge x a b\n")
    with pytest.raises(ValueError):
        lpa.multiply(TOEPLITZ, "e.c", "u")


def test_corpus_and_verify(tmp_path):
    (tmp_path / "loop.graph").write_text(LOOP)
    table = lpa.corpus(tmp_path, degree=2)
    assert table["summary"]["certified"] == 1
    assert lpa.verify(CORPUS)["ok"] is True
