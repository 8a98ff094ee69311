import os
from fractions import Fraction
from pathlib import Path

import mixsegre

CORPUS = Path(os.environ.get("MIXSEGRE_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))
PAIR = "ring x, y, z;\nideal I1 = z;\nideal I2 = x*z, y*z, z^2;\n"


def test_segre_numbers():
    assert mixsegre.segre_numbers(["x", "y", "z"], ["z"]) == [1, 0, 0]
    assert mixsegre.segre_numbers(["x", "y", "z"], ["x*z", "y*z", "z^2"]) == [1, 1, 2]


def test_colength_and_multiplicity():
    assert mixsegre.colength(["x", "y"], ["x^2", "y^3"]) == 6
    assert mixsegre.colength(["x", "y", "z"], ["z"]) is None
    assert mixsegre.multiplicity(["x", "y"], ["x^2 - y^3"]) == (2, 1)
    assert [mixsegre.hilbert_samuel(["x", "y", "z"], ["z"], n) for n in range(1, 5)] == [1, 3, 6, 10]


def test_mixed_and_closure():
    assert mixsegre.mixed_multiplicities(["x", "y"], ["x", "y"], ["x^2", "y^3"]) == [1, 2, 6]
    assert mixsegre.mixed_segre(["x", "y", "z"], ["z"], ["x*z", "y*z", "z^2"], 1, 1, 1) == 1
    assert mixsegre.same_integral_closure(["x", "y"], ["x^2", "y^2"], ["x^2", "x*y", "y^2"])
    assert not mixsegre.same_integral_closure(["x", "y", "z"], ["z"], ["x*z", "y*z", "z^2"])


def test_run_reports():
    report, code = mixsegre.run(PAIR, "compare", "I1", "I2")
    assert code == 2
    assert report["results"]["battery"]["first_failure"]["index"] == "2"
    report, code = mixsegre.run(PAIR, "segre", "I2", seed=5)
    assert code == 0
    assert report["config"]["seed"] == "5"
    assert report["results"]["I2"]["profile"]["e"] == ["1", "1", "2"]


def test_corpus_documents_normalize():
    for path in sorted(CORPUS.glob("*.ideal")):
        text = mixsegre.normalize_document(path.read_text())
        assert mixsegre.normalize_document(text) == text


def test_exact_helpers():
    assert mixsegre.total_transform([[-2, 1], [1, -2]], [1, 0]) == [Fraction(2, 3), Fraction(1, 3)]
    assert mixsegre.compare_root_sum("1", "6", "11", 2) == -1
    assert mixsegre.compare_root_sum("1", "8", "27", 3) == 0


def test_errors():
    try:
        mixsegre.run("ideal I = x;", "segre", "I")
    except mixsegre.EngineError as exc:
        assert "ideal" in str(exc)
    else:
        raise AssertionError("expected an engine error")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
    print("ok")
