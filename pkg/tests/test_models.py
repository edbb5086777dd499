import json
import logging
from fractions import Fraction
from pathlib import Path

import pytest
from pydantic import ValidationError

from repcontain import repn, storage
from repcontain.errors import DomainError, InvalidInputError
from repcontain.models import AnalysisParams, CharOutput, RepDescription
from repcontain.models.representation import ElementDescription

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def test_rationals_serialize_as_strings():
    out = CharOutput(n=2, point=[Fraction(2), Fraction(1, 2)], value=Fraction(21, 4))
    assert out.model_dump(mode="json") == {"n": 2, "point": ["2/1", "1/2"], "value": "21/4"}
    assert out.value == Fraction(21, 4)
    assert CharOutput.model_validate_json('{"n": 2, "point": ["2", "1/2"], "value": 3}').point[0] == 2


def test_bad_rationals_are_rejected():
    with pytest.raises(ValidationError):
        CharOutput(n=2, point=["two"], value=1)
    with pytest.raises(ValidationError):
        CharOutput(n=2, point=["1/0"], value=1)


def test_terms_are_sorted():
    description = RepDescription(n=3, terms=[{"partition": [2, 1]}, {"partition": [], "mult": 2}])
    assert [t.partition for t in description.terms] == [[], [2, 1]]


def test_canonicalization_is_logged(caplog):
    description = RepDescription(n=2, terms=[
        {"partition": [3, 1], "mult": 1},
        {"partition": [2], "mult": 1},
    ])
    with caplog.at_level(logging.WARNING):
        rho = description.to_representation()
    assert rho == repn.irrep((2,), 2, mult=2)
    assert "modulo the determinant" in caplog.text


def test_duplicates_are_merged(caplog):
    description = RepDescription(n=2, terms=[{"partition": [1]}, {"partition": [1], "mult": 2}])
    with caplog.at_level(logging.WARNING):
        assert description.to_representation() == repn.irrep((1,), 2, mult=3)
    assert "duplicate" in caplog.text


def test_invalid_descriptions():
    with pytest.raises(ValidationError):
        RepDescription(n=2, terms=[{"partition": [1, 2]}])
    with pytest.raises(ValidationError):
        RepDescription(n=1, terms=[])
    with pytest.raises(ValidationError):
        RepDescription(n=2, terms=[{"partition": [1], "mult": 0}])
    with pytest.raises(DomainError):
        ElementDescription(n=2, terms=[{"partition": [1, 1, 1]}]).to_element()


def test_round_trip_through_a_file(tmp_path):
    rho = repn.from_terms(3, {(): 1, (2, 1): 2})
    path = tmp_path / "rho.json"
    storage.save_representation(rho, path)
    assert storage.load_representation(path) == rho


def test_loader_errors(tmp_path):
    with pytest.raises(InvalidInputError):
        storage.load_representation(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(InvalidInputError):
        storage.load_representation(broken)
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"n": 2, "terms": [{"partition": [0]}]}))
    with pytest.raises(InvalidInputError, match="terms.0.partition"):
        storage.load_representation(wrong)


def test_corpus_loading(tmp_path):
    assert storage.load_corpus(tmp_path / "nowhere") == []
    entries = storage.load_corpus(CORPUS)
    assert len(entries) == 20
    assert entries[0].name == "sl3_01_two_trivials"
    assert all(e.rho.n == e.sigma.n for e in entries)


def test_dump_is_deterministic():
    out = CharOutput(n=2, point=[Fraction(3), Fraction(1, 3)], value=Fraction(5))
    text = storage.dump_json(out)
    assert text == storage.dump_json(CharOutput.model_validate(json.loads(text)))
    assert list(json.loads(text)) == ["n", "point", "value"]


def test_params_from_flags():
    params = AnalysisParams.from_flags(threads=None, n_max=4, grid_depth=None)
    assert params.n_max == 4
    assert params.grid_depth == AnalysisParams().grid_depth
    with pytest.raises(ValidationError):
        AnalysisParams(grid_depth=1)
