"""JSON file access: representation inputs, the curated corpus, command output."""
import json
import logging
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ValidationError

from .errors import InvalidInputError
from .models.representation import ElementDescription, RepDescription
from .repn import Representation
from .schur import SchurElement

logger = logging.getLogger(__name__)


class CorpusExpectation(BaseModel):
    conditions_hold: Optional[bool] = None
    minimal_n: Optional[int] = None
    catalyst_is_sigma: Optional[bool] = None


class CorpusEntry(BaseModel):
    name: str
    rho: RepDescription
    sigma: RepDescription
    expect: CorpusExpectation = CorpusExpectation()


def _read_json(path) -> dict:
    path = Path(path)
    try:
        with path.open() as f:
            return json.load(f)
    except FileNotFoundError:
        raise InvalidInputError(f"File not found: {path}")
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"Malformed JSON in {path}: {e}")


def _validate(model, data, path):
    try:
        return model.model_validate(data)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc'])}: {err['msg']}" for err in e.errors()
        )
        raise InvalidInputError(f"Invalid {model.__name__} in {path}: {problems}")


def load_representation(path) -> Representation:
    return _validate(RepDescription, _read_json(path), path).to_representation()


def load_element(path) -> SchurElement:
    return _validate(ElementDescription, _read_json(path), path).to_element()


def save_representation(rho: Representation, path):
    Path(path).write_text(dump_json(RepDescription.from_representation(rho)) + "\n")


def load_corpus(directory) -> List[CorpusEntry]:
    """Every *.json file in the directory, in file-name order."""
    directory = Path(directory)
    if not directory.is_dir():
        logger.warning("Corpus directory %s does not exist", directory)
        return []
    entries = [_validate(CorpusEntry, _read_json(p), p) for p in sorted(directory.glob("*.json"))]
    logger.info("Loaded %d corpus pairs from %s", len(entries), directory)
    return entries


def dump_json(model: BaseModel) -> str:
    """Deterministic JSON: sorted keys, "p/q" rationals, fixed indentation."""
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2)
