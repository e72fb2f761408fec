"""Matrix documents and word files exchanged by the command line tools."""

from pathlib import Path
from typing import Any

from pydantic import Field, ValidationError, validator

from chisynth.arithmetic.ring import parse_ring_element
from chisynth.exceptions import DocumentParseException, NotInRingException
from chisynth.matrices.gates import GateWord, parse_word
from chisynth.matrices.matrix import Matrix3
from chisynth.matrices.ring import RingMatrix, as_matrix
from chisynth.types import ChisynthModel
from chisynth.utils import json_dumps_pretty, json_loads


class MatrixDocument(ChisynthModel):
    entries: list[list[str]] = Field(
        ...,
        description="Row-major 3x3 entries in the '(p+qw)/chi^k' grammar",
        example=[
            ["(1+0w)", "(0+0w)", "(0+0w)"],
            ["(0+0w)", "(1+0w)", "(0+0w)"],
            ["(0+0w)", "(0+0w)", "(1+0w)"],
        ],
    )
    comment: str | None = Field(None, description="Free-form note")

    @validator("entries")
    def check_shape(cls, value: list[list[str]]) -> list[list[str]]:
        if len(value) != 3 or any(len(row) != 3 for row in value):
            raise ValueError("entries must be a 3x3 array")
        return value

    def to_matrix(self) -> Matrix3:
        return Matrix3.from_rows(
            [[parse_ring_element(x) for x in row] for row in self.entries]
        )

    @classmethod
    def from_matrix(
        cls,
        m: Matrix3 | RingMatrix,
        comment: str | None = None,
    ) -> "MatrixDocument":
        matrix = as_matrix(m)
        if not matrix.in_ring():
            raise NotInRingException("Only matrices over Z[1/chi] are serializable")
        return cls(entries=matrix.serialize(), comment=comment)

    def dumps(self) -> str:
        return json_dumps_pretty(self.dict(exclude_none=True)) + "\n"


def _read_text(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as e:
        raise DocumentParseException(f"Unable to read {path}: {e}") from e


def parse_matrix_document(text: str) -> MatrixDocument:
    try:
        data: Any = json_loads(text)
    except ValueError as e:
        raise DocumentParseException(f"Matrix document is not JSON: {e}") from e
    if not isinstance(data, dict):
        raise DocumentParseException("Matrix document must be a JSON object")
    try:
        return MatrixDocument(**data)
    except ValidationError as e:
        raise DocumentParseException(f"Invalid matrix document: {e}") from e


def load_matrix_document(path: Path) -> MatrixDocument:
    return parse_matrix_document(_read_text(path))


def format_word_file(word: GateWord, sde: int, steps: int | None = None) -> str:
    """Header comments followed by one letter per line."""
    lines = [f"# length: {len(word)}", f"# sde: {sde}"]
    if steps is not None:
        lines.append(f"# steps: {steps}")
    lines.extend(word)
    return "\n".join(lines) + "\n"


def load_word_file(path: Path) -> GateWord:
    return parse_word(_read_text(path))
