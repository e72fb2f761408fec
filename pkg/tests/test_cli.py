from fractions import Fraction
from pathlib import Path

import pytest
from typer.testing import CliRunner

from chisynth.arithmetic import FieldElement
from chisynth.building import Lattice, parse_graph_json
from chisynth.cli import app
from chisynth.cli.documents import (
    MatrixDocument,
    format_word_file,
    load_matrix_document,
    load_word_file,
    parse_matrix_document,
)
from chisynth.config import load_config
from chisynth.exceptions import DocumentParseException, NotInRingException
from chisynth.matrices import Matrix3, RingMatrix, eval_word, gate
from chisynth.utils import json_loads

runner = CliRunner()


def write_matrix(path: Path, matrix: RingMatrix) -> Path:
    path.write_text(MatrixDocument.from_matrix(matrix).dumps())
    return path


@pytest.mark.order(7)
def test_matrix_document(tmp_path: Path):
    u = eval_word("HSHRH")
    path = write_matrix(tmp_path / "u.json", u)
    document = load_matrix_document(path)
    assert RingMatrix.from_matrix(document.to_matrix()) == u
    assert document.dumps().endswith("}\n")
    identity = MatrixDocument.from_matrix(RingMatrix.identity(), comment="identity")
    assert identity.entries[0] == ["(1+0w)", "(0+0w)", "(0+0w)"]
    assert json_loads(identity.dumps())["comment"] == "identity"
    with pytest.raises(NotInRingException):
        MatrixDocument.from_matrix(Matrix3.diagonal(FieldElement(Fraction(1, 2)), 1, 1))


def test_matrix_document_errors(tmp_path: Path):
    with pytest.raises(DocumentParseException):
        parse_matrix_document("{")
    with pytest.raises(DocumentParseException):
        parse_matrix_document("[]")
    with pytest.raises(DocumentParseException):
        parse_matrix_document('{"entries": [["(1+0w)"]]}')
    with pytest.raises(DocumentParseException):
        load_matrix_document(tmp_path / "missing.json")
    bad_entry = '{"entries": [["x", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}'
    with pytest.raises(DocumentParseException):
        parse_matrix_document(bad_entry).to_matrix()


def test_word_files(tmp_path: Path):
    text = format_word_file(("H", "S", "R"), sde=1, steps=1)
    assert text.splitlines() == ["# length: 3", "# sde: 1", "# steps: 1", "H", "S", "R"]
    assert text.endswith("R\n")
    path = tmp_path / "w.word"
    path.write_text(text)
    assert load_word_file(path) == ("H", "S", "R")
    assert format_word_file((), sde=0) == "# length: 0\n# sde: 0\n"


def test_synth_and_verify(tmp_path: Path):
    u = eval_word("HSHHRSH")
    matrix_path = write_matrix(tmp_path / "u.json", u)
    word_path = tmp_path / "u.word"
    result = runner.invoke(
        app, ["synth", "--in", str(matrix_path), "--out", str(word_path)]
    )
    assert result.exit_code == 0
    assert eval_word(load_word_file(word_path)) == u
    assert word_path.read_text().startswith("# length: ")

    result = runner.invoke(
        app, ["verify", "--word", str(word_path), "--matrix", str(matrix_path)]
    )
    assert result.exit_code == 0

    word_path.write_text("H\n")
    result = runner.invoke(
        app, ["verify", "--word", str(word_path), "--matrix", str(matrix_path)]
    )
    assert result.exit_code == 1


def test_synth_errors(tmp_path: Path):
    not_unitary = write_matrix(
        tmp_path / "n.json", RingMatrix.from_entries([1, 1, 0, 0, 1, 0, 0, 0, 1])
    )
    result = runner.invoke(app, ["synth", "--in", str(not_unitary)])
    assert result.exit_code == 2

    garbage = tmp_path / "g.json"
    garbage.write_text("not a document")
    result = runner.invoke(app, ["synth", "--in", str(garbage)])
    assert result.exit_code == 3

    result = runner.invoke(app, ["synth", "--in", str(tmp_path / "missing.json")])
    assert result.exit_code == 3


def test_inspect(tmp_path: Path):
    path = write_matrix(tmp_path / "h.json", gate("H"))
    result = runner.invoke(app, ["inspect", "--in", str(path)])
    assert result.exit_code == 0
    report = json_loads(result.stdout)
    assert report["unitary"] is True
    assert report["inA"] is True
    assert report["lValue"] == 2
    assert report["sde"] == 1
    assert report["cartanExponents"] == [1, 0, -1]
    assert report["vertex"] == Lattice(gate("H")).key

    singular = tmp_path / "s.json"
    singular.write_text(
        MatrixDocument(
            entries=[["(1+0w)", "(0+0w)", "(0+0w)"]] * 3,
        ).dumps()
    )
    result = runner.invoke(app, ["inspect", "--in", str(singular)])
    assert result.exit_code == 1


def test_explore(tmp_path: Path):
    out = tmp_path / "ball.json"
    result = runner.invoke(
        app, ["explore", "--depth", "2", "--format", "json", "--out", str(out)]
    )
    assert result.exit_code == 0
    graph = parse_graph_json(out.read_text())
    assert graph.vertex_count == 17
    assert graph.edge_count == 16

    dot = tmp_path / "ball.dot"
    result = runner.invoke(app, ["explore", "--depth", "1", "--out", str(dot)])
    assert result.exit_code == 0
    assert dot.read_text().startswith("graph building {")
    assert dot.read_text().endswith("}\n")

    result = runner.invoke(app, ["explore", "--depth", "7", "--max-depth", "6"])
    assert result.exit_code == 5


def test_selftest():
    result = runner.invoke(app, ["selftest", "--depth", "2"])
    assert result.exit_code == 0
    assert "isotropic lines per symmetric form: 4 (published 4, agrees)" in (
        result.stdout
    )
    assert "alternating vertex degree: 4 (published 2, differs)" in result.stdout
    assert "FAILED" not in result.stdout


def test_random(tmp_path: Path):
    result = runner.invoke(app, ["random", "--length", "12", "--seed", "3"])
    assert result.exit_code == 0
    printed = parse_matrix_document(result.stdout)

    out = tmp_path / "r.json"
    result = runner.invoke(
        app, ["random", "--length", "12", "--seed", "3", "--out", str(out)]
    )
    assert result.exit_code == 0
    written = load_matrix_document(out)
    assert written == printed
    word = load_word_file(out.with_suffix(".word"))
    assert len(word) == 12
    assert RingMatrix.from_matrix(written.to_matrix()) == eval_word(word)

    result = runner.invoke(
        app,
        ["verify", "--word", str(out.with_suffix(".word")), "--matrix", str(out)],
    )
    assert result.exit_code == 0


def test_random_synth_verify_chain(tmp_path: Path):
    lengths = (0, 1, 10, 50, 200)
    for seed in range(20):
        length = lengths[seed % len(lengths)]
        matrix_path = tmp_path / f"m{seed}.json"
        word_path = tmp_path / f"m{seed}.synth"
        result = runner.invoke(
            app,
            [
                "random",
                "--length",
                str(length),
                "--seed",
                str(seed),
                "--out",
                str(matrix_path),
            ],
        )
        assert result.exit_code == 0
        result = runner.invoke(
            app, ["synth", "--in", str(matrix_path), "--out", str(word_path)]
        )
        assert result.exit_code == 0
        result = runner.invoke(
            app, ["verify", "--word", str(word_path), "--matrix", str(matrix_path)]
        )
        assert result.exit_code == 0
    identity = load_matrix_document(tmp_path / "m0.json").to_matrix()
    assert identity.is_identity()
    assert load_word_file(tmp_path / "m0.synth") == ()


def test_explore_is_deterministic(tmp_path: Path):
    outputs = [tmp_path / "first.dot", tmp_path / "second.dot"]
    for out in outputs:
        result = runner.invoke(app, ["explore", "--depth", "3", "--out", str(out)])
        assert result.exit_code == 0
    assert outputs[0].read_bytes() == outputs[1].read_bytes()
    single = tmp_path / "single.dot"
    result = runner.invoke(app, ["explore", "--depth", "0", "--out", str(single)])
    assert result.exit_code == 0
    assert single.read_text().count("color=") == 1


def test_config_from_environment(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv("CHISYNTH_MAX_DEPTH", "3")
    monkeypatch.setenv("CHISYNTH_UNKNOWN", "1")
    config = load_config()
    assert config.max_depth == 3
    assert config.distance_bound == 16
