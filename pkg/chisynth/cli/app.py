from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterator, Optional

import typer
from nxtools import log_traceback, logging
from pydantic import Field

from chisynth.building.export import export_graph
from chisynth.building.graph import bfs_explore
from chisynth.building.vertices import origin, pure_vertex_of
from chisynth.cli.documents import (
    MatrixDocument,
    format_word_file,
    load_matrix_document,
    load_word_file,
)
from chisynth.cli.selftest import run_selftest
from chisynth.config import chiconfig
from chisynth.exceptions import (
    BoundExceededException,
    ChisynthException,
    SelfTestFailedException,
    SingularException,
)
from chisynth.matrices.cartan import cartan_decompose
from chisynth.matrices.metric import is_in_A, l_value, sde
from chisynth.synthesis.descent import exact_synthesize, verify
from chisynth.synthesis.sampling import random_unitary
from chisynth.types import ChisynthModel
from chisynth.utils import hash_data, json_dumps_pretty

app = typer.Typer(
    name="chisynth",
    help="Exact synthesis of qutrit Clifford+R circuits.",
    add_completion=False,
)


class GraphFormat(str, Enum):
    dot = "dot"
    json = "json"


class InspectReport(ChisynthModel):
    unitary: bool = Field(...)
    in_ring: bool = Field(..., description="Entries lie in Z[1/chi]")
    in_a: bool = Field(..., description="g*g lies in GL3 of the valuation ring")
    l_value: int = Field(...)
    sde: int = Field(...)
    cartan_exponents: list[int] = Field(...)
    vertex: str | None = Field(None, description="Key of the pure vertex g e0")


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Turn exceptions into exit codes. Diagnostics go to stderr."""
    try:
        yield
    except ChisynthException as e:
        logging.error(f"{e.__class__.__name__}: {e.detail}")
        raise typer.Exit(e.exit_code) from e
    except typer.Exit:
        raise
    except Exception as e:
        log_traceback()
        raise typer.Exit(1) from e


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text)
        logging.info(f"Wrote {out}")


@app.command()
def synth(
    input_path: Path = typer.Option(..., "--in", help="Matrix document to compile"),
    out: Optional[Path] = typer.Option(None, "--out", help="Word file to write"),
) -> None:
    """Synthesize a gate word for a unitary matrix document."""
    with exit_on_error():
        matrix = load_matrix_document(input_path).to_matrix()
        result = exact_synthesize(matrix)
        logging.goodnews(
            f"Synthesized {len(result.word)} gates in {result.steps} steps"
        )
        _emit(format_word_file(result.gate_word, result.sde, result.steps), out)


@app.command("verify")
def verify_command(
    word_path: Path = typer.Option(..., "--word", help="Word file"),
    matrix_path: Path = typer.Option(..., "--matrix", help="Matrix document"),
) -> None:
    """Exit 0 iff the word evaluates exactly to the matrix."""
    with exit_on_error():
        word = load_word_file(word_path)
        matrix = load_matrix_document(matrix_path).to_matrix()
        matched = verify(word, matrix)
    if not matched:
        logging.warning("Word does not evaluate to the matrix")
        raise typer.Exit(1)
    logging.goodnews("Word evaluates to the matrix")


@app.command()
def inspect(
    input_path: Path = typer.Option(..., "--in", help="Matrix document"),
) -> None:
    """Print unitarity, sde, l, Cartan exponents and the pure vertex."""
    with exit_on_error():
        matrix = load_matrix_document(input_path).to_matrix()
        if not matrix.is_invertible():
            raise SingularException("The matrix is not invertible")
        in_a = is_in_A(matrix)
        report = InspectReport(
            unitary=matrix.is_unitary(),
            in_ring=matrix.in_ring(),
            in_a=in_a,
            l_value=l_value(matrix),
            sde=sde(matrix),
            cartan_exponents=list(cartan_decompose(matrix).exponents),
            vertex=pure_vertex_of(matrix).key if in_a else None,
        )
        typer.echo(json_dumps_pretty(report.dict(by_alias=True)))


@app.command()
def explore(
    depth: int = typer.Option(6, "--depth", min=0, help="Ball radius"),
    fmt: GraphFormat = typer.Option(GraphFormat.dot, "--format"),
    out: Optional[Path] = typer.Option(None, "--out"),
    max_depth: Optional[int] = typer.Option(
        None,
        "--max-depth",
        help="Largest allowed depth, defaults to CHISYNTH_MAX_DEPTH",
    ),
) -> None:
    """Export the ball around the origin as DOT or JSON."""
    with exit_on_error():
        limit = chiconfig.max_depth if max_depth is None else max_depth
        if depth > limit:
            raise BoundExceededException(f"Depth {depth} exceeds {limit}")
        graph = bfs_explore(origin(), depth)
        text = export_graph(graph, fmt.value)
        logging.goodnews(
            f"Explored {graph.vertex_count} vertices, digest {hash_data(text)[:16]}"
        )
        _emit(text if text.endswith("\n") else text + "\n", out)


@app.command()
def selftest(
    depth: Optional[int] = typer.Option(None, "--depth", min=0),
) -> None:
    """Recompute the finite counts and check internal consistency."""
    with exit_on_error():
        lines = run_selftest(chiconfig.selftest_depth if depth is None else depth)
        for line in lines:
            typer.echo(line.format())
        failures = [line for line in lines if not line.passed]
        if failures:
            raise SelfTestFailedException(
                failures,
                f"{len(failures)} of {len(lines)} checks failed",
            )
        logging.goodnews(f"All {len(lines)} checks passed")


@app.command()
def random(
    length: int = typer.Option(10, "--length", min=0),
    seed: int = typer.Option(0, "--seed"),
    out: Optional[Path] = typer.Option(
        None,
        "--out",
        help="Matrix document path; the word goes next to it with suffix .word",
    ),
) -> None:
    """Write a seeded random word and its matrix."""
    with exit_on_error():
        word, matrix = random_unitary(length, seed)
        document = MatrixDocument.from_matrix(
            matrix,
            comment=f"random word, length {length}, seed {seed}",
        )
        if out is None:
            typer.echo(document.dumps(), nl=False)
            return
        out.write_text(document.dumps())
        word_path = out.with_suffix(".word")
        word_path.write_text(format_word_file(word, matrix.sde()))
        logging.info(f"Wrote {out} and {word_path}")
