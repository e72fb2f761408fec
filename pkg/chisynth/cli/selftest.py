"""Brute-force consistency checks with a summary table.

Each check either passes or fails. Published counts that are recomputed
here are printed next to the measured value; disagreeing with them is
informational and never fails the run.
"""

from fractions import Fraction

from nxtools import logging
from pydantic import Field

from chisynth.arithmetic.field import CHI, CHI_BAR, FieldElement
from chisynth.arithmetic.valuation import v_pi
from chisynth.building.graph import bfs_explore, graph_distance
from chisynth.building.vertices import origin, pure_vertex_of
from chisynth.f3.forms import (
    enumerate_lemma_antisymmetric,
    enumerate_symmetric_invertible,
    isotropic_lines,
    radical_vector,
    self_dual_planes,
    vector,
)
from chisynth.matrices.gates import ALPHABET, eval_word, gate
from chisynth.matrices.metric import tilde_d
from chisynth.matrices.monomials import (
    MONOMIAL_COUNT,
    MonomialMatrix,
    d_gate,
    enumerate_monomials,
    monomial_word_table,
)
from chisynth.matrices.ring import RingMatrix
from chisynth.synthesis.orbits import CLAIMED_H_ORBIT, orbit_stabilizer_of_H_vertex
from chisynth.types import ChisynthModel

CLAIMED_ALTERNATING_DEGREE = 2
CLAIMED_H_DISTANCE = 4


class SelfTestLine(ChisynthModel):
    name: str = Field(...)
    measured: str = Field(...)
    claimed: str | None = Field(None, description="Published value, if any")
    passed: bool = Field(True)

    def format(self) -> str:
        line = f"{self.name}: {self.measured}"
        if self.claimed is not None:
            agreement = "agrees" if self.claimed == self.measured else "differs"
            line += f" (published {self.claimed}, {agreement})"
        if not self.passed:
            line += " FAILED"
        return line


def _check_generators() -> list[SelfTestLine]:
    unitary = all(gate(name).is_unitary() for name in ALPHABET)
    orders = (
        eval_word("HHHH").is_identity()
        and eval_word("SSS").is_identity()
        and eval_word("RR").is_identity()
    )
    norm = CHI * CHI_BAR
    return [
        SelfTestLine(
            name="generators unitary over Z[1/chi]",
            measured=str(unitary),
            passed=unitary,
        ),
        SelfTestLine(name="H^4 = S^3 = R^2 = I", measured=str(orders), passed=orders),
        SelfTestLine(
            name="chi * conj(chi)",
            measured=str(norm),
            passed=norm == FieldElement(3),
        ),
        SelfTestLine(
            name="v_pi(3)",
            measured=str(v_pi(FieldElement(3))),
            passed=v_pi(FieldElement(3)) == 2,
        ),
    ]


def _check_forms() -> list[SelfTestLine]:
    counts = {len(isotropic_lines(a)) for a in enumerate_symmetric_invertible()}
    plane_counts = set()
    radicals_ok = True
    for a in enumerate_lemma_antisymmetric():
        plane_counts.add(len(self_dual_planes(a)))
        first, second = int(a[0, 1]), int(a[0, 2])
        radicals_ok &= radical_vector(a) == vector(0, second, -first)
    return [
        SelfTestLine(
            name="isotropic lines per symmetric form",
            measured=",".join(str(c) for c in sorted(counts)),
            claimed="4",
            passed=counts == {4},
        ),
        SelfTestLine(
            name="self-dual planes per antisymmetric form",
            measured=",".join(str(c) for c in sorted(plane_counts)),
            claimed="2",
            passed=plane_counts == {4},
        ),
        SelfTestLine(
            name="radical vector (0, b, -a)",
            measured=str(radicals_ok),
            passed=radicals_ok,
        ),
    ]


def _check_monomials() -> list[SelfTestLine]:
    monomials = enumerate_monomials()
    table = monomial_word_table()
    covered = all(
        eval_word(table[m]) == m.to_ring() for m in monomials if m in table
    ) and len(table) == MONOMIAL_COUNT
    diagonal_ok = True
    for a in range(3):
        for b in range(3):
            for c in range(3):
                d = d_gate(a, b, c)
                if not d.is_diagonal():
                    diagonal_ok = False
                    continue
                word = table[MonomialMatrix.from_ring(d)]
                diagonal_ok &= eval_word(word) == d
    longest = max(len(word) for word in table.values())
    return [
        SelfTestLine(
            name="monomial group order",
            measured=str(len(set(monomials))),
            claimed=str(MONOMIAL_COUNT),
            passed=len(set(monomials)) == MONOMIAL_COUNT,
        ),
        SelfTestLine(
            name="monomial word table verified",
            measured=f"{covered} (longest word {longest})",
            passed=covered,
        ),
        SelfTestLine(
            name="X^2 S^a X S^b X S^c X^2 diagonal",
            measured=str(diagonal_ok),
            passed=diagonal_ok,
        ),
    ]


def _check_orbit() -> list[SelfTestLine]:
    report = orbit_stabilizer_of_H_vertex()
    claimed = f"{CLAIMED_H_ORBIT[0]} x {CLAIMED_H_ORBIT[1]}"
    return [
        SelfTestLine(
            name="orbit x stabilizer of H e0",
            measured=f"{report.orbit_size} x {report.stabilizer_order}",
            claimed=claimed,
            passed=report.product == MONOMIAL_COUNT,
        ),
        SelfTestLine(
            name="orbit-stabilizer product",
            measured=str(report.product),
            passed=report.product == MONOMIAL_COUNT,
        ),
    ]


def _check_building(depth: int) -> list[SelfTestLine]:
    graph = bfs_explore(origin(), depth)
    degrees = graph.interior_degrees()
    pure = ",".join(str(d) for d in sorted(degrees["pure"]))
    alternating = ",".join(str(d) for d in sorted(degrees["alternating"]))
    h_vertex = pure_vertex_of(gate("H"))
    distance = graph_distance(origin(), h_vertex)
    metric = tilde_d(RingMatrix.identity(), gate("H"))
    return [
        SelfTestLine(
            name=f"sphere sizes to depth {depth}",
            measured=",".join(str(s) for s in graph.sphere_sizes()),
        ),
        SelfTestLine(
            name="pure vertex degree",
            measured=pure,
            claimed="4",
            passed=degrees["pure"] <= {4},
        ),
        SelfTestLine(
            name="alternating vertex degree",
            measured=alternating,
            claimed=str(CLAIMED_ALTERNATING_DEGREE),
            passed=degrees["alternating"] <= {4},
        ),
        SelfTestLine(
            name="ball is a bipartite tree",
            measured=str(graph.is_bipartite() and graph.is_tree()),
            passed=graph.is_bipartite() and graph.is_tree(),
        ),
        SelfTestLine(
            name="distance from e0 to H e0",
            measured=str(distance),
            claimed=str(CLAIMED_H_DISTANCE),
            passed=Fraction(distance) == metric,
        ),
    ]


def run_selftest(depth: int) -> list[SelfTestLine]:
    lines: list[SelfTestLine] = []
    for check in (_check_generators, _check_forms, _check_monomials, _check_orbit):
        logging.info(f"Running {check.__name__.removeprefix('_check_')} checks")
        lines.extend(check())
    logging.info(f"Running building checks to depth {depth}")
    lines.extend(_check_building(depth))
    return lines
