"""Orbits of pure vertices under the monomial group."""

from nxtools import logging
from pydantic import Field

from chisynth.building.vertices import PureVertex, origin, pure_vertex_of
from chisynth.exceptions import BuildingInvariantException
from chisynth.matrices.gates import gate
from chisynth.matrices.monomials import MONOMIAL_COUNT, enumerate_monomials
from chisynth.types import ChisynthModel

CLAIMED_H_ORBIT = (12, 108)


class OrbitReport(ChisynthModel):
    orbit_size: int = Field(..., description="Distinct images of the vertex")
    stabilizer_order: int = Field(..., description="Monomials fixing the vertex")
    product: int = Field(..., description="orbit_size * stabilizer_order")


def orbit_stabilizer(vertex: PureVertex) -> OrbitReport:
    """Act on a pure vertex by left multiplication with all 1296 monomials."""
    images: set[str] = set()
    stabilizer = 0
    for monomial in enumerate_monomials():
        image = vertex.transformed(monomial.to_ring())
        images.add(image.key)
        if image.key == vertex.key:
            stabilizer += 1

    report = OrbitReport(
        orbit_size=len(images),
        stabilizer_order=stabilizer,
        product=len(images) * stabilizer,
    )
    if report.product != MONOMIAL_COUNT:
        raise BuildingInvariantException(
            f"Orbit {report.orbit_size} times stabilizer {stabilizer} "
            f"is not {MONOMIAL_COUNT}",
            log=True,
        )
    logging.debug(f"Orbit of {vertex.key}: {report.orbit_size}")
    return report


def orbit_stabilizer_of_H_vertex() -> OrbitReport:
    return orbit_stabilizer(pure_vertex_of(gate("H")))


def orbit_stabilizer_of_origin() -> OrbitReport:
    return orbit_stabilizer(origin())
