__all__ = [
    "ChisynthModel",
    "Field",
    "GateLetter",
    "GateName",
    "VertexKind",
    "ExportFormat",
]

from typing import Literal

from pydantic import BaseModel, Field

from chisynth.utils import json_dumps, json_loads

#
# Common constants and types used everywhere
#

GateLetter = Literal["H", "S", "R"]

GateName = Literal["H", "S", "R", "X"]

VertexKind = Literal["pure", "alternating"]

ExportFormat = Literal["dot", "json"]

#
# Pydantic model used for documents, reports and results
#


def camelize(src: str) -> str:
    """Convert snake_case to camelCase."""
    components = src.split("_")
    return components[0] + "".join(x.title() for x in components[1:])


class ChisynthModel(BaseModel):
    """Base document model."""

    class Config:
        """Document model config."""

        allow_population_by_field_name = True
        alias_generator = camelize
        json_loads = json_loads
        json_dumps = json_dumps
