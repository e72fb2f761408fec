"""Runtime configuration object"""

import os

from pydantic import BaseModel, Field


class ChisynthConfig(BaseModel):
    """Compiler and explorer configuration"""

    max_depth: int = Field(
        default=8,
        description="Largest ball radius the explorer is allowed to build.",
        example=6,
    )

    distance_bound: int = Field(
        default=16,
        description="Largest edge distance graph_distance searches before giving up.",
        example=24,
    )

    table_bounds: list[int] = Field(
        default=[4, 6, 8],
        description=(
            "Successive l-value bounds used to prune the monomial word search. "
            "The next bound is tried only if coverage is incomplete."
        ),
        example=[4, 6],
    )

    selftest_depth: int = Field(
        default=4,
        description="Radius of the ball explored by the self-test.",
    )


#
# Load configuration from environment variables
#


def load_config() -> ChisynthConfig:
    """Load configuration"""
    env_prefix = "chisynth_"
    env_data = {}
    for key, value in dict(os.environ).items():
        if not key.lower().startswith(env_prefix):
            continue

        key = key.lower().removeprefix(env_prefix)
        if key in ChisynthConfig.__fields__:
            env_data[key] = value

    return ChisynthConfig(**env_data)


chiconfig = load_config()
