from chisynth.synthesis.descent import (
    SynthesisResult,
    descent_candidates,
    descent_step,
    exact_synthesize,
    verify,
    word_length_fit,
)
from chisynth.synthesis.orbits import (
    CLAIMED_H_ORBIT,
    OrbitReport,
    orbit_stabilizer,
    orbit_stabilizer_of_H_vertex,
    orbit_stabilizer_of_origin,
)
from chisynth.synthesis.sampling import random_unitary, random_word

__all__ = [
    "CLAIMED_H_ORBIT",
    "OrbitReport",
    "SynthesisResult",
    "descent_candidates",
    "descent_step",
    "exact_synthesize",
    "orbit_stabilizer",
    "orbit_stabilizer_of_H_vertex",
    "orbit_stabilizer_of_origin",
    "random_unitary",
    "random_word",
    "verify",
    "word_length_fit",
]
