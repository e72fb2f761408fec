from chisynth.f3.forms import (
    F3Line,
    F3Matrix,
    F3Plane,
    F3Subspace,
    F3Vector,
    diagonalize_symmetric,
    dual_subspace,
    enumerate_lemma_antisymmetric,
    enumerate_lines,
    enumerate_planes,
    enumerate_symmetric_invertible,
    isotropic_lines,
    radical_line,
    radical_vector,
    self_dual_planes,
    self_dual_planes_through,
)

__all__ = [
    "F3Line",
    "F3Matrix",
    "F3Plane",
    "F3Subspace",
    "F3Vector",
    "diagonalize_symmetric",
    "dual_subspace",
    "enumerate_lemma_antisymmetric",
    "enumerate_lines",
    "enumerate_planes",
    "enumerate_symmetric_invertible",
    "isotropic_lines",
    "radical_line",
    "radical_vector",
    "self_dual_planes",
    "self_dual_planes_through",
]
