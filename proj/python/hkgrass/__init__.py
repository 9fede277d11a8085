"""Schubert calculus, Borel-Weil-Bott and trivector computations."""

from ._core import (
    bb_square,
    blowup_numbers,
    c2_of_Y,
    companion_class_number,
    companions,
    configuration,
    dual_variety_degree,
    griffiths_hodge,
    hilb2_hilbert_polynomial,
    intersection_numbers,
    k3_model_degree,
    koszul_euler,
    koszul_hodge_vector,
    normalize_trivector,
    polarization_type,
    random_trivector,
    riemann_roch_hilbert,
    scan_singular_points,
    schur_dimension,
    singular_trivector,
    vanishing_sweep,
    wedge_plethysm,
)

__all__ = [
    "bb_square",
    "blowup_numbers",
    "c2_of_Y",
    "companion_class_number",
    "companions",
    "configuration",
    "dual_variety_degree",
    "griffiths_hodge",
    "hilb2_hilbert_polynomial",
    "intersection_numbers",
    "k3_model_degree",
    "koszul_euler",
    "koszul_hodge_vector",
    "normalize_trivector",
    "polarization_type",
    "random_trivector",
    "riemann_roch_hilbert",
    "scan_singular_points",
    "schur_dimension",
    "singular_trivector",
    "vanishing_sweep",
    "wedge_plethysm",
]
