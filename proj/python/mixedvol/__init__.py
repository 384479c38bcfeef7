"""Exact mixed volumes, mixed multiplicities, and sparse-system root bounds."""

from ._mixedvol import (  # noqa: F401
    bernstein_bound,
    convex_hull,
    count_torus_points_exhaustive,
    count_with_multiplicity,
    crosscheck,
    diagonal_multiplicity,
    euclidean_volume,
    hilbert_value,
    lattice_normalized_volume,
    minkowski_sum,
    mixed_multiplicity_fd,
    mixed_mults_via_diagonals,
    mixed_volume,
    mixed_volume_ie,
    mixed_volume_interp,
    mv_via_algebra,
    newton_polytope,
    probe_af,
    samuel_mixed_multiplicity,
    sumset_power,
    teissier_check,
    verify_bernstein,
)

__all__ = [
    "bernstein_bound",
    "convex_hull",
    "count_torus_points_exhaustive",
    "count_with_multiplicity",
    "crosscheck",
    "diagonal_multiplicity",
    "euclidean_volume",
    "hilbert_value",
    "lattice_normalized_volume",
    "minkowski_sum",
    "mixed_multiplicity_fd",
    "mixed_mults_via_diagonals",
    "mixed_volume",
    "mixed_volume_ie",
    "mixed_volume_interp",
    "mv_via_algebra",
    "newton_polytope",
    "probe_af",
    "samuel_mixed_multiplicity",
    "sumset_power",
    "teissier_check",
    "verify_bernstein",
]
