"""Balls of the distance-ratio metric j in subdomains of R^n."""

from ._core import (
    Domain,
    DimensionMismatch,
    Error,
    InvalidInput,
    OutsideDomain,
    ResolutionError,
    Unsupported,
    acceptance,
    annulus_bounds,
    convexity_check,
    disk_decomposition,
    exhaustion_radius,
    gallery,
    gallery_names,
    geodesic_exists,
    in_j_ball,
    j_distance,
    qh_distance,
    qh_punctured_closed_form,
    region_mask,
    starlikeness_check,
    thresholds,
    topology,
    trace_boundary,
    triangle_defect,
)

__version__ = "0.1.0"
