"""Inertial and noninertial frame transformations bounded by c and b."""

from .group import (
    QuaplecticElement,
    blocks_from_real,
    eta,
    eta_unitarity_residual,
    real_from_upsilon,
    upsilon_from_blocks,
    upsilon_from_transform,
)
from .limits import FrameMap, LimitReport, geometric_schedule, integrate_frame, limit_check
from .transforms import (
    KINDS,
    NATURAL,
    Constants,
    DimensionalScales,
    FrameParams,
    GammaFactors,
    Metrics,
    NullSurfaceReport,
    PhaseFrame,
    RateVector,
    Transform,
    apply_transform,
    build_transform,
    compose,
    extract_params,
    gamma_factors,
    invariance_residuals,
    metrics,
    null_surface,
    rates_transform,
    scales,
)
