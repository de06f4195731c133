"""Two-slit Wigner functions with an Aharonov-Bohm phase."""

from ._wignerab import (
    AnalysisError,
    Axis,
    ConventionError,
    Error,
    Grid1D,
    Grid2D,
    InvalidInput,
    Slit,
    SlitPairParams,
    TruncationError,
    common_projection_interval,
    delta_big,
    delta_from_flux,
    fringe_maxima,
    fringe_period,
    fringe_shift,
    marginals,
    normalized_params,
    p_marginal,
    sample_p_marginal,
    sample_slit_wdf,
    sample_wdf,
    sample_x_marginal,
    shear,
    wdf,
    wigner_numeric,
    x_marginal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
