"""Fractional-order band-pass/band-stop filter analysis and Q-factor design."""

__version__ = "0.1.0"

from .response import (
    DomainError,
    Family,
    FoFilterParams,
    FoSecondOrderBpParams,
    ModeError,
    PeakMethod,
    PeakReport,
    PoleOnAxisError,
    jw_pow,
    magnitude,
    magnitude_bp,
    magnitude_bp2,
    magnitude_bs,
    peak_closed_form,
    phase,
    q_factor,
    q_factor_bp,
    q_factor_bs,
    transfer,
)
from .ga import Bounds, GaConfig, OptimizationResult, TerminatedBy, initialize, run, step
from .design import (
    DegeneracyReport,
    DesignFamily,
    DesignProblem,
    DesignReport,
    Symmetry,
    decode,
    default_bounds,
    degeneracy_study,
    design,
    encode,
    make_objective,
)
from .sweep import (
    FrequencyGrid,
    NoInteriorPeakError,
    ResponseSample,
    SurfaceGrid,
    default_grid,
    find_peak,
    read_csv,
    slope_db_per_decade,
    surface,
    sweep,
    write_csv,
)
from .svg import render_svg
