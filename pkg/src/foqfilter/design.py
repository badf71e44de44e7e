"""Quality-factor design problems and their GA-driven solutions.

A :class:`DesignProblem` fixes the filter structure, whether the order pair is
tied (``alpha = 2 beta``), the centre frequency and the search box. Decision
vectors are laid out as

* symmetric first order: ``[a, b, beta]``
* asymmetric first order: ``[a, b, alpha, beta]``
* fractional second order: ``[a, b, d, alpha]``
"""

from __future__ import annotations

import enum
import math
import statistics
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np

from .ga import Bounds, GaConfig, OptimizationResult, run
from .response import (
    DomainError,
    Family,
    FoFilterParams,
    FoSecondOrderBpParams,
    PoleOnAxisError,
    q_factor,
)
from .sweep import NoInteriorPeakError, default_grid, find_peak, sweep

__all__ = [
    "DesignFamily",
    "Symmetry",
    "DesignProblem",
    "DesignReport",
    "DegeneracyReport",
    "default_bounds",
    "decode",
    "encode",
    "make_objective",
    "design",
    "degeneracy_study",
    "DEGENERACY_THRESHOLD",
]

EPS = 1e-6
PARAM_CAP = 20.0
DEGENERACY_THRESHOLD = 0.05


class DesignFamily(enum.Enum):
    BANDPASS = "bp"
    BANDSTOP = "bs"
    SECOND_ORDER_BANDPASS = "bp2"


class Symmetry(enum.Enum):
    SYMMETRIC = "symmetric"
    ASYMMETRIC = "asymmetric"


def _dimension(family: DesignFamily, symmetry: Symmetry) -> int:
    if family is DesignFamily.SECOND_ORDER_BANDPASS or symmetry is Symmetry.ASYMMETRIC:
        return 4
    return 3


def default_bounds(
    family: DesignFamily,
    symmetry: Symmetry = Symmetry.SYMMETRIC,
    stability_guard: bool = True,
) -> Bounds:
    """Search box derived from ``beta in [0, 2]`` and ``a, b in [0, 20]``.

    Zero lower bounds become ``1e-6`` (except the second-order ``a``). With the
    stability guard a symmetric design keeps ``beta < 1`` so ``alpha = 2 beta < 2``.
    """
    if family is DesignFamily.SECOND_ORDER_BANDPASS:
        return Bounds([0.0, EPS, EPS, EPS], [PARAM_CAP, PARAM_CAP, PARAM_CAP, 1.0])
    if symmetry is Symmetry.SYMMETRIC:
        beta_hi = 1 - EPS if stability_guard else 2 - EPS
        return Bounds([EPS, EPS, EPS], [PARAM_CAP, PARAM_CAP, beta_hi])
    return Bounds([EPS, EPS, EPS, EPS], [PARAM_CAP, PARAM_CAP, 2 - EPS, 2 - EPS])


@dataclass(frozen=True)
class DesignProblem:
    family: DesignFamily
    symmetry: Symmetry = Symmetry.SYMMETRIC
    omega0: float = 1.5
    bounds: Optional[Bounds] = None
    stability_guard: bool = True

    def __post_init__(self):
        if not (self.omega0 > 0 and math.isfinite(self.omega0)):
            raise DomainError(f"omega0 must be a positive finite frequency, got {self.omega0}")
        if self.bounds is None:
            object.__setattr__(
                self, "bounds", default_bounds(self.family, self.symmetry, self.stability_guard)
            )
        want = _dimension(self.family, self.symmetry)
        if self.bounds.dim != want:
            raise ValueError(
                f"{self.family.value}/{self.symmetry.value} needs {want}-dimensional bounds, "
                f"got {self.bounds.dim}"
            )

    @property
    def filter_family(self) -> Family:
        return Family.BANDSTOP if self.family is DesignFamily.BANDSTOP else Family.BANDPASS


def decode(problem: DesignProblem, x) -> FoFilterParams | FoSecondOrderBpParams:
    """Turn a decision vector into filter parameters; raises DomainError if infeasible."""
    x = [float(v) for v in x]
    if problem.family is DesignFamily.SECOND_ORDER_BANDPASS:
        a, b, d, alpha = x
        return FoSecondOrderBpParams(a, b, d, alpha)
    unstable = not problem.stability_guard
    if problem.symmetry is Symmetry.SYMMETRIC:
        a, b, beta = x
        return FoFilterParams.symmetric(a, b, beta, problem.filter_family, unstable)
    a, b, alpha, beta = x
    return FoFilterParams(a, b, alpha, beta, problem.filter_family, unstable)


def encode(problem: DesignProblem, params) -> np.ndarray:
    if problem.family is DesignFamily.SECOND_ORDER_BANDPASS:
        return np.array([params.a, params.b, params.d, params.alpha])
    if problem.symmetry is Symmetry.SYMMETRIC:
        return np.array([params.a, params.b, params.beta])
    return np.array([params.a, params.b, params.alpha, params.beta])


def make_objective(problem: DesignProblem) -> Callable[[np.ndarray], float]:
    """Q at ``omega0`` as a function of the decision vector; ``-inf`` when infeasible."""
    w0 = problem.omega0

    def objective(x) -> float:
        try:
            return q_factor(decode(problem, x), w0)
        except (DomainError, PoleOnAxisError, ZeroDivisionError):
            return -math.inf

    return objective


@dataclass
class DesignReport:
    params: FoFilterParams | FoSecondOrderBpParams
    q: float
    omega_m: float
    seed_results: list[tuple[int, float]]
    best_seed: int
    result: OptimizationResult = field(repr=False)


def _numeric_peak(problem: DesignProblem, params) -> float:
    try:
        samples = sweep(params, default_grid(problem.omega0))
        rep = find_peak(samples, notch=problem.family is DesignFamily.BANDSTOP)
    except (NoInteriorPeakError, ValueError):
        return math.nan
    return rep.omega_m


def design(problem: DesignProblem, config: GaConfig, seeds: Sequence[int] = (1, 2, 3, 4, 5)) -> DesignReport:
    """Run the GA once per seed and keep the best design.

    Ties between seeds go to the earliest seed in ``seeds``.
    """
    seeds = list(seeds)
    if not seeds:
        raise ValueError("design needs at least one seed")
    objective = make_objective(problem)
    best: Optional[tuple[int, OptimizationResult]] = None
    per_seed = []
    for s in seeds:
        res = run(objective, problem.bounds, replace(config, seed=int(s)))
        per_seed.append((int(s), res.best_fitness))
        if best is None or res.best_fitness > best[1].best_fitness:
            best = (int(s), res)
    seed, res = best
    if not math.isfinite(res.best_fitness):
        raise RuntimeError("no feasible design found for any seed")
    params = decode(problem, res.best_vector)
    return DesignReport(
        params=params,
        q=q_factor(params, problem.omega0),
        omega_m=_numeric_peak(problem, params),
        seed_results=per_seed,
        best_seed=seed,
        result=res,
    )


@dataclass
class DegeneracyReport:
    omega0: float
    per_seed: list[tuple[int, FoSecondOrderBpParams, float]]
    median_a: float
    threshold: float = DEGENERACY_THRESHOLD

    @property
    def degenerate(self) -> bool:
        return self.median_a <= self.threshold

    @property
    def a_values(self) -> list[float]:
        return [p.a for _, p, _ in self.per_seed]


def degeneracy_study(
    config: GaConfig,
    omega0: float = 1.5,
    seeds: Sequence[int] = (1, 2, 3, 4, 5),
    bounds: Optional[Bounds] = None,
) -> DegeneracyReport:
    """Optimise the fractional second-order band-pass per seed and track ``a``.

    The study counts as degenerate when the median optimised ``a`` is at most
    0.05, meaning the structure collapses onto the first-order form.
    """
    seeds = list(seeds)
    if len(seeds) < 3:
        raise ValueError("degeneracy_study needs at least 3 seeds")
    problem = DesignProblem(DesignFamily.SECOND_ORDER_BANDPASS, omega0=omega0, bounds=bounds)
    objective = make_objective(problem)
    rows = []
    for s in seeds:
        res = run(objective, problem.bounds, replace(config, seed=int(s)))
        rows.append((int(s), decode(problem, res.best_vector), res.best_fitness))
    return DegeneracyReport(omega0, rows, statistics.median(p.a for _, p, _ in rows))
