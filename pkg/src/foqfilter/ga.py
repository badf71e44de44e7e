"""Bounded real-coded genetic algorithm (maximisation).

Operators: binary tournament selection, BLX-0.5 blend crossover, Gaussian
mutation with per-gene sigma ``0.1 * (upper - lower)``. Every gene is clamped
to the box after variation. The best ``elite_count`` individuals are copied
into the next generation unchanged, so the best-so-far fitness never drops.

Non-finite objective values are mapped to ``-inf``; such individuals lose
every tournament against a finite one and are never reported as the result
unless nothing finite was ever found.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

__all__ = [
    "GaConfig",
    "Bounds",
    "OptimizationResult",
    "TerminatedBy",
    "initialize",
    "step",
    "run",
    "sanitize_fitness",
]

TOURNAMENT_SIZE = 2
BLEND_ALPHA = 0.5
MUTATION_SCALE = 0.1


@dataclass(frozen=True)
class GaConfig:
    population_size: int = 20
    crossover_fraction: float = 0.8
    mutation_fraction: float = 0.2
    max_generations: int = 200
    elite_count: int = 2
    stall_generations: int = 50
    stall_tolerance: float = 1e-8
    seed: int = 0

    def __post_init__(self):
        if self.population_size < 4:
            raise ValueError(f"population_size must be >= 4, got {self.population_size}")
        for name in ("crossover_fraction", "mutation_fraction"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        if not 0 <= self.elite_count < self.population_size:
            raise ValueError(
                f"elite_count must be in [0, population_size), got {self.elite_count}"
            )
        if self.max_generations < 0:
            raise ValueError(f"max_generations must be >= 0, got {self.max_generations}")
        if self.stall_generations < 1:
            raise ValueError(f"stall_generations must be >= 1, got {self.stall_generations}")
        if self.stall_tolerance < 0:
            raise ValueError(f"stall_tolerance must be >= 0, got {self.stall_tolerance}")

    def child_counts(self) -> tuple[int, int, int]:
        """Return ``(n_crossover, n_mutation, n_copy)`` for one generation."""
        rest = self.population_size - self.elite_count
        n_cross = _round_half_up(self.crossover_fraction * rest)
        n_mut = min(_round_half_up(self.mutation_fraction * rest), rest - n_cross)
        return n_cross, n_mut, rest - n_cross - n_mut


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


@dataclass(frozen=True)
class Bounds:
    """Per-variable box ``lower <= x <= upper``. Zero-width intervals are allowed."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = np.atleast_1d(np.asarray(self.lower, dtype=float)).copy()
        hi = np.atleast_1d(np.asarray(self.upper, dtype=float)).copy()
        if lo.shape != hi.shape or lo.ndim != 1:
            raise ValueError(f"lower/upper shapes differ: {lo.shape} vs {hi.shape}")
        if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
            raise ValueError("bounds must be finite")
        if np.any(lo > hi):
            raise ValueError(f"lower must not exceed upper: {lo} vs {hi}")
        lo.flags.writeable = False
        hi.flags.writeable = False
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def dim(self) -> int:
        return self.lower.size

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def clip(self, x: np.ndarray) -> np.ndarray:
        return np.clip(x, self.lower, self.upper)

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    def replace(self, index: int, lower: float | None = None, upper: float | None = None):
        lo, hi = self.lower.copy(), self.upper.copy()
        if lower is not None:
            lo[index] = lower
        if upper is not None:
            hi[index] = upper
        return Bounds(lo, hi)

    def __eq__(self, other):
        if not isinstance(other, Bounds):
            return NotImplemented
        return np.array_equal(self.lower, other.lower) and np.array_equal(self.upper, other.upper)

    __hash__ = None


class TerminatedBy(enum.Enum):
    MAX_GENERATIONS = "max-generations"
    STALL = "stall"


@dataclass
class OptimizationResult:
    best_vector: np.ndarray
    best_fitness: float
    history: list[float] = field(default_factory=list)
    generations_run: int = 0
    terminated_by: TerminatedBy = TerminatedBy.MAX_GENERATIONS


def sanitize_fitness(values) -> np.ndarray:
    f = np.asarray(values, dtype=float)
    return np.where(np.isfinite(f), f, -np.inf)


def initialize(bounds: Bounds, config: GaConfig, rng: Optional[np.random.Generator] = None):
    """Uniform random population inside ``bounds``, shape ``(population_size, dim)``."""
    if rng is None:
        rng = np.random.default_rng(config.seed)
    u = rng.random((config.population_size, bounds.dim))
    return bounds.clip(bounds.lower + u * bounds.width)


def _tournament(fitness: np.ndarray, n: int, rng: np.random.Generator) -> np.ndarray:
    """Indices of ``n`` binary-tournament winners; ties go to the first entrant."""
    entrants = rng.integers(0, fitness.size, size=(n, TOURNAMENT_SIZE))
    f = fitness[entrants]
    winner = np.argmax(f, axis=1)
    return entrants[np.arange(n), winner]


def step(population, fitnesses, bounds: Bounds, config: GaConfig, rng: np.random.Generator):
    """Produce the next generation from an evaluated population."""
    pop = np.asarray(population, dtype=float)
    fit = sanitize_fitness(fitnesses)
    if pop.shape != (config.population_size, bounds.dim) or fit.shape != (pop.shape[0],):
        raise ValueError(
            f"population {pop.shape} / fitness {fit.shape} do not match config and bounds"
        )
    n_cross, n_mut, n_copy = config.child_counts()

    order = np.argsort(-fit, kind="stable")
    elites = pop[order[: config.elite_count]]

    parents = _tournament(fit, 2 * n_cross, rng).reshape(n_cross, 2)
    p1, p2 = pop[parents[:, 0]], pop[parents[:, 1]]
    lo = np.minimum(p1, p2)
    span = np.abs(p1 - p2)
    u = rng.random(p1.shape)
    crossed = lo - BLEND_ALPHA * span + u * (1 + 2 * BLEND_ALPHA) * span

    mutants = pop[_tournament(fit, n_mut, rng)]
    sigma = MUTATION_SCALE * bounds.width
    mutated = mutants + rng.standard_normal(mutants.shape) * sigma

    copies = pop[_tournament(fit, n_copy, rng)]

    nxt = np.vstack([elites, crossed, mutated, copies])
    return bounds.clip(nxt)


def _evaluate(objective, pop, map_fn) -> np.ndarray:
    mapper = map if map_fn is None else map_fn
    return sanitize_fitness(list(mapper(objective, list(pop))))


def _relative_gain(new: float, old: float) -> float:
    if new == old:
        return 0.0
    if not math.isfinite(old):
        return math.inf
    return (new - old) / max(abs(old), 1e-300)


def run(
    objective: Callable[[np.ndarray], float],
    bounds: Bounds,
    config: GaConfig,
    map_fn: Optional[Callable[[Callable, Iterable], Iterable]] = None,
) -> OptimizationResult:
    """Maximise ``objective`` over ``bounds``.

    ``map_fn`` may be a parallel map (e.g. ``executor.map``); it must preserve
    order. Results depend only on ``config.seed``, not on how evaluation is
    scheduled.
    """
    rng = np.random.default_rng(config.seed)
    pop = initialize(bounds, config, rng)
    fit = _evaluate(objective, pop, map_fn)

    i = int(np.argmax(fit))
    best_x, best_f = pop[i].copy(), float(fit[i])
    history = [best_f]
    terminated = TerminatedBy.MAX_GENERATIONS
    gen = 0
    while gen < config.max_generations:
        pop = step(pop, fit, bounds, config, rng)
        fit = _evaluate(objective, pop, map_fn)
        gen += 1
        i = int(np.argmax(fit))
        if fit[i] > best_f:
            best_x, best_f = pop[i].copy(), float(fit[i])
        history.append(best_f)
        if gen >= config.stall_generations:
            if _relative_gain(best_f, history[gen - config.stall_generations]) < config.stall_tolerance:
                terminated = TerminatedBy.STALL
                break
    return OptimizationResult(best_x, best_f, history, gen, terminated)
