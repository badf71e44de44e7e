"""Frequency sweeps, parametric response surfaces, peak finding and CSV export."""

from __future__ import annotations

import csv
import dataclasses
import math
import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .response import (
    FoFilterParams,
    FoSecondOrderBpParams,
    PeakMethod,
    PeakReport,
    DomainError,
    PoleOnAxisError,
    magnitude,
    phase,
)

__all__ = [
    "FrequencyGrid",
    "ResponseSample",
    "SurfaceGrid",
    "NoInteriorPeakError",
    "ExportError",
    "DB_FLOOR",
    "to_db",
    "default_grid",
    "sweep",
    "surface",
    "find_peak",
    "slope_db_per_decade",
    "write_csv",
    "read_csv",
]

DB_FLOOR = -300.0
SWEEP_HEADER = ("omega", "magnitude", "magnitude_db", "phase_deg")
SURFACE_HEADER = ("param_value", "omega", "magnitude_db")


class NoInteriorPeakError(ValueError):
    """The sampled response has its extremum at a grid endpoint."""


class ExportError(OSError):
    pass


@dataclass(frozen=True)
class FrequencyGrid:
    omega_min: float
    omega_max: float
    points: int = 2000

    def __post_init__(self):
        if not 0 < self.omega_min < self.omega_max:
            raise DomainError(
                f"need 0 < omega_min < omega_max, got {self.omega_min}, {self.omega_max}"
            )
        if self.points < 2:
            raise DomainError(f"need at least 2 points, got {self.points}")

    def omegas(self) -> np.ndarray:
        w = np.logspace(math.log10(self.omega_min), math.log10(self.omega_max), self.points)
        # pin the endpoints exactly; logspace round-trips through log10
        w[0], w[-1] = self.omega_min, self.omega_max
        return w

    @property
    def log_step(self) -> float:
        """Spacing between neighbouring points in log10(omega)."""
        return (math.log10(self.omega_max) - math.log10(self.omega_min)) / (self.points - 1)


def default_grid(omega0: float, points: int = 2000) -> FrequencyGrid:
    return FrequencyGrid(omega0 / 1e3, omega0 * 1e3, points)


@dataclass(frozen=True)
class ResponseSample:
    omega: float
    magnitude: float
    magnitude_db: float
    phase_deg: float
    pole_hit: bool = False


def to_db(mag):
    """``20 log10(mag)`` floored at :data:`DB_FLOOR`."""
    with np.errstate(divide="ignore"):
        db = 20.0 * np.log10(mag)
    return np.maximum(db, DB_FLOOR)


def _sample(filt, w: float) -> ResponseSample:
    try:
        m = magnitude(filt, w)
        ph = phase(filt, w)
    except PoleOnAxisError:
        return ResponseSample(w, math.inf, math.inf, math.nan, pole_hit=True)
    return ResponseSample(w, m, float(to_db(m)), math.degrees(ph))


def sweep(filt: FoFilterParams | FoSecondOrderBpParams, grid: FrequencyGrid) -> list[ResponseSample]:
    """Evaluate magnitude, dB and phase at every grid point.

    A pole found on the axis flags that sample (``pole_hit=True``) instead of
    aborting the sweep.
    """
    w = grid.omegas()
    try:
        mags = magnitude(filt, w)
        ph = np.degrees(phase(filt, w))
    except PoleOnAxisError:
        return [_sample(filt, float(x)) for x in w]
    db = to_db(mags)
    return [
        ResponseSample(float(x), float(m), float(d), float(p))
        for x, m, d, p in zip(w, mags, db, ph)
    ]


@dataclass
class SurfaceGrid:
    """dB magnitude over (swept parameter value x frequency).

    Cells whose parameter combination is invalid hold NaN.
    """

    param_name: str
    param_values: np.ndarray
    grid: FrequencyGrid
    values_db: np.ndarray

    @property
    def omegas(self) -> np.ndarray:
        return self.grid.omegas()

    def row_argmax_omega(self) -> np.ndarray:
        return self.omegas[np.nanargmax(self.values_db, axis=1)]


def _vary(base, name: str, value: float, keep_symmetric: bool):
    if not any(f.name == name for f in dataclasses.fields(base)) or name in ("family", "allow_unstable"):
        raise DomainError(f"{type(base).__name__} has no numeric field {name!r}")
    changes = {name: value}
    if isinstance(base, FoFilterParams) and keep_symmetric:
        if name == "beta":
            changes["alpha"] = 2.0 * value
        elif name == "alpha":
            changes["beta"] = value / 2.0
    return dataclasses.replace(base, **changes)


def surface(
    base: FoFilterParams | FoSecondOrderBpParams,
    param_name: str,
    param_values: Sequence[float],
    grid: FrequencyGrid,
    keep_symmetric: bool | None = None,
) -> SurfaceGrid:
    """Sweep one filter parameter, holding the others at ``base``.

    For a symmetric first-order ``base`` the ``alpha = 2 beta`` tie is kept
    when either order is swept (override with ``keep_symmetric``).
    """
    if keep_symmetric is None:
        keep_symmetric = isinstance(base, FoFilterParams) and base.is_symmetric
    values = np.asarray(param_values, dtype=float)
    w = grid.omegas()
    out = np.full((values.size, w.size), np.nan)
    for i, v in enumerate(values):
        try:
            filt = _vary(base, param_name, float(v), keep_symmetric)
        except DomainError as exc:
            if "no numeric field" in str(exc):
                raise
            continue
        try:
            out[i] = to_db(magnitude(filt, w))
        except PoleOnAxisError:
            for j, x in enumerate(w):
                s = _sample(filt, float(x))
                out[i, j] = np.nan if s.pole_hit else s.magnitude_db
    return SurfaceGrid(param_name, values, grid, out)


def find_peak(samples: Sequence[ResponseSample], notch: bool = False) -> PeakReport:
    """Locate the interior maximum (or minimum with ``notch=True``) of a sweep.

    The grid extremum is refined by a parabola through it and its two
    neighbours in (log10 omega, dB) coordinates.
    """
    if len(samples) < 3:
        raise ValueError(f"need at least 3 samples, got {len(samples)}")
    lw = np.log10([s.omega for s in samples])
    db = np.array([s.magnitude_db for s in samples], dtype=float)
    if notch:
        db = -db
    db = np.where(np.isnan(db), -np.inf, db)
    k = int(np.argmax(db))
    if k == 0 or k == len(samples) - 1:
        raise NoInteriorPeakError("extremum at a grid endpoint; no interior peak")
    m = samples[k].magnitude
    x = lw[k]
    y0, y1, y2 = db[k - 1], db[k], db[k + 1]
    if np.isfinite([y0, y1, y2]).all():
        x0, x2 = lw[k - 1], lw[k + 1]
        # vertex of the parabola through three (possibly uneven) points
        d0, d2 = x0 - x, x2 - x
        denom = d0 * d2 * (d0 - d2)
        if denom != 0:
            A = (d2 * (y0 - y1) - d0 * (y2 - y1)) / denom
            B = (d0 * d0 * (y2 - y1) - d2 * d2 * (y0 - y1)) / denom
            if A < 0:
                shift = -B / (2 * A)
                if d0 <= shift <= d2:
                    x = x + shift
                    peak_db = y1 + A * shift * shift + B * shift
                    m = 10 ** ((-peak_db if notch else peak_db) / 20)
    return PeakReport(float(10**x), float(m), PeakMethod.GRID_ARGMAX)


def slope_db_per_decade(samples: Sequence[ResponseSample], omega_lo: float, omega_hi: float) -> float:
    """Least-squares slope of dB against log10(omega) inside ``[omega_lo, omega_hi]``."""
    lw = np.log10([s.omega for s in samples])
    db = np.array([s.magnitude_db for s in samples], dtype=float)
    inside = (lw >= math.log10(omega_lo)) & (lw <= math.log10(omega_hi)) & np.isfinite(db)
    if inside.sum() < 2:
        raise ValueError(
            f"fewer than 2 finite samples inside [{omega_lo}, {omega_hi}]"
        )
    slope, _ = np.polyfit(lw[inside], db[inside], 1)
    return float(slope)


def _fmt(x: float) -> str:
    return "%.17g" % x


def write_csv(data: Sequence[ResponseSample] | SurfaceGrid, destination) -> None:
    """Write a sweep (wide format) or a surface (long format) as CSV.

    Floats carry 17 significant digits so a read-back is bit-exact.
    """
    path = os.fspath(destination)
    try:
        with open(path, "w", newline="", encoding="ascii") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            if isinstance(data, SurfaceGrid):
                writer.writerow(SURFACE_HEADER)
                w = data.omegas
                for v, row in zip(data.param_values, data.values_db):
                    for x, d in zip(w, row):
                        writer.writerow((_fmt(v), _fmt(x), _fmt(d)))
            else:
                writer.writerow(SWEEP_HEADER)
                for s in data:
                    writer.writerow(
                        (_fmt(s.omega), _fmt(s.magnitude), _fmt(s.magnitude_db), _fmt(s.phase_deg))
                    )
    except OSError as exc:
        raise ExportError(f"cannot write CSV to {path}: {exc.strerror or exc}") from exc


def read_csv(source) -> list[ResponseSample]:
    """Read a sweep written by :func:`write_csv`."""
    with open(os.fspath(source), newline="", encoding="ascii") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != SWEEP_HEADER:
            raise ValueError(f"unexpected header {header}")
        out = []
        for row in reader:
            w, m, d, p = map(float, row)
            out.append(ResponseSample(w, m, d, p, pole_hit=math.isinf(m)))
        return out
