"""Closed-form frequency responses of fractional-order band-pass/band-stop filters.

Two filter structures are covered:

* the first-order generalisation ``T(s) = b s^beta / (s^alpha + a)`` (band-pass)
  and its reciprocal ``(s^alpha + a) / (b s^beta)`` (band-stop);
* the fractional second-order band-pass ``d s^alpha / (s^(2 alpha) + 2 a s^alpha + b)``.

All magnitudes are linear. Functions accept a scalar ``omega`` or a numpy array
of frequencies and return the same shape. ``omega`` must be strictly positive;
the DC asymptotes are 0 (band-pass) and infinity (band-stop, ``beta > 0``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = [
    "Family",
    "PeakMethod",
    "FoFilterParams",
    "FoSecondOrderBpParams",
    "PeakReport",
    "DomainError",
    "PoleOnAxisError",
    "ModeError",
    "SYMMETRY_TOL",
    "jw_pow",
    "transfer",
    "magnitude",
    "magnitude_bp",
    "magnitude_bs",
    "magnitude_bp2",
    "phase",
    "q_factor",
    "q_factor_bp",
    "q_factor_bs",
    "peak_closed_form",
]

SYMMETRY_TOL = 1e-12

ArrayLike = Union[float, np.ndarray]


class DomainError(ValueError):
    """Raised for frequencies or parameters outside the valid domain."""


class PoleOnAxisError(ArithmeticError):
    """Raised when a pole lies on the evaluated part of the j-omega axis."""


class ModeError(ValueError):
    """Raised when an operation needs a symmetric filter and gets another."""


class Family(enum.Enum):
    BANDPASS = "bp"
    BANDSTOP = "bs"


class PeakMethod(enum.Enum):
    CLOSED_FORM = "closed-form"
    GRID_ARGMAX = "grid-argmax"


@dataclass(frozen=True)
class FoFilterParams:
    """Parameters ``{a, b, alpha, beta}`` of ``b s^beta / (s^alpha + a)``.

    With ``family=Family.BANDSTOP`` the same numbers describe the reciprocal
    transfer function. ``alpha < 2`` is enforced unless ``allow_unstable``.
    """

    a: float
    b: float
    alpha: float
    beta: float
    family: Family = Family.BANDPASS
    allow_unstable: bool = False

    def __post_init__(self):
        for name in ("a", "b", "alpha", "beta"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite, got {getattr(self, name)!r}")
        if self.a <= 0:
            raise DomainError(f"pole coefficient a must be > 0, got {self.a}")
        if self.b <= 0:
            raise DomainError(f"zero coefficient b must be > 0, got {self.b}")
        if not 0 < self.beta < self.alpha:
            raise DomainError(
                f"need 0 < beta < alpha for band characteristics, got "
                f"alpha={self.alpha}, beta={self.beta}"
            )
        if self.alpha >= 2 and not self.allow_unstable:
            raise DomainError(
                f"alpha={self.alpha} >= 2 puts poles on or right of the j-omega axis; "
                "pass allow_unstable=True to evaluate anyway"
            )

    @classmethod
    def symmetric(cls, a, b, beta, family=Family.BANDPASS, allow_unstable=False):
        """Build the symmetric filter ``alpha = 2 beta``."""
        return cls(a, b, 2.0 * beta, beta, family, allow_unstable)

    @property
    def is_symmetric(self) -> bool:
        return abs(self.alpha - 2.0 * self.beta) <= SYMMETRY_TOL

    def with_family(self, family: Family) -> "FoFilterParams":
        return FoFilterParams(self.a, self.b, self.alpha, self.beta, family, self.allow_unstable)


@dataclass(frozen=True)
class FoSecondOrderBpParams:
    """Parameters of ``d s^alpha / (s^(2 alpha) + 2 a s^alpha + b)``."""

    a: float
    b: float
    d: float
    alpha: float

    def __post_init__(self):
        for name in ("a", "b", "d", "alpha"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite, got {getattr(self, name)!r}")
        if self.a < 0:
            raise DomainError(f"a must be >= 0, got {self.a}")
        if self.b <= 0 or self.d <= 0:
            raise DomainError(f"b and d must be > 0, got b={self.b}, d={self.d}")
        if not 0 < self.alpha <= 1:
            raise DomainError(f"need 0 < alpha <= 1, got {self.alpha}")


@dataclass(frozen=True)
class PeakReport:
    omega_m: float
    peak_magnitude: float
    method: PeakMethod


def _check_omega(omega):
    w = np.asarray(omega, dtype=float)
    if np.any(~(w > 0)):
        raise DomainError("omega must be > 0 (omega = 0 is handled by the DC asymptotes)")
    return w


def _out(x, like):
    return float(x) if np.ndim(like) == 0 else x


def jw_pow(omega: ArrayLike, order: float):
    """Principal value of ``(j omega)^order`` as a complex number (or array)."""
    w = _check_omega(omega)
    angle = order * math.pi / 2
    val = w**order * complex(math.cos(angle), math.sin(angle))
    return complex(val) if np.ndim(omega) == 0 else val


def transfer(p: FoFilterParams | FoSecondOrderBpParams, omega: ArrayLike):
    """Complex frequency response ``T(j omega)`` evaluated through :func:`jw_pow`."""
    if isinstance(p, FoSecondOrderBpParams):
        num = p.d * jw_pow(omega, p.alpha)
        den = jw_pow(omega, 2 * p.alpha) + 2 * p.a * jw_pow(omega, p.alpha) + p.b
    else:
        num = p.b * jw_pow(omega, p.beta)
        den = jw_pow(omega, p.alpha) + p.a
        if p.family is Family.BANDSTOP:
            num, den = den, num
    if np.any(den == 0):
        raise PoleOnAxisError(f"pole on the j-omega axis for {p}")
    return num / den


def _radicand_first_order(p: FoFilterParams, w):
    wa = w**p.alpha
    r = w ** (2 * p.alpha) + 2 * p.a * wa * math.cos(p.alpha * math.pi / 2) + p.a**2
    if np.any(r <= 0):
        raise PoleOnAxisError(f"pole on the j-omega axis for {p}")
    return r


def magnitude_bp(p: FoFilterParams, omega: ArrayLike):
    """``b w^beta / sqrt(w^(2 alpha) + 2 a w^alpha cos(alpha pi/2) + a^2)``."""
    w = _check_omega(omega)
    r = _radicand_first_order(p, w)
    return _out(p.b * w**p.beta / np.sqrt(r), omega)


def magnitude_bs(p: FoFilterParams, omega: ArrayLike):
    """Band-stop magnitude, the reciprocal of :func:`magnitude_bp`."""
    w = _check_omega(omega)
    r = _radicand_first_order(p, w)
    return _out(np.sqrt(r) / (p.b * w**p.beta), omega)


def magnitude_bp2(p: FoSecondOrderBpParams, omega: ArrayLike):
    """Magnitude of the fractional second-order band-pass structure."""
    w = _check_omega(omega)
    a, b, al = p.a, p.b, p.alpha
    c1 = math.cos(al * math.pi / 2)
    c2 = math.cos(al * math.pi)
    wa = w**al
    r = (
        w ** (4 * al)
        + 4 * a * w ** (3 * al) * c1
        + (4 * a * a + 2 * b * c2) * w ** (2 * al)
        + 4 * a * b * wa * c1
        + b * b
    )
    if np.any(r <= 0):
        raise PoleOnAxisError(f"pole on the j-omega axis for {p}")
    return _out(p.d * wa / np.sqrt(r), omega)


def magnitude(p: FoFilterParams | FoSecondOrderBpParams, omega: ArrayLike):
    """Dispatch to the closed-form magnitude for ``p``'s structure and family."""
    if isinstance(p, FoSecondOrderBpParams):
        return magnitude_bp2(p, omega)
    if p.family is Family.BANDSTOP:
        return magnitude_bs(p, omega)
    return magnitude_bp(p, omega)


def phase(p: FoFilterParams | FoSecondOrderBpParams, omega: ArrayLike):
    """Phase of ``T(j omega)`` in radians, wrapped to ``(-pi, pi]``."""
    ph = np.angle(transfer(p, omega))
    ph = np.where(ph <= -math.pi, ph + 2 * math.pi, ph)
    return _out(ph, omega)


def q_factor_bp(p: FoFilterParams, omega0: float) -> float:
    """Quality factor of a band-pass filter: its gain at the centre frequency."""
    return magnitude_bp(p, omega0)


def q_factor_bs(p: FoFilterParams, omega0: float) -> float:
    """Quality factor of a band-stop filter: ``1 / |T_BS(j omega0)|``."""
    return 1.0 / magnitude_bs(p, omega0)


def q_factor(p: FoFilterParams | FoSecondOrderBpParams, omega0: float) -> float:
    if isinstance(p, FoSecondOrderBpParams):
        return magnitude_bp2(p, omega0)
    if p.family is Family.BANDSTOP:
        return q_factor_bs(p, omega0)
    return q_factor_bp(p, omega0)


def peak_closed_form(p: FoFilterParams) -> PeakReport:
    """Peak (band-pass) or notch (band-stop) of a symmetric filter.

    For ``alpha = 2 beta`` the extremum sits at ``omega_m = a^(1/alpha)`` with
    band-pass gain ``b / sqrt(2 a (1 + cos(alpha pi / 2)))``.
    """
    if not p.is_symmetric:
        raise ModeError(
            f"closed-form peak needs alpha = 2 beta, got alpha={p.alpha}, beta={p.beta}"
        )
    omega_m = p.a ** (1.0 / p.alpha)
    denom = 2 * p.a * (1 + math.cos(p.alpha * math.pi / 2))
    if denom <= 0:
        raise PoleOnAxisError(f"pole on the j-omega axis for {p}")
    gain = p.b / math.sqrt(denom)
    if p.family is Family.BANDSTOP:
        gain = 1.0 / gain
    return PeakReport(omega_m, gain, PeakMethod.CLOSED_FORM)
