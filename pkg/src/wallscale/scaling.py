"""Closed-form mean-velocity laws and the envelope of the scaling family.

The inner self-similar region of a wall-bounded turbulent shear flow follows
a Reynolds-number-dependent power law

    phi = (ln Re / sqrt(3) + 5/2) * eta**(3 / (2 ln Re))

in wall units (eta = u_* y / nu, phi = u / u_*).  This module houses that
law, the classical logarithmic law it is often mistaken for, and the
numerically computed lower envelope of the one-parameter family of scaling
curves.  Natural logarithms are used everywhere internally; base-10 appears
only at presentation time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .errors import BracketError, DomainError

SQRT3 = math.sqrt(3.0)

# Universal constants of the scaling law phi = (C0 ln Re + C1) eta^(c/ln Re).
SCALING_C = 1.5
SCALING_C0 = 1.0 / SQRT3
SCALING_C1 = 2.5

# Default search bracket for the envelope touch point, in ln Re.  Covers
# Re from about 55 to 1e26, far beyond any measured flow.
DEFAULT_ENVELOPE_BRACKET = (4.0, 60.0)

_ENVELOPE_SCAN_POINTS = 256
_ENVELOPE_REL_TOL = 1e-8


@dataclass(frozen=True)
class WallUnits:
    """One velocity sample in wall units: eta = u_* y / nu, phi = u / u_*."""

    eta: float
    phi: float

    def __post_init__(self):
        if not (isinstance(self.eta, (int, float)) and math.isfinite(self.eta)
                and self.eta > 0):
            raise DomainError(f"eta must be positive and finite, got {self.eta!r}")
        if not (isinstance(self.phi, (int, float)) and math.isfinite(self.phi)
                and self.phi > 0):
            raise DomainError(f"phi must be positive and finite, got {self.phi!r}")


@dataclass(frozen=True)
class ScalingLawParams:
    """Parameters of one member of the scaling-law family.

    ``alpha`` and ``prefactor`` are redundant with ``ln_re`` and must be
    mutually consistent; use :meth:`from_ln_re` to construct.
    """

    ln_re: float
    alpha: float
    prefactor: float

    def __post_init__(self):
        if not self.ln_re > 0:
            raise DomainError(f"ln_re must be positive, got {self.ln_re!r}")
        if abs(self.alpha - 3.0 / (2.0 * self.ln_re)) > 1e-12:
            raise DomainError("alpha inconsistent with ln_re")
        if abs(self.prefactor - (self.ln_re / SQRT3 + 2.5)) > 1e-12:
            raise DomainError("prefactor inconsistent with ln_re")

    @classmethod
    def from_ln_re(cls, ln_re: float) -> "ScalingLawParams":
        return cls(ln_re=ln_re,
                   alpha=alpha_of_ln_re(ln_re),
                   prefactor=ln_re / SQRT3 + 2.5)


@dataclass(frozen=True)
class LogLawParams:
    """Logarithmic law phi = ln(eta)/kappa + c_offset."""

    kappa: float
    c_offset: float

    def __post_init__(self):
        if not self.kappa > 0:
            raise DomainError(f"kappa must be positive, got {self.kappa!r}")


@dataclass(frozen=True)
class EnvelopePoint:
    """One point of the lower envelope of the scaling-law family.

    ``ln_re_touch`` is the ln Re of the family member the envelope touches
    at this abscissa.
    """

    ln_eta: float
    phi_env: float
    ln_re_touch: float


def alpha_of_ln_re(ln_re: float) -> float:
    """Exponent of the scaling law, alpha = 3 / (2 ln Re)."""
    if not ln_re > 0:
        raise DomainError(f"ln_re must be positive, got {ln_re!r}")
    return 3.0 / (2.0 * ln_re)


def scaling_law_phi(eta, ln_re):
    """Evaluate the scaling law (ln Re/sqrt(3) + 5/2) * eta**(3/(2 ln Re)).

    Accepts scalars or numpy arrays (broadcasting applies); scalar inputs
    return a plain float.
    """
    eta_a = np.asarray(eta, dtype=float)
    ln_re_a = np.asarray(ln_re, dtype=float)
    if not np.all(eta_a > 0):
        raise DomainError("eta must be positive")
    if not np.all(ln_re_a > 0):
        raise DomainError("ln_re must be positive")
    out = (ln_re_a / SQRT3 + 2.5) * eta_a ** (1.5 / ln_re_a)
    if np.isscalar(eta) and np.isscalar(ln_re):
        return float(out)
    return out


def log_law_phi(eta, params: LogLawParams):
    """Evaluate the logarithmic law ln(eta)/kappa + c_offset."""
    eta_a = np.asarray(eta, dtype=float)
    if not np.all(eta_a > 0):
        raise DomainError("eta must be positive")
    out = np.log(eta_a) / params.kappa + params.c_offset
    return float(out) if np.isscalar(eta) else out


def envelope_at(ln_eta: float,
                ln_re_bracket=DEFAULT_ENVELOPE_BRACKET) -> EnvelopePoint:
    """Lower envelope of the scaling-law family at fixed ln eta.

    For fixed eta the family member value grows without bound both as
    ln Re -> 0+ and as ln Re -> infinity, so the envelope is the pointwise
    minimum over ln Re.  The minimizer is located by a coarse scan followed
    by golden-section refinement to relative tolerance 1e-8.

    Raises
    ------
    BracketError
        If the coarse minimum sits on a bracket endpoint, which signals
        that the bracket excludes the touch point.
    """
    if not ln_eta > 0:
        raise DomainError(f"ln_eta must be positive, got {ln_eta!r}")
    lo, hi = float(ln_re_bracket[0]), float(ln_re_bracket[1])
    if not (0 < lo < hi):
        raise DomainError(f"invalid ln_re bracket {ln_re_bracket!r}")

    eta = math.exp(ln_eta)

    def objective(ln_re):
        return (ln_re / SQRT3 + 2.5) * math.exp(1.5 * ln_eta / ln_re)

    grid = np.linspace(lo, hi, _ENVELOPE_SCAN_POINTS)
    values = scaling_law_phi(eta, grid)
    i = int(np.argmin(values))
    if i == 0 or i == len(grid) - 1:
        raise BracketError(
            f"envelope minimum at bracket endpoint ln_re={grid[i]:.6g}; "
            "the bracket excludes the touch point")

    result = optimize.minimize_scalar(
        objective,
        bracket=(grid[i - 1], grid[i], grid[i + 1]),
        method="golden",
        options={"xtol": _ENVELOPE_REL_TOL},
    )
    ln_re_touch = float(result.x)
    return EnvelopePoint(ln_eta=float(ln_eta),
                         phi_env=objective(ln_re_touch),
                         ln_re_touch=ln_re_touch)


def fit_log_law(ln_eta, phi) -> LogLawParams:
    """Ordinary least squares of phi against ln eta, as effective log-law
    parameters: kappa = 1/slope, c_offset = intercept."""
    x = np.asarray(ln_eta, dtype=float)
    y = np.asarray(phi, dtype=float)
    xm = x.mean()
    ym = y.mean()
    sxx = float(np.sum((x - xm) ** 2))
    if sxx == 0.0:
        raise DomainError("all ln_eta values identical, line fit degenerate")
    slope = float(np.sum((x - xm) * (y - ym))) / sxx
    intercept = ym - slope * xm
    if slope <= 0:
        raise DomainError(f"nonpositive slope {slope!r}, no effective kappa")
    return LogLawParams(kappa=1.0 / slope, c_offset=float(intercept))


def envelope_line_fit(ln_eta_range=(5.0, 10.0), n_points: int = 50,
                      ln_re_bracket=DEFAULT_ENVELOPE_BRACKET) -> LogLawParams:
    """Fit a straight line to the envelope over an ln eta range.

    Returns the effective logarithmic-law parameters of the envelope:
    the envelope in the (ln eta, phi) plane is close to a straight line
    with kappa near 0.4 and offset near 5.1.
    """
    if n_points < 10:
        raise DomainError(f"n_points must be at least 10, got {n_points}")
    lo, hi = float(ln_eta_range[0]), float(ln_eta_range[1])
    if not lo < hi:
        raise DomainError(f"invalid ln_eta range {ln_eta_range!r}")
    xs = np.linspace(lo, hi, n_points)
    ys = np.array([envelope_at(x, ln_re_bracket).phi_env for x in xs])
    return fit_log_law(xs, ys)
