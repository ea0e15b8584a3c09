"""Power-law and two-segment broken-line regression in log-log coordinates.

All fits are unweighted ordinary least squares of ln phi against ln eta;
a power law phi = K * eta**p is a straight line there.  The two-segment
fit identifies the inner region (I) and the outer region (II) of a
velocity profile by exhaustive search over split positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import FitError
from .scaling import WallUnits

# Absolute floor added to the combined exponent uncertainty so that
# machine-noise-level stderr from noiseless data cannot flag a break.
_SIGNIFICANCE_FLOOR = 1e-9


@dataclass(frozen=True)
class PowerLawSegment:
    """One fitted power law phi = prefactor * eta**exponent.

    ``rss`` and ``stderr_exponent`` are computed in (ln eta, ln phi)
    coordinates with n - 2 degrees of freedom.
    """

    prefactor: float
    exponent: float
    eta_range: tuple[float, float]
    n_points: int
    rss: float
    stderr_exponent: float

    def phi_at(self, eta):
        return self.prefactor * np.asarray(eta, dtype=float) ** self.exponent

    def ln_phi_at(self, ln_eta):
        return math.log(self.prefactor) + self.exponent * np.asarray(ln_eta, dtype=float)


@dataclass(frozen=True)
class BrokenLineFit:
    """Two power-law segments covering a split of the ordered samples."""

    region1: PowerLawSegment
    region2: PowerLawSegment
    break_ln_eta: float
    total_rss: float
    split_index: int


def _as_log_arrays(points: Sequence[WallUnits]):
    ln_eta = np.log([p.eta for p in points])
    ln_phi = np.log([p.phi for p in points])
    return ln_eta, ln_phi


def _ols(x: np.ndarray, y: np.ndarray):
    """Closed-form OLS line fit; returns (slope, intercept, rss, sxx)."""
    xm = x.mean()
    ym = y.mean()
    dx = x - xm
    sxx = float(np.sum(dx * dx))
    if sxx == 0.0:
        raise FitError("degenerate fit: all ln eta values are equal")
    slope = float(np.sum(dx * (y - ym))) / sxx
    intercept = float(ym - slope * xm)
    resid = y - (slope * x + intercept)
    rss = float(np.sum(resid * resid))
    return slope, intercept, rss, sxx


def fit_power_law(points: Sequence[WallUnits]) -> PowerLawSegment:
    """Fit phi = K * eta**p by OLS in doubly logarithmic coordinates."""
    n = len(points)
    if n < 3:
        raise FitError(f"power-law fit needs at least 3 points, got {n}")
    ln_eta, ln_phi = _as_log_arrays(points)
    slope, intercept, rss, sxx = _ols(ln_eta, ln_phi)
    stderr = math.sqrt(max(rss, 0.0) / (n - 2) / sxx)
    return PowerLawSegment(
        prefactor=math.exp(intercept),
        exponent=slope,
        eta_range=(points[0].eta, points[-1].eta),
        n_points=n,
        rss=rss,
        stderr_exponent=stderr,
    )


def fit_broken_line(points: Sequence[WallUnits], min_seg: int = 3) -> BrokenLineFit:
    """Two-segment broken-line fit with exhaustive split search.

    Every split index k in [min_seg, n - min_seg] is tried; both parts are
    fitted independently (no continuity constraint) and the split with the
    smallest total residual sum of squares wins.  Ties are broken toward
    the split whose boundary is nearest the middle of the ln eta span, so
    the result is deterministic regardless of evaluation order.

    ``break_ln_eta`` is the intersection of the two fitted lines when it
    falls inside the data span, else the midpoint of ln eta between the
    two boundary samples.
    """
    n = len(points)
    if min_seg < 3:
        raise FitError(f"min_seg must be at least 3, got {min_seg}")
    if n < 2 * min_seg:
        raise FitError(
            f"broken-line fit needs at least {2 * min_seg} points, got {n}")

    ln_eta, _ = _as_log_arrays(points)
    mid = 0.5 * (ln_eta[0] + ln_eta[-1])

    best = None  # (total_rss, dist_to_mid, k, seg1, seg2)
    for k in range(min_seg, n - min_seg + 1):
        seg1 = fit_power_law(points[:k])
        seg2 = fit_power_law(points[k:])
        total = seg1.rss + seg2.rss
        boundary = 0.5 * (ln_eta[k - 1] + ln_eta[k])
        dist = abs(boundary - mid)
        if best is None or total < best[0] or (total == best[0] and dist < best[1]):
            best = (total, dist, k, seg1, seg2)

    total, _, k, seg1, seg2 = best
    if seg1.exponent != seg2.exponent:
        xi = ((math.log(seg1.prefactor) - math.log(seg2.prefactor))
              / (seg2.exponent - seg1.exponent))
        if ln_eta[0] <= xi <= ln_eta[-1]:
            break_ln_eta = xi
        else:
            break_ln_eta = 0.5 * (ln_eta[k - 1] + ln_eta[k])
    else:
        break_ln_eta = 0.5 * (ln_eta[k - 1] + ln_eta[k])

    return BrokenLineFit(
        region1=seg1,
        region2=seg2,
        break_ln_eta=float(break_ln_eta),
        total_rss=seg1.rss + seg2.rss,
        split_index=k,
    )


def significant_break(fit: BrokenLineFit, z: float = 2.0) -> bool:
    """Whether the two fitted exponents differ by more than z combined
    standard errors (strict inequality).

    Guards against reporting a second region when the outer structure is
    not actually revealed by the data.
    """
    gap = abs(fit.region1.exponent - fit.region2.exponent)
    combined = math.hypot(fit.region1.stderr_exponent,
                          fit.region2.stderr_exponent)
    return gap > z * combined + _SIGNIFICANCE_FLOOR
