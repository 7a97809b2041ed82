"""Beveridge-curve estimation: log-log OLS per regime.

The regression is of log vacancy rate on log unemployment rate, with an
intercept and natural logs throughout. The elasticity is minus the
slope. Standard errors are classical homoskedastic OLS errors; serial
correlation leaves the point estimate unchanged and inference is not
used downstream, so no HAC correction is applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence, TextIO

import numpy as np

from .errors import DegenerateDataError, DomainError, SampleSizeError

if TYPE_CHECKING:
    from .ingest import LaborMarketPanel, PanelRow
    from .regimes import RegimeTable


@dataclass(frozen=True)
class ElasticityEstimate:
    """Per-regime isoelastic fit: v = exp(log_v0) * u ** (-epsilon)."""

    label: str
    epsilon: float
    log_v0: float
    se_epsilon: float
    r_squared: float
    n_obs: int

    def __post_init__(self):
        if not self.epsilon > 0.0:
            raise DegenerateDataError(
                f"estimated elasticity must be positive, got {self.epsilon} ({self.label!r})"
            )
        if self.se_epsilon < 0.0 or not 0.0 <= self.r_squared <= 1.0 or self.n_obs < 2:
            raise DegenerateDataError(f"malformed estimate for {self.label!r}")


def fit_elasticity(rows: Sequence["PanelRow"], label: str = "") -> ElasticityEstimate:
    """OLS of ln v on ln u over a panel slice.

    Requires at least 3 rows and variation in u. Returns the elasticity
    (minus the slope), the log intercept, the classical standard error of
    the slope and the coefficient of determination.
    """
    n = len(rows)
    if n < 3:
        raise SampleSizeError(f"need at least 3 rows to fit a curve, got {n} ({label!r})")
    x = np.log(np.array([r.u for r in rows], dtype=float))
    y = np.log(np.array([r.v for r in rows], dtype=float))
    dx = x - x.mean()
    sxx = float(dx @ dx)
    if sxx <= 0.0:
        raise DegenerateDataError(f"log unemployment has zero variance ({label!r})")
    slope = float(dx @ (y - y.mean())) / sxx
    intercept = float(y.mean() - slope * x.mean())
    resid = y - (intercept + slope * x)
    ssr = float(resid @ resid)
    sst = float((y - y.mean()) @ (y - y.mean()))
    r_squared = 1.0 if sst == 0.0 else 1.0 - ssr / sst
    r_squared = min(max(r_squared, 0.0), 1.0)
    se = float(np.sqrt(max(ssr, 0.0) / (n - 2) / sxx))
    return ElasticityEstimate(label, -slope, intercept, se, r_squared, n)


def fit_all(panel: "LaborMarketPanel", table: "RegimeTable") -> list[ElasticityEstimate]:
    """One estimate per regime, in regime order."""
    estimates = []
    for regime in table:
        rows = [r for r in panel if regime.contains(r.quarter)]
        try:
            estimates.append(fit_elasticity(rows, label=regime.label))
        except (SampleSizeError, DegenerateDataError) as exc:
            raise type(exc)(f"regime {regime.label!r}: {exc}") from None
    return estimates


def predicted_vacancy(log_v0: float, epsilon: float, u: float) -> float:
    """Vacancy rate on the fitted curve at unemployment u (unclamped)."""
    if u <= 0.0:
        raise DomainError(f"unemployment rate must be positive, got {u}")
    return float(np.exp(log_v0) * u ** (-epsilon))


def dmp_elasticity(alpha: float, u: float) -> float:
    """Beveridge elasticity implied by a Cobb-Douglas matching function.

    With matching elasticity alpha and unemployment rate u the implied
    curve elasticity is (alpha + u/(1-u)) / (1-alpha).
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"matching elasticity must be in (0,1), got {alpha}")
    if not 0.0 < u < 1.0:
        raise DomainError(f"unemployment rate must be in (0,1), got {u}")
    return (alpha + u / (1.0 - u)) / (1.0 - alpha)


def write_estimates_csv(estimates: Sequence[ElasticityEstimate], table: "RegimeTable", stream: TextIO) -> None:
    stream.write("regime,start,end,epsilon,se,log_v0,r2,n_obs\n")
    by_label = {e.label: e for e in estimates}
    for regime in table:
        e = by_label[regime.label]
        stream.write(
            f"{regime.label},{regime.start},{regime.end},"
            f"{e.epsilon:.8g},{e.se_epsilon:.8g},{e.log_v0:.8g},{e.r_squared:.8g},{e.n_obs}\n"
        )
