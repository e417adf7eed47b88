"""Geometry of the Perlick type-I (deformed Kepler) radial family.

Parameters, coordinate charts and the maps between them, scalar-product
weights, the central potential, and scalar-curvature formulas.  Everything
in this module is a pure function of its inputs; the operator machinery
built on top of it lives in `susy` and `quantize`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

__all__ = [
    "BOUNDARY_PAD",
    "Chart",
    "CoordinateChart",
    "DomainError",
    "Frame",
    "PerlickIParams",
    "RadialConformalFactor",
    "WeightFunction",
    "beta1_conformal_factor",
    "chart_map",
    "conformal_curvature",
    "conformal_curvature_radial",
    "coordinate_chart",
    "family1_potential",
    "metric_coefficient",
    "perlick_curvature",
    "weight_function",
]

# Evaluations closer than this to a finite chart boundary are rejected
# instead of returning huge values.
BOUNDARY_PAD = 1e-10


class DomainError(ValueError):
    """An evaluation point or parameter left its domain of validity."""


@dataclass(frozen=True)
class PerlickIParams:
    """Physical and geometric parameters of the type-I family.

    beta     deformation exponent of the radial metric (> 0); beta = 1 is
             the constant-curvature (generalized Kepler) case
    k        curvature scale, k**2 > 0 branch; k = 0 is accepted as the
             exact flat (hydrogen) limit wherever that limit is finite
    mu       coupling strength of the central potential (> 0)
    g_shift  additive constant carried through potentials and spectra
    """

    beta: float = 1.0
    k: float = 1.0
    mu: float = 1.0
    g_shift: float = 0.0

    def __post_init__(self):
        if not self.beta > 0:
            raise DomainError(f"beta must be positive, got {self.beta}")
        if not self.k >= 0:
            raise DomainError(f"k must be nonnegative, got {self.k}")
        if not self.mu > 0:
            raise DomainError(f"mu must be positive, got {self.mu}")


class Chart(enum.Enum):
    """Radial coordinate charts of the type-I geometry."""

    HYPERBOLIC = "hyperbolic"      # geodesic radial coordinate r in (0, inf)
    FLAT_RADIUS = "flat_radius"    # r' = sinh(k r)/k in (0, inf)
    CONFORMAL = "conformal"        # conformal radius in [0, 1/k), primary branch


class Frame(enum.Enum):
    """Stations of the similarity chain, each with its own weight.

    The two conformal frames share the conformal chart but differ by the
    sqrt(1 - k^2 x^2) similarity factor.
    """

    HYPERBOLIC = "hyperbolic"
    FLAT_RADIUS = "flat_radius"
    CONFORMAL_LB = "conformal_lb"
    CONFORMAL_VM = "conformal_vm"

    @property
    def chart(self) -> Chart:
        return _FRAME_CHART[self]


_FRAME_CHART = {
    Frame.HYPERBOLIC: Chart.HYPERBOLIC,
    Frame.FLAT_RADIUS: Chart.FLAT_RADIUS,
    Frame.CONFORMAL_LB: Chart.CONFORMAL,
    Frame.CONFORMAL_VM: Chart.CONFORMAL,
}


@dataclass(frozen=True)
class CoordinateChart:
    """A chart together with its domain interval and guard logic."""

    chart: Chart
    params: PerlickIParams
    branch: str = "primary"   # conformal chart only: "primary" or "upper"

    def __post_init__(self):
        if self.branch not in ("primary", "upper"):
            raise DomainError(f"unknown chart branch {self.branch!r}")
        if self.branch == "upper" and self.chart is not Chart.CONFORMAL:
            raise DomainError("only the conformal chart has an upper branch")

    def interval(self) -> tuple[float, float]:
        """Open interval (lo, hi) of the chart domain; hi may be inf."""
        if self.chart is Chart.CONFORMAL:
            k = self.params.k
            if self.branch == "upper":
                if k == 0:
                    raise DomainError("upper conformal branch undefined at k = 0")
                return 1.0 / k, math.inf
            return 0.0, (math.inf if k == 0 else 1.0 / k)
        return 0.0, math.inf

    def contains(self, x) -> bool:
        lo, hi = self.interval()
        xa = np.asarray(x, dtype=float)
        return bool(np.all((xa > lo) & (xa < hi)))

    def require(self, x):
        """Reject points outside the domain or within BOUNDARY_PAD of a finite edge."""
        lo, hi = self.interval()
        xa = np.asarray(x, dtype=float)
        bad = ~np.isfinite(xa) | (xa <= lo + BOUNDARY_PAD)
        if math.isfinite(hi):
            bad = bad | (xa >= hi - BOUNDARY_PAD)
        if np.any(bad):
            raise DomainError(
                f"{self.chart.value}/{self.branch} chart: point outside "
                f"({lo}, {hi}) or within {BOUNDARY_PAD} of its boundary"
            )
        return x


def coordinate_chart(chart: Chart, p: PerlickIParams, branch: str = "primary") -> CoordinateChart:
    return CoordinateChart(chart, p, branch)


def _positive_radius(r):
    ra = np.asarray(r, dtype=float)
    if np.any(~np.isfinite(ra)) or np.any(ra <= 0):
        raise DomainError("radius must be positive and finite")
    return ra


def _like(x, out):
    """Return a scalar when the input was scalar, else the array."""
    if np.isscalar(x) or getattr(x, "ndim", 1) == 0:
        return float(out)
    return out


# ---------------------------------------------------------------------------
# metric, potential, curvature
# ---------------------------------------------------------------------------

def metric_coefficient(r, p: PerlickIParams):
    """Inverse radial metric coefficient f(r) = beta^2 (1 + k^2 r^2)."""
    ra = _positive_radius(r)
    return _like(r, p.beta ** 2 * (1.0 + (p.k * ra) ** 2))


def family1_potential(r, p: PerlickIParams):
    """Central potential -mu sqrt(1/r^2 + k^2) + G.

    The square root carries 1/r^2: this is the form with the plain Kepler
    flat limit -mu/r and with -mu k coth(k r_h) under r = sinh(k r_h)/k.
    """
    ra = _positive_radius(r)
    return _like(r, -p.mu * np.sqrt(1.0 / ra ** 2 + p.k ** 2) + p.g_shift)


def perlick_curvature(r, p: PerlickIParams):
    """Scalar curvature of the type-I space in the conformal chart.

    R(r) = -((beta^2 - 1)(k^4 r^(2 beta) + r^(-2 beta)) + 2 k^2 (1 + 5 beta^2)) / 2

    For beta = 1 this is the constant -6 k^2; otherwise the curvature
    genuinely depends on the radius.
    """
    ra = _positive_radius(r)
    b2 = p.beta ** 2
    out = -0.5 * ((b2 - 1.0) * (p.k ** 4 * ra ** (2 * p.beta) + ra ** (-2 * p.beta))
                  + 2.0 * p.k ** 2 * (1.0 + 5.0 * b2))
    return _like(r, out)


def conformal_curvature(f: Callable, x, grad: Optional[Sequence[float]] = None,
                        hess_diag: Optional[Sequence[float]] = None, h: float = 1e-3):
    """Scalar curvature of the 3-metric f(x) (dx1^2 + dx2^2 + dx3^2).

    R = sum_i (3 f_i^2 - 4 f f_ii) / (2 f^3), with first and diagonal
    second partials either supplied or taken by central differences of
    step ``h``.
    """
    xa = np.asarray(x, dtype=float)
    if xa.shape != (3,):
        raise DomainError("evaluation point must be a 3-vector")
    f0 = float(f(xa))
    if not f0 > 0:
        raise DomainError(f"conformal factor must be positive, got {f0}")
    if grad is None or hess_diag is None:
        g = np.empty(3)
        hd = np.empty(3)
        for i in range(3):
            e = np.zeros(3)
            e[i] = h
            fp, fm = float(f(xa + e)), float(f(xa - e))
            g[i] = (fp - fm) / (2 * h)
            hd[i] = (fp - 2 * f0 + fm) / h ** 2
        grad = g if grad is None else np.asarray(grad, float)
        hess_diag = hd if hess_diag is None else np.asarray(hess_diag, float)
    grad = np.asarray(grad, dtype=float)
    hess_diag = np.asarray(hess_diag, dtype=float)
    return float(np.sum(3.0 * grad ** 2 - 4.0 * f0 * hess_diag) / (2.0 * f0 ** 3))


def conformal_curvature_radial(fr: Callable, rho: float, dfr=None, d2fr=None, h: float = 1e-3):
    """Radial reduction of `conformal_curvature` for f = f(|x|).

    R = (3 f'^2 - 4 f (f'' + 2 f'/rho)) / (2 f^3).
    """
    rho = float(rho)
    if rho <= 0:
        raise DomainError("rho must be positive")
    f0 = float(fr(rho))
    if not f0 > 0:
        raise DomainError(f"conformal factor must be positive, got {f0}")
    if dfr is None:
        dfr = (float(fr(rho + h)) - float(fr(rho - h))) / (2 * h)
    if d2fr is None:
        d2fr = (float(fr(rho + h)) - 2 * f0 + float(fr(rho - h))) / h ** 2
    return (3.0 * dfr ** 2 - 4.0 * f0 * (d2fr + 2.0 * dfr / rho)) / (2.0 * f0 ** 3)


@dataclass(frozen=True)
class RadialConformalFactor:
    """A radial conformal factor with analytic first and second derivatives."""

    fn: Callable
    d1: Callable
    d2: Callable
    guard: Optional[Callable] = None

    def __call__(self, rho):
        if self.guard is not None:
            self.guard(rho)
        return self.fn(rho)

    def deriv(self, rho):
        if self.guard is not None:
            self.guard(rho)
        return self.d1(rho)

    def deriv2(self, rho):
        if self.guard is not None:
            self.guard(rho)
        return self.d2(rho)


def beta1_conformal_factor(p: PerlickIParams, guard_pad: float = BOUNDARY_PAD) -> RadialConformalFactor:
    """Conformal factor f(rho) = 4/(1 - k^2 rho^2)^2 of the beta = 1 space.

    Evaluations with |1 - k^2 rho^2| below ``guard_pad`` raise DomainError
    rather than returning huge values.
    """
    k2 = p.k ** 2

    def guard(rho):
        d = 1.0 - k2 * np.asarray(rho, dtype=float) ** 2
        if np.any(np.abs(d) < guard_pad):
            raise DomainError("conformal factor evaluated too close to its pole")

    def fn(rho):
        d = 1.0 - k2 * np.asarray(rho, dtype=float) ** 2
        return _like(rho, 4.0 / d ** 2)

    def d1(rho):
        ra = np.asarray(rho, dtype=float)
        d = 1.0 - k2 * ra ** 2
        return _like(rho, 16.0 * k2 * ra / d ** 3)

    def d2(rho):
        ra = np.asarray(rho, dtype=float)
        d = 1.0 - k2 * ra ** 2
        return _like(rho, 16.0 * k2 * (1.0 + 5.0 * k2 * ra ** 2) / d ** 4)

    return RadialConformalFactor(fn, d1, d2, guard)


# ---------------------------------------------------------------------------
# chart maps
# ---------------------------------------------------------------------------

def _to_hyperbolic(chart: Chart, x, k: float):
    if chart is Chart.HYPERBOLIC:
        return x
    if chart is Chart.FLAT_RADIUS:
        return np.arcsinh(k * x) / k if k > 0 else x
    # conformal, primary branch
    return 2.0 * np.arctanh(k * x) / k if k > 0 else 2.0 * x


def _from_hyperbolic(chart: Chart, r, k: float):
    if chart is Chart.HYPERBOLIC:
        return r
    if chart is Chart.FLAT_RADIUS:
        return np.sinh(k * r) / k if k > 0 else r
    return np.tanh(0.5 * k * r) / k if k > 0 else 0.5 * r


def chart_map(frm: Chart, to: Chart, x, p: PerlickIParams):
    """Map a radial coordinate between charts (primary branches only).

    The maps are strictly monotone bijections; round trips reproduce the
    input to ~1e-15 relative.  Cancellation-prone compositions use their
    algebraically stabilized closed forms.
    """
    coordinate_chart(frm, p).require(x)
    if frm is to:
        return x
    k = p.k
    xa = np.asarray(x, dtype=float)
    if frm is Chart.FLAT_RADIUS and to is Chart.CONFORMAL:
        # (sqrt(1 + k^2 x^2) - 1)/(k^2 x) without the small-k x cancellation
        out = xa / (1.0 + np.sqrt(1.0 + (k * xa) ** 2))
    elif frm is Chart.CONFORMAL and to is Chart.FLAT_RADIUS:
        out = 2.0 * xa / (1.0 - (k * xa) ** 2)
    else:
        out = _from_hyperbolic(to, _to_hyperbolic(frm, xa, k), k)
    coordinate_chart(to, p).require(out)
    return _like(x, out)


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightFunction:
    """Nonnegative scalar-product weight attached to a frame's chart."""

    frame: Frame
    chart: Chart
    formula: str
    _fn: Callable

    def __call__(self, x):
        xa = np.asarray(x, dtype=float)
        if np.any(xa < 0):
            raise DomainError("weight evaluated at negative coordinate")
        return _like(x, self._fn(xa))


def weight_function(frame: Frame, p: PerlickIParams) -> WeightFunction:
    """The weight making each frame's Hamiltonian symmetric.

    hyperbolic     1
    flat_radius    x^2 / sqrt(1 + k^2 x^2)
    conformal_lb   8 x^2 / (1 - k^2 x^2)^3
    conformal_vm   8 x^2 / (1 - k^2 x^2)^2
    """
    k2 = p.k ** 2
    if frame is Frame.HYPERBOLIC:
        return WeightFunction(frame, frame.chart, "1", lambda x: np.ones_like(x))
    if frame is Frame.FLAT_RADIUS:
        return WeightFunction(frame, frame.chart, "x^2/sqrt(1+k^2 x^2)",
                              lambda x: x ** 2 / np.sqrt(1.0 + k2 * x ** 2))
    if frame is Frame.CONFORMAL_LB:
        return WeightFunction(frame, frame.chart, "8 x^2/(1-k^2 x^2)^3",
                              lambda x: 8.0 * x ** 2 / (1.0 - k2 * x ** 2) ** 3)
    if frame is Frame.CONFORMAL_VM:
        return WeightFunction(frame, frame.chart, "8 x^2/(1-k^2 x^2)^2",
                              lambda x: 8.0 * x ** 2 / (1.0 - k2 * x ** 2) ** 2)
    raise DomainError(f"unknown frame {frame}")
