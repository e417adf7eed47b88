"""Independent numerical verification tools.

Finite-difference discretization of the one-dimensional radial operator,
symmetric-tridiagonal eigenvalues by Sturm-sequence bisection, composite
Gauss-Legendre inner products, and node counting.  Nothing in here knows
the analytic spectrum; that is the point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .model import DomainError, PerlickIParams

__all__ = [
    "QuadratureSpec",
    "RadialGrid",
    "TridiagonalOperator",
    "discretize",
    "discretize_potential",
    "gram_matrix",
    "node_count",
    "sturm_count",
    "sturm_eigenvalues",
    "suggest_rmax",
]


@dataclass(frozen=True)
class RadialGrid:
    """Uniform interior grid on [r_min, r_max] with Dirichlet ends.

    Nodes are r_min + i h for i = 1..n_points with h = (r_max - r_min)/(n_points + 1);
    the endpoints themselves carry the boundary condition.
    """

    r_min: float
    r_max: float
    n_points: int

    def __post_init__(self):
        if not self.r_min > 0:
            raise DomainError("r_min must be positive (origin singularity excluded)")
        if not self.r_max > self.r_min:
            raise DomainError("r_max must exceed r_min")
        if self.n_points < 3:
            raise DomainError("need at least 3 interior points")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / (self.n_points + 1)

    def nodes(self) -> np.ndarray:
        return self.r_min + self.h * np.arange(1, self.n_points + 1)

    def truncation_factor(self, decay_rate: float) -> float:
        """exp(-2 c r_max): size of the Dirichlet truncation for a state ~ exp(-c r)."""
        return math.exp(-2.0 * decay_rate * self.r_max)


def suggest_rmax(decay_rates: Sequence[float], factor: float = 1e-12) -> float:
    """Smallest r_max with exp(-2 c r_max) < factor for every decay rate."""
    slowest = min(float(c) for c in decay_rates)
    if slowest <= 0:
        raise DomainError("all decay rates must be positive")
    return -math.log(factor) / (2.0 * slowest)


@dataclass(frozen=True)
class TridiagonalOperator:
    """Symmetric tridiagonal matrix (diagonal, off_diagonal)."""

    diagonal: np.ndarray
    off_diagonal: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diagonal, dtype=float)
        e = np.asarray(self.off_diagonal, dtype=float)
        if d.ndim != 1 or e.ndim != 1 or len(e) != len(d) - 1:
            raise DomainError("need len(off_diagonal) == len(diagonal) - 1")
        object.__setattr__(self, "diagonal", d)
        object.__setattr__(self, "off_diagonal", e)

    @property
    def n(self) -> int:
        return len(self.diagonal)

    def gershgorin(self) -> tuple[float, float]:
        d, e = self.diagonal, self.off_diagonal
        radius = np.zeros_like(d)
        radius[:-1] += np.abs(e)
        radius[1:] += np.abs(e)
        return float(np.min(d - radius)), float(np.max(d + radius))


def discretize_potential(potential: Callable, grid: RadialGrid) -> TridiagonalOperator:
    """Standard 3-point discretization of -d^2/dr^2 + V with Dirichlet ends."""
    r = grid.nodes()
    v = np.asarray(potential(r), dtype=float)
    if v.shape != r.shape:
        v = np.full_like(r, float(v))
    if not np.all(np.isfinite(v)):
        raise DomainError("potential evaluated non-finite on the grid")
    h2 = grid.h ** 2
    return TridiagonalOperator(2.0 / h2 + v, np.full(grid.n_points - 1, -1.0 / h2))


def discretize(q: float, p: PerlickIParams, grid: RadialGrid) -> TridiagonalOperator:
    """Discretize H_q = -d^2/dr^2 + k^2 q(q-1)/sinh^2(k r) - 2 mu k coth(k r)."""
    if not q > 0:
        raise DomainError(f"shape parameter must be positive, got {q}")
    if not p.k > 0:
        raise DomainError("discretize needs k > 0")
    k, mu = p.k, p.mu

    def v(r):
        sh = np.sinh(k * r)
        return k * k * q * (q - 1.0) / sh ** 2 - 2.0 * mu * k / np.tanh(k * r)

    return discretize_potential(v, grid)


def sturm_count(op: TridiagonalOperator, t: float) -> int:
    """Number of eigenvalues below t (Sturm sign count).

    LDL^T-style recurrence; a vanishing pivot is floored to -pivmin and
    counted as negative (the standard convention), so the count cannot
    stall at exact-eigenvalue thresholds.
    """
    diag = op.diagonal.tolist()
    off2 = (op.off_diagonal ** 2).tolist()
    lo, hi = op.gershgorin()
    pivmin = max(1e-300, 1e-18 * max(abs(lo), abs(hi), 1.0))
    d = 1.0
    count = 0
    t = float(t)
    prev = 0.0
    for i, a in enumerate(diag):
        d = (a - t) - (prev / d if i else 0.0)
        if abs(d) < pivmin:
            d = -pivmin
        if d < 0.0:
            count += 1
        if i < len(off2):
            prev = off2[i]
    return count


def sturm_eigenvalues(op: TridiagonalOperator, count: int,
                      rel_width: float = 1e-12) -> np.ndarray:
    """The ``count`` smallest eigenvalues, ascending, by bisection.

    Each eigenvalue is bracketed on the Gershgorin interval until the
    bracket width drops below rel_width * max(1, |midpoint|).  Brackets
    shrink monotonically, so the result is deterministic.
    """
    if count < 1 or count > op.n:
        raise DomainError(f"count must be in 1..{op.n}, got {count}")
    glo, ghi = op.gershgorin()
    lo = np.full(count, glo)
    hi = np.full(count, ghi)
    want = np.arange(1, count + 1)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        counts = np.array([sturm_count(op, m) for m in mid])
        above = counts >= want
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
        if np.all(hi - lo <= rel_width * np.maximum(1.0, np.abs(mid))):
            break
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Gauss-Legendre rule: ``panels`` panels of ``nodes`` points."""

    lo: float
    hi: float
    panels: int = 64
    nodes: int = 16

    def points_weights(self) -> tuple[np.ndarray, np.ndarray]:
        x, w = np.polynomial.legendre.leggauss(self.nodes)
        edges = np.linspace(self.lo, self.hi, self.panels + 1)
        a, b = edges[:-1], edges[1:]
        half = 0.5 * (b - a)
        pts = (0.5 * (a + b)[:, None] + half[:, None] * x[None, :]).ravel()
        wts = (half[:, None] * w[None, :]).ravel()
        return pts, wts


def gram_matrix(states: Sequence[Callable], weight: Callable,
                quad: QuadratureSpec) -> np.ndarray:
    """Matrix of <psi_i | psi_j>_w by composite Gauss-Legendre quadrature."""
    pts, wts = quad.points_weights()
    wvals = np.asarray(weight(pts), dtype=float)
    if wvals.shape != pts.shape:
        wvals = np.full_like(pts, float(wvals))
    table = np.empty((len(states), len(pts)))
    for i, psi in enumerate(states):
        vals = np.asarray(psi(pts), dtype=float)
        if not np.all(np.isfinite(vals)):
            raise DomainError(f"state {i} evaluated non-finite at a quadrature node")
        table[i] = vals
    return (table * wvals * wts) @ table.T


def node_count(psi: Callable, grid: RadialGrid) -> int:
    """Strict sign changes of psi across consecutive interior grid nodes."""
    vals = np.asarray(psi(grid.nodes()), dtype=float)
    return int(np.sum(vals[:-1] * vals[1:] < 0.0))
