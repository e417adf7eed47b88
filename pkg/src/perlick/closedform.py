"""Closed-form bound states via Jacobi polynomials, and the similarity
bookkeeping that ties them to the ladder-built states.

In the conformal chart the (n, l) bound state is, up to normalization,

    psi_{n,l}(x) = exp(-2 mu artanh(k x)/(k s)) x^(n+l) (1-k^2 x^2)^(-(s-1/2))
                   * P_n^(alpha, -alpha)( (1+k^2 x^2)/(2 k x) ),   s = n+l+1,

with alpha = (mu - k s^2)/(k s).  The Jacobi argument is >= 1 on the
physical domain; the evaluation is polynomial, so that is legitimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .model import (Chart, DomainError, Frame, PerlickIParams, chart_map,
                    coordinate_chart)
from .susy import LadderWavefunction, build_eigenfunction

__all__ = [
    "JacobiDegeneracyError",
    "JacobiParams",
    "closedform_eigenfunction",
    "closedform_energy",
    "jacobi_eval",
    "physical_jacobi_params",
    "similarity_transport",
    "transported_ladder_state",
]


class JacobiDegeneracyError(ValueError):
    """Three-term recurrence hit a vanishing leading coefficient."""


@dataclass(frozen=True)
class JacobiParams:
    """Degree and exponents (n, alpha, beta_j) of a Jacobi polynomial."""

    n: int
    alpha: float
    beta_j: float

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise DomainError(f"degree must be a nonnegative integer, got {self.n}")


def physical_jacobi_params(n: int, l: int, mu: float, k: float) -> JacobiParams:
    """Jacobi parameters of the (n, l) bound state.

    alpha = (mu - k s^2)/(k s) and beta_j = -(mu + k s^2)/(k s) = -alpha - 2s.
    The pair (alpha, -alpha) seen in print cannot be right: it would give
    the first excited state no node; (alpha, -alpha - 2s) reproduces the
    ladder polynomials identically (checked coefficient by coefficient).
    Since alpha + beta_j = -2s and the degree never exceeds s - 1, the
    recurrence stays clear of its degenerate denominators.
    """
    if k <= 0:
        raise DomainError("physical Jacobi parameters need k > 0")
    s = n + l + 1
    alpha = (mu - k * s * s) / (k * s)
    return JacobiParams(n, alpha, -alpha - 2.0 * s)


def jacobi_eval(jp: JacobiParams, x):
    """P_n^(alpha, beta)(x) by the forward three-term recurrence.

    Normalization P_n(1) = C(n+alpha, n); P_0 = 1 and
    P_1 = (alpha - beta)/2 + (alpha + beta + 2) x / 2.  Stable for the
    polynomial degrees used here (n <= ~50), any real x.
    """
    n, a, b = jp.n, jp.alpha, jp.beta_j
    xa = np.asarray(x, dtype=float)
    scalar = np.isscalar(x) or getattr(x, "ndim", 1) == 0
    p_prev = np.ones_like(xa)
    if n == 0:
        return float(p_prev) if scalar else p_prev
    p_cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * xa
    for m in range(2, n + 1):
        c1 = 2.0 * m * (m + a + b) * (2.0 * m + a + b - 2.0)
        if c1 == 0.0:
            raise JacobiDegeneracyError(
                f"recurrence degenerate at degree {m} for alpha+beta = {a + b}")
        c2 = (2.0 * m + a + b - 1.0) * (a * a - b * b)
        c3 = ((2.0 * m + a + b - 2.0) * (2.0 * m + a + b - 1.0)
              * (2.0 * m + a + b))
        c4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * (2.0 * m + a + b)
        p_next = ((c2 + c3 * xa) * p_cur - c4 * p_prev) / c1
        p_prev, p_cur = p_cur, p_next
    return float(p_cur) if scalar else p_cur


def _require_bound(n: int, l: int, mu: float, k: float) -> int:
    if n < 0 or l < 0 or int(n) != n or int(l) != l:
        raise DomainError("quantum numbers must be nonnegative integers")
    s = n + l + 1
    if k > 0 and not s * s < mu / k:
        raise DomainError(
            f"level (n={n}, l={l}) is not bound: (n+l+1)^2 = {s * s} >= mu/k = {mu / k}")
    return s


def closedform_energy(n: int, l: int, mu: float, k: float, g_shift: float = 0.0) -> float:
    """E(n,l) = -mu^2/(2 s^2) - k^2 s^2/2 + k^2/8 with s = n+l+1.

    Equals factorization_energy(s)/2 + k^2/8; levels with equal n+l are
    exactly degenerate.
    """
    s = _require_bound(n, l, mu, k)
    return -mu * mu / (2.0 * s * s) - k * k * s * s / 2.0 + k * k / 8.0 + g_shift


def closedform_eigenfunction(n: int, l: int, x, mu: float, k: float):
    """Unnormalized (n, l) bound state in the conformal chart, 0 < x < 1/k."""
    s = _require_bound(n, l, mu, k)
    if k <= 0:
        raise DomainError("closed-form states need k > 0")
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0) or np.any(k * xa >= 1.0):
        raise DomainError("conformal coordinate must lie in (0, 1/k)")
    jp = physical_jacobi_params(n, l, mu, k)
    kx = k * xa
    expo = np.exp(-2.0 * mu * np.arctanh(kx) / (k * s))
    out = (expo * xa ** (n + l) * (1.0 - kx ** 2) ** (-(s - 0.5))
           * jacobi_eval(jp, (1.0 + kx ** 2) / (2.0 * kx)))
    if np.isscalar(x) or getattr(x, "ndim", 1) == 0:
        return float(out)
    return out


# ---------------------------------------------------------------------------
# similarity transport along the chain of frames
# ---------------------------------------------------------------------------

_CHAIN = [Frame.HYPERBOLIC, Frame.FLAT_RADIUS, Frame.CONFORMAL_LB, Frame.CONFORMAL_VM]


def similarity_transport(psi: Callable, frm: Frame, to: Frame,
                         p: PerlickIParams) -> Callable:
    """Carry an eigenfunction along the similarity chain

        hyperbolic --(1/x)--> flat_radius --(relabel)--> conformal_lb
                   --(1/sqrt(1 - k^2 x^2))--> conformal_vm

    Scalar products are preserved step by step under each frame's weight,
    and eigenfunctions of one frame's Hamiltonian map to eigenfunctions of
    the next (hyperbolic eigenvalues are halved by the kinetic convention
    change; the vm frame adds k^2/8).
    """
    if not isinstance(frm, Frame) or not isinstance(to, Frame):
        raise DomainError("transport endpoints must be Frame members")
    i, j = _CHAIN.index(frm), _CHAIN.index(to)
    if i == j:
        return psi
    step = 1 if j > i else -1
    out = psi
    for a in range(i, j, step):
        out = _transport_step(out, _CHAIN[a], _CHAIN[a + step], p)
    return out


def _transport_step(psi: Callable, frm: Frame, to: Frame, p: PerlickIParams) -> Callable:
    k = p.k

    if (frm, to) == (Frame.HYPERBOLIC, Frame.FLAT_RADIUS):
        return lambda x: psi(chart_map(Chart.FLAT_RADIUS, Chart.HYPERBOLIC, x, p)) / x
    if (frm, to) == (Frame.FLAT_RADIUS, Frame.HYPERBOLIC):
        return lambda r: psi(chart_map(Chart.HYPERBOLIC, Chart.FLAT_RADIUS, r, p)) \
            * chart_map(Chart.HYPERBOLIC, Chart.FLAT_RADIUS, r, p)
    if (frm, to) == (Frame.FLAT_RADIUS, Frame.CONFORMAL_LB):
        return lambda x: psi(chart_map(Chart.CONFORMAL, Chart.FLAT_RADIUS, x, p))
    if (frm, to) == (Frame.CONFORMAL_LB, Frame.FLAT_RADIUS):
        return lambda x: psi(chart_map(Chart.FLAT_RADIUS, Chart.CONFORMAL, x, p))
    if (frm, to) == (Frame.CONFORMAL_LB, Frame.CONFORMAL_VM):
        return lambda x: psi(x) / np.sqrt(1.0 - (k * np.asarray(x, float)) ** 2)
    if (frm, to) == (Frame.CONFORMAL_VM, Frame.CONFORMAL_LB):
        return lambda x: psi(x) * np.sqrt(1.0 - (k * np.asarray(x, float)) ** 2)
    raise DomainError(f"unsupported transport step {frm} -> {to}")


def transported_ladder_state(n: int, l: int, p: PerlickIParams,
                             to: Frame = Frame.CONFORMAL_VM) -> Callable:
    """Ladder-built psi_{n, q=l+1} carried from the hyperbolic frame to ``to``."""
    psi = build_eigenfunction(n, l + 1, p.mu, p.k)
    return similarity_transport(psi, Frame.HYPERBOLIC, to, p)
