"""Quantization schemes and the concrete radial Hamiltonian variants.

The classical kinetic term f(r) P_r^2 admits the one-parameter operator
ordering  -f^a d/dr f^(1-a-b) d/dr f^b.  The geometric (Laplace-Beltrami)
and position-dependent-mass (Schroedinger) readings correspond to
(a, b) = (1/2, 0) and (1, 0); they are similarity-equivalent up to a
curvature term, which is constant exactly when the space has constant
curvature.

Every concrete variant below carries an explicit convention record
(kinetic scale, additive constant, eigenvalue formula) because the family
mixes the -d^2 and -(1/2) d^2 normalizations and sprinkles constants
(-k^2/2, -k^2/8, +k^2/8); silent convention mixing is the main hazard
when cross-checking spectra.

`liouville_normal_form` reduces any variant -a psi'' - b psi' + c psi to
-u'' + U(t) u on a uniform grid, which is exactly what the tridiagonal
oracle consumes; that is how non-hyperbolic variants get verified
numerically without weighted discretizations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, Optional, Union

import numpy as np

from .model import (BOUNDARY_PAD, Chart, DomainError, Frame, PerlickIParams,
                    RadialConformalFactor, WeightFunction,
                    conformal_curvature_radial, weight_function)
from .susy import LadderWavefunction, factorization_energy

__all__ = [
    "HamiltonianVariant",
    "LiouvilleReduction",
    "OrderingScheme",
    "VARIANT_NAMES",
    "apply_variant",
    "general_beta_reduce",
    "h_prime",
    "hyperbolic_1d",
    "lb_3d",
    "lb_conformal",
    "lb_flatradius",
    "liouville_normal_form",
    "make_variant",
    "similarity_residual",
    "vm_conformal",
    "vm_general_beta",
    "vonroos_kinetic",
]


@dataclass(frozen=True)
class OrderingScheme:
    """Exponents (a, b) of the ordered kinetic term -f^a d f^(1-a-b) d f^b."""

    a_ord: float
    b_ord: float


def _fd1(f, x, h):
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


def _fd2(f, x, h):
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h)
            - f(x - 2 * h)) / (12 * h * h)


def vonroos_kinetic(scheme: OrderingScheme, f: Callable, psi: Callable, r: float,
                    df: Optional[Callable] = None, d2f: Optional[Callable] = None,
                    dpsi: Optional[Callable] = None, d2psi: Optional[Callable] = None,
                    h: float = 1e-4) -> float:
    """Value of (-f^a d/dr f^(1-a-b) d/dr f^b psi)(r).

    Expanded by the product rule so only f, f', f'', psi', psi'' are
    needed; missing derivatives are taken by 4th-order central
    differences with step ``h``.  Collapses to -f psi'' for (a, b) = (1, 0)
    and is independent of the scheme when f is constant.
    """
    r = float(r)
    f0 = float(f(r))
    if not f0 > 0:
        raise DomainError(f"ordering schemes need f > 0, got f({r}) = {f0}")
    a, b = scheme.a_ord, scheme.b_ord
    f1 = float(df(r)) if df is not None else _fd1(f, r, h)
    f2 = float(d2f(r)) if d2f is not None else _fd2(f, r, h)
    p1 = float(dpsi(r)) if dpsi is not None else _fd1(psi, r, h)
    p2 = float(d2psi(r)) if d2psi is not None else _fd2(psi, r, h)
    p0 = float(psi(r))
    u = p1 + b * (f1 / f0) * p0
    du = p2 + b * ((f2 * f0 - f1 * f1) / f0 ** 2) * p0 + b * (f1 / f0) * p1
    return -f0 * du - (1.0 - a) * f1 * u


# ---------------------------------------------------------------------------
# Hamiltonian variants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HamiltonianVariant:
    """One concrete radial operator H = -a(x) d^2 - b(x) d + c(x).

    ``energy_scale`` is the kinetic normalization (1 for the -d^2 form,
    1/2 for everything downstream); the full-operator eigenvalues are

        E_n = energy_scale * eps_(q_shape + n) + constant_shift + 2*scale*G

    with eps_s = -mu^2/s^2 - k^2 s^2.  ``operator_constant`` records the
    additive constant kept inside c (the printed -k^2/2 of the LB forms);
    ``convention_note`` records any deliberate difference from the printed
    display.
    """

    name: str
    chart: Chart
    params: PerlickIParams
    q_shape: float
    energy_scale: float
    constant_shift: float
    operator_constant: float
    a: Callable
    b: Callable
    c: Callable
    da: Callable
    d2a: Callable
    db: Callable
    domain: tuple[float, float]
    weight: Callable
    weight_formula: str
    eigenvalue_formula: str
    convention_note: str = ""

    def eigenvalue(self, n: int) -> float:
        s = float(self.q_shape) + n
        eps = factorization_energy(s, float(self.params.mu), float(self.params.k))
        return (self.energy_scale * float(eps) + self.constant_shift
                + 2.0 * self.energy_scale * self.params.g_shift)

    def require(self, x):
        lo, hi = self.domain
        xa = np.asarray(x, dtype=float)
        bad = (xa <= lo + BOUNDARY_PAD)
        if math.isfinite(hi):
            bad = bad | (xa >= hi - BOUNDARY_PAD)
        if np.any(bad):
            raise DomainError(f"{self.name}: {x} outside chart domain ({lo}, {hi})")
        return x

    def default_step(self) -> float:
        lo, hi = self.domain
        width = (hi - lo) if math.isfinite(hi) else 10.0
        return 1e-4 * width

    def convention_record(self) -> dict:
        return {
            "name": self.name,
            "chart": self.chart.value,
            "energy_scale": self.energy_scale,
            "operator_constant": self.operator_constant,
            "constant_shift": self.constant_shift,
            "eigenvalue_formula": self.eigenvalue_formula,
            "weight": self.weight_formula,
            "note": self.convention_note,
        }


def apply_variant(v: HamiltonianVariant, psi, x, d1=None, d2=None,
                  h: Optional[float] = None) -> float:
    """(H psi)(x) for a variant, using analytic derivatives when available.

    Ladder wavefunctions differentiate exactly; otherwise supply d1/d2
    callables or fall back to 4th-order central differences with step h
    (default 1e-4 times the domain width).
    """
    v.require(x)
    x = float(x)
    if isinstance(psi, LadderWavefunction) and d1 is None:
        dpsi = psi.derivative()
        d1v, d2v = dpsi(x), dpsi.derivative()(x)
    else:
        if h is None:
            h = v.default_step()
        d1v = float(d1(x)) if d1 is not None else _fd1(psi, x, h)
        d2v = float(d2(x)) if d2 is not None else _fd2(psi, x, h)
    return -v.a(x) * d2v - v.b(x) * d1v + v.c(x) * float(psi(x))


def _check_shape(q) -> float:
    if not q > 0:
        raise DomainError(f"shape parameter must be positive, got {q}")
    return q


def hyperbolic_1d(p: PerlickIParams, q) -> HamiltonianVariant:
    """H_q = -d^2 + k^2 q(q-1)/sinh^2(k r) - 2 mu k coth(k r)  (scale-1 form)."""
    _check_shape(q)
    if not p.k > 0:
        raise DomainError("hyperbolic_1d needs k > 0")
    k, mu, g = p.k, p.mu, p.g_shift
    qf = float(q)

    def c(x):
        sh = np.sinh(k * x)
        return k * k * qf * (qf - 1.0) / sh ** 2 - 2.0 * mu * k / np.tanh(k * x) + 2.0 * g

    zero = lambda x: np.zeros_like(np.asarray(x, dtype=float)) + 0.0
    one = lambda x: np.ones_like(np.asarray(x, dtype=float)) * 1.0
    return HamiltonianVariant(
        name="hyperbolic_1d", chart=Chart.HYPERBOLIC, params=p, q_shape=qf,
        energy_scale=1.0, constant_shift=0.0, operator_constant=0.0,
        a=one, b=zero, c=c, da=zero, d2a=zero, db=zero,
        domain=(0.0, math.inf),
        weight=weight_function(Frame.HYPERBOLIC, p), weight_formula="1",
        eigenvalue_formula="eps_s = -mu^2/s^2 - k^2 s^2, s = q + n",
    )


def lb_flatradius(p: PerlickIParams, q, bare: bool = False,
                  name: str = "lb_flatradius") -> HamiltonianVariant:
    """Laplace-Beltrami form in the flat-radius chart (1/2-scale).

    -(1/2)[(1+k^2 x^2) d^2 + (2/x + 3 k^2 x) d] + q(q-1)/(2x^2)
    - mu sqrt(1/x^2 + k^2) - k^2/2.  With ``bare`` the trailing -k^2/2 is
    stripped and the eigenvalues shift up by k^2/2.
    """
    _check_shape(q)
    k, mu, g = p.k, p.mu, p.g_shift
    k2 = k * k
    qf = float(q)
    const = 0.0 if bare else -0.5 * k2

    def a(x):
        return 0.5 * (1.0 + k2 * x * x)

    def b(x):
        return 1.0 / x + 1.5 * k2 * x

    def c(x):
        return (qf * (qf - 1.0) / (2.0 * x * x)
                - mu * np.sqrt(1.0 / (x * x) + k2) + const + g)

    return HamiltonianVariant(
        name=name, chart=Chart.FLAT_RADIUS, params=p, q_shape=qf,
        energy_scale=0.5, constant_shift=(0.5 * k2 if bare else 0.0),
        operator_constant=const,
        a=a, b=b, c=c,
        da=lambda x: k2 * x, d2a=lambda x: k2 + 0.0 * x,
        db=lambda x: -1.0 / (x * x) + 1.5 * k2,
        domain=(0.0, math.inf),
        weight=weight_function(Frame.FLAT_RADIUS, p),
        weight_formula="x^2/sqrt(1+k^2 x^2)",
        eigenvalue_formula="eps_s/2, s = q + n" + (" + k^2/2" if bare else ""),
    )


def lb_3d(p: PerlickIParams, l: int, bare: bool = False) -> HamiltonianVariant:
    """Radial part of the 3-d Laplace-Beltrami operator at angular momentum l.

    Identical to lb_flatradius with q = l + 1; the angular sector enters
    the spectrum only through the 2l+1 multiplicity.
    """
    if l < 0 or int(l) != l:
        raise DomainError(f"angular momentum must be a nonnegative integer, got {l}")
    return lb_flatradius(p, l + 1, bare=bare, name="lb_3d")


def _conformal_kinetic(p: PerlickIParams):
    k2 = p.k ** 2

    def a(x):
        d = 1.0 - k2 * x * x
        return d * d / 8.0

    def da(x):
        return -0.5 * k2 * x * (1.0 - k2 * x * x)

    def d2a(x):
        return -0.5 * k2 * (1.0 - 3.0 * k2 * x * x)

    return a, da, d2a


def lb_conformal(p: PerlickIParams, q, bare: bool = False) -> HamiltonianVariant:
    """Laplace-Beltrami form in the conformal chart (1/2-scale).

    -(1/8)(1-k^2x^2)^2 [d^2 + (2k^2x/(1-k^2x^2) + 2/x) d - q(q-1)/x^2]
    - mu (1/(2x) + k^2 x/2) - k^2/2.
    """
    _check_shape(q)
    if not p.k > 0:
        raise DomainError("conformal variants need k > 0")
    k, mu, g = p.k, p.mu, p.g_shift
    k2 = k * k
    qf = float(q)
    const = 0.0 if bare else -0.5 * k2
    a, da, d2a = _conformal_kinetic(p)

    def b(x):
        d = 1.0 - k2 * x * x
        return 0.25 * k2 * x * d + d * d / (4.0 * x)

    def db(x):
        x2 = x * x
        d = 1.0 - k2 * x2
        return 0.25 * k2 * (1.0 - 3.0 * k2 * x2) - d * (1.0 + 3.0 * k2 * x2) / (4.0 * x2)

    def c(x):
        d = 1.0 - k2 * x * x
        return (d * d / 8.0 * qf * (qf - 1.0) / (x * x)
                - mu * (0.5 / x + 0.5 * k2 * x) + const + g)

    return HamiltonianVariant(
        name="lb_conformal", chart=Chart.CONFORMAL, params=p, q_shape=qf,
        energy_scale=0.5, constant_shift=(0.5 * k2 if bare else 0.0),
        operator_constant=const,
        a=a, b=b, c=c, da=da, d2a=d2a, db=db,
        domain=(0.0, 1.0 / k),
        weight=weight_function(Frame.CONFORMAL_LB, p),
        weight_formula="8 x^2/(1-k^2 x^2)^3",
        eigenvalue_formula="eps_s/2, s = q + n" + (" + k^2/2" if bare else ""),
    )


def _vm_core(p: PerlickIParams, gamma: float, q_shape: float, name: str,
             eig_note: str) -> HamiltonianVariant:
    """Schroedinger-quantized conformal core with centrifugal coefficient gamma.

    -(1/8)(1-k^2x^2)^2 [d^2 + (2/x) d - gamma/x^2] - mu (1/(2x) + k^2 x/2).
    No additive constant: eigenvalues are eps_s/2 + k^2/8.  (The printed
    vm display carries an extra -k^2/8 that exactly cancels this shift;
    we keep the constant out of the operator so the eigenvalues match the
    closed-form energy formula.)
    """
    if not p.k > 0:
        raise DomainError("conformal variants need k > 0")
    k, mu, g = p.k, p.mu, p.g_shift
    k2 = k * k
    a, da, d2a = _conformal_kinetic(p)

    def b(x):
        d = 1.0 - k2 * x * x
        return d * d / (4.0 * x)

    def db(x):
        x2 = x * x
        d = 1.0 - k2 * x2
        return -d * (1.0 + 3.0 * k2 * x2) / (4.0 * x2)

    def c(x):
        d = 1.0 - k2 * x * x
        return (d * d / 8.0 * gamma / (x * x)
                - mu * (0.5 / x + 0.5 * k2 * x) + g)

    return HamiltonianVariant(
        name=name, chart=Chart.CONFORMAL, params=p, q_shape=q_shape,
        energy_scale=0.5, constant_shift=k2 / 8.0, operator_constant=0.0,
        a=a, b=b, c=c, da=da, d2a=d2a, db=db,
        domain=(0.0, 1.0 / k),
        weight=weight_function(Frame.CONFORMAL_VM, p),
        weight_formula="8 x^2/(1-k^2 x^2)^2",
        eigenvalue_formula=f"eps_s/2 + k^2/8, s = {eig_note} + n",
        convention_note="printed display carries an extra -k^2/8 constant, "
                        "kept out of the operator here",
    )


def vm_conformal(p: PerlickIParams, q) -> HamiltonianVariant:
    """Schroedinger (position-dependent-mass) quantization, conformal chart."""
    _check_shape(q)
    qf = float(q)
    return _vm_core(p, qf * (qf - 1.0), qf, "vm_conformal", "q")


def general_beta_reduce(l: int, a) -> Fraction:
    """Effective shape parameter q = a l + (a+1)/2 of the reduced operator.

    ``a`` = 1/beta must be an exact rational; the centrifugal identity
    q(q-1) = a^2 l(l+1) - (1-a^2)/4 then holds exactly.
    """
    if l < 0 or int(l) != l:
        raise DomainError(f"angular momentum must be a nonnegative integer, got {l}")
    if not isinstance(a, Rational):
        raise DomainError(f"deformation exponent must be exact rational, got {type(a).__name__}")
    af = Fraction(a)
    if af <= 0:
        raise DomainError(f"deformation exponent must be positive, got {af}")
    return af * l + (af + 1) / 2


def h_prime(p: PerlickIParams, l: int, a) -> HamiltonianVariant:
    """The general-beta operator after r = x^a and conjugation by x^((a-1)/2).

    Equals the vm conformal core with q = a l + (a+1)/2 (exact rational).
    """
    q = general_beta_reduce(l, a)
    gamma = float(q * (q - 1))
    return _vm_core(p, gamma, float(q), "h_prime", f"{q}")


def vm_general_beta(p: PerlickIParams, l: int) -> HamiltonianVariant:
    """Schroedinger quantization of the general-beta family, radial sector l.

    -[x^2 (x^-beta - k^2 x^beta)^2/(8 beta^2)] [d^2 + (2/x) d - l(l+1)/x^2]
    - (mu/2)(x^-beta + k^2 x^beta),  on 0 < x < k^(-1/beta).

    The kinetic conformal factor carries the minus sign (x^-beta - k^2
    x^beta): that is the branch for which r = x^(1/beta) reduces this
    operator to the conformal vm core and reproduces the bound spectrum;
    the potential keeps the plus sign, being sqrt of a perfect square.
    """
    if l < 0 or int(l) != l:
        raise DomainError(f"angular momentum must be a nonnegative integer, got {l}")
    if not p.k > 0:
        raise DomainError("vm_general_beta needs k > 0")
    beta, k, mu, g = p.beta, p.k, p.mu, p.g_shift
    k2 = k * k
    inv_b2 = 1.0 / (8.0 * beta * beta)
    ll = float(l * (l + 1))
    a_exp = 1.0 / beta
    q_shape = a_exp * l + (a_exp + 1.0) / 2.0

    def T(x):
        return x ** (1.0 - beta) - k2 * x ** (1.0 + beta)

    def dT(x):
        return (1.0 - beta) * x ** (-beta) - k2 * (1.0 + beta) * x ** beta

    def d2T(x):
        return (-beta * (1.0 - beta) * x ** (-beta - 1.0)
                - k2 * beta * (1.0 + beta) * x ** (beta - 1.0))

    def a(x):
        return inv_b2 * T(x) ** 2

    def da(x):
        return 2.0 * inv_b2 * T(x) * dT(x)

    def d2a(x):
        return 2.0 * inv_b2 * (dT(x) ** 2 + T(x) * d2T(x))

    def b(x):
        return 2.0 * inv_b2 * T(x) ** 2 / x

    def db(x):
        t = T(x)
        return 2.0 * inv_b2 * t * (2.0 * dT(x) * x - t) / (x * x)

    def c(x):
        return (inv_b2 * T(x) ** 2 * ll / (x * x)
                - 0.5 * mu * (x ** (-beta) + k2 * x ** beta) + g)

    x_hi = k ** (-1.0 / beta)
    w_norm = 8.0 * beta * beta

    def weight(x):
        return w_norm * (np.asarray(x, dtype=float)) ** 2 / T(np.asarray(x, dtype=float)) ** 2

    return HamiltonianVariant(
        name="vm_general_beta", chart=Chart.CONFORMAL, params=p, q_shape=q_shape,
        energy_scale=0.5, constant_shift=k2 / 8.0, operator_constant=0.0,
        a=a, b=b, c=c, da=da, d2a=d2a, db=db,
        domain=(0.0, x_hi),
        weight=weight, weight_formula="8 beta^2 x^2/(x^(1-beta)-k^2 x^(1+beta))^2",
        eigenvalue_formula="eps_w/2 + k^2/8, w = n + a l + (a+1)/2, a = 1/beta",
        convention_note="kinetic factor uses (x^-beta - k^2 x^beta); "
                        "the plus-sign print breaks the reduction identity",
    )


VARIANT_NAMES = ("hyperbolic_1d", "lb_flatradius", "lb_3d", "lb_conformal",
                 "vm_conformal", "h_prime", "vm_general_beta")


def make_variant(name: str, p: PerlickIParams, q=None, l=None, a=None,
                 bare: bool = False) -> HamiltonianVariant:
    """Factory by name; q-parametrized variants need q, l-parametrized need l."""
    if name == "hyperbolic_1d":
        return hyperbolic_1d(p, q)
    if name == "lb_flatradius":
        return lb_flatradius(p, q, bare=bare)
    if name == "lb_3d":
        return lb_3d(p, l, bare=bare)
    if name == "lb_conformal":
        return lb_conformal(p, q, bare=bare)
    if name == "vm_conformal":
        return vm_conformal(p, q)
    if name == "h_prime":
        return h_prime(p, l, a)
    if name == "vm_general_beta":
        return vm_general_beta(p, l)
    raise DomainError(f"unknown variant {name!r}")


# ---------------------------------------------------------------------------
# LB <-> Schroedinger similarity identity
# ---------------------------------------------------------------------------

def similarity_residual(factor: Union[RadialConformalFactor, Callable], psi: Callable,
                        x: float, h: float = 1e-3) -> float:
    """| f^(-1/4) T_vm (f^(1/4) psi) - T_LB psi - (R/16) psi | at radius x.

    T_LB = -(1/(2f))(lap + (f'/f) d),  T_vm = -(1/(2f)) lap, with the
    radial Laplacian lap g = g'' + (2/x) g'.  All derivatives, including
    those of R, use plain central differences of step ``h``, so the
    residual of the exact identity vanishes at O(h^2).
    """
    x = float(x)
    if x <= 2 * h:
        raise DomainError("evaluation point too close to the origin for step h")
    f0 = float(factor(x))
    if not f0 > 0:
        raise DomainError(f"conformal factor must be positive, got {f0}")

    def w(t):
        return float(factor(t)) ** 0.25 * float(psi(t))

    def lap(g, t):
        gp = (g(t + h) - g(t - h)) / (2 * h)
        gpp = (g(t + h) - 2.0 * g(t) + g(t - h)) / (h * h)
        return gpp + 2.0 * gp / t

    lhs = -lap(w, x) / (2.0 * f0 * f0 ** 0.25)
    fp = (float(factor(x + h)) - float(factor(x - h))) / (2 * h)
    pp = (float(psi(x + h)) - float(psi(x - h))) / (2 * h)
    t_lb = -(lap(psi, x) + fp * pp / f0) / (2.0 * f0)
    r_curv = conformal_curvature_radial(factor, x, h=h)
    return abs(lhs - t_lb - r_curv / 16.0 * float(psi(x)))


# ---------------------------------------------------------------------------
# Liouville normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LiouvilleReduction:
    """-a psi'' - b psi' + c psi reduced to -u'' + U(t) u on a uniform t-grid.

    ``x_nodes[i]`` is the original coordinate of t = (i+1) h; Dirichlet
    conditions sit at t = 0 (x = x_start) and t = t_max.
    """

    h: float
    t_max: float
    x_start: float
    x_nodes: np.ndarray
    u_values: np.ndarray

    def tridiagonal(self):
        from .oracle import TridiagonalOperator
        h2 = self.h * self.h
        return TridiagonalOperator(2.0 / h2 + self.u_values,
                                   np.full(len(self.u_values) - 1, -1.0 / h2))


def liouville_normal_form(v: HamiltonianVariant, x_start: float, t_max: float,
                          n_points: int, substeps: int = 8) -> LiouvilleReduction:
    """Reduce a variant to Liouville normal form -u'' + U(t) u.

    The new coordinate satisfies dt = dx/sqrt(a); x(t) is integrated by
    fixed-step RK4 (``substeps`` per grid step, error far below the h^2 of
    the subsequent discretization).  With w = a^(1/4) exp(-int b/(2a)),

        U = c - a (g'' + g'^2) - b g',      g = ln w,

    evaluated from the variant's analytic coefficient derivatives.
    Spectra are preserved: eigenvalues of -u'' + U on (0, t_max) with
    Dirichlet ends approximate the variant's eigenvalues.
    """
    if n_points < 10:
        raise DomainError("need at least 10 interior points for a reduction")
    v.require(x_start)
    h = t_max / (n_points + 1)
    hs = h / substeps

    def speed(x):
        av = float(v.a(x))
        if not av > 0:
            raise DomainError(f"{v.name}: kinetic coefficient not positive at x = {x}; "
                              "t_max drives the grid outside the chart")
        return math.sqrt(av)

    x_nodes = np.empty(n_points)
    x = float(x_start)
    for i in range(n_points):
        for _ in range(substeps):
            k1 = speed(x)
            k2 = speed(x + 0.5 * hs * k1)
            k3 = speed(x + 0.5 * hs * k2)
            k4 = speed(x + hs * k3)
            x += hs * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0
        x_nodes[i] = x

    lo, hi = v.domain
    if math.isfinite(hi) and x_nodes[-1] >= hi:
        raise DomainError(f"{v.name}: reduction left the chart (x = {x_nodes[-1]})")

    a = np.array([float(v.a(t)) for t in x_nodes])
    da = np.array([float(v.da(t)) for t in x_nodes])
    d2a = np.array([float(v.d2a(t)) for t in x_nodes])
    b = np.array([float(v.b(t)) for t in x_nodes])
    db = np.array([float(v.db(t)) for t in x_nodes])
    c = np.array([float(v.c(t)) for t in x_nodes])

    g1 = da / (4.0 * a) - b / (2.0 * a)
    g2 = (d2a / (4.0 * a) - da ** 2 / (4.0 * a ** 2)
          - db / (2.0 * a) + b * da / (2.0 * a ** 2))
    u = c - a * (g2 + g1 ** 2) - b * g1
    return LiouvilleReduction(h, t_max, float(x_start), x_nodes, u)
