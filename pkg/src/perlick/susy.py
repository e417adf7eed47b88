"""Shape-invariance ladder machinery for the hyperbolic Kepler family.

The one-dimensional radial Hamiltonian

    H_q = -d^2/dr^2 + k^2 q(q-1)/sinh^2(k r) - 2 mu k coth(k r)

factorizes as A_q^+ A_q + eps_q with eps_q = -mu^2/q^2 - k^2 q^2, and the
two first-order ladder operators intertwine H_q with H_{q+1}.  Iterating
the raising operator on factorization ground states produces every bound
state in the closed family

    psi(r) = exp(-c r) sinh(k r)^s Q(coth(k r)),   Q a polynomial.

Polynomial coefficients are kept in exact rational arithmetic whenever
(mu, k, q) are rational, so the ladder identities hold exactly and all
discretization error is isolated in the numerical oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .model import DomainError

__all__ = [
    "LadderWavefunction",
    "SusyLevel",
    "apply_raising",
    "bound_state_count",
    "build_eigenfunction",
    "factorization_energy",
    "ground_state",
    "lowering_operator",
    "prepotential",
    "prepotential_derivative",
    "raising_operator",
]

Number = Union[int, float, Fraction]


def _exact(x) -> Optional[Fraction]:
    """Fraction view of x when x is exactly rational, else None."""
    if isinstance(x, Rational):
        return Fraction(x)
    return None


def _all_exact(*vals):
    out = []
    for v in vals:
        e = _exact(v)
        if e is None:
            return None
        out.append(e)
    return out


# -- dense polynomial helpers (ascending coefficients over u = coth(k r)) ---

def _poly_trim(q):
    n = len(q)
    while n and q[n - 1] == 0:
        n -= 1
    return tuple(q[:n])


def _poly_deriv(q):
    return _poly_trim([j * q[j] for j in range(1, len(q))])


def _poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for j, c in enumerate(b):
        out[j] = out[j] + c
    return _poly_trim(out)


def _poly_scale(q, c):
    return _poly_trim([c * v for v in q])


def _poly_shift(q, power):
    return _poly_trim([0] * power + list(q))


@dataclass(frozen=True)
class SusyLevel:
    """Shape parameter q > 0 with excitation number n >= 0."""

    q: Number
    n: int

    def __post_init__(self):
        if not self.q > 0:
            raise DomainError(f"shape parameter must be positive, got {self.q}")
        if self.n < 0 or int(self.n) != self.n:
            raise DomainError(f"excitation number must be a nonnegative integer, got {self.n}")

    @property
    def s(self) -> Number:
        return self.q + self.n

    def is_bound(self, mu, k) -> bool:
        exact = _all_exact(self.q, mu, k)
        if exact is not None and exact[2] > 0:
            q, mu, k = exact
            return (q + self.n) ** 2 < mu / k
        if k == 0:
            return True
        return float(self.s) ** 2 < float(mu) / float(k)


@dataclass(frozen=True)
class LadderWavefunction:
    """Exact bound-state candidate exp(-c r) sinh(k r)^s Q(coth(k r)).

    ``poly`` holds the ascending coefficients of Q; they are Fractions when
    every generating parameter was rational, floats otherwise.  Instances
    are immutable and safe to share between threads.
    """

    decay_rate: Number          # c, units 1/length
    sinh_power: Number          # s > 0
    poly: tuple                 # Q coefficients over u = coth(k r)
    mu: Number
    k: Number

    def __post_init__(self):
        if not self.sinh_power > 0:
            raise DomainError(f"sinh power must be positive, got {self.sinh_power}")
        if not self.k > 0:
            raise DomainError("ladder wavefunctions need k > 0")
        object.__setattr__(self, "poly", _poly_trim(self.poly))

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.poly) - 1 if self.poly else -1

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def decay_margin(self) -> Number:
        """Asymptotic decay rate c - s k; positive iff normalizable."""
        return self.decay_rate - self.sinh_power * self.k

    @property
    def is_normalizable(self) -> bool:
        return self.decay_margin > 0

    @property
    def is_exact(self) -> bool:
        return (_all_exact(self.decay_rate, self.sinh_power, self.mu, self.k) is not None
                and all(isinstance(c, Rational) for c in self.poly))

    # -- evaluation -----------------------------------------------------

    def __call__(self, r):
        """Evaluate at r > 0 (scalar or array).

        Uses sinh^s Q(coth) = sum_j q_j sinh^(s-j) cosh^j, which stays
        finite as r -> 0 where u = coth(k r) diverges.
        """
        ra = np.asarray(r, dtype=float)
        if np.any(ra <= 0):
            raise DomainError("ladder wavefunctions are defined on r > 0")
        if self.is_zero:
            out = np.zeros_like(ra)
        else:
            c = float(self.decay_rate)
            s = float(self.sinh_power)
            kr = float(self.k) * ra
            sh, ch = np.sinh(kr), np.cosh(kr)
            out = np.zeros_like(ra)
            for j, qj in enumerate(self.poly):
                out = out + float(qj) * sh ** (s - j) * ch ** j
            out = out * np.exp(-c * ra)
        if np.isscalar(r) or getattr(r, "ndim", 1) == 0:
            return float(out)
        return out

    def derivative(self) -> "LadderWavefunction":
        """d/dr, exactly, as a member of the same function family.

        psi' = exp(-c r) sinh^s [ (s k u - c) Q + k (1 - u^2) Q' ].
        """
        c, s, k = self.decay_rate, self.sinh_power, self.k
        dq = _poly_deriv(self.poly)
        new = _poly_add(
            _poly_add(_poly_shift(_poly_scale(self.poly, s * k), 1),
                      _poly_scale(self.poly, -c)),
            _poly_add(_poly_scale(dq, k), _poly_shift(_poly_scale(dq, -k), 2)),
        )
        return LadderWavefunction(c, s, new, self.mu, self.k)


def prepotential(q: Number, r, mu: Number, k: Number):
    """W_q(r) = -(mu/q) r + q ln sinh(k r)."""
    if not q > 0:
        raise DomainError(f"shape parameter must be positive, got {q}")
    if not k > 0:
        raise DomainError("prepotential needs k > 0")
    ra = np.asarray(r, dtype=float)
    if np.any(ra <= 0):
        raise DomainError("prepotential is defined on r > 0")
    out = -(float(mu) / float(q)) * ra + float(q) * np.log(np.sinh(float(k) * ra))
    if np.isscalar(r) or getattr(r, "ndim", 1) == 0:
        return float(out)
    return out


def prepotential_derivative(q: Number, r, mu: Number, k: Number):
    """W_q'(r) = -mu/q + q k coth(k r)."""
    if not q > 0:
        raise DomainError(f"shape parameter must be positive, got {q}")
    ra = np.asarray(r, dtype=float)
    if np.any(ra <= 0):
        raise DomainError("prepotential is defined on r > 0")
    out = -(float(mu) / float(q)) + float(q) * float(k) / np.tanh(float(k) * ra)
    if np.isscalar(r) or getattr(r, "ndim", 1) == 0:
        return float(out)
    return out


def ground_state(s: Number, mu: Number, k: Number) -> LadderWavefunction:
    """Factorization ground state exp(W_s) = exp(-(mu/s) r) sinh(k r)^s.

    Requires s^2 < mu/k; the marginal case s^2 = mu/k has vanishing decay
    margin and is rejected as non-normalizable.
    """
    if not s > 0:
        raise DomainError(f"shape parameter must be positive, got {s}")
    if not k > 0:
        raise DomainError("ground state needs k > 0")
    exact = _all_exact(s, mu, k)
    if exact is not None:
        se, mue, ke = exact
        if se * se >= mue / ke:
            raise DomainError(f"no bound ground state: s^2 = {se * se} >= mu/k = {mue / ke}")
        return LadderWavefunction(mue / se, se, (Fraction(1),), mue, ke)
    if float(s) ** 2 >= float(mu) / float(k):
        raise DomainError(f"no bound ground state: s^2 = {float(s)**2} >= mu/k = {float(mu)/float(k)}")
    return LadderWavefunction(float(mu) / float(s), float(s), (1.0,), float(mu), float(k))


def apply_raising(p: Number, psi: LadderWavefunction) -> LadderWavefunction:
    """Apply A_p^+ = d/dr - mu/p + p k coth(k r) to a family member.

    Closed action on the polynomial part:

        Q~(u) = ((s + p) k u - c - mu/p) Q(u) + k (1 - u^2) Q'(u)

    The degree rises by exactly one; a vanishing leading coefficient would
    mean the ladder left the closed family and is reported as an error.
    """
    if not p > 0:
        raise DomainError(f"ladder parameter must be positive, got {p}")
    if psi.is_zero:
        return psi
    c, s, k, mu = psi.decay_rate, psi.sinh_power, psi.k, psi.mu
    exact = _all_exact(p, c, s, k, mu)
    if exact is not None and psi.is_exact:
        p, c, s, k, mu = exact
    else:
        p, c, s, k, mu = map(float, (p, c, s, k, mu))
    dq = _poly_deriv(psi.poly)
    new = _poly_add(
        _poly_add(_poly_shift(_poly_scale(psi.poly, (s + p) * k), 1),
                  _poly_scale(psi.poly, -(c + mu / p))),
        _poly_add(_poly_scale(dq, k), _poly_shift(_poly_scale(dq, -k), 2)),
    )
    out = LadderWavefunction(c, s, new, mu, k)
    if out.degree != psi.degree + 1:
        raise ArithmeticError(
            f"raising operator dropped the leading coefficient "
            f"(degree {psi.degree} -> {out.degree})")
    return out


def build_eigenfunction(n: int, q: Number, mu: Number, k: Number) -> LadderWavefunction:
    """n-th bound state of H_q: A^+_q ... A^+_(q+n-1) applied to exp(W_(q+n)).

    The innermost operator (largest parameter, q+n-1) acts first on the
    ground state of parameter q+n, so the intertwining chain lowers the
    shape parameter down to q.  deg Q = n, and H_q psi = eps_(q+n) psi.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"excitation number must be a nonnegative integer, got {n}")
    level = SusyLevel(q, int(n))
    if not level.is_bound(mu, k):
        raise DomainError(
            f"level (n={n}, q={q}) is not bound: (q+n)^2 >= mu/k")
    psi = ground_state(level.s, mu, k)
    for i in range(int(n) - 1, -1, -1):
        psi = apply_raising(q + i, psi)
    return psi


def factorization_energy(s: Number, mu: Number, k: Number):
    """eps_s = -mu^2/s^2 - k^2 s^2 (exact when the inputs are rational)."""
    if not s > 0:
        raise DomainError(f"shape parameter must be positive, got {s}")
    exact = _all_exact(s, mu, k)
    if exact is not None:
        se, mue, ke = exact
        return -(mue * mue) / (se * se) - ke * ke * se * se
    return -float(mu) ** 2 / float(s) ** 2 - float(k) ** 2 * float(s) ** 2


def bound_state_count(q: Number, mu: Number, k: Number) -> Optional[int]:
    """N_max = max{ n : (q+n)^2 < mu/k }, or None when q^2 >= mu/k.

    Strict inequality: marginal levels with (q+n)^2 = mu/k have vanishing
    exponential decay margin and are not normalizable.
    """
    if not q > 0:
        raise DomainError(f"shape parameter must be positive, got {q}")
    if not k > 0:
        raise DomainError("bound-state count needs k > 0")
    exact = _all_exact(q, mu, k)
    if exact is not None:
        qe, mue, ke = exact
        ratio = mue / ke
        if qe * qe >= ratio:
            return None
        n = 0
        while (qe + n + 1) ** 2 < ratio:
            n += 1
        return n
    ratio = float(mu) / float(k)
    if float(q) ** 2 >= ratio:
        return None
    n = 0
    while (float(q) + n + 1) ** 2 < ratio:
        n += 1
    return n


# ---------------------------------------------------------------------------
# ladder operators on arbitrary callables (finite differences)
# ---------------------------------------------------------------------------

def _d1(f: Callable, x, h: float):
    # 4th-order central first derivative
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


def raising_operator(q: Number, mu: Number, k: Number, h: float = 1e-2) -> Callable:
    """A_q^+ as a callable transformer: psi -> psi' + W_q' psi.

    Exact members of the ladder family use their analytic derivative;
    generic callables fall back to 4th-order central differences.
    """
    def apply(psi: Callable) -> Callable:
        dpsi = psi.derivative() if isinstance(psi, LadderWavefunction) else None

        def out(r):
            d = dpsi(r) if dpsi is not None else _d1(psi, r, h)
            return d + prepotential_derivative(q, r, mu, k) * psi(r)

        return out

    return apply


def lowering_operator(q: Number, mu: Number, k: Number, h: float = 1e-2) -> Callable:
    """A_q as a callable transformer: psi -> -psi' + W_q' psi."""
    def apply(psi: Callable) -> Callable:
        dpsi = psi.derivative() if isinstance(psi, LadderWavefunction) else None

        def out(r):
            d = dpsi(r) if dpsi is not None else _d1(psi, r, h)
            return -d + prepotential_derivative(q, r, mu, k) * psi(r)

        return out

    return apply
