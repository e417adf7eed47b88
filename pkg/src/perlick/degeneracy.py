"""Exact-arithmetic spectrum and accidental-degeneracy enumeration.

For rational deformation exponent a = 1/beta = m1/m2 (coprime), the level
(n, l) has the exact effective quantity

    w = n + a l + (a + 1)/2 = (2 n m2 + 2 m1 l + m1 + m2) / (2 m2)

and two levels are exactly degenerate iff their w coincide, i.e. iff they
are related by the w-preserving shift n -> n - s m1, l -> l + s m2.
(A printed version of that rule shifts both quantum numbers by m2, which
does not preserve w unless m1 = m2; the rule used here is validated
against brute-force enumeration.)  Grouping always compares exact
Fractions, never floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .model import DomainError

__all__ = [
    "LevelLabel",
    "Multiplet",
    "RationalExponent",
    "degenerate_partners",
    "energy",
    "level_label",
    "multiplet_table",
]


@dataclass(frozen=True)
class RationalExponent:
    """a = 1/beta = m1/m2 in lowest terms; coprimality enforced."""

    m1: int
    m2: int

    def __post_init__(self):
        if self.m1 < 1 or self.m2 < 1:
            raise DomainError("exponent numerator and denominator must be positive integers")
        g = math.gcd(self.m1, self.m2)
        object.__setattr__(self, "m1", self.m1 // g)
        object.__setattr__(self, "m2", self.m2 // g)

    @classmethod
    def from_value(cls, a) -> "RationalExponent":
        if not isinstance(a, Rational):
            raise DomainError(f"deformation exponent must be exact rational, got {type(a).__name__}")
        af = Fraction(a)
        if af <= 0:
            raise DomainError(f"deformation exponent must be positive, got {af}")
        return cls(af.numerator, af.denominator)

    @property
    def a(self) -> Fraction:
        return Fraction(self.m1, self.m2)

    @property
    def beta(self) -> Fraction:
        return Fraction(self.m2, self.m1)


@dataclass(frozen=True)
class LevelLabel:
    """Quantum numbers (n, l) with their exact w = n + a l + (a+1)/2."""

    n: int
    l: int
    w: Fraction

    def __post_init__(self):
        if self.n < 0 or self.l < 0:
            raise DomainError("quantum numbers must be nonnegative")

    def is_bound(self, mu: float, k: float) -> bool:
        # rational-vs-real comparison done in floats, w itself exact
        if k == 0:
            return True
        return float(self.w) ** 2 < float(mu) / float(k)


def level_label(n: int, l: int, a: RationalExponent) -> LevelLabel:
    if int(n) != n or int(l) != l:
        raise DomainError("quantum numbers must be integers")
    w = Fraction(2 * n * a.m2 + 2 * a.m1 * l + a.m1 + a.m2, 2 * a.m2)
    return LevelLabel(int(n), int(l), w)


def energy(label: LevelLabel, mu: float, k: float, g_shift: float = 0.0) -> float:
    """E(n,l) = -mu^2/(2 w^2) - k^2 w^2/2 + k^2/8 (+ G).

    Strictly increasing in w on the bound range w^2 < mu/k; at a = 1 it
    reduces to the closed-form energy with w = n + l + 1.
    """
    if not label.is_bound(mu, k):
        raise DomainError(f"level (n={label.n}, l={label.l}, w={label.w}) is not bound")
    w = float(label.w)
    return -mu * mu / (2.0 * w * w) - k * k * w * w / 2.0 + k * k / 8.0 + g_shift


def degenerate_partners(label: LevelLabel, a: RationalExponent,
                        n_max: int, l_max: int) -> list[LevelLabel]:
    """All other labels in the box 0..n_max x 0..l_max with the same exact w.

    Complete by construction: w' = w forces n' = n - s m1, l' = l + s m2
    for integer s (coprimality of m1, m2).
    """
    out = []
    s_lo = -(label.l // a.m2)
    s_hi = label.n // a.m1
    for s in range(s_lo, s_hi + 1):
        if s == 0:
            continue
        n2 = label.n - s * a.m1
        l2 = label.l + s * a.m2
        if 0 <= n2 <= n_max and 0 <= l2 <= l_max:
            partner = level_label(n2, l2, a)
            assert partner.w == label.w
            out.append(partner)
    out.sort(key=lambda lab: lab.l)
    return out


@dataclass(frozen=True)
class Multiplet:
    """One exact-w degeneracy group: members share the same energy."""

    w: Fraction
    energy: float
    members: tuple
    multiplicity: int     # sum of 2l+1 over members


def multiplet_table(a: RationalExponent, mu: float, k: float,
                    n_max: int, l_max: int, g_shift: float = 0.0) -> list[Multiplet]:
    """Bound levels of the box grouped by exact w, sorted by energy.

    Multiplicities include the angular factor 2l+1 of each member.
    """
    if n_max < 0 or l_max < 0:
        raise DomainError("box bounds must be nonnegative")
    groups: dict[Fraction, list[LevelLabel]] = {}
    for n in range(n_max + 1):
        for l in range(l_max + 1):
            lab = level_label(n, l, a)
            if not lab.is_bound(mu, k):
                continue
            groups.setdefault(lab.w, []).append(lab)
    table = []
    for w in sorted(groups):
        members = tuple(sorted(groups[w], key=lambda lab: lab.l))
        mult = sum(2 * lab.l + 1 for lab in members)
        table.append(Multiplet(w, energy(members[0], mu, k, g_shift), members, mult))
    return table
