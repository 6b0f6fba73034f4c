"""Projective bundles P(E) -> P^1 in Grothendieck's (quotient) convention.

``Pic P(E)`` is free on ``t = c1(O(1))`` and the fibre class ``f``.  With
``pi_* O(1) = E`` the Chow ring is ``Z[t, f] / (f^2, t^r - deg(E) t^(r-1) f)``
where ``r = rank E``: the ``r`` coordinate hyperplanes ``{x_j = 0}`` have
classes ``t - a_j f`` and no common point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .bundles import (
    SplitBundle,
    dual,
    h0_bundle,
    h1_bundle,
    sym_pow,
    trivial,
    twist,
)

__all__ = [
    "PBundle",
    "DivisorClass",
    "T",
    "F",
    "BlowupClass",
    "CurveClassOnP",
    "BlowupCheck",
    "P1",
    "P2",
    "special_bundle",
    "canonical_class",
    "pushforward",
    "cohomology_pbundle",
    "intersection_number",
    "base_locus_of_t_system",
    "section_curve_from_quotient",
    "blowup_check",
    "codim_of_fiber_restriction",
]


@dataclass(frozen=True)
class DivisorClass:
    """``a*t + b*f``."""

    a: int
    b: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, -self.b)

    def __rmul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.a, k * self.b)

    def __str__(self) -> str:
        return f"{self.a}*t{self.b:+d}*f"

    @classmethod
    def parse(cls, text: str) -> DivisorClass:
        m = re.fullmatch(r"(-?\d+)\*t([+-]\d+)\*f", text.replace(" ", ""))
        if m is None:
            raise ValueError(f"cannot parse divisor class {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))


T = DivisorClass(1, 0)
F = DivisorClass(0, 1)


@dataclass(frozen=True)
class BlowupClass:
    """``bt*b^*t + bf*b^*f + e*E`` on the blow-up of P(E) along a section."""

    bt: int
    bf: int
    e: int

    def __add__(self, other: BlowupClass) -> BlowupClass:
        return BlowupClass(self.bt + other.bt, self.bf + other.bf, self.e + other.e)

    def __rmul__(self, k: int) -> BlowupClass:
        return BlowupClass(k * self.bt, k * self.bf, k * self.e)

    def __str__(self) -> str:
        return f"{self.bt}*bt{self.bf:+d}*bf{self.e:+d}*E"

    @classmethod
    def parse(cls, text: str) -> BlowupClass:
        m = re.fullmatch(
            r"(-?\d+)\*bt([+-]\d+)\*bf([+-]\d+)\*E", text.replace(" ", "")
        )
        if m is None:
            raise ValueError(f"cannot parse blow-up class {text!r}")
        return cls(int(m.group(1)), int(m.group(2)), int(m.group(3)))


@dataclass(frozen=True)
class CurveClassOnP:
    t_deg: int
    f_deg: int


@dataclass(frozen=True)
class PBundle:
    E: SplitBundle

    def __post_init__(self):
        if self.E.rank < 2:
            raise ValueError(f"P(E) needs rank(E) >= 2, got {self.E.rank}")

    @property
    def n(self) -> int:
        """Fibre dimension; P(E) has dimension n + 1."""
        return self.E.rank - 1

    @cached_property
    def canonical(self) -> DivisorClass:
        return canonical_class(self)


def special_bundle(n: int) -> SplitBundle:
    """``O(-1) + O^(n-1) + O(1)``."""
    return SplitBundle({-1: 1, 0: n - 1, 1: 1})


def P1(n: int) -> PBundle:
    return PBundle(trivial(n + 1))


def P2(n: int) -> PBundle:
    return PBundle(special_bundle(n))


def canonical_class(P: PBundle) -> DivisorClass:
    # K = K_rel + pi^* K_{P^1},  K_rel = -r t + pi^* det E
    return DivisorClass(-P.E.rank, P.E.degree - 2)


def pushforward(P: PBundle, D: DivisorClass) -> SplitBundle:
    if D.a < 0:
        raise ValueError(
            f"pushforward of O({D}) vanishes for a < 0; use cohomology_pbundle"
        )
    return twist(sym_pow(P.E, D.a), D.b)


def cohomology_pbundle(P: PBundle, D: DivisorClass, i: int) -> int:
    """``h^i(P(E), O(a t + b f))`` via the Leray spectral sequence.

    Only ``R^0`` (``a >= 0``) and ``R^n`` (``a <= -(n+1)``) can be nonzero;
    relative duality gives ``R^n pi_* O(a) = S^(-a-n-1)(E^v) (x) det(E)^v``.
    """
    n = P.n
    if not 0 <= i <= n + 1:
        raise ValueError(f"cohomological degree {i} outside 0..{n + 1}")
    a, b = D.a, D.b
    if a >= 0:
        base = pushforward(P, D)
        shift = 0
    elif a > -(n + 1):
        return 0
    else:
        base = twist(sym_pow(dual(P.E), -a - n - 1), b - P.E.degree)
        shift = n
    j = i - shift
    if j == 0:
        return h0_bundle(base)
    if j == 1:
        return h1_bundle(base)
    return 0


def intersection_number(P: PBundle, classes: list[DivisorClass]) -> int:
    """Degree of the product of ``n+1`` divisor classes, with ``t^n f = 1``."""
    n = P.n
    if len(classes) != n + 1:
        raise ValueError(f"need exactly {n + 1} classes, got {len(classes)}")
    # coefficients of t^k and t^(k-1) f after k factors; f^2 = 0 kills the rest
    t_top, t_f = 1, 0
    for D in classes:
        t_top, t_f = D.a * t_top, D.a * t_f + D.b * t_top
    # t^(n+1) = deg(E) t^n f
    return t_f + P.E.degree * t_top


def base_locus_of_t_system(P: PBundle, b: int) -> SplitBundle:
    """The quotient ``F`` of ``E`` with ``P(F)`` = base locus of ``|t + b f|``."""
    return SplitBundle({a: m for a, m in P.E.items() if a + b < 0})


def section_curve_from_quotient(P: PBundle, q: int) -> CurveClassOnP:
    if q not in P.E:
        raise ValueError(f"O({q}) is not a summand of {P.E}")
    # O(1) restricted to P(O(q)) is O(q)
    return CurveClassOnP(t_deg=q, f_deg=1)


@dataclass(frozen=True)
class BlowupCheck:
    K_blowup: BlowupClass
    proper_transform: BlowupClass
    K_resolution_sum: BlowupClass
    decomposition_ok: bool


def blowup_check(P: PBundle) -> BlowupCheck:
    """Picard-lattice arithmetic for the blow-up of P(E) along the section C.

    C is the section cut out by the quotient ``E -> O(-1)``; it has
    codimension ``n``, so the exceptional divisor enters ``K`` with
    coefficient ``n - 1``.
    """
    n = P.n
    if n < 3 or -1 not in P.E:
        raise ValueError("blow-up check needs n >= 3 and an O(-1) quotient")
    K = P.canonical
    K_blowup = BlowupClass(K.a, K.b, n - 1)
    anti_K = -K
    proper = BlowupClass(anti_K.a, anti_K.b, -(n - 1))
    total = K_blowup + proper
    # (n-1)(b^*t - E) + 2 b^*(t + f)
    expected = (n - 1) * BlowupClass(1, 0, -1) + 2 * BlowupClass(1, 1, 0)
    return BlowupCheck(K_blowup, proper, total, proper == expected)


def codim_of_fiber_restriction(P: PBundle) -> int:
    """Codimension of the image of ``H^0(O(t))`` in ``H^0(O_f(t))``."""
    return (P.n + 1) - (h0_bundle(P.E) - h0_bundle(twist(P.E, -1)))

