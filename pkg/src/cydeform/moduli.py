"""Dimension counts for the two moduli families and the n = 3 rigidity check."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bundles import SplitBundle, h0_bundle, h0_line, sym_pow, trivial, twist
from .filtration import build_filtration
from .projbundle import (
    F,
    T,
    P1,
    P2,
    PBundle,
    base_locus_of_t_system,
    intersection_number,
    special_bundle,
    section_curve_from_quotient,
)

__all__ = [
    "AutBreakdown",
    "ModuliReport",
    "CubicForm",
    "NefDiscriminator",
    "aut_dim",
    "h0_anticanonical",
    "moduli_report",
    "cubic_form_on_X",
    "lattice_isometries",
    "nef_discriminator",
    "DEFAULT_ISOMETRY_BOUND",
]

DEFAULT_ISOMETRY_BOUND = 10


@dataclass(frozen=True)
class AutBreakdown:
    constant_entries: int
    linear_entries: int
    quadratic_entries: int
    matrix_dim: int
    aut_dim: int


def aut_dim(E: SplitBundle) -> AutBreakdown:
    """Dimension of Aut(P(E)): bundle automorphisms mod scalars, plus PGL(2).

    Entry ``(i, j)`` of an automorphism matrix is a form of degree
    ``a_j - a_i`` and contributes ``h^0(O(a_j - a_i))`` parameters.
    """
    counts = {0: 0, 1: 0, 2: 0}
    matrix_dim = 0
    for ai, mi in E.items():
        for aj, mj in E.items():
            pairs = mi * mj
            diff = aj - ai
            matrix_dim += pairs * h0_line(diff)
            if diff in counts:
                counts[diff] += pairs
    return AutBreakdown(counts[0], counts[1], counts[2], matrix_dim, matrix_dim - 1 + 3)


def h0_anticanonical(P: PBundle) -> int:
    K = P.canonical
    return h0_bundle(twist(sym_pow(P.E, -K.a), -K.b))


@dataclass(frozen=True)
class ModuliReport:
    n: int
    h0_antiK_P1: int
    h0_antiK_P2: int
    aut_P1: int
    aut_P2: int
    dim_M1: int
    dim_M2_lower: int
    gap_strict: bool

    @property
    def h0_difference(self) -> int:
        return self.h0_antiK_P2 - self.h0_antiK_P1

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "h0_antiK_P1": self.h0_antiK_P1,
            "h0_antiK_P2": self.h0_antiK_P2,
            "h0_difference": self.h0_difference,
            "aut_P1": self.aut_P1,
            "aut_P2": self.aut_P2,
            "dim_M1": self.dim_M1,
            "dim_M2_lower": self.dim_M2_lower,
            "gap_strict": self.gap_strict,
        }


def moduli_report(n: int) -> ModuliReport:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    h1 = h0_anticanonical(P1(n))
    h2 = build_filtration(n).h0_twisted[0]
    a1 = aut_dim(trivial(n + 1)).aut_dim
    a2 = aut_dim(special_bundle(n)).aut_dim
    m1 = h1 - 1 - a1
    m2 = h2 - 1 - a2
    return ModuliReport(n, h1, h2, a1, a2, m1, m2, m2 > m1)


@dataclass(frozen=True)
class CubicForm:
    """Intersection numbers ``t^3 X, t^2 f X, t f^2 X, f^3 X`` on a threefold X = -K."""

    c_ttt: int
    c_ttf: int
    c_tff: int
    c_fff: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.c_ttt, self.c_ttf, self.c_tff, self.c_fff)

    def polynomial(self) -> tuple[int, int, int, int]:
        """Coefficients of ``x^3, x^2 y, x y^2, y^3`` in ``(x t + y f)^3 . X``."""
        return (self.c_ttt, 3 * self.c_ttf, 3 * self.c_tff, self.c_fff)


def cubic_form_on_X(P: PBundle) -> CubicForm:
    if P.n != 3:
        raise ValueError(f"cubic form needs a 4-dimensional P(E), got n = {P.n}")
    X = -P.canonical
    vals = [
        intersection_number(P, [*([T] * (3 - k)), *([F] * k), X]) for k in range(4)
    ]
    return CubicForm(*vals)


def lattice_isometries(form: CubicForm, bound: int = DEFAULT_ISOMETRY_BOUND) -> list[np.ndarray]:
    """Integer matrices with entries in ``[-bound, bound]`` and det +-1 preserving the form.

    A matrix ``M`` acts on coefficient vectors ``(x, y)`` of ``x t + y f``;
    it is kept when ``form(M (x, y)) == form(x, y)`` identically.  The whole
    grid is scanned.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    a, b, c, d = (g.ravel() for g in np.meshgrid(r, r, r, r, indexing="ij"))
    det = a * d - b * c
    keep = np.abs(det) == 1
    a, b, c, d = a[keep], b[keep], c[keep], d[keep]
    target = [np.int64(v) for v in form.polynomial()]

    def substituted(i):
        # (a x + b y)^(3-i) (c x + d y)^i, coefficients in descending x-degree
        u = [np.ones_like(a)]
        for _ in range(3 - i):
            u = _poly_mul(u, [a, b])
        for _ in range(i):
            u = _poly_mul(u, [c, d])
        return u

    images = [substituted(i) for i in range(4)]
    ok = np.ones_like(a, dtype=bool)
    for k in range(4):
        coeff = sum(target[i] * images[i][k] for i in range(4))
        ok &= coeff == target[k]
    return [
        np.array([[ai, bi], [ci, di]])
        for ai, bi, ci, di in zip(a[ok], b[ok], c[ok], d[ok])
    ]


def _poly_mul(u, v):
    """Multiply binary forms given as coefficient lists in descending x-degree."""
    out = [np.zeros_like(v[0]) for _ in range(len(u) + len(v) - 1)]
    for i, ui in enumerate(u):
        for j, vj in enumerate(v):
            out[i + j] = out[i + j] + ui * vj
    return out


@dataclass(frozen=True)
class NefDiscriminator:
    t_nef_on_X1: bool
    t_nef_on_X2: bool


def nef_discriminator(n: int) -> NefDiscriminator:
    """``t`` is base-point-free on P_1, but has degree -1 on the curve C inside X_2."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    on_X1 = base_locus_of_t_system(P1(n), 0).is_empty()
    C = section_curve_from_quotient(P2(n), -1)
    return NefDiscriminator(on_X1, C.t_deg >= 0)
