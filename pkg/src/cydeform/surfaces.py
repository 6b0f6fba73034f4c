"""Divisor arithmetic on Hirzebruch surfaces, for the n = 3 surface S in P_2.

``S = P(O(-1) + O(1))`` is the Hirzebruch surface with invariant ``e = 2``;
its Picard lattice is spanned by the negative section C (``C^2 = -e``) and
the fibre f.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bundles import SplitBundle, sym_pow, twist
from .projbundle import DivisorClass, special_bundle

__all__ = [
    "SurfaceClass",
    "Decomposition",
    "restrict_to_S",
    "pairing",
    "fixed_component_decomposition",
    "s4_summand_check",
]


@dataclass(frozen=True)
class SurfaceClass:
    """``c*C + fcoef*f`` on the Hirzebruch surface F_e."""

    c: int
    fcoef: int
    e: int = 2

    def __add__(self, other: SurfaceClass) -> SurfaceClass:
        _same_surface(self, other)
        return SurfaceClass(self.c + other.c, self.fcoef + other.fcoef, self.e)

    def __sub__(self, other: SurfaceClass) -> SurfaceClass:
        _same_surface(self, other)
        return SurfaceClass(self.c - other.c, self.fcoef - other.fcoef, self.e)

    def __rmul__(self, k: int) -> SurfaceClass:
        return SurfaceClass(k * self.c, k * self.fcoef, self.e)

    def __str__(self) -> str:
        return f"{self.c}C{self.fcoef:+d}f"

    @classmethod
    def section(cls, e: int = 2) -> SurfaceClass:
        return cls(1, 0, e)

    @classmethod
    def fiber(cls, e: int = 2) -> SurfaceClass:
        return cls(0, 1, e)


def _same_surface(x: SurfaceClass, y: SurfaceClass) -> None:
    if x.e != y.e:
        raise ValueError(f"classes live on F_{x.e} and F_{y.e}")


def pairing(x: SurfaceClass, y: SurfaceClass) -> int:
    _same_surface(x, y)
    return -x.e * x.c * y.c + x.c * y.fcoef + x.fcoef * y.c


def restrict_to_S(D: DivisorClass, n: int = 3) -> SurfaceClass:
    """Restrict ``a t + b f`` on P_2 to S, using ``t|_S = C + f``.

    ``t`` has degree -1 on C and ``(C + f) . C = -2 + 1``, which pins the
    restriction down.
    """
    if n != 3:
        raise ValueError("the surface S is only modelled for n = 3")
    return SurfaceClass(D.a, D.a + D.b, 2)


@dataclass(frozen=True)
class Decomposition:
    fixed: SurfaceClass
    mobile: SurfaceClass
    trace: tuple[tuple[str, int], ...] = field(default=(), compare=False)

    def format_trace(self) -> str:
        lines = [f"{cls:>10}  D.C = {val:+d}" for cls, val in self.trace]
        lines.append(f"fixed = {self.fixed}, mobile = {self.mobile}")
        return "\n".join(lines)


def fixed_component_decomposition(D: SurfaceClass, trace: bool = False) -> Decomposition:
    """Strip copies of C while ``D . C < 0``.

    Each subtraction raises ``D . C`` by ``e``, so the loop ends once the
    residual meets C non-negatively.  With ``trace`` set, every intermediate
    class is recorded together with its intersection with C.
    """
    if D.c < 0 or D.fcoef < 0:
        raise ValueError(f"{D} is not effective")
    if D.e < 0:
        raise ValueError(f"Hirzebruch invariant must be >= 0, got {D.e}")
    C = SurfaceClass.section(D.e)
    current = D
    removed = 0
    steps = []
    while True:
        val = pairing(current, C)
        if trace:
            steps.append((str(current), val))
        if val >= 0:
            break
        # the residual stays effective: val < 0 forces current.c > 0
        current = current - C
        removed += 1
    return Decomposition(removed * C, current, tuple(steps))


def s4_summand_check() -> bool:
    """``S^4(O(-1)+O(1))(2)`` sits inside ``S^4 E(2)`` as a sub-multiset (n = 3)."""
    E2 = SplitBundle({-1: 1, 1: 1})
    return twist(sym_pow(E2, 4), 2).issubset(twist(sym_pow(special_bundle(3), 4), 2))
