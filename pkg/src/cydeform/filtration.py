"""Filtrations of S^(n+1) E induced by the sub-line-bundle O(-1) of E.

For ``E = O(-1) + Q`` with ``Q = O^(n-1) + O(1)`` the symmetric power splits as
``S^(n+1) E = sum_i S^i O(-1) (x) S^(n+1-i) Q``.  ``F^p`` keeps the summands
with ``i >= p`` and ``G^p`` those with ``i <= n+1-p``; a summand with index
``i`` consists of sections vanishing to order ``n+1-i`` along the section C,
so ``H^0(G^p(2))`` is the space of anticanonical sections vanishing to order
at least ``p`` along C.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .bundles import (
    SplitBundle,
    direct_sum,
    h0_bundle,
    line,
    sym_pow,
    tensor,
    trivial,
    twist,
)
from .projbundle import special_bundle

__all__ = [
    "FiltrationTable",
    "build_filtration",
    "graded_piece",
    "check_split_complement",
    "generic_multiplicity_along_C",
    "dim_V",
    "FiberChecks",
    "lemma23_fiber_checks",
    "quotient_bundle",
]


def quotient_bundle(n: int) -> SplitBundle:
    """``O^(n-1) + O(1)``, the quotient of E by O(-1)."""
    return SplitBundle({0: n - 1, 1: 1})


def graded_piece(n: int, i: int) -> SplitBundle:
    """``S^i O(-1) (x) S^(n+1-i) Q``."""
    return tensor(sym_pow(line(-1), i), sym_pow(quotient_bundle(n), n + 1 - i))


@dataclass(frozen=True)
class FiltrationTable:
    n: int
    G: tuple[SplitBundle, ...]
    F: tuple[SplitBundle, ...]
    h0_twisted: tuple[int, ...]

    @property
    def total(self) -> SplitBundle:
        return self.G[0]

    def rows(self) -> list[tuple[int, int, int]]:
        """``(p, rank G^p, h^0(G^p(2)))`` for ``p = 0..n+2``."""
        return [(p, G.rank, h) for p, (G, h) in enumerate(zip(self.G, self.h0_twisted))]

    def format(self) -> str:
        lines = [f"{'p':>3}  {'rank G^p':>14}  {'h0(G^p(2))':>16}"]
        for p, r, h in self.rows():
            lines.append(f"{p:>3}  {r:>14}  {h:>16}")
        return "\n".join(lines)


@lru_cache(maxsize=64)
def build_filtration(n: int) -> FiltrationTable:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    pieces = [graded_piece(n, i) for i in range(n + 2)]
    G = tuple(direct_sum(*pieces[: n + 2 - p]) for p in range(n + 3))
    F = tuple(direct_sum(*pieces[p:]) for p in range(n + 3))
    h0 = tuple(h0_bundle(twist(g, 2)) for g in G)
    return FiltrationTable(n, G, F, h0)


def check_split_complement(T: FiltrationTable) -> bool:
    """``S^(n+1) E = G^(n+2-p) + F^p`` as multisets for every p."""
    n = T.n
    whole = sym_pow(special_bundle(n), n + 1)
    return all(
        direct_sum(T.G[n + 2 - p], T.F[p]) == whole for p in range(n + 3)
    )


def generic_multiplicity_along_C(T: FiltrationTable) -> int:
    top = T.h0_twisted[0]
    return max(p for p, h in enumerate(T.h0_twisted) if h == top)


def dim_V(T: FiltrationTable) -> int:
    """Dimension of the anticanonical sections vanishing to order n-1 along C."""
    return T.h0_twisted[T.n - 1]


@dataclass(frozen=True)
class FiberChecks:
    h0_t_const: bool
    h0_tf_const: bool
    F3_fiber_h0_zero: bool
    dimV_eq_generic_h0: bool
    generic_h0: int

    def all_true(self) -> bool:
        return (
            self.h0_t_const
            and self.h0_tf_const
            and self.F3_fiber_h0_zero
            and self.dimV_eq_generic_h0
        )


def lemma23_fiber_checks(n: int) -> FiberChecks:
    """Compare the special fibre ``E`` with the generic fibre ``O^(n+1)``.

    The family over A^1 is never built; cohomology of the two fibre types is
    enough for the constancy statements.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    E = special_bundle(n)
    O = trivial(n + 1)
    h0_t = h0_bundle(E) == h0_bundle(O) == n + 1
    h0_tf = h0_bundle(twist(E, 1)) == h0_bundle(twist(O, 1)) == 2 * n + 2
    F3 = twist(tensor(sym_pow(line(-1), 3), sym_pow(O, n - 2)), 2)
    F3_zero = h0_bundle(F3) == 0
    generic = h0_bundle(twist(sym_pow(O, n + 1), 2))
    dim_ok = dim_V(build_filtration(n)) == generic == 3 * comb(2 * n + 1, n + 1)
    return FiberChecks(h0_t, h0_tf, F3_zero, dim_ok, generic)
