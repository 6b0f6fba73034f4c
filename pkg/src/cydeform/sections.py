"""Global sections of O(a t + b f) on P(E) as bigraded polynomials.

Fibre variables follow the summands of ``E = O(-1) + O^(n-1) + O(1)``:
``z`` for O(-1), ``w1 .. w_{n-1}`` for the trivial summands and ``v`` for O(1).
The base P^1 has coordinates ``s, u``.  A fibre monomial ``x^k`` of degree
``a`` carries weight ``sum k_m a_m`` and must be multiplied by a base form of
degree ``b + weight``, so it contributes only when that degree is ``>= 0``.

The section curve C is ``{w = v = 0}``; vanishing order along C is the
smallest total degree in the non-``z`` variables.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .bundles import h0_bundle
from .projbundle import DivisorClass, P2, pushforward

__all__ = [
    "SectionPoly",
    "SectionBasis",
    "ZeroSectionError",
    "fiber_degrees",
    "monomial_basis",
    "monomial",
    "basis_size_matches_pushforward",
    "multiply",
    "vanishing_order_along_C",
    "rank_of_span",
    "psi_generators",
    "image_of_psi",
    "psi_prime_rank",
    "count_high_order_monomials",
    "point_filtration_dims",
    "DEFAULT_PSI_MAX_N",
]

DEFAULT_PSI_MAX_N = 6

Key = tuple[tuple[int, ...], tuple[int, int]]


class ZeroSectionError(ValueError):
    """Raised where an operation is undefined on the zero section."""


def fiber_degrees(n: int) -> tuple[int, ...]:
    return (-1,) + (0,) * (n - 1) + (1,)


def _var_names(n: int) -> list[str]:
    return ["z"] + [f"w{i}" for i in range(1, n)] + ["v"]


@dataclass(frozen=True)
class SectionPoly:
    degrees: tuple[int, ...]
    a: int
    b: int
    terms: dict[Key, Fraction]

    def __post_init__(self):
        for (k, (i, j)), c in self.terms.items():
            if c == 0:
                raise ValueError("zero coefficient stored in SectionPoly")
            if len(k) != len(self.degrees) or min(k) < 0 or i < 0 or j < 0:
                raise ValueError(f"bad exponents {k}, {(i, j)}")
            if sum(k) != self.a:
                raise ValueError(f"fibre degree {sum(k)} != {self.a}")
            weight = sum(e * d for e, d in zip(k, self.degrees))
            if i + j != self.b + weight:
                raise ValueError(f"base degree {i + j} != {self.b + weight}")

    @property
    def n(self) -> int:
        return len(self.degrees) - 1

    @property
    def cls(self) -> tuple[int, int]:
        return (self.a, self.b)

    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other: SectionPoly) -> SectionPoly:
        return multiply(self, other)

    def __add__(self, other: SectionPoly) -> SectionPoly:
        if (self.degrees, self.cls) != (other.degrees, other.cls):
            raise ValueError("cannot add sections of different classes")
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, 0) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return SectionPoly(self.degrees, self.a, self.b, terms)

    def scale(self, c) -> SectionPoly:
        c = Fraction(c)
        if c == 0:
            return SectionPoly(self.degrees, self.a, self.b, {})
        return SectionPoly(
            self.degrees, self.a, self.b, {k: c * v for k, v in self.terms.items()}
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = _var_names(self.n) if self.degrees == fiber_degrees(self.n) else [
            f"x{m}" for m in range(len(self.degrees))
        ]
        out = []
        for (k, (i, j)), c in sorted(self.terms.items()):
            fib = " ".join(f"{x}^{e}" for x, e in zip(names, k))
            out.append(f"{c} * {fib} * s^{i} u^{j}")
        return " + ".join(out)


@dataclass(frozen=True)
class SectionBasis:
    cls: tuple[int, int]
    elements: tuple[SectionPoly, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[SectionPoly]:
        return iter(self.elements)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def monomial_basis(n: int, a: int, b: int) -> SectionBasis:
    if a < 0:
        raise ValueError(f"no sections for a = {a} < 0")
    degrees = fiber_degrees(n)
    elements = []
    for k in _compositions(a, n + 1):
        base = b + sum(e * d for e, d in zip(k, degrees))
        for i in range(base, -1, -1):
            elements.append(
                SectionPoly(degrees, a, b, {(k, (i, base - i)): Fraction(1)})
            )
    return SectionBasis((a, b), tuple(elements))


def monomial(n: int, k: Iterable[int], base: tuple[int, int], b: int, coeff=1):
    """A single monomial section, e.g. ``z`` in class (1, 1) is ``monomial(n, (1,0,..), (0,0), 1)``."""
    k = tuple(k)
    return SectionPoly(fiber_degrees(n), sum(k), b, {(k, base): Fraction(coeff)})


def multiply(p: SectionPoly, q: SectionPoly) -> SectionPoly:
    if p.degrees != q.degrees:
        raise ValueError("sections live on different bundles")
    terms: dict[Key, Fraction] = {}
    for (k1, (i1, j1)), c1 in p.terms.items():
        for (k2, (i2, j2)), c2 in q.terms.items():
            key = (tuple(x + y for x, y in zip(k1, k2)), (i1 + i2, j1 + j2))
            terms[key] = terms.get(key, 0) + c1 * c2
    terms = {k: c for k, c in terms.items() if c}
    return SectionPoly(p.degrees, p.a + q.a, p.b + q.b, terms)


def vanishing_order_along_C(p: SectionPoly) -> int:
    if not p.terms:
        raise ZeroSectionError("vanishing order of the zero section is undefined")
    return min(sum(k[1:]) for (k, _) in p.terms)


def rank_of_span(vectors: Iterable[SectionPoly], cls: tuple[int, int]) -> int:
    """Exact rank over Q by sparse Gaussian elimination on monomial coordinates."""
    pivots: dict[Key, dict[Key, Fraction]] = {}
    for vec in vectors:
        if vec.cls != tuple(cls):
            raise ValueError(f"section of class {vec.cls} in span of class {cls}")
        row = dict(vec.terms)
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                inv = 1 / row[lead]
                pivots[lead] = {k: c * inv for k, c in row.items()}
                break
            factor = row[lead]
            for k, c in pivot.items():
                s = row.get(k, 0) - factor * c
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
    return len(pivots)


def _generic_basis(basis: SectionBasis, rng: random.Random) -> list[SectionPoly]:
    """Random integer change of basis, unitriangular so it stays invertible."""
    els = list(basis.elements)
    out = []
    for idx, e in enumerate(els):
        acc = e
        for other in els[idx + 1 :]:
            acc = acc + other.scale(rng.randint(-3, 3))
        out.append(acc)
    return out


def _products(factors: list[SectionPoly], count: int) -> list[SectionPoly]:
    out = []
    for combo in combinations_with_replacement(factors, count):
        prod = combo[0]
        for x in combo[1:]:
            prod = prod * x
        out.append(prod)
    return out


def psi_generators(n: int, seed: int | None = None) -> Iterator[SectionPoly]:
    """Products of ``n-1`` sections of O(t) and two sections of O(t+f).

    With ``seed`` set, both factor bases are replaced by random invertible
    combinations of the monomial bases.
    """
    t_basis = list(monomial_basis(n, 1, 0))
    tf_basis = list(monomial_basis(n, 1, 1))
    if seed is not None:
        rng = random.Random(seed)
        t_basis = _generic_basis(SectionBasis((1, 0), tuple(t_basis)), rng)
        tf_basis = _generic_basis(SectionBasis((1, 1), tuple(tf_basis)), rng)
    left = _products(t_basis, n - 1)
    right = _products(tf_basis, 2)
    for x in left:
        for y in right:
            yield x * y


def image_of_psi(n: int, max_n: int = DEFAULT_PSI_MAX_N, seed: int | None = None) -> int:
    """Rank of the multiplication map S^(n-1) H^0(t) (x) S^2 H^0(t+f) -> H^0(-K)."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if n > max_n:
        raise ValueError(
            f"image_of_psi enumerates {comb(2 * n - 1, n - 1) * comb(2 * n + 3, 2)}"
            f" products at n={n}; raise max_n (currently {max_n}) to allow it"
        )
    return rank_of_span(psi_generators(n, seed), (n + 1, 2))


def psi_prime_rank(n: int, max_n: int = DEFAULT_PSI_MAX_N) -> int:
    """Joint rank of the three product shapes spanning V.

    ``n+1`` sections of O(t) times two of O(f); ``n`` of O(t), one of O(f) and
    the section ``z`` of O(t+f); ``n-1`` of O(t) times ``z^2``.
    """
    if n > max_n:
        raise ValueError(f"psi_prime_rank capped at n <= {max_n}")
    t_basis = list(monomial_basis(n, 1, 0))
    f_basis = list(monomial_basis(n, 0, 1))
    z = monomial(n, (1,) + (0,) * n, (0, 0), 1)
    gens: list[SectionPoly] = []
    f2 = _products(f_basis, 2)
    for x in _products(t_basis, n + 1):
        gens.extend(x * y for y in f2)
    for x in _products(t_basis, n):
        gens.extend(x * y * z for y in f_basis)
    for x in _products(t_basis, n - 1):
        gens.append(x * z * z)
    return rank_of_span(gens, (n + 1, 2))


def count_high_order_monomials(n: int, order: int) -> int:
    """Number of anticanonical basis monomials vanishing to ``order`` along C."""
    return sum(
        1 for e in monomial_basis(n, n + 1, 2) if vanishing_order_along_C(e) >= order
    )


def basis_size_matches_pushforward(n: int, a: int, b: int) -> bool:
    return len(monomial_basis(n, a, b)) == h0_bundle(
        pushforward(P2(n), DivisorClass(a, b))
    )


def point_filtration_dims(m: int, d: int) -> list[int]:
    """``dim W^p`` for degree-``d`` forms on P^(m-1) vanishing to order ``p`` at a point."""
    if m < 2 or d < 0:
        raise ValueError(f"need m >= 2 and d >= 0, got m={m}, d={d}")
    # W^p / W^(p+1) = S^p V_(m-1) (x) S^(d-p) V_1
    graded = [comb(m - 2 + j, j) for j in range(d + 1)]
    return [sum(graded[p:]) for p in range(d + 2)]

