"""Split vector bundles on P^1.

Every bundle here is a direct sum of line bundles ``O(a)`` and is stored as a
degree -> multiplicity map.  Multiplicities are Python ints, so ranks of large
symmetric powers never overflow.

>>> E = SplitBundle.parse("O(-1)+O^2+O(1)")
>>> E.rank, E.degree
(4, 0)
>>> h0_bundle(E)
4
>>> str(sym_pow(E, 2))
'O(-2)+O(-1)^2+O^4+O(1)^2+O(2)'
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from math import comb

__all__ = [
    "SplitBundle",
    "h0_line",
    "h1_line",
    "h0_bundle",
    "h1_bundle",
    "euler_characteristic",
    "twist",
    "direct_sum",
    "tensor",
    "sym_pow",
    "dual",
    "line",
    "trivial",
]


class SplitBundle:
    """Immutable multiset of line-bundle degrees on P^1."""

    __slots__ = ("_mult", "_key")

    def __init__(self, degrees: Mapping[int, int] | Iterable[int] = ()):
        mult: dict[int, int] = {}
        if isinstance(degrees, Mapping):
            for a, m in degrees.items():
                if m < 0:
                    raise ValueError(f"negative multiplicity {m} for degree {a}")
                mult[int(a)] = mult.get(int(a), 0) + int(m)
        else:
            for a in degrees:
                mult[int(a)] = mult.get(int(a), 0) + 1
        self._mult = {a: m for a, m in sorted(mult.items()) if m}
        self._key = tuple(self._mult.items())

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(self._mult)

    def items(self):
        return self._mult.items()

    def degrees(self) -> list[int]:
        return list(self._mult)

    def __getitem__(self, a: int) -> int:
        return self._mult.get(a, 0)

    def __contains__(self, a: object) -> bool:
        return a in self._mult

    def __len__(self) -> int:
        return len(self._mult)

    @property
    def rank(self) -> int:
        return sum(self._mult.values())

    @property
    def degree(self) -> int:
        """First Chern class."""
        return sum(a * m for a, m in self._mult.items())

    def is_empty(self) -> bool:
        return not self._mult

    def issubset(self, other: SplitBundle) -> bool:
        """Multiset inclusion (componentwise multiplicity dominance)."""
        return all(other[a] >= m for a, m in self._mult.items())

    def __sub__(self, other: SplitBundle) -> SplitBundle:
        if not other.issubset(self):
            raise ValueError(f"{other} is not a sub-multiset of {self}")
        return SplitBundle({a: m - other[a] for a, m in self._mult.items()})

    def __add__(self, other: SplitBundle) -> SplitBundle:
        return direct_sum(self, other)

    def __mul__(self, other: SplitBundle) -> SplitBundle:
        return tensor(self, other)

    def __call__(self, k: int) -> SplitBundle:
        """``E(k)``: the twist by ``O(k)``."""
        return twist(self, k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SplitBundle):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"SplitBundle({self._mult!r})"

    def __str__(self) -> str:
        if not self._mult:
            return "0"
        terms = []
        for a, m in self._mult.items():
            s = "O" if a == 0 else f"O({a})"
            if m != 1:
                s += f"^{m}"
            terms.append(s)
        return "+".join(terms)

    _TERM = re.compile(r"^O(?:\((-?\d+)\))?(?:\^(\d+))?$")

    @classmethod
    def parse(cls, text: str) -> SplitBundle:
        """Parse notation like ``"O(-1)+O^2+O(1)"``; ``"0"`` is the zero bundle."""
        text = text.replace(" ", "")
        if text in ("0", ""):
            return cls()
        mult: dict[int, int] = {}
        for term in text.split("+"):
            match = cls._TERM.match(term)
            if match is None:
                raise ValueError(f"cannot parse bundle term {term!r}")
            a = int(match.group(1) or 0)
            m = int(match.group(2) or 1)
            mult[a] = mult.get(a, 0) + m
        return cls(mult)


def line(a: int) -> SplitBundle:
    return SplitBundle({a: 1})


def trivial(r: int) -> SplitBundle:
    return SplitBundle({0: r})


def h0_line(a: int) -> int:
    return max(a + 1, 0)


def h1_line(a: int) -> int:
    # Serre duality: h^1(O(a)) = h^0(O(-2-a))
    return max(-a - 1, 0)


def h0_bundle(E: SplitBundle) -> int:
    return sum(m * h0_line(a) for a, m in E.items())


def h1_bundle(E: SplitBundle) -> int:
    return sum(m * h1_line(a) for a, m in E.items())


def euler_characteristic(E: SplitBundle) -> int:
    return E.degree + E.rank


def twist(E: SplitBundle, k: int) -> SplitBundle:
    return SplitBundle({a + k: m for a, m in E.items()})


def dual(E: SplitBundle) -> SplitBundle:
    return SplitBundle({-a: m for a, m in E.items()})


def direct_sum(*bundles: SplitBundle) -> SplitBundle:
    mult: dict[int, int] = {}
    for E in bundles:
        for a, m in E.items():
            mult[a] = mult.get(a, 0) + m
    return SplitBundle(mult)


def tensor(E: SplitBundle, F: SplitBundle) -> SplitBundle:
    mult: dict[int, int] = {}
    for a, m in E.items():
        for b, k in F.items():
            mult[a + b] = mult.get(a + b, 0) + m * k
    return SplitBundle(mult)


def sym_pow(E: SplitBundle, d: int) -> SplitBundle:
    """``S^d E`` by dynamic programming over the distinct degrees of ``E``.

    A degree ``a`` of multiplicity ``m`` used with total exponent ``e``
    contributes weight ``e*a`` in ``C(m+e-1, e)`` ways; the table is indexed
    by (exponent used so far, accumulated weight).
    """
    if d < 0:
        raise ValueError(f"symmetric power degree must be >= 0, got {d}")
    # table[used] = {weight: count}
    table: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(d)]
    for a, m in E.items():
        new: list[dict[int, int]] = [{} for _ in range(d + 1)]
        for used, row in enumerate(table):
            if not row:
                continue
            for e in range(d - used + 1):
                ways = comb(m + e - 1, e)
                target = new[used + e]
                shift = e * a
                for w, c in row.items():
                    target[w + shift] = target.get(w + shift, 0) + c * ways
        table = new
    return SplitBundle(table[d])
