"""Brute-force oracles.  None of these call into the code paths they check."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import comb, factorial

ENUMERATION_CAP = 10_000


def exponent_vectors(r: int, d: int):
    """All ``k`` in ``N^r`` with ``sum(k) == d``, by filtering the full box."""
    for k in product(range(d + 1), repeat=r):
        if sum(k) == d:
            yield k


def sym_pow_enumerated(summands: list[int], d: int) -> dict[int, int]:
    """Degree multiset of ``S^d`` of ``O(a_1) + ... + O(a_r)`` by listing monomials."""
    r = len(summands)
    if r == 0:
        return {0: 1} if d == 0 else {}
    if comb(r + d - 1, d) > ENUMERATION_CAP:
        raise ValueError("enumeration oracle is capped")
    out = Counter()
    for k in exponent_vectors(r, d):
        out[sum(e * a for e, a in zip(k, summands))] += 1
    return dict(out)


def h0_filtration_binomial(n: int, p: int) -> int:
    """``h^0(G^p(2))`` summed term by term from binomial coefficients."""
    total = 0
    for i in range(n + 2 - p):  # exponent of the O(-1) variable
        k = n + 1 - i
        for j in range(k + 1):  # exponent of the O(1) variable
            mult = comb(n - 2 + k - j, k - j)
            total += mult * max(j - i + 3, 0)
    return total


def dense_rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col] / pr[col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], pr)]
        rank += 1
    return rank


def forms_vanishing_at_point(m: int, d: int, p: int, point=None) -> int:
    """Dimension of degree-``d`` forms in ``m`` variables vanishing to order ``p`` at ``point``.

    Vanishing to order ``p`` means every partial derivative of order ``< p``
    is zero at the point.  The point defaults to ``(1, 2, 3, 5, ...)``.
    """
    point = point or [1, 2, 3, 5, 7, 11][:m]
    monos = list(exponent_vectors(m, d))
    if p == 0:
        return len(monos)
    conditions = [a for s in range(p) for a in exponent_vectors(m, s)]
    rows = []
    for alpha in conditions:
        row = []
        for beta in monos:
            val = Fraction(1)
            for ai, bi, x in zip(alpha, beta, point):
                if ai > bi:
                    val = Fraction(0)
                    break
                val *= Fraction(factorial(bi), factorial(bi - ai)) * x ** (bi - ai)
            row.append(val)
        rows.append(row)
    return len(monos) - dense_rank(rows)


def finite_difference(values: list[int], order: int) -> list[int]:
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values
