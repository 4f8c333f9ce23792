"""Tuple classes, their probability exponent vectors, and the normalized
simplex objective.

A tuple (a, h_1, ..., h_l) with all h_i nonzero is admissible for side
length n when every epsilon-combination a + eps . h stays in
{0, ..., n-1}; that forces |h_1| + ... + |h_l| <= n - 1, which keeps the
classes finite.  Each tuple carries a dyadic probability vector
q_j = 2^{-l} |{eps : a + eps . h = j}|, and the objective is the sum of
g(j)^t over the diagonal plus C(k, l)-weighted monomials
prod_j g(j)^{q_j t} over all admissible tuples.

The q vectors are kept as exact Fractions and turned into floats only at
evaluation time, and terms with identical q are merged with summed
coefficients, so every evaluation works on a small deterministic table.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _product

_SIMPLEX_TOL = 1e-12


@dataclass(frozen=True)
class TupleClass:
    """All admissible (a, h) tuples with exactly l nonzero steps."""

    n: int
    l: int
    tuples: tuple  # of (a, (h_1, ..., h_l))

    @property
    def size(self):
        return len(self.tuples)


@dataclass(frozen=True)
class TermGroup:
    """Monomial group: summed integer coefficient and a shared q vector."""

    coefficient: int
    q: tuple  # of Fractions, length n, summing to 1 exactly


def iter_signed_vectors(budget, l):
    """All l-tuples of nonzero integers with sum of |h_i| <= budget,
    in ascending lexicographic order."""
    if l == 0:
        yield ()
        return
    max_mag = budget - (l - 1)
    for v in range(-max_mag, max_mag + 1):
        if v == 0:
            continue
        for rest in iter_signed_vectors(budget - abs(v), l - 1):
            yield (v,) + rest


def enumerate_tuple_classes(n: int) -> list:
    """TupleClass tables for l = 1, ..., n-1; exhaustive and duplicate-free."""
    if n < 2:
        raise ValueError("n must be >= 2")
    classes = []
    for l in range(1, n):
        tuples = []
        for h in iter_signed_vectors(n - 1, l):
            pos = sum(v for v in h if v > 0)
            neg = sum(v for v in h if v < 0)
            for a in range(-neg, n - pos):
                tuples.append((a, h))
        tuples.sort()
        classes.append(TupleClass(n, l, tuple(tuples)))
    return classes


def pmf_of_tuple(n: int, a: int, h) -> tuple:
    """Exact dyadic distribution of a + h . eps over uniform eps in {0,1}^l.

    q_j = 2^{-l} |{eps : a + eps . h = j}| as Fractions that sum to 1."""
    h = tuple(h)
    l = len(h)
    if any(v == 0 for v in h):
        raise ValueError("all steps h_i must be nonzero")
    lo = a + sum(v for v in h if v < 0)
    hi = a + sum(v for v in h if v > 0)
    if lo < 0 or hi > n - 1:
        raise ValueError(f"tuple (a={a}, h={h}) leaves the interval [0, {n - 1}]")
    counts = Counter()
    for eps in _product((0, 1), repeat=l):
        counts[a + sum(v for v, e in zip(h, eps) if e)] += 1
    scale = Fraction(1, 2 ** l)
    return tuple(counts.get(j, 0) * scale for j in range(n))


@lru_cache(maxsize=None)
def term_groups(n: int, k: int) -> tuple:
    """Merged TermGroup table for side n and box order k.

    Contains the n diagonal point masses with coefficient 1 plus every
    admissible tuple weighted C(k, l); tuples with identical q are merged.
    Deterministically ordered by descending lexicographic q."""
    if n < 2 or k < 1:
        raise ValueError("n >= 2 and k >= 1 required")
    merged = Counter()
    for j in range(n):
        q = tuple(Fraction(1) if i == j else Fraction(0) for i in range(n))
        merged[q] += 1
    for cls in enumerate_tuple_classes(n):
        weight = math.comb(k, cls.l)
        if weight == 0:
            continue
        for a, h in cls.tuples:
            merged[pmf_of_tuple(n, a, h)] += weight
    return tuple(
        TermGroup(coefficient=merged[q], q=q) for q in sorted(merged, reverse=True)
    )


def _check_simplex(g, n):
    g = tuple(float(x) for x in g)
    if len(g) != n:
        raise ValueError(f"expected a vector of length {n}")
    if any(x < 0 for x in g):
        raise ValueError("simplex vector has a negative entry")
    if abs(sum(g) - 1.0) > _SIMPLEX_TOL:
        raise ValueError("simplex vector does not sum to 1")
    return g


def objective(n: int, k: int, t: float, g) -> float:
    """Value of the normalized objective at exponent t and simplex point g.

    Each group contributes coefficient * prod_j g(j)^(q_j t) with the
    conventions 0^0 = 1 and 0^s = 0 for s > 0."""
    if not t > 0:
        raise ValueError("t must be positive")
    g = _check_simplex(g, n)
    total = 0.0
    for group in term_groups(n, k):
        prod = 1.0
        for gj, qj in zip(g, group.q):
            if qj == 0:
                continue
            if gj == 0.0:
                prod = 0.0
                break
            prod *= gj ** (float(qj) * t)
        total += group.coefficient * prod
    return total


def ternary_objective_check(k: int, t: float, x: float, y: float, z: float) -> float:
    """Closed-form side-3 objective, written out monomial by monomial."""
    s = t / 2.0
    q = t / 4.0
    return (
        x ** t
        + y ** t
        + z ** t
        + 2 * k * x ** s * y ** s
        + 2 * k * y ** s * z ** s
        + 2 * k * x ** s * z ** s
        + 2 * k * (k - 1) * x ** q * y ** s * z ** q
    )
