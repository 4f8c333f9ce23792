"""Sparse functions and finite point sets on the integer lattice.

A LatticeFunction is a finitely supported map from Z^d into the complex
numbers, stored as a dict keyed by integer coordinate tuples; values that
are exactly zero are never stored.  Dimension d = 0 is legal and means the
one-point lattice, so a function on it is a single scalar.  A CubeSet is a
finite subset of {0, ..., n-1}^d tracked with its exact cardinality.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import product as _product


def _check_point(p, dim):
    if not isinstance(p, tuple) or len(p) != dim:
        raise ValueError(f"point {p!r} does not have dimension {dim}")
    for c in p:
        if not isinstance(c, int):
            raise ValueError(f"point {p!r} has a non-integer coordinate {c!r}")


@dataclass(frozen=True)
class LatticeFunction:
    """Finitely supported f: Z^dim -> C with zero values dropped."""

    dim: int
    entries: dict

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be >= 0")
        clean = {}
        for p, v in self.entries.items():
            p = tuple(p)
            _check_point(p, self.dim)
            v = complex(v)
            if v != 0:
                clean[p] = v
        object.__setattr__(self, "entries", clean)

    @property
    def support(self):
        """Support points in sorted (lexicographic) order."""
        return sorted(self.entries)

    def __call__(self, p):
        return self.entries.get(tuple(p), 0j)

    def __add__(self, other):
        if not isinstance(other, LatticeFunction):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        out = dict(self.entries)
        for p, v in other.entries.items():
            out[p] = out.get(p, 0j) + v
        return LatticeFunction(self.dim, out)

    def __rmul__(self, scalar):
        s = complex(scalar)
        return LatticeFunction(self.dim, {p: s * v for p, v in self.entries.items()})

    __mul__ = __rmul__


def indicator(points, dim=None):
    """Indicator function of a finite set of lattice points."""
    pts = [tuple(p) for p in points]
    if dim is None:
        if not pts:
            raise ValueError("dim is required for an empty point set")
        dim = len(pts[0])
    return LatticeFunction(dim, {p: 1.0 for p in pts})


def delta(dim=1):
    """Unit mass at the origin of Z^dim."""
    return LatticeFunction(dim, {(0,) * dim: 1.0})


@dataclass(frozen=True)
class CubeSet:
    """Finite subset of {0, ..., side-1}^dim."""

    dim: int
    side: int
    members: frozenset

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be >= 0")
        if self.side < 1:
            raise ValueError("side must be >= 1")
        pts = frozenset(tuple(p) for p in self.members)
        for p in pts:
            _check_point(p, self.dim)
            if any(c < 0 or c >= self.side for c in p):
                raise ValueError(f"point {p!r} lies outside the side-{self.side} cube")
        object.__setattr__(self, "members", pts)

    @property
    def size(self):
        return len(self.members)

    def indicator(self):
        return indicator(self.members, dim=self.dim)


def interval_set(n):
    """The full interval {0, ..., n-1} as a one-dimensional CubeSet."""
    return CubeSet(1, n, frozenset((j,) for j in range(n)))


def lp_norm(f: LatticeFunction, p) -> float:
    """ell^p norm of f; p = math.inf gives the sup norm, p > 0 required."""
    if p != math.inf and not p > 0:
        raise ValueError("p must be positive or infinity")
    vals = [abs(f.entries[k]) for k in sorted(f.entries)]
    if not vals:
        return 0.0
    vmax = max(vals)
    if p == math.inf or vmax == 0.0:
        return vmax
    # Scale by the largest value so v**p cannot overflow for large p.
    total = sum((v / vmax) ** p for v in vals)
    return vmax * total ** (1.0 / p)


def convolve(f: LatticeFunction, g: LatticeFunction) -> LatticeFunction:
    """(f * g)(x) = sum_y f(x - y) g(y), supports added coordinatewise."""
    if f.dim != g.dim:
        raise ValueError("dimension mismatch")
    out = {}
    for x in sorted(f.entries):
        fx = f.entries[x]
        for y in sorted(g.entries):
            z = tuple(a + b for a, b in zip(x, y))
            out[z] = out.get(z, 0j) + fx * g.entries[y]
    return LatticeFunction(f.dim, out)


def reflect(f: LatticeFunction) -> LatticeFunction:
    """Reflection x -> f(-x); preserves every ell^p norm."""
    return LatticeFunction(f.dim, {tuple(-c for c in p): v for p, v in f.entries.items()})


def tensor_power(g: LatticeFunction, d: int) -> LatticeFunction:
    """d-fold tensor power of a one-dimensional function."""
    if g.dim != 1:
        raise ValueError("tensor_power requires a one-dimensional function")
    if d < 1:
        raise ValueError("tensor power requires d >= 1")
    entries = {}
    supp = sorted(g.entries)
    for combo in _product(supp, repeat=d):
        v = 1.0 + 0j
        for p in combo:
            v *= g.entries[p]
        entries[tuple(p[0] for p in combo)] = v
    return LatticeFunction(d, entries)


# JSON wire formats.
#   function: {"d": int, "entries": [{"p": [ints], "re": float, "im": float}]}
#   set:      {"d": int, "n": int, "members": [[ints]]}

def function_to_json(f: LatticeFunction) -> dict:
    return {
        "d": f.dim,
        "entries": [
            {"p": list(p), "re": f.entries[p].real, "im": f.entries[p].imag}
            for p in sorted(f.entries)
        ],
    }


def function_from_json(obj) -> LatticeFunction:
    try:
        dim = int(obj["d"])
        entries = {}
        for e in obj["entries"]:
            p = tuple(int(c) for c in e["p"])
            entries[p] = complex(float(e["re"]), float(e.get("im", 0.0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed function JSON: {exc}") from exc
    return LatticeFunction(dim, entries)


def set_to_json(A: CubeSet) -> dict:
    return {"d": A.dim, "n": A.side, "members": [list(p) for p in sorted(A.members)]}


def set_from_json(obj) -> CubeSet:
    try:
        dim = int(obj["d"])
        side = int(obj["n"])
        members = frozenset(tuple(int(c) for c in p) for p in obj["members"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed set JSON: {exc}") from exc
    return CubeSet(dim, side, members)


def load_function(path) -> LatticeFunction:
    with open(path) as fh:
        return function_from_json(json.load(fh))


def load_set(path) -> CubeSet:
    with open(path) as fh:
        return set_from_json(json.load(fh))
