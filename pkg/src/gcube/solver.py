"""Critical exponent solver.

For fixed side n and box order k, the objective always attains the value 1
exactly at every vertex of the probability simplex, so the supremum M(t)
satisfies M(t) > 1 strictly below the critical exponent and M(t) = 1 at and
above it.  The solver therefore bisects on t with the strict predicate
"best found maximum > 1", which converges to the infimum edge of the
plateau where M is identically 1.

The inner maximization is the soft spot because the objective is not
concave.  It is attacked in three deterministic stages: a dense simplex
grid, a batched projected-gradient ascent with per-candidate backtracking
started from the best grid points plus structured and seeded random
interior points, and a Newton polish on the active face of the few best
survivors.  The candidate pool always contains the exact vertices, so the
reported maximum is never below 1.  All partial derivatives of the
objective are nonnegative, which keeps the ascent on the current face:
the simplex projection only ever removes mass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gowers import energy_P
from .lattice import interval_set
from .terms import objective, term_groups

_LOG_ZERO = -1e300
_GRID_POINT_CAP = 200_000


class BracketError(RuntimeError):
    """Initial bisection bracket failed its sign check."""


@dataclass(frozen=True)
class SolverConfig:
    t_tolerance: float = 1e-9
    inner_grid_resolution: int = 64
    multistart_count: int = 32
    polish_iterations: int = 200
    rng_seed: int = 0
    grid_top: int = 50
    symmetric: bool = False

    def __post_init__(self):
        if self.t_tolerance <= 0:
            raise ValueError("t_tolerance must be positive")
        for name in ("inner_grid_resolution", "multistart_count",
                     "polish_iterations", "grid_top"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class ExponentPair:
    k: int
    n: int
    t: float
    p: float
    residual: float
    bracket_width: float
    argmax: tuple

    def __post_init__(self):
        if abs(self.p * self.t - 2.0 ** self.k) > 1e-12 * 2.0 ** self.k:
            raise ValueError("p * t must equal 2^k")
        if self.t > self.k + 1 + 1e-9:
            raise ValueError("t exceeds the trivial upper bound k + 1")


@dataclass(frozen=True)
class _TermMatrix:
    Q: np.ndarray  # (groups, n) exponent fractions as floats
    c: np.ndarray  # (groups,) summed coefficients


@lru_cache(maxsize=None)
def _term_matrix(n, k):
    groups = term_groups(n, k)
    Q = np.array([[float(q) for q in grp.q] for grp in groups], dtype=float)
    c = np.array([float(grp.coefficient) for grp in groups], dtype=float)
    Q.setflags(write=False)
    c.setflags(write=False)
    return _TermMatrix(Q, c)


def _effective_resolution(n, base):
    # Full resolution through n = 4, halved for n in {5, 6}, then halved
    # further until the simplex grid stays below the point cap.
    if n <= 4:
        return base
    r = max(2, base // 2)
    if n <= 6:
        return r
    while r > 2 and math.comb(r + n - 1, n - 1) > _GRID_POINT_CAP:
        r //= 2
    return max(2, r)


@lru_cache(maxsize=None)
def _simplex_grid(n, r):
    pts = []
    comp = [0] * n

    def rec(i, rem):
        if i == n - 1:
            comp[i] = rem
            pts.append(tuple(comp))
            return
        for v in range(rem + 1):
            comp[i] = v
            rec(i + 1, rem - v)

    rec(0, r)
    arr = np.array(pts, dtype=float) / r
    arr.setflags(write=False)
    return arr


def _log_rows(G):
    out = np.full_like(G, _LOG_ZERO)
    np.log(G, out=out, where=G > 0)
    return out


def _phi_batch(G, t, tm):
    return np.exp(t * (_log_rows(G) @ tm.Q.T)) @ tm.c


_COORD_FLOOR = 1e-15


def _grad_batch(G, t, tm):
    W = np.exp(t * (_log_rows(G) @ tm.Q.T)) * tm.c
    S = W @ tm.Q
    grad = np.zeros_like(G)
    # Coordinates at or below the floor count as being on the face; the
    # fractional powers have unbounded slope there.
    np.divide(t * S, G, out=grad, where=G > _COORD_FLOOR)
    return grad


def _project_rows(y):
    # Euclidean projection of each row onto the probability simplex.
    # Near-zero output coordinates are snapped to exact zero (their gradient
    # would overflow) and the row is renormalized.
    n = y.shape[1]
    u = np.sort(y, axis=1)[:, ::-1]
    css = np.cumsum(u, axis=1) - 1.0
    idx = np.arange(1, n + 1)
    cond = u - css / idx > 0
    rho = n - 1 - np.argmax(cond[:, ::-1], axis=1)
    theta = css[np.arange(len(y)), rho] / (rho + 1)
    out = np.maximum(y - theta[:, None], 0.0)
    out[out < _COORD_FLOOR] = 0.0
    return out / out.sum(axis=1, keepdims=True)


def _ascend(G, t, tm, iters):
    G = G.copy()
    vals = _phi_batch(G, t, tm)
    step = np.full(len(G), 0.1)
    for _ in range(iters):
        grad = _grad_batch(G, t, tm)
        cand = _project_rows(G + step[:, None] * grad)
        cvals = _phi_batch(cand, t, tm)
        better = cvals > vals
        G[better] = cand[better]
        vals[better] = cvals[better]
        step[better] *= 1.3
        step[~better] *= 0.5
        if step.max() < 1e-18:
            break
    return G, vals


def _newton_refine(g, t, tm, iters=12):
    # Quadratic polish on the active face; coordinates at exactly zero stay
    # zero (fractional powers have infinite slope there, so the face is
    # where a stationary interior point can live).
    g = g.copy()
    best = float(_phi_batch(g[None, :], t, tm)[0])
    for _ in range(iters):
        act = g > 1e-13
        na = int(act.sum())
        if na < 2:
            break
        off = ~act
        if off.any():
            keep = ~(tm.Q[:, off] > 0).any(axis=1)
        else:
            keep = np.ones(len(tm.c), dtype=bool)
        Qa = tm.Q[np.ix_(keep, act)]
        ca = tm.c[keep]
        ga = g[act]
        w = np.exp(t * (Qa @ np.log(ga))) * ca
        grad = t * (w @ Qa) / ga
        U = t * Qa / ga[None, :]
        H = (U * w[:, None]).T @ U - np.diag((w @ (t * Qa)) / ga ** 2)
        B = np.hstack([np.eye(na - 1), -np.ones((na - 1, 1))])
        Hr = B @ H @ B.T
        gr = B @ grad
        try:
            x = np.linalg.solve(Hr, -gr)
        except np.linalg.LinAlgError:
            break
        d = B.T @ x
        if not np.all(np.isfinite(d)):
            break
        alpha = 1.0
        improved = False
        for _ in range(40):
            cand = ga + alpha * d
            if cand.min() > 0.0:
                gc = g.copy()
                gc[act] = cand
                val = float(_phi_batch(gc[None, :], t, tm)[0])
                if val > best:
                    g, best = gc, val
                    improved = True
                    break
            alpha *= 0.5
        if not improved:
            break
    return g, best


def _structured_seeds(n, k):
    seeds = [np.full((1, n), 1.0 / n)]
    binom = np.array([math.comb(n - 1, j) for j in range(n)], dtype=float)
    seeds.append((binom / binom.sum())[None, :])
    for M in (1.5, 2.0, 3.0):
        prof = np.array(gaussian_witness(n, M), dtype=float)
        # Normalize the peak to 1 before powering; 2^k/(k+1) is large and
        # would otherwise underflow the whole profile to zero.
        powered = (prof / prof.max()) ** (2.0 ** k / (k + 1.0))
        seeds.append((powered / powered.sum())[None, :])
    return seeds


def max_objective(n, k, t, cfg: SolverConfig | None = None):
    """Best found value of the objective over the simplex at exponent t.

    Returns (value, argmax); the value is a certified lower estimate of the
    true supremum (every reported value is an exact evaluation), at least 1
    because the vertices are always in the candidate pool.  Deterministic
    for a fixed config."""
    cfg = cfg or SolverConfig()
    if not t > 0:
        raise ValueError("t must be positive")
    tm = _term_matrix(n, k)
    grid = _simplex_grid(n, _effective_resolution(n, cfg.inner_grid_resolution))
    if cfg.symmetric:
        grid = grid[np.all(grid == grid[:, ::-1], axis=1)]
    gvals = _phi_batch(grid, t, tm)
    top = np.argsort(gvals, kind="stable")[::-1][: cfg.grid_top]
    rng = np.random.default_rng(cfg.rng_seed)
    blocks = [grid[top], np.eye(n)]
    blocks.extend(_structured_seeds(n, k))
    blocks.append(rng.dirichlet(np.ones(n), size=cfg.multistart_count))
    cands = np.vstack(blocks)
    if cfg.symmetric:
        cands = 0.5 * (cands + cands[:, ::-1])
    cands, vals = _ascend(cands, t, tm, cfg.polish_iterations)
    pool = [(float(vals[i]), cands[i]) for i in range(len(cands))]
    for i in np.argsort(vals, kind="stable")[::-1][:5]:
        g_ref, v_ref = _newton_refine(cands[i], t, tm)
        pool.append((v_ref, g_ref))
    best_val = max(v for v, _ in pool)
    ties = [tuple(g.tolist()) for v, g in pool if v == best_val]
    return best_val, min(ties)


def solve_exponent(n: int, k: int, cfg: SolverConfig | None = None) -> ExponentPair:
    """Bisection on t over [1, k+1] for the smallest t with M(t) = 1."""
    cfg = cfg or SolverConfig()
    if n < 2 or k < 2:
        raise ValueError("n >= 2 and k >= 2 required")
    lo, hi = 1.0, float(k + 1)
    v_lo, _ = max_objective(n, k, lo, cfg)
    v_hi, _ = max_objective(n, k, hi, cfg)
    if not (v_lo > 1.0 >= v_hi):
        raise BracketError(
            f"bracket [1, {k + 1}] invalid for n={n}, k={k}: "
            f"M(lo)={v_lo!r}, M(hi)={v_hi!r}"
        )
    while hi - lo > cfg.t_tolerance:
        mid = 0.5 * (lo + hi)
        v, _ = max_objective(n, k, mid, cfg)
        if v > 1.0:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    v, argmax = max_objective(n, k, t, cfg)
    return ExponentPair(
        k=k,
        n=n,
        t=t,
        p=2.0 ** k / t,
        residual=abs(v - 1.0),
        bracket_width=hi - lo,
        argmax=tuple(argmax),
    )


def witness_lower_bound(n: int, k: int, g) -> float:
    """Unique root in t of objective(g) = 1 for a non-degenerate simplex
    point g; always a lower bound for the critical exponent."""
    g = tuple(float(x) for x in g)
    if max(g) > 1.0 - 1e-12:
        raise ValueError("point mass gives the constant objective 1, no root")
    lo, hi = 1e-9, float(k + 1)
    guard = 0
    while objective(n, k, hi, g) > 1.0:
        hi *= 2.0
        guard += 1
        if guard > 60:
            raise ArithmeticError("witness objective does not drop below 1")
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if objective(n, k, mid, g) > 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def trivial_bounds(n: int, k: int) -> tuple:
    """(log_n of the full-interval box count, k + 1); these always sandwich
    the critical exponent."""
    pk = energy_P(interval_set(n), k)
    return (math.log(pk) / math.log(n), float(k + 1))


def gaussian_witness(n: int, M: float) -> tuple:
    """Truncated discrete Gaussian profile exp(-4 M^2 (m/n - 1/2)^2) on
    {0, ..., n-1}."""
    if not M > 1:
        raise ValueError("M must be > 1")
    if n < 2:
        raise ValueError("n must be >= 2")
    return tuple(
        math.exp(-4.0 * M * M * (m / n - 0.5) ** 2) for m in range(n)
    )


def profile_to_simplex(profile, power: float) -> tuple:
    """Normalize profile**power onto the simplex."""
    w = [float(v) ** power for v in profile]
    s = sum(w)
    if s <= 0:
        raise ValueError("profile has no mass")
    return tuple(v / s for v in w)


def gaussian_witness_bound(n: int, M: float, k: int, rounds: int = 6) -> float:
    """Lower bound on the critical exponent from the Gaussian profile.

    The profile enters through g proportional to f^(2^k / t); t is refined
    by fixed-point iteration and every iterate is itself a valid bound, so
    the best one is returned."""
    prof = gaussian_witness(n, M)
    t = float(k + 1)
    best = 0.0
    for _ in range(rounds):
        g = profile_to_simplex(prof, 2.0 ** k / t)
        t = witness_lower_bound(n, k, g)
        best = max(best, t)
    return best
