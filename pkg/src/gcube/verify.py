"""Named verification suites behind the `verify` subcommand.

Each suite runs a batch of deterministic checks (exhaustive where the
range is finite, seeded random trials otherwise) and returns a report
listing any counterexamples.
"""

from __future__ import annotations

import math
import random
from itertools import product as _product

import numpy as np

from .asymptotics import leading_coefficient
from .entropy import (
    VerificationReport,
    binomial_entropy,
    binomial_entropy_bounds,
    verify_entropy_corollary,
    verify_majorization_lemma,
)
from .gowers import (
    GowersSystem,
    gowers_inner_product,
    gowers_norm_recursive,
    energy_P,
)
from .lattice import LatticeFunction, convolve, interval_set, lp_norm, tensor_power
from .terms import enumerate_tuple_classes, objective, term_groups

TABLE_VALUES = {
    2: 1.0,
    3: 1.3333333333,
    4: 1.6562889815,
    5: 1.9698232317,
    6: 2.2745961522,
}


def binary_suite(k_min=2, k_max=10, grid_points=10_000, tol=1e-12):
    """Grid check of x^t + (1-x)^t + 2k (x(1-x))^(t/2) <= 1 on [0, 1] at
    t = log2(2k+2), with exact value 1 at x = 1/2."""
    rep = VerificationReport("binary")
    xs = np.linspace(0.0, 1.0, grid_points)
    for k in range(k_min, k_max + 1):
        t = math.log2(2 * k + 2)
        vals = xs ** t + (1.0 - xs) ** t + 2 * k * (xs * (1.0 - xs)) ** (t / 2.0)
        peak = float(vals.max())
        rep.record(peak <= 1.0 + tol, f"k={k}: grid maximum {peak!r} exceeds 1")
        mid = 2.0 * 0.5 ** t + 2 * k * 0.25 ** (t / 2.0)
        rep.record(abs(mid - 1.0) <= tol, f"k={k}: value at 1/2 is {mid!r}")
    return rep


def terms_suite(trials=200, seed=1300):
    """Coefficient audit, class sizes, the uniform-point identity, and the
    random monotonicity and reflection properties of the objective."""
    rep = VerificationReport("terms")
    for k in (2, 3, 5):
        multiset = sorted(g.coefficient for g in term_groups(3, k))
        expected = sorted([1, 1, 1, 2 * k, 2 * k, 2 * k, 2 * k * (k - 1)])
        rep.record(
            multiset == expected,
            f"k={k}: coefficient multiset {multiset} != {expected}",
        )
    for n in range(2, 8):
        size = enumerate_tuple_classes(n)[-1].size
        rep.record(size == 2 ** (n - 1), f"n={n}: largest class has {size} tuples")
    for n in range(2, 6):
        for k in range(2, 5):
            pk = energy_P(interval_set(n), k)
            total = sum(g.coefficient for g in term_groups(n, k))
            rep.record(total == pk, f"n={n}, k={k}: coefficients sum to {total} != {pk}")
            for t in (1.7, 2.5, float(k + 1)):
                expect = pk * n ** (-t)
                val = objective(n, k, t, [1.0 / n] * n)
                rep.record(
                    abs(val - expect) <= 1e-12 * expect,
                    f"n={n}, k={k}, t={t}: uniform value {val!r} != {expect!r}",
                )
    merge(rep, check_objective_monotone(trials, seed))
    merge(rep, check_objective_symmetry(trials, seed + 1))
    return rep


def entropy_suite(m_max=1000, n_max=8):
    """Exact small entropies, strict two-sided bounds and strict ratio
    decrease up to m_max, the leading coefficient table, and the
    exhaustive small-side corollary checks."""
    rep = VerificationReport("entropy")
    rep.record(binomial_entropy(1) == 1.0, "H_1 != 1")
    rep.record(binomial_entropy(2) == 1.5, "H_2 != 3/2")
    prev = None
    for m in range(1, m_max + 1):
        h = binomial_entropy(m)
        lo, hi = binomial_entropy_bounds(m)
        rep.record(lo < h < hi, f"m={m}: H_m={h!r} outside ({lo!r}, {hi!r})")
        ratio = h / m
        if prev is not None:
            rep.record(ratio < prev, f"m={m}: H_m/m not strictly decreasing")
        prev = ratio
    for n, v in TABLE_VALUES.items():
        got = leading_coefficient(n)
        rep.record(abs(got - v) <= 1e-9, f"n={n}: coefficient {got!r} != {v}")
    for n in range(2, n_max + 1):
        sub = verify_entropy_corollary(n)
        rep.cases += sub.cases
        rep.failures.extend(sub.failures)
    return rep


def majorization_suite(m_max=4, h_bound=4):
    return verify_majorization_lemma(m_max, h_bound)


def merge(rep, other):
    rep.cases += other.cases
    rep.failures.extend(other.failures)
    return rep


def _random_function(rng, width=4, dim=1):
    # Complex values with magnitude in [0.1, 1.1]; support is a random
    # nonempty subset of the width-box.
    while True:
        entries = {}
        for p in _product(range(width), repeat=dim):
            if rng.random() < 0.7:
                mag = 0.1 + rng.random()
                phase = rng.uniform(0.0, 2.0 * math.pi)
                entries[p] = complex(mag * math.cos(phase), mag * math.sin(phase))
        if entries:
            return LatticeFunction(dim, entries)


def check_gcs(trials=200, seed=1100):
    """|Gowers inner product| <= product of the 2^k individual norms."""
    rep = VerificationReport("gcs")
    rng = random.Random(seed)
    for i in range(trials):
        k = rng.choice((2, 3))
        fns = {eps: _random_function(rng) for eps in _product((0, 1), repeat=k)}
        lhs = abs(gowers_inner_product(GowersSystem(k, fns)))
        rhs = 1.0
        for eps in sorted(fns):
            rhs *= gowers_norm_recursive(fns[eps], k) ** (0.5 ** k)
        rep.record(
            lhs <= rhs * (1.0 + 1e-9) + 1e-12,
            f"trial {i} (k={k}): inner product {lhs!r} exceeds bound {rhs!r}",
        )
    return rep


def check_triangle(trials=200, seed=1200):
    rep = VerificationReport("triangle")
    rng = random.Random(seed)
    for i in range(trials):
        k = rng.choice((2, 3))
        f1 = _random_function(rng)
        f2 = _random_function(rng)
        lhs = gowers_norm_recursive(f1 + f2, k) ** (0.5 ** k)
        rhs = (
            gowers_norm_recursive(f1, k) ** (0.5 ** k)
            + gowers_norm_recursive(f2, k) ** (0.5 ** k)
        )
        rep.record(
            lhs <= rhs * (1.0 + 1e-9) + 1e-12,
            f"trial {i} (k={k}): triangle fails, {lhs!r} > {rhs!r}",
        )
    return rep


def gcs_suite(trials=200, seed=1100):
    rep = check_gcs(trials, seed)
    return merge(rep, check_triangle(trials, seed + 100))


def check_young(trials=200, seed=1400):
    """Convolution norm bound over random admissible exponent triples."""
    rep = VerificationReport("young")
    rng = random.Random(seed)
    for i in range(trials):
        f = _random_function(rng, width=5)
        g = _random_function(rng, width=5)
        inv_r = rng.random()
        s = 1.0 + inv_r
        inv_p = rng.uniform(s - 1.0, 1.0)
        inv_q = s - inv_p
        p = math.inf if inv_p == 0 else 1.0 / inv_p
        q = math.inf if inv_q <= 0 else 1.0 / inv_q
        r = math.inf if inv_r == 0 else 1.0 / inv_r
        lhs = lp_norm(convolve(f, g), r)
        rhs = lp_norm(f, p) * lp_norm(g, q)
        rep.record(
            lhs <= rhs * (1.0 + 1e-9) + 1e-12,
            f"trial {i} (p={p}, q={q}, r={r}): {lhs!r} > {rhs!r}",
        )
    return rep


young_suite = check_young


def check_tensor(trials=200, seed=1500):
    """Box-norm multiplicativity of tensor powers, d <= 3."""
    rep = VerificationReport("tensor")
    rng = random.Random(seed)
    for i in range(trials):
        k = rng.choice((2, 3))
        d = rng.choice((1, 2, 3))
        g = _random_function(rng, width=2)
        lhs = gowers_norm_recursive(tensor_power(g, d), k)
        rhs = gowers_norm_recursive(g, k) ** d
        rep.record(
            abs(lhs - rhs) <= 1e-9 * (1.0 + abs(rhs)),
            f"trial {i} (k={k}, d={d}): {lhs!r} != {rhs!r}",
        )
    return rep


tensor_suite = check_tensor


def check_objective_monotone(trials=200, seed=1600):
    rep = VerificationReport("objective-monotone")
    rng = random.Random(seed)
    for i in range(trials):
        n = rng.choice((2, 3, 4))
        k = rng.choice((2, 3))
        raw = [rng.random() + 1e-3 for _ in range(n)]
        total = sum(raw)
        g = [x / total for x in raw]
        t1, t2 = sorted((rng.uniform(0.2, k + 1.0), rng.uniform(0.2, k + 1.0)))
        v1 = objective(n, k, t1, g)
        v2 = objective(n, k, t2, g)
        rep.record(
            v1 >= v2 - 1e-12,
            f"trial {i} (n={n}, k={k}): value rose from t={t1} to t={t2}",
        )
    return rep


def check_objective_symmetry(trials=200, seed=1700):
    rep = VerificationReport("objective-symmetry")
    rng = random.Random(seed)
    for i in range(trials):
        n = rng.choice((2, 3, 4, 5))
        k = rng.choice((2, 3))
        raw = [rng.random() for _ in range(n)]
        total = sum(raw)
        g = [x / total for x in raw]
        t = rng.uniform(0.5, k + 1.0)
        v1 = objective(n, k, t, g)
        v2 = objective(n, k, t, g[::-1])
        rep.record(
            abs(v1 - v2) <= 1e-12 * (1.0 + abs(v1)),
            f"trial {i} (n={n}, k={k}): reflection changed {v1!r} to {v2!r}",
        )
    return rep


SUITES = {
    "binary": binary_suite,
    "terms": terms_suite,
    "entropy": entropy_suite,
    "majorization": majorization_suite,
    "gcs": gcs_suite,
    "young": young_suite,
    "tensor": tensor_suite,
}
