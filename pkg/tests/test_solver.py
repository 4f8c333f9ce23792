import math

import pytest

from conftest import solve_cached
from gcube.solver import (
    BracketError,
    SolverConfig,
    gaussian_witness,
    gaussian_witness_bound,
    max_objective,
    profile_to_simplex,
    solve_exponent,
    trivial_bounds,
    witness_lower_bound,
)
from gcube.terms import ternary_objective_check

LOG2_6 = math.log2(6)
LOG3_19 = math.log(19) / math.log(3)


def test_max_objective_binary_at_critical_t():
    value, argmax = max_objective(2, 2, LOG2_6)
    assert value == pytest.approx(1.0, abs=1e-9)
    assert argmax[0] == pytest.approx(0.5, abs=1e-6)
    value, _ = max_objective(2, 3, 3.0)
    assert value == pytest.approx(1.0, abs=1e-9)


def test_max_objective_ternary_above_critical_t():
    value, _ = max_objective(3, 2, 3.0)
    assert value <= 1.0 + 1e-12
    assert value == pytest.approx(1.0, abs=1e-12)  # vertices attain exactly 1


def test_solve_binary_golden_values():
    pair = solve_cached(2, 2)
    assert pair.t == pytest.approx(LOG2_6, abs=1e-6)
    pair = solve_cached(2, 3)
    assert pair.t == pytest.approx(3.0, abs=1e-6)
    pair = solve_cached(2, 5)
    assert pair.t == pytest.approx(math.log2(12), abs=1e-6)


def test_solve_ternary_golden_values():
    pair = solve_cached(3, 2)
    assert pair.t == pytest.approx(2.7207109973, abs=1e-6)
    assert pair.p == pytest.approx(1.4702039297, abs=1e-6)


def test_exponent_pair_invariants():
    pair = solve_cached(3, 2)
    assert pair.p * pair.t == pytest.approx(4.0, rel=1e-12)
    assert pair.residual <= 1e-6
    assert pair.bracket_width <= 1e-9 + 1e-15
    assert pair.t <= pair.k + 1


def test_monotone_in_n():
    for k in (2, 3):
        ts = [solve_cached(n, k).t for n in (2, 3, 4, 5)]
        for a, b in zip(ts, ts[1:]):
            assert a <= b + 1e-6


def test_k_step_bound():
    for n in (2, 3):
        assert solve_cached(n, 3).t <= solve_cached(n, 2).t + 1.0 + 1e-6


def test_witness_uniform_ternary():
    assert witness_lower_bound(3, 2, [1 / 3] * 3) == pytest.approx(LOG3_19, abs=1e-9)


def test_witness_binary_sharp():
    assert witness_lower_bound(2, 2, (0.5, 0.5)) == pytest.approx(LOG2_6, abs=1e-9)


def _ternary_root(k, g, lo=1e-9, hi=10.0):
    # Independent root finder on the closed-form side-3 objective.
    x, y, z = g
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        if ternary_objective_check(k, mid, x, y, z) > 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_witness_middle_heavy_ternary():
    g = (0.25, 0.5, 0.25)
    value = witness_lower_bound(3, 2, g)
    assert value == pytest.approx(_ternary_root(2, g), abs=1e-9)
    assert value == pytest.approx(2.7195461221, abs=1e-8)  # frozen at build time
    assert LOG3_19 < value < solve_cached(3, 2).t


def test_witness_rejects_point_mass():
    with pytest.raises(ValueError):
        witness_lower_bound(3, 2, (0.0, 1.0, 0.0))


def test_witness_below_solver_value():
    for n, k in ((2, 2), (2, 3), (3, 2), (3, 3)):
        t = solve_cached(n, k).t
        uniform = [1.0 / n] * n
        assert witness_lower_bound(n, k, uniform) <= t + 1e-6
        binom = [math.comb(n - 1, j) / 2 ** (n - 1) for j in range(n)]
        if n > 1 and max(binom) < 1:
            assert witness_lower_bound(n, k, binom) <= t + 1e-6


def test_trivial_bounds_examples():
    lo, hi = trivial_bounds(3, 2)
    assert lo == pytest.approx(LOG3_19, rel=1e-12)
    assert hi == 3.0
    lo, hi = trivial_bounds(2, 2)
    assert lo == pytest.approx(LOG2_6, rel=1e-12)
    assert hi == 3.0
    lo, hi = trivial_bounds(2, 3)
    assert lo == pytest.approx(3.0, rel=1e-12)
    assert hi == 4.0


def test_trivial_bounds_sandwich_solver():
    for n, k in ((2, 2), (3, 2), (3, 3), (4, 2)):
        lo, hi = trivial_bounds(n, k)
        t = solve_cached(n, k).t
        assert lo - 1e-6 <= t <= hi + 1e-6


def test_gaussian_profile_values():
    f = gaussian_witness(2, 2.0)
    assert f[0] == pytest.approx(math.exp(-4.0), rel=1e-12)
    assert f[1] == 1.0
    assert gaussian_witness(4, 3.0)[2] == 1.0  # exponent vanishes at m = n/2
    with pytest.raises(ValueError):
        gaussian_witness(3, 1.0)
    with pytest.raises(ValueError):
        gaussian_witness(1, 2.0)


def test_profile_to_simplex():
    g = profile_to_simplex(gaussian_witness(5, 2.0), 1.5)
    assert sum(g) == pytest.approx(1.0, abs=1e-12)
    assert all(v > 0 for v in g)


def test_gaussian_witness_bound_below_solver():
    t10 = solve_cached(10, 2).t
    bound = gaussian_witness_bound(10, 3.0, 2)
    assert bound <= t10 + 1e-6
    assert bound > trivial_bounds(10, 2)[0] - 0.2  # lands in a sane range


def test_symmetric_mode_agrees_when_maximizer_symmetric():
    cfg = SolverConfig(symmetric=True)
    pair = solve_exponent(3, 2, cfg)
    assert pair.t == pytest.approx(solve_cached(3, 2).t, abs=1e-6)


def test_solver_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(t_tolerance=0.0)
    with pytest.raises(ValueError):
        SolverConfig(multistart_count=0)
    with pytest.raises(ValueError):
        solve_exponent(1, 2)
    with pytest.raises(ValueError):
        solve_exponent(2, 1)
    with pytest.raises(ValueError):
        max_objective(2, 2, 0.0)
