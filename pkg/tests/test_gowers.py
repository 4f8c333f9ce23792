import math
import random
from itertools import product

import pytest

from gcube.gowers import (
    GowersSystem,
    energy_E,
    energy_E_tilde,
    energy_P,
    gowers_inner_product,
    gowers_norm,
    gowers_norm_pow,
    gowers_norm_recursive,
)
from gcube.lattice import (
    CubeSet,
    LatticeFunction,
    delta,
    indicator,
    interval_set,
    lp_norm,
    tensor_power,
)


def random_function(rng, dim=1, width=5, max_size=6):
    pts = list(product(range(width), repeat=dim))
    size = rng.randint(1, max_size)
    supp = rng.sample(pts, min(size, len(pts)))
    return LatticeFunction(
        dim,
        {p: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for p in supp},
    )


def random_cube_set(rng, dim=1, width=5, max_size=6):
    pts = list(product(range(width), repeat=dim))
    size = rng.randint(1, max_size)
    return CubeSet(dim, width, frozenset(rng.sample(pts, min(size, len(pts)))))


def test_inner_product_of_deltas():
    for k in (1, 2, 3):
        sys = GowersSystem.constant(delta(), k)
        assert gowers_inner_product(sys) == pytest.approx(1.0)


def test_inner_product_binary_square():
    f = indicator([(0,), (1,)])
    val = gowers_inner_product(GowersSystem.constant(f, 2))
    assert val.real == pytest.approx(6.0, rel=1e-12)
    assert val.imag == pytest.approx(0.0, abs=1e-12)


def test_inner_product_with_zero_function():
    f = indicator([(0,), (1,)])
    fns = {eps: f for eps in product((0, 1), repeat=2)}
    fns[(0, 1)] = LatticeFunction(1, {})
    assert gowers_inner_product(GowersSystem(2, fns)) == 0j


def test_system_validation():
    f = indicator([(0,), (1,)])
    with pytest.raises(ValueError):
        GowersSystem(2, {(0, 0): f, (1, 1): f})
    mixed = {eps: f for eps in product((0, 1), repeat=2)}
    mixed[(1, 0)] = delta(2)
    with pytest.raises(ValueError):
        GowersSystem(2, mixed)


def test_norm_pow_examples():
    b = indicator([(0,), (1,)])
    assert gowers_norm_pow(b, 2) == pytest.approx(6.0, rel=1e-12)
    assert gowers_norm_pow(b, 3) == pytest.approx(8.0, rel=1e-12)
    t = indicator([(0,), (1,), (2,)])
    assert gowers_norm_pow(t, 2) == pytest.approx(19.0, rel=1e-12)
    c = LatticeFunction(1, {(0,): 0.5 - 0.25j})
    for k in (1, 2, 3):
        assert gowers_norm_pow(c, k) == pytest.approx(abs(0.5 - 0.25j) ** 2 ** k)
    with pytest.raises(ValueError):
        gowers_norm_pow(b, 0)


def test_norm_pow_matches_inner_product_of_constant_system():
    rng = random.Random(7)
    for _ in range(10):
        k = rng.choice((2, 3))
        f = random_function(rng, width=4)
        val = gowers_inner_product(GowersSystem.constant(f, k))
        assert val.real == pytest.approx(gowers_norm_pow(f, k), rel=1e-9, abs=1e-12)


def test_recursive_examples():
    b = indicator([(0,), (1,)])
    assert gowers_norm_recursive(b, 2) == pytest.approx(6.0, rel=1e-12)
    for k in (1, 2, 3, 4):
        assert gowers_norm_recursive(delta(), k) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        gowers_norm_recursive(b, 0)


def test_recursive_matches_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        dim = rng.choice((1, 2))
        k = rng.choice((2, 3))
        f = random_function(rng, dim=dim)
        a = gowers_norm_pow(f, k)
        b = gowers_norm_recursive(f, k)
        assert b == pytest.approx(a, rel=1e-9, abs=1e-12)


def test_energy_P_examples():
    for d in (1, 2, 3):
        cube = CubeSet(d, 2, frozenset(product((0, 1), repeat=d)))
        for k in (2, 3, 4):
            assert energy_P(cube, k) == (2 * k + 2) ** d
    assert energy_P(CubeSet(1, 3, frozenset()), 2) == 0
    assert energy_P(CubeSet(1, 3, frozenset([(1,)])), 2) == 1
    assert energy_P(interval_set(3), 2) == 19
    with pytest.raises(ValueError):
        energy_P(interval_set(2), 1)


def test_energy_E_examples():
    assert energy_E(interval_set(2), 3) == 20 == math.comb(6, 3)
    assert energy_E(CubeSet(1, 4, frozenset([(2,)])), 2) == 1
    assert energy_E(interval_set(3), 2) == 19


def test_energy_E_tilde_examples():
    for k in range(2, 9):
        assert energy_E_tilde(interval_set(2), k) == 2 ** k + 2
    assert energy_E_tilde(CubeSet(1, 4, frozenset([(2,)])), 3) == 1


def brute_force_tilde_k2(A):
    pts = sorted(A.members)
    count = 0
    for a1 in pts:
        for a2 in pts:
            for a3 in pts:
                for a4 in pts:
                    if all(x - y == z - w for x, y, z, w in zip(a1, a2, a3, a4)):
                        count += 1
    return count


def test_tilde_matches_quadruple_brute_force():
    rng = random.Random(3)
    for _ in range(20):
        A = random_cube_set(rng, max_size=5)
        assert energy_E_tilde(A, 2) == brute_force_tilde_k2(A)


def test_k2_energies_agree_exhaustively():
    universe = [(j,) for j in range(5)]
    for mask in range(1, 2 ** 5):
        members = frozenset(p for i, p in enumerate(universe) if mask >> i & 1)
        A = CubeSet(1, 5, members)
        e = energy_E(A, 2)
        assert energy_P(A, 2) == e
        assert energy_E_tilde(A, 2) == e


def test_norm_pow_equals_energy_P_on_random_sets():
    rng = random.Random(5)
    for _ in range(30):
        dim = rng.choice((1, 2))
        k = rng.choice((2, 3))
        A = random_cube_set(rng, dim=dim)
        approx = gowers_norm_pow(A.indicator(), k)
        assert abs(approx - energy_P(A, k)) < 0.5


def test_gowers_cauchy_schwarz_random_systems():
    rng = random.Random(13)
    for _ in range(25):
        k = rng.choice((2, 3))
        fns = {
            eps: random_function(rng, width=4, max_size=4)
            for eps in product((0, 1), repeat=k)
        }
        lhs = abs(gowers_inner_product(GowersSystem(k, fns)))
        rhs = 1.0
        for eps in sorted(fns):
            rhs *= gowers_norm(fns[eps], k)
        assert lhs <= rhs * (1 + 1e-9) + 1e-12


def test_triangle_inequality_random():
    rng = random.Random(17)
    for _ in range(25):
        k = rng.choice((2, 3))
        f1 = random_function(rng, width=4, max_size=4)
        f2 = random_function(rng, width=4, max_size=4)
        assert gowers_norm(f1 + f2, k) <= gowers_norm(f1, k) + gowers_norm(f2, k) + 1e-9


def test_tensor_multiplicativity_of_box_norms():
    rng = random.Random(19)
    for _ in range(20):
        k = rng.choice((2, 3))
        d = rng.choice((1, 2, 3))
        g = random_function(rng, width=2, max_size=2)
        lhs = gowers_norm_recursive(tensor_power(g, d), k)
        rhs = gowers_norm_recursive(g, k) ** d
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-12)


def test_norm_bounded_by_critical_lp_norm():
    rng = random.Random(23)
    for _ in range(30):
        k = rng.choice((2, 3))
        size = rng.randint(1, 6)
        supp = rng.sample(range(-3, 7), size)
        f = LatticeFunction(1, {(s,): rng.uniform(0.05, 2.0) for s in supp})
        p = 2 ** k / (k + 1)
        assert gowers_norm(f, k) <= lp_norm(f, p) * (1 + 1e-9)


def test_d0_norm():
    scalar = LatticeFunction(0, {(): 2.0})
    assert gowers_norm_pow(scalar, 2) == pytest.approx(16.0)
    assert gowers_norm_recursive(scalar, 2) == pytest.approx(16.0)
