import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from gcube.entropy import (
    PMFVector,
    SignedBernoulliSum,
    binomial_entropy,
    binomial_entropy_bounds,
    decreasing_rearrangement,
    entropy,
    entropy_bits,
    karamata_compare,
    majorizes,
    pmf_signed_sum,
    verify_entropy_corollary,
    verify_majorization_lemma,
)
from gcube.terms import term_groups


def test_entropy_examples():
    assert entropy(PMFVector(0, (Fraction(1, 2), Fraction(1, 2)))) == 1.0
    assert entropy(PMFVector(0, (0.25, 0.5, 0.25))) == 1.5
    assert entropy(PMFVector(5, (Fraction(1),))) == 0.0
    with pytest.raises(ValueError):
        entropy_bits([0.5, 0.6])
    with pytest.raises(ValueError):
        PMFVector(0, (0.5, 0.4))


def test_pmf_vector_validation():
    with pytest.raises(ValueError):
        PMFVector(0, (0.0, 1.0))
    with pytest.raises(ValueError):
        PMFVector(0, (1.0, 0.0))
    with pytest.raises(ValueError):
        PMFVector(0, ())
    # interior zeros are fine
    p = PMFVector(0, (Fraction(1, 2), Fraction(0), Fraction(1, 2)))
    assert entropy(p) == 1.0


def test_binomial_entropy_values():
    assert binomial_entropy(1) == 1.0
    assert binomial_entropy(2) == 1.5
    assert binomial_entropy(3) == pytest.approx(3 * (4 - math.log2(3)) / 4, rel=1e-12)
    assert binomial_entropy(4) == pytest.approx(2.0306390622, abs=1e-9)
    with pytest.raises(ValueError):
        binomial_entropy(0)


def test_binomial_entropy_bounds():
    lo, hi = binomial_entropy_bounds(1)
    assert lo == pytest.approx(0.7971, abs=1e-4)
    assert hi == pytest.approx(1.1471, abs=1e-4)
    assert lo < 1.0 < hi
    lo, hi = binomial_entropy_bounds(2)
    assert lo < 1.5 < hi
    lo, hi = binomial_entropy_bounds(1000)
    assert hi - lo == pytest.approx(7.0 / 20000.0, rel=1e-12)
    assert lo < binomial_entropy(1000) < hi


def test_ratio_strictly_decreasing_prefix():
    prev = binomial_entropy(1)
    for m in range(2, 60):
        h = binomial_entropy(m)
        assert h / m < prev / (m - 1)
        prev = h


def test_pmf_signed_sum_examples():
    p = pmf_signed_sum((1, 1))
    assert p.support_offset == 0
    assert p.masses == (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))
    p = pmf_signed_sum((1, 2))
    assert p.support_offset == 0
    assert p.masses == tuple([Fraction(1, 4)] * 4)
    p = pmf_signed_sum((1, -1))
    assert p.support_offset == -1
    assert p.masses == (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))
    with pytest.raises(ValueError):
        pmf_signed_sum((1, 0))
    with pytest.raises(ValueError):
        SignedBernoulliSum(())


def test_decreasing_rearrangement_examples():
    assert decreasing_rearrangement(PMFVector(0, (0.25, 0.5, 0.25))) == [0.5, 0.25, 0.25]
    assert decreasing_rearrangement(PMFVector(0, (0.25,) * 4)) == [0.25] * 4
    assert decreasing_rearrangement(PMFVector(0, (0.1, 0.7, 0.2))) == [0.7, 0.2, 0.1]


def test_majorizes_examples():
    assert majorizes([Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)],
                     [Fraction(1, 4)] * 4)
    assert majorizes([0.5, 0.3, 0.2], [0.5, 0.3, 0.2])
    assert not majorizes([0.4, 0.3, 0.3], [0.5, 0.3, 0.2])
    assert not majorizes([0.6, 0.4], [0.5, 0.3])  # unequal totals
    with pytest.raises(ValueError):
        majorizes([0.2, 0.8], [0.5, 0.5])


def test_karamata_examples():
    res = karamata_compare([1.0, 0.0], [0.5, 0.5], "square")
    assert res.difference == pytest.approx(0.5)
    assert res.consistent and not res.equal
    res = karamata_compare([0.5, 0.5], [0.5, 0.5], "square")
    assert res.difference == 0.0 and res.equal
    res = karamata_compare(
        [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)],
        [Fraction(1, 4)] * 4,
        "neg_x_log2",
    )
    assert res.difference == pytest.approx(1.5 - 2.0)
    assert res.consistent
    with pytest.raises(ValueError):
        karamata_compare([0.4, 0.3, 0.3], [0.5, 0.3, 0.2], "square")
    with pytest.raises(ValueError):
        karamata_compare([1.0, 0.0], [0.5, 0.5], "no-such-psi")


def test_majorization_lemma_small():
    rep = verify_majorization_lemma(2, 3)
    assert rep.passed
    # 6 choices per coordinate, two coordinates, three checks per vector,
    # plus the m = 1 layer
    assert rep.cases == 3 * (6 + 36)


def test_majorization_lemma_specific_cases():
    binom = decreasing_rearrangement(pmf_signed_sum((1, 1, 1)))
    mixed = decreasing_rearrangement(pmf_signed_sum((1, 1, 2)))
    assert majorizes(binom, mixed)
    assert binom != mixed
    assert entropy(pmf_signed_sum((1, 1, 2))) > binomial_entropy(3)
    assert entropy(pmf_signed_sum((2, 2, 2))) == pytest.approx(binomial_entropy(3))


def test_entropy_corollary_small():
    rep = verify_entropy_corollary(3)
    assert rep.passed
    assert entropy(pmf_signed_sum((1,))) == 1.0 > binomial_entropy(2) / 2
    ratio = entropy(pmf_signed_sum((1, 1))) / 2
    assert ratio == pytest.approx(binomial_entropy(2) / 2, abs=1e-12)
    assert entropy(pmf_signed_sum((1, 2))) / 2 == pytest.approx(1.0)
    assert 1.0 > binomial_entropy(3) / 3


def test_entropy_translation_and_negation_invariance():
    rng = random.Random(31)
    for _ in range(40):
        m = rng.randint(1, 5)
        h = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(m)]
        base = entropy(pmf_signed_sum(h))
        assert entropy(pmf_signed_sum([-v for v in h])) == pytest.approx(base, abs=1e-12)
        shifted = pmf_signed_sum(h).translate(7)
        assert entropy(shifted) == pytest.approx(base, abs=1e-12)


def test_weighted_am_gm_against_entropy():
    # prod g(j)^(q_j) <= 2^(-H(q)) for any simplex g and any group q
    rng = random.Random(37)
    groups = term_groups(4, 3)
    for _ in range(60):
        raw = [rng.random() + 1e-12 for _ in range(4)]
        s = sum(raw)
        g = [v / s for v in raw]
        q = rng.choice(groups).q
        prod = 1.0
        for gj, qj in zip(g, q):
            if qj:
                prod *= gj ** float(qj)
        bound = 2.0 ** (-entropy_bits(q))
        assert prod <= bound + 1e-12


@given(st.lists(st.sampled_from([-4, -3, -2, -1, 1, 2, 3, 4]), min_size=1, max_size=5))
@settings(max_examples=100)
def test_signed_sum_entropy_at_least_binomial(h):
    assert entropy(pmf_signed_sum(h)) >= binomial_entropy(len(h)) - 1e-12
