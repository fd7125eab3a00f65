from __future__ import annotations

from math import inf
from typing import TYPE_CHECKING

import numpy as np

from juntaid3.core import ProductDistribution, make_junta, make_parity, random_junta
from juntaid3.learner import id3_population
from juntaid3.oracle import exact_tree_loss, parity_lower_bound, verify_basic_conditions

if TYPE_CHECKING:
    from numpy.random import Generator


def test_uniform_parity_fails_at_the_root():
    report = verify_basic_conditions(ProductDistribution.uniform(3), make_parity(3, [0, 1]))

    assert report.epsilon == 0.0
    assert not report.held
    root = report.entries[0]
    assert str(root.assignment) == "***"
    assert root.min_abs_I == 0.0


def test_biased_parity_meets_the_lower_bound():
    distribution = ProductDistribution([0.75, 0.75])
    bound = parity_lower_bound(0.25, 0.25, 2)

    report = verify_basic_conditions(distribution, make_parity(2, [0, 1]), epsilon=bound)

    assert bound == 0.03125
    assert report.epsilon >= bound
    assert report.held
    assert len(report.entries) == 9


def test_constant_target_is_pure_everywhere():
    report = verify_basic_conditions(ProductDistribution([0.4, 0.6]), make_junta(2, [0], [1, 1]))

    assert report.epsilon == inf
    assert report.held
    assert all(entry.pure for entry in report.entries)


def test_zero_mass_subcube_fails():
    report = verify_basic_conditions(ProductDistribution([1.0, 0.7]), make_parity(2, [0, 1]))

    assert report.epsilon == 0.0
    assert any(entry.mass == 0.0 and entry.pure is None for entry in report.entries)


def test_requested_epsilon_above_the_best():
    report = verify_basic_conditions(ProductDistribution([0.75, 0.75]), make_parity(2, [0, 1]), epsilon=0.5)

    assert 0 < report.epsilon < 0.5
    assert not report.held


def _alpha_c_distribution(rng: Generator, n: int, alpha: float, c: float) -> ProductDistribution:
    """Every ``p_i`` in ``(alpha, 1/2 - c)`` or ``(1/2 + c, 1 - alpha)``."""
    low = rng.uniform(alpha, 0.5 - c, size=n)
    return ProductDistribution(np.where(rng.random(n) < 0.5, low, 1.0 - low))


def test_parity_dependence_beats_the_lower_bound():
    rng = np.random.default_rng(5)
    for _ in range(1000):
        c = float(rng.uniform(0.01, 0.4))
        alpha = float(rng.uniform(0.01, 0.49 - c))
        k = int(rng.integers(1, 5))
        n = k + int(rng.integers(0, 3))
        support = sorted(rng.choice(n, size=k, replace=False).tolist())
        distribution = _alpha_c_distribution(rng, n, alpha, c)

        report = verify_basic_conditions(distribution, make_parity(n, support))

        # every subcube with a free support coordinate is impure, so epsilon is the smallest |I(D_w, j)|
        bound = parity_lower_bound(alpha, c, k)
        assert report.epsilon > bound, f"alpha={alpha} c={c} k={k} p={distribution.probs.tolist()}"


def test_population_id3_is_exact_when_the_conditions_hold():
    rng = np.random.default_rng(6)
    held = 0
    for _ in range(200):
        k = int(rng.integers(1, 4))
        n = k + int(rng.integers(0, 3))
        target = random_junta(n, sorted(rng.choice(n, size=k, replace=False).tolist()), rng)
        distribution = _alpha_c_distribution(rng, n, 0.05, 0.05)
        if verify_basic_conditions(distribution, target).epsilon <= 0:
            continue
        held += 1

        tree = id3_population(distribution, target)

        assert exact_tree_loss(distribution, target, tree) == 0.0, f"{target!r} under {distribution!r}: {tree!r}"

    assert held >= 50
