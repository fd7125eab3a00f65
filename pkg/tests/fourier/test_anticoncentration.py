from __future__ import annotations

from math import sqrt

import numpy as np
from pytest import approx, mark, raises

from juntaid3.common.errors import JuntaError
from juntaid3.core import (
    FREE,
    DimensionMismatchError,
    PartialAssignment,
    ProductDistribution,
    make_junta,
    make_parity,
    random_junta,
)
from juntaid3.distributions import SmoothingSpec, draw_perturbation
from juntaid3.fourier import (
    Basis,
    MultilinearPolynomial,
    anticoncentration_bound,
    anticoncentration_estimate,
    fourier_coeffs,
    junta_bound_failure_rate,
    junta_I_lower_bound,
    normalize_polynomial,
    normalized_anticoncentration_bound,
    restrict_target,
    shift_polynomial,
    split_on_coordinate,
)
from juntaid3.oracle import exact_I

TRIALS = 10_000
SLACK = 3 * sqrt(0.25 / TRIALS)


def test_estimate_linear():
    # |2 delta| <= 0.1 for delta ~ Uni([-0.1, 0.1]) exactly when |delta| <= 0.05
    estimate = anticoncentration_estimate(MultilinearPolynomial(1, {1: 2.0}, Basis.MONOMIAL), 0.1, 0.1, TRIALS, 0)

    assert estimate == approx(0.5, abs=0.03)


def test_estimate_constant():
    constant = MultilinearPolynomial(2, {0: 0.5}, Basis.MONOMIAL)

    assert anticoncentration_estimate(constant, 0.1, 0.1, 100, 0) == 0.0
    assert anticoncentration_estimate(MultilinearPolynomial.zero(2, Basis.MONOMIAL), 0.1, 0.1, 100, 0) == 1.0


def test_estimate_is_deterministic():
    polynomial = MultilinearPolynomial(2, {1: 1.0, 3: -2.0}, Basis.MONOMIAL)

    assert anticoncentration_estimate(polynomial, 0.2, 0.01, 500, 9) == anticoncentration_estimate(
        polynomial, 0.2, 0.01, 500, 9
    )


def test_estimate_needs_trials():
    with raises(JuntaError):
        anticoncentration_estimate(MultilinearPolynomial(1, {1: 1.0}, Basis.MONOMIAL), 0.1, 0.1, 0, 0)


def test_bounds():
    assert anticoncentration_bound(0.5, 2, 0.01) == approx(1.6)
    assert normalized_anticoncentration_bound(3, 0.04) == approx(1.6)
    assert junta_I_lower_bound(0.2, 0.1, 2, 0.5) == approx(1.25e-7, rel=1e-12)
    assert junta_I_lower_bound(0.2, 0.1, 2, 0.0) == 0.0


def test_smoothed_I_matches_shifted_polynomial():
    rng = np.random.default_rng(21)
    for draw in range(200):
        k = int(rng.integers(1, 7))
        n = k + 1
        support = sorted(rng.choice(n, size=k, replace=False).tolist())
        target = random_junta(n, support, rng)
        smoothing = SmoothingSpec(rng.uniform(0.26, 0.74, size=n), 0.1, 0.15)
        delta = draw_perturbation(smoothing, draw)
        probs = smoothing.base + delta

        values = [FREE] * n
        feature = support[int(rng.integers(k))]
        for coordinate in support:
            if coordinate != feature and rng.random() < 0.4:
                values[coordinate] = int(rng.integers(2))
        assignment = PartialAssignment(values)

        restricted = restrict_target(target, assignment)
        coordinates = list(restricted.support)
        derivative, _ = split_on_coordinate(fourier_coeffs(restricted.truth_table), coordinates.index(feature))
        shifted = shift_polynomial(derivative, smoothing.base[coordinates].tolist())
        p = probs[feature]
        expected = -2.0 * p * (1.0 - p) * shifted.evaluate(delta[coordinates].tolist())

        actual = exact_I(ProductDistribution(probs), target, assignment, feature)
        assert actual == approx(expected, abs=1e-10), f"Draw {draw} disagrees"


def test_envelopes_hold():
    rng = np.random.default_rng(22)
    c = 0.2
    checked = 0
    for junta in range(50):
        k = int(rng.integers(1, 7))
        target = random_junta(k, range(k), rng)
        values = [FREE if rng.random() < 0.6 else int(rng.integers(2)) for _ in range(k)]
        free = [coordinate for coordinate, value in enumerate(values) if value is FREE]
        if not free:
            continue
        restricted = restrict_target(target, PartialAssignment(values))
        feature = int(rng.choice(free))
        derivative, _ = split_on_coordinate(
            fourier_coeffs(restricted.truth_table), list(restricted.support).index(feature)
        )
        if derivative.is_zero:
            continue
        base = rng.uniform(0.31, 0.69, size=restricted.k).tolist()
        shifted = shift_polynomial(derivative, base)
        normalized = normalize_polynomial(shifted, c, restricted.k)

        for epsilon in (1e-4, 1e-3, 1e-2):
            estimate = anticoncentration_estimate(shifted, c, epsilon, TRIALS, junta)
            assert estimate <= anticoncentration_bound(c, k, epsilon) + SLACK, f"Junta {junta} breaks the envelope"

            normalized_estimate = anticoncentration_estimate(normalized, 1.0, epsilon, TRIALS, junta)
            assert normalized_estimate <= normalized_anticoncentration_bound(normalized.degree, epsilon) + SLACK
        checked += 1
    assert checked > 10


def test_failure_rate_parity():
    smoothing = SmoothingSpec([0.7, 0.7, 0.3], 0.1, 0.1)

    assert junta_bound_failure_rate(make_parity(3, [0, 1]), smoothing, 0.5, 20, 0) == 0.0


def test_failure_rate_constant():
    smoothing = SmoothingSpec([0.5, 0.5], 0.1, 0.1)

    assert junta_bound_failure_rate(make_junta(2, [0], [1, 1]), smoothing, 0.5, 5, 0) == 0.0


@mark.parametrize("delta", [0.2, 0.5])
def test_failure_rate_random_juntas(delta: float):
    rng = np.random.default_rng(23)
    target = random_junta(4, [0, 1, 2], rng)
    smoothing = SmoothingSpec(rng.uniform(0.21, 0.79, size=4), 0.1, 0.1)

    rate = junta_bound_failure_rate(target, smoothing, delta, 200, 1)
    assert rate <= delta + 3 * sqrt(delta * (1 - delta) / 200)


def test_failure_rate_errors():
    smoothing = SmoothingSpec([0.7, 0.7], 0.1, 0.1)

    with raises(DimensionMismatchError):
        junta_bound_failure_rate(make_parity(3, [0, 1]), smoothing, 0.5, 5, 0)
    with raises(JuntaError):
        junta_bound_failure_rate(make_parity(2, [0, 1]), smoothing, 0.5, 0, 0)
