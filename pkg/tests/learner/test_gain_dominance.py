from __future__ import annotations

import numpy as np
from pytest import raises

from juntaid3.core import Dataset, DimensionMismatchError, make_parity
from juntaid3.learner import check_gain_dominance


def test_weighted_parity_with_noise_holds(weighted_parity_with_noise: Dataset):
    report = check_gain_dominance(weighted_parity_with_noise, make_parity(4, [0, 1]))

    assert report.held, f"Gain ordering failed: {report.violations}"
    assert report
    assert report.subcubes == 9
    assert report.empty == ()


def test_uniform_parity_fails():
    features = np.array([[x0, x1, x2] for x0 in (0, 1) for x1 in (0, 1) for x2 in (0, 1)])
    labels = features[:, 0] ^ features[:, 1]
    report = check_gain_dominance(Dataset(features, labels), make_parity(3, [0, 1]))

    assert not report.held
    assert str(report.violations[0].assignment) == "***"


def test_empty_subcube_fails():
    dataset = Dataset([[0, 0], [0, 1]], [0, 1])
    report = check_gain_dominance(dataset, make_parity(2, [0, 1]))

    assert not report.held
    assert {str(assignment) for assignment in report.empty} == {"1*", "10", "11"}


def test_dimension_mismatch():
    with raises(DimensionMismatchError):
        check_gain_dominance(Dataset([[0, 1]], [1]), make_parity(3, [0]))
