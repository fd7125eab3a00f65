from __future__ import annotations

from typing import TYPE_CHECKING

from pytest import mark, raises

from juntaid3.common.errors import JuntaError, ProbabilityOutOfRangeError
from juntaid3.core import ProductDistribution, make_parity
from juntaid3.distributions import Instance, InstanceFormatError, SmoothingSpecError, parse_instance, parse_target

if TYPE_CHECKING:
    from typing import Any


def test_fixed_instance():
    instance = parse_instance(b'{"n": 3, "probs": 0.75, "target": {"type": "parity", "support": [0, 1]}}')

    assert not instance.is_smoothed
    assert instance.n == 3
    assert instance.target == make_parity(3, [0, 1])
    assert instance.distribution == ProductDistribution([0.75, 0.75, 0.75])
    assert instance.draw_distribution(4) is instance.distribution


def test_probability_list():
    target = {"type": "junta", "support": [1], "table": [1, 0]}
    instance = parse_instance({"n": 2, "probs": [0.2, 0.9], "target": target})

    assert instance.distribution == ProductDistribution([0.2, 0.9])
    assert instance.target.truth_table.tolist() == [1, 0]


def test_smoothed_instance():
    document = '{"n": 2, "probs": {"base": 0.5, "alpha": 0.1, "c": 0.1, "seed": 4}, "target": {"type": "parity"}}'
    instance = parse_instance(document, k=2)

    assert instance.is_smoothed
    assert instance.smoothing is not None
    assert instance.smoothing.base.tolist() == [0.5, 0.5]
    assert instance.target.support == (0, 1)
    assert instance.draw_distribution() == instance.draw_distribution(4)
    assert instance.draw_distribution(4) != instance.draw_distribution(5)


def test_random_junta_is_seeded():
    data = {"type": "random_junta", "support": [0, 2], "seed": 7}

    assert parse_target(data, 4) == parse_target(data, 4)
    assert parse_target(data, 4).support == (0, 2)
    assert not parse_target(data, 4).is_constant


def test_instance_needs_one_source():
    target = make_parity(2, [0, 1])

    with raises(InstanceFormatError):
        Instance(target)
    with raises(InstanceFormatError):
        Instance(target, distribution=ProductDistribution.uniform(2), smoothing=object())  # type: ignore[arg-type]


@mark.parametrize(
    "document",
    [
        b"not json",
        b"[1, 2]",
        {"n": 0, "probs": 0.5, "target": {"type": "parity", "support": [0]}},
        {"n": True, "probs": 0.5, "target": {"type": "parity", "support": [0]}},
        {"n": 2, "target": {"type": "parity", "support": [0]}},
        {"n": 2, "probs": 0.5, "target": {"type": "majority", "support": [0]}},
        {"n": 2, "probs": 0.5, "target": {"type": "parity"}},
        {"n": 2, "probs": 0.5, "target": {"type": "junta", "support": [0]}},
        {"n": 2, "probs": 0.5, "target": {"type": "parity", "support": "0"}},
        {"n": 2, "probs": [0.5], "target": {"type": "parity", "support": [0]}},
        {"n": 2, "probs": "0.5", "target": {"type": "parity", "support": [0]}},
        {"n": 2, "probs": {"base": 0.5, "alpha": 0.1}, "target": {"type": "parity", "support": [0]}},
        {
            "n": 2,
            "probs": {"base": 0.5, "alpha": 0.1, "c": 0.1, "seed": -1},
            "target": {"type": "parity", "support": [0]},
        },
        {"n": 2, "probs": 0.5, "target": {"type": "random_junta", "support": [0], "seed": "a"}},
    ],
)
def test_malformed(document: Any):
    with raises(InstanceFormatError):
        parse_instance(document)


def test_invalid_values():
    with raises(ProbabilityOutOfRangeError):
        parse_instance({"n": 1, "probs": 1.5, "target": {"type": "parity", "support": [0]}})
    with raises(SmoothingSpecError):
        parse_instance({"n": 1, "probs": {"base": 0.5, "alpha": 0.3, "c": 0.3}, "target": {"type": "parity"}}, k=1)
    with raises(JuntaError):
        parse_instance({"n": 2, "probs": 0.5, "target": {"type": "parity", "support": [0, 5]}})
