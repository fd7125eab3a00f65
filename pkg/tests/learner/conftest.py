from __future__ import annotations

import numpy as np
from pytest import fixture

from juntaid3.core import Dataset, Example


def weighted_parity_rows() -> list[Example]:
    """The 16 row expansion of the 2-parity on x0, x1 with p = (0.75, 0.75)."""
    counts = {(1, 1): 9, (1, 0): 3, (0, 1): 3, (0, 0): 1}
    rows: list[Example] = []
    for (x0, x1), count in counts.items():
        rows.extend(Example([x0, x1], x0 ^ x1) for _ in range(count))
    return rows


@fixture
def weighted_parity() -> Dataset:
    return Dataset.from_examples(2, weighted_parity_rows())


@fixture
def weighted_parity_with_noise() -> Dataset:
    """The weighted 2-parity sample with two extra features cycling through all four patterns for every row."""
    features: list[list[int]] = []
    labels: list[int] = []
    for example in weighted_parity_rows():
        for x2 in (0, 1):
            for x3 in (0, 1):
                features.append([*example.bits, x2, x3])
                labels.append(example.label)
    return Dataset(np.array(features), np.array(labels))
