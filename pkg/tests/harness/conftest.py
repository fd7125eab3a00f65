from __future__ import annotations

from typing import TYPE_CHECKING

from pytest import fixture

from juntaid3.harness import TrialConfig, parse_config

if TYPE_CHECKING:
    from typing import Any


@fixture
def parity_document() -> dict[str, Any]:
    """A 2-parity on 8 coordinates with p = 0.75, small enough to run a batch in well under a second."""
    return {"n": 8, "k": 2, "m": 512, "trials": 3, "seed": 5, "probs": 0.75, "target": {"type": "parity"}}


@fixture
def parity_config(parity_document: dict[str, Any]) -> TrialConfig:
    return parse_config(parity_document)
