from __future__ import annotations

from math import inf, nan
from typing import TYPE_CHECKING

from juntaid3.common.json import json_loads
from juntaid3.harness import (
    SWEEP_COLUMNS,
    TRIAL_COLUMNS,
    BatchSummary,
    SweepAxis,
    SweepRow,
    SweepTable,
    TrialConfig,
    dumps_summary_json,
    dumps_sweep_csv,
    dumps_trials_csv,
    finite_json,
    render_svg,
    run_batch,
    write_plot_svg,
    write_summary_json,
    write_sweep_csv,
    write_trials_csv,
)

if TYPE_CHECKING:
    from pathlib import Path


def _table() -> SweepTable:
    return SweepTable(
        SweepAxis.M,
        [
            SweepRow(64, 0.25, 0.1, 3.0, 4),
            SweepRow(128, 0.75, 0.05, 6.5, 4),
            SweepRow(-1, nan, nan, nan, 0, "'m' must be at least 1, got -1"),
        ],
    )


def test_trials_csv(parity_config: TrialConfig, tmp_path: Path):
    summary = run_batch(parity_config)
    text = dumps_trials_csv(summary)
    lines = text.split("\n")

    assert lines[0] == ",".join(TRIAL_COLUMNS)
    assert lines[1].startswith("0,")
    assert len(lines) == 5 and lines[-1] == ""

    path = tmp_path / "trials.csv"
    write_trials_csv(summary, path)
    assert path.read_bytes() == text.encode("utf-8")


def test_trials_csv_is_byte_identical(parity_config: TrialConfig, tmp_path: Path):
    write_trials_csv(run_batch(parity_config), tmp_path / "first.csv")
    write_trials_csv(run_batch(parity_config), tmp_path / "second.csv")

    assert (tmp_path / "first.csv").read_bytes() == (tmp_path / "second.csv").read_bytes()


def test_sweep_csv(tmp_path: Path):
    text = dumps_sweep_csv(_table())

    assert text.split("\n")[0] == ",".join(SWEEP_COLUMNS)
    assert "64,0.25,0.1,3.0,4," in text
    assert "-1,nan,nan,nan,0,'m' must be at least 1, got -1" not in text, "The error must be quoted"
    assert "\"'m' must be at least 1, got -1\"" in text

    write_sweep_csv(_table(), tmp_path / "sweep.csv")
    assert (tmp_path / "sweep.csv").read_text(encoding="utf-8") == text


def test_finite_json():
    assert finite_json({"a": [1.0, nan, {"b": inf}], "c": "nan"}) == {"a": [1.0, None, {"b": None}], "c": "nan"}


def test_summary_json(parity_config: TrialConfig, tmp_path: Path):
    empty = BatchSummary(parity_config, [], 0.0)
    data = json_loads(dumps_summary_json(empty))

    assert data["success_rate"] is None
    assert data["trials"] == 0
    assert data["rows"] == []

    write_summary_json(run_batch(parity_config), tmp_path / "summary.json")
    text = (tmp_path / "summary.json").read_text(encoding="utf-8")
    assert text.endswith("\n")
    assert json_loads(text)["trials"] == 3


def test_svg(tmp_path: Path):
    svg = render_svg(_table())

    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<circle") == 2
    assert "<polyline" in svg

    write_plot_svg(_table(), tmp_path / "plot.svg")
    assert (tmp_path / "plot.svg").read_text(encoding="utf-8") == svg


def test_svg_without_points():
    svg = render_svg(SweepTable(SweepAxis.C, []))

    assert "<polyline" not in svg
    assert ">c<" in svg
