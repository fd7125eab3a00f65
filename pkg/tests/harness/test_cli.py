from __future__ import annotations

from typing import TYPE_CHECKING

from pytest import approx, mark, raises

from juntaid3.common.json import json_dumps, json_loads
from juntaid3.core import evaluate_tree, tree_from_json
from juntaid3.harness import SWEEP_COLUMNS, TRIAL_COLUMNS, main

if TYPE_CHECKING:
    from pathlib import Path
    from typing import Any

    from pytest import CaptureFixture

PARITY_INSTANCE = '{"n": 3, "probs": [0.75, 0.75, 0.5], "target": {"type": "parity", "support": [0, 1]}}'
SMOOTHED_INSTANCE = (
    '{"n": 2, "probs": {"base": 0.7, "alpha": 0.1, "c": 0.1, "seed": 3}, '
    '"target": {"type": "parity", "support": [0, 1]}}'
)


def _write(tmp_path: Path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def _output(capsys: CaptureFixture[str]) -> Any:
    return json_loads(capsys.readouterr().out)


def test_learn(tmp_path: Path):
    dataset = _write(tmp_path, "xor.txt", "n=2 m=4\n00,0\n01,1\n10,1\n11,0\n")
    out = tmp_path / "tree"

    assert main(["learn", "--dataset", dataset, "--out", str(out)]) == 0

    tree = tree_from_json(json_loads((out / "tree.json").read_text(encoding="utf-8")), 2)
    for bits in ([0, 0], [0, 1], [1, 0], [1, 1]):
        assert evaluate_tree(tree, bits) == bits[0] ^ bits[1]
    assert (out / "tree.txt").read_text(encoding="utf-8")


def test_learn_bad_dataset(tmp_path: Path, capsys: CaptureFixture[str]):
    dataset = _write(tmp_path, "broken.txt", "n=2 m=3\n00,0\n")

    assert main(["learn", "--dataset", dataset]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["learn", "--dataset", str(tmp_path / "missing.txt")]) == 2


def test_oracle(tmp_path: Path, capsys: CaptureFixture[str]):
    instance = _write(tmp_path, "instance.json", PARITY_INSTANCE)

    assert main(["oracle", "--config", instance, "--feature", "0"]) == 0
    output = _output(capsys)

    assert output["assignment"] == "***"
    assert output["label_prob"] == approx(0.375)
    assert output["I"] == approx(0.09375)
    assert output["gain"] == approx(0.046875)
    assert len(output["basic_conditions"]["subcubes"]) == 9


def test_oracle_restricted(tmp_path: Path, capsys: CaptureFixture[str]):
    instance = _write(tmp_path, "instance.json", PARITY_INSTANCE)

    assert main(["oracle", "--config", instance, "--assignment", "*1*", "--feature", "0"]) == 0
    assert _output(capsys)["label_prob"] == approx(0.25)

    assert main(["oracle", "--config", instance, "--assignment", "*1"]) == 2


def test_fourier(tmp_path: Path, capsys: CaptureFixture[str]):
    instance = _write(tmp_path, "instance.json", PARITY_INSTANCE)

    assert main(["fourier", "--config", instance, "--feature", "0"]) == 0
    output = _output(capsys)

    assert output["support"] == [0, 1]
    assert output["degree"] == 2
    assert output["coefficients"] == [{"subset": [], "value": 0.5}, {"subset": [0, 1], "value": -0.5}]
    assert output["g"] == [{"monomial": [1], "coefficient": -0.5}]
    assert output["h"] == [{"monomial": [], "coefficient": 0.5}]
    assert "anticoncentration" not in output

    assert main(["fourier", "--config", instance, "--feature", "2"]) == 2


def test_fourier_smoothed(tmp_path: Path, capsys: CaptureFixture[str]):
    instance = _write(tmp_path, "smoothed.json", SMOOTHED_INSTANCE)

    assert main(["fourier", "--config", instance, "--feature", "0", "--trials", "200", "--epsilon", "0.01"]) == 0
    output = _output(capsys)

    # g0(delta) = -1/2 (2 (0.7 + delta_1) - 1) = -0.2 - delta_1
    assert sorted(entry["coefficient"] for entry in output["g0"]) == approx([-1.0, -0.2])
    (entry,) = output["anticoncentration"]
    assert entry["epsilon"] == 0.01
    assert entry["estimate"] == 0.0
    assert entry["bound"] == approx(40.0)


def _experiment(tmp_path: Path) -> str:
    document: dict[str, Any] = {
        "n": 6,
        "k": 2,
        "m": 256,
        "trials": 2,
        "seed": 3,
        "probs": 0.75,
        "target": {"type": "parity"},
    }
    return _write(tmp_path, "experiment.json", json_dumps(document))


def test_experiment(tmp_path: Path):
    out = tmp_path / "out"

    assert main(["experiment", "--config", _experiment(tmp_path), "--out", str(out)]) == 0

    lines = (out / "trials.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(TRIAL_COLUMNS)
    assert len(lines) == 3
    summary = json_loads((out / "summary.json").read_text(encoding="utf-8"))
    assert summary["trials"] == 2
    assert summary["config"]["seed"] == 3


def test_experiment_seed_override(tmp_path: Path):
    out = tmp_path / "out"

    assert main(["experiment", "--config", _experiment(tmp_path), "--seed", "11", "--out", str(out)]) == 0
    assert json_loads((out / "summary.json").read_text(encoding="utf-8"))["config"]["seed"] == 11


def test_experiment_invalid(tmp_path: Path, capsys: CaptureFixture[str]):
    config = _write(tmp_path, "bad.json", '{"n": 4, "probs": 0.5, "target": {"type": "parity", "support": [0]}}')

    assert main(["experiment", "--config", config, "--out", str(tmp_path)]) == 2
    assert "'m' is required" in capsys.readouterr().err
    assert main(["experiment", "--config", str(tmp_path / "missing.json")]) == 2


def test_sweep(tmp_path: Path):
    out = tmp_path / "out"
    argv = ["sweep", "--config", _experiment(tmp_path), "--axis", "m", "--values", "64", "0", "--out", str(out)]

    assert main(argv) == 0

    lines = (out / "sweep.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(SWEEP_COLUMNS)
    assert lines[1].startswith("64,")
    assert lines[2].startswith("0,nan,")
    assert (out / "plot.svg").read_text(encoding="utf-8").startswith("<svg")


def test_sweep_non_finite_value(tmp_path: Path):
    out = tmp_path / "out"
    argv = ["sweep", "--config", _experiment(tmp_path), "--axis", "m", "--values", "128", "nan", "--out", str(out)]

    assert main(argv) == 0

    lines = (out / "sweep.csv").read_text(encoding="utf-8").splitlines()
    assert lines[1].startswith("128,")
    assert lines[2].startswith("nan,nan,")
    assert "must be finite" in lines[2]


@mark.parametrize("argv", [[], ["train"], ["sweep", "--config", "x.json", "--axis", "alpha"]])
def test_usage_errors(argv: list[str]):
    with raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
