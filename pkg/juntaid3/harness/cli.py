# The MIT License (MIT)
# Copyright (c) 2024-present juntaid3 developers
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
# OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

from __future__ import annotations

import asyncio
import logging
import sys
from argparse import ArgumentParser
from logging import getLogger
from pathlib import Path
from typing import TYPE_CHECKING

from ..common.errors import JuntaError
from ..common.json import json_dumps
from ..core import PartialAssignment, read_dataset, render_tree, tree_to_json
from ..distributions import parse_instance
from ..fourier import (
    anticoncentration_bound,
    anticoncentration_estimate,
    fourier_coeffs,
    normalize_polynomial,
    restrict_target,
    shift_polynomial,
    split_on_coordinate,
)
from ..impurity import get_impurity
from ..learner import LearnerPolicy, id3_learn
from ..oracle import exact_gain, exact_I, exact_label_prob, verify_basic_conditions
from .batch import BatchRunner
from .config import SweepAxis, TrialConfig, load_config
from .report import finite_json, write_plot_svg, write_summary_json, write_sweep_csv, write_trials_csv
from .sweep import sweep

if TYPE_CHECKING:
    from argparse import Namespace
    from typing import Any, Final, Sequence

    from ..distributions import Instance
    from ..fourier import MultilinearPolynomial
    from .trial import TrialResult

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("build_parser", "main")

EXIT_OK: Final[int] = 0
EXIT_INPUT_ERROR: Final[int] = 2


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="juntaid3", description="ID3 on juntas over product distributions.")
    parser.add_argument("--log-level", default="WARNING", choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    commands = parser.add_subparsers(dest="command", required=True)

    learn = commands.add_parser("learn", help="learn a tree from a dataset file")
    learn.add_argument("--dataset", required=True, help="dataset in the 'n=<n> m=<m>' text format")
    learn.add_argument("--impurity", default="gini", choices=("gini", "entropy"))
    learn.add_argument("--tie-break", default="lowest_index", choices=("lowest_index", "seeded_random"))
    learn.add_argument("--seed", type=int, default=0)
    learn.add_argument("--out", type=Path, help="directory to write tree.json and tree.txt to")

    oracle = commands.add_parser("oracle", help="exact quantities of a instance")
    oracle.add_argument("--config", required=True, type=Path, help="instance json")
    oracle.add_argument("--assignment", help="restriction such as '01**', defaults to all free")
    oracle.add_argument("--feature", type=int, help="feature to report I and Gain for")
    oracle.add_argument("--impurity", default="gini", choices=("gini", "entropy"))
    oracle.add_argument("--epsilon", type=float, default=0.0, help="the eps to check the basic conditions against")
    oracle.add_argument("--seed", type=int, help="seed of the smoothing draw")

    fourier = commands.add_parser("fourier", help="fourier expansion of a (restricted) target")
    fourier.add_argument("--config", required=True, type=Path, help="instance json")
    fourier.add_argument("--assignment", help="restriction such as '01**', defaults to all free")
    fourier.add_argument("--feature", type=int, help="coordinate to split the expansion on")
    fourier.add_argument("--epsilon", type=float, nargs="*", default=[1e-4, 1e-3, 1e-2])
    fourier.add_argument("--trials", type=int, default=10_000, help="monte carlo draws per estimate")
    fourier.add_argument("--seed", type=int, default=0)

    for name, description in (("experiment", "run a batch of trials"), ("sweep", "run one batch per axis value")):
        command = commands.add_parser(name, help=description)
        command.add_argument("--config", required=True, type=Path, help="experiment json")
        command.add_argument("--seed", type=int, help="override the master seed")
        command.add_argument("--jobs", type=int, help="worker processes")
        command.add_argument("--out", type=Path, default=Path("."), help="output directory")
        if name == "sweep":
            command.add_argument("--axis", required=True, choices=[axis.value for axis in SweepAxis])
            command.add_argument("--values", type=float, nargs="*", default=[])
    return parser


def _print_json(data: Any) -> None:
    print(json_dumps(finite_json(data), indent=True))


def _load_instance(path: Path) -> Instance:
    return parse_instance(path.read_bytes())


def _assignment(text: str | None, n: int) -> PartialAssignment:
    if text is None:
        return PartialAssignment.free(n)
    assignment = PartialAssignment.parse(text)
    if assignment.n != n:
        raise JuntaError(f"the assignment has {assignment.n} coordinates, expected {n}")
    return assignment


def _subset(mask: int, coordinates: Sequence[int]) -> list[int]:
    return [coordinate for position, coordinate in enumerate(coordinates) if mask >> position & 1]


def _polynomial_json(polynomial: MultilinearPolynomial, coordinates: Sequence[int]) -> list[dict[str, Any]]:
    return [
        {"monomial": _subset(mask, coordinates), "coefficient": value} for mask, value in polynomial.coeffs.items()
    ]


def _learn(args: Namespace) -> int:
    dataset = read_dataset(args.dataset)
    policy = LearnerPolicy(args.tie_break, impurity=args.impurity)
    tree = id3_learn(dataset, None, policy, args.seed)
    text = render_tree(tree)
    sys.stdout.write(text)
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "tree.json").write_text(json_dumps(tree_to_json(tree), indent=True) + "\n", encoding="utf-8")
        (args.out / "tree.txt").write_text(text, encoding="utf-8")
    return EXIT_OK


def _oracle(args: Namespace) -> int:
    instance = _load_instance(args.config)
    distribution = instance.draw_distribution(args.seed)
    target = instance.target
    assignment = _assignment(args.assignment, target.n)
    spec = get_impurity(args.impurity)

    output: dict[str, Any] = {
        "probs": distribution.probs.tolist(),
        "assignment": str(assignment),
        "label_prob": exact_label_prob(distribution, target, assignment),
    }
    if args.feature is not None:
        output["feature"] = args.feature
        output["I"] = exact_I(distribution, target, assignment, args.feature)
        output["gain"] = exact_gain(distribution, target, assignment, args.feature, spec)

    report = verify_basic_conditions(distribution, target, spec, args.epsilon)
    output["basic_conditions"] = {
        "epsilon": report.epsilon,
        "requested": report.requested,
        "held": report.held,
        "subcubes": [
            {
                "assignment": str(entry.assignment),
                "mass": entry.mass,
                "label_prob": entry.label_prob,
                "pure": entry.pure,
                "min_abs_I": entry.min_abs_I,
                "min_gain": entry.min_gain,
            }
            for entry in report.entries
        ],
    }
    _print_json(output)
    return EXIT_OK


def _fourier(args: Namespace) -> int:
    instance = _load_instance(args.config)
    target = instance.target
    assignment = _assignment(args.assignment, target.n)
    restricted = restrict_target(target, assignment, strict=False)
    expansion = fourier_coeffs(restricted.truth_table)
    coordinates = restricted.support

    output: dict[str, Any] = {
        "support": list(coordinates),
        "degree": expansion.degree,
        "coefficients": [{"subset": _subset(mask, coordinates), "value": value} for mask, value in expansion.items()],
    }

    if args.feature is not None:
        if args.feature not in coordinates:
            raise JuntaError(f"feature {args.feature} is not a free coordinate of the support {list(coordinates)}")
        position = coordinates.index(args.feature)
        derivative, rest = split_on_coordinate(expansion, position)
        output["g"] = _polynomial_json(derivative, coordinates)
        output["h"] = _polynomial_json(rest, coordinates)

        if instance.smoothing is not None:
            smoothing = instance.smoothing
            base = [float(smoothing.base[coordinate]) for coordinate in coordinates]
            shifted = shift_polynomial(derivative, base)
            normalized = normalize_polynomial(shifted, smoothing.c, restricted.k)
            output["g0"] = _polynomial_json(shifted, coordinates)
            output["G0"] = _polynomial_json(normalized, coordinates)
            output["anticoncentration"] = [
                {
                    "epsilon": epsilon,
                    "estimate": anticoncentration_estimate(shifted, smoothing.c, epsilon, args.trials, args.seed),
                    "bound": anticoncentration_bound(smoothing.c, restricted.k, epsilon),
                }
                for epsilon in args.epsilon
            ]
    _print_json(output)
    return EXIT_OK


def _override(config: TrialConfig, args: Namespace) -> TrialConfig:
    if args.seed is None:
        return config
    return TrialConfig(dict(config.document, seed=args.seed))


def _runner(config: TrialConfig, args: Namespace) -> BatchRunner:
    jobs = args.jobs if args.jobs is not None else config.document.get("jobs", 1)
    runner = BatchRunner(jobs)

    @runner.dispatcher.listen("trial_finished")
    def on_trial(result: TrialResult) -> None:
        logger.info("Trial %s finished with loss %r", result.index, result.exact_loss)

    return runner


def _experiment(args: Namespace) -> int:
    config = _override(load_config(args.config), args)
    summary = asyncio.run(_runner(config, args).run(config))
    args.out.mkdir(parents=True, exist_ok=True)
    write_trials_csv(summary, args.out / "trials.csv")
    write_summary_json(summary, args.out / "summary.json")
    print(
        f"success_rate={summary.success_rate!r} mean_loss={summary.mean_loss!r} "
        f"mean_tree_size={summary.mean_tree_size!r} errors={summary.errors}"
    )
    return EXIT_OK


def _sweep(args: Namespace) -> int:
    config = _override(load_config(args.config), args)
    table = asyncio.run(sweep(_runner(config, args), config, args.axis, args.values))
    args.out.mkdir(parents=True, exist_ok=True)
    write_sweep_csv(table, args.out / "sweep.csv")
    write_plot_svg(table, args.out / "plot.svg")
    for row in table.rows:
        print(f"{args.axis}={row.value!r} success_rate={row.success_rate!r}")
    return EXIT_OK


_COMMANDS: Final = {
    "learn": _learn,
    "oracle": _oracle,
    "fourier": _fourier,
    "experiment": _experiment,
    "sweep": _sweep,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line interface.

    Returns 0 on completion and 2 when a input file or configuration is invalid.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except (JuntaError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR
