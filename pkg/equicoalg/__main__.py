# Copyright 2026 The equicoalg authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#
import argparse
import csv
import logging
import sys
import typing
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._resources import _PACKAGE
from .const import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, UAT_CSV_COLUMNS

if typing.TYPE_CHECKING:
    from .config import ExperimentConfig  # noqa: F401
    from .groups import GroupTable  # noqa: F401
    from .representations import LinearRep  # noqa: F401

_LOGGER = logging.getLogger(_PACKAGE)

# Child stream keys for law-check samples
_LAWS_STREAM = 10

# -----------------------------------------------------------------------------


@dataclass
class CommandLineInterfaceState:
    args: argparse.Namespace
    config: typing.Optional["ExperimentConfig"] = None
    group: typing.Optional["GroupTable"] = None
    base_dir: typing.Optional[Path] = None
    out: typing.TextIO = field(default=sys.stdout)

    failures: typing.List[str] = field(default_factory=list)
    """Names of checks that failed"""


class UsageError(Exception):
    """Problem with the command line or configuration (exit code 2)"""


# -----------------------------------------------------------------------------


def main():
    """Main entry point"""
    sys.exit(run())


def run(argv=None, out: typing.Optional[typing.TextIO] = None) -> int:
    """Run the command-line interface and return its exit code"""
    args = get_args(argv)

    if args.debug:
        logging.basicConfig(level=logging.DEBUG)
        logging.getLogger().setLevel(logging.DEBUG)
    else:
        logging.basicConfig(level=logging.INFO)
        logging.getLogger().setLevel(logging.INFO)

    if args.version:
        # Print version and exit
        from . import __version__

        print(__version__, file=out or sys.stdout)
        return EXIT_OK

    if not args.command:
        _LOGGER.error("A command is required (laws, uat, lift-demo)")
        return EXIT_USAGE

    _LOGGER.debug(args)

    state = CommandLineInterfaceState(args=args, out=out or sys.stdout)

    from .errors import EquicoalgError, GroupAxiomError, GroupSizeError

    try:
        initialize_config(state)
    except (UsageError, GroupAxiomError, GroupSizeError, ValueError, OSError) as e:
        _LOGGER.error(e)
        return EXIT_USAGE

    try:
        if args.command == "laws":
            return run_laws(state)

        if args.command == "uat":
            return run_uat(state)

        return run_lift_demo(state)
    except UsageError as e:
        _LOGGER.error(e)
        return EXIT_USAGE
    except EquicoalgError as e:
        _LOGGER.error(e)
        return EXIT_CHECK_FAILED


def initialize_config(state: CommandLineInterfaceState):
    """Load the config file, apply command-line overrides and build the group"""
    from .config import ExperimentConfig, parse_group_option
    from .errors import ConfigError

    args = state.args

    try:
        config = ExperimentConfig()
        if args.config:
            config = ExperimentConfig.load_and_merge(config, [args.config])
            state.base_dir = Path(args.config).parent

        if args.group:
            config.group = parse_group_option(args.group)

        if args.seed is not None:
            if args.seed < 0:
                raise ConfigError(f"Seed must be nonnegative (got {args.seed})")

            config.seed = args.seed
    except ConfigError as e:
        raise UsageError(str(e)) from e

    state.config = config
    state.group = config.group.build(state.base_dir)

    _LOGGER.debug("Group: %s", state.group.describe())


def build_reps(
    state: CommandLineInterfaceState,
) -> typing.Tuple["LinearRep", "LinearRep"]:
    """Domain and codomain representations from the config"""
    from .errors import DimensionError

    assert state.config is not None
    assert state.group is not None

    try:
        rep_in = state.config.domain_rep.build(state.group, state.base_dir)
        rep_out = state.config.codomain_rep.build(state.group, state.base_dir)
    except (DimensionError, OSError) as e:
        raise UsageError(f"Cannot build representation: {e}") from e

    return rep_in, rep_out


def report(
    state: CommandLineInterfaceState, name: str, passed: bool, value: typing.Any
):
    print(f"{name}: {value}", file=state.out)

    if not passed:
        state.failures.append(name)


# -----------------------------------------------------------------------------
# laws
# -----------------------------------------------------------------------------


def run_laws(state: CommandLineInterfaceState) -> int:
    """Comonad, comodule, left inverse, action and lifting checks"""
    from .comonad import check_comonad_laws, random_block_vectors
    from .free_lift import check_compatibility_identity, check_embedding_equivariance
    from .representations import validate_rep
    from .set_coalgebra import (
        is_group_action,
        is_homomorphism,
        is_subuniverse,
        natural_action,
        orbits,
        regular_action,
    )
    from .symmetrize import (
        ActionCoalgebra,
        ReynoldsAlgebra,
        check_comodule_laws,
        check_left_inverse,
    )
    from .utils import make_rng

    config = state.config
    group = state.group
    assert config is not None
    assert group is not None

    tolerance = config.tolerance
    num_samples = config.law_samples
    rep_in, rep_out = build_reps(state)

    print(f"group: {group.describe()}", file=state.out)

    for side, rep in (("domain", rep_in), ("codomain", rep_out)):
        rep_residual = validate_rep(rep)
        report(state, f"{side} representation", rep_residual <= tolerance, rep_residual)

        blocks = random_block_vectors(group, rep.dim, num_samples, config.seed)
        residual = check_comonad_laws(group, rep.dim, blocks)
        report(state, f"{side} comonad laws", residual <= tolerance, residual)

        # Broken matrices are measured, not rejected
        beta = ActionCoalgebra(rep, check=False)
        gamma = ReynoldsAlgebra(rep, check=False)

        rng = make_rng(config.seed, _LAWS_STREAM, rep.dim)
        vectors = list(rng.standard_normal((num_samples, rep.dim)))

        residual = check_comodule_laws(beta, vectors)
        report(state, f"{side} comodule laws", residual <= tolerance, residual)

        residual = check_left_inverse(beta, gamma, [*vectors, *blocks])
        report(state, f"{side} left inverse", residual <= tolerance, residual)

    action = natural_action(group)
    regular = regular_action(group)

    for name, coalgebra in (("natural action", action), ("regular action", regular)):
        verdict = is_group_action(coalgebra)
        report(state, f"{name} laws", bool(verdict), verdict)

    # h -> h . 0 is equivariant from the regular action to any action
    orbit_map = action.table[0, :].tolist()
    verdict = is_homomorphism(orbit_map, regular, action)
    report(state, "orbit map homomorphism", bool(verdict), verdict)

    for orbit in orbits(action):
        verdict = is_subuniverse(orbit, action)
        report(state, f"orbit {list(orbit)} subuniverse", bool(verdict), verdict)

    verdict = check_embedding_equivariance(action)
    report(state, "lifted embedding", bool(verdict), verdict)

    verdict = check_compatibility_identity(action)
    report(state, "compatibility identity", bool(verdict), verdict)

    if state.failures:
        _LOGGER.error("Failed checks: %s", ", ".join(state.failures))
        return EXIT_CHECK_FAILED

    return EXIT_OK


# -----------------------------------------------------------------------------
# uat
# -----------------------------------------------------------------------------


def run_uat(state: CommandLineInterfaceState) -> int:
    """Fit shallow nets per width and report their symmetrized errors as CSV"""
    from tqdm.auto import tqdm

    from .approx import UatReportRow, experiment_samples, run_uat_row
    from .errors import ConfigError
    from .symmetrize import ActionCoalgebra, ReynoldsAlgebra
    from .targets import resolve_target
    from .utils import prng_description

    config = state.config
    assert config is not None

    if state.args.num_threads < 1:
        raise UsageError(
            f"--num-threads must be positive (got {state.args.num_threads})"
        )

    rep_in, rep_out = build_reps(state)
    alpha = ActionCoalgebra(rep_in)
    gamma = ReynoldsAlgebra(rep_out)

    if len(config.bounds) != rep_in.dim:
        raise UsageError(
            f"Config has {len(config.bounds)} bounds "
            f"but the domain has dimension {rep_in.dim}"
        )

    try:
        target = resolve_target(config.target, alpha, gamma)
    except ConfigError as e:
        raise UsageError(str(e)) from e

    _LOGGER.debug("Seed %s (%s)", config.seed, prng_description())
    train, test = experiment_samples(
        config.bounds, config.train_count, config.test_count, config.seed
    )

    try:
        sample_value = np.asarray(target(train.points[:1]), dtype=np.float64)
    except ValueError as e:
        raise UsageError(
            f"Target {config.target} cannot be applied to the domain: {e}"
        ) from e

    if sample_value.shape != (1, rep_out.dim):
        raise UsageError(
            f"Target {config.target} has output shape {sample_value.shape[1:]} "
            f"but the codomain has dimension {rep_out.dim}"
        )

    def row_for_width(width: int) -> UatReportRow:
        return run_uat_row(
            target,
            alpha,
            gamma,
            train,
            test,
            width,
            activation=config.activation,
            ridge_lambda=config.ridge_lambda,
            seed=config.seed,
        )

    with ThreadPoolExecutor(max_workers=state.args.num_threads) as executor:
        # map yields results in width order
        rows = list(
            tqdm(
                executor.map(row_for_width, config.widths),
                total=len(config.widths),
                unit="width",
                disable=not sys.stderr.isatty(),
            )
        )

    if state.args.out:
        with open(state.args.out, "w", encoding="utf-8", newline="") as out_file:
            write_uat_csv(rows, out_file)
    else:
        write_uat_csv(rows, state.out)

    for row in rows:
        if not row.is_equivariant(config.tolerance):
            state.failures.append(f"equivariance at width {row.width}")

    if state.failures:
        _LOGGER.error("Failed checks: %s", ", ".join(state.failures))
        return EXIT_CHECK_FAILED

    return EXIT_OK


def write_uat_csv(rows: typing.Iterable[typing.Any], out_file: typing.TextIO):
    writer = csv.writer(out_file, lineterminator="\n")
    writer.writerow(UAT_CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_fields())


# -----------------------------------------------------------------------------
# lift-demo
# -----------------------------------------------------------------------------


def run_lift_demo(state: CommandLineInterfaceState) -> int:
    """Lift a finite action to V(A) and check the embedding square"""
    from .free_lift import (
        check_compatibility_identity,
        check_embedding_equivariance,
        lifted_blocks,
    )
    from .errors import DimensionError
    from .set_coalgebra import FiniteSetCoalgebra, is_group_action, natural_action

    config = state.config
    group = state.group
    assert config is not None
    assert group is not None

    if config.action is not None:
        try:
            table = np.array(config.action, dtype=np.int64)
        except ValueError as e:
            raise DimensionError(
                f"Action must be a rectangular table of integers: {e}"
            ) from e

        coalgebra = FiniteSetCoalgebra(group=group, table=table)
    else:
        coalgebra = natural_action(group)

    print(f"group: {group.describe()}", file=state.out)
    print(f"carrier size: {coalgebra.carrier_size}", file=state.out)

    verdict = is_group_action(coalgebra)
    report(state, "action laws", bool(verdict), verdict)
    if not verdict:
        _LOGGER.error("Not a group action: %s", verdict)
        return EXIT_CHECK_FAILED

    for g, block in enumerate(lifted_blocks(coalgebra)):
        print(f"block {g}:", file=state.out)
        for matrix_row in block.astype(int):
            print("  " + " ".join(str(v) for v in matrix_row), file=state.out)

    verdict = check_embedding_equivariance(coalgebra)
    report(state, "lifted embedding", bool(verdict), verdict)

    verdict = check_compatibility_identity(coalgebra)
    report(state, "compatibility identity", bool(verdict), verdict)

    if state.failures:
        _LOGGER.error("Failed checks: %s", ", ".join(state.failures))
        return EXIT_CHECK_FAILED

    return EXIT_OK


# -----------------------------------------------------------------------------


def get_args(argv=None):
    """Parse command-line arguments"""
    # Options are accepted before or after the command; SUPPRESS keeps a
    # sub-command from resetting values given before it
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help="Path to JSON experiment config")
    common.add_argument(
        "--group",
        help="Override the group: table:<path> or <kind>:<n> (e.g., dihedral:4)",
    )
    common.add_argument("--seed", type=int, help="Override the random seed")
    common.add_argument(
        "--debug", action="store_true", help="Print DEBUG messages to the console"
    )

    parser = argparse.ArgumentParser(
        prog=_PACKAGE,
        description="Equivariant approximation through group-action comonads",
        parents=[common],
    )
    parser.add_argument("--version", action="store_true", help="Print version and exit")
    parser.set_defaults(config=None, group=None, seed=None, debug=False, command=None)

    sub_parsers = parser.add_subparsers(dest="command")

    sub_parsers.add_parser(
        "laws",
        parents=[common],
        help="Check comonad, comodule, left inverse, action and lifting laws",
    )

    uat_parser = sub_parsers.add_parser(
        "uat", parents=[common], help="Run the approximation experiment over widths"
    )
    uat_parser.add_argument("--out", help="Write CSV here instead of stdout")
    uat_parser.add_argument(
        "--num-threads",
        type=int,
        default=1,
        help="Number of widths fitted concurrently (default: 1)",
    )

    sub_parsers.add_parser(
        "lift-demo",
        parents=[common],
        help="Lift a finite action to its free vector space",
    )

    return parser.parse_args(args=argv)


# -----------------------------------------------------------------------------

if __name__ == "__main__":
    main()
