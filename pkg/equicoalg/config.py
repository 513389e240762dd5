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
"""Configuration classes"""
import collections.abc
import json
import typing
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from dataclasses_json import DataClassJsonMixin, Undefined, config

from .approx import Activation
from .const import (
    DEFAULT_BOUNDS,
    DEFAULT_LAW_SAMPLES,
    DEFAULT_LAW_TOLERANCE,
    DEFAULT_RIDGE_LAMBDA,
    DEFAULT_SEED,
    DEFAULT_TEST_COUNT,
    DEFAULT_TRAIN_COUNT,
    DEFAULT_WIDTHS,
)
from .errors import ConfigError
from .groups import GroupKind, GroupTable, build_group, load_group_table
from .representations import (
    LinearRep,
    load_rep_file,
    permutation_rep,
    regular_rep,
    rotation_rep,
    trivial_rep,
)
from .set_coalgebra import natural_action
from .targets import is_known_target

# Unknown keys in a config file are errors
_STRICT = config(undefined=Undefined.RAISE)["dataclasses_json"]


class RepKind(str, Enum):
    """How a representation is built from the group"""

    PERMUTATION = "permutation"
    """Permutation matrices of the group's natural action"""

    REGULAR = "regular"
    ROTATION2D = "rotation2d"
    TRIVIAL = "trivial"

    FILE = "file"
    """JSON list of matrices (may be invalid on purpose)"""


@dataclass
class GroupSpec(DataClassJsonMixin):
    """Builtin group (kind + n) or a table file"""

    dataclass_json_config = _STRICT

    kind: GroupKind = GroupKind.CYCLIC
    n: int = 2
    path: typing.Optional[str] = None

    def __post_init__(self):
        try:
            self.kind = GroupKind(self.kind)
        except ValueError as e:
            raise ConfigError(f"Unknown group kind: {self.kind}") from e

        if self.kind == GroupKind.TABLE:
            if not self.path:
                raise ConfigError("Group kind 'table' requires a path")
        elif self.n < 1:
            raise ConfigError(f"Group size must be positive (got {self.n})")

    def build(self, base_dir: typing.Optional[Path] = None) -> GroupTable:
        if self.kind == GroupKind.TABLE:
            assert self.path is not None
            return load_group_table(_resolve(self.path, base_dir))

        return build_group(self.kind, self.n)

    def describe(self) -> str:
        if self.kind == GroupKind.TABLE:
            return f"table:{self.path}"

        return f"{self.kind.value}:{self.n}"


@dataclass
class RepSpec(DataClassJsonMixin):
    """Representation of the group on the input or output space"""

    dataclass_json_config = _STRICT

    kind: RepKind = RepKind.PERMUTATION

    dim: typing.Optional[int] = None
    """Dimension of a trivial representation (default 1)"""

    path: typing.Optional[str] = None
    """Matrix file for kind 'file'"""

    def __post_init__(self):
        try:
            self.kind = RepKind(self.kind)
        except ValueError as e:
            raise ConfigError(f"Unknown representation kind: {self.kind}") from e

        if (self.kind == RepKind.FILE) and (not self.path):
            raise ConfigError("Representation kind 'file' requires a path")

        if (self.dim is not None) and (self.dim < 1):
            raise ConfigError(
                f"Representation dimension must be positive (got {self.dim})"
            )

    def build(
        self, group: GroupTable, base_dir: typing.Optional[Path] = None
    ) -> LinearRep:
        if self.kind == RepKind.PERMUTATION:
            return permutation_rep(group, natural_action(group))

        if self.kind == RepKind.REGULAR:
            return regular_rep(group)

        if self.kind == RepKind.ROTATION2D:
            return rotation_rep(group)

        if self.kind == RepKind.TRIVIAL:
            return trivial_rep(group, self.dim or 1)

        assert self.path is not None
        return load_rep_file(_resolve(self.path, base_dir), group)


def _resolve(path: str, base_dir: typing.Optional[Path]) -> Path:
    resolved = Path(path)
    if (base_dir is not None) and (not resolved.is_absolute()):
        resolved = base_dir / resolved

    return resolved


@dataclass
class ExperimentConfig(DataClassJsonMixin):
    """Master configuration for law checks, approximation runs and the lifting demo"""

    dataclass_json_config = _STRICT

    group: GroupSpec = field(default_factory=GroupSpec)
    domain_rep: RepSpec = field(default_factory=RepSpec)
    codomain_rep: RepSpec = field(default_factory=RepSpec)

    target: str = "swap_poly"
    """Builtin target name, or symmetrized:<name>"""

    bounds: typing.List[typing.List[float]] = field(
        default_factory=lambda: [list(b) for b in DEFAULT_BOUNDS]
    )
    """(lower, upper) per input coordinate"""

    train_count: int = DEFAULT_TRAIN_COUNT
    test_count: int = DEFAULT_TEST_COUNT
    widths: typing.List[int] = field(default_factory=lambda: list(DEFAULT_WIDTHS))
    activation: Activation = Activation.TANH
    ridge_lambda: float = DEFAULT_RIDGE_LAMBDA
    seed: int = DEFAULT_SEED

    law_samples: int = DEFAULT_LAW_SAMPLES
    tolerance: float = DEFAULT_LAW_TOLERANCE

    action: typing.Optional[typing.List[typing.List[int]]] = None
    """Explicit carrier x group table for lift-demo (default: natural action)"""

    def __post_init__(self):
        try:
            self.activation = Activation(self.activation)
        except ValueError as e:
            raise ConfigError(
                f"Unknown activation: {self.activation} (expected one of "
                f"{[a.value for a in Activation]})"
            ) from e

        if not self.widths:
            raise ConfigError("At least one width is required")

        if any(w < 1 for w in self.widths):
            raise ConfigError(f"Widths must be positive (got {self.widths})")

        if (self.train_count < 1) or (self.test_count < 1):
            raise ConfigError("Train and test counts must be positive")

        if not is_known_target(self.target):
            raise ConfigError(f"Unknown target: {self.target}")

        if (not self.bounds) or any(
            (len(b) != 2) or (b[0] > b[1]) for b in self.bounds
        ):
            raise ConfigError(
                f"Bounds must be (lower, upper) pairs (got {self.bounds})"
            )

        if self.ridge_lambda < 0:
            raise ConfigError(
                f"Ridge lambda must be nonnegative (got {self.ridge_lambda})"
            )

        if self.seed < 0:
            raise ConfigError(f"Seed must be nonnegative (got {self.seed})")

        if self.law_samples < 1:
            raise ConfigError(f"law_samples must be positive (got {self.law_samples})")

        if self.tolerance <= 0:
            raise ConfigError(f"tolerance must be positive (got {self.tolerance})")

    def save(self, config_file: typing.TextIO):
        """Save config as JSON to a file"""
        json.dump(self.to_dict(encode_json=True), config_file, indent=4)

    @staticmethod
    def load(config_file: typing.TextIO) -> "ExperimentConfig":
        """Load config from a JSON file"""
        return ExperimentConfig.from_dict_checked(_read_json(config_file))

    @staticmethod
    def from_dict_checked(config_dict: typing.Any) -> "ExperimentConfig":
        """from_dict with every parse problem reported as ConfigError"""
        if not isinstance(config_dict, collections.abc.Mapping):
            raise ConfigError("Config must be a JSON object")

        try:
            return ExperimentConfig.from_dict(dict(config_dict))
        except ConfigError:
            raise
        except Exception as e:
            # dataclasses_json raises several unrelated types for bad input
            raise ConfigError(f"Invalid config: {e}") from e

    @staticmethod
    def load_and_merge(
        config: "ExperimentConfig",
        config_files: typing.Iterable[typing.Union[str, Path, typing.TextIO]],
    ) -> "ExperimentConfig":
        """Loads one or more JSON configuration files and overlays them on top of an
        existing config"""
        base_dict = config.to_dict(encode_json=True)
        for maybe_config_file in config_files:
            if isinstance(maybe_config_file, (str, Path)):
                # File path
                try:
                    config_file = open(maybe_config_file, "r", encoding="utf-8")
                except OSError as e:
                    raise ConfigError(
                        f"Cannot open config {maybe_config_file}: {e}"
                    ) from e
            else:
                # File object
                config_file = maybe_config_file

            with config_file:
                # Load new config and overlay on existing config
                new_dict = _read_json(config_file)
                if not isinstance(new_dict, collections.abc.Mapping):
                    raise ConfigError("Config must be a JSON object")

                ExperimentConfig.recursive_update(base_dict, new_dict)

        return ExperimentConfig.from_dict_checked(base_dict)

    @staticmethod
    def recursive_update(
        base_dict: typing.Dict[typing.Any, typing.Any],
        new_dict: typing.Mapping[typing.Any, typing.Any],
    ) -> None:
        """Recursively overwrites values in base dictionary with values from new
        dictionary"""
        for key, value in new_dict.items():
            if isinstance(value, collections.abc.Mapping) and isinstance(
                base_dict.get(key), collections.abc.MutableMapping
            ):
                ExperimentConfig.recursive_update(base_dict[key], value)
            else:
                base_dict[key] = value


def _read_json(config_file: typing.TextIO) -> typing.Any:
    try:
        return json.load(config_file)
    except json.JSONDecodeError as e:
        raise ConfigError(f"Malformed JSON config: {e}") from e


def parse_group_option(text: str) -> GroupSpec:
    """Parse table:<path> or <kind>:<n> (e.g. dihedral:4)"""
    kind, sep, value = text.partition(":")
    if (not sep) or (not value):
        raise ConfigError(f"Expected table:<path> or <kind>:<n> (got {text!r})")

    if kind == GroupKind.TABLE.value:
        # Command-line paths are relative to the working directory
        return GroupSpec(kind=GroupKind.TABLE, path=str(Path(value).absolute()))

    try:
        n = int(value)
    except ValueError as e:
        raise ConfigError(f"Group size must be an integer (got {value!r})") from e

    return GroupSpec(kind=kind, n=n)  # type: ignore[arg-type]
