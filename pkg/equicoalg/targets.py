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
"""Builtin target functions for approximation experiments.

Every target is a function handle: points of shape (..., n) to values of
shape (..., w).
"""
import typing

import numpy as np

from .errors import ConfigError, DimensionError
from .linalg import VectorFunction
from .symmetrize import ActionCoalgebra, ReynoldsAlgebra, symmetrize

SYMMETRIZED_PREFIX = "symmetrized:"


def swap_poly(x: np.ndarray) -> np.ndarray:
    """(x, y) -> (xy + x, xy + y), equivariant under swapping coordinates"""
    x = np.asarray(x, dtype=np.float64)
    if x.shape[-1] != 2:
        raise DimensionError(f"swap_poly is defined on R^2 (got shape {x.shape})")

    product = x[..., 0] * x[..., 1]
    return np.stack([product + x[..., 0], product + x[..., 1]], axis=-1)


def perm_meanshift(x: np.ndarray) -> np.ndarray:
    """x_i -> x_i^2 + mean(x), equivariant under permuting coordinates"""
    x = np.asarray(x, dtype=np.float64)
    return x ** 2 + np.mean(x, axis=-1, keepdims=True)


def identity(x: np.ndarray) -> np.ndarray:
    return np.array(x, dtype=np.float64)


def sine_mix(x: np.ndarray) -> np.ndarray:
    """x -> sin(2x) + x_0^2 (not equivariant)"""
    x = np.asarray(x, dtype=np.float64)
    return np.sin(2.0 * x) + x[..., :1] ** 2


TARGETS: typing.Dict[str, VectorFunction] = {
    "swap_poly": swap_poly,
    "perm_meanshift": perm_meanshift,
    "identity": identity,
    "sine_mix": sine_mix,
}


def is_known_target(name: str) -> bool:
    if name.startswith(SYMMETRIZED_PREFIX):
        name = name[len(SYMMETRIZED_PREFIX) :]

    return name in TARGETS


def resolve_target(
    name: str,
    alpha: typing.Optional[ActionCoalgebra] = None,
    gamma: typing.Optional[ReynoldsAlgebra] = None,
) -> VectorFunction:
    """Look up a builtin target; "symmetrized:<name>" wraps it through Phi"""
    if name.startswith(SYMMETRIZED_PREFIX):
        if (alpha is None) or (gamma is None):
            raise ConfigError(f"Target {name} needs input and output representations")

        return symmetrize(resolve_target(name[len(SYMMETRIZED_PREFIX) :]), alpha, gamma)

    target = TARGETS.get(name)
    if target is None:
        raise ConfigError(f"Unknown target: {name} (expected one of {sorted(TARGETS)})")

    return target
