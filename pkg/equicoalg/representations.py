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
"""Linear representations of finite groups by dense matrices"""
import json
import logging
import typing
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ActionLawError, DimensionError, GroupMismatchError
from .groups import IDENTITY, GroupKind, GroupTable
from .set_coalgebra import FiniteSetCoalgebra, is_group_action, regular_action

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LinearRep:
    """Action of a group on R^dim by the matrices rho(g)"""

    group: GroupTable
    """Acting group"""

    dim: int
    """Dimension n of the space acted on"""

    matrices: np.ndarray
    """m x n x n array, matrices[g] = rho(g)"""

    orthogonal: bool = False
    """True if every rho(g) is orthogonal"""

    def __post_init__(self):
        matrices = np.array(self.matrices, dtype=np.float64)
        matrices.setflags(write=False)
        object.__setattr__(self, "matrices", matrices)

    def __call__(self, g: int) -> np.ndarray:
        return self.matrices[g]

    def act(self, g: int, x: np.ndarray) -> np.ndarray:
        """rho(g) x for a point or a batch of points (..., n)"""
        return np.asarray(x, dtype=np.float64) @ self.matrices[g].T

    def same_space(self, other: "LinearRep") -> bool:
        """True if both representations act the same way on the same space"""
        return (
            (self is other)
            or (
                (self.group == other.group)
                and (self.dim == other.dim)
                and np.array_equal(self.matrices, other.matrices)
            )
        )


# -----------------------------------------------------------------------------


def permutation_rep(
    group: GroupTable,
    action: typing.Union[FiniteSetCoalgebra, typing.Sequence[typing.Sequence[int]]],
) -> LinearRep:
    """0/1 matrices with rho(g) e_a = e_{xi(g, a)}"""
    if not isinstance(action, FiniteSetCoalgebra):
        action = FiniteSetCoalgebra(group=group, table=np.asarray(action))
    elif action.group != group:
        raise GroupMismatchError("group and action")

    verdict = is_group_action(action)
    if not verdict:
        raise ActionLawError(verdict)

    n = action.carrier_size
    matrices = np.zeros((group.order, n, n), dtype=np.float64)
    points = np.arange(n)
    for g in group.elements:
        matrices[g, action.table[:, g], points] = 1.0

    return LinearRep(group=group, dim=n, matrices=matrices, orthogonal=True)


def regular_rep(group: GroupTable) -> LinearRep:
    """Left translation on R^G, rho(g) e_h = e_{gh}"""
    return permutation_rep(group, regular_action(group))


def trivial_rep(group: GroupTable, dim: int = 1) -> LinearRep:
    """Every element acts as the identity matrix"""
    if dim < 1:
        raise DimensionError(f"Representation dimension must be positive (got {dim})")

    matrices = np.repeat(np.eye(dim)[None, :, :], group.order, axis=0)
    return LinearRep(group=group, dim=dim, matrices=matrices, orthogonal=True)


def rotation_rep(group: GroupTable) -> LinearRep:
    """Z_m acting on R^2, the generator rotating by 2 pi / m"""
    order = group.order
    expected = (np.arange(order)[:, None] + np.arange(order)[None, :]) % order
    if (group.kind not in (GroupKind.CYCLIC, GroupKind.TABLE)) or (
        not np.array_equal(group.mul, expected)
    ):
        raise DimensionError(
            f"Rotation representation needs a cyclic group (got {group.describe()})"
        )

    matrices = np.zeros((order, 2, 2), dtype=np.float64)
    for k in range(order):
        if (4 * k) % order == 0:
            # Exact quarter turns
            quarter = (4 * k) // order
            cos, sin = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)][quarter]
        else:
            angle = 2.0 * np.pi * k / order
            cos, sin = np.cos(angle), np.sin(angle)

        matrices[k] = [[cos, -sin], [sin, cos]]

    return LinearRep(group=group, dim=2, matrices=matrices, orthogonal=True)


def load_rep_file(path: typing.Union[str, Path], group: GroupTable) -> LinearRep:
    """Load matrices from JSON: a list of m square matrices (rows of floats).

    The orthogonal flag is set when every matrix is orthogonal to 1e-12.
    No homomorphism check is made here; see validate_rep.
    """
    path = Path(path)
    _LOGGER.debug("Loading representation from %s", path)

    with open(path, "r", encoding="utf-8") as rep_file:
        raw = json.load(rep_file)

    if isinstance(raw, dict):
        raw = raw.get("matrices")

    try:
        matrices = np.array(raw, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise DimensionError(f"Representation file {path} is malformed: {e}") from e

    if (
        matrices.ndim != 3
        or matrices.shape[0] != group.order
        or matrices.shape[1] != matrices.shape[2]
    ):
        raise DimensionError(
            f"Representation file {path} must hold {group.order} square matrices "
            f"(got shape {matrices.shape})"
        )

    dim = matrices.shape[1]
    gram = np.einsum("gji,gjk->gik", matrices, matrices)
    orthogonal = bool(np.all(np.abs(gram - np.eye(dim)) <= 1e-12))

    return LinearRep(group=group, dim=dim, matrices=matrices, orthogonal=orthogonal)


def validate_rep(rep: LinearRep) -> float:
    """Largest entrywise residual of the representation laws.

    Folds together |rho(g) rho(h) - rho(gh)|, |rho(1) - I|,
    |rho(g^-1) rho(g) - I| and, for orthogonal reps, |rho(g)^T rho(g) - I|.
    """
    group = rep.group
    matrices = rep.matrices
    n = rep.dim

    if matrices.shape != (group.order, n, n):
        raise DimensionError(
            f"Expected {group.order} matrices of shape {n}x{n} (got {matrices.shape})"
        )

    if not np.all(np.isfinite(matrices)):
        return float("inf")

    eye = np.eye(n)
    residual = float(np.max(np.abs(matrices[IDENTITY] - eye)))

    for g in group.elements:
        products = matrices[g] @ matrices
        residual = max(
            residual, float(np.max(np.abs(products - matrices[group.mul[g, :]])))
        )
        residual = max(
            residual,
            float(np.max(np.abs(matrices[group.inv[g]] @ matrices[g] - eye))),
        )

        if rep.orthogonal:
            residual = max(
                residual, float(np.max(np.abs(matrices[g].T @ matrices[g] - eye)))
            )

    _LOGGER.debug("Representation residual: %s", residual)

    return residual
