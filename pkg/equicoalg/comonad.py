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
"""The functor E(V) = V^G with its comonad structure.

An element phi of E(V) is stored as an m x n array whose row g is phi(g).
Iterating the functor adds leading group axes, so an element of EE(V) is an
m x m x n array with entry [g, h] = phi(g)(h).
"""
import logging
import typing
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, GroupMismatchError
from .groups import IDENTITY, GroupTable
from .linalg import VectorFunction
from .utils import make_rng

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BlockVector:
    """Element phi of E(V) = V^G, one vector per group element"""

    group: GroupTable
    blocks: np.ndarray
    """m x n array, blocks[g] = phi(g)"""

    def __post_init__(self):
        blocks = np.array(self.blocks, dtype=np.float64)
        if (
            blocks.ndim != 2
            or blocks.shape[0] != self.group.order
            or blocks.shape[1] < 1
        ):
            raise DimensionError(
                f"Block vector needs {self.group.order} blocks of equal dimension "
                f"(got shape {blocks.shape})"
            )

        blocks.setflags(write=False)
        object.__setattr__(self, "blocks", blocks)

    @property
    def dim(self) -> int:
        return int(self.blocks.shape[1])

    def __getitem__(self, g: int) -> np.ndarray:
        return self.blocks[g]


@dataclass(frozen=True, eq=False)
class BlockBlockVector:
    """Element of EE(V) = (V^G)^G, entry (g, h) = phi(g)(h)"""

    group: GroupTable
    blocks: np.ndarray
    """m x m x n array"""

    def __post_init__(self):
        blocks = np.array(self.blocks, dtype=np.float64)
        order = self.group.order
        if blocks.ndim != 3 or blocks.shape[:2] != (order, order):
            raise DimensionError(
                f"Expected a {order}x{order} grid of vectors (got shape {blocks.shape})"
            )

        blocks.setflags(write=False)
        object.__setattr__(self, "blocks", blocks)

    @property
    def dim(self) -> int:
        return int(self.blocks.shape[2])

    def row(self, g: int) -> BlockVector:
        return BlockVector(self.group, self.blocks[g])


# -----------------------------------------------------------------------------


class Comonad(metaclass=ABCMeta):
    """Endofunctor E on finite-dimensional spaces with delta: E => EE and
    epsilon: E => Id.

    Elements of E(V) are arrays whose leading axes index the functor. Only
    naturality of delta is assumed by symmetrization; coassociativity and the
    counit laws are measured by law_residual.
    """

    @abstractmethod
    def fmap(
        self, f: typing.Callable[[np.ndarray], np.ndarray], phi: np.ndarray
    ) -> np.ndarray:
        """E(f) applied to phi"""

    @abstractmethod
    def delta(self, phi: np.ndarray) -> np.ndarray:
        """Comultiplication delta_V: E(V) -> EE(V)"""

    @abstractmethod
    def epsilon(self, phi: np.ndarray) -> np.ndarray:
        """Counit epsilon_V: E(V) -> V"""

    def delta_block(self, phi: np.ndarray, index: int) -> np.ndarray:
        """delta_V(phi)[index] without building the whole of EE(V)"""
        return self.delta(phi)[index]

    def law_residual(self, phi: np.ndarray) -> float:
        """Largest entrywise residual of the coassociativity and counit laws at phi.

        Coassociativity is compared one outer block at a time, so memory stays
        at the size of EE(V).
        """
        d_phi = self.delta(phi)

        # epsilon_{E(V)} o delta_V = id = E(epsilon_V) o delta_V
        residual = float(np.max(np.abs(self.epsilon(d_phi) - phi)))
        residual = max(
            residual, float(np.max(np.abs(self.fmap(self.epsilon, d_phi) - phi)))
        )

        # delta_{E(V)} o delta_V = E(delta_V) o delta_V, block by block
        for index in range(d_phi.shape[0]):
            left = self.delta_block(d_phi, index)
            right = self.delta(d_phi[index])
            residual = max(residual, float(np.max(np.abs(left - right))))

        return residual


class GroupActionComonad(Comonad):
    """E(V) = V^G with delta(phi)(g)(h) = phi(hg) and epsilon(phi) = phi(1)"""

    def __init__(self, group: GroupTable):
        self.group = group

        # delta_index[g, h] = hg
        self._delta_index = np.array(group.mul).T

    def fmap(
        self, f: typing.Callable[[np.ndarray], np.ndarray], phi: np.ndarray
    ) -> np.ndarray:
        return np.stack(
            [np.asarray(f(phi[g]), dtype=np.float64) for g in self.group.elements]
        )

    def delta(self, phi: np.ndarray) -> np.ndarray:
        return phi[self._delta_index]

    def delta_block(self, phi: np.ndarray, index: int) -> np.ndarray:
        return phi[self._delta_index[index]]

    def epsilon(self, phi: np.ndarray) -> np.ndarray:
        return phi[IDENTITY]


# -----------------------------------------------------------------------------


def e_map(f: VectorFunction, phi: BlockVector) -> BlockVector:
    """E(f): apply f to every block of phi"""
    comonad = GroupActionComonad(phi.group)
    try:
        blocks = comonad.fmap(f, phi.blocks)
    except ValueError as e:
        raise DimensionError(
            f"Function cannot be applied to blocks of dimension {phi.dim}: {e}"
        ) from e

    if blocks.ndim != 2:
        raise DimensionError(
            f"Function must map vectors to vectors (got block shape {blocks.shape[1:]})"
        )

    return BlockVector(phi.group, blocks)


def delta(phi: BlockVector) -> BlockBlockVector:
    """delta(phi)(g)(h) = phi(hg)"""
    return BlockBlockVector(phi.group, GroupActionComonad(phi.group).delta(phi.blocks))


def epsilon(phi: BlockVector) -> np.ndarray:
    """epsilon(phi) = phi(1)"""
    return np.array(phi.blocks[IDENTITY])


def check_comonad_laws(
    group: GroupTable, dim: int, samples: typing.Iterable[BlockVector]
) -> float:
    """Largest residual of coassociativity and both counit laws over samples"""
    comonad = GroupActionComonad(group)

    residual = 0.0
    num_samples = 0
    for phi in samples:
        if phi.group != group:
            raise GroupMismatchError("comonad and sample")

        if phi.dim != dim:
            raise DimensionError(f"Sample has dimension {phi.dim} (expected {dim})")

        residual = max(residual, comonad.law_residual(phi.blocks))
        num_samples += 1

    if num_samples < 1:
        raise DimensionError("At least one sample is required")

    _LOGGER.debug(
        "Comonad laws on %s samples over %s: residual %s",
        num_samples,
        group.describe(),
        residual,
    )

    return residual


def random_block_vectors(
    group: GroupTable, dim: int, count: int, seed: int
) -> typing.List[BlockVector]:
    """Standard normal block vectors from the seeded stream"""
    rng = make_rng(seed, group.order, dim)
    return [
        BlockVector(group, rng.standard_normal((group.order, dim)))
        for _ in range(count)
    ]
