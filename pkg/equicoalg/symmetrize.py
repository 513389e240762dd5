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
"""Action coalgebras, the Reynolds left inverse and the symmetrization operator.

For a representation rho of G on V:
  beta(x)(g) = rho(g) x                          (coalgebra V -> E(V))
  gamma(phi) = 1/|G| sum_g rho(g^-1) phi(g)      (algebra E(V) -> V)
  Phi(f) = gamma_W o E(f) o alpha_V              (symmetrization)
"""
import logging
import typing
from dataclasses import InitVar, dataclass

import numpy as np

from .comonad import BlockVector, GroupActionComonad
from .const import REP_TOLERANCE
from .errors import (
    DimensionError,
    GroupMismatchError,
    InvalidRepresentationError,
    RepresentationMismatchError,
)
from .groups import GroupTable
from .linalg import VectorFunction
from .representations import LinearRep, validate_rep

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ActionCoalgebra:
    """beta: V -> E(V), beta(x)(g) = rho(g) x"""

    rep: LinearRep

    check: InitVar[bool] = True
    """Reject matrices that fail validate_rep (disable to study broken reps)"""

    def __post_init__(self, check: bool):
        if check:
            _require_valid(self.rep)

    @property
    def group(self) -> GroupTable:
        return self.rep.group

    @property
    def dim(self) -> int:
        return self.rep.dim

    def __call__(self, x: np.ndarray) -> np.ndarray:
        """beta for a point (n,) -> (m, n) or a batch (..., n) -> (..., m, n)"""
        x = _check_dim(x, self.rep.dim)
        return np.einsum("gij,...j->...gi", self.rep.matrices, x)


@dataclass(frozen=True, eq=False)
class ReynoldsAlgebra:
    """gamma: E(W) -> W, the group average 1/|G| sum_g rho(g^-1) phi(g)"""

    rep: LinearRep

    check: InitVar[bool] = True
    """Reject matrices that fail validate_rep"""

    def __post_init__(self, check: bool):
        if check:
            _require_valid(self.rep)

    @property
    def group(self) -> GroupTable:
        return self.rep.group

    @property
    def dim(self) -> int:
        return self.rep.dim

    def __call__(self, phi: np.ndarray) -> np.ndarray:
        """gamma for a block array (..., m, n) -> (..., n)"""
        phi = np.asarray(phi, dtype=np.float64)
        group = self.rep.group
        if phi.ndim < 2 or phi.shape[-2:] != (group.order, self.rep.dim):
            raise DimensionError(
                f"Expected blocks of shape ({group.order}, {self.rep.dim}) (got "
                f"{phi.shape})"
            )

        # Divide each term by m, then sum in index order
        order = group.order
        total = np.zeros(phi.shape[:-2] + (self.rep.dim,), dtype=np.float64)
        for g in group.elements:
            total = total + (phi[..., g, :] @ self.rep.matrices[group.inv[g]].T) / order

        return total


def _require_valid(rep: LinearRep):
    residual = validate_rep(rep)
    if residual > REP_TOLERANCE:
        raise InvalidRepresentationError(residual, REP_TOLERANCE)


def _check_dim(x: np.ndarray, dim: int) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim < 1 or x.shape[-1] != dim:
        raise DimensionError(
            f"Expected points of dimension {dim} (got shape {x.shape})"
        )

    return x


# -----------------------------------------------------------------------------


def beta_apply(a: ActionCoalgebra, x: np.ndarray) -> BlockVector:
    """Block g of the result is rho(g) x"""
    x = _check_dim(x, a.dim)
    if x.ndim != 1:
        raise DimensionError(f"Expected a single vector (got shape {x.shape})")

    return BlockVector(a.group, a(x))


def gamma_apply(r: ReynoldsAlgebra, phi: BlockVector) -> np.ndarray:
    """1/m sum_g rho(g^-1) phi(g)"""
    if phi.group != r.group:
        raise GroupMismatchError("Reynolds algebra and block vector")

    if phi.dim != r.dim:
        raise DimensionError(f"Block dimension {phi.dim} does not match {r.dim}")

    return r(phi.blocks)


def check_comodule_laws(
    a: ActionCoalgebra, samples: typing.Iterable[np.ndarray]
) -> float:
    """Largest residual of delta o beta = E(beta) o beta and epsilon o beta = id"""
    comonad = GroupActionComonad(a.group)

    residual = 0.0
    num_samples = 0
    for x in samples:
        x = _check_dim(x, a.dim)
        beta_x = a(x)

        coassoc = np.abs(comonad.delta(beta_x) - comonad.fmap(a, beta_x))
        counit = np.abs(comonad.epsilon(beta_x) - x)
        residual = max(residual, float(np.max(coassoc)), float(np.max(counit)))
        num_samples += 1

    if num_samples < 1:
        raise DimensionError("At least one sample is required")

    _LOGGER.debug("Comodule laws on %s samples: residual %s", num_samples, residual)

    return residual


def check_left_inverse(
    b: ActionCoalgebra,
    r: ReynoldsAlgebra,
    samples: typing.Iterable[typing.Union[np.ndarray, BlockVector]],
) -> float:
    """Largest residual of gamma o beta = id (vector samples) and
    beta o gamma = E(gamma) o delta (block samples)"""
    if not b.rep.same_space(r.rep):
        raise RepresentationMismatchError(
            "Coalgebra and algebra must be built on the same representation"
        )

    comonad = GroupActionComonad(b.group)

    residual = 0.0
    num_samples = 0
    for sample in samples:
        if isinstance(sample, BlockVector):
            if sample.group != b.group:
                raise GroupMismatchError("coalgebra and block sample")

            phi = sample.blocks
            left = b(r(phi))
            right = comonad.fmap(r, comonad.delta(phi))
            residual = max(residual, float(np.max(np.abs(left - right))))
        else:
            x = _check_dim(sample, b.dim)
            residual = max(residual, float(np.max(np.abs(r(b(x)) - x))))

        num_samples += 1

    if num_samples < 1:
        raise DimensionError("At least one sample is required")

    _LOGGER.debug("Left inverse laws on %s samples: residual %s", num_samples, residual)

    return residual


class SymmetrizedFunction:
    """Phi(f) = gamma o E(f) o alpha, i.e. x -> 1/m sum_g rho_W(g^-1) f(rho_V(g) x).

    Callable on a point (n,) or a batch (..., n). Terms are summed in group
    index order.
    """

    def __init__(
        self, f: VectorFunction, alpha: ActionCoalgebra, gamma: ReynoldsAlgebra
    ):
        if alpha.group != gamma.group:
            raise GroupMismatchError("alpha and gamma")

        self.f = f
        self.alpha = alpha
        self.gamma = gamma

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = _check_dim(x, self.alpha.dim)
        group = self.alpha.group
        order = group.order
        rho_v = self.alpha.rep.matrices
        rho_w = self.gamma.rep.matrices

        total: typing.Optional[np.ndarray] = None
        for g in group.elements:
            value = np.asarray(self.f(x @ rho_v[g].T), dtype=np.float64)
            if value.shape[-1] != self.gamma.dim:
                raise DimensionError(
                    f"Function output has dimension {value.shape[-1]} (expected "
                    f"{self.gamma.dim})"
                )

            term = (value @ rho_w[group.inv[g]].T) / order
            total = term if total is None else total + term

        assert total is not None
        return total

    def __repr__(self) -> str:
        return f"SymmetrizedFunction({self.f!r}, {self.alpha.group.describe()})"


def symmetrize(
    f: VectorFunction, alpha: ActionCoalgebra, gamma: ReynoldsAlgebra
) -> SymmetrizedFunction:
    """Group-average f into an equivariant map (V, alpha) -> (W, beta)"""
    return SymmetrizedFunction(f, alpha, gamma)
