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
"""Shallow networks, random-feature fitting and vector neural networks.

A shallow net computes f(x) = Q sigma(P x + b). Symmetrizing it gives the
equivariant map Phi(f), which factors as a vector net

    l(x) = Q' E(sigma)(P' x + b')

whose hidden units are indexed by (neuron j, group element g) at flat index
j * m + g.
"""
import logging
import typing
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import scipy.spatial

from .errors import PASSED, DimensionError, GroupMismatchError, Verdict
from .groups import GroupTable
from .linalg import (
    DenseMatrix,
    DenseVector,
    VectorFunction,
    as_points,
    ridge_solve,
    sup_distance,
)
from .representations import LinearRep
from .symmetrize import ActionCoalgebra, ReynoldsAlgebra
from .utils import format_float, make_rng, sub_seed

_LOGGER = logging.getLogger(__name__)

# Child stream keys under the experiment seed
_TRAIN_STREAM = 1
_TEST_STREAM = 2
_FEATURE_STREAM = 3


class Activation(str, Enum):
    """Continuous, non-polynomial activations"""

    TANH = "tanh"
    RELU = "relu"
    SIGMOID = "sigmoid"

    def __call__(self, z: np.ndarray) -> np.ndarray:
        if self == Activation.TANH:
            return np.tanh(z)

        if self == Activation.RELU:
            return np.maximum(z, 0.0)

        # Split by sign so exp never overflows
        z = np.asarray(z, dtype=np.float64)
        result = np.empty_like(z)
        positive = z >= 0
        result[positive] = 1.0 / (1.0 + np.exp(-z[positive]))
        exp_z = np.exp(z[~positive])
        result[~positive] = exp_z / (1.0 + exp_z)

        return result


def _check_input(x: np.ndarray, dim: int) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim < 1 or x.shape[-1] != dim:
        raise DimensionError(
            f"Expected inputs of dimension {dim} (got shape {x.shape})"
        )

    return x


def _frozen(values: np.ndarray) -> np.ndarray:
    values = np.array(values, dtype=np.float64)
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class ShallowNet:
    """f(x) = Q sigma(P x + bias) with d hidden neurons"""

    P: DenseMatrix
    """d x n inner weights"""

    bias: DenseVector
    """d inner biases"""

    Q: DenseMatrix
    """w x d outer weights"""

    activation: Activation = Activation.TANH

    def __post_init__(self):
        object.__setattr__(self, "P", _frozen(self.P))
        object.__setattr__(self, "bias", _frozen(self.bias))
        object.__setattr__(self, "Q", _frozen(self.Q))
        object.__setattr__(self, "activation", Activation(self.activation))

        if (self.P.ndim != 2) or (self.Q.ndim != 2) or (self.bias.ndim != 1):
            raise DimensionError("P and Q must be matrices and bias a vector")

        width = self.P.shape[0]
        if (width < 1) or (self.bias.shape[0] != width) or (self.Q.shape[1] != width):
            raise DimensionError(
                f"Inconsistent widths: P {self.P.shape}, bias {self.bias.shape}, Q "
                f"{self.Q.shape}"
            )

    @property
    def width(self) -> int:
        return int(self.P.shape[0])

    @property
    def input_dim(self) -> int:
        return int(self.P.shape[1])

    @property
    def output_dim(self) -> int:
        return int(self.Q.shape[0])

    def features(self, x: np.ndarray) -> np.ndarray:
        """sigma(P x + bias) for a point or batch"""
        x = _check_input(x, self.input_dim)
        return self.activation(x @ self.P.T + self.bias)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.features(x) @ self.Q.T


@dataclass(frozen=True, eq=False)
class VectorNet:
    """l(x) = Q' E(sigma)(P' x + b'), hidden unit (j, g) at flat index j * m + g"""

    group: GroupTable
    Pprime: DenseMatrix
    bias_prime: DenseVector
    Qprime: DenseMatrix
    activation: Activation = Activation.TANH

    def __post_init__(self):
        object.__setattr__(self, "Pprime", _frozen(self.Pprime))
        object.__setattr__(self, "bias_prime", _frozen(self.bias_prime))
        object.__setattr__(self, "Qprime", _frozen(self.Qprime))
        object.__setattr__(self, "activation", Activation(self.activation))

        if (
            (self.Pprime.ndim != 2)
            or (self.Qprime.ndim != 2)
            or (self.bias_prime.ndim != 1)
        ):
            raise DimensionError("P' and Q' must be matrices and b' a vector")

        hidden = self.Pprime.shape[0]
        if (
            (hidden < 1)
            or (hidden % self.group.order != 0)
            or (self.bias_prime.shape[0] != hidden)
            or (self.Qprime.shape[1] != hidden)
        ):
            raise DimensionError(
                f"Hidden size must be a multiple of {self.group.order} shared by "
                f"P' {self.Pprime.shape}, b' {self.bias_prime.shape} and Q' "
                f"{self.Qprime.shape}"
            )

    @property
    def width(self) -> int:
        """Number of vector neurons"""
        return int(self.Pprime.shape[0]) // self.group.order

    @property
    def input_dim(self) -> int:
        return int(self.Pprime.shape[1])

    @property
    def output_dim(self) -> int:
        return int(self.Qprime.shape[0])

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = _check_input(x, self.input_dim)

        # E(sigma) on V^G is sigma on every coordinate of every block
        hidden = self.activation(x @ self.Pprime.T + self.bias_prime)
        return hidden @ self.Qprime.T


@dataclass(frozen=True, eq=False)
class CompactSample:
    """Finite point cloud standing in for a compact set"""

    points: np.ndarray

    def __post_init__(self):
        points = np.array(as_points(self.points), dtype=np.float64)
        if not np.all(np.isfinite(points)):
            raise DimensionError("Sample points must be finite")

        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])

    def __len__(self) -> int:
        return int(self.points.shape[0])

    def __iter__(self) -> typing.Iterator[np.ndarray]:
        return iter(self.points)


# -----------------------------------------------------------------------------


def sample_box(
    bounds: typing.Sequence[typing.Sequence[float]], count: int, seed: int
) -> CompactSample:
    """count points drawn uniformly from the box prod_i [lower_i, upper_i]"""
    bounds_arr = np.asarray(bounds, dtype=np.float64)
    if bounds_arr.ndim != 2 or bounds_arr.shape[0] < 1 or bounds_arr.shape[1] != 2:
        raise DimensionError(
            f"Bounds must be a list of (lower, upper) pairs (got {bounds_arr.shape})"
        )

    lower, upper = bounds_arr[:, 0], bounds_arr[:, 1]
    if not (np.all(np.isfinite(bounds_arr)) and np.all(lower <= upper)):
        raise ValueError(f"Invalid bounds: {bounds_arr.tolist()}")

    if count < 1:
        raise ValueError(f"Sample count must be positive (got {count})")

    rng = make_rng(seed)
    unit = rng.random((count, bounds_arr.shape[0]))

    return CompactSample(lower + unit * (upper - lower))


def symmetrize_sample(k: CompactSample, rep: LinearRep) -> CompactSample:
    """All rho(g) x in (group index, point index) order, duplicates kept"""
    if k.dim != rep.dim:
        raise DimensionError(
            f"Sample dimension {k.dim} does not match representation {rep.dim}"
        )

    moved = np.einsum("gij,sj->gsi", rep.matrices, k.points)
    return CompactSample(moved.reshape(-1, k.dim))


def is_closed_sample(
    k: CompactSample, rep: LinearRep, tolerance: float = 1e-12
) -> Verdict:
    """Every rho(g) x lies within tolerance of a point of k; witness (g, point index)"""
    if k.dim != rep.dim:
        raise DimensionError(
            f"Sample dimension {k.dim} does not match representation {rep.dim}"
        )

    tree = scipy.spatial.cKDTree(k.points)
    for g in rep.group.elements:
        distances, _ = tree.query(k.points @ rep.matrices[g].T)
        far = np.flatnonzero(distances > tolerance)
        if far.size > 0:
            return Verdict((g, int(far[0])), "translated point missing from sample")

    return PASSED


def fit_random_features(
    target: VectorFunction,
    train: CompactSample,
    width: int,
    activation: typing.Union[str, Activation] = Activation.TANH,
    ridge_lambda: float = 1e-8,
    seed: int = 0,
) -> ShallowNet:
    """Draw P and bias, then ridge-solve Q against the target on the sample.

    P ~ N(0, 1) / sqrt(n) and bias ~ U[-1, 1], drawn in that order.
    """
    if width < 1:
        raise ValueError(f"Width must be positive (got {width})")

    activation = Activation(activation)
    n = train.dim
    rng = make_rng(seed)

    P = rng.standard_normal((width, n)) / np.sqrt(n)
    bias = rng.uniform(-1.0, 1.0, size=width)

    values = np.asarray(target(train.points), dtype=np.float64)
    if values.ndim == 1:
        values = values[:, None]

    if values.shape[0] != len(train):
        raise DimensionError(
            f"Target returned {values.shape[0]} values for {len(train)} points"
        )

    features = activation(train.points @ P.T + bias)
    Q = ridge_solve(features, values, ridge_lambda).T

    _LOGGER.debug(
        "Fitted %s random %s features on %s points",
        width,
        activation.value,
        len(train),
    )

    return ShallowNet(P=P, bias=bias, Q=Q, activation=activation)


def to_vector_net(
    net: ShallowNet, alpha: ActionCoalgebra, gamma: ReynoldsAlgebra
) -> VectorNet:
    """Factor Phi(net) into a vector net.

    Row (j, g) of P' is row j of P rho_V(g), b' repeats bias(j) across g, and
    column (j, g) of Q' is rho_W(g^-1) (column j of Q) / m.
    """
    if alpha.group != gamma.group:
        raise GroupMismatchError("alpha and gamma")

    if alpha.dim != net.input_dim:
        raise DimensionError(
            f"Net input dimension {net.input_dim} does not match {alpha.dim}"
        )

    if gamma.dim != net.output_dim:
        raise DimensionError(
            f"Net output dimension {net.output_dim} does not match {gamma.dim}"
        )

    group = alpha.group
    order = group.order
    width = net.width

    Pprime = np.einsum("jk,gkl->jgl", net.P, alpha.rep.matrices).reshape(
        width * order, net.input_dim
    )
    bias_prime = np.repeat(net.bias, order)

    rho_w_inv = gamma.rep.matrices[group.inv]
    Qprime = (np.einsum("gab,bj->ajg", rho_w_inv, net.Q) / order).reshape(
        net.output_dim, width * order
    )

    return VectorNet(
        group=group,
        Pprime=Pprime,
        bias_prime=bias_prime,
        Qprime=Qprime,
        activation=net.activation,
    )


def eval_vector_net(v: VectorNet, x: np.ndarray) -> np.ndarray:
    return v(_check_input(x, v.input_dim))


def equivariance_residual(
    f: VectorFunction, rep_in: LinearRep, rep_out: LinearRep, points: CompactSample
) -> float:
    """max over x and g of |f(rho_in(g) x) - rho_out(g) f(x)|_2"""
    if rep_in.group != rep_out.group:
        raise GroupMismatchError("input and output representations")

    if points.dim != rep_in.dim:
        raise DimensionError(
            f"Sample dimension {points.dim} does not match {rep_in.dim}"
        )

    values = np.asarray(f(points.points), dtype=np.float64)
    if values.shape != (len(points), rep_out.dim):
        raise DimensionError(
            f"Function outputs have shape {values.shape} (expected ({len(points)}, "
            f"{rep_out.dim}))"
        )

    residual = 0.0
    for g in rep_in.group.elements:
        moved = np.asarray(f(points.points @ rep_in.matrices[g].T), dtype=np.float64)
        diff = moved - values @ rep_out.matrices[g].T
        residual = max(residual, float(np.max(np.linalg.norm(diff, axis=1))))

    return residual


def sup_error(
    target: VectorFunction, f: VectorFunction, sample: CompactSample
) -> float:
    """max over the sample of |target(x) - f(x)|_2"""
    return sup_distance(target, f, sample.points)


def transfer_ratio(l_err_hat: float, train_err: float) -> float:
    """Empirical stand-in for the norm of the restriction operator"""
    return float(l_err_hat) / max(float(train_err), np.finfo(np.float64).tiny)


# -----------------------------------------------------------------------------


@dataclass
class UatReportRow:
    """One width of a universal approximation experiment"""

    width: int
    train_err_K: float
    f_err_Khat: float
    l_err_Khat: float
    equiv_residual: float
    transfer_ratio: float
    seed: int

    output_scale: float = field(default=0.0, compare=False)
    """max |l(x)|_2 over the symmetrized test sample (not reported)"""

    def is_equivariant(self, tolerance: float) -> bool:
        return self.equiv_residual <= tolerance * (1.0 + self.output_scale)

    def csv_fields(self) -> typing.List[str]:
        return [
            str(self.width),
            format_float(self.train_err_K),
            format_float(self.f_err_Khat),
            format_float(self.l_err_Khat),
            format_float(self.equiv_residual),
            format_float(self.transfer_ratio),
            str(self.seed),
        ]


def experiment_samples(
    bounds: typing.Sequence[typing.Sequence[float]],
    train_count: int,
    test_count: int,
    seed: int,
) -> typing.Tuple[CompactSample, CompactSample]:
    """Training sample K and held-out sample, from independent child streams"""
    train = sample_box(bounds, train_count, sub_seed(seed, _TRAIN_STREAM))
    test = sample_box(bounds, test_count, sub_seed(seed, _TEST_STREAM))

    return train, test


def run_uat_row(
    target: VectorFunction,
    alpha: ActionCoalgebra,
    gamma: ReynoldsAlgebra,
    train: CompactSample,
    test: CompactSample,
    width: int,
    activation: typing.Union[str, Activation] = Activation.TANH,
    ridge_lambda: float = 1e-8,
    seed: int = 0,
) -> UatReportRow:
    """Fit f on K, factor l = Phi(f) and measure both on the symmetrized test sample"""
    net = fit_random_features(
        target,
        train,
        width,
        activation=activation,
        ridge_lambda=ridge_lambda,
        seed=sub_seed(seed, _FEATURE_STREAM, width),
    )
    vector_net = to_vector_net(net, alpha, gamma)
    test_hat = symmetrize_sample(test, alpha.rep)

    train_err = sup_error(target, net, train)
    l_err = sup_error(target, vector_net, test_hat)
    output_scale = float(np.max(np.linalg.norm(vector_net(test_hat.points), axis=1)))

    row = UatReportRow(
        width=width,
        train_err_K=train_err,
        f_err_Khat=sup_error(target, net, test_hat),
        l_err_Khat=l_err,
        equiv_residual=equivariance_residual(
            vector_net, alpha.rep, gamma.rep, test_hat
        ),
        transfer_ratio=transfer_ratio(l_err, train_err),
        seed=seed,
        output_scale=output_scale,
    )

    _LOGGER.debug("Width %s: %s", width, row)

    return row
