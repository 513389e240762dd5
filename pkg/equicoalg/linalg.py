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
"""Dense real linear algebra used to fit shallow networks.

DenseMatrix and DenseVector are float64 numpy arrays of rank 2 and 1.
"""
import logging
import typing

import numpy as np
import scipy.linalg

from .errors import DimensionError, SolverError

_LOGGER = logging.getLogger(__name__)

DenseMatrix = np.ndarray
DenseVector = np.ndarray

# Maps points of shape (..., n) to values of shape (..., w)
VectorFunction = typing.Callable[[np.ndarray], np.ndarray]

ArrayLike = typing.Union[
    np.ndarray, typing.Sequence[float], typing.Sequence[typing.Sequence[float]]
]


def as_matrix(values: ArrayLike, name: str = "matrix") -> DenseMatrix:
    """Convert to a finite rank-2 float64 array"""
    matrix = np.asarray(values, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] < 1 or matrix.shape[1] < 1:
        raise DimensionError(
            f"{name} must be a nonempty 2-D array (got {matrix.shape})"
        )

    if not np.all(np.isfinite(matrix)):
        raise DimensionError(f"{name} has non-finite entries")

    return matrix


def as_vector(values: ArrayLike, name: str = "vector") -> DenseVector:
    """Convert to a finite rank-1 float64 array"""
    vector = np.asarray(values, dtype=np.float64)
    if vector.ndim != 1 or vector.shape[0] < 1:
        raise DimensionError(
            f"{name} must be a nonempty 1-D array (got {vector.shape})"
        )

    if not np.all(np.isfinite(vector)):
        raise DimensionError(f"{name} has non-finite entries")

    return vector


def as_points(values: ArrayLike, dim: typing.Optional[int] = None) -> np.ndarray:
    """Convert a sequence of points to an s x n array"""
    points = np.asarray(values, dtype=np.float64)
    if points.ndim == 1 and points.size > 0 and (dim is None or dim == 1):
        points = points[:, None] if dim == 1 else points[None, :]

    if points.ndim != 2 or points.shape[0] < 1:
        raise DimensionError(
            f"Expected a nonempty sequence of points (got {points.shape})"
        )

    if (dim is not None) and (points.shape[1] != dim):
        raise DimensionError(
            f"Points must have dimension {dim} (got {points.shape[1]})"
        )

    return points


def matvec(matrix: ArrayLike, x: ArrayLike) -> DenseVector:
    """Matrix-vector product M x"""
    matrix = as_matrix(matrix)
    x = as_vector(x)
    if matrix.shape[1] != x.shape[0]:
        raise DimensionError(
            f"Cannot multiply {matrix.shape[0]}x{matrix.shape[1]} matrix by vector of "
            f"dimension {x.shape[0]}"
        )

    return matrix @ x


def ridge_solve(a: ArrayLike, b: ArrayLike, ridge_lambda: float) -> DenseMatrix:
    """argmin_X |AX - B|_F^2 + lambda |X|_F^2 via the normal equations.

    Solves (A^T A + lambda I) X = A^T B with a Cholesky factorization. A 1-D
    right-hand side gives a 1-D solution.
    """
    a = as_matrix(a, "A")
    b_arr = np.asarray(b, dtype=np.float64)
    squeeze = b_arr.ndim == 1
    b = as_matrix(b_arr[:, None] if squeeze else b_arr, "B")

    if a.shape[0] != b.shape[0]:
        raise DimensionError(
            f"A has {a.shape[0]} rows but B has {b.shape[0]} rows"
        )

    if (ridge_lambda < 0) or (not np.isfinite(ridge_lambda)):
        raise ValueError(
            f"Ridge lambda must be a nonnegative number (got {ridge_lambda})"
        )

    gram = a.T @ a
    gram[np.diag_indices_from(gram)] += ridge_lambda
    rhs = a.T @ b

    try:
        factor = scipy.linalg.cho_factor(gram, lower=False, check_finite=True)
    except np.linalg.LinAlgError as e:
        condition = float(np.linalg.cond(gram))
        raise SolverError(
            f"Normal equations are not positive definite at lambda={ridge_lambda}",
            condition,
        ) from e

    solution = scipy.linalg.cho_solve(factor, rhs, check_finite=False)

    if _LOGGER.isEnabledFor(logging.DEBUG):
        _LOGGER.debug(
            "Ridge solve: %sx%s features, %s targets, lambda=%s",
            a.shape[0],
            a.shape[1],
            b.shape[1],
            ridge_lambda,
        )

    return solution[:, 0] if squeeze else solution


def sup_distance(
    f: VectorFunction, g: VectorFunction, points: ArrayLike
) -> float:
    """max over points x of |f(x) - g(x)|_2"""
    points_arr = np.asarray(points, dtype=np.float64)
    if points_arr.size == 0:
        raise DimensionError("Cannot take a supremum over an empty sample")

    points_arr = as_points(points_arr)
    f_values = np.asarray(f(points_arr), dtype=np.float64)
    g_values = np.asarray(g(points_arr), dtype=np.float64)

    if f_values.shape != g_values.shape:
        raise DimensionError(
            f"Function outputs disagree in shape: {f_values.shape} vs {g_values.shape}"
        )

    diff = (f_values - g_values).reshape(points_arr.shape[0], -1)
    return float(np.max(np.linalg.norm(diff, axis=1)))
