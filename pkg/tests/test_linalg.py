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
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equicoalg.errors import DimensionError, SolverError
from equicoalg.linalg import as_points, matvec, ridge_solve, sup_distance


def test_matvec():
    np.testing.assert_array_equal(matvec(np.eye(2), [1, 2]), [1, 2])
    np.testing.assert_array_equal(matvec([[0, 1], [1, 0]], [1, 2]), [2, 1])
    np.testing.assert_array_equal(matvec([[1, 2], [3, 4]], [1, 1]), [3, 7])

    with pytest.raises(DimensionError):
        matvec(np.eye(2), [1, 2, 3])


def test_ridge_identity_system():
    b = np.array([[1.0], [2.0]])
    np.testing.assert_allclose(ridge_solve(np.eye(2), b, 0.0), b)
    np.testing.assert_allclose(ridge_solve(np.eye(2), b, 1.0), [[0.5], [1.0]])


def test_ridge_mean_of_targets():
    solution = ridge_solve([[1.0], [1.0]], [[1.0], [3.0]], 0.0)
    np.testing.assert_allclose(solution, [[2.0]])


def test_ridge_vector_right_hand_side():
    solution = ridge_solve(np.eye(3), [1.0, 2.0, 3.0], 0.0)
    assert solution.shape == (3,)
    np.testing.assert_allclose(solution, [1.0, 2.0, 3.0])


def test_ridge_zero_targets_give_zero():
    a = np.random.default_rng(0).standard_normal((10, 4))
    solution = ridge_solve(a, np.zeros((10, 2)), 1e-8)
    assert np.all(solution == 0.0)


def test_ridge_errors():
    with pytest.raises(DimensionError):
        ridge_solve(np.eye(2), np.ones((3, 1)), 0.0)

    with pytest.raises(ValueError):
        ridge_solve(np.eye(2), np.ones((2, 1)), -1.0)

    # Rank-deficient system without regularization
    with pytest.raises(SolverError) as excinfo:
        ridge_solve(np.zeros((3, 2)), np.ones((3, 1)), 0.0)

    assert excinfo.value.condition > 1e12


@settings(max_examples=25, deadline=None)
@given(
    rows=st.integers(min_value=6, max_value=12),
    cols=st.integers(min_value=1, max_value=3),
    seed=st.integers(min_value=0, max_value=2 ** 16),
)
def test_ridge_matches_least_squares(rows, cols, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((rows, cols))
    b = rng.standard_normal((rows, 2))

    expected = np.linalg.lstsq(a, b, rcond=None)[0]
    np.testing.assert_allclose(ridge_solve(a, b, 0.0), expected, rtol=1e-6, atol=1e-6)


@settings(max_examples=25, deadline=None)
@given(
    cols=st.integers(min_value=1, max_value=20),
    extra_rows=st.integers(min_value=0, max_value=30),
    seed=st.integers(min_value=0, max_value=2 ** 16),
)
def test_ridge_residual_is_orthogonal_to_columns(cols, extra_rows, seed):
    rng = np.random.default_rng(seed)
    rows = min(50, 2 * cols + extra_rows)
    a = rng.standard_normal((rows, cols))
    b = rng.standard_normal((rows, 3))

    x = ridge_solve(a, b, 0.0)
    normal_residual = a.T @ (a @ x - b)

    norm_a = np.linalg.norm(a)
    scale = norm_a * (norm_a * np.linalg.norm(x) + np.linalg.norm(b))
    assert np.linalg.norm(normal_residual) <= 1e-9 * scale


@settings(max_examples=25, deadline=None)
@given(
    cols=st.integers(min_value=1, max_value=10),
    lambda_1=st.floats(min_value=0.0, max_value=10.0),
    step=st.floats(min_value=1e-3, max_value=10.0),
    seed=st.integers(min_value=0, max_value=2 ** 16),
)
def test_ridge_solution_shrinks_with_lambda(cols, lambda_1, step, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((2 * cols + 5, cols))
    b = rng.standard_normal((2 * cols + 5, 2))

    norm_1 = np.linalg.norm(ridge_solve(a, b, lambda_1))
    norm_2 = np.linalg.norm(ridge_solve(a, b, lambda_1 + step))
    assert norm_2 <= norm_1 * (1.0 + 1e-12)


@settings(max_examples=50, deadline=None)
@given(
    rows=st.integers(min_value=1, max_value=20),
    cols=st.integers(min_value=1, max_value=20),
    coeff_a=st.floats(min_value=-10.0, max_value=10.0),
    coeff_b=st.floats(min_value=-10.0, max_value=10.0),
    seed=st.integers(min_value=0, max_value=2 ** 16),
)
def test_matvec_is_linear(rows, cols, coeff_a, coeff_b, seed):
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((rows, cols))
    x = rng.standard_normal(cols)
    y = rng.standard_normal(cols)

    left = matvec(m, coeff_a * x + coeff_b * y)
    right = coeff_a * matvec(m, x) + coeff_b * matvec(m, y)

    input_scale = abs(coeff_a) * np.linalg.norm(x) + abs(coeff_b) * np.linalg.norm(y)
    scale = np.linalg.norm(m) * input_scale
    assert np.linalg.norm(left - right) <= 1e-12 * scale + 1e-300


def test_sup_distance():
    points = [[3.0, 4.0], [0.0, 1.0]]
    assert sup_distance(lambda x: x, lambda x: x, points) == 0.0
    assert sup_distance(lambda x: x, np.zeros_like, [[3.0, 4.0]]) == 5.0
    assert sup_distance(lambda x: x, lambda x: x + np.array([1.0, 0.0]), points) == 1.0

    with pytest.raises(DimensionError):
        sup_distance(lambda x: x, lambda x: x, np.zeros((0, 2)))


def test_as_points():
    assert as_points([1.0, 2.0]).shape == (1, 2)
    assert as_points([1.0, 2.0], dim=1).shape == (2, 1)

    with pytest.raises(DimensionError):
        as_points([[1.0, 2.0]], dim=3)
