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

from equicoalg.approx import CompactSample, equivariance_residual
from equicoalg.errors import ConfigError, DimensionError
from equicoalg.groups import build_group
from equicoalg.representations import permutation_rep, regular_rep
from equicoalg.set_coalgebra import natural_action
from equicoalg.symmetrize import ActionCoalgebra, ReynoldsAlgebra
from equicoalg.targets import (
    is_known_target,
    perm_meanshift,
    resolve_target,
    sine_mix,
    swap_poly,
)


def test_swap_poly():
    np.testing.assert_array_equal(swap_poly(np.array([2.0, 3.0])), [8.0, 9.0])
    np.testing.assert_array_equal(swap_poly(np.array([[1.0, -1.0]])), [[0.0, -2.0]])

    with pytest.raises(DimensionError):
        swap_poly(np.zeros(3))


def test_perm_meanshift():
    np.testing.assert_allclose(
        perm_meanshift(np.array([1.0, 2.0, 3.0])), [3.0, 6.0, 11.0]
    )


def test_builtin_targets_are_equivariant():
    points = CompactSample(np.random.default_rng(0).uniform(-1, 1, (20, 3)))
    s3 = build_group("symmetric", 3)
    rep = permutation_rep(s3, natural_action(s3))
    assert equivariance_residual(perm_meanshift, rep, rep, points) < 1e-12

    z2 = build_group("cyclic", 2)
    swap = permutation_rep(z2, [[0, 1], [1, 0]])
    pairs = CompactSample(points.points[:, :2])
    assert equivariance_residual(swap_poly, swap, swap, pairs) < 1e-12
    assert equivariance_residual(sine_mix, swap, swap, pairs) > 0.01


def test_resolve_target():
    assert resolve_target("swap_poly") is swap_poly
    assert is_known_target("symmetrized:sine_mix")
    assert not is_known_target("symmetrized:cosine")

    with pytest.raises(ConfigError):
        resolve_target("cosine")

    with pytest.raises(ConfigError):
        resolve_target("symmetrized:sine_mix")


def test_symmetrized_target_is_equivariant():
    group = build_group("cyclic", 3)
    rep = regular_rep(group)
    target = resolve_target(
        "symmetrized:sine_mix", ActionCoalgebra(rep), ReynoldsAlgebra(rep)
    )
    points = CompactSample(np.random.default_rng(1).uniform(-1, 1, (20, 3)))
    assert equivariance_residual(target, rep, rep, points) < 1e-12
