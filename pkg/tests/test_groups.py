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

from equicoalg.errors import DimensionError, GroupAxiomError, GroupSizeError
from equicoalg.groups import (
    GroupKind,
    build_group,
    from_table,
    load_group_table,
    save_group_table,
    symmetric_permutations_table,
)

from .conftest import BUILTIN_GROUPS, group_id


def test_cyclic_arithmetic():
    group = build_group("cyclic", 4)
    assert group.order == 4
    assert group.multiply(1, 3) == 0
    assert group.multiply(2, 2) == 0
    assert group.is_abelian()


def test_symmetric_is_not_abelian():
    group = build_group(GroupKind.SYMMETRIC, 3)
    assert group.order == 6
    assert any(
        group.multiply(g, h) != group.multiply(h, g)
        for g in group.elements
        for h in group.elements
    )


def test_trivial_group():
    group = build_group("cyclic", 1)
    assert group.order == 1
    assert group.multiply(0, 0) == 0
    assert group.inverse(0) == 0


def test_dihedral_layout():
    group = build_group("dihedral", 4)
    assert group.order == 8

    # Reflections are involutions, rotation r has order 4
    for g in range(4, 8):
        assert group.multiply(g, g) == 0

    assert group.multiply(1, group.multiply(1, group.multiply(1, 1))) == 0

    # f r f = r^-1
    assert group.multiply(4, group.multiply(1, 4)) == 3


def test_symmetric_composition_applies_right_first():
    perms, table = symmetric_permutations_table(3)
    for i in range(6):
        for j in range(6):
            composed = perms[i][perms[j]]
            assert np.array_equal(perms[table[i, j]], composed)


@pytest.mark.parametrize("group_args", BUILTIN_GROUPS, ids=group_id)
def test_builtin_groups_revalidate(group_args):
    kind, n = group_args
    group = build_group(kind, n)
    assert group.kind == kind
    assert group.degree == n

    # Round trip through the validator keeps the table
    assert from_table(group.mul.tolist()) == group

    for g in group.elements:
        assert group.multiply(g, group.inverse(g)) == group.identity


def test_group_size_limits():
    with pytest.raises(GroupSizeError):
        build_group("cyclic", 0)

    with pytest.raises(GroupSizeError):
        build_group("symmetric", 6)

    with pytest.raises(ValueError):
        build_group("quaternion", 2)


def test_from_table_valid():
    assert from_table([[0]]).order == 1

    group = from_table([[0, 1], [1, 0]])
    assert group.inv.tolist() == [0, 1]
    assert group.kind == GroupKind.TABLE


def test_from_table_missing_inverse():
    with pytest.raises(GroupAxiomError) as excinfo:
        from_table([[0, 1], [1, 1]])

    assert excinfo.value.axiom == "inverse"
    assert excinfo.value.witness == (1,)


def test_from_table_closure():
    with pytest.raises(GroupAxiomError) as excinfo:
        from_table([[0, 1], [1, 2]])

    assert excinfo.value.axiom == "closure"
    assert excinfo.value.witness == (1, 1)


def test_from_table_identity():
    with pytest.raises(GroupAxiomError) as excinfo:
        from_table([[1, 0], [0, 1]])

    assert excinfo.value.axiom == "identity"


def test_from_table_associativity():
    # Latin square with identity 0 and inverses, but not associative
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupAxiomError) as excinfo:
        from_table(table)

    assert excinfo.value.axiom == "associativity"
    g, h, k = excinfo.value.witness
    mul = np.array(table)
    assert mul[mul[g, h], k] != mul[g, mul[h, k]]


def test_from_table_shape():
    with pytest.raises(DimensionError):
        from_table([[0, 1]])


def test_tables_are_read_only():
    group = build_group("cyclic", 3)
    with pytest.raises(ValueError):
        group.mul[0, 0] = 1


def test_table_file_round_trip(tmp_path):
    group = build_group("dihedral", 3)
    path = tmp_path / "d3.txt"
    save_group_table(group, path)

    assert load_group_table(path) == group


def test_table_file_errors(tmp_path):
    path = tmp_path / "bad.txt"

    path.write_text("2\n0 1\n", encoding="utf-8")
    with pytest.raises(DimensionError):
        load_group_table(path)

    path.write_text("2\n0 1\n1 x\n", encoding="utf-8")
    with pytest.raises(DimensionError):
        load_group_table(path)

    path.write_text("2\n0 1\n1 1\n", encoding="utf-8")
    with pytest.raises(GroupAxiomError):
        load_group_table(path)
