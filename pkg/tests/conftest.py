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
"""Shared fixtures and builders for the test suite"""
import itertools
import typing

import numpy as np
import pytest

from equicoalg.groups import GroupKind, GroupTable, build_group
from equicoalg.set_coalgebra import (
    FiniteSetCoalgebra,
    natural_action,
    regular_action,
    relabel,
    trivial_coalgebra,
)

# Every builtin group of order <= 8
BUILTIN_GROUPS: typing.List[typing.Tuple[GroupKind, int]] = (
    [(GroupKind.CYCLIC, n) for n in range(1, 9)]
    + [(GroupKind.DIHEDRAL, n) for n in range(1, 5)]
    + [(GroupKind.SYMMETRIC, n) for n in range(1, 4)]
)


def group_id(group_args: typing.Tuple[GroupKind, int]) -> str:
    kind, n = group_args
    return f"{kind.value}{n}"


@pytest.fixture
def z2() -> GroupTable:
    return build_group("cyclic", 2)


@pytest.fixture
def z4() -> GroupTable:
    return build_group("cyclic", 4)


@pytest.fixture
def s3() -> GroupTable:
    return build_group("symmetric", 3)


@pytest.fixture
def trivial_group() -> GroupTable:
    return build_group("cyclic", 1)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


# -----------------------------------------------------------------------------


def disjoint_union(parts: typing.Sequence[FiniteSetCoalgebra]) -> FiniteSetCoalgebra:
    tables = []
    offset = 0
    for part in parts:
        tables.append(part.table + offset)
        offset += part.carrier_size

    return FiniteSetCoalgebra(group=parts[0].group, table=np.vstack(tables))


def building_blocks(
    group: GroupTable, max_carrier: int
) -> typing.List[FiniteSetCoalgebra]:
    """Transitive actions of the group on at most max_carrier points"""
    blocks = [trivial_coalgebra(group, 1)]

    natural = natural_action(group)
    if 1 < natural.carrier_size <= max_carrier:
        blocks.append(natural)

    if 1 < group.order <= max_carrier and group.kind != GroupKind.CYCLIC:
        blocks.append(regular_action(group))

    if group.kind == GroupKind.CYCLIC:
        # Quotients Z_n -> Z_d acting by shifts
        for d in range(2, min(group.order, max_carrier) + 1):
            if group.order % d == 0:
                points = np.arange(d)
                table = (points[:, None] + np.arange(group.order)[None, :]) % d
                blocks.append(FiniteSetCoalgebra(group=group, table=table))

    return blocks


def action_family(
    max_carrier: int, max_order: int = 6
) -> typing.List[FiniteSetCoalgebra]:
    """Group actions built as disjoint unions of transitive pieces, each also
    with its carrier shuffled"""
    rng = np.random.default_rng(2024)
    family = []
    for kind, n in BUILTIN_GROUPS:
        group = build_group(kind, n)
        if group.order > max_order:
            continue

        blocks = building_blocks(group, max_carrier)
        for num_parts in range(1, 4):
            for parts in itertools.combinations_with_replacement(blocks, num_parts):
                if sum(p.carrier_size for p in parts) > max_carrier:
                    continue

                union = disjoint_union(parts)
                family.append(union)
                family.append(relabel(union, rng.permutation(union.carrier_size)))

    return family
