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
"""Finite groups as validated multiplication tables.

Elements are the indices 0..m-1 with 0 the identity. Products are read from a
dense m x m table, inverses from a length-m table.
"""
import itertools
import logging
import typing
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from .const import MAX_SYMMETRIC_DEGREE
from .errors import DimensionError, GroupAxiomError, GroupSizeError

_LOGGER = logging.getLogger(__name__)

IDENTITY = 0


class GroupKind(str, Enum):
    """Family a group table was built from"""

    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    SYMMETRIC = "symmetric"
    TABLE = "table"
    """Loaded from an explicit multiplication table"""


@dataclass(frozen=True, eq=False)
class GroupTable:
    """Finite group given by its multiplication table"""

    mul: np.ndarray
    """m x m table, mul[g, h] is the index of the product gh"""

    inv: np.ndarray
    """Length m table, inv[g] is the index of g^-1"""

    kind: GroupKind = GroupKind.TABLE
    """Family the group was built from"""

    degree: int = 0
    """Parameter n of the family (0 for explicit tables)"""

    @property
    def order(self) -> int:
        return int(self.mul.shape[0])

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def identity(self) -> int:
        return IDENTITY

    def multiply(self, g: int, h: int) -> int:
        return int(self.mul[g, h])

    def inverse(self, g: int) -> int:
        return int(self.inv[g])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def describe(self) -> str:
        if self.kind == GroupKind.TABLE:
            return f"table group of order {self.order}"

        return f"{self.kind.value}({self.degree}) of order {self.order}"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True

        if not isinstance(other, GroupTable):
            return NotImplemented

        return np.array_equal(self.mul, other.mul)

    def __hash__(self) -> int:
        return hash((self.order, self.mul.tobytes()))

    def __repr__(self) -> str:
        return f"GroupTable({self.describe()})"


# -----------------------------------------------------------------------------


def build_group(kind: typing.Union[str, GroupKind], n: int) -> GroupTable:
    """Build a cyclic, dihedral or symmetric group.

    Element orderings are deterministic:
      * cyclic(n): powers r^0..r^(n-1) of the generator
      * dihedral(n): rotations r^0..r^(n-1), then reflections r^k f
      * symmetric(n): permutations of 0..n-1 in lexicographic order
    """
    kind = GroupKind(kind)

    if n < 1:
        raise GroupSizeError(f"Group parameter must be at least 1 (got {n})")

    if kind == GroupKind.CYCLIC:
        idx = np.arange(n)
        table = (idx[:, None] + idx[None, :]) % n
    elif kind == GroupKind.DIHEDRAL:
        table = _dihedral_table(n)
    elif kind == GroupKind.SYMMETRIC:
        if n > MAX_SYMMETRIC_DEGREE:
            raise GroupSizeError(
                f"Symmetric group degree {n} exceeds limit of {MAX_SYMMETRIC_DEGREE}"
            )

        table = symmetric_permutations_table(n)[1]
    else:
        raise GroupSizeError(f"Cannot build a group of kind {kind.value}")

    group = _make_group(table, kind=kind, degree=n)
    _LOGGER.debug("Built %s", group.describe())

    return group


def _dihedral_table(n: int) -> np.ndarray:
    # Element (k, s) = r^k f^s is stored at index k + s*n.
    # (r^k1 f^s1)(r^k2 f^s2) = r^(k1 + (-1)^s1 k2) f^(s1 + s2)
    order = 2 * n
    table = np.zeros((order, order), dtype=np.int64)
    for left in range(order):
        k1, s1 = left % n, left // n
        for right in range(order):
            k2, s2 = right % n, right // n
            k = (k1 + (k2 if s1 == 0 else -k2)) % n
            table[left, right] = k + ((s1 + s2) % 2) * n

    return table


def symmetric_permutations_table(n: int) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Lexicographic permutations of 0..n-1 and their composition table.

    Returns (perms, table) where perms[i] is the i-th permutation as an array
    and table[i, j] is the index of perms[i] o perms[j] (apply j first).
    """
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    order = perms.shape[0]

    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    index_of = {int(key): i for i, key in enumerate(perms @ weights)}

    # composed[i, j, a] = perms[i][perms[j][a]]
    composed = perms[np.arange(order)[:, None, None], perms[None, :, :]]
    keys = composed @ weights
    table = np.vectorize(index_of.__getitem__, otypes=[np.int64])(keys)

    return perms, table.reshape(order, order)


def from_table(raw: typing.Sequence[typing.Sequence[int]]) -> GroupTable:
    """Validate a multiplication table and compute inverses.

    Raises GroupAxiomError naming the first violated axiom with a witness.
    """
    return _make_group(raw, kind=GroupKind.TABLE, degree=0)


def _make_group(
    raw: typing.Union[np.ndarray, typing.Sequence[typing.Sequence[int]]],
    kind: GroupKind,
    degree: int,
) -> GroupTable:
    table = np.array(raw, dtype=np.int64)
    if (table.ndim != 2) or (table.shape[0] != table.shape[1]):
        raise DimensionError(f"Multiplication table must be square (got {table.shape})")

    order = table.shape[0]
    if order < 1:
        raise GroupSizeError("Multiplication table is empty")

    # Closure
    out_of_range = np.argwhere((table < 0) | (table >= order))
    if out_of_range.size > 0:
        g, h = (int(i) for i in out_of_range[0])
        raise GroupAxiomError(
            "closure", (g, h), f"product {table[g, h]} is not an element index"
        )

    # Identity pinned at index 0
    for g in range(order):
        if (table[IDENTITY, g] != g) or (table[g, IDENTITY] != g):
            raise GroupAxiomError(
                "identity", (IDENTITY, g), f"element {IDENTITY} does not fix {g}"
            )

    # Inverses
    inv = np.zeros(order, dtype=np.int64)
    for g in range(order):
        candidates = np.flatnonzero(
            (table[g, :] == IDENTITY) & (table[:, g] == IDENTITY)
        )
        if candidates.size == 0:
            raise GroupAxiomError("inverse", (g,), f"no inverse for element {g}")

        inv[g] = candidates[0]

    # Associativity: (gh)k = g(hk)
    left = table[table]
    right = table[np.arange(order)[:, None, None], table[None, :, :]]
    violations = np.argwhere(left != right)
    if violations.size > 0:
        g, h, k = (int(i) for i in violations[0])
        raise GroupAxiomError("associativity", (g, h, k))

    table.setflags(write=False)
    inv.setflags(write=False)

    return GroupTable(mul=table, inv=inv, kind=kind, degree=degree)


def load_group_table(path: typing.Union[str, Path]) -> GroupTable:
    """Load a group from a text file: first line m, then m rows of m indices"""
    path = Path(path)
    _LOGGER.debug("Loading group table from %s", path)

    lines = [
        line.strip()
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip()
    ]
    if not lines:
        raise DimensionError(f"Empty group table file: {path}")

    try:
        order = int(lines[0])
        rows = [[int(v) for v in line.split()] for line in lines[1:]]
    except ValueError as e:
        raise DimensionError(f"Group table file {path} is not integer text: {e}") from e

    if len(rows) != order:
        raise DimensionError(
            f"Group table file {path} declares {order} rows but has {len(rows)}"
        )

    for row_idx, row in enumerate(rows):
        if len(row) != order:
            raise DimensionError(
                f"Row {row_idx} of {path} has {len(row)} entries (expected {order})"
            )

    return from_table(rows)


def save_group_table(group: GroupTable, path: typing.Union[str, Path]) -> None:
    """Write a group in the plain-text table format read by load_group_table"""
    lines = [str(group.order)]
    lines.extend(" ".join(str(int(v)) for v in row) for row in group.mul)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
