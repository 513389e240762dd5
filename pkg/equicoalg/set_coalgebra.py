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
"""Coalgebras for F(X) = X^G on finite sets.

A FiniteSetCoalgebra stores alpha: A -> A^G as a table with entry (a, g) equal
to alpha(a)(g). For group actions this is xi(g, a) = g.a. The table is not
required to be an action; is_group_action checks the action laws separately.
"""
import itertools
import logging
import typing
from dataclasses import dataclass

import numpy as np

from .const import MAX_SUBUNIVERSE_CARRIER
from .errors import (
    PASSED,
    ActionLawError,
    DimensionError,
    GroupMismatchError,
    Verdict,
)
from .groups import IDENTITY, GroupKind, GroupTable, symmetric_permutations_table

_LOGGER = logging.getLogger(__name__)

Subset = typing.Tuple[int, ...]
CarrierMap = typing.Sequence[int]


@dataclass(frozen=True, eq=False)
class FiniteSetCoalgebra:
    """Structure map alpha: A -> A^G on a finite carrier A = {0..carrier_size-1}"""

    group: GroupTable
    """Group indexing the structure map"""

    table: np.ndarray
    """carrier_size x m table of carrier indices, entry (a, g) = alpha(a)(g)"""

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64)
        if table.ndim != 2 or table.shape[1] != self.group.order:
            raise DimensionError(
                f"Coalgebra table must be carrier x {self.group.order} (got "
                f"{table.shape})"
            )

        if table.shape[0] < 1:
            raise DimensionError("Coalgebra carrier must be nonempty")

        if np.any((table < 0) | (table >= table.shape[0])):
            raise DimensionError("Coalgebra table entries must be carrier indices")

        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @property
    def carrier_size(self) -> int:
        return int(self.table.shape[0])

    def act(self, g: int, a: int) -> int:
        """xi(g, a) = alpha(a)(g)"""
        return int(self.table[a, g])


# -----------------------------------------------------------------------------
# Constructors
# -----------------------------------------------------------------------------


def natural_action(group: GroupTable) -> FiniteSetCoalgebra:
    """Action of a built-in group on its defining set.

    cyclic(n) shifts Z_n, dihedral(n) moves the vertices of an n-gon,
    symmetric(n) permutes {0..n-1}. Explicit tables fall back to the action of
    the group on itself by left multiplication.
    """
    n = group.degree
    if group.kind == GroupKind.CYCLIC:
        points = np.arange(n)
        table = (points[:, None] + np.arange(group.order)[None, :]) % n
    elif group.kind == GroupKind.DIHEDRAL:
        # r^k f^s sends vertex a to k + (-1)^s a
        table = np.zeros((n, group.order), dtype=np.int64)
        for g in group.elements:
            k, s = g % n, g // n
            for a in range(n):
                table[a, g] = (k + (a if s == 0 else -a)) % n
    elif group.kind == GroupKind.SYMMETRIC:
        perms, _ = symmetric_permutations_table(n)
        table = perms.T
    else:
        return regular_action(group)

    return FiniteSetCoalgebra(group=group, table=table)


def regular_action(group: GroupTable) -> FiniteSetCoalgebra:
    """Action of the group on itself by left multiplication, h -> gh"""
    return FiniteSetCoalgebra(group=group, table=np.array(group.mul).T)


def trivial_coalgebra(group: GroupTable, carrier_size: int) -> FiniteSetCoalgebra:
    """Every group element fixes every point"""
    table = np.repeat(np.arange(carrier_size)[:, None], group.order, axis=1)
    return FiniteSetCoalgebra(group=group, table=table)


def relabel(c: FiniteSetCoalgebra, perm: CarrierMap) -> FiniteSetCoalgebra:
    """Conjugate by a carrier bijection: the new coalgebra acts on perm[a]"""
    perm_arr = _as_carrier_map(perm, c.carrier_size, c.carrier_size)
    if len(set(perm_arr.tolist())) != c.carrier_size:
        raise DimensionError("Relabeling must be a bijection of the carrier")

    table = np.zeros_like(c.table)
    table[perm_arr, :] = perm_arr[c.table]

    return FiniteSetCoalgebra(group=c.group, table=table)


# -----------------------------------------------------------------------------
# Checks
# -----------------------------------------------------------------------------


def is_group_action(c: FiniteSetCoalgebra) -> Verdict:
    """Check xi(1, a) = a and xi(g1, xi(g2, a)) = xi(g1 g2, a).

    Witness is (a, identity) for a unit violation or (a, g1, g2) otherwise.
    """
    table = c.table
    for a in range(c.carrier_size):
        if table[a, IDENTITY] != a:
            return Verdict(
                (a, IDENTITY), f"identity sends {a} to {int(table[a, IDENTITY])}"
            )

    order = c.group.order
    # [a, g1, g2] -> xi(g1, xi(g2, a))
    left = table[table[:, None, :], np.arange(order)[None, :, None]]
    # [a, g1, g2] -> xi(g1 g2, a)
    right = table[:, c.group.mul]

    violations = np.argwhere(left != right)
    if violations.size > 0:
        a, g1, g2 = (int(i) for i in violations[0])
        return Verdict((a, g1, g2), "xi(g1, xi(g2, a)) != xi(g1 g2, a)")

    return PASSED


def is_homomorphism(
    f: CarrierMap, src: FiniteSetCoalgebra, dst: FiniteSetCoalgebra
) -> Verdict:
    """Check f(alpha(a)(g)) = beta(f(a))(g) for all a, g (equivariance).

    Witness is the first failing (a, g).
    """
    if src.group != dst.group:
        raise GroupMismatchError("source and target coalgebras")

    f_arr = _as_carrier_map(f, src.carrier_size, dst.carrier_size)

    left = f_arr[src.table]
    right = dst.table[f_arr, :]

    violations = np.argwhere(left != right)
    if violations.size > 0:
        a, g = (int(i) for i in violations[0])
        return Verdict(
            (a, g), f"f(g.{a}) = {int(left[a, g])} but g.f({a}) = {int(right[a, g])}"
        )

    return PASSED


def compose_maps(f: CarrierMap, h: CarrierMap) -> typing.List[int]:
    """h o f for carrier maps given as index lists"""
    return [int(h[int(b)]) for b in f]


def orbits(c: FiniteSetCoalgebra) -> typing.List[Subset]:
    """Partition of the carrier into orbits, ordered by least element"""
    _require_action(c)

    seen: typing.Set[int] = set()
    result: typing.List[Subset] = []
    for a in range(c.carrier_size):
        if a in seen:
            continue

        orbit = tuple(sorted({int(b) for b in c.table[a, :]}))
        seen.update(orbit)
        result.append(orbit)

    return result


def is_subuniverse(subset: typing.Iterable[int], c: FiniteSetCoalgebra) -> Verdict:
    """Check that xi(g, x) stays in the subset for all x in it and all g"""
    members = _as_subset(subset, c.carrier_size)
    member_set = set(members)

    for x in members:
        for g in c.group.elements:
            if int(c.table[x, g]) not in member_set:
                return Verdict(
                    (x, g), f"g.{x} = {int(c.table[x, g])} leaves the subset"
                )

    return PASSED


def restrict(
    c: FiniteSetCoalgebra, subset: typing.Iterable[int]
) -> typing.Tuple[FiniteSetCoalgebra, typing.List[int]]:
    """Subcoalgebra on an invariant subset and its inclusion map.

    Elements of the subset are renumbered 0..k-1 in increasing order; the
    returned inclusion sends each new index to the original carrier index.
    """
    members = _as_subset(subset, c.carrier_size)
    verdict = is_subuniverse(members, c)
    if not verdict:
        raise ActionLawError(verdict)

    if not members:
        raise DimensionError("Cannot restrict to the empty subset")

    new_index = {a: i for i, a in enumerate(members)}
    table = [[new_index[int(c.table[a, g])] for g in c.group.elements] for a in members]

    return FiniteSetCoalgebra(group=c.group, table=np.array(table)), list(members)


def enumerate_subuniverses(c: FiniteSetCoalgebra) -> typing.List[Subset]:
    """All invariant subsets (unions of orbits), including the empty set.

    Sorted by size, then lexicographically.
    """
    if c.carrier_size > MAX_SUBUNIVERSE_CARRIER:
        raise DimensionError(
            f"Carrier of size {c.carrier_size} exceeds limit of "
            f"{MAX_SUBUNIVERSE_CARRIER}"
        )

    all_orbits = orbits(c)
    _LOGGER.debug(
        "Enumerating %s subuniverses from %s orbits",
        2 ** len(all_orbits),
        len(all_orbits),
    )

    subsets = []
    for included in itertools.product((False, True), repeat=len(all_orbits)):
        members = sorted(
            a
            for orbit, keep in zip(all_orbits, included)
            if keep
            for a in orbit
        )
        subsets.append(tuple(members))

    return sorted(subsets, key=lambda s: (len(s), s))


# -----------------------------------------------------------------------------


def _require_action(c: FiniteSetCoalgebra):
    verdict = is_group_action(c)
    if not verdict:
        raise ActionLawError(verdict)


def _as_carrier_map(f: CarrierMap, src_size: int, dst_size: int) -> np.ndarray:
    f_arr = np.asarray(f, dtype=np.int64)
    if f_arr.shape != (src_size,):
        raise DimensionError(
            f"Carrier map must have {src_size} entries (got shape {f_arr.shape})"
        )

    if np.any((f_arr < 0) | (f_arr >= dst_size)):
        raise DimensionError("Carrier map values out of range")

    return f_arr


def _as_subset(subset: typing.Iterable[int], carrier_size: int) -> Subset:
    members = tuple(sorted({int(a) for a in subset}))
    for a in members:
        if not 0 <= a < carrier_size:
            raise DimensionError(
                f"Subset index {a} outside carrier of size {carrier_size}"
            )

    return members
