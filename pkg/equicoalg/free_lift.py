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
"""Free vector spaces on finite sets and the lifting of X^G-coalgebras.

V(A) is R^A with basis e_a. The unit eta sends a to e_a, and lambda repackages
a formal sum of functions X -> A into a function X -> V(A). Lifting a coalgebra
(A, alpha) gives the linear map V(A) -> V(A)^G, e_a -> (g -> e_{alpha(a)(g)}).
"""
import logging
import typing
from dataclasses import dataclass, field

import numpy as np

from .errors import PASSED, DimensionError, Verdict
from .set_coalgebra import FiniteSetCoalgebra

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FreeVector:
    """Formal sum sum_a c_a a in V(A), stored densely"""

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.float64)
        if coeffs.ndim != 1 or coeffs.shape[0] < 1:
            raise DimensionError(
                f"Free vector needs a nonempty base (got {coeffs.shape})"
            )

        if not np.all(np.isfinite(coeffs)):
            raise DimensionError("Free vector coefficients must be finite")

        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def base_size(self) -> int:
        return int(self.coeffs.shape[0])

    def __add__(self, other: "FreeVector") -> "FreeVector":
        if other.base_size != self.base_size:
            raise DimensionError("Free vectors over different bases")

        return FreeVector(self.coeffs + other.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeVector):
            return NotImplemented

        return np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None  # type: ignore


@dataclass(frozen=True)
class FunctionTable:
    """A function X -> A given by the index of each image"""

    values: typing.Tuple[int, ...]
    codomain_size: int

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        for v in values:
            if not 0 <= v < self.codomain_size:
                raise DimensionError(
                    f"Function value {v} outside codomain of size {self.codomain_size}"
                )

        object.__setattr__(self, "values", values)

    @property
    def domain_size(self) -> int:
        return len(self.values)

    def __call__(self, x: int) -> int:
        return self.values[x]


@dataclass(frozen=True)
class FormalFunctionSum:
    """c_1 phi_1 + ... + c_k phi_k in V(A^X)"""

    terms: typing.Tuple[typing.Tuple[float, FunctionTable], ...] = field(
        default_factory=tuple
    )

    domain_size: typing.Optional[int] = None
    """|X|, required only for the empty sum"""

    codomain_size: typing.Optional[int] = None
    """|A|, required only for the empty sum"""

    def __post_init__(self):
        terms = tuple((float(c), fn) for c, fn in self.terms)
        object.__setattr__(self, "terms", terms)

        for _coeff, fn in terms:
            if self.domain_size is None:
                object.__setattr__(self, "domain_size", fn.domain_size)

            if self.codomain_size is None:
                object.__setattr__(self, "codomain_size", fn.codomain_size)

            if (fn.domain_size, fn.codomain_size) != (
                self.domain_size,
                self.codomain_size,
            ):
                raise DimensionError(
                    "All functions in a formal sum must share domain and codomain sizes"
                )

    def __add__(self, other: "FormalFunctionSum") -> "FormalFunctionSum":
        return FormalFunctionSum(
            terms=self.terms + other.terms,
            domain_size=self.domain_size if self.terms else other.domain_size,
            codomain_size=self.codomain_size if self.terms else other.codomain_size,
        )


# -----------------------------------------------------------------------------


def eta(a: int, base_size: int) -> FreeVector:
    """Basis vector e_a of V(A)"""
    if not 0 <= a < base_size:
        raise DimensionError(f"Index {a} outside base of size {base_size}")

    coeffs = np.zeros(base_size, dtype=np.float64)
    coeffs[a] = 1.0

    return FreeVector(coeffs)


def lambda_repack(s: FormalFunctionSum) -> typing.List[FreeVector]:
    """psi(x) = c_1 e_{phi_1(x)} + ... + c_k e_{phi_k(x)} for each x in X"""
    if (s.domain_size is None) or (s.codomain_size is None):
        raise DimensionError(
            "Empty formal sum needs explicit domain and codomain sizes"
        )

    if s.codomain_size < 1:
        raise DimensionError("Formal sum codomain must be nonempty")

    coeffs = np.zeros((s.domain_size, s.codomain_size), dtype=np.float64)
    points = np.arange(s.domain_size)
    for coeff, fn in s.terms:
        coeffs[points, np.array(fn.values, dtype=np.int64)] += coeff

    return [FreeVector(row) for row in coeffs]


def lift_coalgebra(c: FiniteSetCoalgebra) -> np.ndarray:
    """(m |A|) x |A| matrix of e_a -> (g -> e_{alpha(a)(g)}), blocks in group order"""
    size = c.carrier_size
    order = c.group.order

    lifted = np.zeros((order * size, size), dtype=np.float64)
    points = np.arange(size)
    for g in c.group.elements:
        lifted[g * size + c.table[:, g], points] = 1.0

    return lifted


def lifted_blocks(c: FiniteSetCoalgebra) -> np.ndarray:
    """lift_coalgebra as an m x |A| x |A| stack of blocks"""
    return lift_coalgebra(c).reshape(c.group.order, c.carrier_size, c.carrier_size)


def check_embedding_equivariance(c: FiniteSetCoalgebra) -> Verdict:
    """eta is a homomorphism (A, alpha) -> U*V*(A, alpha).

    For every a and g, block g of the lifted structure applied to eta(a) must
    equal eta(alpha(a)(g)). Witness is the first failing (a, g).
    """
    blocks = lifted_blocks(c)
    for a in range(c.carrier_size):
        lifted_a = blocks @ eta(a, c.carrier_size).coeffs
        for g in c.group.elements:
            expected = eta(int(c.table[a, g]), c.carrier_size).coeffs
            if not np.array_equal(lifted_a[g], expected):
                return Verdict((a, g), "lifted structure disagrees with eta")

    return PASSED


def check_compatibility_identity(c: FiniteSetCoalgebra) -> Verdict:
    """F(eta) = kappa V o U(lambda) o eta F, checked at phi = alpha(a) for every a.

    kappa is the identity on V(A)^G. Witness is (a,) for the first mismatch.
    """
    size = c.carrier_size
    for a in range(size):
        phi = FunctionTable(values=tuple(c.table[a, :]), codomain_size=size)

        # F(eta)(phi) = eta o phi
        left = np.stack([eta(phi(g), size).coeffs for g in c.group.elements])

        # eta_F(phi) is the formal sum 1 phi; lambda repackages it
        right = np.stack(
            [psi.coeffs for psi in lambda_repack(FormalFunctionSum(((1.0, phi),)))]
        )

        if not np.array_equal(left, right):
            return Verdict((a,), "F(eta) and kappa V o U(lambda) o eta F differ")

    _LOGGER.debug("Compatibility identity holds on %s points", size)

    return PASSED
