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
"""Errors and check results"""
import typing
from dataclasses import dataclass

Witness = typing.Tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a law or structure check.

    Truthy when the check passed. On failure, witness holds the first violating
    indices (element/carrier indices, in the order named by message).
    """

    witness: typing.Optional[Witness] = None
    """First violating indices, or None if the check passed"""

    message: str = ""
    """Human-readable description of the violation"""

    @property
    def ok(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "yes"

        return f"no: {self.message} (witness {self.witness})"


PASSED = Verdict()


class EquicoalgError(Exception):
    """Base class for all errors raised by this package"""


class GroupAxiomError(EquicoalgError):
    """Raised when a multiplication table violates a group axiom"""

    def __init__(self, axiom: str, witness: Witness, detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        message = f"Group axiom violated: {axiom} (witness {witness})"
        if detail:
            message = f"{message}: {detail}"

        super().__init__(message)


class GroupSizeError(EquicoalgError):
    """Raised when a requested group is empty or too large to tabulate"""


class GroupMismatchError(EquicoalgError):
    """Raised when operands are defined over different groups"""

    def __init__(self, what: str = "operands"):
        super().__init__(f"Group mismatch between {what}")


class DimensionError(EquicoalgError, ValueError):
    """Raised when array shapes or dimensions do not agree"""


class RepresentationMismatchError(EquicoalgError):
    """Raised when two structures are expected to share a representation"""


class ActionLawError(EquicoalgError):
    """Raised when a coalgebra table is required to be a group action but is not"""

    def __init__(self, verdict: Verdict):
        self.verdict = verdict
        super().__init__(f"Not a group action: {verdict}")


class SolverError(EquicoalgError):
    """Raised when the ridge normal equations cannot be factored"""

    def __init__(self, message: str, condition: float):
        self.condition = condition
        super().__init__(f"{message} (estimated condition number {condition:.3e})")


class ConfigError(EquicoalgError, ValueError):
    """Raised for invalid experiment configuration"""


class InvalidRepresentationError(EquicoalgError):
    """Raised when matrices fail the representation laws"""

    def __init__(self, residual: float, tolerance: float):
        self.residual = residual
        super().__init__(
            f"Matrices are not a representation: residual {residual:.3e} exceeds "
            f"{tolerance:.1e}"
        )
