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
"""Finite group equivariance through the group-action comonad E(V) = V^G"""
from ._resources import __version__
from .approx import (
    Activation,
    CompactSample,
    ShallowNet,
    UatReportRow,
    VectorNet,
    equivariance_residual,
    eval_vector_net,
    fit_random_features,
    is_closed_sample,
    run_uat_row,
    sample_box,
    sup_error,
    symmetrize_sample,
    to_vector_net,
    transfer_ratio,
)
from .comonad import (
    BlockBlockVector,
    BlockVector,
    Comonad,
    GroupActionComonad,
    check_comonad_laws,
    delta,
    e_map,
    epsilon,
)
from .errors import Verdict
from .free_lift import (
    FormalFunctionSum,
    FreeVector,
    FunctionTable,
    check_compatibility_identity,
    check_embedding_equivariance,
    eta,
    lambda_repack,
    lift_coalgebra,
)
from .groups import GroupKind, GroupTable, build_group, from_table, load_group_table
from .representations import (
    LinearRep,
    permutation_rep,
    regular_rep,
    rotation_rep,
    trivial_rep,
    validate_rep,
)
from .set_coalgebra import (
    FiniteSetCoalgebra,
    enumerate_subuniverses,
    is_group_action,
    is_homomorphism,
    is_subuniverse,
    orbits,
)
from .symmetrize import (
    ActionCoalgebra,
    ReynoldsAlgebra,
    beta_apply,
    check_comodule_laws,
    check_left_inverse,
    gamma_apply,
    symmetrize,
)

__author__ = "The equicoalg authors"
