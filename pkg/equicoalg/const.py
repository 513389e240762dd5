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
"""Constants shared by the library and the command-line runner"""

# Tolerance for representation residuals (constructors use exact 0/1 arithmetic)
REP_TOLERANCE = 1e-12

# Pass threshold for law checks reported by the command-line runner
DEFAULT_LAW_TOLERANCE = 1e-9

# Number of random samples drawn per law check
DEFAULT_LAW_SAMPLES = 20

# Largest symmetric group that will be tabulated (order 120)
MAX_SYMMETRIC_DEGREE = 5

# Largest carrier for which all subuniverses are enumerated (2^16 subsets)
MAX_SUBUNIVERSE_CARRIER = 16

DEFAULT_SEED = 42
DEFAULT_TRAIN_COUNT = 2000
DEFAULT_TEST_COUNT = 500
DEFAULT_WIDTHS = (16, 64, 256)
DEFAULT_RIDGE_LAMBDA = 1e-8
DEFAULT_BOUNDS = ((-1.0, 1.0), (-1.0, 1.0))

# Bit generator behind every seeded stream (numpy.random.PCG64, SeedSequence keyed)
PRNG_NAME = "PCG64"
PRNG_VERSION = 1

# Column order of the uat CSV report
UAT_CSV_COLUMNS = (
    "width",
    "train_err_K",
    "f_err_Khat",
    "l_err_Khat",
    "equiv_residual",
    "transfer_ratio",
    "seed",
)

# Exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
