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
"""Utility methods for equicoalg"""
import numpy as np

from .const import PRNG_NAME, PRNG_VERSION


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    """Create a seeded generator; extra keys select independent child streams.

    Streams are numpy PCG64 generators keyed by a SeedSequence, so (seed, keys)
    always yields the same sequence regardless of what other streams exist.
    """
    if seed < 0 or any(k < 0 for k in keys):
        raise ValueError(f"Seeds must be non-negative: {(seed,) + tuple(keys)}")

    seed_seq = np.random.SeedSequence([PRNG_VERSION, seed, *keys])
    return np.random.Generator(np.random.PCG64(seed_seq))


def sub_seed(seed: int, *keys: int) -> int:
    """Derive a 32-bit seed for the child stream (seed, *keys)"""
    seed_seq = np.random.SeedSequence([PRNG_VERSION, seed, *keys])
    return int(seed_seq.generate_state(1, dtype=np.uint32)[0])


def prng_description() -> str:
    return f"{PRNG_NAME}/v{PRNG_VERSION}"


def format_float(value: float) -> str:
    """Shortest representation that parses back to exactly the same float"""
    return repr(float(value))
