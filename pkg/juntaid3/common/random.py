# The MIT License (MIT)
# Copyright (c) 2024-present juntaid3 developers
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
# OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

"""Seed handling.

Every random draw in the library goes through a :class:`numpy.random.Generator` backed by
``PCG64``. Seeds for independent streams are derived with :class:`numpy.random.SeedSequence`, so
results are reproducible within this implementation (but not across different generators).
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from numpy.random import PCG64, Generator, SeedSequence

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = ("GENERATOR_NAME", "make_generator", "derive_seed", "spawn_generators")

GENERATOR_NAME: Final[str] = "PCG64"


def make_generator(seed: int | SeedSequence) -> Generator:
    """Create a seeded generator.

    Parameters
    ----------
    seed:
        A non-negative integer or an existing seed sequence.
    """
    return Generator(PCG64(seed))


def derive_seed(master_seed: int, index: int) -> int:
    """Derive a 64 bit seed for a child computation, like a trial of a batch.

    Parameters
    ----------
    master_seed:
        The seed of the parent computation.
    index:
        The index of the child.
    """
    state = SeedSequence([master_seed, index]).generate_state(1, dtype="uint64")
    return int(state[0])


def spawn_generators(seed: int, count: int) -> list[Generator]:
    """Create ``count`` independent generators from a single seed."""
    return [make_generator(child) for child in SeedSequence(seed).spawn(count)]
