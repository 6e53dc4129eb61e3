"""Deterministic coin-flip source: 32-bit MT19937 mapped to a fair coin.

A :class:`Generator` seeded identically always emits the same word sequence,
and each flip consumes exactly one 32-bit word: HEAD if its low bit is set,
TAIL otherwise.  The low-bit mapping is fixed and documented here because
library uniform-int distributions are implementation-defined; per-round
numbers from other programs agree only statistically, not bit for bit.
"""

from __future__ import annotations

import enum

from . import backend

DEFAULT_SEED = 1234567


class Coin(enum.IntEnum):
    """Faces of the fair coin: TAIL continues a game, HEAD ends it."""

    TAIL = 0
    HEAD = 1


class Generator:
    """Seeded MT19937 word stream with draw-count instrumentation.

    Single-owner mutable state: not safe for concurrent use.  Parallel
    work uses independent Generators (see experiment.derive_round_seed).
    """

    def __init__(self, seed: int = DEFAULT_SEED, backend_kind: str | None = None):
        self.seed = seed & 0xFFFFFFFF
        self._core = backend.make_core(self.seed, backend_kind)

    def next_word(self) -> int:
        """One 32-bit word, uniform over [0, 2**32)."""
        return self._core.next_word()

    def words(self, n: int):
        """The next ``n`` words as a uint32 array."""
        return self._core.words(n)

    @property
    def words_drawn(self) -> int:
        """Total words consumed since seeding."""
        return self._core.word_count

    def __repr__(self) -> str:
        return f"Generator(seed={self.seed})"


def flip(gen) -> Coin:
    """One fair-coin flip: HEAD iff the low bit of the next word is 1."""
    return Coin(gen.next_word() & 1)
