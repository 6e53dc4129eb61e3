"""Pure-Python MT19937 core with numpy-vectorized block generation.

Drop-in replacement for the compiled core in ``_mtcore``: same class name,
same methods, bit-identical output streams.  Words are produced 624 at a
time (one twist of the whole state, then vectorized tempering) and handed
out from a cache, which keeps the fallback usable for medium-sized runs.
"""

from __future__ import annotations

import numpy as np

_N = 624
_M = 397
_MATRIX_A = np.uint32(0x9908B0DF)
_UPPER_MASK = np.uint32(0x80000000)
_LOWER_MASK = np.uint32(0x7FFFFFFF)
_ONE = np.uint32(1)

_PAYOUT_CAP = 1023          # 2**1023 is the largest finite power of two
_BLOCK_CAP = 1 << 16        # bounds memory in the game-run chunking


def _twisted(y: np.ndarray) -> np.ndarray:
    return (y >> _ONE) ^ ((y & _ONE) * _MATRIX_A)


class Mt19937:
    """32-bit Mersenne Twister with standard seeding (multiplier 1812433253)."""

    def __init__(self, seed: int):
        state = np.empty(_N, dtype=np.uint32)
        prev = seed & 0xFFFFFFFF
        state[0] = prev
        for i in range(1, _N):
            prev = (1812433253 * (prev ^ (prev >> 30)) + i) & 0xFFFFFFFF
            state[i] = prev
        self._state = state
        self._cache = state     # placeholder; first draw forces a twist
        self._pos = _N
        self.word_count = 0

    def _twist(self) -> None:
        # Vectorized mt19937ar twist.  Targets are written in three chunks
        # ordered so every source index is already final (the recurrence
        # reads state[k + M mod N], which the scalar loop has updated for
        # k >= N - M).
        mt = self._state
        y = (mt[: _N - 1] & _UPPER_MASK) | (mt[1:] & _LOWER_MASK)
        mt[: _N - _M] = mt[_M:] ^ _twisted(y[: _N - _M])
        mt[_N - _M : 2 * (_N - _M)] = mt[: _N - _M] ^ _twisted(y[_N - _M : 2 * (_N - _M)])
        mt[2 * (_N - _M) : _N - 1] = mt[_N - _M : _M - 1] ^ _twisted(y[2 * (_N - _M) : _N - 1])
        y_last = (mt[_N - 1] & _UPPER_MASK) | (mt[0] & _LOWER_MASK)
        mt[_N - 1] = mt[_M - 1] ^ _twisted(y_last)

        out = mt.copy()
        out ^= out >> np.uint32(11)
        out ^= (out << np.uint32(7)) & np.uint32(0x9D2C5680)
        out ^= (out << np.uint32(15)) & np.uint32(0xEFC60000)
        out ^= out >> np.uint32(18)
        self._cache = out
        self._pos = 0

    def next_word(self) -> int:
        if self._pos >= _N:
            self._twist()
        w = int(self._cache[self._pos])
        self._pos += 1
        self.word_count += 1
        return w

    def words(self, n: int) -> np.ndarray:
        """Next ``n`` tempered 32-bit words, advancing the stream by n."""
        out = np.empty(n, dtype=np.uint32)
        filled = 0
        while filled < n:
            if self._pos >= _N:
                self._twist()
            take = min(_N - self._pos, n - filled)
            out[filled : filled + take] = self._cache[self._pos : self._pos + take]
            self._pos += take
            filled += take
        self.word_count += n
        return out

    def run_games(self, games: int):
        """Play ``games`` coin-toss games; return (sum_tails, payout_total, saturated).

        Word consumption matches the scalar flip loop exactly: chunks never
        exceed the number of games still open, so the stream position after
        the call equals sum_tails + games draws past the starting position.
        """
        if games < 0:
            raise ValueError("games must be non-negative")
        sum_tails = 0
        payout_total = 0.0
        saturated = 0
        pending = 0
        remaining = games
        while remaining > 0:
            block = self.words(min(remaining, _BLOCK_CAP))
            heads = np.flatnonzero(block & _ONE)
            if heads.size == 0:
                pending += block.size
                continue
            tails = np.diff(heads, prepend=-1) - 1
            tails[0] += pending
            pending = block.size - int(heads[-1]) - 1
            sum_tails += int(tails.sum())
            payout_total += float(np.ldexp(1.0, np.minimum(tails, _PAYOUT_CAP).astype(np.int32)).sum())
            saturated += int(np.count_nonzero(tails > _PAYOUT_CAP))
            remaining -= int(heads.size)
        return sum_tails, payout_total, saturated

    def tails(self, games: int) -> np.ndarray:
        """Per-game tail counts for the next ``games`` games, as int64."""
        out = np.empty(games, dtype=np.int64)
        filled = 0
        pending = 0
        while filled < games:
            block = self.words(min(games - filled, _BLOCK_CAP))
            heads = np.flatnonzero(block & _ONE)
            if heads.size == 0:
                pending += block.size
                continue
            t = np.diff(heads, prepend=-1) - 1
            t[0] += pending
            pending = block.size - int(heads[-1]) - 1
            out[filled : filled + heads.size] = t
            filled += int(heads.size)
        return out
