# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled MT19937 core: the hot kernels behind coin flips and game runs.

Same API and bit-identical streams as the pure-Python fallback in
``_mtpy``; selected at import time by ``petersburg.backend``.
"""

from libc.stdint cimport int64_t, uint32_t, uint64_t
from libc.math cimport ldexp

import numpy as np

cdef uint32_t MATRIX_A = 0x9908B0DF
cdef uint32_t UPPER_MASK = 0x80000000
cdef uint32_t LOWER_MASK = 0x7FFFFFFF
cdef int PAYOUT_CAP = 1023


cdef class Mt19937:
    """32-bit Mersenne Twister with standard seeding (multiplier 1812433253)."""

    cdef uint32_t state[624]
    cdef int index
    cdef uint64_t _word_count

    def __cinit__(self, seed):
        cdef uint32_t prev = <uint32_t>(seed & 0xFFFFFFFF)
        cdef int i
        self.state[0] = prev
        for i in range(1, 624):
            prev = <uint32_t>1812433253 * (prev ^ (prev >> 30)) + <uint32_t>i
            self.state[i] = prev
        self.index = 624
        self._word_count = 0

    cdef void _twist(self) noexcept nogil:
        cdef int kk
        cdef uint32_t y
        for kk in range(624 - 397):
            y = (self.state[kk] & UPPER_MASK) | (self.state[kk + 1] & LOWER_MASK)
            self.state[kk] = self.state[kk + 397] ^ (y >> 1) ^ ((y & 1) * MATRIX_A)
        for kk in range(624 - 397, 623):
            y = (self.state[kk] & UPPER_MASK) | (self.state[kk + 1] & LOWER_MASK)
            self.state[kk] = self.state[kk + 397 - 624] ^ (y >> 1) ^ ((y & 1) * MATRIX_A)
        y = (self.state[623] & UPPER_MASK) | (self.state[0] & LOWER_MASK)
        self.state[623] = self.state[396] ^ (y >> 1) ^ ((y & 1) * MATRIX_A)
        self.index = 0

    cdef uint32_t _next(self) noexcept nogil:
        cdef uint32_t y
        if self.index >= 624:
            self._twist()
        y = self.state[self.index]
        self.index += 1
        y ^= y >> 11
        y ^= (y << 7) & <uint32_t>0x9D2C5680
        y ^= (y << 15) & <uint32_t>0xEFC60000
        y ^= y >> 18
        self._word_count += 1
        return y

    def next_word(self):
        return self._next()

    def words(self, n):
        """Next ``n`` tempered 32-bit words, advancing the stream by n."""
        out = np.empty(n, dtype=np.uint32)
        cdef uint32_t[::1] view = out
        cdef Py_ssize_t i, count = n
        with nogil:
            for i in range(count):
                view[i] = self._next()
        return out

    def run_games(self, games):
        """Play ``games`` coin-toss games; return (sum_tails, payout_total, saturated).

        One game draws words until a low bit of 1 appears; its payout is
        2**tails, capped at 2**1023 with the saturation counter bumped.
        """
        if games < 0:
            raise ValueError("games must be non-negative")
        cdef Py_ssize_t g, count = games
        cdef uint64_t sum_tails = 0, saturated = 0, t
        cdef double payout_total = 0.0
        with nogil:
            for g in range(count):
                t = 0
                while (self._next() & 1) == 0:
                    t += 1
                sum_tails += t
                payout_total += ldexp(1.0, <int>t if t <= <uint64_t>PAYOUT_CAP else PAYOUT_CAP)
                if t > <uint64_t>PAYOUT_CAP:
                    saturated += 1
        return sum_tails, payout_total, saturated

    def tails(self, games):
        """Per-game tail counts for the next ``games`` games, as int64."""
        out = np.empty(games, dtype=np.int64)
        cdef int64_t[::1] view = out
        cdef Py_ssize_t g, count = games
        cdef uint64_t t
        with nogil:
            for g in range(count):
                t = 0
                while (self._next() & 1) == 0:
                    t += 1
                view[g] = <int64_t>t
        return out

    @property
    def word_count(self):
        return self._word_count
