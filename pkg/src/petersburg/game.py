"""St. Petersburg games and overflow-safe round accumulation.

One game tosses the coin until HEAD and pays 2**tails ducats.  A round of
n games tracks the tail-count sum exactly (an integer), so the geometric
mean is recovered in log space as exp(sum_tails * ln 2 / n) instead of
multiplying n payouts together; the arithmetic mean accumulates payouts in
float64, with individual payouts capped at 2**1023 (sticky ``saturated``
flag) so the sum stays finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .rng import Coin, Generator, flip

PAYOUT_CAP_EXPONENT = 1023
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class GameOutcome:
    """One game: tail count before the first HEAD and the payout in ducats."""

    tails: int
    payout: float

    @property
    def saturated(self) -> bool:
        return self.tails > PAYOUT_CAP_EXPONENT


@dataclass(frozen=True)
class RoundSummary:
    """Geometric and arithmetic mean payment over one round of games."""

    games: int
    sum_tails: int
    g_mean: float
    a_mean: float
    saturated: bool


def _payout(tails: int) -> float:
    return math.ldexp(1.0, min(tails, PAYOUT_CAP_EXPONENT))


def play_game(gen) -> GameOutcome:
    """Toss until HEAD; payout doubles per TAIL, capped at 2**1023."""
    tails = 0
    while flip(gen) is Coin.TAIL:
        tails += 1
    return GameOutcome(tails, _payout(tails))


def _summarize(games: int, sum_tails: int, payout_total: float, saturated: bool) -> RoundSummary:
    try:
        g_mean = math.exp(sum_tails * _LN2 / games)
    except OverflowError:
        g_mean = math.inf  # mean tails beyond the payout cap; flagged saturated
    return RoundSummary(games, sum_tails, g_mean, payout_total / games, saturated)


def play_round(gen: Generator, games: int) -> RoundSummary:
    """Play ``games`` games from one continuous stream and summarize them."""
    if games < 1:
        raise ValueError("games must be >= 1")
    sum_tails, payout_total, saturated = gen._core.run_games(games)
    return _summarize(games, sum_tails, payout_total, saturated > 0)


def summarize(outcomes: Sequence[GameOutcome]) -> RoundSummary:
    """Collapse already-played games into a round summary.

    Scalar mirror of :func:`play_round`; a round played game by game via
    :func:`play_game` summarizes to the identical RoundSummary.
    """
    if not outcomes:
        raise ValueError("empty sample")
    sum_tails = sum(o.tails for o in outcomes)
    payout_total = 0.0
    for o in outcomes:
        payout_total += o.payout
    saturated = any(o.saturated for o in outcomes)
    return _summarize(len(outcomes), sum_tails, payout_total, saturated)


def mean_log2_payout(outcomes: Sequence[GameOutcome]) -> float:
    """Mean tail count, i.e. the base-2 log of the geometric mean payout."""
    if not outcomes:
        raise ValueError("empty sample")
    return sum(o.tails for o in outcomes) / len(outcomes)
