"""Khinchin-theorem band predicates and empirical frequency estimation.

Theorem I: the geometric mean payment of n games approaches 2 ducats, so a
round passes when |g_mean - 2| < delta.  Theorem II: the arithmetic mean
grows like a power of log n, so a round passes when a_mean lies strictly
between (ln n)^(1-delta) and (ln n)^(1+delta).  Natural logs throughout.
f1 and f2 are the fractions of rounds passing each band; eta enters only
the threshold search for the smallest game count whose f1 clears 1 - eta.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._seeding import derive_round_seed
from .game import RoundSummary, play_round
from .rng import DEFAULT_SEED, Generator


class Mode(enum.Enum):
    """Round stream structure: one continuous stream vs derived per-round seeds."""

    SERIAL = "serial"
    PARALLEL = "parallel"


@dataclass(frozen=True)
class SimConfig:
    """One simulation request: n games per round, band width, round count."""

    games: int
    delta: float
    rounds: int = 100
    seed: int = DEFAULT_SEED
    details: bool = False
    mode: Mode = Mode.SERIAL

    def __post_init__(self):
        if self.games <= 2 or self.delta <= 0.0 or self.rounds < 1:
            raise ValueError(
                f"games = {self.games}, delta = {self.delta}, rounds = {self.rounds}"
                " must be > 0 and games > 2"
            )


@dataclass(frozen=True)
class FrequencyReport:
    """Empirical pass fractions for the two theorem bands over a run."""

    games: int
    delta: float
    rounds: int
    seed: int
    mode: Mode
    hits1: int
    hits2: int
    saturated_rounds: int = 0
    details: tuple[RoundSummary, ...] | None = None

    @property
    def f1(self) -> float:
        return self.hits1 / self.rounds

    @property
    def f2(self) -> float:
        return self.hits2 / self.rounds


@dataclass(frozen=True)
class ThresholdEstimate:
    """Empirical stand-in for the theorems' sample-size threshold.

    ``games_needed`` is the first power of two whose f1 reached 1 - eta,
    or None when no candidate up to max_games qualified.  The estimate is
    noisy by construction (a fixed round budget per candidate).
    """

    delta: float
    eta: float
    rounds: int
    games_needed: int | None
    max_games: int

    @property
    def found(self) -> bool:
        return self.games_needed is not None


def theorem1_holds(g_mean: float, delta: float) -> bool:
    """Strict band check 2 - delta < g_mean < 2 + delta."""
    if delta <= 0.0:
        raise ValueError("delta must be > 0")
    return abs(g_mean - 2.0) < delta


def theorem2_holds(a_mean: float, games: int, delta: float) -> bool:
    """Strict band check (ln games)^(1-delta) < a_mean < (ln games)^(1+delta)."""
    if games < 3:
        raise ValueError("log-log undefined or degenerate")
    if delta <= 0.0:
        raise ValueError("delta must be > 0")
    ln_games = math.log(games)
    return ln_games ** (1.0 - delta) < a_mean < ln_games ** (1.0 + delta)


def _round_generators(config: SimConfig):
    if config.mode is Mode.SERIAL:
        gen = Generator(config.seed)
        for _ in range(config.rounds):
            yield gen
    else:
        for index in range(config.rounds):
            yield Generator(derive_round_seed(config.seed, index))


def estimate_frequencies(config: SimConfig) -> FrequencyReport:
    """Run the configured rounds and report f1, f2.

    SERIAL draws every round from one stream seeded with config.seed,
    matching a single-threaded reference run; PARALLEL gives round i its
    own stream seeded with derive_round_seed(config.seed, i), so the
    report is independent of evaluation order.
    """
    hits1 = hits2 = saturated = 0
    details: list[RoundSummary] | None = [] if config.details else None
    for gen in _round_generators(config):
        summary = play_round(gen, config.games)
        hits1 += theorem1_holds(summary.g_mean, config.delta)
        hits2 += theorem2_holds(summary.a_mean, config.games, config.delta)
        saturated += summary.saturated
        if details is not None:
            details.append(summary)
    return FrequencyReport(
        games=config.games,
        delta=config.delta,
        rounds=config.rounds,
        seed=config.seed,
        mode=config.mode,
        hits1=hits1,
        hits2=hits2,
        saturated_rounds=saturated,
        details=tuple(details) if details is not None else None,
    )


def find_threshold(
    delta: float,
    eta: float,
    rounds: int,
    seed: int = DEFAULT_SEED,
    max_games: int = 1 << 20,
) -> ThresholdEstimate:
    """Search games = 8, 16, 32, ... <= max_games for the first f1 >= 1 - eta.

    Only the geometric-mean band (Theorem I) is searched; the arithmetic
    band converges too slowly for a desk-scale search to terminate.
    Candidates are evaluated in PARALLEL mode, so they share derived round
    seeds and the sweep is reproducible given (seed, rounds).
    """
    if not 0.0 < eta < 1.0:
        raise ValueError("eta must be in (0, 1)")
    if delta <= 0.0:
        raise ValueError("delta must be > 0")
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    if max_games < 8 or max_games & (max_games - 1):
        raise ValueError("max_games must be a power of two >= 8")
    games = 8
    while games <= max_games:
        report = estimate_frequencies(
            SimConfig(games, delta, rounds=rounds, seed=seed, mode=Mode.PARALLEL)
        )
        # f1 >= 1 - eta, phrased on the failure count to dodge ratio rounding
        if rounds - report.hits1 <= eta * rounds:
            return ThresholdEstimate(delta, eta, rounds, games, max_games)
        games *= 2
    return ThresholdEstimate(delta, eta, rounds, None, max_games)
