"""Frequency sweeps over (games, delta) grids, Buffon preset, CSV emission.

The sweep reruns the frequency estimate for every cell of a grid and emits
one row per cell, ordered by (delta, games) and plot-ready for gnuplot or
any CSV consumer.  Cells run on a thread pool; results are merged in grid
order, so output is deterministic regardless of scheduling.
"""

from __future__ import annotations

import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Sequence

from ._seeding import derive_round_seed
from .game import play_round
from .khinchin import Mode, SimConfig, estimate_frequencies
from .rng import DEFAULT_SEED, Generator

__all__ = [
    "BUFFON_GAMES",
    "BUFFON_TOTAL",
    "CSV_HEADER",
    "BuffonReport",
    "SweepRow",
    "SweepSpec",
    "buffon_preset",
    "derive_round_seed",
    "format_buffon_report",
    "rows_to_csv",
    "run_sweep",
    "write_csv",
]

DEFAULT_GAMES_LIST = tuple(2**k for k in range(3, 26))
DEFAULT_DELTAS = (0.01, 0.05, 0.1)

CSV_HEADER = "games,ln_games,delta,rounds,f1,f2,seed,saturated_rounds"

# Buffon's 1777 experiment: 2,048 games paid 10,057 crowns in total.
BUFFON_GAMES = 2048
BUFFON_TOTAL = 10057


@dataclass(frozen=True)
class SweepSpec:
    """Grid of game counts (powers of two) and band widths to sweep."""

    games_list: tuple[int, ...] = DEFAULT_GAMES_LIST
    deltas: tuple[float, ...] = DEFAULT_DELTAS
    rounds: int = 100
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        object.__setattr__(self, "games_list", tuple(self.games_list))
        object.__setattr__(self, "deltas", tuple(self.deltas))
        if not self.games_list or not self.deltas:
            raise ValueError("games_list and deltas must be non-empty")
        for games in self.games_list:
            if games <= 2 or games & (games - 1):
                raise ValueError(f"games_list entries must be powers of two > 2, got {games}")
        if list(self.games_list) != sorted(set(self.games_list)):
            raise ValueError("games_list must be strictly ascending")
        if any(d <= 0.0 for d in self.deltas):
            raise ValueError("deltas must be > 0")
        if self.rounds < 1:
            raise ValueError("rounds must be >= 1")


@dataclass(frozen=True)
class SweepRow:
    """One (games, delta) cell: pass fractions plus the cell's coordinates."""

    games: int
    ln_games: float
    delta: float
    f1: float
    f2: float
    rounds: int
    seed: int
    saturated_rounds: int


def run_sweep(
    spec: SweepSpec,
    mode: Mode = Mode.PARALLEL,
    max_workers: int | None = None,
) -> list[SweepRow]:
    """Evaluate every grid cell and return rows ordered by (delta, games).

    PARALLEL is the working mode: round i of every cell draws from the
    stream seeded with derive_round_seed(spec.seed, i), which makes cells
    share round randomness (common random numbers) and keeps the f1 curve
    smooth along the games axis.  SERIAL reserves reference-program
    comparison: each cell then equals a plain single-stream run with
    spec.seed.
    """
    configs = [
        SimConfig(games, delta, rounds=spec.rounds, seed=spec.seed, mode=mode)
        for delta in spec.deltas
        for games in spec.games_list
    ]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        reports = list(pool.map(estimate_frequencies, configs))
    return [
        SweepRow(
            games=r.games,
            ln_games=math.log(r.games),
            delta=r.delta,
            f1=r.f1,
            f2=r.f2,
            rounds=r.rounds,
            seed=r.seed,
            saturated_rounds=r.saturated_rounds,
        )
        for r in reports
    ]


def write_csv(rows: Sequence[SweepRow], stream: IO[str]) -> None:
    """Emit the sweep as CSV: LF newlines, 6 significant digits for reals."""
    stream.write(CSV_HEADER + "\n")
    for r in rows:
        stream.write(
            f"{r.games},{r.ln_games:g},{r.delta:g},{r.rounds},"
            f"{r.f1:g},{r.f2:g},{r.seed},{r.saturated_rounds}\n"
        )


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    import io

    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


@dataclass(frozen=True)
class BuffonReport:
    """Rounds of 2,048 games next to Buffon's historical tally."""

    rounds: int
    seed: int
    round_means: tuple[float, ...]
    first_round_total: float
    first_round_mean: float
    mean_of_means: float = field(init=False)
    sd_of_means: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "mean_of_means", statistics.fmean(self.round_means))
        sd = statistics.stdev(self.round_means) if self.rounds > 1 else math.nan
        object.__setattr__(self, "sd_of_means", sd)

    @property
    def median_of_means(self) -> float:
        return statistics.median(self.round_means)


def buffon_preset(seed: int = DEFAULT_SEED, rounds: int = 100) -> BuffonReport:
    """Replay Buffon's setup: ``rounds`` rounds of exactly 2,048 games.

    Rounds draw consecutively from one stream, like the reference run.
    The first round's grand total and per-game mean are reported for
    comparison with the historical 10,057 / 2,048.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    gen = Generator(seed)
    summaries = [play_round(gen, BUFFON_GAMES) for _ in range(rounds)]
    means = tuple(s.a_mean for s in summaries)
    first_total = means[0] * BUFFON_GAMES  # exact: a_mean was total / 2**11
    return BuffonReport(
        rounds=rounds,
        seed=seed,
        round_means=means,
        first_round_total=first_total,
        first_round_mean=means[0],
    )


def format_buffon_report(report: BuffonReport) -> str:
    """Render the report with the historical reference in the header."""
    lines = [
        f"Buffon 1777 reference: total = {BUFFON_TOTAL} over {BUFFON_GAMES} games,"
        f" {BUFFON_TOTAL / BUFFON_GAMES:g} per game",
        f"round 1: total = {report.first_round_total:g}"
        f" mean = {report.first_round_mean:g}",
        f"A over {report.rounds} rounds: mean = {report.mean_of_means:g}"
        f" sd = {report.sd_of_means:g} median = {report.median_of_means:g}"
        f" s = {report.seed}",
    ]
    return "\n".join(lines)
