"""St. Petersburg game laboratory.

Deterministic Monte Carlo simulation of the St. Petersburg game, checking
empirically that the geometric mean payment settles at 2 ducats while the
arithmetic mean keeps growing like a power of log n.  Includes the
classic command-line simulator contract, a (games, delta) frequency sweep,
an empirical sample-size threshold search, Prokhorov's law-of-large-numbers
bound, and a replay of Buffon's 2,048-game experiment.
"""

from .backend import BACKEND, USING_EXTENSION, compiled_available
from .bounds import ProkhorovQuery, prokhorov_n0
from .experiment import (
    BUFFON_GAMES,
    BUFFON_TOTAL,
    BuffonReport,
    SweepRow,
    SweepSpec,
    buffon_preset,
    derive_round_seed,
    format_buffon_report,
    rows_to_csv,
    run_sweep,
    write_csv,
)
from .game import (
    PAYOUT_CAP_EXPONENT,
    GameOutcome,
    RoundSummary,
    mean_log2_payout,
    play_game,
    play_round,
    summarize,
)
from .khinchin import (
    FrequencyReport,
    Mode,
    SimConfig,
    ThresholdEstimate,
    estimate_frequencies,
    find_threshold,
    theorem1_holds,
    theorem2_holds,
)
from .rng import DEFAULT_SEED, Coin, Generator, flip

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "BUFFON_GAMES",
    "BUFFON_TOTAL",
    "BuffonReport",
    "Coin",
    "DEFAULT_SEED",
    "FrequencyReport",
    "GameOutcome",
    "Generator",
    "Mode",
    "PAYOUT_CAP_EXPONENT",
    "ProkhorovQuery",
    "RoundSummary",
    "SimConfig",
    "SweepRow",
    "SweepSpec",
    "ThresholdEstimate",
    "USING_EXTENSION",
    "buffon_preset",
    "compiled_available",
    "derive_round_seed",
    "estimate_frequencies",
    "find_threshold",
    "flip",
    "format_buffon_report",
    "mean_log2_payout",
    "play_game",
    "play_round",
    "prokhorov_n0",
    "rows_to_csv",
    "run_sweep",
    "summarize",
    "theorem1_holds",
    "theorem2_holds",
    "write_csv",
]
