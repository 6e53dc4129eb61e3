"""Command-line front end.

Bare numeric arguments reproduce the classic contract::

    khinchin games delta [rounds = 100] [seed = 1234567] [details = no]

printing one fixed-field summary line (18 whitespace tokens), preceded by
one ``G = ... A = ...`` line per round (6 tokens) when a sixth argument is
present.  Numbers render with at most 6 significant digits, so the output
stays friendly to awk/sed/gnuplot pipelines.  The ``sweep``, ``threshold``
and ``bound`` subcommands are additive; diagnostics go to stderr only.
"""

from __future__ import annotations

import enum
import re
import sys
from dataclasses import dataclass

from .bounds import ProkhorovQuery, prokhorov_n0
from .experiment import (
    DEFAULT_DELTAS,
    DEFAULT_GAMES_LIST,
    SweepSpec,
    run_sweep,
    write_csv,
)
from .game import RoundSummary
from .khinchin import FrequencyReport, Mode, SimConfig, estimate_frequencies, find_threshold
from .rng import DEFAULT_SEED

DEFAULT_ROUNDS = 100

USAGE_LINE = (
    f"Usage: khinchin games delta [rounds = {DEFAULT_ROUNDS}]"
    f" [seed = {DEFAULT_SEED}] [details = no]"
)
USAGE = "\n".join(
    [
        USAGE_LINE,
        "       khinchin sweep [--games <csv>] [--delta <csv>] [--rounds <int>]"
        " [--seed <int>] [--mode serial|parallel] [--out <path>]",
        "       khinchin threshold --delta <real> --eta <real> [--rounds <int>]"
        " [--max-games <int>] [--seed <int>]",
        "       khinchin bound --epsilon <real> --eta <real>",
    ]
)


class CliError(Exception):
    """Bad invocation; message goes to stderr and the exit status is nonzero."""


class Command(enum.Enum):
    SIMULATE = "simulate"
    SWEEP = "sweep"
    THRESHOLD = "threshold"
    BOUND = "bound"
    HELP = "help"


@dataclass(frozen=True)
class SweepCommand:
    spec: SweepSpec
    mode: Mode
    out: str | None


@dataclass(frozen=True)
class ThresholdCommand:
    delta: float
    eta: float
    rounds: int
    max_games: int
    seed: int


@dataclass(frozen=True)
class ParsedCommand:
    command: Command
    payload: object = None


_INT_PREFIX = re.compile(r"\s*([+-]?\d+)")
_FLOAT_PREFIX = re.compile(r"\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)")


def _atoi(text: str) -> int:
    """C atoi: parse a leading integer, 0 when there is none."""
    m = _INT_PREFIX.match(text)
    return int(m.group(1)) if m else 0


def _atof(text: str) -> float:
    """C atof: parse a leading real number, 0.0 when there is none."""
    m = _FLOAT_PREFIX.match(text)
    return float(m.group(1)) if m else 0.0


def _parse_simulate(argv: list[str]) -> ParsedCommand:
    games_txt, delta_txt = argv[0], argv[1]
    rounds_txt = argv[2] if len(argv) > 2 else None
    games = _atoi(games_txt)
    delta = _atof(delta_txt)
    rounds = _atoi(rounds_txt) if rounds_txt is not None else DEFAULT_ROUNDS
    seed = _atoi(argv[3]) if len(argv) > 3 else DEFAULT_SEED
    if games < 3 or delta <= 0.0 or rounds < 1:
        shown_rounds = rounds_txt if rounds_txt is not None else str(rounds)
        raise CliError(
            f"games = {games_txt}, delta = {delta_txt}, rounds = {shown_rounds}"
            " must be > 0 and games > 2"
        )
    config = SimConfig(
        games=games,
        delta=delta,
        rounds=rounds,
        seed=seed,
        details=len(argv) > 4,
        mode=Mode.SERIAL,
    )
    return ParsedCommand(Command.SIMULATE, config)


def _collect_flags(args: list[str], allowed: tuple[str, ...]) -> dict[str, str]:
    values: dict[str, str] = {}
    i = 0
    while i < len(args):
        flag = args[i]
        if flag not in allowed:
            raise CliError(f"unknown flag {flag}\n{USAGE}")
        if i + 1 >= len(args):
            raise CliError(f"flag {flag} needs a value\n{USAGE}")
        values[flag] = args[i + 1]
        i += 2
    return values


def _to_int(text: str, flag: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise CliError(f"{flag} expects an integer, got {text!r}") from None


def _to_float(text: str, flag: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise CliError(f"{flag} expects a number, got {text!r}") from None


def _parse_sweep(args: list[str]) -> ParsedCommand:
    flags = _collect_flags(args, ("--games", "--delta", "--rounds", "--seed", "--mode", "--out"))
    games = (
        tuple(_to_int(part, "--games") for part in flags["--games"].split(","))
        if "--games" in flags
        else DEFAULT_GAMES_LIST
    )
    deltas = (
        tuple(_to_float(part, "--delta") for part in flags["--delta"].split(","))
        if "--delta" in flags
        else DEFAULT_DELTAS
    )
    spec = SweepSpec(
        games_list=games,
        deltas=deltas,
        rounds=_to_int(flags["--rounds"], "--rounds") if "--rounds" in flags else DEFAULT_ROUNDS,
        seed=_to_int(flags["--seed"], "--seed") if "--seed" in flags else DEFAULT_SEED,
    )
    mode_txt = flags.get("--mode", "parallel")
    if mode_txt not in ("serial", "parallel"):
        raise CliError(f"--mode expects serial or parallel, got {mode_txt!r}")
    return ParsedCommand(
        Command.SWEEP, SweepCommand(spec, Mode(mode_txt), flags.get("--out"))
    )


def _parse_threshold(args: list[str]) -> ParsedCommand:
    flags = _collect_flags(args, ("--delta", "--eta", "--rounds", "--max-games", "--seed"))
    for required in ("--delta", "--eta"):
        if required not in flags:
            raise CliError(f"threshold requires {required}\n{USAGE}")
    payload = ThresholdCommand(
        delta=_to_float(flags["--delta"], "--delta"),
        eta=_to_float(flags["--eta"], "--eta"),
        rounds=_to_int(flags["--rounds"], "--rounds") if "--rounds" in flags else DEFAULT_ROUNDS,
        max_games=_to_int(flags["--max-games"], "--max-games") if "--max-games" in flags else 1 << 20,
        seed=_to_int(flags["--seed"], "--seed") if "--seed" in flags else DEFAULT_SEED,
    )
    return ParsedCommand(Command.THRESHOLD, payload)


def _parse_bound(args: list[str]) -> ParsedCommand:
    flags = _collect_flags(args, ("--epsilon", "--eta"))
    for required in ("--epsilon", "--eta"):
        if required not in flags:
            raise CliError(f"bound requires {required}\n{USAGE}")
    query = ProkhorovQuery(
        epsilon=_to_float(flags["--epsilon"], "--epsilon"),
        eta=_to_float(flags["--eta"], "--eta"),
    )
    return ParsedCommand(Command.BOUND, query)


def parse_args(argv: list[str]) -> ParsedCommand:
    """Map an argument list to a command; numeric-leading args mean SIMULATE."""
    if argv and argv[0] == "sweep":
        return _parse_sweep(argv[1:])
    if argv and argv[0] == "threshold":
        return _parse_threshold(argv[1:])
    if argv and argv[0] == "bound":
        return _parse_bound(argv[1:])
    if len(argv) < 2:
        return ParsedCommand(Command.HELP)
    return _parse_simulate(argv)


def format_summary(report: FrequencyReport) -> str:
    """The fixed 18-token summary line."""
    return (
        f"g = {report.games} d = {report.delta:g} r = {report.rounds}"
        f" f1 = {report.f1:g} f2 = {report.f2:g} s = {report.seed}"
    )


def format_details(summary: RoundSummary) -> str:
    """The fixed 6-token per-round line."""
    return f"G = {summary.g_mean:g} A = {summary.a_mean:g}"


def _run_simulate(config: SimConfig) -> None:
    report = estimate_frequencies(config)
    if config.details and report.details is not None:
        for summary in report.details:
            print(format_details(summary))
    print(format_summary(report))


def _run_sweep(cmd: SweepCommand) -> None:
    rows = run_sweep(cmd.spec, mode=cmd.mode)
    if cmd.out is None:
        write_csv(rows, sys.stdout)
    else:
        with open(cmd.out, "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, fh)


def _run_threshold(cmd: ThresholdCommand) -> None:
    estimate = find_threshold(
        cmd.delta, cmd.eta, rounds=cmd.rounds, seed=cmd.seed, max_games=cmd.max_games
    )
    found = str(estimate.games_needed) if estimate.found else "NOT-FOUND"
    print(
        f"d = {estimate.delta:g} eta = {estimate.eta:g} r = {estimate.rounds}"
        f" N = {found} max = {estimate.max_games} s = {cmd.seed}"
    )


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        cmd = parse_args(list(argv))
        if cmd.command is Command.HELP:
            print(USAGE)
            return 0
        if cmd.command is Command.SIMULATE:
            _run_simulate(cmd.payload)
        elif cmd.command is Command.SWEEP:
            _run_sweep(cmd.payload)
        elif cmd.command is Command.THRESHOLD:
            _run_threshold(cmd.payload)
        else:
            print(f"epsilon = {cmd.payload.epsilon:g} eta = {cmd.payload.eta:g}"
                  f" n0 = {prokhorov_n0(cmd.payload)}")
    except (CliError, ValueError, OSError) as err:
        print(err, file=sys.stderr)
        return 1
    return 0
