#!/usr/bin/env python3
"""Throughput comparison: compiled core vs pure-Python fallback.

Times raw word generation and full game runs on each available backend and
prints a small table with the speedup.  Sizes are modest by default so the
fallback finishes quickly; scale with --words / --games.
"""

import argparse
import time

from petersburg import backend


def _rate(n, seconds):
    return n / seconds / 1e6


def bench_words(kind: str, n: int) -> float:
    core = backend.make_core(12345, kind)
    start = time.perf_counter()
    core.words(n)
    return time.perf_counter() - start


def bench_games(kind: str, games: int) -> float:
    core = backend.make_core(12345, kind)
    start = time.perf_counter()
    core.run_games(games)
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--words", type=int, default=5_000_000, help="words to draw")
    parser.add_argument("--games", type=int, default=2_000_000, help="games to play")
    args = parser.parse_args()

    kinds = ["python"]
    if backend.compiled_available():
        kinds.insert(0, "compiled")
    else:
        print("note: compiled core not built; timing the fallback only")

    word_times = {}
    game_times = {}
    for kind in kinds:
        bench_words(kind, 10_000)  # warm up
        word_times[kind] = bench_words(kind, args.words)
        game_times[kind] = bench_games(kind, args.games)

    print(f"{'backend':<10} {'words/s (M)':>12} {'games/s (M)':>12}")
    for kind in kinds:
        print(
            f"{kind:<10} {_rate(args.words, word_times[kind]):>12.1f}"
            f" {_rate(args.games, game_times[kind]):>12.1f}"
        )
    if len(kinds) == 2:
        print(
            f"speedup    {word_times['python'] / word_times['compiled']:>11.1f}x"
            f" {game_times['python'] / game_times['compiled']:>11.1f}x"
        )


if __name__ == "__main__":
    main()
