"""
Empirical complexity harness.

The decision procedure should scale like the square of the word length and
the square of the singular degree (for a fixed strand count).  The harness
times seeded queries over two sweeps, one in word length at fixed degree
and one in degree at fixed length, records wall times and operation counts
per cell, and fits log-log slopes.  Equal inputs are produced by relation
rewriting and unequal inputs by an invariant-breaking perturbation, so the
ground truth never depends on the system under test; every verdict is
checked against it and mismatches are reported in the output.
"""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass

from . import stats
from .decide import decide_equal
from .rewriting import random_word, rewrite_chain
from .singular import SingularWord, sigma_letter


@dataclass
class BenchParams:
    strands: int = 5
    trials: int = 3
    max_len: int = 400
    max_sing: int = 8
    seed: int = 0
    rewrite_steps: int = 20


def length_sweep(max_len: int) -> list[int]:
    values = sorted({max(10, max_len // 8), max_len // 4, max_len // 2, max_len})
    return [v for v in values if v >= 10]


def singular_sweep(max_sing: int) -> list[int]:
    values = []
    v = 1
    while v <= max_sing:
        values.append(v)
        v *= 2
    return values


def build_equal_pair(
    rng: random.Random, n: int, length: int, degree: int, steps: int
) -> tuple[SingularWord, SingularWord]:
    w1 = random_word(rng, n, length, degree)
    w2 = rewrite_chain(w1, steps, rng)
    return w1, w2


def build_unequal_pair(
    rng: random.Random, n: int, length: int, degree: int, steps: int
) -> tuple[SingularWord, SingularWord]:
    """A pair that differs in the monoid but passes the cheap filters.

    The second word gets an extra σ_i^2 inserted: the permutation and the
    singular degree are preserved, but the σ exponent sum (an invariant of
    every defining relation) changes, so the words are certainly unequal.
    """
    w1 = random_word(rng, n, length, degree)
    w2 = rewrite_chain(w1, steps, rng)
    i = rng.randint(1, n - 1)
    slot = rng.randint(0, len(w2.letters))
    pair = (sigma_letter(i), sigma_letter(i))
    w2 = SingularWord(n, w2.letters[:slot] + pair + w2.letters[slot:])
    return w1, w2


def _fit_slope(sizes: list[int], times: list[float]) -> float | None:
    """Least-squares slope of log(time) against log(size)."""
    points = [(math.log(s), math.log(t)) for s, t in zip(sizes, times) if t > 0]
    if len(points) < 2:
        return None
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    denom = sum((x - mean_x) ** 2 for x in xs)
    if denom == 0:
        return None
    return sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys)) / denom


def _run_cell(
    params: BenchParams, rng: random.Random, length: int, degree: int
) -> dict:
    times: list[float] = []
    nf_calls: list[int] = []
    eta_expansions: list[int] = []
    verdict_errors = 0
    for trial in range(params.trials):
        expect_equal = trial % 2 == 0
        builder = build_equal_pair if expect_equal else build_unequal_pair
        w1, w2 = builder(rng, params.strands, length, degree, params.rewrite_steps)
        stats.reset()
        start = time.perf_counter()
        verdict = decide_equal(w1, w2)
        elapsed = time.perf_counter() - start
        counts = stats.COUNTS.snapshot()
        times.append(elapsed)
        nf_calls.append(counts["normal_form_calls"])
        eta_expansions.append(counts["eta_expansions"])
        if verdict.equal != expect_equal:
            verdict_errors += 1
    cell = {
        "word_length": length,
        "singular_degree": degree,
        "trials": params.trials,
        "mean_normal_form_calls": statistics.fmean(nf_calls) if nf_calls else 0.0,
        "mean_eta_expansions": statistics.fmean(eta_expansions) if eta_expansions else 0.0,
        "verdict_errors": verdict_errors,
        "timing": {
            "mean_seconds": statistics.fmean(times) if times else 0.0,
            "median_seconds": statistics.median(times) if times else 0.0,
        },
    }
    return cell


def run_bench(params: BenchParams) -> dict:
    """Run both sweeps and return the JSON-ready report.

    With the same seed the report is identical run to run except for the
    entries under "timing".
    """
    rng = random.Random(params.seed)
    report: dict = {
        "params": {
            "strands": params.strands,
            "trials": params.trials,
            "max_len": params.max_len,
            "max_sing": params.max_sing,
            "seed": params.seed,
            "rewrite_steps": params.rewrite_steps,
        },
        "length_cells": [],
        "singular_cells": [],
        "slopes": {"length": None, "singular_degree": None},
        "fixed": {"length_sweep_degree": 2, "singular_sweep_length": 100},
    }
    if params.trials <= 0:
        return report
    for length in length_sweep(params.max_len):
        report["length_cells"].append(_run_cell(params, rng, length, 2))
    for degree in singular_sweep(params.max_sing):
        report["singular_cells"].append(_run_cell(params, rng, 100, degree))
    report["slopes"]["length"] = _fit_slope(
        [c["word_length"] for c in report["length_cells"]],
        [c["timing"]["mean_seconds"] for c in report["length_cells"]],
    )
    report["slopes"]["singular_degree"] = _fit_slope(
        [c["singular_degree"] for c in report["singular_cells"]],
        [c["timing"]["mean_seconds"] for c in report["singular_cells"]],
    )
    return report
