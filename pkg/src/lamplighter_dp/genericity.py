"""Generic-case experiment: how often does a random reduced word have sigma_x = 0?

Words are drawn uniformly from the sphere S_m of reduced words of length m by
the obvious Markov chain: first letter uniform over the six tokens, each next
letter uniform over the five tokens that do not cancel the previous one.

Randomness is numpy's PCG64 seeded through ``SeedSequence``; results are
bit-reproducible across platforms for a given seed.  Bulk sampling is split
into fixed-size chunks, chunk ``i`` drawing from child stream ``i`` of the
seed, so the aggregate does not depend on how chunks are scheduled.
"""

from __future__ import annotations

import itertools
import time
from fractions import Fraction

import numpy as np

from .equation import Equation, exponent_sums
from .solver import solve

__all__ = [
    "TOKENS",
    "MarkovSampler",
    "sample_word",
    "sample_words",
    "sigma_x",
    "sigma_zero_fraction",
    "exact_sigma_zero_fraction",
    "sphere",
    "transition_matrix",
    "stationary_distribution",
    "is_stationary",
    "stationary_check",
    "experiment_rows",
    "CHUNK",
]

# token k and k ^ 1 are mutually inverse
TOKENS = ("a", "A", "t", "T", "x", "X")
CHUNK = 4096


class MarkovSampler:
    """Seeded sampler over reduced words in a, t, x and their inverses."""

    def __init__(self, seed: int = 0):
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.seed = seed
        self._seq = np.random.SeedSequence(seed)
        self.rng = np.random.Generator(np.random.PCG64(self._seq))

    def stream(self, i: int) -> np.random.Generator:
        """Independent generator for chunk ``i``; same seed and ``i`` give the same stream."""
        child = np.random.SeedSequence(self.seed, spawn_key=(i,))
        return np.random.Generator(np.random.PCG64(child))

    def __repr__(self) -> str:
        return f"MarkovSampler(seed={self.seed})"


def _draw(rng: np.random.Generator, m: int, n: int) -> np.ndarray:
    """(n, m) int8 token array; every row is a uniform element of S_m."""
    out = np.empty((n, m), dtype=np.int8)
    if m == 0:
        return out
    out[:, 0] = rng.integers(0, 6, size=n)
    if m > 1:
        r = rng.integers(0, 5, size=(n, m - 1), dtype=np.int8)
        for k in range(1, m):
            inv = out[:, k - 1] ^ 1
            step = r[:, k - 1]
            out[:, k] = step + (step >= inv)
    return out


def sample_words(m: int, n: int, sampler: MarkovSampler) -> np.ndarray:
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    return _draw(sampler.rng, m, n)


def sample_word(m: int, sampler: MarkovSampler) -> Equation:
    row = sample_words(m, 1, sampler)[0]
    return Equation(tuple(TOKENS[k] for k in row))


def sigma_x(tokens: np.ndarray) -> np.ndarray:
    """Row-wise exponent sum of x for a token array."""
    return (tokens == 4).sum(axis=-1, dtype=np.int64) - (tokens == 5).sum(axis=-1, dtype=np.int64)


def sigma_zero_fraction(m: int, samples: int, sampler: MarkovSampler) -> Fraction:
    """Empirical P[sigma_x(w) = 0] over ``samples`` words of S_m."""
    if samples < 1:
        raise ValueError("need at least one sample")
    hits = 0
    for i, start in enumerate(range(0, samples, CHUNK)):
        n = min(CHUNK, samples - start)
        hits += int((sigma_x(_draw(sampler.stream(i), m, n)) == 0).sum())
    return Fraction(hits, samples)


def sphere(m: int):
    """All reduced words of length m, in lexicographic token order."""
    for combo in itertools.product(range(6), repeat=m):
        if all(combo[k] != combo[k - 1] ^ 1 for k in range(1, m)):
            yield Equation(tuple(TOKENS[k] for k in combo))


def exact_sigma_zero_fraction(m: int) -> Fraction:
    words = list(sphere(m))
    return Fraction(sum(1 for w in words if exponent_sums(w)[2] == 0), len(words))


# -- the lumped chain on {x^-1, other, x} ------------------------------------------

def transition_matrix() -> list[list[Fraction]]:
    f = Fraction
    return [
        [f(1, 5), f(4, 5), f(0)],
        [f(1, 5), f(3, 5), f(1, 5)],
        [f(0), f(4, 5), f(1, 5)],
    ]


def stationary_distribution() -> list[Fraction]:
    return [Fraction(1, 6), Fraction(2, 3), Fraction(1, 6)]


def is_stationary(pi, M) -> bool:
    n = len(pi)
    return all(sum(pi[i] * M[i][j] for i in range(n)) == pi[j] for j in range(n))


def stationary_check() -> bool:
    M = transition_matrix()
    pi = stationary_distribution()
    return all(sum(row) == 1 for row in M) and sum(pi) == 1 and is_stationary(pi, M)


# -- experiment table ------------------------------------------------------------------

def experiment_rows(ms, samples: int, seed: int, timed: int = 50):
    """Yield (m, samples, fraction_sigma_zero, mean_fastpath_time) rows.

    The timing column averages ``solve`` over up to ``timed`` sampled words
    with sigma_x != 0 (NaN when there are none).
    """
    for m in ms:
        sampler = MarkovSampler(seed)
        frac = sigma_zero_fraction(m, samples, sampler)
        tokens = sample_words(m, timed, sampler) if timed else np.empty((0, m), dtype=np.int8)
        times = []
        for row in tokens:
            w = Equation(tuple(TOKENS[k] for k in row))
            if exponent_sums(w)[2] == 0:
                continue
            t0 = time.perf_counter()
            solve(w)
            times.append(time.perf_counter() - t0)
        mean_t = sum(times) / len(times) if times else float("nan")
        yield m, samples, float(frac), mean_t
