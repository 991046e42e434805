"""Exact uniform sampling of reduced words and seeded Monte Carlo estimates.

A word is built left to right.  At each step the current permutation w
has count(w) reduced words, partitioned by first letter i over the left
descents into blocks of size count(s_i w).  Drawing a uniform integer
in [0, count(w)) and selecting the block that brackets it makes every
complete word exactly equally likely; no rejection, no bias.

Per-trial generators are derived by hashing (seed, trial index) with
SHA-256 and seeding a Mersenne Twister with the 256-bit digest.  The
derivation is fixed, so a run split across any number of workers draws
the identical words for the identical trial indices, and exact integer
totals make the aggregation order-independent.
"""

from __future__ import annotations

import hashlib
import math
import random
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .permutations import longest_element
from .words import CountingSession, Word, word_stats


def trial_generator(seed: int, index: int) -> random.Random:
    """Deterministic generator for one trial of one seeded run.

    seed must fit in a signed 64-bit integer, index in an unsigned one.
    """
    key = hashlib.sha256(struct.pack("<qQ", seed, index)).digest()
    return random.Random(int.from_bytes(key, "big"))


def sample_word(
    n: int,
    rng: random.Random,
    session: CountingSession | None = None,
) -> Word:
    """One reduced word of the longest element, exactly uniform.

    Reuses the given counting session; a fresh one is built (and fully
    warmed) otherwise, which dominates the cost of a single draw.
    """
    if n < 2:
        raise ValueError(f"degree must be at least 2, got {n}")
    if session is None:
        session = CountingSession(n)
    w0 = longest_element(n)
    remaining = session.count(w0)
    memo = session._memo
    w = list(w0)
    pos = list(range(n, -1, -1))  # pos[v] = index of value v in w0, pos[0] unused
    letters = []
    for _ in range(n * (n - 1) // 2):
        r = rng.randrange(remaining)
        chosen = 0
        for i in range(1, n):
            a, b = pos[i], pos[i + 1]
            if a > b:
                # tentatively swap the values i, i+1 and look the child up
                w[a] = i + 1
                w[b] = i
                block = memo[tuple(w)]
                if r < block:
                    pos[i], pos[i + 1] = b, a
                    remaining = block
                    chosen = i
                    break
                r -= block
                w[a] = i
                w[b] = i + 1
        assert chosen, "draw not bracketed; counting table inconsistent"
        letters.append(chosen)
    return tuple(letters)


@dataclass(frozen=True)
class SampleSummary:
    """Aggregated Monte Carlo estimates for one (n, trials, seed) run.

    Totals are exact integers; means and standard errors are derived
    from them at the end.  Standard errors use the unbiased sample
    variance and are NaN when trials == 1.
    """

    n: int
    trials: int
    seed: int
    word_length: int
    mean_commutations: float
    se_commutations: float
    mean_noncommuting: float
    se_noncommuting: float
    mean_braids: float
    se_braids: float
    total_commutations: int
    total_noncommuting: int
    total_braids: int

    def __post_init__(self):
        expected = self.trials * (self.word_length - 1)
        if self.total_commutations + self.total_noncommuting != expected:
            raise ValueError(
                f"totals {self.total_commutations} + {self.total_noncommuting} "
                f"do not sum to trials * (length - 1) = {expected}"
            )


def _mean_and_se(total: int, total_sq: int, trials: int) -> tuple[float, float]:
    mean = float(Fraction(total, trials))
    if trials < 2:
        return mean, math.nan
    variance = Fraction(trials * total_sq - total * total, trials * (trials - 1))
    return mean, math.sqrt(float(variance) / trials)


def monte_carlo(
    n: int,
    trials: int,
    seed: int,
    workers: int = 1,
    session: CountingSession | None = None,
) -> SampleSummary:
    """Draw `trials` words and summarize the three statistics.

    Bit-identical output for fixed (n, trials, seed) regardless of
    `workers`: trials are indexed, generators are derived per index,
    and per-chunk exact totals are merged in index order.
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    if session is None:
        session = CountingSession(n)
    session.count(longest_element(n))  # warm the table before sharing it

    def run_chunk(bounds: tuple[int, int]) -> tuple[int, ...]:
        totals = [0] * 6
        for index in range(*bounds):
            stats = word_stats(sample_word(n, trial_generator(seed, index), session))
            totals[0] += stats.commutations
            totals[1] += stats.noncommuting
            totals[2] += stats.braids
            totals[3] += stats.commutations**2
            totals[4] += stats.noncommuting**2
            totals[5] += stats.braids**2
        return tuple(totals)

    if workers == 1:
        chunk_totals = [run_chunk((0, trials))]
    else:
        step = -(-trials // workers)
        bounds = [
            (start, min(start + step, trials)) for start in range(0, trials, step)
        ]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunk_totals = list(pool.map(run_chunk, bounds))

    sc, snc, sb, sc2, snc2, sb2 = (
        sum(chunk[k] for chunk in chunk_totals) for k in range(6)
    )
    mean_c, se_c = _mean_and_se(sc, sc2, trials)
    mean_n, se_n = _mean_and_se(snc, snc2, trials)
    mean_b, se_b = _mean_and_se(sb, sb2, trials)
    return SampleSummary(
        n=n,
        trials=trials,
        seed=seed,
        word_length=n * (n - 1) // 2,
        mean_commutations=mean_c,
        se_commutations=se_c,
        mean_noncommuting=mean_n,
        se_noncommuting=se_n,
        mean_braids=mean_b,
        se_braids=se_b,
        total_commutations=sc,
        total_noncommuting=snc,
        total_braids=sb,
    )
