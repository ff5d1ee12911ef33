"""Independent ground-truth generators for validating the dual-code path.

Everything here deliberately avoids the MacWilliams machinery: spectra
come from enumerating actual codewords, probabilities from enumerating
actual error patterns or sampling the channel.  Slow but trustworthy.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import gf2
from .errors import DomainError, UnsupportedSizeError
from .spectrum import WeightDistribution

#: Information-bit cap for full codeword enumeration (2^k words).
BRUTE_FORCE_INFO_CAP = 24

#: Default cap on the number of error patterns exhaustive_pue may visit.
PATTERN_BUDGET = 1 << 24

#: Default seed for reproducible simulation runs.
DEFAULT_SEED = 0


def brute_force_spectrum(spec):
    """Primal weight distribution by enumerating all 2^k codewords.

    Builds the systematic basis (one codeword per information monomial)
    and spans it by repeated doubling in a numpy array, so the cost is
    one XOR plus one popcount per codeword.
    """
    if spec.k > BRUTE_FORCE_INFO_CAP:
        raise UnsupportedSizeError(
            f"2^{spec.k} codewords exceed the enumeration budget (k <= {BRUTE_FORCE_INFO_CAP})"
        )
    if spec.n > 63:
        raise UnsupportedSizeError("codewords must fit one machine word")
    basis = [
        (1 << (spec.p + t)) ^ gf2.mod(1 << (spec.p + t), spec.g)
        for t in range(spec.k)
    ]
    words = np.zeros(1 << spec.k, dtype=np.uint64)
    size = 1
    for b in basis:
        words[size : 2 * size] = words[:size] ^ np.uint64(b)
        size *= 2
    hist = np.bincount(np.bitwise_count(words), minlength=spec.n + 1)
    counts = {int(w): int(c) for w, c in enumerate(hist) if c}
    return WeightDistribution(spec.n, "primal", counts)


def exhaustive_pue(spec, eps, max_weight, budget=PATTERN_BUDGET):
    """Undetected-error probability by direct error-pattern enumeration.

    Walks every pattern of weight 1..max_weight, keeps those divisible
    by g, and sums their channel probabilities.  Equals the true P_ue
    when max_weight = n.
    """
    if not 0.0 <= eps <= 0.5:
        raise DomainError(f"crossover probability {eps} outside [0, 1/2]")
    if not 1 <= max_weight <= spec.n:
        raise DomainError(f"max_weight {max_weight} outside [1, {spec.n}]")
    total_patterns = sum(math.comb(spec.n, w) for w in range(1, max_weight + 1))
    if total_patterns > budget:
        raise UnsupportedSizeError(
            f"{total_patterns} patterns exceed the budget of {budget}"
        )
    g = spec.g
    prob = 0.0
    for w in range(1, max_weight + 1):
        hits = 0
        for positions in itertools.combinations(range(spec.n), w):
            e = 0
            for j in positions:
                e |= 1 << j
            if gf2.mod(e, g) == 0:
                hits += 1
        if hits and eps > 0.0:
            prob += hits * math.exp(
                w * math.log(eps) + (spec.n - w) * math.log1p(-eps)
            )
    return prob


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo estimate of P_ue with its sampling uncertainty."""

    trials: int
    undetected: int
    estimate: float
    stderr: float
    seed: int
    workers: int

    def to_json_dict(self):
        return {
            "schema": "crcselect.mc/1",
            "trials": self.trials,
            "undetected": self.undetected,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "seed": self.seed,
            "workers": self.workers,
        }


_MC_BATCH = 1 << 20


def monte_carlo_pue(spec, eps, trials, seed=DEFAULT_SEED, workers=1):
    """Estimate P_ue by sampling BSC error patterns on the zero codeword.

    By linearity an error is undetected exactly when the pattern itself
    is a nonzero codeword, so the transmitted word never matters.  Bits
    are drawn i.i.d. Bernoulli(eps) per position with numpy's Philox
    counter-based generator; the trial budget is split into ``workers``
    slices seeded via SeedSequence.spawn, and slice counts are summed,
    so the result depends only on (seed, trials, workers).
    """
    if not 0.0 <= eps <= 0.5:
        raise DomainError(f"crossover probability {eps} outside [0, 1/2]")
    if trials < 1:
        raise DomainError("at least one trial required")
    if workers < 1:
        raise DomainError("at least one worker required")
    from .codec import check_columns

    cols = np.array(check_columns(spec.g, spec.n), dtype=np.uint32)
    children = np.random.SeedSequence(seed).spawn(workers)
    share, extra = divmod(trials, workers)
    undetected = 0
    for widx in range(workers):
        quota = share + (1 if widx < extra else 0)
        rng = np.random.Generator(np.random.Philox(children[widx]))
        while quota:
            batch = min(quota, _MC_BATCH)
            syndrome = np.zeros(batch, dtype=np.uint32)
            touched = np.zeros(batch, dtype=bool)
            for j in range(spec.n):
                flips = rng.random(batch) < eps
                syndrome[flips] ^= cols[j]
                touched |= flips
            undetected += int(np.count_nonzero((syndrome == 0) & touched))
            quota -= batch
    estimate = undetected / trials
    stderr = math.sqrt(estimate * (1.0 - estimate) / trials)
    return McEstimate(trials, undetected, estimate, stderr, seed, workers)
