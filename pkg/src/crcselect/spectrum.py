"""Weight spectra and minimum-distance profiles via the dual code.

A CRC code of length n with p check bits has 2^(n-p) codewords, far too
many to enumerate at the lengths of interest.  Its dual code has only
2^p words, one per parity vector u: the word (<u,h_0>, ..., <u,h_{n-1}>)
where h_j = x^j mod g are the parity-check columns.  :class:`DualSweep`
keeps all 2^p dual-word weights in a numpy table (uint16, 32 MiB at
p = 24) and extends them length by length; each extension adds the
parity of u AND h_n to entry u.

From the dual weight histogram B_i the primal counts follow exactly:

    A_j = 2^-p * sum_i B_i * K_j(i; n)

with K_j the binary Krawtchouk polynomial, evaluated here over arbitrary
precision integers (the terms cancel massively; at n = 8448, j = 14 they
exceed 10^40, so floats would be useless).  The minimum distance is the
first j >= 1 with A_j > 0.  Sweeping n upward and restarting the j scan
no higher than the previous distance (shortening can only lower d) gives
the per-length profile of an entire interval from a single sweep.
"""

from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import gf2
from .errors import ConsistencyError, DomainError, UnsupportedSizeError

#: Largest supported check-bit count for dual enumeration (2^p weight table).
MAX_CHECK_BITS = 24

#: Rows per chunk in sweep updates, sized to keep chunks cache resident.
_CHUNK_ELEMS = 1 << 20


@dataclass(frozen=True)
class WeightDistribution:
    """Exact codeword counts by weight for one code of length n.

    ``counts`` is sparse: only weights with a nonzero count appear.
    ``side`` says whether the counts describe the code itself (primal,
    total 2^(n-p)) or its dual (total 2^p).
    """

    n: int
    side: Literal["primal", "dual"]
    counts: dict

    def __post_init__(self):
        if self.side not in ("primal", "dual"):
            raise DomainError(f"side must be 'primal' or 'dual': {self.side!r}")
        if self.counts.get(0) != 1:
            raise ConsistencyError("weight-0 count must be exactly 1")
        total = self.total()
        if total & (total - 1):
            raise ConsistencyError(f"total count {total} is not a power of two")
        for w, c in self.counts.items():
            if not 0 <= w <= self.n or c < 0:
                raise ConsistencyError(f"bad entry weight={w} count={c}")

    def total(self):
        return sum(self.counts.values())

    def log2_total(self):
        return self.total().bit_length() - 1

    def to_json_dict(self):
        return {
            "schema": "crcselect.spectrum/1",
            "n": self.n,
            "side": self.side,
            "counts": {str(w): c for w, c in sorted(self.counts.items())},
        }


class DualSweep:
    """Incremental dual-code weight table for one generator polynomial.

    Owns a 2^p table of current dual-codeword weights at length ``n``.
    ``extend`` advances to n+1 in one vectorised pass.  The table is
    split into (high bits, low bits) planes so per-step parities are
    computed from two small index tables instead of 2^p popcounts.
    Instances are single-owner: mutate from one thread only.
    """

    def __init__(self, g):
        gf2.require_generator(g)
        p = gf2.degree(g)
        if p > MAX_CHECK_BITS:
            raise UnsupportedSizeError(
                f"dual sweep needs a 2^{p} weight table (cap p <= {MAX_CHECK_BITS})"
            )
        self.g = g
        self.p = p
        self.order = gf2.order(g)
        self._lo_bits = min(p, 16)
        self._hi_bits = p - self._lo_bits
        self._lo_idx = np.arange(1 << self._lo_bits, dtype=np.uint32)
        self._hi_idx = np.arange(1 << self._hi_bits, dtype=np.uint32)
        hi_pop = np.bitwise_count(self._hi_idx).astype(np.uint16)
        lo_pop = np.bitwise_count(self._lo_idx).astype(np.uint16)
        self._w = hi_pop[:, None] + lo_pop[None, :]
        self._row_chunk = max(1, _CHUNK_ELEMS >> self._lo_bits)
        self.n = p
        self._h_next = g ^ (1 << p)  # x^p mod g

    def _parities(self):
        """Per-plane parity increments for the next column h_n."""
        h = self._h_next
        lo_mask = (1 << self._lo_bits) - 1
        par_lo = (np.bitwise_count(self._lo_idx & np.uint32(h & lo_mask)) & 1).astype(
            np.uint16
        )
        par_hi = (
            np.bitwise_count(self._hi_idx & np.uint32(h >> self._lo_bits)) & 1
        ).astype(np.uint16)
        return par_hi, par_lo

    def _advance_column(self):
        self.n += 1
        h = self._h_next << 1
        if h & (1 << self.p):
            h ^= self.g
        self._h_next = h

    def _require_extendable(self):
        if self.n + 1 > self.order:
            raise DomainError(
                f"cannot extend past the generator's order {self.order}"
            )

    def extend(self):
        """Advance the table from length n to n+1."""
        self._require_extendable()
        par_hi, par_lo = self._parities()
        w = self._w
        step = self._row_chunk
        for r0 in range(0, w.shape[0], step):
            w[r0 : r0 + step] += par_hi[r0 : r0 + step, None] ^ par_lo[None, :]
        self._advance_column()

    def histogram(self):
        """Dual weight counts at the current length: int64, index = weight."""
        hist = np.zeros(self.n + 1, dtype=np.int64)
        w = self._w
        step = self._row_chunk
        for r0 in range(0, w.shape[0], step):
            part = np.bincount(w[r0 : r0 + step].ravel())
            hist[: part.size] += part
        return hist

    def extend_with_histogram(self):
        """Fused extend + histogram; one traversal of the weight table."""
        self._require_extendable()
        par_hi, par_lo = self._parities()
        hist = np.zeros(self.n + 2, dtype=np.int64)
        w = self._w
        step = self._row_chunk
        for r0 in range(0, w.shape[0], step):
            block = w[r0 : r0 + step]
            block += par_hi[r0 : r0 + step, None] ^ par_lo[None, :]
            part = np.bincount(block.ravel())
            hist[: part.size] += part
        self._advance_column()
        return hist

    def weight_table(self):
        """Copy of the 2^p weight entries, indexed by parity vector u."""
        return self._w.ravel().copy()

    def distribution(self):
        """Sparse dual WeightDistribution at the current length."""
        return WeightDistribution(self.n, "dual", _hist_to_counts(self.histogram()))


def _hist_to_counts(hist):
    idx = np.flatnonzero(hist)
    return {int(w): int(hist[w]) for w in idx}


def dual_weight_distribution(g, n):
    """Exact dual weight distribution B_i of the length-n code of g."""
    gf2.require_generator(g)
    p = gf2.degree(g)
    if not p <= n:
        raise DomainError(f"length {n} below check-bit count {p}")
    sweep = DualSweep(g)
    if n > sweep.order:
        raise DomainError(f"length {n} exceeds the generator's order {sweep.order}")
    while sweep.n < n:
        sweep.extend()
    return sweep.distribution()


def _kraw_sums(n, weights, counts):
    """Yield (j, sum_i B_i * K_j(i; n)) for j = 0, 1, 2, ... exactly.

    Uses the three-term recurrence
    (j+1) K_{j+1}(i) = (n-2i) K_j(i) - (n-j+1) K_{j-1}(i),
    which stays in integers throughout.
    """
    n2 = [n - 2 * w for w in weights]
    k_prev = [1] * len(weights)
    yield 0, sum(counts)
    k_cur = n2[:]
    j = 1
    while True:
        yield j, sum(c * k for c, k in zip(counts, k_cur))
        coef = n - j + 1
        j += 1
        k_prev, k_cur = k_cur, [
            (a * b - coef * c) // j for a, b, c in zip(n2, k_cur, k_prev)
        ]


def _checked_coefficient(s, p, n, j):
    if s < 0:
        raise ConsistencyError(f"negative Krawtchouk sum at n={n}, j={j}")
    if s & ((1 << p) - 1):
        raise ConsistencyError(f"Krawtchouk sum not divisible by 2^{p} at n={n}, j={j}")
    return s >> p


def macwilliams_coefficient(dist, j):
    """Exact primal count A_j recovered from a dual distribution."""
    if dist.side != "dual":
        raise DomainError("MacWilliams recovery starts from a dual distribution")
    if not 0 <= j <= dist.n:
        raise DomainError(f"weight {j} outside [0, {dist.n}]")
    p = dist.log2_total()
    weights = sorted(dist.counts)
    counts = [dist.counts[w] for w in weights]
    for jj, s in _kraw_sums(dist.n, weights, counts):
        if jj == j:
            return _checked_coefficient(s, p, dist.n, j)


def macwilliams_transform(dist):
    """Full primal weight distribution from a dual one (all weights)."""
    if dist.side != "dual":
        raise DomainError("MacWilliams recovery starts from a dual distribution")
    p = dist.log2_total()
    weights = sorted(dist.counts)
    counts = [dist.counts[w] for w in weights]
    primal = {}
    for j, s in _kraw_sums(dist.n, weights, counts):
        a = _checked_coefficient(s, p, dist.n, j)
        if a:
            primal[j] = a
        if j == dist.n:
            break
    return WeightDistribution(dist.n, "primal", primal)


def _first_positive(n, p, weights, counts, d_cap=None):
    """Smallest j >= 1 with A_j > 0, plus A_j, scanning j upward.

    ``d_cap`` is the distance at the previous (shorter) length: the scan
    never needs to look above it, and finding nothing below it means the
    monotonicity of shortening was violated, i.e. a bug.
    """
    limit = n if d_cap is None else d_cap
    it = _kraw_sums(n, weights, counts)
    next(it)  # j = 0 is the zero codeword
    for j, s in it:
        if s:
            return j, _checked_coefficient(s, p, n, j)
        if j >= limit:
            break
    raise ConsistencyError(f"no codeword weight found up to j={limit} at n={n}")


def min_distance(g, n):
    """Minimum distance d and minimum-weight count A_d at one length."""
    gf2.require_generator(g)
    p = gf2.degree(g)
    if not p < n:
        raise DomainError(f"length {n} must exceed check-bit count {p}")
    dist = dual_weight_distribution(g, n)
    weights = sorted(dist.counts)
    counts = [dist.counts[w] for w in weights]
    return _first_positive(n, p, weights, counts)


def _scan_lengths(g, min_len, max_len):
    """Yield (n, d, A_d, weights, counts) along one sweep of [min_len..max_len].

    Asserts along the way that d never increases with n, that A_d never
    shrinks while d holds, and that d >= 2 everywhere.
    """
    gf2.require_generator(g)
    p = gf2.degree(g)
    if not p < min_len <= max_len:
        raise DomainError(
            f"need {p} < min_len <= max_len, got [{min_len}..{max_len}]"
        )
    sweep = DualSweep(g)
    if max_len > sweep.order:
        raise DomainError(
            f"interval end {max_len} exceeds the generator's order {sweep.order}"
        )
    while sweep.n < min_len - 1:
        sweep.extend()
    if sweep.n < min_len:
        hist = sweep.extend_with_histogram()
    else:  # min_len == p is excluded above, so sweep.n == min_len here
        hist = sweep.histogram()
    d_prev = None
    a_prev = None
    while True:
        n = sweep.n
        idx = np.flatnonzero(hist)
        weights = idx.tolist()
        counts = hist[idx].tolist()
        d, a_d = _first_positive(n, p, weights, counts, d_cap=d_prev)
        if d < 2:
            raise ConsistencyError(f"distance {d} < 2 at n={n} for 0x{g:x}")
        if d_prev is not None and d == d_prev and a_d < a_prev:
            raise ConsistencyError(f"A_d dropped from {a_prev} to {a_d} at n={n}")
        yield n, d, a_d, weights, counts
        if n == max_len:
            return
        hist = sweep.extend_with_histogram()
        d_prev, a_prev = d, a_d


def profile_scan(g, min_len, max_len):
    """Yield (n, d, A_d) for every n in [min_len..max_len], one sweep."""
    for n, d, a_d, _, _ in _scan_lengths(g, min_len, max_len):
        yield n, d, a_d


def spectrum_scan(g, min_len, max_len):
    """Yield (n, dual WeightDistribution, d, A_d) per length, one sweep."""
    for n, d, a_d, weights, counts in _scan_lengths(g, min_len, max_len):
        yield n, WeightDistribution(n, "dual", dict(zip(weights, counts))), d, a_d


class ProfileBuilder:
    """Accumulates (n, d, A_d) records into runs and totals."""

    def __init__(self):
        self.runs = []
        self.a_d = []
        self.s_d = 0
        self.s_ad = 0

    def add(self, n, d, a_d):
        if self.runs and self.runs[-1][2] == d:
            start, _, _ = self.runs[-1]
            self.runs[-1] = (start, n, d)
        else:
            self.runs.append((n, n, d))
        self.a_d.append(a_d)
        self.s_d += d
        self.s_ad += a_d


@dataclass(frozen=True)
class DistanceProfile:
    """Per-length minimum distances over [min_len..max_len], as runs.

    ``runs`` is a tuple of (n_start, n_end, d) covering the interval
    contiguously with strictly decreasing d; ``a_d`` holds the exact
    minimum-weight codeword count for every length in order.
    """

    g: int
    min_len: int
    max_len: int
    runs: tuple
    a_d: tuple

    def __post_init__(self):
        expect = self.min_len
        last_d = None
        for start, end, d in self.runs:
            if start != expect or end < start:
                raise ConsistencyError("runs do not partition the interval")
            if last_d is not None and d >= last_d:
                raise ConsistencyError("run distances must strictly decrease")
            expect = end + 1
            last_d = d
        if expect != self.max_len + 1:
            raise ConsistencyError("runs do not cover the interval end")
        if len(self.a_d) != self.max_len - self.min_len + 1:
            raise ConsistencyError("one A_d value per length required")

    def d_at(self, n):
        for start, end, d in self.runs:
            if start <= n <= end:
                return d
        raise DomainError(f"length {n} outside [{self.min_len}..{self.max_len}]")

    def a_d_at(self, n):
        if not self.min_len <= n <= self.max_len:
            raise DomainError(f"length {n} outside [{self.min_len}..{self.max_len}]")
        return self.a_d[n - self.min_len]

    def run_string(self):
        return ", ".join(f"{d}:{start}-{end}" for start, end, d in self.runs)

    def to_json_dict(self):
        return {
            "schema": "crcselect.profile/1",
            "poly": gf2.format_hex(self.g),
            "min_len": self.min_len,
            "max_len": self.max_len,
            "runs": [
                {"d": d, "from": start, "to": end} for start, end, d in self.runs
            ],
            "a_d": list(self.a_d),
        }

    def csv_rows(self):
        """Rows (n, d, a_d), one per length; header not included."""
        for i, n in enumerate(range(self.min_len, self.max_len + 1)):
            yield n, self.d_at(n), self.a_d[i]


def distance_profile(g, min_len, max_len):
    """Distance profile of g over [min_len..max_len] from one dual sweep."""
    builder = ProfileBuilder()
    for n, d, a_d in profile_scan(g, min_len, max_len):
        builder.add(n, d, a_d)
    return DistanceProfile(
        g, min_len, max_len, tuple(builder.runs), tuple(builder.a_d)
    )
