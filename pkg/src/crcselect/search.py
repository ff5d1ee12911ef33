"""Exhaustive generator-polynomial search over a length interval.

Candidates are the 2^(p-1) degree-p polynomials with constant term 1.
Reciprocal pairs generate equivalent codes, so only the numerically
smaller of each pair is evaluated, and candidates whose order falls
short of the interval end are dropped (the code would degenerate inside
the interval).  Each survivor gets a full distance profile and is ranked
by maximum S_d, ties by minimum S_Ad, residual ties by polynomial value.

Work is dispatched in fixed-size waves of candidates.  Within a wave the
early-rejection bound is frozen, so results are identical for any worker
count and for any resume point at a record boundary; the ranked-list
hash in the report makes that checkable.
"""

import hashlib
import json
import multiprocessing
import time
from dataclasses import dataclass, field, replace

from . import gf2
from .errors import CheckpointError, DomainError, UnsupportedSizeError
from .spectrum import ProfileBuilder, profile_scan

#: Candidates evaluated between early-rejection bound refreshes.  Fixed
#: independently of the worker count to keep reports schedule-invariant.
WAVE_SIZE = 64

#: Check-bit counts above this need the explicit long-run opt-in.
_LONG_RUN_THRESHOLD = 16

STATUS_EVALUATED = "evaluated"
STATUS_REJECTED_ORDER = "rejected_order"
STATUS_REJECTED_EARLY = "rejected_early"
STATUS_REJECTED_RECIPROCAL = "rejected_reciprocal"


@dataclass(frozen=True)
class EarlyReject:
    """Stop sweeping once d drops below required_d at n >= length_threshold."""

    length_threshold: int
    required_d: int

    def __post_init__(self):
        if self.required_d < 2:
            raise DomainError("required_d must be at least 2")


def default_early_reject(min_len, max_len):
    """The stock rejection rule for large searches: demand d >= 6 beyond
    the first eighth of the interval."""
    return EarlyReject(min_len + (max_len - min_len) // 8, 6)


@dataclass(frozen=True)
class SearchConfig:
    p: int
    min_len: int
    max_len: int
    early_reject: EarlyReject | None = None
    workers: int = 1
    checkpoint_path: str | None = None
    top_k: int = 10
    long_run: bool = False

    def __post_init__(self):
        if not 1 <= self.p <= 24:
            raise DomainError(f"check-bit count {self.p} outside [1, 24]")
        if not self.p < self.min_len <= self.max_len:
            raise DomainError(
                f"need {self.p} < min_len <= max_len, got [{self.min_len}..{self.max_len}]"
            )
        if self.workers < 1 or self.top_k < 1:
            raise DomainError("workers and top_k must be positive")

    def digest(self):
        """Hash of the result-determining fields (not workers/paths)."""
        payload = {
            "p": self.p,
            "min_len": self.min_len,
            "max_len": self.max_len,
            "early_reject": (
                [self.early_reject.length_threshold, self.early_reject.required_d]
                if self.early_reject
                else None
            ),
            "top_k": self.top_k,
        }
        return hashlib.sha256(
            json.dumps(payload, sort_keys=True).encode()
        ).hexdigest()


@dataclass(frozen=True)
class EvalResult:
    """One candidate's scorecard, or the reason it was skipped."""

    g: int
    order: int
    status: str
    s_d: int | None = None
    s_ad: int | None = None
    runs: tuple = ()
    a_d: tuple = ()
    reject_at: int | None = None
    s_d_bound: int | None = None

    def to_dict(self):
        return {
            "poly": gf2.format_hex(self.g),
            "reciprocal": gf2.format_hex(gf2.reciprocal(self.g)),
            "order": self.order,
            "status": self.status,
            "s_d": self.s_d,
            "s_ad": self.s_ad,
            "runs": [list(r) for r in self.runs],
            "a_d": list(self.a_d),
            "reject_at": self.reject_at,
            "s_d_bound": self.s_d_bound,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            g=gf2.parse_hex(data["poly"]),
            order=data["order"],
            status=data["status"],
            s_d=data["s_d"],
            s_ad=data["s_ad"],
            runs=tuple(tuple(r) for r in data["runs"]),
            a_d=tuple(data["a_d"]),
            reject_at=data.get("reject_at"),
            s_d_bound=data.get("s_d_bound"),
        )


def candidate_pool(p):
    """All degree-p polynomials with constant term 1, ascending."""
    return range((1 << p) | 1, 1 << (p + 1), 2)


def enumerate_candidates(p, max_len):
    """Candidate generators for codes up to max_len, one per reciprocal pair.

    Keeps the numerically smaller of each reciprocal pair, then drops
    polynomials whose order is below max_len.  Ascending, deterministic.
    """
    for g in candidate_pool(p):
        if gf2.reciprocal(g) < g:
            continue
        if not gf2.order_at_least(g, max_len):
            continue
        yield g


def _survivors_with_stats(p, max_len):
    total = 0
    after_dedup = 0
    survivors = []
    for g in candidate_pool(p):
        total += 1
        if gf2.reciprocal(g) < g:
            continue
        after_dedup += 1
        if gf2.order_at_least(g, max_len):
            survivors.append(g)
    return survivors, {
        "candidates_total": total,
        "after_reciprocal_dedup": after_dedup,
        "after_order_filter": len(survivors),
    }


def evaluate_candidate(g, config, reject_below=None):
    """Profile one candidate over the configured interval.

    When the early-rejection rule trips at some length, the partial S_d
    plus (current d) * (remaining lengths) bounds the final score from
    above; the candidate is abandoned only if that bound falls below
    ``reject_below`` (the incumbent k-th best), so no ranked result can
    be lost.  Rejections are statuses, never errors.
    """
    n_c = gf2.order(g)
    if n_c < config.max_len:
        return EvalResult(g, n_c, STATUS_REJECTED_ORDER)
    er = config.early_reject
    builder = ProfileBuilder()
    for n, d, a_d in profile_scan(g, config.min_len, config.max_len):
        builder.add(n, d, a_d)
        if (
            er is not None
            and reject_below is not None
            and n >= er.length_threshold
            and d < er.required_d
        ):
            bound = builder.s_d + d * (config.max_len - n)
            if bound < reject_below:
                return EvalResult(
                    g,
                    n_c,
                    STATUS_REJECTED_EARLY,
                    reject_at=n,
                    s_d_bound=bound,
                )
    return EvalResult(
        g,
        n_c,
        STATUS_EVALUATED,
        s_d=builder.s_d,
        s_ad=builder.s_ad,
        runs=tuple(builder.runs),
        a_d=tuple(builder.a_d),
    )


def rank(results, top_k):
    """Evaluated results ordered by S_d desc, S_Ad asc, polynomial asc."""
    evaluated = [r for r in results if r.status == STATUS_EVALUATED]
    evaluated.sort(key=lambda r: (-r.s_d, r.s_ad, r.g))
    return evaluated[:top_k]


def ranked_list_hash(ranked):
    payload = [r.to_dict() for r in ranked]
    for entry in payload:
        entry.pop("reject_at")
        entry.pop("s_d_bound")
    return hashlib.sha256(
        json.dumps(payload, sort_keys=True).encode()
    ).hexdigest()


@dataclass
class SearchReport:
    config: SearchConfig
    stats: dict
    ranked: list
    timings: dict = field(default_factory=dict)
    ranked_hash: str = ""

    def to_json_dict(self):
        return {
            "schema": "crcselect.search/1",
            "config": {
                "p": self.config.p,
                "min_len": self.config.min_len,
                "max_len": self.config.max_len,
                "early_reject": (
                    [
                        self.config.early_reject.length_threshold,
                        self.config.early_reject.required_d,
                    ]
                    if self.config.early_reject
                    else None
                ),
                "top_k": self.config.top_k,
                "workers": self.config.workers,
            },
            "stats": self.stats,
            "results": [r.to_dict() for r in self.ranked],
            "timings": self.timings,
            "ranked_hash": self.ranked_hash,
        }

    def format_table(self):
        lines = [
            f"search p={self.config.p} interval=[{self.config.min_len}..{self.config.max_len}]",
            (
                "candidates: {candidates_total} total, "
                "{after_reciprocal_dedup} after reciprocal dedup, "
                "{after_order_filter} with sufficient order".format(**self.stats)
            ),
            f"{'rank':>4}  {'poly':>8}  {'recip':>8}  {'order':>8}  {'S_d':>8}  {'S_Ad':>12}  runs",
        ]
        for i, r in enumerate(self.ranked, 1):
            runs = ", ".join(f"{d}:{a}-{b}" for a, b, d in r.runs)
            lines.append(
                f"{i:>4}  {gf2.format_hex(r.g):>8}  {gf2.format_hex(gf2.reciprocal(r.g)):>8}  "
                f"{r.order:>8}  {r.s_d:>8}  {r.s_ad:>12}  {runs}"
            )
        lines.append(f"ranked-list hash: {self.ranked_hash}")
        return "\n".join(lines)


class _Checkpoint:
    """Append-only JSON-lines record of per-candidate results.

    The header binds the config digest; resuming under a different
    config is an explicit error.  A torn final line (killed mid-write)
    is tolerated; anything else malformed is corruption.
    """

    def __init__(self, path, config):
        self.path = path
        self.digest = config.digest()
        self.done = {}
        self._handle = None

    def load(self):
        try:
            with open(self.path, encoding="utf-8") as fh:
                lines = fh.read().split("\n")
        except FileNotFoundError:
            return
        if not lines or not lines[0].strip():
            raise CheckpointError(f"checkpoint {self.path} has no header")
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError as exc:
            raise CheckpointError(f"checkpoint {self.path} header unreadable") from exc
        if header.get("kind") != "header" or "config_digest" not in header:
            raise CheckpointError(f"checkpoint {self.path} header malformed")
        if header["config_digest"] != self.digest:
            raise CheckpointError(
                f"checkpoint {self.path} was written for a different search config"
            )
        body = [ln for ln in lines[1:] if ln.strip()]
        for pos, line in enumerate(body):
            try:
                record = json.loads(line)
                if record.get("kind") != "result":
                    raise ValueError("not a result record")
                self.done[record["index"]] = EvalResult.from_dict(record["result"])
            except (ValueError, KeyError) as exc:
                if pos == len(body) - 1 and lines[-1].strip():
                    # torn trailing line from a kill mid-append
                    break
                raise CheckpointError(
                    f"checkpoint {self.path} corrupted at record {pos}"
                ) from exc

    def open_for_append(self):
        fresh = not self.done
        try:
            with open(self.path, encoding="utf-8") as fh:
                fresh = not fh.readline().strip()
        except FileNotFoundError:
            fresh = True
        self._handle = open(self.path, "a", encoding="utf-8")
        if fresh:
            self._handle.write(
                json.dumps(
                    {"kind": "header", "version": 1, "config_digest": self.digest}
                )
                + "\n"
            )
            self._handle.flush()

    def record(self, index, result):
        if self._handle is None:
            return
        self._handle.write(
            json.dumps({"kind": "result", "index": index, "result": result.to_dict()})
            + "\n"
        )
        self._handle.flush()

    def close(self):
        if self._handle is not None:
            self._handle.close()
            self._handle = None


def _solo_config(config):
    """Strip process-level fields so workers pickle the bare contract."""
    return replace(config, workers=1, checkpoint_path=None)


def _eval_star(args):
    g, config, reject_below = args
    return evaluate_candidate(g, config, reject_below)


def run_search(config):
    """Evaluate every qualifying candidate and rank the results.

    The report (including its ranked-list hash) is identical for any
    worker count and for any checkpoint resume, because candidate order,
    wave boundaries, and the per-wave rejection bound are all fixed by
    the config alone.
    """
    if config.p > _LONG_RUN_THRESHOLD and not config.long_run:
        raise UnsupportedSizeError(
            f"full search at p={config.p} is a long-run mode; set long_run to confirm"
        )
    timings = {}
    t0 = time.perf_counter()
    survivors, stats = _survivors_with_stats(config.p, config.max_len)
    timings["enumerate_s"] = round(time.perf_counter() - t0, 3)

    checkpoint = None
    if config.checkpoint_path is not None:
        checkpoint = _Checkpoint(config.checkpoint_path, config)
        checkpoint.load()
        checkpoint.open_for_append()

    solo = _solo_config(config)
    pool = None
    if config.workers > 1:
        pool = multiprocessing.get_context().Pool(config.workers)
    t1 = time.perf_counter()
    results = []
    best_scores = []  # s_d of evaluated results, descending, len <= top_k
    try:
        for w0 in range(0, len(survivors), WAVE_SIZE):
            wave = survivors[w0 : w0 + WAVE_SIZE]
            frozen = (
                best_scores[config.top_k - 1]
                if len(best_scores) >= config.top_k
                else None
            )
            todo = [
                (i, g)
                for i, g in enumerate(wave, start=w0)
                if checkpoint is None or i not in checkpoint.done
            ]
            jobs = [(g, solo, frozen) for _, g in todo]
            if pool is not None and len(jobs) > 1:
                fresh = pool.map(_eval_star, jobs)
            else:
                fresh = [_eval_star(job) for job in jobs]
            by_index = dict(zip((i for i, _ in todo), fresh))
            for i in range(w0, w0 + len(wave)):
                if checkpoint is not None and i in checkpoint.done:
                    result = checkpoint.done[i]
                else:
                    result = by_index[i]
                    if checkpoint is not None:
                        checkpoint.record(i, result)
                results.append(result)
                if result.status == STATUS_EVALUATED:
                    best_scores.append(result.s_d)
                    best_scores.sort(reverse=True)
                    del best_scores[config.top_k :]
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        if checkpoint is not None:
            checkpoint.close()
    timings["evaluate_s"] = round(time.perf_counter() - t1, 3)

    ranked = rank(results, config.top_k)
    stats = dict(stats)
    stats["evaluated"] = sum(1 for r in results if r.status == STATUS_EVALUATED)
    stats["rejected_early"] = sum(
        1 for r in results if r.status == STATUS_REJECTED_EARLY
    )
    timings["total_s"] = round(time.perf_counter() - t0, 3)
    return SearchReport(
        config=config,
        stats=stats,
        ranked=ranked,
        timings=timings,
        ranked_hash=ranked_list_hash(ranked),
    )
