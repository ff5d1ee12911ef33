"""Command-line front end.

Lengths are always code lengths in bits unless a flag says payload:
``--payload-min A`` means a code length of A + p for a degree-p
generator.  Polynomials are hexadecimal with every coefficient present
(so ``61`` is x^6+x^5+1); bit 0 is the constant term, which is the
last-transmitted position.  Exit codes: 0 success, 2 usage error,
3 domain error, 4 enumeration/memory budget exceeded.
"""

import csv
import functools
import json
import sys

import click

from . import __version__, gf2, metrics, presets
from .codec import CodeSpec
from .errors import DomainError, UnsupportedSizeError
from .oracle import DEFAULT_SEED, monte_carlo_pue
from .search import EarlyReject, SearchConfig, default_early_reject, run_search
from .spectrum import distance_profile, spectrum_scan

EXIT_DOMAIN = 3
EXIT_BUDGET = 4


def payload_to_length(payload_bits, check_bits):
    """Code length for a payload: n = A + p."""
    if payload_bits < 1:
        raise DomainError(f"payload must be at least one bit, got {payload_bits}")
    return payload_bits + check_bits


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except DomainError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_DOMAIN)
        except UnsupportedSizeError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_BUDGET)

    return wrapper


def _interval_options(fn):
    fn = click.option("--min-len", type=int, default=None, help="First code length (bits).")(fn)
    fn = click.option("--max-len", type=int, default=None, help="Last code length (bits).")(fn)
    fn = click.option("--payload-min", type=int, default=None, help="First payload size (bits).")(fn)
    fn = click.option("--payload-max", type=int, default=None, help="Last payload size (bits).")(fn)
    return fn


def _resolve_interval(p, min_len, max_len, payload_min, payload_max):
    by_len = min_len is not None or max_len is not None
    by_payload = payload_min is not None or payload_max is not None
    if by_len and by_payload:
        raise click.UsageError("give either --min-len/--max-len or --payload-min/--payload-max, not both")
    if by_payload:
        if payload_min is None or payload_max is None:
            raise click.UsageError("both --payload-min and --payload-max are required")
        return payload_to_length(payload_min, p), payload_to_length(payload_max, p)
    if min_len is None or max_len is None:
        raise click.UsageError("both --min-len and --max-len are required")
    return min_len, max_len


_FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table",
    help="Output format.",
)


@click.group()
@click.version_option(version=__version__, prog_name="crcselect")
def main():
    """Evaluate and search CRC generator polynomials over length intervals."""


def _analysis_payload(g, min_len, max_len):
    profile = distance_profile(g, min_len, max_len)
    score = metrics.cumulative_scores(profile)
    return {
        "schema": "crcselect.analysis/1",
        "poly": gf2.format_hex(g),
        "terms": gf2.to_terms(g),
        "reciprocal": gf2.format_hex(gf2.reciprocal(g)),
        "order": gf2.order(g),
        "min_len": min_len,
        "max_len": max_len,
        "s_d": score.s_d,
        "s_ad": score.s_ad,
        "runs": [{"d": d, "from": a, "to": b} for a, b, d in profile.runs],
        "a_d": list(profile.a_d),
    }


def _print_analysis_table(payload):
    click.echo(f"polynomial : {payload['poly']} ({payload['terms']})")
    click.echo(f"reciprocal : {payload['reciprocal']}")
    click.echo(f"order      : {payload['order']}")
    click.echo(f"interval   : [{payload['min_len']}..{payload['max_len']}]")
    click.echo(f"S_d        : {payload['s_d']}")
    click.echo(f"S_Ad       : {payload['s_ad']}")
    runs = ", ".join(f"{r['d']}:{r['from']}-{r['to']}" for r in payload["runs"])
    click.echo(f"runs       : {runs}")


@main.command()
@click.argument("poly")
@_interval_options
@_FORMAT
@_guarded
def analyze(poly, min_len, max_len, payload_min, payload_max, fmt):
    """Distance profile and cumulative scores of one polynomial."""
    g = gf2.parse_hex(poly)
    lo, hi = _resolve_interval(gf2.degree(g), min_len, max_len, payload_min, payload_max)
    payload = _analysis_payload(g, lo, hi)
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "d", "a_d"])
        for i, n in enumerate(range(lo, hi + 1)):
            d = next(r["d"] for r in payload["runs"] if r["from"] <= n <= r["to"])
            writer.writerow([n, d, payload["a_d"][i]])
    else:
        _print_analysis_table(payload)


@main.command()
@click.argument("poly_a")
@click.argument("poly_b")
@_interval_options
@click.option("--eps", "eps_list", type=float, multiple=True, default=(1e-12,),
              show_default=True, help="Crossover probability; repeatable.")
@_FORMAT
@_guarded
def compare(poly_a, poly_b, min_len, max_len, payload_min, payload_max, eps_list, fmt):
    """Per-length P_ue' comparison of POLY_A against baseline POLY_B."""
    g_a = gf2.parse_hex(poly_a)
    g_b = gf2.parse_hex(poly_b)
    if gf2.degree(g_a) != gf2.degree(g_b):
        raise click.UsageError("polynomials must have the same degree")
    if any(e <= 0.0 for e in eps_list):
        raise click.UsageError("--eps must be positive for a comparison")
    lo, hi = _resolve_interval(gf2.degree(g_a), min_len, max_len, payload_min, payload_max)
    prof_a = distance_profile(g_a, lo, hi)
    prof_b = distance_profile(g_b, lo, hi)
    rows = []
    for eps in eps_list:
        for n in range(lo, hi + 1):
            d_a, ad_a = prof_a.d_at(n), prof_a.a_d_at(n)
            d_b, ad_b = prof_b.d_at(n), prof_b.a_d_at(n)
            pue_a = metrics.p_ue_first_term(d_a, ad_a, n, eps)
            pue_b = metrics.p_ue_first_term(d_b, ad_b, n, eps)
            rows.append({
                "eps": eps, "n": n,
                "d_a": d_a, "a_d_a": ad_a, "pue_first_a": pue_a,
                "d_b": d_b, "a_d_b": ad_b, "pue_first_b": pue_b,
                "improvement_pct": metrics.improvement(pue_b, pue_a),
                "ratio": pue_b / pue_a if pue_a > 0.0 else float("inf"),
            })
    payload = {
        "schema": "crcselect.compare/1",
        "poly_a": gf2.format_hex(g_a),
        "poly_b": gf2.format_hex(g_b),
        "min_len": lo,
        "max_len": hi,
        "rows": rows,
    }
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
        return
    header = ["eps", "n", "d_a", "a_d_a", "pue_first_a",
              "d_b", "a_d_b", "pue_first_b", "improvement_pct", "ratio"]
    if fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[h] for h in header])
        return
    click.echo(f"A = {payload['poly_a']}, B = {payload['poly_b']} (baseline)")
    click.echo("  ".join(f"{h:>14}" for h in header))
    for row in rows:
        click.echo("  ".join(f"{row[h]:>14.6g}" if isinstance(row[h], float)
                             else f"{row[h]:>14}" for h in header))


def _parse_early_reject(value, lo, hi):
    if value is None:
        return None
    if value == "auto":
        return default_early_reject(lo, hi)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return EarlyReject(int(value[0]), int(value[1]))
    try:
        threshold, required = str(value).split(":")
        return EarlyReject(int(threshold), int(required))
    except ValueError as exc:
        raise click.UsageError("--early-reject expects N:D, e.g. 500:6") from exc


@main.command()
@click.option("--check-bits", "-p", "p", type=int, default=None, help="Generator degree.")
@_interval_options
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False),
              default=None, help="JSON file with search settings; flags override it.")
@click.option("--workers", type=int, default=None, help="Worker processes  [default: 1]")
@click.option("--checkpoint", type=click.Path(), default=None,
              help="JSON-lines checkpoint to write/resume.")
@click.option("--top-k", type=int, default=None, help="Ranked results to keep  [default: 10]")
@click.option("--early-reject", "early", type=str, default=None, metavar="N:D",
              help="Abandon candidates with d < D at lengths >= N ('auto' for the stock rule).")
@click.option("--long-run", is_flag=True, help="Allow full searches beyond p = 16.")
@_FORMAT
@_guarded
def search(p, min_len, max_len, payload_min, payload_max, config_file, workers,
           checkpoint, top_k, early, long_run, fmt):
    """Exhaustive search for the best degree-p generators on an interval."""
    file_cfg = {}
    if config_file is not None:
        with open(config_file, encoding="utf-8") as fh:
            file_cfg = json.load(fh)
    if p is None:
        p = file_cfg.get("p")
    if p is None:
        raise click.UsageError("give --check-bits or a --config file with 'p'")
    if min_len is None and max_len is None and payload_min is None and payload_max is None:
        min_len = file_cfg.get("min_len")
        max_len = file_cfg.get("max_len")
        if min_len is None or max_len is None:
            raise click.UsageError(
                "give an interval via flags or a --config file with min_len/max_len"
            )
    lo, hi = _resolve_interval(p, min_len, max_len, payload_min, payload_max)
    early_reject = _parse_early_reject(
        early if early is not None else file_cfg.get("early_reject"), lo, hi
    )
    config = SearchConfig(
        p=p, min_len=lo, max_len=hi, early_reject=early_reject,
        workers=workers if workers is not None else file_cfg.get("workers", 1),
        checkpoint_path=checkpoint if checkpoint is not None else file_cfg.get("checkpoint"),
        top_k=top_k if top_k is not None else file_cfg.get("top_k", 10),
        long_run=long_run or bool(file_cfg.get("long_run")),
    )
    report = run_search(config)
    if fmt == "json":
        click.echo(json.dumps(report.to_json_dict(), indent=2))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["rank", "poly", "reciprocal", "order", "s_d", "s_ad", "runs"])
        for i, r in enumerate(report.ranked, 1):
            runs = ";".join(f"{d}:{a}-{b}" for a, b, d in r.runs)
            writer.writerow([i, gf2.format_hex(r.g), gf2.format_hex(gf2.reciprocal(r.g)),
                             r.order, r.s_d, r.s_ad, runs])
    else:
        click.echo(report.format_table())


@main.command()
@click.option("--poly", required=True, help="Generator polynomial, hex.")
@click.option("--len", "length", type=int, default=None, help="Single code length.")
@_interval_options
@click.option("--eps", "eps_list", type=float, multiple=True,
              help="Crossover probability; repeatable.")
@click.option("--eps-min", type=float, default=None, help="Log-spaced range start.")
@click.option("--eps-max", type=float, default=None, help="Log-spaced range end.")
@click.option("--eps-count", type=int, default=9, show_default=True)
@_guarded
def curves(poly, length, min_len, max_len, payload_min, payload_max,
           eps_list, eps_min, eps_max, eps_count):
    """CSV stream of (eps, n, P_ue, P_ue') rows, ordered by n then eps."""
    g = gf2.parse_hex(poly)
    p = gf2.degree(g)
    if length is not None:
        lo = hi = length
    else:
        lo, hi = _resolve_interval(p, min_len, max_len, payload_min, payload_max)
    eps_values = list(eps_list)
    if eps_min is not None or eps_max is not None:
        if eps_min is None or eps_max is None or not 0 < eps_min <= eps_max:
            raise click.UsageError("--eps-min/--eps-max must give a positive range")
        if eps_count < 2:
            raise click.UsageError("--eps-count must be at least 2")
        ratio = (eps_max / eps_min) ** (1.0 / (eps_count - 1))
        eps_values.extend(eps_min * ratio**i for i in range(eps_count))
    if not eps_values:
        raise click.UsageError("give --eps values or an --eps-min/--eps-max range")
    writer = csv.writer(sys.stdout)
    writer.writerow(["eps", "n", "pue", "pue_first"])
    for n, dist, d, a_d in spectrum_scan(g, lo, hi):
        for eps in eps_values:
            writer.writerow([
                eps, n,
                repr(metrics.p_ue(dist, eps)),
                repr(metrics.p_ue_first_term(d, a_d, n, eps)),
            ])


@main.command()
@click.option("--poly", required=True, help="Generator polynomial, hex.")
@click.option("--len", "length", type=int, required=True, help="Code length (bits).")
@click.option("--eps", type=float, required=True, help="Crossover probability.")
@click.option("--trials", type=int, default=10**6, show_default=True)
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True,
              help="Philox seed; fixed default keeps runs reproducible.")
@click.option("--workers", type=int, default=1, show_default=True)
@_guarded
def simulate(poly, length, eps, trials, seed, workers):
    """Monte Carlo estimate of P_ue on a binary symmetric channel."""
    g = gf2.parse_hex(poly)
    spec = CodeSpec(g, length)
    est = monte_carlo_pue(spec, eps, trials, seed=seed, workers=workers)
    if est.undetected < 10:
        click.echo(
            f"warning: only {est.undetected} undetected events observed; "
            "the estimate is unreliable (expected count should be >= 10)",
            err=True,
        )
    click.echo(json.dumps(est.to_json_dict(), indent=2))


_TABLE_BLOCKS = ("crc6", "crc11", "crc16", "crc24", "crc24-short")


@main.command()
@click.option("--only", type=click.Choice(_TABLE_BLOCKS), multiple=True,
              help="Limit to specific blocks; repeatable.")
@click.option("--workers", type=int, default=1, show_default=True)
@_guarded
def tables(only, workers):
    """Re-derive the bundled results: searches for 6/11 check bits,
    individual verification for 16/24 check bits.

    The 24-bit block sweeps six polynomials over [25..8448] and takes
    tens of minutes; select blocks with --only to shorten a run.
    """
    blocks = only or _TABLE_BLOCKS

    def banner(title):
        click.echo("")
        click.echo(f"=== {title} ===")

    if "crc6" in blocks:
        banner("6 check bits: search over [18..25]")
        report = run_search(SearchConfig(p=6, min_len=18, max_len=25,
                                         workers=workers, top_k=8))
        click.echo(report.format_table())
    if "crc11" in blocks:
        banner("11 check bits: search over [31..1717]")
        report = run_search(SearchConfig(p=11, min_len=31, max_len=1717,
                                         workers=workers, top_k=5))
        click.echo(report.format_table())
        std = presets.STANDARD["crc11"]
        banner("11 check bits: the 5G NR assignment for the same interval")
        _print_analysis_table(_analysis_payload(std.g, std.min_len, std.max_len))
    if "crc16" in blocks:
        std = presets.STANDARD["crc16"]
        for g in presets.IMPROVED["crc16"] + [std.g]:
            banner(f"16 check bits: {gf2.format_hex(g)} over [{std.min_len}..{std.max_len}]")
            _print_analysis_table(_analysis_payload(g, std.min_len, std.max_len))
    if "crc24" in blocks:
        lo, hi = presets.CRC24_FULL_INTERVAL
        six = presets.IMPROVED["crc24"] + [
            presets.STANDARD["crc24a"].g,
            presets.STANDARD["crc24b"].g,
            presets.STANDARD["crc24c"].g,
        ]
        for g in six:
            banner(f"24 check bits: {gf2.format_hex(g)} over [{lo}..{hi}]")
            _print_analysis_table(_analysis_payload(g, lo, hi))
    if "crc24-short" in blocks:
        lo, hi = presets.CRC24_SHORT_INTERVAL
        for g in [presets.STANDARD["crc24c"].g] + presets.IMPROVED["crc24-short"]:
            banner(f"24 check bits, short blocks: {gf2.format_hex(g)} over [{lo}..{hi}]")
            _print_analysis_table(_analysis_payload(g, lo, hi))


if __name__ == "__main__":
    main()
