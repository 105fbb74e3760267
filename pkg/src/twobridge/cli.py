"""Command-line interface: enumeration, tables, bounds, and verification.

All commands print deterministic output for a fixed (version, options,
seed): JSON objects carry ``"schema": 1`` and sorted keys, CSV tables carry
a schema comment line.  Exit codes: 0 success, 1 verification failure,
2 usage or domain error.  The environment variable ``TB_CACHE_DIR``
overrides ``--cache-dir`` wherever caching applies.
"""

from __future__ import annotations

import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import click

from . import checks, cobordism, markov, sigtables, words
from .errors import BudgetError

SCHEMA = 1


@dataclass(frozen=True)
class RunConfig:
    """Resolved options shared by the table-producing commands."""

    command: str
    c_values: tuple[int, ...]
    s: int | None = None
    cache_dir: Path | None = None
    workers: int = 1
    fmt: str = "csv"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise click.UsageError(f"--workers must be >= 1, got {self.workers}")
        for c in self.c_values:
            if c < 3:
                raise click.UsageError(f"crossing number must be >= 3, got {c}")


def _parse_c_range(text: str) -> tuple[int, ...]:
    """Parse "9" or "3..14" into an inclusive run of crossing numbers."""
    try:
        if ".." in text:
            lo_str, hi_str = text.split("..", 1)
            lo, hi = int(lo_str), int(hi_str)
        else:
            lo = hi = int(text)
    except ValueError:
        raise click.UsageError(f"cannot parse crossing-number range {text!r}")
    if lo > hi:
        raise click.UsageError(f"empty crossing-number range {text!r}")
    return tuple(range(lo, hi + 1))


def _resolve_cache_dir(option: str | None) -> Path | None:
    env = os.environ.get("TB_CACHE_DIR")
    if env:
        return Path(env)
    return Path(option) if option else None


def _default_workers() -> int:
    return os.cpu_count() or 1


def _echo_json(payload: dict) -> None:
    click.echo(json.dumps(payload, sort_keys=True))


@click.group()
@click.version_option(package_name="twobridge")
def main() -> None:
    """Alternating-word models of 2-bridge knots: enumeration, signature
    tables, and 4-genus bounds."""


@main.command(name="enumerate")
@click.option("--c", "c", required=True, type=int, help="Crossing number.")
@click.option("--count-only", is_flag=True, help="Print the word count only.")
def cmd_enumerate(c: int, count_only: bool) -> None:
    """Stream the words of T(c) in enumeration order."""
    config = RunConfig("enumerate", (c,))
    if count_only:
        click.echo(str(words.word_count(config.c_values[0])))
        return
    for word in words.enumerate_words(config.c_values[0]):
        click.echo(word)


def _cached_histogram(c: int, cache_dir: Path | None, compute) -> sigtables.Row:
    """Row via cache when possible; recompute and overwrite on corruption."""
    if cache_dir is not None:
        try:
            cached = sigtables.load_cached_row(cache_dir, c)
        except ValueError as problem:
            click.echo(f"warning: cache for c={c} rejected ({problem}); "
                       "re-deriving", err=True)
        else:
            if cached is not None:
                return cached
    row = compute(c)
    if cache_dir is not None:
        sigtables.store_cached_row(cache_dir, c, row)
    return row


@main.command(name="sig-table")
@click.option("--c", "c_range", default="3..14", help="c or lo..hi range.")
@click.option("--method", type=click.Choice(["enumerate", "recurse", "both"]),
              default="both", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--cache-dir", default=None,
              help="Row cache directory (TB_CACHE_DIR overrides).")
@click.option("--workers", type=int, default=None,
              help="Enumeration shards; defaults to available parallelism.")
@click.pass_context
def cmd_sig_table(ctx: click.Context, c_range: str, method: str, fmt: str,
                  cache_dir: str | None, workers: int | None) -> None:
    """Signature histogram rows s(c, sigma)."""
    config = RunConfig("sig-table", _parse_c_range(c_range),
                       cache_dir=_resolve_cache_dir(cache_dir),
                       workers=workers if workers is not None else _default_workers(),
                       fmt=fmt)
    c_max = max(config.c_values)
    recursed = sigtables.recursed_table(c_max) if method in ("recurse", "both") else None

    rows: dict[int, sigtables.Row] = {}
    for c in config.c_values:
        if method == "enumerate":
            rows[c] = _cached_histogram(
                c, config.cache_dir,
                lambda cc: sigtables.histogram_enumerated(cc, config.workers))
        elif method == "recurse":
            rows[c] = recursed.row(c)
            if config.cache_dir is not None:
                sigtables.store_cached_row(config.cache_dir, c, rows[c])
        else:
            enumerated = _cached_histogram(
                c, config.cache_dir,
                lambda cc: sigtables.histogram_enumerated(cc, config.workers))
            if enumerated != recursed.row(c):
                click.echo(f"mismatch between enumeration and recursion at c={c}",
                           err=True)
                ctx.exit(1)
            rows[c] = enumerated

    if fmt == "json":
        payload = {"schema": SCHEMA, "method": method,
                   "rows": {str(c): {str(s): n for s, n in sorted(row.items())}
                            for c, row in rows.items()}}
        _echo_json(payload)
    else:
        for c in config.c_values:
            click.echo(sigtables.row_to_csv(c, rows[c]), nl=False)


@main.command(name="avg-sig")
@click.option("--c", "c_range", default="3..20", help="c or lo..hi range.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
def cmd_avg_sig(c_range: str, fmt: str) -> None:
    """Average |signature| per crossing number and gap to sqrt(2c/pi)."""
    config = RunConfig("avg-sig", _parse_c_range(c_range), fmt=fmt)
    entries = []
    for c in config.c_values:
        report = sigtables.totals(c)
        root = math.sqrt(2 * c / math.pi)
        gap = float(report.avg_abs_sigma) - root
        entries.append((c, report.avg_abs_sigma, root, gap))
    if fmt == "json":
        _echo_json({"schema": SCHEMA, "rows": {
            str(c): {"avg": f"{avg.numerator}/{avg.denominator}",
                     "avg_float": float(avg), "root": root, "gap": gap}
            for c, avg, root, gap in entries}})
    else:
        click.echo(f"# twobridge avg-sig schema={SCHEMA}")
        click.echo("c,avg_num,avg_den,avg_float,root,gap")
        for c, avg, root, gap in entries:
            click.echo(f"{c},{avg.numerator},{avg.denominator},"
                       f"{float(avg)!r},{root!r},{gap!r}")


@main.command(name="g4")
@click.option("--word", "word", default=None, help="One word to decompose.")
@click.option("--c", "c", type=int, default=None,
              help="Aggregate over all of T(c) instead.")
@click.option("--s", "s", type=int, default=None,
              help="Block size; defaults to ceil(log10 c).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="json", show_default=True)
def cmd_g4(word: str | None, c: int | None, s: int | None, fmt: str) -> None:
    """4-genus interval for one word, or the mean bound over T(c)."""
    if (word is None) == (c is None):
        raise click.UsageError("pass exactly one of --word or --c")
    if word is not None:
        try:
            c_word = words.validate_word(word)
        except ValueError as problem:
            raise click.UsageError(f"invalid word: {problem}")
        block = s if s is not None else cobordism.choose_block_size(c_word)
        try:
            report = cobordism.decompose(word, block)
        except ValueError as problem:
            raise click.UsageError(str(problem))
        _echo_json({
            "schema": SCHEMA, "word": word, "c": c_word, "s": block,
            "t": report.t, "r": report.r,
            "cut_saddles": report.cut_saddles,
            "link_saddles": report.link_fix_saddles + report.remainder_fix_saddles,
            "residual": list(report.residual),
            "g4_lower": report.g4_lower, "g4_upper": report.g4_upper,
        })
        return
    config = RunConfig("g4", (c,), s=s, fmt=fmt)
    block = config.s if config.s is not None else cobordism.choose_block_size(c)
    try:
        row = cobordism.average_g4_row(c, block)
    except (ValueError, BudgetError) as problem:
        raise click.UsageError(str(problem))
    mean = row.mean_upper
    if fmt == "json":
        _echo_json({
            "schema": SCHEMA, "c": c, "s": block, "words": row.words,
            "mean_upper": f"{mean.numerator}/{mean.denominator}",
            "mean_upper_float": float(mean),
            "bound_975": row.log10_bound,
            "below_bound": row.below_log10,
        })
    else:
        click.echo(f"# twobridge g4 schema={SCHEMA}")
        click.echo("c,s,mean_upper_num,mean_upper_den,bound_975")
        click.echo(f"{c},{block},{mean.numerator},{mean.denominator},"
                   f"{row.log10_bound!r}")


@main.command(name="markov-verify")
@click.option("--s", "s", type=int, default=6, show_default=True)
@click.option("--kmax", type=int, default=8, show_default=True)
@click.pass_context
def cmd_markov_verify(ctx: click.Context, s: int, kmax: int) -> None:
    """Exact transition-matrix verifications up to the given sizes."""
    if s < 1 or kmax < 1:
        raise click.UsageError("--s and --kmax must be >= 1")
    results = {
        "empirical": all(markov.verify_empirical(n) for n in range(1, s + 1)),
        "closed_form": markov.verify_closed_form(s, kmax),
        "contraction": markov.verify_contraction(s, kmax),
        "power_identity": markov.verify_power_identity(20),
    }
    passed = all(results.values())
    _echo_json({"schema": SCHEMA, "s": s, "kmax": kmax,
                "checks": results, "passed": passed})
    if not passed:
        ctx.exit(1)


@main.command(name="walk-sim")
@click.option("--s", "s", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--exact", is_flag=True, help="Exact full enumeration.")
@click.option("--trials", type=int, default=10 ** 4, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def cmd_walk_sim(ctx: click.Context, s: int, t: int, exact: bool,
                 trials: int, seed: int) -> None:
    """Summand-walk expected distance versus the taxicab bound."""
    if s < 1 or t < 0:
        raise click.UsageError("need --s >= 1 and --t >= 0")
    bound = markov.distance_bound(s, t)
    if exact:
        try:
            value = markov.exact_expected_distance(s, t)
        except BudgetError:
            raise click.UsageError(
                f"exact enumeration over 2^{s * t} block sequences is above "
                "budget; drop --exact to sample instead")
        ok = markov.distance_bound_holds(s, t, value)
        _echo_json({"schema": SCHEMA, "s": s, "t": t, "mode": "exact",
                    "mean": float(value),
                    "mean_exact": f"{value.numerator}/{value.denominator}",
                    "bound": bound, "pass": ok})
    else:
        mean, stderr = markov.monte_carlo_distance(s, t, trials, seed)
        ok = mean - 3 * stderr <= bound
        _echo_json({"schema": SCHEMA, "s": s, "t": t, "mode": "monte-carlo",
                    "trials": trials, "seed": seed, "mean": mean,
                    "stderr": stderr, "bound": bound, "pass": ok})
    if not ok:
        ctx.exit(1)


@main.command(name="verify-all")
@click.option("--budget-c", type=int, default=None,
              help="Cap crossing-number ranges for a quicker run.")
@click.pass_context
def cmd_verify_all(ctx: click.Context, budget_c: int | None) -> None:
    """Run every named verification check; exit 0 only if all pass."""
    if budget_c is not None and budget_c < 3:
        raise click.UsageError("--budget-c must be >= 3")
    results = checks.run_all(budget_c)
    payload = {
        "schema": SCHEMA,
        "budget_c": budget_c,
        "checks": [
            {"name": r.name, "passed": r.passed,
             "seconds": round(r.seconds, 3), "detail": r.detail}
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    _echo_json(payload)
    if not payload["passed"]:
        ctx.exit(1)


if __name__ == "__main__":
    sys.exit(main())
