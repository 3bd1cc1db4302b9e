"""Command-line front end.

``rankenrich test`` scores a ranked binary list read either as a plain
0/1-per-line file or as a scored TSV plus a membership file.  ``rankenrich
sim`` runs the Monte-Carlo scenarios.  Exit codes: 0 report produced,
2 input/parse error, 3 parameter domain error.  The significance decision
is never encoded in the exit code.
"""

import csv
import functools
import json
import sys

import click

from . import api
from .errors import DomainError, InputError, SizeError
from .ranked import RankedList, TestParams
from .simulate import ScenarioSpec, simulate, summary_dict, write_csv

PLAIN_TOKENS = {"0": 0, "1": 1}


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except (DomainError, SizeError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
    return wrapper


def _read_plain(path: str) -> RankedList:
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            tok = line.strip()
            if not tok:
                continue
            if tok not in PLAIN_TOKENS:
                raise InputError(f"{path}:{lineno}: expected 0 or 1, got {tok!r}")
            values.append(PLAIN_TOKENS[tok])
    if not values:
        raise InputError(f"{path}: no list entries found")
    return _validated(values, path)


def _read_labeled(path: str, membership_path: str) -> RankedList:
    rows = []
    with open(path, encoding="utf-8") as fh:
        reader = csv.reader(fh, delimiter="\t")
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header[:2]] != ["item_id", "score"]:
            raise InputError(f"{path}:1: expected TSV header 'item_id<TAB>score'")
        for lineno, row in enumerate(reader, 2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) < 2:
                raise InputError(f"{path}:{lineno}: expected two tab-separated fields")
            item = row[0].strip()
            try:
                score = float(row[1])
            except ValueError:
                raise InputError(f"{path}:{lineno}: score {row[1]!r} is not a number")
            rows.append((item, score))
    seen = set()
    for item, _ in rows:
        if item in seen:
            raise InputError(f"{path}: duplicate item_id {item!r}")
        seen.add(item)
    with open(membership_path, encoding="utf-8") as fh:
        members = {line.strip() for line in fh if line.strip()}
    order = sorted(range(len(rows)), key=lambda i: (-rows[i][1], i))
    values = [1 if rows[i][0] in members else 0 for i in order]
    if not values:
        raise InputError(f"{path}: no list entries found")
    return _validated(values, path)


def _validated(values: list, path: str) -> RankedList:
    rl = RankedList.from_iterable(values)
    if rl.K == 0 or rl.W == 0:
        raise InputError(f"{path}: list must contain at least one 1 and one 0")
    return rl


def _parse_count(raw: str | None, base: int, name: str) -> int | None:
    """Absolute count, or a percentage of ``base`` (rounded half-up)."""
    if raw is None:
        return None
    raw = raw.strip()
    try:
        if raw.endswith("%"):
            return int(float(raw[:-1]) / 100.0 * base + 0.5)
        return int(raw)
    except ValueError:
        raise InputError(f"{name}={raw!r} is not a number or percentage")


@click.group()
def main():
    """mHG / XL-mHG enrichment tests for ranked binary lists."""


@main.command("test")
@click.option("--input", "input_path", required=True, type=click.Path(), help="Plain 0/1 list, or a scored TSV when --membership is given.")
@click.option("--membership", "membership_path", type=click.Path(), default=None, help="File of item_ids marking the 1's (labeled mode).")
@click.option("--x", "x_raw", default="0", help="Minimum 1's above a tested cutoff; absolute or % of K.")
@click.option("--l", "l_raw", default=None, help="Lowest tested cutoff; absolute or % of N (default N).")
@click.option("--psi", default=0.05, show_default=True, help="p-value threshold for the enrichment score.")
@click.option("--per-cutoff", "per_cutoff_path", type=click.Path(), default=None, help="Write per-cutoff CSV (n, k_n, hg_pvalue, fold_enrichment).")
@click.option("--bound-only", is_flag=True, help="Skip the exact p-value; report only the upper bound.")
@click.option("--invert", is_flag=True, help="Reverse the list first (tests bottom enrichment).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@_guard
def test_cmd(input_path, membership_path, x_raw, l_raw, psi, per_cutoff_path,
             bound_only, invert, fmt):
    """Run the enrichment test on a ranked binary list."""
    if membership_path is not None:
        rl = _read_labeled(input_path, membership_path)
    else:
        rl = _read_plain(input_path)
    X = _parse_count(x_raw, rl.K, "--x")
    L = _parse_count(l_raw, rl.N, "--l")
    if not 0.0 < psi <= 1.0:
        raise DomainError(f"--psi={psi} outside (0, 1]")
    report = api.run_test(rl, X=X, L=L, psi=psi, bound_only=bound_only, invert=invert)
    if per_cutoff_path is not None:
        with open(per_cutoff_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n", "k_n", "hg_pvalue", "fold_enrichment"])
            for row in api.per_cutoff_rows(rl, invert=invert):
                writer.writerow([row[0], row[1], f"{row[2]:.12g}", f"{row[3]:.12g}"])
    if fmt == "json":
        click.echo(json.dumps(report, indent=2))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(list(report))
        writer.writerow(["" if v is None else v for v in report.values()])


def _read_config(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise InputError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            out[key.strip().lower()] = value.strip()
    return out


@main.command("sim")
@click.option("--config", "config_path", type=click.Path(), default=None, help="Flat key=value file with scenario settings; flags override it.")
@click.option("--kind", type=click.Choice(["scenario1", "scenario2"]), default=None)
@click.option("--n", "n_opt", type=int, default=None)
@click.option("--k", "k_opt", type=int, default=None)
@click.option("--fold", type=float, default=None)
@click.option("--outliers", type=int, default=None)
@click.option("--window", type=int, default=None)
@click.option("--replicates", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--x", "x_raw", default=None, help="Absolute or % of K.")
@click.option("--l", "l_raw", default=None, help="Absolute or % of N.")
@click.option("--alpha", type=float, default=None)
@click.option("--csv", "csv_path", type=click.Path(), default=None, help="Write per-replicate CSV here.")
@click.option("--summary", "summary_path", type=click.Path(), default=None, help="Write the JSON summary here instead of stdout.")
@_guard
def sim_cmd(config_path, kind, n_opt, k_opt, fold, outliers, window, replicates,
            seed, x_raw, l_raw, alpha, csv_path, summary_path):
    """Run a Monte-Carlo scenario and emit per-replicate CSV plus a summary."""
    cfg = _read_config(config_path) if config_path else {}

    def pick(flag, key, cast, default):
        if flag is not None:
            return flag
        if key in cfg:
            try:
                return cast(cfg[key])
            except ValueError:
                raise InputError(f"config value {key}={cfg[key]!r} is invalid")
        return default

    kind = pick(kind, "kind", str, None)
    if kind is None:
        raise InputError("scenario kind is required (--kind or kind= in config)")
    N = pick(n_opt, "n", int, None)
    K = pick(k_opt, "k", int, None)
    if N is None or K is None:
        raise InputError("list dimensions are required (--n/--k or n=/k= in config)")
    X = _parse_count(pick(x_raw, "x", str, None), K, "--x") or 0
    L = _parse_count(pick(l_raw, "l", str, None), N, "--l")
    spec = ScenarioSpec(
        kind=kind,
        N=N,
        K=K,
        fold=pick(fold, "fold", float, 1.5),
        outliers=pick(outliers, "outliers", int, 0),
        window=pick(window, "window", int, 20),
        replicates=pick(replicates, "replicates", int, 1),
        seed=pick(seed, "seed", int, 0),
        params=TestParams(X=X, L=L),
        alpha=pick(alpha, "alpha", float, 0.01),
    )
    result = simulate(spec)
    if csv_path is not None:
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            write_csv(result, fh)
    summary = json.dumps(summary_dict(result), indent=2)
    if summary_path is not None:
        with open(summary_path, "w", encoding="utf-8") as fh:
            fh.write(summary + "\n")
    else:
        click.echo(summary)


if __name__ == "__main__":
    main()
