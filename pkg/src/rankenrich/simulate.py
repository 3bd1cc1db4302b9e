"""Monte-Carlo scenarios probing test behavior on synthetic lists.

Scenario 1: weak, broad enrichment — a binomial draw with mean fold*K/2
decides how many 1's land (uniformly) in the top half, the rest go in the
bottom half.  Scenario 2: outlier robustness — a fixed number of 1's is
placed uniformly in a small top window, the remaining 1's uniformly over
the rest of the list.  Every replicate is scored with the exact test.
"""

import csv
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import backend
from .errors import DomainError
from .pvalue import pvalue_dp
from .ranked import TestParams

__all__ = ["ScenarioSpec", "SimResult", "simulate", "write_csv", "summary_dict"]

QUANTILES = (5, 25, 50, 75, 95)

RNG_NAME = "numpy-default_rng-PCG64"


@dataclass(frozen=True)
class ScenarioSpec:
    kind: str
    N: int
    K: int
    fold: float = 1.5
    outliers: int = 0
    window: int = 20
    replicates: int = 1
    seed: int = 0
    params: TestParams = field(default_factory=TestParams)
    alpha: float = 0.01

    def __post_init__(self):
        if self.kind not in ("scenario1", "scenario2"):
            raise DomainError(f"unknown scenario kind {self.kind!r}")
        if self.replicates < 1:
            raise DomainError("replicates must be >= 1")
        if not 0 < self.K <= self.N:
            raise DomainError(f"K={self.K} outside [1, N={self.N}]")
        if self.kind == "scenario1":
            if self.fold <= 0 or self.fold > 2:
                raise DomainError(f"fold={self.fold} outside (0, 2]")
            if self.fold * self.K / 2 > self.N / 2:
                raise DomainError("expected top-half count exceeds top-half capacity")
        else:
            if not 0 <= self.outliers <= self.K:
                raise DomainError(f"outliers={self.outliers} outside [0, K={self.K}]")
            if not 0 < self.window <= self.N:
                raise DomainError(f"window={self.window} outside [1, N={self.N}]")


@dataclass(frozen=True)
class SimResult:
    spec: ScenarioSpec
    rows: tuple  # (replicate, statistic, cutoff, pvalue)
    fraction_significant: float
    quantiles: dict
    metadata: dict


def _make_list(spec: ScenarioSpec, rng: np.random.Generator) -> np.ndarray:
    v = np.zeros(spec.N, dtype=np.int8)
    if spec.kind == "scenario1":
        top = spec.N // 2
        t = int(rng.binomial(spec.K, spec.fold / 2.0))
        if t > top or spec.K - t > spec.N - top:
            raise DomainError("drawn counts exceed list capacity")
        v[rng.choice(top, size=t, replace=False)] = 1
        v[top + rng.choice(spec.N - top, size=spec.K - t, replace=False)] = 1
    else:
        picked = rng.choice(spec.window, size=spec.outliers, replace=False)
        v[picked] = 1
        pool = np.flatnonzero(v == 0)
        v[rng.choice(pool, size=spec.K - spec.outliers, replace=False)] = 1
    return v


def _run_replicate(args):
    spec, idx, seed_seq = args
    rng = np.random.default_rng(seed_seq)
    v = _make_list(spec, rng)
    L = spec.params.resolve_L(spec.N)
    s, n_star, _ = backend.statistic_scan(v, spec.K, spec.params.X, L)
    p = pvalue_dp(s, spec.K, spec.N - spec.K, spec.params)
    return (idx, s, n_star, p)


def _job_count() -> int:
    raw = os.environ.get("XLMHG_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def simulate(spec: ScenarioSpec, jobs: int | None = None) -> SimResult:
    """Run all replicates; identical seeds give identical results regardless
    of parallelism (each replicate draws from its own spawned seed)."""
    if jobs is None:
        jobs = _job_count()
    children = np.random.SeedSequence(spec.seed).spawn(spec.replicates)
    work = [(spec, i, ss) for i, ss in enumerate(children)]
    if jobs > 1 and spec.replicates > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_replicate, work, chunksize=8))
    else:
        rows = [_run_replicate(args) for args in work]
    rows.sort(key=lambda r: r[0])
    pvals = np.array([r[3] for r in rows])
    frac = float(np.mean(pvals <= spec.alpha))
    quants = {
        str(q): float(np.percentile(pvals, q)) for q in QUANTILES
    }
    return SimResult(
        spec=spec,
        rows=tuple(rows),
        fraction_significant=frac,
        quantiles=quants,
        metadata={"rng": RNG_NAME, "backend": backend.BACKEND, "jobs": jobs},
    )


def _sig(x: float) -> float:
    return float(f"{x:.12g}")


def write_csv(result: SimResult, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(["replicate", "statistic", "cutoff", "pvalue"])
    for idx, s, n_star, p in result.rows:
        writer.writerow([idx, f"{s:.12g}", n_star, f"{p:.12g}"])


def summary_dict(result: SimResult) -> dict:
    spec = result.spec
    return {
        "kind": spec.kind,
        "N": spec.N,
        "K": spec.K,
        "fold": spec.fold,
        "outliers": spec.outliers,
        "window": spec.window,
        "replicates": spec.replicates,
        "seed": spec.seed,
        "X": spec.params.X,
        "L": spec.params.resolve_L(spec.N),
        "alpha": spec.alpha,
        "fraction_significant": _sig(result.fraction_significant),
        "quantiles": {k: _sig(v) for k, v in result.quantiles.items()},
        "metadata": result.metadata,
    }
