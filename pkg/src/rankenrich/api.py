"""High-level single-call interface shared by the CLI and library users."""

from typing import Sequence

from .pvalue import lipson_bound, pvalue_dp
from .ranked import RankedList, TestParams, as_ranked
from .scoring import enrichment_score, fold_enrichment
from .statistic import compute_statistic, cutoff_pvalues

__all__ = ["run_test", "per_cutoff_rows"]


def _sig(x: float) -> float:
    """Round to 12 significant digits, the report serialization precision."""
    return float(f"{x:.12g}")


def run_test(v: Sequence[int] | RankedList, X: int = 0, L: int | None = None,
             psi: float = 0.05, bound_only: bool = False,
             invert: bool = False) -> dict:
    """Full test report: statistic, exact p-value, upper bound, and score."""
    rl = as_ranked(v)
    if invert:
        rl = rl.inverted()
    params = TestParams(X=X, L=L)
    stat = compute_statistic(rl, params)
    pvalue = None if bound_only else pvalue_dp(stat.s, rl.K, rl.W, params)
    if psi >= stat.s:
        report = enrichment_score(rl, params, psi)
        escore, escore_cutoff = report.score, report.score_cutoff
    else:
        # no cutoff can clear a threshold below the statistic
        escore, escore_cutoff = None, None
    return {
        "N": rl.N,
        "K": rl.K,
        "X": params.X,
        "L": params.resolve_L(rl.N),
        "statistic": _sig(stat.s),
        "cutoff": stat.n_star,
        "k_at_cutoff": stat.k_star,
        "pvalue": None if pvalue is None else _sig(pvalue),
        "lipson_bound": _sig(lipson_bound(stat.s, rl.K)),
        "escore": None if escore is None else _sig(escore),
        "escore_cutoff": escore_cutoff,
        "psi": _sig(psi),
    }


def per_cutoff_rows(v: Sequence[int] | RankedList, invert: bool = False) -> list:
    """(n, k_n, hg_pvalue, fold_enrichment) for every cutoff n = 1..N."""
    rl = as_ranked(v)
    if invert:
        rl = rl.inverted()
    pvals = cutoff_pvalues(rl)
    return [
        (n, rl.prefix[n], _sig(pvals[n - 1]), _sig(fold_enrichment(rl, n)))
        for n in range(1, rl.N + 1)
    ]
