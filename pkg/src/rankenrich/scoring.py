"""Effect size: per-cutoff fold enrichment and the threshold-based score."""

from dataclasses import dataclass

from .errors import DomainError
from .ranked import RankedList, TestParams
from .statistic import compute_statistic, cutoff_pvalues

__all__ = ["EnrichmentReport", "fold_enrichment", "enrichment_score"]

REL_TOL = 1e-12  # matches the region-membership comparison in pvalue


@dataclass(frozen=True)
class EnrichmentReport:
    """Fold-enrichment score over the cutoffs passing the p-value threshold.

    ``score`` is None when no cutoff qualifies; the score is only defined
    over a non-empty candidate set.
    """

    psi: float
    candidate_cutoffs: tuple
    score: float | None
    score_cutoff: int | None
    fold: tuple | None = None


def fold_enrichment(rl: RankedList, n: int) -> float:
    """Observed over expected count of 1's above cutoff n: k_(n) / (K * n / N)."""
    if rl.K == 0:
        raise DomainError("fold enrichment undefined for a list with no 1's")
    if not 1 <= n <= rl.N:
        raise DomainError(f"cutoff n={n} outside [1, N={rl.N}]")
    return rl.prefix[n] / (rl.K * n / rl.N)


def enrichment_score(rl: RankedList, params: TestParams = TestParams(),
                     psi: float = 0.05, with_fold: bool = False) -> EnrichmentReport:
    """Maximum fold enrichment over cutoffs with tail p-value <= psi.

    Only cutoffs permitted by X and L participate.  psi must be at least the
    test statistic; ties are broken toward the smallest cutoff.
    """
    if not 0.0 < psi <= 1.0:
        raise DomainError(f"psi={psi} outside (0, 1]")
    if rl.K == 0:
        # fold enrichment is undefined without any 1's; report no score
        return EnrichmentReport(psi=psi, candidate_cutoffs=(), score=None, score_cutoff=None)
    L = params.resolve_L(rl.N)
    stat = compute_statistic(rl, params)
    if psi < stat.s * (1.0 - REL_TOL):
        raise DomainError(f"psi={psi} below the test statistic {stat.s}")
    pvals = cutoff_pvalues(rl)
    cut = psi * (1.0 + REL_TOL)
    candidates = tuple(
        n for n in range(1, rl.N + 1)
        if rl.prefix[n] >= params.X and n <= L and pvals[n - 1] <= cut
    )
    score = None
    score_cutoff = None
    for n in candidates:
        e = fold_enrichment(rl, n)
        if score is None or e > score:
            score, score_cutoff = e, n
    fold = tuple(fold_enrichment(rl, n) for n in range(1, rl.N + 1)) if with_fold else None
    return EnrichmentReport(
        psi=psi,
        candidate_cutoffs=candidates,
        score=score,
        score_cutoff=score_cutoff,
        fold=fold,
    )
