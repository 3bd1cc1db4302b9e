"""mHG / XL-mHG enrichment tests for ranked binary lists.

Exact test statistics, exact p-values via lattice-path counting, the
closed-form upper bound, and fold-enrichment scores.
"""

from .api import per_cutoff_rows, run_test
from .backend import BACKEND
from .errors import DomainError, InputError, SizeError, UnderflowWarning
from .hypergeom import HGParams, pmf_direct, tail_sf
from .pvalue import build_region, lipson_bound, path_survival, pvalue_dp
from .ranked import RankedList, TestParams
from .scoring import EnrichmentReport, enrichment_score, fold_enrichment
from .simulate import ScenarioSpec, SimResult, simulate
from .statistic import StatResult, compute_statistic, cutoff_pvalues

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DomainError",
    "EnrichmentReport",
    "HGParams",
    "InputError",
    "RankedList",
    "ScenarioSpec",
    "SimResult",
    "SizeError",
    "StatResult",
    "TestParams",
    "UnderflowWarning",
    "build_region",
    "compute_statistic",
    "cutoff_pvalues",
    "enrichment_score",
    "fold_enrichment",
    "lipson_bound",
    "path_survival",
    "per_cutoff_rows",
    "pmf_direct",
    "pvalue_dp",
    "run_test",
    "simulate",
    "tail_sf",
]
