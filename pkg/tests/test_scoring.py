import numpy as np
import pytest

from rankenrich import (
    DomainError,
    RankedList,
    TestParams,
    compute_statistic,
    enrichment_score,
    fold_enrichment,
)

from conftest import random_list


class TestFoldEnrichment:
    def test_worked_example_values(self, v_ex):
        assert fold_enrichment(v_ex, 1) == pytest.approx(4.0)
        assert fold_enrichment(v_ex, 4) == pytest.approx(3.0)
        assert fold_enrichment(v_ex, 6) == pytest.approx(8 / 3, rel=1e-12)

    def test_whole_list(self, v_ex):
        assert fold_enrichment(v_ex, 20) == pytest.approx(1.0)

    def test_rejects_bad_inputs(self, v_ex):
        with pytest.raises(DomainError):
            fold_enrichment(v_ex, 0)
        with pytest.raises(DomainError):
            fold_enrichment(v_ex, 21)
        with pytest.raises(DomainError):
            fold_enrichment(RankedList((0, 0, 0)), 1)


class TestEnrichmentScore:
    def test_permissive_threshold_gives_max(self, v_ex):
        r = enrichment_score(v_ex, psi=1.0)
        assert r.score == pytest.approx(4.0)
        assert r.score_cutoff == 1

    def test_threshold_at_statistic_gives_star(self, v_ex):
        s = compute_statistic(v_ex).s
        r = enrichment_score(v_ex, psi=s)
        assert r.score == pytest.approx(8 / 3, rel=1e-12)
        assert r.score_cutoff == 6

    def test_intermediate_threshold(self, v_ex):
        r = enrichment_score(v_ex, psi=0.04)
        assert r.score == pytest.approx(3.0)
        assert r.score_cutoff == 4
        assert 4 in r.candidate_cutoffs and 6 in r.candidate_cutoffs

    def test_rejects_threshold_below_statistic(self, v_ex):
        with pytest.raises(DomainError):
            enrichment_score(v_ex, psi=0.001)

    def test_rejects_bad_psi(self, v_ex):
        with pytest.raises(DomainError):
            enrichment_score(v_ex, psi=0.0)
        with pytest.raises(DomainError):
            enrichment_score(v_ex, psi=1.5)

    def test_empty_candidate_set_has_no_score(self):
        # X above K: the statistic is 1.0 and nothing qualifies
        rl = RankedList((1, 0, 1, 0))
        r = enrichment_score(rl, TestParams(X=5), psi=1.0)
        assert r.score is None
        assert r.score_cutoff is None
        assert r.candidate_cutoffs == ()

    def test_monotone_in_psi(self):
        rng = np.random.default_rng(41)
        for _ in range(30):
            rl = random_list(rng, int(rng.integers(2, 25)))
            if rl.K == 0:
                continue
            s = compute_statistic(rl).s
            psis = sorted(p for p in (s, min(1.0, 2 * s), 0.5, 1.0) if p >= s)
            scores = []
            for psi in psis:
                r = enrichment_score(rl, psi=psi)
                scores.append(r.score if r.score is not None else -1.0)
            assert scores == sorted(scores)

    def test_bounds_between_star_and_max(self):
        rng = np.random.default_rng(43)
        for _ in range(30):
            rl = random_list(rng, int(rng.integers(2, 25)))
            if rl.K == 0:
                continue
            s = compute_statistic(rl).s
            e_star = enrichment_score(rl, psi=s).score
            e_max = enrichment_score(rl, psi=1.0).score
            for psi in (min(1.0, 3 * s), 0.3, 0.8):
                if psi < s:
                    continue
                e = enrichment_score(rl, psi=psi).score
                assert e_star - 1e-12 <= e <= e_max + 1e-12

    def test_xl_reduction(self, v_ex):
        # X=0, L=N reproduces the unrestricted score
        plain = enrichment_score(v_ex, psi=0.5)
        xl = enrichment_score(v_ex, TestParams(X=0, L=20), psi=0.5)
        assert plain == xl

    def test_with_fold_vector(self, v_ex):
        r = enrichment_score(v_ex, psi=1.0, with_fold=True)
        assert len(r.fold) == 20
        assert r.fold[0] == pytest.approx(4.0)
