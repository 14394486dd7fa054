import pytest

from config import VerifyConfig
from exceptions import EncodingFailure, ParameterError
from helpers.flow_helpers import OracleHelpers
from helpers.graph_helpers import GraphHelpers
from services.kapc_service import KapcService
from services.verify_service import VerifyService
from utils.seed_utils import TrialConfig, derive_rng


@pytest.mark.parametrize("mode", ["edge", "vertex"])
def test_sweep_passes(ctx, mode):
    config = VerifyConfig(mode=mode, instances=15, max_n=6, max_m=12, max_k=3, seed=2)
    report = VerifyService(ctx).run(config)
    assert report.passed
    assert report.mismatched_pairs == 0
    assert report.instances == len(report.instance_reports) == 15
    assert report.pairs_checked == sum(r.n * (r.n - 1) for r in report.instance_reports)
    assert report.singular_draws == 0


def test_fault_injection_breaches_threshold(ctx):
    config = VerifyConfig(instances=3, max_n=5, max_m=8, seed=1, fault_inject=True)
    report = VerifyService(ctx).run(config)
    assert not report.passed
    assert report.mismatched_pairs == 1
    assert len(report.instance_reports[0].mismatches) == 1


def test_reported_seed_replays_instance(ctx):
    config = VerifyConfig(instances=5, max_n=6, max_m=10, seed=11)
    report = VerifyService(ctx).run(config)
    assert [r.seed for r in report.instance_reports] == [
        r.seed for r in VerifyService(ctx).run(config).instance_reports
    ]
    for instance in report.instance_reports:
        rng = derive_rng(instance.seed)
        n = int(rng.integers(config.min_n, config.max_n + 1))
        m = int(rng.integers(0, config.max_m + 1))
        k = int(rng.integers(1, config.max_k + 1))
        g = GraphHelpers.random_digraph(rng, n, m)
        assert (n, g.m, k) == (instance.n, instance.m, instance.k)
        answer = KapcService(ctx).solve_all_pairs(g, k, TrialConfig(seed=instance.seed))
        assert answer == OracleHelpers.all_pairs_oracle(g, k, "edge")


def test_exhausted_instance_counts_every_pair(ctx, monkeypatch):
    def always_singular(self, g, k, rng):
        raise EncodingFailure("singular")

    monkeypatch.setattr(KapcService, "encode", always_singular)
    config = VerifyConfig(instances=2, max_n=4, max_m=5, max_retries=2, threshold=0.5)
    report = VerifyService(ctx).run(config)
    assert report.mismatched_pairs == report.pairs_checked
    assert not report.passed
    assert all(r.error for r in report.instance_reports)
    assert report.draws == 4


def test_bad_ranges(ctx):
    with pytest.raises(ParameterError):
        VerifyService(ctx).run(VerifyConfig(min_n=6, max_n=3))
