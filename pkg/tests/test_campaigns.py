import pytest

from turanshift import campaigns
from turanshift.campaigns import CampaignError, Config, run_all, run_campaign

SMALL = Config(seed=3, max_exhaustive_n=4, samples=3)

SMALL_N = {
    "identities": 12, "involution": 5, "mantel-shift": 5, "domination-turan": 4,
    "conjecture-c": 7, "lex-bound": 6, "rank-bound": 6, "homology-lemma": None,
    "star-prop": 4, "tfree-claim": 8, "shift-order": None, "r1-bound": 6, "c5-golden": None,
}


@pytest.mark.parametrize("name", sorted(campaigns.CAMPAIGNS))
def test_small_campaigns_pass(name):
    cfg = Config(seed=3, max_exhaustive_n=4, samples=3, n=SMALL_N[name])
    report = run_campaign(name, cfg)
    d = report.as_dict()
    assert d["pass"], [c for c in d["cases"] if not c["pass"]]
    assert d["schema"] == 1 and d["campaign"] == name and d["cases"]
    assert d["summary"] == {"cases": len(d["cases"]), "failed": 0}


def test_failed_case_embeds_instance():
    report = campaigns.CampaignReport("x", {})
    from turanshift.core import graph
    with campaigns._Case(report, "demo") as case:
        case.check(False, instance=graph(3, [(1, 2)]), seed=[1, 2])
    d = report.as_dict()
    assert not d["pass"]
    assert d["cases"][0]["failures"][0]["instance"] == {"n": 3, "k": 2, "members": [[1, 2]]}


def test_bounds_and_names():
    with pytest.raises(CampaignError):
        run_campaign("nope")
    with pytest.raises(CampaignError):
        run_campaign("identities", Config(max_exhaustive_n=8))


def test_worker_pool_matches_sequential_order():
    cfg = Config(seed=1, max_exhaustive_n=3, samples=2, n=5)
    seq = [r.as_dict() for r in run_all(cfg)]
    par = [r.as_dict() for r in run_all(cfg, workers=3)]
    for d in seq + par:
        d.pop("wall_time_s")
    assert [d["campaign"] for d in par] == list(campaigns.CAMPAIGNS)
    assert seq == par
