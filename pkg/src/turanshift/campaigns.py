"""Named verification campaigns with replayable JSON reports."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb
from typing import Callable

import numpy as np

from .constructions import (claim_tfree_check, enumerate_mantel_covers, involution_condition,
                            involution_types, min_edges_involution, perfect_matching,
                            random_mantel_cover, random_triangle_free, random_turan_hypergraph,
                            turan_34_hypergraph)
from .core import (Cmp, Family, Permutation, TermOrder, b_family, c_family,
                   count_meeting_prefix, family_order_compare, h_value, m_value, turan_edge_count)
from .dominance import GenericSource, dominates, rank_r
from .homology import complex_of, homology_shift_check, reduced_betti, star_domination_predicates
from .linalg import DEFAULT_PRIME, SECOND_PRIME, PrimeModulus
from .shifting import comb_shift, exterior_shift, exterior_shift_with, elementary_shift_matrix, ElementaryMap

SCHEMA = 1
MAX_FAILURES = 20


class CampaignError(ValueError):
    pass


@dataclass(frozen=True)
class Config:
    seed: int = 0
    trials: int = 3
    prime: int = DEFAULT_PRIME
    max_exhaustive_n: int = 6
    n: int | None = None
    samples: int | None = None

    def source(self, trials: int | None = None, prime: int | None = None) -> GenericSource:
        return GenericSource(PrimeModulus(prime or self.prime), self.seed, trials or self.trials)

    def rng(self, *tags: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, *tags])


@dataclass
class CampaignReport:
    campaign: str
    config: dict
    cases: list[dict] = field(default_factory=list)
    escalated: bool = False
    wall_time_s: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.cases)

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "campaign": self.campaign,
            "config": self.config,
            "cases": self.cases,
            "summary": {"cases": len(self.cases), "failed": sum(not c["pass"] for c in self.cases)},
            "pass": self.passed,
            "escalated": self.escalated,
            "wall_time_s": round(self.wall_time_s, 3),
        }


def family_json(f: Family) -> dict:
    return {"n": f.n, "k": f.k, "members": [list(s) for s in f]}


class _Case:
    """Accumulates one report case; failures keep an inline instance."""

    def __init__(self, report: CampaignReport, case_id: str, **detail):
        self.report = report
        self.entry = {"id": case_id, "pass": True, "detail": dict(detail), "failures": []}

    def check(self, ok: bool, **witness) -> bool:
        if not ok:
            self.entry["pass"] = False
            if len(self.entry["failures"]) < MAX_FAILURES:
                self.entry["failures"].append({k: family_json(v) if isinstance(v, Family) else v
                                               for k, v in witness.items()})
        return ok

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        if not self.entry["failures"]:
            del self.entry["failures"]
        self.report.cases.append(self.entry)
        return False


def _certified_dominance(f1: Family, f2: Family, cfg: Config, report: CampaignReport):
    """Dominance with escalation (more trials, then a second prime) before a NO is reported."""
    v = dominates(f1, f2, cfg.source())
    if v:
        return v
    report.escalated = True
    for prime in (cfg.prime, SECOND_PRIME if cfg.prime != SECOND_PRIME else DEFAULT_PRIME):
        v = dominates(f1, f2, cfg.source(trials=10, prime=prime))
        if v:
            return v
    return v


def _turan_instances(cfg: Config, ns, per_n: int, tag: int):
    for n in ns:
        yield n, "turan34", None, turan_34_hypergraph(n)
        for i in range(per_n):
            seed = [cfg.seed, tag, n, i]
            yield n, "random-turan", seed, random_turan_hypergraph(n, np.random.default_rng(seed))


# -- campaigns -------------------------------------------------------------------


def c5_golden(cfg: Config, report: CampaignReport) -> None:
    c5 = Family(5, 2, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    expected = {TermOrder.LEX: Family(5, 2, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3)]),
                TermOrder.REVLEX: Family(5, 2, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])}
    for order, want in expected.items():
        for prime in (DEFAULT_PRIME, SECOND_PRIME):
            for s in range(3):
                src = GenericSource(PrimeModulus(prime), cfg.seed + s, max(cfg.trials, 3))
                res = exterior_shift(c5, order, src)
                with _Case(report, f"{order.value}/p={prime}/seed={cfg.seed + s}",
                           result=[list(x) for x in res.family]) as case:
                    case.check(res.family == want and res.unanimous, instance=c5, seed=cfg.seed + s)


def identities(cfg: Config, report: CampaignReport) -> None:
    top = cfg.n or 30
    for n in range(3, top + 1):
        c = c_family(n)
        with _Case(report, f"n={n}", c_size=len(c), h=h_value(n)) as case:
            case.check(len(c) == h_value(n), what="|C(n)| != h(n)")
            case.check(len(b_family(n)) == turan_edge_count(n), what="|B(n)| != |E(T(n))|")
            for r in range(n + 1):
                got, formula = count_meeting_prefix(c, r), r * comb(max(n - r - 1, 0), 2)
                if r <= n // 3:
                    case.check(got == formula, what="prefix identity", r=r, got=got, formula=formula)
                else:
                    # beyond n/3 every member already meets [r]
                    case.check(got == len(c) >= formula, what="prefix bound", r=r, got=got, formula=formula)


def involution(cfg: Config, report: CampaignReport) -> None:
    top = cfg.n or cfg.max_exhaustive_n
    for n in range(2, top + 1):
        for tau in involution_types(n):
            rep = min_edges_involution(n, tau, max_n=max(top, 7))
            moves = sum(1 for v in range(1, n + 1) if tau(v) != v) // 2
            with _Case(report, f"n={n}/transpositions={moves}", minimum=rep.minimum,
                       turan=turan_edge_count(n), minimisers=rep.count) as case:
                case.check(rep.minimum == turan_edge_count(n), tau=list(tau.images),
                           example=rep.examples[0])
        if n >= 3:
            rev = Permutation(tuple(range(n, 0, -1)))
            with _Case(report, f"n={n}/B(n)-reversal") as case:
                case.check(involution_condition(b_family(n), rev) is True, instance=b_family(n))


def _mantel_graphs(cfg: Config, top_exhaustive: int, sampled, samples: int, tag: int):
    for n in range(2, top_exhaustive + 1):
        for g in enumerate_mantel_covers(n):
            yield n, None, g
    for n in sampled:
        for i in range(samples):
            seed = [cfg.seed, tag, n, i]
            yield n, seed, random_mantel_cover(n, np.random.default_rng(seed))


def mantel_shift(cfg: Config, report: CampaignReport) -> None:
    src = cfg.source()
    samples = 500 if cfg.samples is None else cfg.samples
    sampled = (7, 8) if cfg.n is None else tuple(range(cfg.max_exhaustive_n + 1, cfg.n + 1))
    by_n: dict[int, _Case] = {}
    counts: dict[int, int] = {}
    for n, seed, g in _mantel_graphs(cfg, cfg.max_exhaustive_n, sampled, samples, tag=1):
        case = by_n.get(n) or by_n.setdefault(n, _Case(report, f"n={n}"))
        counts[n] = counts.get(n, 0) + 1
        res = exterior_shift(g, TermOrder.SUMLEX, src)
        ok = res.family.issuperset(b_family(n))
        if not (ok and res.unanimous):
            report.escalated = True
            res = exterior_shift(g, TermOrder.SUMLEX, cfg.source(trials=10))
            ok = res.family.issuperset(b_family(n))
        case.check(ok, instance=g, seed=seed, shift=res.family)
    for n, case in by_n.items():
        case.entry["detail"]["graphs"] = counts[n]
        case.__exit__()


def domination_turan(cfg: Config, report: CampaignReport) -> None:
    top = cfg.n or min(5, cfg.max_exhaustive_n)
    for n in range(2, top + 1):
        b = b_family(n)
        with _Case(report, f"n={n}") as case:
            count = 0
            for g in enumerate_mantel_covers(n):
                count += 1
                v = _certified_dominance(g, b, cfg, report)
                case.check(bool(v), instance=g, verdict=v.as_dict())
            case.entry["detail"]["graphs"] = count


def conjecture_c(cfg: Config, report: CampaignReport) -> None:
    top = cfg.n or 12
    for n in range(4, top + 1):
        h, c = turan_34_hypergraph(n), c_family(n)
        v = _certified_dominance(h, c, cfg, report)
        with _Case(report, f"turan34/n={n}", verdict=v.as_dict()) as case:
            case.check(bool(v), instance=h)
    samples = 5 if cfg.samples is None else cfg.samples
    for n, kind, seed, h in _turan_instances(cfg, range(5, min(top, 7) + 1), samples, tag=2):
        if kind == "turan34":
            continue
        v = _certified_dominance(h, c_family(n), cfg, report)
        with _Case(report, f"random-turan/n={n}/seed={seed[-1]}", size=len(h), verdict=v.as_dict()) as case:
            case.check(bool(v), instance=h, seed=seed)


def _bound(n: int, r: int) -> int:
    return r * comb(max(n - 1 - r, 0), 2)


def lex_bound(cfg: Config, report: CampaignReport) -> None:
    top = cfg.n or 9
    samples = 3 if cfg.samples is None else cfg.samples
    for n, kind, seed, h in _turan_instances(cfg, range(4, top + 1), samples, tag=3):
        shifted = exterior_shift(h, TermOrder.LEX, cfg.source()).family
        with _Case(report, f"{kind}/n={n}" + (f"/seed={seed[-1]}" if seed else "")) as case:
            for r in range(1, n + 1):
                got = count_meeting_prefix(shifted, r)
                if got < _bound(n, r):
                    report.escalated = True
                    shifted = exterior_shift(h, TermOrder.LEX, cfg.source(trials=10)).family
                    got = count_meeting_prefix(shifted, r)
                case.check(got >= _bound(n, r), instance=h, seed=seed, r=r, got=got, bound=_bound(n, r))


def rank_bound(cfg: Config, report: CampaignReport) -> None:
    top = cfg.n or 9
    samples = 3 if cfg.samples is None else cfg.samples
    for n, kind, seed, h in _turan_instances(cfg, range(4, top + 1), samples, tag=4):
        with _Case(report, f"{kind}/n={n}" + (f"/seed={seed[-1]}" if seed else "")) as case:
            for r in range(1, n + 1):
                got = rank_r(h, r, cfg.source()).rank
                if got < _bound(n, r):
                    report.escalated = True
                    got = max(got, rank_r(h, r, cfg.source(trials=10, prime=SECOND_PRIME)).rank)
                case.check(got >= _bound(n, r), instance=h, seed=seed, r=r, got=got, bound=_bound(n, r))


def random_family(n: int, k: int, rng: np.random.Generator) -> Family:
    density = rng.random()
    return Family(n, k, (s for s in combinations(range(1, n + 1), k) if rng.random() < density))


def homology_lemma(cfg: Config, report: CampaignReport) -> None:
    src = cfg.source()
    samples = 200 if cfg.samples is None else cfg.samples
    with _Case(report, "random-complexes", count=samples) as case:
        divergent = 0
        for i in range(samples):
            rng = cfg.rng(5, i)
            n = int(rng.integers(1, 8))
            k = int(rng.integers(1, min(3, n) + 1))
            h = random_family(n, k, rng)
            res = homology_shift_check(complex_of(h), src)
            divergent += not res.readings_agree
            case.check(res.ok, instance=h, seed=[cfg.seed, 5, i], betti=res.betti, counts=res.shifted_counts)
        case.entry["detail"]["readings_diverge"] = divergent
    with _Case(report, "mantel-covers/n=5") as case:
        divergent = count = 0
        for g in enumerate_mantel_covers(5):
            count += 1
            res = homology_shift_check(complex_of(g), src)
            divergent += not res.readings_agree
            case.check(res.ok, instance=g, betti=res.betti, counts=res.shifted_counts)
        case.entry["detail"].update(graphs=count, readings_diverge=divergent)


def star_prop(cfg: Config, report: CampaignReport) -> None:
    import networkx as nx

    src = cfg.source()
    top = cfg.n or cfg.max_exhaustive_n
    for n in range(2, top + 1):
        edges = list(combinations(range(1, n + 1), 2))
        with _Case(report, f"graphs/n={n}", graphs=1 << len(edges)) as case:
            for m in range(1 << len(edges)):
                g = Family(n, 2, (e for b, e in enumerate(edges) if m >> b & 1))
                nxg = nx.Graph(list(g))
                nxg.add_nodes_from(range(1, n + 1))
                sp = star_domination_predicates(g, src)
                case.check(bool(sp.dominates_star) == nx.is_connected(nxg)
                           and bool(sp.dominated_by_star) == nx.is_forest(nxg)
                           and sp.consistent, instance=g)
    samples = 100 if cfg.samples is None else cfg.samples
    with _Case(report, "3-uniform/random", count=samples) as case:
        for i in range(samples):
            rng = cfg.rng(6, i)
            n = int(rng.integers(3, 8))
            h = random_family(n, 3, rng)
            sp = star_domination_predicates(h, src)
            case.check(sp.consistent, instance=h, seed=[cfg.seed, 6, i],
                       betti=[sp.h_low, sp.h_top])


def tfree_claim(cfg: Config, report: CampaignReport) -> None:
    samples = 1000 if cfg.samples is None else cfg.samples
    top = cfg.n or 12
    with _Case(report, "random-triangle-free", count=samples) as case:
        tight = 0
        for i in range(samples):
            rng = cfg.rng(7, i)
            x = random_triangle_free(int(rng.integers(1, top + 1)), rng)
            res = claim_tfree_check(x)
            tight += res.tight
            case.check(res.holds, instance=x, seed=[cfg.seed, 7, i])
        case.entry["detail"]["tight"] = tight
    with _Case(report, "perfect-matchings") as case:
        for m in range(2, top + 1, 2):
            case.check(claim_tfree_check(perfect_matching(m)).tight, instance=perfect_matching(m))


def shift_order(cfg: Config, report: CampaignReport) -> None:
    src = cfg.source()
    samples = 200 if cfg.samples is None else cfg.samples
    orders = [TermOrder.LEX, TermOrder.REVLEX, TermOrder.SUMLEX, TermOrder.CTRIPLE]
    with _Case(report, "exterior-below-combinatorial", count=samples) as order_case, \
            _Case(report, "m-value-inequality", count=samples) as mvalue_case:
        for i in range(samples):
            rng = cfg.rng(8, i)
            n = int(rng.integers(2, 8))
            k = int(rng.integers(1, min(3, n) + 1))
            usable = [o for o in orders if o is not TermOrder.CTRIPLE or k == 3]
            order = usable[int(rng.integers(len(usable)))]
            y = random_family(n, k, rng)
            ext = exterior_shift(y, order, src).family
            comb_res, _ = comb_shift(y)
            order_case.check(family_order_compare(ext, comb_res, order) is not Cmp.GREATER,
                             instance=y, order=order.value, seed=[cfg.seed, 8, i])
            a, b = sorted(int(v) for v in rng.choice(np.arange(1, n + 1), size=2, replace=False))
            phi = elementary_shift_matrix(ElementaryMap(a, b, n), src.p)
            moved = exterior_shift(exterior_shift_with(y, order, phi), order, src).family
            ok = all(m_value(order, s, ext) >= m_value(order, s, moved) for s in order.sorted_ksets(n, k))
            mvalue_case.check(ok, instance=y, order=order.value, pivot=[a, b], seed=[cfg.seed, 8, i])


def r1_bound(cfg: Config, report: CampaignReport) -> None:
    top = cfg.n or 9
    samples = 50 if cfg.samples is None else cfg.samples
    instances = [(n, "turan34", None, turan_34_hypergraph(n)) for n in range(4, top + 1)]
    for i in range(samples):
        rng = cfg.rng(9, i)
        n = int(rng.integers(4, top + 1))
        instances.append((n, "random-turan", [cfg.seed, 9, i], random_turan_hypergraph(n, rng)))
    for n, kind, seed, h in instances:
        b1 = reduced_betti(complex_of(h))[1]
        rk = rank_r(h, 1, cfg.source()).rank
        with _Case(report, f"{kind}/n={n}" + (f"/seed={seed[-1]}" if seed else ""), h1=b1, rank_1=rk) as case:
            case.check(b1 <= n - 2 and rk >= comb(n - 2, 2), instance=h, seed=seed)


CAMPAIGNS: dict[str, Callable[[Config, CampaignReport], None]] = {
    "c5-golden": c5_golden,
    "identities": identities,
    "involution": involution,
    "mantel-shift": mantel_shift,
    "domination-turan": domination_turan,
    "conjecture-c": conjecture_c,
    "lex-bound": lex_bound,
    "rank-bound": rank_bound,
    "homology-lemma": homology_lemma,
    "star-prop": star_prop,
    "tfree-claim": tfree_claim,
    "shift-order": shift_order,
    "r1-bound": r1_bound,
}

BOUNDS = {"max_exhaustive_n": 7}


def run_campaign(name: str, config: Config | None = None) -> CampaignReport:
    cfg = config or Config()
    if name not in CAMPAIGNS:
        raise CampaignError(f"unknown campaign {name!r}; choose from {', '.join(CAMPAIGNS)}")
    if cfg.max_exhaustive_n > BOUNDS["max_exhaustive_n"]:
        raise CampaignError(f"max_exhaustive_n={cfg.max_exhaustive_n} exceeds {BOUNDS['max_exhaustive_n']}")
    report = CampaignReport(name, asdict(cfg))
    start = time.perf_counter()
    CAMPAIGNS[name](cfg, report)
    report.wall_time_s = time.perf_counter() - start
    return report


def _run_named(args: tuple[str, Config | None]) -> CampaignReport:
    return run_campaign(*args)


def run_all(config: Config | None = None, workers: int = 1) -> list[CampaignReport]:
    """Every campaign, in registry order whatever order they finish in."""
    jobs = [(name, config) for name in CAMPAIGNS]
    if workers <= 1:
        return [_run_named(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_named, jobs))
