import math

import pytest

from src.core.exceptions import ConfigError
from src.schemas.miner_config import MinerConfig
from src.services.approx_service import (
    StratumTally,
    apply_candidate_reduction,
    build_sample,
    estimate_frequency,
    suffix_admissible,
)
from src.services.miner_service import compute_metrics, estimated_support, mine

from .support import mined_patterns, random_suite, rule_keys, rule_lines, suite_graph


def test_suffix_bound_on_campus(campus):
    follows = campus.label_dict.id_of("Follows")
    chem = campus.attribute_dict.id_of("Chem")
    art = campus.attribute_dict.id_of("Art")

    # one Follows edge into a Chem vertex, d_m = 2
    assert not suffix_admissible(campus, (chem,), follows, 1, 1)
    assert suffix_admissible(campus, (chem,), follows, 2, 1)
    assert suffix_admissible(campus, (art,), follows, 1, 2)
    assert not suffix_admissible(campus, (art,), follows, 1, 3)
    # ψ = 0.5 at length 3 scales d_m^2 down to d_m^1
    assert not suffix_admissible(campus, (chem,), follows, 3, 2, psi=0.5)
    assert suffix_admissible(campus, (chem,), follows, 3, 2)

    with pytest.raises(ValueError):
        suffix_admissible(campus, (chem,), follows, 0, 1)
    with pytest.raises(ConfigError):
        suffix_admissible(campus, (chem,), follows, 1, 1, psi=0)


def test_candidate_reduction_only_removes(campus):
    targets = {label: tuple(campus.attributes) for label in campus.labels}
    exact = apply_candidate_reduction(campus, targets, 1.0, 1, 3)
    reduced = apply_candidate_reduction(campus, targets, 0.2, 1, 3)
    for label, kept in reduced.items():
        assert set(kept) <= set(exact[label])


def test_estimate_without_tallies():
    estimate = estimate_frequency(10, 0.5, sample_size=40, z=2.0)
    assert estimate.point == 20
    # one stratum of 80 vertices, 40 sampled, p = 0.25
    s2 = 40 * 0.25 * 0.75 / 39
    variance = 80 * 80 * (1 - 40 / 80) * s2 / 40
    assert estimate.variance == pytest.approx(variance)
    assert estimate.ci == pytest.approx((20 - 2 * math.sqrt(variance), 20 + 2 * math.sqrt(variance)))


def test_estimate_with_strata_and_degenerate_samples():
    tallies = [StratumTally(10, 5, 5), StratumTally(10, 5, 0)]
    # every stratum is homogeneous, so the estimate carries no variance
    estimate = estimate_frequency(5, 0.5, strata=tallies)
    assert estimate.point == 10
    assert estimate.variance == 0
    assert estimate.ci == (10, 10)

    single = estimate_frequency(1, 0.5, sample_size=1)
    assert single.variance is None
    assert single.ci == (2, 2)

    low = estimate_frequency(0, 0.5, strata=[StratumTally(100, 50, 1)])
    assert low.ci_low == 0.0

    with pytest.raises(ConfigError):
        estimate_frequency(1, 0)


def test_sample_plan_is_stratified_and_seeded(random_graph):
    graph = random_graph(seed=3, vertices=60, edges=100, attributes=4)
    frequent = tuple(graph.attributes)
    plan = build_sample(graph, frequent, 0.3, seed=11)
    again = build_sample(graph, frequent, 0.3, seed=11)

    assert plan.sampled == again.sampled
    for sig, members in plan.strata.items():
        assert len(plan.sampled[sig]) == math.ceil(0.3 * len(members))
        assert set(plan.sampled[sig]) <= set(members)
        assert all(graph.attribute_sets[v] == sig for v in members)
    assert plan.population_size == sum(1 for attrs in graph.attribute_sets if attrs)

    full = build_sample(graph, frequent, 1.0, seed=11)
    assert full.vertices == frozenset(v for v, attrs in enumerate(graph.attribute_sets) if attrs)

    with pytest.raises(ConfigError):
        build_sample(graph, frequent, 0.0, seed=1)


def test_sampled_rules_carry_intervals(random_graph):
    graph = random_graph(seed=5, vertices=40, edges=120, labels=2, attributes=3)
    result = mine(graph, MinerConfig.build("2", 1, sampling_rate=0.5, rng_seed=7))
    for rule in result.rules:
        assert rule.estimated
        low, high = rule.ci
        assert 0 <= low <= high


def test_sampled_support_is_the_value_compared_with_theta(random_graph):
    assert estimated_support(3, 0.5) == 6
    assert estimated_support(1, 0.3) == 3
    assert estimated_support(7) == 7

    shared = frozenset(range(5))
    asupp, rsupp, _, _ = compute_metrics(shared, shared, 100, rate=0.4)
    assert asupp == estimated_support(5, 0.4)
    assert rsupp == asupp / 100

    graph = random_graph(seed=8, vertices=40, edges=120, labels=2, attributes=3)
    result = mine(graph, MinerConfig.build("12", 1, sampling_rate=0.4, rng_seed=3))
    for rule in result.rules:
        assert rule.asupp > result.theta
        assert rule.rsupp == rule.asupp / graph.num_vertices
    for p, support in result.frequent.support.items():
        if p.length >= 1:
            assert support > result.theta


@pytest.mark.parametrize("psi", [0.2, 0.4, 0.6, 0.8])
def test_candidate_reduction_has_full_precision(psi):
    for case in random_suite():
        graph = suite_graph(case)
        exact = mine(graph, MinerConfig.build(case.theta, case.max_length))
        reduced = mine(graph, MinerConfig.build(case.theta, case.max_length, candidate_reduction=psi))

        exact_patterns = mined_patterns(exact)
        for p, sources in mined_patterns(reduced).items():
            assert exact_patterns.get(p) == sources, (case, p)
        exact_rules = set(rule_keys(exact.rules))
        assert set(rule_keys(reduced.rules)) <= exact_rules, case


def test_rate_and_factor_of_one_match_exact_output():
    for case in random_suite():
        graph = suite_graph(case)
        exact = mine(graph, MinerConfig.build(case.theta, case.max_length))
        degenerate = mine(
            graph,
            MinerConfig.build(case.theta, case.max_length, candidate_reduction=1.0, sampling_rate=1.0),
        )
        assert rule_lines(degenerate.rules, graph) == rule_lines(exact.rules, graph), case
