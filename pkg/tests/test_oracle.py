import pytest

from src.core.exceptions import OracleGuardError
from src.crud.rule_files import crud_rule_files
from src.services.oracle_service import OracleStrategy, compare_rule_sets, guard_report, oracle_mine

from .support import build_graph, pattern, rule_lines, vertex_ids


def test_campus_oracle(campus):
    result = oracle_mine(campus, 1, 2)
    x = pattern(campus, "<{CS} -Follows-> {Art}>")
    y = pattern(campus, "<{CS} -BelongTo-> {Uni}>")

    assert result.frequent_patterns[pattern(campus, "<{Male} -Follows-> {Male}>")] == vertex_ids(
        campus, "v8", "v9", "v12"
    )
    assert pattern(campus, "<{CS} -Follows-> {Chem}>") not in result.frequent_patterns
    rule = next(r for r in result.rules if r.antecedent == x and r.consequent == y)
    assert (rule.asupp, rule.conf, rule.lift) == (2, 1.0, 6.0)
    assert all(p.length == 1 for p in result.simple(1))
    assert all(p.is_reachability for p in result.reachability)


def test_strategies_agree(campus, random_graph):
    graphs = [campus] + [random_graph(seed=s, vertices=15, edges=30) for s in range(5)]
    for graph in graphs:
        for unbounded in (False, True):
            dfs = oracle_mine(graph, 1, 2, OracleStrategy.DFS, unbounded)
            join = oracle_mine(graph, 1, 2, OracleStrategy.JOIN, unbounded)
            assert dfs.frequent_patterns == join.frequent_patterns
            assert rule_lines(dfs.rules, graph) == rule_lines(join.rules, graph)


def test_guard_rejects_large_instances(random_graph):
    graph = random_graph(vertices=201, edges=10)
    with pytest.raises(OracleGuardError) as exc:
        oracle_mine(graph, 1, 2)
    assert exc.value.report["vertices"] == {"actual": 201, "limit": 200}
    assert exc.value.exit_code == 1

    small = build_graph({"x": ["a"]}, [])
    with pytest.raises(OracleGuardError):
        oracle_mine(small, 0, 4)
    assert guard_report(small, 4)["max_length"]["actual"] == 4


def test_compare_rule_sets(campus):
    rules = oracle_mine(campus, 1, 1).rules
    records = [crud_rule_files.record_from_rule(r, campus) for r in rules]

    same = compare_rule_sets(records, records)
    assert same.identical
    assert (same.precision, same.recall) == (1.0, 1.0)

    partial = compare_rule_sets(records, records[1:])
    assert partial.precision == 1.0
    assert partial.recall == pytest.approx((len(records) - 1) / len(records))
    assert partial.missing == [(records[0].antecedent_text, records[0].consequent_text)]
    assert "- " in partial.render()

    changed = records[0].model_copy(update={"lift": records[0].lift + 1})
    drifted = compare_rule_sets(records, [changed] + records[1:])
    assert drifted.metric_mismatches == [(records[0].antecedent_text, records[0].consequent_text)]
    assert not drifted.identical

    empty = compare_rule_sets([], [])
    assert empty.identical and empty.precision == 1.0
