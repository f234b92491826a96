import numpy as np
import pytest

from src.core.exceptions import PatternFormatError
from src.crud.rule_files import crud_rule_files
from src.models.pattern import PathPattern, PatternKind, RuleCandidate, format_pattern, parse_pattern
from src.services.miner_service import Rule

from .support import build_graph, pattern


def test_attribute_sets_are_canonical():
    p = PathPattern.simple([(3, 1, 1), (2,)], [0])
    q = PathPattern.simple([(1, 3), (2,)], [0])
    assert p == q
    assert hash(p) == hash(q)
    assert p.attribute_sets == ((1, 3), (2,))


def test_shape_is_validated():
    with pytest.raises(ValueError):
        PathPattern(PatternKind.SIMPLE, ((1,), (2,)), ())
    with pytest.raises(ValueError):
        PathPattern(PatternKind.REACHABILITY, ((1,), (2,), (3,)), (0, 0))


def test_dominance():
    longer = PathPattern.simple([(1, 2), (3,), (4,)], [0, 1])
    shorter = PathPattern.simple([(1,), (3,)], [0])
    other_label = PathPattern.simple([(1,), (3,)], [1])

    assert longer.dominates(shorter)
    assert not shorter.dominates(longer)
    assert not longer.dominates(other_label)
    assert longer.dominates(longer)
    assert not PathPattern.reachability((1,), 0, (3,)).dominates(shorter)


def test_rule_candidate_admissibility():
    x = PathPattern.simple([(1,), (3,)], [0])
    y = PathPattern.simple([(1,), (4,)], [2])
    assert RuleCandidate(x, y).is_admissible()
    assert not RuleCandidate(x, x).is_admissible()
    assert not RuleCandidate(x, x.vertical_extend(1, (5,))).is_admissible()


def test_vertical_and_horizontal_extension():
    base = PathPattern.simple([(1,)])
    one = base.vertical_extend(0, (3,))
    assert one == PathPattern.simple([(1,), (3,)], [0])

    left = PathPattern.simple([(1,), (3,)], [0])
    right = PathPattern.simple([(1,), (4,)], [0])
    assert left.horizontal_extend(right) == PathPattern.simple([(1,), (3, 4)], [0])
    # two differing positions
    assert left.horizontal_extend(PathPattern.simple([(2,), (4,)], [0])) is None
    # different labels
    assert left.horizontal_extend(PathPattern.simple([(1,), (4,)], [1])) is None

    with pytest.raises(ValueError):
        PathPattern.reachability((1,), 0, (2,)).vertical_extend(0, (3,))


def test_prefix_and_sub_patterns():
    p = PathPattern.simple([(1, 2), (3,), (4, 5)], [0, 1])
    assert p.prefix(1) == PathPattern.simple([(1, 2), (3,)], [0])
    assert p.prefix(0) == PathPattern.simple([(1, 2)])
    assert set(p.sub_patterns()) == {
        PathPattern.simple([(2,), (3,), (4, 5)], [0, 1]),
        PathPattern.simple([(1,), (3,), (4, 5)], [0, 1]),
        PathPattern.simple([(1, 2), (3,), (5,)], [0, 1]),
        PathPattern.simple([(1, 2), (3,), (4,)], [0, 1]),
    }
    assert p.size == 5
    assert not p.is_unit()
    assert PathPattern.simple([(1,), (3,)], [0]).is_unit()


def test_format_and_parse(campus):
    text = "<{CS,Male} -Follows-> {} -BelongTo-> {Uni}>"
    p = pattern(campus, text)
    assert p.length == 2
    assert p.attribute_sets[1] == ()
    assert format_pattern(p, campus.label_dict, campus.attribute_dict) == text

    reach = pattern(campus, "<{Male} -Follows*-> {Art}>")
    assert reach.is_reachability
    assert format_pattern(reach, campus.label_dict, campus.attribute_dict) == "<{Male} -Follows*-> {Art}>"

    assert pattern(campus, "<{Uni}>").length == 0


@pytest.mark.parametrize(
    "text",
    [
        "{CS} -Follows-> {Art}",
        "<{CS} -Follows->>",
        "<{Robot} -Follows-> {Art}>",
        "<{CS} -Teaches-> {Art}>",
        "<{CS} -Follows*-> {Art} -Follows*-> {Art}>",
    ],
)
def test_parse_rejects_bad_text(campus, text):
    with pytest.raises(PatternFormatError):
        parse_pattern(text, campus.label_dict, campus.attribute_dict)


def test_labels_with_spaces_round_trip():
    graph = build_graph(
        {"x": ["Computer Science"], "y": ["Uni"], "z": ["Uni"]},
        [("x", "belongs to", "y"), ("y", "is near", "z"), ("x", "a-b", "z")],
    )
    texts = [
        "<{Computer Science} -belongs to-> {Uni} -is near-> {Uni}>",
        "<{Computer Science} -belongs to*-> {Uni}>",
        "<{Computer Science} -a-b-> {Uni}>",
    ]
    for text in texts:
        p = pattern(graph, text)
        assert format_pattern(p, graph.label_dict, graph.attribute_dict) == text
    assert pattern(graph, texts[1]).is_reachability
    assert pattern(graph, texts[2]).labels == (graph.label_dict.id_of("a-b"),)

    rule = Rule(pattern(graph, texts[0]), pattern(graph, texts[2]), 1, 0.25, 1.0, 2.0)
    line = crud_rule_files.serialize_rule(rule, graph)
    assert crud_rule_files.parse_rule(line, graph) == rule


def random_pattern(rng) -> PathPattern:
    length = int(rng.integers(0, 3))
    sets = [tuple(int(a) for a in np.flatnonzero(rng.random(3) < 0.5)) for _ in range(length + 1)]
    labels = [int(label) for label in rng.integers(0, 2, size=length)]
    return PathPattern.simple(sets, labels)


def test_dominance_is_a_partial_order():
    rng = np.random.default_rng(17)
    for _ in range(3000):
        p, q, r = (random_pattern(rng) for _ in range(3))
        assert p.dominates(p)
        if p.dominates(q) and q.dominates(p):
            assert p == q
        if p.dominates(q) and q.dominates(r):
            assert p.dominates(r)


def test_join_dominates_both_siblings():
    rng = np.random.default_rng(5)
    joins = 0
    for _ in range(500):
        base = random_pattern(rng)
        assert base.horizontal_extend(base) is None
        i = int(rng.integers(0, base.length + 1))
        missing = [a for a in range(4) if a not in base.attribute_sets[i]]
        if len(missing) < 2:
            continue
        left = base.with_position(i, base.attribute_sets[i] + (missing[0],))
        right = base.with_position(i, base.attribute_sets[i] + (missing[1],))
        joined = left.horizontal_extend(right)
        assert joined == right.horizontal_extend(left)
        assert joined.size == left.size + 1
        assert joined.dominates(left) and joined.dominates(right)
        assert left.horizontal_extend(left) is None
        joins += 1
    assert joins > 100
