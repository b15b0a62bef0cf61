import random

import pytest

from loopbraid.rewriting import (
    BACKWARD,
    FORWARD,
    MoveError,
    MoveRecord,
    apply_move,
    bfs_equivalent,
    format_path,
    free_cancel,
    moves,
    neighbors,
    parse_path,
    replay,
    rule_table,
    simplify,
)
from loopbraid.words import BraidWord, evaluate, format_word, parse, random_word


def has_rule(rules, lhs, rhs, n):
    a, b = parse(lhs, n).tokens, parse(rhs, n).tokens
    return any({r.lhs, r.rhs} == {a, b} for r in rules)


def test_rule_table_examples():
    assert has_rule(rule_table(3), "r2 r1 s2", "s1 r2 r1", 3)
    assert has_rule(rule_table(3, True), "t2 s1", "r1 S1 r1 t1", 3)
    assert not has_rule(rule_table(3), "t2 s1", "r1 S1 r1 t1", 3)


def test_rule_table_small_n():
    pairs = {(format_word(BraidWord(2, r.lhs)), format_word(BraidWord(2, r.rhs))) for r in rule_table(2)}
    assert pairs == {("s1 S1", ""), ("S1 s1", ""), ("r1 r1", "")}
    assert {r.family for r in rule_table(2, True)} == {"R2", "V2", "T2", "TR", "TS", "TSbar", "T-comm"}
    assert rule_table(1) == ()
    with pytest.raises(ValueError):
        rule_table(0)


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("extended", [False, True])
def test_every_rule_is_sound(n, extended):
    for r in rule_table(n, extended):
        assert evaluate(BraidWord(n, r.lhs)) == evaluate(BraidWord(n, r.rhs)), r.name


def test_rules_are_distinct():
    rules = rule_table(5, True)
    assert len({frozenset((r.lhs, r.rhs)) for r in rules}) == len(rules)
    assert len({r.name for r in rules}) == len(rules)


def test_neighbors_examples():
    assert BraidWord(2) in neighbors(parse("s1 S1", 2))
    assert parse("r1 r1", 2) in neighbors(BraidWord(2))
    assert neighbors(BraidWord(2), max_length=1) == []


def test_neighbors_preserve_evaluation():
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(2, 5)
        w = random_word(n, rng.randint(0, 10), rng.random(), True)
        f = evaluate(w)
        for u in neighbors(w):
            assert evaluate(u) == f


def test_neighbor_relation_is_symmetric():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randint(2, 4)
        ext = rng.random() < 0.5
        rules = rule_table(n, ext)
        w = random_word(n, rng.randint(0, 6), rng.random(), ext)
        for u in neighbors(w, rules):
            assert w in neighbors(u, rules)


def test_moves_replay_and_invert():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(2, 5)
        w = random_word(n, rng.randint(0, 8), rng.random(), True)
        for rec, u in moves(w):
            assert apply_move(w, rec) == u
            assert apply_move(u, rec.inverse()) == w


def test_apply_move_errors():
    w = parse("s1 s1", 2)
    with pytest.raises(MoveError):
        apply_move(w, MoveRecord("nope", FORWARD, 0))
    with pytest.raises(MoveError):
        apply_move(w, MoveRecord("R2: s1 S1 = 1", FORWARD, 0))
    with pytest.raises(MoveError):
        apply_move(w, MoveRecord("R2: s1 S1 = 1", BACKWARD, 5))


def test_path_json_round_trip():
    path = [MoveRecord("V2: r1 r1 = 1", FORWARD, 0), MoveRecord("R2: s1 S1 = 1", BACKWARD, 3)]
    text = format_path(path)
    assert text.count("\n") == 2
    assert parse_path(text) == path
    assert parse_path("") == []


def test_bfs_examples():
    res = bfs_equivalent(parse("r1 r1", 2), BraidWord(2), 4)
    assert res.connected and len(res.path) == 1
    a, b = parse("s1 s2 s1", 3), parse("s2 s1 s2", 3)
    res = bfs_equivalent(a, b, 2)
    assert res.connected and replay(a, res.path) == b
    res = bfs_equivalent(a, a, 0)
    assert res.connected and res.path == ()


def test_bfs_inconclusive():
    res = bfs_equivalent(parse("s1", 2), BraidWord(2), 4)
    assert not res.connected and res.path is None
    res = bfs_equivalent(parse("s1 s1 s1", 2), parse("S1", 2), 50, max_states=500)
    assert res.status == "inconclusive"
    with pytest.raises(ValueError):
        bfs_equivalent(BraidWord(2), BraidWord(3), 1)


def test_bfs_never_connects_different_images():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 3)
        u = random_word(n, rng.randint(0, 4), rng.random(), True)
        v = random_word(n, rng.randint(0, 4), rng.random(), True)
        res = bfs_equivalent(u, v, 3, max_states=5000)
        if evaluate(u) != evaluate(v):
            assert not res.connected
        if res.connected:
            assert replay(u, res.path) == v


def test_bfs_paths_replay():
    rng = random.Random(4)
    found = 0
    for _ in range(60):
        n = rng.randint(2, 4)
        w = random_word(n, rng.randint(1, 5), rng.random(), True)
        u = w
        for _ in range(2):
            u = rng.choice(neighbors(u))
        res = bfs_equivalent(w, u, 2)
        assert res.connected
        assert replay(w, res.path) == u
        found += 1
    assert found == 60


def test_free_cancel():
    assert free_cancel(parse("s1 r2 r2 S1 t1 t1", 3)) == BraidWord(3)
    assert format_word(free_cancel(parse("s1 s2 S1", 3))) == "s1 s2 S1"


def test_simplify_examples():
    assert simplify(parse("s1 S1 r2 r2", 3)) == BraidWord(3)
    assert simplify(BraidWord(4)) == BraidWord(4)
    assert len(simplify(parse("s1 s2 s1 S2 S1 S2", 3))) == 0


def test_simplify_preserves_evaluation():
    rng = random.Random(5)
    for _ in range(500):
        n = rng.randint(2, 5)
        w = random_word(n, rng.randint(0, 10), rng.random(), True)
        u = simplify(w, budget=200)
        assert len(u) <= len(w)
        assert evaluate(u) == evaluate(w)


def test_simplify_is_deterministic():
    w = random_word(4, 12, 11, True)
    assert simplify(w, budget=300) == simplify(w, budget=300)


def test_rules_for_more_strands_are_validated():
    with pytest.raises(ValueError):
        moves(BraidWord(2), rule_table(4))
