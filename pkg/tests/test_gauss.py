import itertools
import json
import random

import pytest

from loopbraid.gauss import (
    OMEGA2,
    OMEGA3,
    OMEGA3_TEMPLATES,
    R3_SIGN_VARIANTS,
    TAIL_COMMUTE,
    Arrow,
    GaussDiagram,
    MoveNotApplicable,
    UnsupportedWordError,
    apply_gauss_move,
    applicable_moves,
    dumps,
    from_word,
    gauss_equal,
    gauss_evaluate,
    loads,
    random_diagram,
    realize,
)
from loopbraid.words import BraidWord, GeneratorToken, equal, evaluate, format_word, parse, random_word, strand_permutation


def test_from_word_examples():
    g = from_word(parse("r1", 2))
    assert g.arrows == () and g.permutation == (2, 1)
    g = from_word(parse("s1", 2))
    assert g.arrows == (Arrow(2, 1, 1),) and g.permutation == (2, 1)
    g = from_word(parse("s1 S1", 2))
    assert g.arrows == (Arrow(2, 1, 1), Arrow(2, 1, -1)) and g.permutation == (1, 2)
    # sigma^-1: the strand at the left position passes over
    assert from_word(parse("S1", 2)).arrows == (Arrow(1, 2, -1),)


def test_from_word_tracks_strands_through_rho():
    g = from_word(parse("r1 s2", 3))
    # after r1 strand 1 sits at position 2, so s2 crosses strand 3 over it
    assert g.arrows == (Arrow(3, 1, 1),)
    assert g.permutation == (3, 1, 2)


def test_permutation_is_exit_positions():
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(2, 6)
        w = random_word(n, rng.randint(0, 12), rng.random())
        assert from_word(w).permutation == strand_permutation(w)


def test_tau_rejected():
    with pytest.raises(UnsupportedWordError):
        from_word(parse("s1 t1", 2))


def test_realize_examples():
    assert realize(GaussDiagram(4, (), (1, 2, 3, 4))) == BraidWord(4)
    assert format_word(realize(GaussDiagram(2, (), (2, 1)))) == "r1"
    assert format_word(realize(from_word(parse("s1", 2)))) == "s1"


def test_rho_words_for_permutations_are_minimal():
    # the final rho block is a bubble sort, so it has inversion-count length
    for p in itertools.permutations(range(1, 5)):
        w = realize(GaussDiagram(4, (), p))
        inversions = sum(1 for a, b in itertools.combinations(p, 2) if a > b)
        assert len(w) == inversions
        assert from_word(w).permutation == p


def test_arrow_count_matches_sigma_count():
    rng = random.Random(1)
    for _ in range(200):
        w = random_word(rng.randint(2, 5), rng.randint(0, 15), rng.random())
        assert len(from_word(w)) == sum(t.kind in "sS" for t in w.tokens)


def test_round_trip_words():
    rng = random.Random(2)
    for _ in range(1000):
        w = random_word(rng.randint(2, 6), rng.randint(0, 20), rng.random())
        assert equal(realize(from_word(w)), w)


def test_round_trip_diagrams():
    rng = random.Random(3)
    for _ in range(1000):
        g = random_diagram(rng.randint(2, 5), rng.randint(0, 10), rng.random())
        assert from_word(realize(g)) == g


@pytest.mark.parametrize(
    "kw",
    [
        dict(strands=0, arrows=(), permutation=()),
        dict(strands=2, arrows=((1, 1, 1),), permutation=(1, 2)),
        dict(strands=2, arrows=((1, 3, 1),), permutation=(1, 2)),
        dict(strands=2, arrows=((1, 2, 0),), permutation=(1, 2)),
        dict(strands=2, arrows=(), permutation=(1, 1)),
    ],
)
def test_invalid_diagrams(kw):
    with pytest.raises(ValueError):
        GaussDiagram(**kw)


def r3_holds(e):
    k = {1: "s", -1: "S"}
    lhs = BraidWord(3, (GeneratorToken(k[e[0]], 1), GeneratorToken(k[e[1]], 2), GeneratorToken(k[e[2]], 1)))
    rhs = BraidWord(3, (GeneratorToken(k[e[2]], 2), GeneratorToken(k[e[1]], 1), GeneratorToken(k[e[0]], 2)))
    return equal(lhs, rhs), lhs, rhs


def test_omega3_templates_come_from_valid_r3_variants():
    valid = [e for e in itertools.product((1, -1), repeat=3) if r3_holds(e)[0]]
    assert sorted(valid) == sorted(R3_SIGN_VARIANTS)
    expected = set()
    for e in valid:
        _, lhs, rhs = r3_holds(e)
        expected |= {from_word(lhs).arrows, from_word(rhs).arrows}
    assert set(OMEGA3_TEMPLATES) == expected
    assert len(OMEGA3_TEMPLATES) == 12
    # each template's time reversal is again a template
    assert {t[::-1] for t in OMEGA3_TEMPLATES} == set(OMEGA3_TEMPLATES)


def test_omega2_delete_and_insert():
    g = from_word(parse("s1 S1", 2))
    h = apply_gauss_move(g, OMEGA2, 1)
    assert h.arrows == () and h.permutation == (1, 2)
    back = apply_gauss_move(h, "Ω2", (1, 2, 1, 1))
    assert back == g
    with pytest.raises(MoveNotApplicable):
        apply_gauss_move(from_word(parse("s1 s1", 2)), OMEGA2, 1)
    with pytest.raises(MoveNotApplicable):
        apply_gauss_move(h, OMEGA2, (1, 1, 1, 1))
    with pytest.raises(MoveNotApplicable):
        apply_gauss_move(h, OMEGA2, (3, 1, 2, 1))


def test_omega3_on_braid_relation():
    g = from_word(parse("s1 s2 s1", 3))
    h = apply_gauss_move(g, OMEGA3, 1)
    assert h == from_word(parse("s2 s1 s2", 3))
    with pytest.raises(MoveNotApplicable):
        apply_gauss_move(from_word(parse("s1 S2 s1", 3)), OMEGA3, 1)


def test_tail_commute():
    g = GaussDiagram(3, (Arrow(1, 2, 1), Arrow(1, 3, -1)), (1, 2, 3))
    h = apply_gauss_move(g, TAIL_COMMUTE, 1)
    assert h.arrows == (Arrow(1, 3, -1), Arrow(1, 2, 1))
    assert gauss_equal(g, h)


def test_head_commute_is_not_a_move():
    g = GaussDiagram(3, (Arrow(1, 3, 1), Arrow(2, 3, 1)), (1, 2, 3))
    with pytest.raises(MoveNotApplicable):
        apply_gauss_move(g, TAIL_COMMUTE, 1)
    # and it genuinely changes the welded braid
    swapped = GaussDiagram(3, g.arrows[::-1], g.permutation)
    assert not gauss_equal(g, swapped)


def test_unknown_move_and_bad_location():
    g = from_word(parse("s1 S1", 2))
    with pytest.raises(ValueError):
        apply_gauss_move(g, "R9", 1)
    with pytest.raises(MoveNotApplicable):
        apply_gauss_move(g, TAIL_COMMUTE, 2)


def test_random_moves_preserve_images():
    rng = random.Random(4)
    applied = 0
    while applied < 2000:
        n = rng.randint(2, 4)
        g = from_word(random_word(n, rng.randint(2, 14), rng.random()))
        for _ in range(3):
            opts = applicable_moves(g)
            if rng.random() < 0.3 or not opts:
                tail, head = rng.sample(range(1, n + 1), 2)
                h = apply_gauss_move(g, OMEGA2, (rng.randint(1, len(g) + 1), tail, head, rng.choice((1, -1))))
            else:
                move, t = rng.choice(opts)
                h = apply_gauss_move(g, move, t)
            assert gauss_evaluate(h) == gauss_evaluate(g)
            assert gauss_equal(g, h)
            applied += 1
            g = h


def test_gauss_equal_examples():
    g = from_word(parse("s1", 2))
    assert gauss_equal(g, g)
    assert not gauss_equal(g, from_word(parse("r1", 2)))
    with pytest.raises(ValueError):
        gauss_equal(g, from_word(BraidWord(3)))


def test_gauss_evaluate():
    w = parse("s1 r2 S1", 3)
    assert gauss_evaluate(from_word(w)) == evaluate(w)


def test_json_format():
    g = from_word(parse("s1 S2", 3))
    text = dumps(g)
    assert text == (
        '{"strands": 3, "arrows": [{"t": 1, "from": 2, "to": 1, "sign": 1}, '
        '{"t": 2, "from": 1, "to": 3, "sign": -1}], "perm": [3, 1, 2]}\n'
    )
    assert loads(text) == g
    assert dumps(loads(text)) == text


def test_json_byte_stable():
    rng = random.Random(5)
    for _ in range(200):
        g = random_diagram(rng.randint(2, 5), rng.randint(0, 8), rng.random())
        assert dumps(loads(dumps(g))) == dumps(g)


@pytest.mark.parametrize(
    "doc",
    [
        {"arrows": [], "perm": [1]},
        {"strands": 2, "arrows": [{"t": 2, "from": 1, "to": 2, "sign": 1}], "perm": [1, 2]},
        {"strands": 2, "arrows": [{"t": 1, "from": 1, "to": 1, "sign": 1}], "perm": [1, 2]},
        {"strands": 2, "arrows": [], "perm": [2, 2]},
        {"strands": "2", "arrows": [], "perm": [1, 2]},
    ],
)
def test_json_validation(doc):
    with pytest.raises(ValueError):
        loads(json.dumps(doc))
