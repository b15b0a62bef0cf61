import itertools
import random

import pytest

from loopbraid.automorphism import generator_alpha, identity
from loopbraid.words import (
    BraidWord,
    GeneratorToken,
    ParseError,
    alpha_word,
    equal,
    evaluate,
    evaluate_slow,
    format_word,
    generator_tokens,
    inverse_word,
    is_extended,
    is_pure,
    parse,
    permutation,
    permutation_word,
    random_word,
    strand_permutation,
)


def imgs(w):
    return [str(x) for x in evaluate(w).images]


def test_parse_examples():
    assert parse("s1 S2 r1", 3).tokens == (("s", 1), ("S", 2), ("r", 1))
    assert parse("t3", 3).tokens == (("t", 3),)
    assert parse("", 3) == BraidWord(3)


@pytest.mark.parametrize(
    "text, pos",
    [("r3", 0), ("s1 x2", 3), ("s1  s0", 4), ("t4", 0), ("s", 0), ("R1", 0), ("s1s2", 0)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text, 3)
    assert info.value.position == pos


def test_format_canonical_spacing():
    assert format_word(parse("  s1   S2\tr1 ", 3)) == "s1 S2 r1"


def test_evaluate_examples():
    assert evaluate(BraidWord(3)) == identity(3)
    assert evaluate(parse("s1 S1", 2)).is_identity()
    assert imgs(parse("r1 s1", 2)) == ["x1", "x1^-1 x2 x1"]


def test_evaluate_matches_compose_fold():
    rng = random.Random(0)
    for _ in range(300):
        n = rng.randint(1, 6)
        w = random_word(n, rng.randint(0, 20), rng.random(), True)
        assert evaluate(w) == evaluate_slow(w)


def test_evaluate_is_a_homomorphism():
    from loopbraid.automorphism import compose

    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(2, 6)
        u = random_word(n, rng.randint(0, 10), rng.random(), True)
        v = random_word(n, rng.randint(0, 10), rng.random(), True)
        assert evaluate(u * v) == compose(evaluate(u), evaluate(v))


def test_equal_examples():
    assert equal(parse("s1 s2 s1", 3), parse("s2 s1 s2", 3))
    assert equal(parse("r1 r1", 2), parse("", 2))
    assert not equal(parse("s1 s1", 2), parse("", 2))
    with pytest.raises(ValueError):
        equal(parse("", 2), parse("", 3))


def test_permutation_queries():
    assert permutation(parse("r1 r2", 3)) == (2, 3, 1)
    assert strand_permutation(parse("r1 r2", 3)) == (3, 1, 2)
    assert is_pure(parse("s1 S1", 2))
    assert not is_pure(parse("s1", 2))
    assert is_extended(parse("t1", 2))
    assert not is_extended(parse("s1 r1", 2))


def test_permutation_matches_evaluation():
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randint(1, 6)
        w = random_word(n, rng.randint(0, 15), rng.random(), True)
        assert permutation(w) == evaluate(w).permutation


def test_inverse_word():
    assert format_word(inverse_word(parse("s1 r2", 3))) == "r2 S1"
    assert format_word(inverse_word(parse("t1", 2))) == "t1"
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randint(1, 6)
        w = random_word(n, rng.randint(0, 15), rng.random(), True)
        assert evaluate(w * inverse_word(w)).is_identity()
        assert evaluate(inverse_word(w) * w).is_identity()


def test_permutation_word():
    for n in range(1, 6):
        for p in itertools.permutations(range(1, n + 1)):
            w = permutation_word(n, p)
            assert permutation(w) == p
            assert set(t.kind for t in w.tokens) <= {"r"}


def _search_alpha(n, i, j, max_len=4):
    target = generator_alpha(n, i, j)
    toks = generator_tokens(n)
    for length in range(max_len + 1):
        found = [
            BraidWord(n, c) for c in itertools.product(toks, repeat=length) if evaluate(BraidWord(n, c)) == target
        ]
        if found:
            return found
    return []


def test_alpha_base_words_by_search():
    # shortest sigma/rho words for the two alphas at n = 2
    assert [format_word(w) for w in _search_alpha(2, 1, 2)] == ["s1 r1"]
    assert [format_word(w) for w in _search_alpha(2, 2, 1)] == ["r1 s1"]
    assert format_word(alpha_word(2, 1, 2)) == "s1 r1"
    assert format_word(alpha_word(2, 2, 1)) == "r1 s1"


def test_alpha_words():
    assert imgs(alpha_word(2, 2, 1)) == ["x1", "x1^-1 x2 x1"]
    for n in range(2, 6):
        for i, j in itertools.permutations(range(1, n + 1), 2):
            w = alpha_word(n, i, j)
            assert evaluate(w) == generator_alpha(n, i, j)
            assert is_pure(w) and not is_extended(w)
    with pytest.raises(ValueError):
        alpha_word(3, 2, 2)
    with pytest.raises(ValueError):
        alpha_word(3, 1, 4)


def test_random_word():
    assert len(random_word(3, 0, 1)) == 0
    assert random_word(4, 30, 99, True) == random_word(4, 30, 99, True)
    assert not is_extended(random_word(4, 200, 5, False))
    assert is_extended(random_word(4, 200, 5, True))
    with pytest.raises(ValueError):
        random_word(3, -1, 0)


def test_sigma_has_infinite_order():
    for k in range(1, 51):
        assert not evaluate(BraidWord(2, (GeneratorToken("s", 1),) * k)).is_identity()


def test_tau_tracks_signs_through_permutation():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(1, 5)
        w = random_word(n, rng.randint(0, 12), rng.random(), True)
        f = evaluate(w)
        k = rng.randint(1, n)
        g = evaluate(w * BraidWord(n, (GeneratorToken("t", k),)))
        flipped = [i for i in range(1, n + 1) if f.signs[i - 1] != g.signs[i - 1]]
        assert flipped == [k]
        assert g.permutation == f.permutation


def test_artin_product_fails_for_rho():
    from loopbraid.automorphism import apply
    from loopbraid.free_group import FreeWord

    f = evaluate(parse("r1", 2))
    assert str(apply(f, FreeWord(2, [1, 2]))) == "x2 x1"
