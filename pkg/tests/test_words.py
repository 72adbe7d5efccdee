# File: tests/test_words.py
import pytest
from hypothesis import given, settings, strategies as st

from utils.exceptions import BadInput, CapExceeded
from words import (IDENTITY, Letter, Rank, Word, ball, ball_size, distance, format_word,
                   generator, inverse, multiply, parse_word, power, reduce, sphere, sphere_size)


@st.composite
def word_of_rank(draw, rank):
    letters = draw(st.lists(
        st.builds(Letter, st.integers(1, rank), st.sampled_from([1, -1])),
        max_size=10
    ))
    return reduce(letters)


def test_rank_parse():
    assert Rank.parse('2').q == 3
    assert Rank.parse(3).r == 3
    assert not Rank.parse('inf').is_finite
    assert not Rank.parse('infinity').is_finite
    assert Rank.parse('infinity').to_json() == 'infinity'
    assert Rank.parse(2).to_json() == 2


@pytest.mark.parametrize("value", [0, -1, True, 'two', 1.5])
def test_rank_rejects(value):
    with pytest.raises(BadInput):
        Rank.parse(value)


def test_q_undefined_for_infinite_rank():
    with pytest.raises(BadInput):
        Rank.infinite().q


def test_word_must_be_reduced():
    with pytest.raises(BadInput):
        Word((Letter(1, 1), Letter(1, -1)))


def test_letter_validation():
    with pytest.raises(BadInput):
        Letter(0)
    with pytest.raises(BadInput):
        Letter(1, 2)


def test_reduce_cancels_nested_pairs():
    a, A, b, B = Letter(1), Letter(1, -1), Letter(2), Letter(2, -1)
    assert reduce([a, b, B, A]) == IDENTITY
    assert reduce([a, b, B, b]) == Word((a, b))


def test_parse_and_format():
    word = parse_word('a1 a2^-1 a1')
    assert len(word) == 3
    assert format_word(word) == 'a1 a2^-1 a1'
    assert str(word) == 'a1 a2^-1 a1'
    assert parse_word('a1 a1^-1') == IDENTITY
    assert parse_word('e') == IDENTITY
    assert format_word(IDENTITY) == 'e'
    assert parse_word('b3') == generator(3)
    assert format_word(generator(3), 'b') == 'b3'


@pytest.mark.parametrize("text", ['x1', 'a0', 'a1^2', 'a'])
def test_parse_word_rejects(text):
    with pytest.raises(BadInput):
        parse_word(text)


def test_power():
    b1 = generator(1)
    assert len(power(b1, 4)) == 4
    assert power(b1, 0) == IDENTITY
    x = parse_word('a1 a2')
    assert power(x, -2) == inverse(power(x, 2))
    assert len(power(x, 3)) == 6


def test_sphere_sizes():
    rank = Rank(2)
    assert [sphere_size(rank, n) for n in range(4)] == [1, 4, 12, 36]
    assert len(sphere(rank, 2)) == 12
    assert all(len(word) == 2 for word in sphere(rank, 2))
    assert ball_size(rank, 4) == 161
    assert ball_size(Rank(3), 2) == 1 + 6 + 30


def test_ball_order_and_uniqueness():
    rank = Rank(2)
    words = ball(rank, 1)
    assert [format_word(w) for w in words] == ['e', 'a1', 'a1^-1', 'a2', 'a2^-1']

    words = ball(rank, 3)
    assert len(words) == ball_size(rank, 3)
    assert len(set(words)) == len(words)
    assert words == sorted(words, key=Word.sort_key)
    assert max(len(w) for w in words) == 3


def test_ball_rank_one_is_an_interval():
    words = ball(Rank(1), 3)
    assert len(words) == 7
    assert all(len(set(letter.sign for letter in w)) <= 1 for w in words)


def test_ball_cap():
    with pytest.raises(CapExceeded):
        ball(Rank(2), 4, cap=100)


def test_ball_needs_finite_rank():
    with pytest.raises(BadInput):
        ball(Rank.infinite(), 1)


@given(word_of_rank(3))
def test_inverse_cancels(x):
    assert multiply(x, inverse(x)) == IDENTITY
    assert multiply(inverse(x), x) == IDENTITY


@given(word_of_rank(3), word_of_rank(3), word_of_rank(3))
def test_multiply_is_associative(x, y, z):
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@settings(max_examples=200)
@given(word_of_rank(3), word_of_rank(3))
def test_distance_is_length_of_quotient(x, y):
    assert distance(x, y) == len(multiply(inverse(x), y))
    assert distance(x, y) == distance(y, x)
    assert distance(IDENTITY, x) == len(x)


@given(word_of_rank(4))
def test_format_parse_roundtrip(x):
    assert parse_word(format_word(x)) == x


@settings(max_examples=1000)
@given(word_of_rank(3), word_of_rank(3))
def test_product_length_parity(x, y):
    assert (len(multiply(x, y)) - len(x) - len(y)) % 2 == 0


@given(word_of_rank(3), word_of_rank(3))
def test_reduced_concatenation_is_the_product(x, y):
    assert reduce(list(x) + list(y)) == multiply(x, y)


def test_parity_example():
    x, y = parse_word('a1 a2'), parse_word('a2^-1 a1^-1 a2')
    assert multiply(x, y) == generator(2)
    assert len(x) + len(y) == 5


@pytest.mark.parametrize("r", [1, 2, 3])
def test_ball_is_closed_under_inverse(r):
    words = ball(Rank(r), 3)
    assert {inverse(w) for w in words} == set(words)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_ball_size_is_sum_of_spheres(r):
    rank = Rank(r)
    q = rank.q
    for radius in range(7):
        closed = 1 + 2 * radius if q == 1 else 1 + (q + 1) * (q ** radius - 1) // (q - 1)
        assert ball_size(rank, radius) == sum(sphere_size(rank, n) for n in range(radius + 1)) == closed
    for radius in range(4):
        assert len(ball(rank, radius)) == sum(len(sphere(rank, n)) for n in range(radius + 1))
