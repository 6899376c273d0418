import pytest

from viciouswalk.counting import f_inv
from viciouswalk.tableaux import Partition
from viciouswalk.walks import (
    ClassOne,
    ClassTwo,
    InvalidWordError,
    L,
    R,
    WalkerWord,
    WordErrorCode,
    enumerate_words,
    max_displacement,
    parse_word,
    validate_word,
    word_from_json,
    word_to_shape_sequence,
)

FIG2 = "1 2 1 2~ 1~ 1~"
FIG3 = "1 2 2~ 1~ 1 1~"


def test_parse_and_format():
    letters = parse_word(FIG2)
    assert letters == (R(1), R(2), R(1), L(2), L(1), L(1))
    assert str(WalkerWord(letters)) == FIG2
    assert parse_word("1 2 1 2̄ 1̄ 1̄") == letters
    assert word_from_json(WalkerWord(letters).to_json()) == letters


def test_figure_words_valid():
    assert validate_word(FIG2, ClassTwo(2)).N == 3
    assert validate_word(FIG3, ClassOne(2)).N == 3


@pytest.mark.parametrize("word, cls, code", [
    ("1~ 1", ClassTwo(1), WordErrorCode.NEGATIVE),
    ("2 2~", ClassTwo(2), WordErrorCode.ORDERING),
    ("1 2 1~ 2~", ClassTwo(2), WordErrorCode.ORDERING),
    ("1 1 1~", ClassTwo(2), WordErrorCode.NONZERO_FINAL),
    ("1 1 1~ 1~", ClassTwo(1), WordErrorCode.CLASS),
    ("1 2 2~ 1~", ClassOne(1), WordErrorCode.CLASS),
    ("1 x", ClassTwo(1), WordErrorCode.SYNTAX),
])
def test_error_codes(word, cls, code):
    with pytest.raises(InvalidWordError) as info:
        validate_word(word, cls)
    assert info.value.code is code


def test_shape_sequence_class_two_figure2():
    shapes = word_to_shape_sequence(parse_word(FIG2), ClassTwo(2))
    assert [s.parts for s in shapes] == [(), (1,), (2,), (2, 1), (1, 1), (1,), ()]


def test_shape_sequence_class_one_figure4():
    shapes = word_to_shape_sequence(parse_word(FIG3), ClassOne(2))
    assert [s.parts for s in shapes] == [(), (1,), (1, 1), (1,), (), (1,), ()]


def test_shape_sequence_empty_word():
    assert word_to_shape_sequence(WalkerWord(()), ClassTwo(1)) == [Partition(())]


def test_max_displacement():
    assert max_displacement(parse_word(FIG2)) == 2
    assert max_displacement(WalkerWord(())) == 0
    assert max_displacement(parse_word("1 1~ " * 5)) == 1


def test_enumerate_small_cases():
    assert [str(w) for w in enumerate_words(1, ClassTwo(1))] == ["1 1~"]
    assert [str(w) for w in enumerate_words(2, ClassOne(1))] == ["1 1 1~ 1~", "1 1~ 1 1~"]
    assert list(enumerate_words(0, ClassOne(3))) == [WalkerWord(())]


def test_enumeration_is_sorted_and_unique():
    def key(w):
        return [(l.walker, l.direction.value != "R") for l in w]
    words = list(enumerate_words(4, ClassTwo(3)))
    keys = [key(w) for w in words]
    assert keys == sorted(keys)
    assert len(set(map(str, words))) == len(words)


@pytest.mark.parametrize("N", range(6))
@pytest.mark.parametrize("p", range(1, 5))
def test_enumeration_counts_match_counting(N, p):
    expected = f_inv(N, p).value
    assert sum(1 for _ in enumerate_words(N, ClassOne(p))) == expected
    assert sum(1 for _ in enumerate_words(N, ClassTwo(p))) == expected


@pytest.mark.parametrize("N", range(1, 6))
@pytest.mark.parametrize("p", range(1, 5))
def test_class_two_displacement_bound_attained(N, p):
    displacements = [max_displacement(w) for w in enumerate_words(N, ClassTwo(p))]
    assert max(displacements) == min(p, N)


@pytest.mark.parametrize("cls", [ClassOne(3), ClassTwo(3)])
def test_shape_sequences_step_by_one_box(cls):
    for w in enumerate_words(4, cls):
        shapes = word_to_shape_sequence(w, cls)
        assert len(shapes) == 9
        assert shapes[0].size == shapes[-1].size == 0
        assert all(abs(a.size - b.size) == 1 for a, b in zip(shapes, shapes[1:]))
