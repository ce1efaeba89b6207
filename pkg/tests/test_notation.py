import pytest
from hypothesis import given, settings, strategies as st

from singbraid.errors import NotationError
from singbraid.notation import (
    format_britton,
    format_permutation,
    format_word,
    normalize_unicode,
    parse_braid_word,
    parse_word,
)
from singbraid.permutations import Permutation
from singbraid.singular import SingularLetter, SingularWord, to_britton_form


def test_parse_examples():
    word = parse_word("s2 s1^2 s2 t1", 3)
    assert [(l.kind, l.index, l.sign) for l in word.letters] == [
        ("s", 2, 1),
        ("s", 1, 1),
        ("s", 1, 1),
        ("s", 2, 1),
        ("t", 1, 1),
    ]
    assert parse_word("", 3) == SingularWord.identity(3)
    with pytest.raises(NotationError):
        parse_word("t0", 3)


def test_parse_exponents_and_separators():
    assert parse_word("s1^-2", 2).letters == (
        SingularLetter("s", 1, -1),
        SingularLetter("s", 1, -1),
    )
    assert parse_word("s1.s1", 2) == parse_word("s1 s1", 2)
    assert parse_word("s1^0", 2) == SingularWord.identity(2)
    assert parse_word("s1^+2", 2) == parse_word("s1 s1", 2)


def test_parse_negative_tau_flagged_not_rejected():
    word = parse_word("t1^-1", 2)
    assert word.has_negative_tau()


def test_parse_error_positions():
    with pytest.raises(NotationError) as err:
        parse_word("s1 q2", 3)
    assert err.value.position == 3
    with pytest.raises(NotationError) as err:
        parse_word("s", 3)
    assert err.value.position == 0
    with pytest.raises(NotationError) as err:
        parse_word("s1^x", 3)
    assert err.value.position == 3
    with pytest.raises(NotationError) as err:
        parse_word("s9", 3)
    assert err.value.position == 0


def test_parse_braid_word_rejects_tau():
    with pytest.raises(NotationError):
        parse_braid_word("t1", 2)


def test_unicode_reader():
    assert normalize_unicode("σ1·τ1").split() == ["s1", "t1"]
    assert parse_word("σ1·τ1", 2) == parse_word("s1 t1", 2)
    assert parse_word("σ2σ1²σ2τ1", 3) == parse_word("s2 s1^2 s2 t1", 3)
    assert parse_word("σ1⁻¹", 2) == parse_word("s1^-1", 2)


@st.composite
def singular_words(draw):
    n = draw(st.integers(2, 6))
    letters = []
    for _ in range(draw(st.integers(0, 12))):
        kind = draw(st.sampled_from(["s", "t"]))
        index = draw(st.integers(1, n - 1))
        sign = draw(st.sampled_from([1, -1])) if kind == "s" else 1
        letters.append(SingularLetter(kind, index, sign))
    return SingularWord(n, tuple(letters))


@given(singular_words())
@settings(max_examples=150)
def test_parse_format_round_trip(word):
    assert parse_word(format_word(word), word.strands) == word


def test_format_permutation():
    assert format_permutation(Permutation([3, 1, 2])) == "1↦3 2↦1 3↦2"


def test_format_britton():
    form = to_britton_form(parse_word("t1 t1", 2))
    assert format_britton(form) == "s1^-1 s1^-1 ; X[1,1] ;  ; X[1,1] ; "
