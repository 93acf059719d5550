"""Band-generator arithmetic: normal forms, group laws, token grammar."""

import pytest
from hypothesis import given

from hurwitz3.braid import (
    Braid,
    DELTA_WORDS,
    TokenError,
    evaluate,
    format_plain_word,
    format_signed_word,
    inverse_signed,
    is_delta_pair,
    normalize_positive,
    parse_plain_word,
    parse_signed_word,
    positive_word,
    positive_words_equal_to,
    tau_atom,
    tau_plain,
)

from conftest import braids, plain_words, random_braid, signed_words


def test_delta_pair_table():
    assert is_delta_pair(2, 1) and is_delta_pair(1, 0) and is_delta_pair(0, 2)
    assert not is_delta_pair(1, 1)
    assert not is_delta_pair(1, 2)
    assert sum(is_delta_pair(x, y) for x in range(3) for y in range(3)) == 3


def test_tau_atom():
    assert tau_atom(0) == 1 and tau_atom(1) == 2 and tau_atom(2) == 0
    assert tau_atom(0, 3) == 0
    assert tau_plain((0, 1, 2), -1) == (2, 0, 1)


def test_normalize_examples():
    assert normalize_positive((0, 2)) == ((), 1)
    assert normalize_positive(()) == ((), 0)
    assert normalize_positive((2, 0, 2)) == ((2,), 1)
    assert normalize_positive((1, 0, 2)) == ((1,), 1)


@given(plain_words)
def test_normalize_conserves_length(word):
    v, q = normalize_positive(word)
    assert len(word) == len(v) + 2 * q
    # delta-free output
    assert all(not is_delta_pair(v[i], v[i + 1]) for i in range(len(v) - 1))


def test_delta_identities():
    delta = Braid.delta()
    for word in DELTA_WORDS:
        assert Braid.from_positive(word) == delta
    assert Braid((1,), 0) * Braid((0,), 0) == delta
    assert delta * delta.inverse() == Braid.identity()


def test_inverse_examples():
    assert Braid.identity().inverse() == Braid.identity()
    assert Braid((2,), 0).inverse() == Braid((1,), 1)
    # s2 * s1 delta^-1 == delta * delta^-1 == 1
    assert Braid((2,), 0) * Braid((1,), 1) == Braid.identity()


@given(braids)
def test_group_inverse(a):
    assert a * a.inverse() == Braid.identity()
    assert a.inverse() * a == Braid.identity()


@given(braids, braids, braids)
def test_group_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(braids)
def test_tau_is_conjugation_by_delta(a):
    delta = Braid.delta()
    assert a.tau(1) == delta.inverse() * a * delta
    assert a.tau(3) == a


@given(plain_words)
def test_tau_commutes_with_normalize(word):
    v, q = normalize_positive(word)
    vt, qt = normalize_positive(tau_plain(word, 1))
    assert (vt, qt) == (tau_plain(v, 1), q)


def test_evaluate_examples():
    assert evaluate(((2, 1), (1, 1))) == Braid.delta()
    w = parse_signed_word("s1 s0 s2- s0-")
    assert evaluate(w + inverse_signed(w)) == Braid.identity()


def test_evaluate_matches_fold(rng):
    for _ in range(200):
        word = tuple((rng.randrange(3), rng.choice((1, -1)))
                     for _ in range(rng.randrange(12)))
        folded = Braid.identity()
        for a, s in word:
            atom = Braid((a,), 0)
            folded = folded * (atom if s > 0 else atom.inverse())
        assert evaluate(word) == folded


def test_positivity_and_band_length():
    delta = Braid.delta()
    assert delta.is_positive and delta.band_length == 2
    assert not Braid((1,), 1).is_positive
    assert Braid((1,), 1).band_length == -1


@given(braids, braids)
def test_band_length_additive(a, b):
    assert (a * b).band_length == a.band_length + b.band_length


@given(signed_words)
def test_band_length_is_signed_count(word):
    assert evaluate(word).band_length == sum(s for _, s in word)


def test_positive_words_equal_to():
    assert positive_words_equal_to(Braid.identity()) == frozenset({()})
    assert positive_words_equal_to(Braid.delta()) == frozenset(DELTA_WORDS)
    with pytest.raises(ValueError):
        positive_words_equal_to(Braid((1,), 1))


def test_positive_words_share_normal_form(rng):
    for _ in range(40):
        b = random_braid(rng, 8)
        if not b.is_positive:
            b = b * Braid.delta(4)
        words = positive_words_equal_to(b)
        assert positive_word(b) in words
        forms = {normalize_positive(w) for w in words}
        assert len(forms) == 1
        # every member of a class of size >= 2 still has a rewrite spot
        if len(words) > 1:
            for w in words:
                assert any(is_delta_pair(w[i], w[i + 1])
                           for i in range(len(w) - 1))


def test_token_grammar():
    assert parse_plain_word(" s2  s0 # trailing comment") == (2, 0)
    assert parse_signed_word("s1 s0- # inv") == ((1, 1), (0, -1))
    assert parse_signed_word("") == ()
    assert format_plain_word((2, 0)) == "s2 s0"
    assert format_signed_word(((1, 1), (0, -1))) == "s1 s0-"
    with pytest.raises(TokenError):
        parse_plain_word("s3")
    with pytest.raises(TokenError):
        parse_signed_word("h1")


def test_braid_tokens():
    assert Braid((2, 0), 1).tokens() == "s2 s0 | 1"
    assert Braid.delta().tokens() == "| -1"
    assert evaluate(parse_signed_word("s2 s0 s1 s1 s1- s2-")) == \
        Braid((2, 0, 1, 1), 1)


def test_braid_rejects_bad_words():
    with pytest.raises(ValueError):
        Braid((2, 1), 0)  # not delta-free
    with pytest.raises(ValueError):
        Braid((3,), 0)
