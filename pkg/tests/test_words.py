import pytest
from hypothesis import given, strategies as st

from onebridge.words import (ALPHA, GAMMA, IDENTITY, X, RelatorSyntaxError, Word, exponent_sum,
                             leading_gamma, parse_relator, substitute_alpha, syllable_profile)

from strategies import ag_words, exponents


def W(*syl):
    return Word(syl)


class TestParse:
    def test_km3_relator(self):
        assert parse_relator("agagAg").syllables == (
            (ALPHA, 1), (GAMMA, 1), (ALPHA, 1), (GAMMA, 1), (ALPHA, -1), (GAMMA, 1))

    def test_power(self):
        assert parse_relator("a^5").syllables == ((ALPHA, 5),)

    def test_cancellation(self):
        assert parse_relator("aA") == IDENTITY

    def test_empty_is_identity(self):
        assert parse_relator("") == IDENTITY
        assert parse_relator("   ") == IDENTITY

    @pytest.mark.parametrize("text, expected", [
        ("A^2", W((ALPHA, -2))),
        ("a^-2", W((ALPHA, -2))),
        ("G^-3", W((GAMMA, 3))),
        (" a ^ 2 g", W((ALPHA, 2), (GAMMA, 1))),
        ("aag", W((ALPHA, 2), (GAMMA, 1))),
        ("a^0g", W((GAMMA, 1))),
    ])
    def test_variants(self, text, expected):
        assert parse_relator(text) == expected

    @pytest.mark.parametrize("text, offset", [("agx", 2), ("a^", 1), ("a^-", 1), ("ag^g", 2), ("aé", 1)])
    def test_syntax_errors_carry_offset(self, text, offset):
        with pytest.raises(RelatorSyntaxError) as info:
            parse_relator(text)
        assert info.value.offset == offset

    @given(ag_words)
    def test_round_trip(self, w):
        text = w.relator_text()
        assert parse_relator(text) == w
        assert parse_relator(parse_relator(text).relator_text()) == parse_relator(text)


class TestReduction:
    @given(ag_words)
    def test_reduced_invariant(self, w):
        syl = w.syllables
        assert all(e != 0 for _, e in syl)
        assert all(a[0] != b[0] for a, b in zip(syl, syl[1:]))

    @given(ag_words)
    def test_idempotent(self, w):
        assert Word(w.syllables) == w

    @given(ag_words, st.integers(0, 20), st.sampled_from([ALPHA, GAMMA]), exponents)
    def test_insertion_of_cancelling_pair(self, w, pos, g, e):
        letters = list(w.letters())
        pos = pos % (len(letters) + 1)
        padded = letters[:pos] + [(g, e), (g, -e)] + letters[pos:]
        assert Word(padded) == w

    @given(ag_words)
    def test_inverse(self, w):
        assert w * w.inverse() == IDENTITY
        assert w.inverse().inverse() == w


class TestExponentSum:
    def test_examples(self):
        r3 = parse_relator("agagAg")
        assert exponent_sum(r3, ALPHA) == 1
        assert exponent_sum(r3, GAMMA) == 3
        assert exponent_sum(parse_relator("a^5"), GAMMA) == 0
        assert exponent_sum(parse_relator("agagagAg"), GAMMA) == 4

    @given(ag_words, ag_words)
    def test_homomorphism(self, u, v):
        for g in (ALPHA, GAMMA):
            assert exponent_sum(u * v, g) == exponent_sum(u, g) + exponent_sum(v, g)


class TestSubstitution:
    def test_hand_example(self):
        w = substitute_alpha(parse_relator("agagAg"), 1)
        assert w == W((X, 1), (GAMMA, 2), (X, 1), (GAMMA, 1), (X, -1), (GAMMA, 1))

    def test_zero_shift(self):
        assert substitute_alpha(parse_relator("a^5"), 0) == W((X, 5))

    def test_cancellation(self):
        assert substitute_alpha(parse_relator("ag"), -1) == W((X, 1))

    def test_rejects_x(self):
        with pytest.raises(ValueError):
            substitute_alpha(W((X, 1)), 1)

    @given(ag_words, st.integers(-5, 5))
    def test_inverse_substitution(self, w, c):
        # x -> alpha gamma^-c undoes alpha -> x gamma^c
        sub = substitute_alpha(w, c)
        back = IDENTITY
        for g, e in sub.syllables:
            piece = W((ALPHA, 1), (GAMMA, -c)) ** e if g == X else W((g, e))
            back = back * piece
        assert back == w


class TestProfile:
    def test_hand_example(self):
        w = W((X, 1), (GAMMA, 2), (X, 1), (GAMMA, 1), (X, -1), (GAMMA, 1))
        assert syllable_profile(w) == [(1, 2), (1, 1), (-1, 1)]

    def test_power_unit_steps(self):
        assert syllable_profile(W((X, 4)), unit_steps=True) == [(1, 0)] * 4
        assert syllable_profile(W((X, 4))) == [(4, 0)]
        assert syllable_profile(W((X, -2), (GAMMA, 3)), unit_steps=True) == [(-1, 0), (-1, 3)]

    def test_identity(self):
        assert syllable_profile(IDENTITY) == []

    def test_rejects_alpha(self):
        with pytest.raises(ValueError):
            syllable_profile(W((ALPHA, 1)))

    def test_leading_gamma(self):
        w = W((GAMMA, -2), (X, 1))
        assert leading_gamma(w) == -2
        with pytest.raises(ValueError):
            syllable_profile(w)

    @given(ag_words, st.integers(-3, 3))
    def test_reassembly(self, w, c):
        sub = substitute_alpha(w, c)
        lead = leading_gamma(sub)
        body = Word(sub.syllables[1:]) if lead else sub
        for unit in (False, True):
            rebuilt = W((GAMMA, lead))
            for e, d in syllable_profile(body, unit_steps=unit):
                rebuilt = rebuilt * W((X, e), (GAMMA, d))
            assert rebuilt == sub
