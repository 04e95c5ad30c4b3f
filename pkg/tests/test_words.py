import pytest
from hypothesis import given, strategies as st

from ternaryperm.words import (
    MAX_DIM,
    Word,
    concat,
    nonzero_words,
    parse_word,
    total_xor,
    word_add,
    zero,
)


def w(text):
    return parse_word(text)


class TestWordType:
    def test_rejects_stray_high_bits(self):
        with pytest.raises(ValueError):
            Word(4, 2)

    def test_rejects_bad_dimensions(self):
        with pytest.raises(ValueError):
            Word(0, 0)
        with pytest.raises(ValueError):
            Word(0, MAX_DIM + 1)

    def test_printing_is_msb_first(self):
        assert Word(2, 7).to_string() == "0000010"
        assert str(Word(5, 3)) == "101"

    def test_decimal_equals_string_read_as_binary(self):
        for word in nonzero_words(6):
            assert int(word.to_string(), 2) == word.bits

    def test_round_trip_parse_print_all_words_to_dim_10(self):
        for dim in range(1, 11):
            for bits in range(1 << dim):
                word = Word(bits, dim)
                assert parse_word(word.to_string()) == word

    def test_parse_rejects_non_binary(self):
        with pytest.raises(ValueError):
            parse_word("012")
        with pytest.raises(ValueError):
            parse_word("")


class TestWordAdd:
    def test_self_inverse(self):
        assert word_add(w("01"), w("01")) == w("00")

    def test_disjoint_supports(self):
        assert word_add(w("10"), w("01")) == w("11")

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            word_add(w("01"), w("011"))

    def test_xor_operator(self):
        assert (w("110") ^ w("011")) == w("101")

    def test_exhaustive_group_laws_dim_2(self):
        words = [Word(b, 2) for b in range(4)]
        for a in words:
            assert word_add(a, a) == zero(2)
            for b in words:
                assert word_add(a, b) == word_add(b, a)
                for c in words:
                    assert word_add(word_add(a, b), c) == word_add(a, word_add(b, c))


@st.composite
def same_dim_words(draw, count, max_dim=8):
    dim = draw(st.integers(min_value=1, max_value=max_dim))
    return [
        Word(draw(st.integers(min_value=0, max_value=(1 << dim) - 1)), dim)
        for _ in range(count)
    ]


@given(same_dim_words(2))
def test_commutativity(pair):
    a, b = pair
    assert word_add(a, b) == word_add(b, a)


@given(same_dim_words(3))
def test_associativity(triple):
    a, b, c = triple
    assert word_add(word_add(a, b), c) == word_add(a, word_add(b, c))


@given(same_dim_words(1))
def test_every_word_is_its_own_inverse(single):
    (a,) = single
    assert word_add(a, a) == zero(a.dim)
    assert word_add(a, zero(a.dim)) == a


class TestConcat:
    def test_prefix_takes_most_significant_positions(self):
        out = concat(zero(5), w("10"))
        assert out == Word(2, 7)
        assert out.to_string() == "0000010"

    def test_zero_prefix_keeps_suffix_value(self):
        assert concat(zero(5), w("01")) == Word(1, 7)

    def test_direct_juxtaposition(self):
        assert concat(w("1"), w("01")) == Word(5, 3)

    def test_symbol_string_expansion(self):
        # 1, then 01, then 0, then 10 reads as the 6-bit word 101010
        alpha = w("01")
        beta = w("10")
        out = concat(concat(concat(w("1"), alpha), w("0")), beta)
        assert out == Word(0b101010, 6)
        assert out.to_string() == "101010"

    def test_dimension_cap(self):
        with pytest.raises(ValueError):
            concat(Word(0, 16), Word(0, 15))


class TestTotalXor:
    def test_dim_1_is_one(self):
        assert total_xor(1) == Word(1, 1)

    def test_dim_2_is_zero(self):
        assert total_xor(2) == zero(2)

    def test_dim_3_is_zero(self):
        assert total_xor(3) == zero(3)

    def test_zero_for_all_dims_to_10(self):
        for dim in range(2, 11):
            assert total_xor(dim) == zero(dim)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            total_xor(0)


def test_nonzero_words_enumeration():
    words = list(nonzero_words(3))
    assert [word.bits for word in words] == list(range(1, 8))
    assert all(word.dim == 3 for word in words)
