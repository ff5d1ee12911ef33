import pytest
from hypothesis import given
from hypothesis import strategies as st

from crcselect import gf2
from crcselect.codec import (
    CodeSpec,
    burst_coverage,
    check,
    check_columns,
    encode,
    format_word,
)
from crcselect.errors import DomainError, UnsupportedSizeError


class TestCodeSpec:
    def test_derived_fields(self):
        spec = CodeSpec(0x61, 25)
        assert (spec.p, spec.k) == (6, 19)

    def test_length_must_exceed_check_bits(self):
        with pytest.raises(DomainError):
            CodeSpec(0x61, 6)

    def test_length_capped_by_order(self):
        with pytest.raises(DomainError, match="order"):
            CodeSpec(0x61, 64)
        with pytest.raises(DomainError):
            CodeSpec(0x3, 5)  # order(x+1) = 1

    def test_generator_validated(self):
        with pytest.raises(DomainError):
            CodeSpec(0x62, 10)


class TestEncode:
    def test_zero_info(self):
        assert encode(CodeSpec(0x61, 25), 0) == 0

    def test_word_is_generator(self):
        # x^6 mod g = x^5+1, so info=1 encodes to g itself
        assert encode(CodeSpec(0x61, 7), 1) == 0x61

    def test_repetition_code(self):
        assert encode(CodeSpec(0x7, 3), 1) == 0b111

    def test_info_too_large(self):
        with pytest.raises(DomainError):
            encode(CodeSpec(0x7, 3), 2)

    @pytest.mark.parametrize("g,n", [(0xB, 6), (0x61, 20), (0x13, 12)])
    def test_systematic_roundtrip_exhaustive(self, g, n):
        spec = CodeSpec(g, n)
        for info in range(1 << spec.k):
            word = encode(spec, info)
            assert word >> spec.p == info
            assert check(spec, word)


class TestCheck:
    def test_single_bit_words_fail(self):
        spec = CodeSpec(0x61, 20)
        for j in range(spec.n):
            assert not check(spec, 1 << j)

    def test_shifted_generator_passes(self):
        spec = CodeSpec(0x61, 20)
        assert check(spec, 0x61 << 1)

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            check(CodeSpec(0x7, 3), 1 << 3)

    def test_linearity(self):
        spec = CodeSpec(0x61, 18)
        a = encode(spec, 0b1011)
        b = encode(spec, 0b1100101)
        assert check(spec, a ^ b)

    @given(st.integers(min_value=0, max_value=(1 << 20) - 1))
    def test_division_agrees_with_columns(self, word):
        spec = CodeSpec(0x61, 20)
        cols = check_columns(spec.g, spec.n)
        syndrome = 0
        for j in range(spec.n):
            if (word >> j) & 1:
                syndrome ^= cols[j]
        assert (syndrome == 0) == check(spec, word)


class TestCheckColumns:
    def test_small_example(self):
        assert check_columns(0x7, 3) == [0b01, 0b10, 0b11]

    def test_unit_columns_below_p(self):
        cols = check_columns(0x61, 10)
        assert cols[:6] == [1 << j for j in range(6)]
        assert cols[6] == 0x21  # x^6 mod g = x^5+1

    def test_matches_explicit_reduction(self):
        cols = check_columns(0x1A2EB, 40)
        for j, h in enumerate(cols):
            assert h == gf2.mod(1 << j, 0x1A2EB)

    def test_rejects_beyond_order(self):
        with pytest.raises(DomainError):
            check_columns(0x61, 64)


class TestBurstCoverage:
    def test_full_coverage_up_to_p(self):
        spec = CodeSpec(0x61, 25)
        for b in range(1, spec.p + 1):
            assert burst_coverage(spec, b) == 1.0

    def test_fraction_at_p_plus_one(self):
        spec = CodeSpec(0x61, 25)
        assert burst_coverage(spec, spec.p + 1) == 1.0 - 2.0 ** -(spec.p - 1)
        spec16 = CodeSpec(0x11021, 100)
        assert burst_coverage(spec16, 17) == 1.0 - 2.0**-15

    def test_single_error(self):
        assert burst_coverage(CodeSpec(0x7, 3), 1) == 1.0

    def test_span_out_of_range(self):
        spec = CodeSpec(0x7, 3)
        with pytest.raises(DomainError):
            burst_coverage(spec, 0)
        with pytest.raises(DomainError):
            burst_coverage(spec, 4)

    def test_interior_cap(self):
        spec = CodeSpec(0x11021, 3840)
        with pytest.raises(UnsupportedSizeError):
            burst_coverage(spec, 40)


def test_format_word():
    assert format_word(0b101, 5) == "00101"
    assert format_word(0x61, 7, style="hex") == "61"
    with pytest.raises(DomainError):
        format_word(1, 4, style="octal")
