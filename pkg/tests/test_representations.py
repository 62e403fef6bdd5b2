"""Digit strings: parsing, evaluation, shortness, and the pruned enumerators.

The enumerators are checked here against small all-strings oracles; the
full width-10 oracle sweep lives in the acceptance suite.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sternbsd import (
    HyperbinaryString,
    SignedDigitString,
    count_short_bsd_recurrence,
    enumerate_bsd_fixed,
    enumerate_hyperbinary,
    enumerate_short_bsd,
    format_bsd,
    format_hb,
    is_short,
    negate,
    parse_bsd,
    parse_hb,
    stern,
    value_bsd,
    value_hb,
)

import oracles

signed_digits = st.lists(st.sampled_from((-1, 0, 1)), max_size=12)
canonical_bsd = st.builds(
    lambda body, lead: SignedDigitString((*body, lead)),
    signed_digits,
    st.sampled_from((-1, 1)),
)
canonical_hb = st.one_of(
    st.just(HyperbinaryString((0,))),
    st.builds(
        lambda body, lead: HyperbinaryString((*body, lead)),
        st.lists(st.sampled_from((0, 1, 2)), max_size=12),
        st.sampled_from((1, 2)),
    ),
)


# --- parsing and rendering -------------------------------------------------

def test_parse_is_little_endian_internally():
    assert parse_bsd("10T1").digits == (1, -1, 0, 1)
    assert parse_hb("120").digits == (0, 2, 1)


def test_parse_rejects_bad_input():
    for bad in ("abc", "", "10 1", "102"):
        with pytest.raises(ValueError):
            parse_bsd(bad)
    for bad in ("abc", "", "1T0", "3"):
        with pytest.raises(ValueError):
            parse_hb(bad)


def test_digit_validation_on_construction():
    with pytest.raises(ValueError):
        SignedDigitString((0, 2))
    with pytest.raises(ValueError):
        HyperbinaryString((3,))


def test_format_of_unique_representation_of_8():
    (only,) = enumerate_short_bsd(8)
    assert format_bsd(only) == "1000"


@given(canonical_bsd)
def test_bsd_parse_format_round_trip(r):
    assert parse_bsd(format_bsd(r)) == r


@given(canonical_hb)
def test_hb_parse_format_round_trip(h):
    assert parse_hb(format_hb(h)) == h


@given(st.text(alphabet="10T", min_size=1, max_size=16))
def test_bsd_format_parse_round_trip(text):
    assert format_bsd(parse_bsd(text)) == text


# --- evaluation --------------------------------------------------------------

@pytest.mark.parametrize(
    "text, expected",
    [("101", 5), ("10T1", 7), ("1T01", 5), ("1000", 8), ("T0T", -5)],
)
def test_value_bsd(text, expected):
    assert value_bsd(parse_bsd(text)) == expected


def test_value_of_empty_string_is_zero():
    assert value_bsd(SignedDigitString(())) == 0


@pytest.mark.parametrize("text, expected", [("0", 0), ("12", 4), ("100", 4), ("222", 14)])
def test_value_hb(text, expected):
    assert value_hb(parse_hb(text)) == expected


@given(canonical_bsd)
def test_negate_flips_value_and_keeps_width(r):
    m = negate(r)
    assert value_bsd(m) == -value_bsd(r)
    assert m.width == r.width
    assert negate(m) == r


def test_negate_examples():
    assert format_bsd(negate(parse_bsd("101"))) == "T0T"
    assert format_bsd(negate(parse_bsd("11T"))) == "TT1"
    assert negate(SignedDigitString(())) == SignedDigitString(())


# --- shortness ---------------------------------------------------------------

def test_is_short_examples():
    assert is_short(parse_bsd("10TT"))
    assert not is_short(parse_bsd("1T01"))
    assert is_short(parse_bsd("1"))
    assert is_short(parse_bsd("T"))
    assert not is_short(parse_bsd("T1"))
    assert is_short(parse_bsd("TT"))


def test_is_short_requires_canonical_nonempty():
    with pytest.raises(ValueError):
        is_short(SignedDigitString(()))
    with pytest.raises(ValueError):
        is_short(parse_bsd("010"))


@given(canonical_bsd)
def test_negation_preserves_shortness(r):
    assert is_short(r) == is_short(negate(r))


# --- short enumeration --------------------------------------------------------

def test_short_representations_of_5():
    reps = [str(r) for r in enumerate_short_bsd(5)]
    assert set(reps) == {"101", "11T", "10TT"}
    # display order: T sorts below 0 sorts below 1
    assert reps == ["10TT", "101", "11T"]


def test_short_representations_of_8_and_0():
    assert [str(r) for r in enumerate_short_bsd(8)] == ["1000"]
    assert enumerate_short_bsd(0) == []


def test_short_enumeration_matches_small_oracle():
    table = oracles.short_bsd_by_value(8)
    for n in range(-127, 128):
        if n == 0:
            continue
        got = [r.digits for r in enumerate_short_bsd(n)]
        assert got == table.get(n, []), n


def test_short_widths_are_binary_width_or_one_more():
    for n in range(1, 800):
        i = n.bit_length()
        for r in enumerate_short_bsd(n):
            assert r.width in (i, i + 1)
            assert r.is_canonical and is_short(r)
            assert value_bsd(r) == n


def test_short_enumeration_negative_mirrors_positive():
    for n in range(1, 200):
        negated = {str(negate(r)) for r in enumerate_short_bsd(n)}
        assert {str(r) for r in enumerate_short_bsd(-n)} == negated


def test_infinite_family_is_excluded():
    # 5 = [1T01] = [1TT01] = ... are valid BSD expansions but not short;
    # the fixed-width enumerator still produces the width-4 one.
    assert "1T01" in [str(r) for r in enumerate_bsd_fixed(5, 4)]
    assert not is_short(parse_bsd("1T01"))
    assert "1T01" not in [str(r) for r in enumerate_short_bsd(5)]


# --- fixed-width enumeration ----------------------------------------------------

def test_fixed_width_examples():
    assert [str(r) for r in enumerate_bsd_fixed(1, 2)] == ["01", "1T"]
    assert [str(r) for r in enumerate_bsd_fixed(5, 3)] == ["101", "11T"]
    assert [str(r) for r in enumerate_bsd_fixed(0, 1)] == ["0"]


def test_fixed_width_keeps_leading_zeros():
    reps = [str(r) for r in enumerate_bsd_fixed(5, 4)]
    assert reps == ["0101", "011T", "1T01", "1T1T", "10TT"]
    assert all(len(s) == 4 for s in reps)


def test_fixed_width_domain_errors():
    with pytest.raises(ValueError):
        enumerate_bsd_fixed(9, 3)  # 9 > 2^3 - 1
    with pytest.raises(ValueError):
        enumerate_bsd_fixed(-9, 3)
    with pytest.raises(ValueError):
        enumerate_bsd_fixed(0, 0)


def test_fixed_width_matches_oracle_up_to_width_7():
    for width in range(1, 8):
        for n in range(-(2**width) + 1, 2**width):
            got = [r.digits for r in enumerate_bsd_fixed(n, width)]
            assert got == oracles.all_bsd_fixed(n, width), (n, width)


def test_fixed_width_count_is_mirrored_stern_value():
    for i in range(1, 9):
        for n in range(1, 2**i):
            assert len(enumerate_bsd_fixed(n, i)) == stern(2**i - n)


# --- hyperbinary enumeration ------------------------------------------------------

def test_hyperbinary_examples():
    assert [str(h) for h in enumerate_hyperbinary(0)] == ["0"]
    assert [str(h) for h in enumerate_hyperbinary(1)] == ["1"]
    assert [str(h) for h in enumerate_hyperbinary(4)] == ["100", "12", "20"]


def test_hyperbinary_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_hyperbinary(-1)


def test_hyperbinary_matches_oracle():
    table = oracles.hyperbinary_by_value(9)
    for n in range(0, 512):
        got = [h.digits for h in enumerate_hyperbinary(n)]
        assert got == table.get(n, []), n


def test_hyperbinary_outputs_are_canonical_with_correct_value():
    for n in range(0, 600):
        for h in enumerate_hyperbinary(n):
            assert h.is_canonical
            assert value_hb(h) == n


def test_hyperbinary_count_is_next_stern_value():
    for n in range(0, 1025):
        assert len(enumerate_hyperbinary(n)) == stern(n + 1)


# --- counting recurrence -------------------------------------------------------

def test_recurrence_base_cases():
    assert [count_short_bsd_recurrence(n) for n in range(6)] == [0, 1, 1, 2, 1, 3]


@pytest.mark.parametrize("n, expected", [(5, 3), (8, 1), (12, 2), (-12, 2), (-5, 3)])
def test_recurrence_known_values(n, expected):
    assert count_short_bsd_recurrence(n) == expected


def test_recurrence_agrees_with_enumeration_and_stern():
    for n in range(0, 2049):
        count = count_short_bsd_recurrence(n)
        assert count == len(enumerate_short_bsd(n))
        assert count == stern(n)


@given(st.integers(min_value=6, max_value=10**24))
@settings(max_examples=150)
def test_recurrence_self_consistency_at_scale(n):
    k, odd = divmod(n, 2)
    if odd:
        expected = count_short_bsd_recurrence(k) + count_short_bsd_recurrence(k + 1)
    else:
        expected = count_short_bsd_recurrence(k)
    assert count_short_bsd_recurrence(n) == expected
