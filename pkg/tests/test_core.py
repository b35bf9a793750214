import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zcpkit.core import (
    BinarySequence,
    CorrelationProfile,
    SequencePair,
    aacf,
    aacs_profile,
    concat,
    cross_correlation,
    delete,
    format_pair,
    format_sequence,
    insert,
    kronecker,
    negate,
    parse_pair,
    parse_pairs,
    parse_sequence,
    reverse,
)

from golden import TYPE1_LEN9, TYPE1_LEN9_MAGS, TYPE2_LEN9, TYPE2_LEN9_MAGS


def seq(text: str) -> BinarySequence:
    return parse_sequence(text)


sequences = st.builds(
    BinarySequence,
    st.lists(st.sampled_from((1, -1)), min_size=1, max_size=32).map(tuple),
)


def all_sequences(n):
    """Every length-n binary sequence, lexicographic with +1 first."""
    for code in range(1 << n):
        yield BinarySequence(
            tuple(1 if not (code >> (n - 1 - i)) & 1 else -1 for i in range(n))
        )


class TestBinarySequence:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            BinarySequence(())

    def test_rejects_non_sign_elements(self):
        for bad in ((0,), (2,), (1, -1, 3)):
            with pytest.raises(ValueError):
                BinarySequence(bad)

    def test_immutable(self):
        a = seq("+-")
        with pytest.raises(AttributeError):
            a.elements = (1, 1)

    def test_round_trip_text(self):
        assert str(seq("+-+")) == "+-+"
        assert seq("+-+").elements == (1, -1, 1)

    def test_slicing_returns_sequence(self):
        a = seq("++--")
        assert a[:2] == seq("++")
        assert a[2] == -1


class TestSequencePair:
    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            SequencePair(seq("++"), seq("+"))

    def test_column(self):
        p = SequencePair.from_signs("+-", "++")
        assert p.column(0) == (1, 1)
        assert p.column(1) == (-1, 1)
        assert p.length == 2


class TestCrossCorrelation:
    def test_single_term(self):
        assert cross_correlation(seq("++"), seq("+-"), 1) == -1

    def test_in_phase_equals_length(self):
        a = seq("++-+")
        assert cross_correlation(a, a, 0) == 4

    def test_zero_beyond_range(self):
        a, b = seq("+-+"), seq("++-")
        assert cross_correlation(a, b, 3) == 0
        assert cross_correlation(a, b, -5) == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            cross_correlation(seq("++"), seq("+"), 0)

    @given(sequences, sequences, st.integers(-40, 40))
    def test_negative_shift_symmetry(self, a, b, tau):
        if len(a) != len(b):
            b = BinarySequence((b.elements * len(a))[: len(a)])
        assert cross_correlation(a, b, -tau) == cross_correlation(b, a, tau)

    @given(sequences, st.integers(-40, 40))
    def test_matches_direct_sum(self, a, tau):
        n = len(a)
        if abs(tau) >= n:
            expected = 0
        elif tau >= 0:
            expected = sum(a[k] * a[k + tau] for k in range(n - tau))
        else:
            expected = sum(a[k - tau] * a[k] for k in range(n + tau))
        assert cross_correlation(a, a, tau) == expected


class TestAacf:
    def test_hand_sum(self):
        assert aacf(seq("+-+-"), 1) == -3

    def test_in_phase(self):
        assert aacf(seq("++"), 0) == 2
        assert aacf(seq("++"), 1) == 1

    def test_range_check(self):
        with pytest.raises(ValueError):
            aacf(seq("++"), 2)
        with pytest.raises(ValueError):
            aacf(seq("++"), -1)

    @given(sequences)
    def test_bounds(self, a):
        n = len(a)
        assert aacf(a, 0) == n
        for tau in range(1, n):
            assert abs(aacf(a, tau)) <= n - tau


class TestAacsProfile:
    def test_length9_pairs(self):
        p = SequencePair.from_signs(*TYPE1_LEN9)
        assert aacs_profile(p).magnitudes() == TYPE1_LEN9_MAGS
        q = SequencePair.from_signs(*TYPE2_LEN9)
        assert aacs_profile(q).magnitudes() == TYPE2_LEN9_MAGS

    def test_length2_kernel_shape(self):
        p = SequencePair.from_signs("++", "+-")
        assert aacs_profile(p).values == (4, 0)

    def test_matches_per_shift_sums(self):
        p = SequencePair.from_signs(*TYPE1_LEN9)
        prof = aacs_profile(p)
        for tau in range(p.length):
            assert prof[tau] == aacf(p.first, tau) + aacf(p.second, tau)

    def test_exhaustive_bound_and_evenness(self):
        # |sum| <= 2(N - tau) and every sum is even; checked over all pairs
        # at small lengths.
        for n in range(1, 7):
            rows = list(all_sequences(n))
            tails = [[aacf(a, t) for t in range(n)] for a in rows]
            for ra in tails:
                for rb in tails:
                    for tau in range(n):
                        v = ra[tau] + rb[tau]
                        assert abs(v) <= 2 * (n - tau)
                        assert v % 2 == 0


class TestCorrelationProfile:
    def test_rejects_bad_in_phase_value(self):
        with pytest.raises(ValueError):
            CorrelationProfile((3, 0))

    def test_rejects_out_of_bound_values(self):
        with pytest.raises(ValueError):
            CorrelationProfile((4, 3))

    def test_magnitudes(self):
        assert CorrelationProfile((4, -2)).magnitudes() == (4, 2)


class TestInsertDelete:
    def test_prepend(self):
        assert insert(seq("+-"), 0, -1) == seq("-+-")

    def test_append(self):
        assert insert(seq("+-"), 2, 1) == seq("+-+")

    def test_interior(self):
        assert insert(seq("++--"), 2, -1) == seq("++---")

    def test_range_and_sign_errors(self):
        with pytest.raises(ValueError):
            insert(seq("++"), 3, 1)
        with pytest.raises(ValueError):
            insert(seq("++"), -1, 1)
        with pytest.raises(ValueError):
            insert(seq("++"), 0, 0)

    def test_delete_errors(self):
        with pytest.raises(ValueError):
            delete(seq("+"), 0)
        with pytest.raises(ValueError):
            delete(seq("++"), 2)

    @given(sequences, st.integers(0, 32), st.sampled_from((1, -1)))
    def test_round_trip(self, a, r, x):
        r = min(r, len(a))
        grown = insert(a, r, x)
        assert len(grown) == len(a) + 1
        assert grown[r] == x
        assert delete(grown, r) == a


class TestRearrangements:
    def test_reverse(self):
        assert reverse(seq("++-")) == seq("-++")

    def test_negate(self):
        assert negate(seq("+-")) == seq("-+")

    def test_concat(self):
        assert concat(seq("+"), seq("-")) == seq("+-")

    def test_kronecker(self):
        assert kronecker(seq("+-"), seq("++")) == seq("++--")

    def test_kronecker_index_law(self):
        a, b = seq("+-+"), seq("--+-")
        k = kronecker(a, b)
        assert len(k) == 12
        for i in range(3):
            for j in range(4):
                assert k[i * 4 + j] == a[i] * b[j]


class TestTextFormat:
    def test_rejects_whitespace_and_noise(self):
        for bad in ("+ -", "+1", "", "+-\t", "+-x"):
            with pytest.raises(ValueError):
                parse_sequence(bad)

    def test_pair_round_trip(self):
        p = SequencePair.from_signs(*TYPE1_LEN9)
        assert parse_pair(format_pair(p)) == p

    def test_pair_requires_two_lines(self):
        with pytest.raises(ValueError):
            parse_pair("++\n")
        with pytest.raises(ValueError):
            parse_pair("++\n+-\n--\n")

    def test_pair_rejects_blank_line(self):
        with pytest.raises(ValueError):
            parse_pair("++\n\n")

    def test_pairs_multi(self):
        text = "++\n+-\n+-\n++\n"
        pairs = parse_pairs(text)
        assert len(pairs) == 2
        assert pairs[1] == SequencePair.from_signs("+-", "++")
        with pytest.raises(ValueError):
            parse_pairs("++\n+-\n--\n")

    @given(sequences)
    def test_sequence_text_round_trip(self, a):
        assert parse_sequence(format_sequence(a)) == a
