"""Tests for the closed-form record-setter families and helpers."""

import pytest

from sternseq import (
    FamilyDescriptor,
    closed_form_index,
    closed_form_stern_value,
    count_kbit,
    cross_validate,
    family_descriptors,
    fib,
    g_value,
    generate_kbit,
    lucas,
    render_bits,
    stern_a,
)
from sternseq.closedform import _half_length
from sternseq.tables import SMALL_BITLENGTH_RECORDS


class TestFibLucas:
    def test_fibonacci_examples(self):
        assert fib(12) == 144
        assert fib(0) == 0
        assert fib(90) == 2880067194370816120 == fib(89) + fib(88)

    def test_lucas_examples(self):
        assert lucas(0) == 2
        assert lucas(1) == 1
        assert lucas(10) == 123 == fib(9) + fib(11)

    @pytest.mark.parametrize("n", range(1, 91))
    def test_lucas_fibonacci_identity(self, n):
        assert lucas(n) == fib(n - 1) + fib(n + 1)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            fib(-1)
        with pytest.raises(ValueError):
            lucas(-2)


class TestFamilies:
    def test_descriptor_validation(self):
        with pytest.raises(ValueError):
            FamilyDescriptor("even", "O1")
        with pytest.raises(ValueError):
            FamilyDescriptor("sideways", "E1", 0)

    def test_parameter_ranges_enforced(self):
        n = 6
        with pytest.raises(ValueError):
            closed_form_index(FamilyDescriptor("even", "E1", n - 2), n)
        with pytest.raises(ValueError):
            closed_form_index(FamilyDescriptor("even", "E2", 0), n)
        with pytest.raises(ValueError):
            closed_form_index(FamilyDescriptor("odd", "O3", (n + 1) // 2), n)
        with pytest.raises(ValueError):
            closed_form_index(FamilyDescriptor("odd", "O4", n - 1), n)
        with pytest.raises(ValueError):
            render_bits(FamilyDescriptor("even", "E3", 1), n)

    def test_family_counts(self):
        # even k = 2n: (n-2) + floor(n/2) + 1; odd k = 2n+1: 3 + (ceil(n/2)-1) + (n-1)
        assert len(family_descriptors(12)) == 8
        assert len(family_descriptors(13)) == 10
        assert len(family_descriptors(14)) == 9
        assert len(family_descriptors(15)) == 12

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            family_descriptors(11)


class TestClosedForms:
    def test_even_index_examples(self):
        n = 6
        assert closed_form_index(FamilyDescriptor("even", "E1", 0), n) == 2219
        assert closed_form_index(FamilyDescriptor("even", "E3"), n) == 2731
        assert int(render_bits(FamilyDescriptor("even", "E1", 0), n), 2) == 2219

    def test_odd_index_examples(self):
        n = 6
        assert closed_form_index(FamilyDescriptor("odd", "O5"), n) == 5461
        assert render_bits(FamilyDescriptor("odd", "O5"), n) == "1010101010101"
        assert render_bits(FamilyDescriptor("odd", "O1"), n) == "1000101010101"

    def test_stern_value_examples(self):
        n = 6
        assert closed_form_stern_value(FamilyDescriptor("even", "E1", 0), n) == 157
        assert closed_form_stern_value(FamilyDescriptor("even", "E3"), n) == 233 == fib(13)
        assert closed_form_stern_value(FamilyDescriptor("odd", "O5"), n) == 377 == fib(14)
        assert stern_a(2219) == 157
        assert stern_a(5461) == 377

    @pytest.mark.parametrize("k", range(12, 65))
    def test_index_formula_matches_rendering(self, k):
        n = _half_length(k)
        for descriptor in family_descriptors(k):
            assert closed_form_index(descriptor, n) == int(render_bits(descriptor, n), 2)

    @pytest.mark.parametrize("k", range(12, 41))
    def test_stern_value_formula_matches_matrix_calculus(self, k):
        # Large-k oracle: a(v) = s(v-1) = G(binary(v-1)) via the
        # transfer-matrix product, no scan involved.
        n = _half_length(k)
        for descriptor in family_descriptors(k):
            index = int(render_bits(descriptor, n), 2)
            assert closed_form_stern_value(descriptor, n) == g_value(format(index - 1, "b"))


class TestGenerateKbit:
    def test_small_k_from_table(self):
        entries = generate_kbit(5)
        assert [(e.bits, e.index, e.stern_value) for e in entries] == [
            ("10011", 19, 7),
            ("10101", 21, 8),
        ]
        assert entries[0].descriptor is None

    def test_twelve_bits(self):
        entries = generate_kbit(12)
        assert len(entries) == 8
        assert (entries[0].bits, entries[0].index) == ("100010101011", 2219)
        assert (entries[-1].bits, entries[-1].index) == ("101010101011", 2731)
        assert entries[0].descriptor.family_id == "E1"
        assert entries[-1].descriptor.family_id == "E3"

    def test_thirteen_bits(self):
        entries = generate_kbit(13)
        assert len(entries) == 10
        assert entries[0].bits == "1000101010101"
        assert entries[0].descriptor.family_id == "O1"
        assert entries[-1].index == 5461
        assert entries[-1].descriptor.family_id == "O5"

    @pytest.mark.parametrize("k", range(12, 65))
    def test_structural_invariants(self, k):
        entries = generate_kbit(k)
        assert len(entries) == count_kbit(k) == (3 * k) // 4 - (-1) ** k
        assert all(e.index.bit_length() == k for e in entries)
        assert all(a.index < b.index for a, b in zip(entries, entries[1:]))
        assert all(int(e.bits, 2) == e.index for e in entries)

    def test_validation(self):
        with pytest.raises(ValueError):
            generate_kbit(0)

    @pytest.mark.parametrize("k, expected", [(12, 8), (13, 10), (7, 5), (1, 1), (11, 8)])
    def test_count_kbit(self, k, expected):
        assert count_kbit(k) == expected
        assert count_kbit(k) == len(
            generate_kbit(k) if k >= 12 else SMALL_BITLENGTH_RECORDS[k]
        )


class TestCrossValidation:
    @pytest.mark.parametrize("k", range(1, 25))
    def test_against_brute_force(self, k):
        ok, discrepancies = cross_validate(k)
        assert ok, discrepancies
        assert discrepancies == []

    def test_beyond_default_ceiling(self, monkeypatch):
        from sternseq.budget import MAX_BITS_ENV_VAR

        monkeypatch.setenv(MAX_BITS_ENV_VAR, "26")
        for k in (25, 26):
            ok, discrepancies = cross_validate(k)
            assert ok, discrepancies
