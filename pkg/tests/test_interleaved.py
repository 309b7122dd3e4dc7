"""Interleaved-configuration structure and interleaved-sequence checks."""

import random

import pytest

import oracles
from conftest import (
    INTERLEAVED_POLY,
    INTERLEAVED_SEQ,
    INTERLEAVED_SIZE,
    KAT_SUB_MATRIX,
    make_spec,
    random_key,
)
from shrinkgen import (
    BinaryPolynomial,
    BitSequence,
    InsufficientInputError,
    KnownBits,
    LfsrState,
    OffsetVector,
    berlekamp_massey,
    build_ic,
    column_poly,
    ic_source_index,
    is_interleaved,
    lfsr_generate,
    shrink,
    shrunken_interleaved_check,
    shrunken_period,
)


class TestKnownBits:
    def test_parse_file_format(self):
        text = "# intercepted\n0 1   # first bit\n1 0\n\n8 1\n"
        known = KnownBits.parse(text)
        assert dict(known.items()) == {0: 1, 1: 0, 8: 1}

    def test_parse_rejects_descending_positions(self):
        with pytest.raises(ValueError):
            KnownBits.parse("3 1\n2 0\n")

    def test_parse_rejects_bad_lines(self):
        with pytest.raises(ValueError):
            KnownBits.parse("0 2\n")
        with pytest.raises(ValueError):
            KnownBits.parse("0\n")
        with pytest.raises(ValueError):
            KnownBits.parse("a 1\n")

    def test_duplicate_positions_rejected(self):
        with pytest.raises(ValueError):
            KnownBits([(3, 1), (3, 1)])

    def test_negative_position_rejected(self):
        with pytest.raises(ValueError):
            KnownBits({-1: 0})

    def test_from_prefix(self):
        known = KnownBits.from_prefix((1, 0, 1))
        assert dict(known.items()) == {0: 1, 1: 0, 2: 1}


class TestBuildIc:
    def test_known_submatrix_placement(self, kat_known):
        ic = build_ic(kat_known, 5, 4)
        assert ic.rows == 31 and ic.cols == 8
        for n, row in enumerate(KAT_SUB_MATRIX):
            for j, ch in enumerate(row):
                assert ic.cell(n, j) == int(ch)
        assert len(ic) == 20
        assert ic.cell(0, 4) is None
        assert ic.cell(30, 7) is None

    def test_full_period_round_trip(self, kat_spec, kat_key, kat_keystream):
        ic = build_ic(KnownBits.from_prefix(kat_keystream), 5, 4)
        assert len(ic) == 248
        read_back = [ic.cell(n, j) for n in range(31) for j in range(8)]
        assert read_back == list(kat_keystream)

    def test_empty(self):
        assert len(build_ic(KnownBits({}), 5, 4)) == 0

    def test_out_of_range_position(self):
        with pytest.raises(ValueError):
            build_ic(KnownBits({248: 1}), 5, 4)

    def test_dump_format(self, kat_known):
        lines = build_ic(kat_known, 5, 4).dump().splitlines()
        assert len(lines) == 31
        assert lines[0] == "1011...."
        assert lines[4] == "0001...."
        assert lines[30] == "........"


class TestOffsetVector:
    def test_validation(self):
        OffsetVector((0, 1, 3))
        with pytest.raises(ValueError):
            OffsetVector((1, 2))
        with pytest.raises(ValueError):
            OffsetVector((0, 3, 2))
        with pytest.raises(ValueError):
            OffsetVector(())

    def test_str(self):
        assert str(OffsetVector((0, 1, 3))) == "0,1,3"


class TestIcSourceIndex:
    def test_origin(self):
        assert ic_source_index(0, 0, OffsetVector((0,)), 5, 4) == 0

    def test_known_rows(self):
        offsets = OffsetVector((0, 1, 3))
        assert ic_source_index(23, 0, offsets, 5, 4) == 4
        assert ic_source_index(29, 0, offsets, 5, 4) == 1

    def test_unknown_offset(self):
        with pytest.raises(InsufficientInputError):
            ic_source_index(0, 2, OffsetVector((0, 1)), 5, 4)

    def test_range_checks(self):
        offsets = OffsetVector((0,))
        with pytest.raises(ValueError):
            ic_source_index(31, 0, offsets, 5, 4)
        with pytest.raises(ValueError):
            ic_source_index(0, 8, offsets, 5, 4)

    def test_consistency_with_ground_truth(self):
        # with the true offsets, every IC cell is the indexed data bit
        rng = random.Random(29)
        for a, s in [(5, 4), (5, 2), (7, 3)]:
            spec = make_spec(a, s)
            key = random_key(rng, spec, s0=1)
            t = shrunken_period(a, s)
            a_seq = lfsr_generate(spec.sra, key.sra_state, (1 << a) - 1)
            s_seq = lfsr_generate(spec.srs, key.srs_state, (1 << s) - 1)
            offsets = OffsetVector(tuple(oracles.one_positions(list(s_seq))))
            assert len(offsets) == 1 << (s - 1)
            ic = build_ic(KnownBits.from_prefix(shrink(spec, key, t)), a, s)
            for (n, j), bit in ic.known_cells():
                assert bit == a_seq.at(ic_source_index(n, j, offsets, a, s))

    def test_offsets_match_selector_ones(self):
        # o_j is the position of the (j+1)-th 1 in the selector sequence,
        # both for the ground truth and for what the attack recovers
        from shrinkgen import AttackInput, attack
        from conftest import submatrix_known

        rng = random.Random(37)
        spec = make_spec(5, 4)
        for _ in range(10):
            key = random_key(rng, spec, s0=1)
            s_seq = list(lfsr_generate(spec.srs, key.srs_state, 15))
            ones = oracles.one_positions(s_seq)
            assert ones[0] == 0
            assert len(ones) == 8
            result = attack(AttackInput(spec, submatrix_known(spec, key)))
            recovered = tuple(result.offsets)
            assert recovered == tuple(ones[: len(recovered)])


class TestColumnProperty:
    def test_full_columns_share_the_column_poly(self, kat_spec, kat_key, kat_keystream):
        ic = build_ic(KnownBits.from_prefix(kat_keystream), 5, 4)
        pd = column_poly(kat_spec)
        for j in range(8):
            col = [ic.cell(n, j) for n in range(31)]
            assert berlekamp_massey(col) == (5, pd)


class TestIsInterleaved:
    def test_known_interleaved_sequence(self):
        seq = BitSequence.parse(INTERLEAVED_SEQ)
        f = BinaryPolynomial.parse(INTERLEAVED_POLY)
        assert is_interleaved(seq, INTERLEAVED_SIZE, f)

    def test_single_bit_flip_breaks_it(self):
        f = BinaryPolynomial.parse(INTERLEAVED_POLY)
        for i in range(len(INTERLEAVED_SEQ)):
            bits = [int(ch) for ch in INTERLEAVED_SEQ]
            bits[i] ^= 1
            assert not is_interleaved(bits, INTERLEAVED_SIZE, f), f"flip at {i}"

    def test_size_one(self):
        spec = make_spec(4, 1)
        pn = lfsr_generate(spec.sra, LfsrState.parse("1011"), 30)
        assert is_interleaved(pn, 1, spec.pa)

    def test_short_input_is_vacuously_consistent(self):
        f = BinaryPolynomial.parse(INTERLEAVED_POLY)
        assert is_interleaved([1, 0, 1, 1], 4, f)

    def test_bad_arguments(self):
        f = BinaryPolynomial.parse(INTERLEAVED_POLY)
        with pytest.raises(ValueError):
            is_interleaved([1, 0], 0, f)
        with pytest.raises(ValueError):
            is_interleaved([1, 0], 2, BinaryPolynomial(1))


class TestShrunkenInterleavedCheck:
    def test_known_generator(self, kat_spec, kat_key):
        assert shrunken_interleaved_check(kat_spec, kat_key)

    def test_random_keys(self):
        rng = random.Random(41)
        for a, s in [(5, 2), (5, 4), (7, 3)]:
            spec = make_spec(a, s)
            for _ in range(50):
                assert shrunken_interleaved_check(spec, random_key(rng, spec))

    def test_wrong_polynomial_fails_for_s_above_one(self, kat_spec, kat_key):
        z = shrink(kat_spec, kat_key, shrunken_period(5, 4))
        assert not is_interleaved(z, 8, kat_spec.pa)
