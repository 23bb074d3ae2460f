"""Tests for ranking, unranking, uniform sampling, and id generation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperforest import (
    ForestCode,
    ForestShape,
    ParameterRangeError,
    code_space_size,
    count_forests,
    decode_code,
    encode_forest,
    enumerate_code_space,
    generate_ids,
    rank_code,
    sample_code,
    sample_forest,
    sample_forests,
    unrank_code,
    validate_code,
    validate_forest,
)
from tests.conftest import SWEEP_SHAPES


class TestCodeSpaceSize:
    def test_matches_forest_count_on_grid(self):
        for b in range(2, 6):
            for s in range(0, 7):
                for k in range(0, 4):
                    shape = ForestShape(b=b, s=s, k=k)
                    assert code_space_size(shape) == count_forests(b, s, k)

    def test_empty_shape_has_one_code(self):
        assert code_space_size(ForestShape(b=3, s=0, k=2)) == 1


class TestUnrank:
    def test_first_and_last_of_a_small_space(self):
        shape = ForestShape(b=2, s=2, k=0)
        first = unrank_code(0, shape)
        assert first.roots == (1,)
        assert first.final_root == 1
        assert first.blocks == ((2,), (3,))
        assert first.links == (1,)
        last = unrank_code(8, shape)
        assert last.roots == (3,)
        assert last.final_root == 3
        assert last.blocks == ((1,), (2,))
        assert last.links == (3,)

    def test_agrees_with_enumeration_order(self):
        for b, s, k in [(2, 2, 0), (2, 3, 1), (3, 2, 0), (4, 2, 1)]:
            shape = ForestShape(b=b, s=s, k=k)
            for i, code in enumerate(enumerate_code_space(b, s, k)):
                assert unrank_code(i, shape) == code

    def test_all_outputs_valid(self):
        shape = ForestShape(b=3, s=2, k=1)
        for i in range(code_space_size(shape)):
            assert validate_code(unrank_code(i, shape)).valid

    @pytest.mark.parametrize("index", [-1, 9, 100])
    def test_rejects_out_of_range_index(self, index):
        with pytest.raises(ParameterRangeError):
            unrank_code(index, ForestShape(b=2, s=2, k=0))


class TestRank:
    def test_inverts_unrank_exhaustively(self):
        shape = ForestShape(b=2, s=2, k=0)
        assert [rank_code(unrank_code(i, shape)) for i in range(9)] == list(range(9))

    @pytest.mark.parametrize("b,s,k", SWEEP_SHAPES)
    def test_round_trips_across_sweep_shapes(self, b, s, k):
        shape = ForestShape(b=b, s=s, k=k)
        size = code_space_size(shape)
        stride = max(1, size // 50)
        for i in range(0, size, stride):
            assert rank_code(unrank_code(i, shape)) == i

    def test_worked_example_round_trips(self, worked_code, worked_forest):
        index = rank_code(worked_code)
        assert 0 <= index < code_space_size(worked_code.shape)
        again = unrank_code(index, worked_code.shape)
        assert again == worked_code
        assert decode_code(again) == worked_forest

    def test_rejects_invalid_code(self):
        from hyperforest import InvalidStructureError

        bad = ForestCode(
            shape=ForestShape(b=2, s=2, k=0),
            roots=(1,),
            final_root=1,
            blocks=((2,), (2,)),
            links=(1,),
        )
        with pytest.raises(InvalidStructureError):
            rank_code(bad)

    @settings(max_examples=60, deadline=None)
    @given(index=st.integers(min_value=0))
    def test_probes_a_large_space(self, index):
        shape = ForestShape(b=3, s=9, k=3)
        index %= code_space_size(shape)
        assert rank_code(unrank_code(index, shape)) == index


class TestSampling:
    def test_same_seed_reproduces(self):
        shape = ForestShape(b=3, s=4, k=1)
        assert sample_code(shape, 12345) == sample_code(shape, 12345)
        assert sample_forest(shape, 12345) == sample_forest(shape, 12345)

    def test_different_seeds_usually_differ(self):
        shape = ForestShape(b=3, s=4, k=1)
        draws = {sample_code(shape, seed) for seed in range(40)}
        assert len(draws) > 30

    def test_draws_are_valid(self):
        for b, s, k in [(2, 5, 0), (3, 3, 2), (5, 2, 0), (2, 0, 3)]:
            shape = ForestShape(b=b, s=s, k=k)
            for seed in range(5):
                forest = sample_forest(shape, seed)
                assert validate_forest(forest).valid
                assert (forest.s, forest.k) == (s, k)

    def test_sequence_extends_single_draw(self):
        shape = ForestShape(b=2, s=3, k=1)
        batch = sample_forests(shape, 777, 4)
        assert len(batch) == 4
        assert batch[0] == sample_forest(shape, 777)
        assert batch == sample_forests(shape, 777, 4)

    @pytest.mark.parametrize("seed", [-1, 1 << 64])
    def test_rejects_out_of_range_seed(self, seed):
        with pytest.raises(ParameterRangeError):
            sample_code(ForestShape(b=2, s=2, k=0), seed)

    def test_seed_boundaries_accepted(self):
        shape = ForestShape(b=2, s=2, k=0)
        assert validate_code(sample_code(shape, 0)).valid
        assert validate_code(sample_code(shape, (1 << 64) - 1)).valid

    def test_small_space_eventually_hits_every_forest(self):
        shape = ForestShape(b=2, s=2, k=0)
        seen = {sample_forest(shape, seed) for seed in range(200)}
        assert len(seen) == 9


class TestGenerateIds:
    def test_full_space_is_distinct(self):
        shape = ForestShape(b=2, s=2, k=0)
        codes = generate_ids(shape, 9)
        assert len(set(codes)) == 9
        forests = [decode_code(c) for c in codes]
        assert len(set(forests)) == 9
        assert [rank_code(c) for c in codes] == list(range(9))

    def test_prefix_of_the_enumeration(self):
        shape = ForestShape(b=3, s=2, k=0)
        codes = generate_ids(shape, 10)
        expected = [unrank_code(i, shape) for i in range(10)]
        assert codes == expected

    def test_zero_ids(self):
        assert generate_ids(ForestShape(b=2, s=2, k=0), 0) == []

    def test_rejects_more_ids_than_codes(self):
        with pytest.raises(ParameterRangeError):
            generate_ids(ForestShape(b=2, s=2, k=0), 10)

    def test_rejects_negative_count(self):
        with pytest.raises(ParameterRangeError):
            generate_ids(ForestShape(b=2, s=2, k=0), -1)

    def test_ids_encode_back_to_their_index(self):
        shape = ForestShape(b=2, s=3, k=0)
        for i, code in enumerate(generate_ids(shape, 12)):
            assert rank_code(encode_forest(decode_code(code))) == i
