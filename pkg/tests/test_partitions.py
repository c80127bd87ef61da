import pytest
from hypothesis import given

from degsq import (
    NotStrictlyDecreasingError,
    PartOutOfRangeError,
    ThresholdGraph,
    binom2,
    complement_partition,
    degree_sequence,
    diagonal_sequence,
    make_partition,
    p2_from_degrees,
    p2_value,
    value_C,
)

from conftest import partition_with_v


class TestMakePartition:
    def test_worked_example(self):
        parts = make_partition((6, 4, 3), 8)
        assert parts == (6, 4, 3)
        assert sum(parts) == 13

    def test_empty_is_valid(self):
        assert make_partition((), 5) == ()

    def test_repeated_part_rejected(self):
        with pytest.raises(NotStrictlyDecreasingError):
            make_partition((4, 4, 1), 8)

    def test_increasing_rejected(self):
        with pytest.raises(NotStrictlyDecreasingError):
            make_partition((3, 4), 8)

    def test_part_at_least_v_rejected(self):
        with pytest.raises(PartOutOfRangeError):
            make_partition((8,), 8)

    def test_nonpositive_part_rejected(self):
        with pytest.raises(PartOutOfRangeError):
            make_partition((3, 0), 8)

    def test_vertex_bound_enforced(self):
        with pytest.raises(PartOutOfRangeError):
            make_partition((), 10**6 + 1)


class TestComplement:
    def test_worked_example(self):
        assert complement_partition((6, 4, 3), 8) == (7, 5, 2, 1)

    def test_empty_gives_staircase(self):
        assert complement_partition((), 4) == (3, 2, 1)

    def test_involution_example(self):
        assert complement_partition((7, 5, 2, 1), 8) == (6, 4, 3)

    @given(partition_with_v())
    def test_involution_and_sum(self, parts_v):
        parts, v = parts_v
        comp = complement_partition(parts, v)
        assert complement_partition(comp, v) == parts
        assert sum(comp) == binom2(v) - sum(parts)


class TestDegreeSequence:
    def test_worked_example(self):
        assert degree_sequence(ThresholdGraph(8, (6, 4, 3))) == (6, 5, 5, 3, 3, 3, 1, 0)

    def test_empty_graph(self):
        assert degree_sequence(ThresholdGraph(3, ())) == (0, 0, 0)

    def test_against_explicit_dot_grid(self):
        # independent oracle: place dots (t, t+1)..(t, t+a_t) explicitly and
        # count row plus column incidences per vertex
        parts, v = (9, 6, 5, 4, 3, 2, 1), 10
        dots = {(t, t + u) for t, a in enumerate(parts) for u in range(1, a + 1)}
        expected = tuple(
            sum(1 for (i, j) in dots if i == s) + sum(1 for (i, j) in dots if j == s)
            for s in range(v)
        )
        degrees = degree_sequence(ThresholdGraph(v, parts))
        assert degrees == expected
        assert sum(degrees) == 60
        assert p2_from_degrees(degrees) == 426 == value_C(10, 30)

    @given(partition_with_v())
    def test_nonincreasing_and_in_range(self, parts_v):
        parts, v = parts_v
        degrees = degree_sequence(ThresholdGraph(v, parts))
        assert len(degrees) == v
        assert all(0 <= d <= v - 1 for d in degrees)
        assert all(a >= b for a, b in zip(degrees, degrees[1:]))
        assert sum(degrees) == 2 * sum(parts)

    @given(partition_with_v())
    def test_complement_degrees_are_complemented(self, parts_v):
        parts, v = parts_v
        degrees = degree_sequence(ThresholdGraph(v, parts))
        comp_degrees = degree_sequence(ThresholdGraph(v, complement_partition(parts, v)))
        assert sorted(comp_degrees) == sorted(v - 1 - d for d in degrees)


class TestDiagonalSequence:
    @pytest.mark.parametrize(
        "parts,expected",
        [
            ((6, 4, 3), (1, 1, 2, 2, 3, 3, 1)),
            ((8, 7, 5, 4, 3, 2, 1), (1, 1, 2, 2, 3, 3, 4, 4, 4, 2, 2, 1, 1)),
            ((7, 6, 5, 4, 3, 2, 1), (1, 1, 2, 2, 3, 3, 4, 3, 3, 2, 2, 1, 1)),
            ((), ()),
        ],
    )
    def test_worked_examples(self, parts, expected):
        assert diagonal_sequence(parts) == expected

    @given(partition_with_v())
    def test_sum_is_edge_count_and_trailing_positive(self, parts_v):
        parts, _ = parts_v
        delta = diagonal_sequence(parts)
        assert sum(delta) == sum(parts)
        if delta:
            assert delta[-1] > 0

    @given(partition_with_v())
    def test_length_bound(self, parts_v):
        parts, v = parts_v
        assert len(diagonal_sequence(parts)) <= max(0, 2 * v - 3)


class TestP2:
    def test_worked_examples(self):
        assert p2_value((6, 4, 3)) == 114
        assert p2_value(()) == 0
        assert p2_value((8, 4, 3, 2, 1)) == 192

    def test_from_degrees_examples(self):
        assert p2_from_degrees((6, 5, 5, 3, 3, 3, 1, 0)) == 114
        assert p2_from_degrees((0, 0, 0)) == 0
        assert p2_from_degrees((2, 1, 1)) == 6

    @given(partition_with_v())
    def test_three_routes_agree(self, parts_v):
        # dot-position sum == degree-square sum == diagonal dot product
        parts, v = parts_v
        by_positions = p2_value(parts)
        by_degrees = p2_from_degrees(degree_sequence(ThresholdGraph(v, parts)))
        delta = diagonal_sequence(parts)
        by_diagonals = 2 * sum(d * count for d, count in enumerate(delta, start=1))
        assert by_positions == by_degrees == by_diagonals

    def test_exhaustive_small_v(self):
        # every distinct partition with parts below v, for all v <= 12
        for v in range(1, 13):
            choices = list(range(1, v))
            for mask in range(1 << len(choices)):
                parts = tuple(a for i, a in enumerate(reversed(choices)) if mask >> i & 1)
                graph = ThresholdGraph(v, parts)
                assert p2_value(parts) == p2_from_degrees(degree_sequence(graph))
