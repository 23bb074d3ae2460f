"""Structural layer: forests, components, validation, leaf blocks."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperforest import (
    InvalidStructureError,
    RootedForest,
    component_decomposition,
    enumerate_forests,
    leaf_blocks,
    validate_forest,
)

from conftest import WORKED_EDGES, WORKED_ROOTS


class TestRootedForest:
    def test_canonicalises_edges_and_roots(self):
        f = RootedForest(n=5, b=3, edges=[(5, 3, 1), (4, 2, 3)], roots=[3])
        assert f.edges == ((1, 3, 5), (2, 3, 4))
        assert f.roots == (3,)
        assert f.s == 2
        assert f.k == 0

    def test_structural_equality(self):
        f = RootedForest(n=3, b=2, edges=[(2, 1), (3, 2)], roots=(1,))
        g = RootedForest(n=3, b=2, edges=[(2, 3), (1, 2)], roots=[1])
        assert f == g
        assert hash(f) == hash(g)

    def test_duplicate_edges_rejected(self):
        with pytest.raises(InvalidStructureError, match="duplicate hyperedge"):
            RootedForest(n=3, b=3, edges=[(1, 2, 3), (3, 2, 1)], roots=(1,))


class TestComponentDecomposition:
    def test_worked_forest(self, worked_forest):
        report = component_decomposition(worked_forest)
        assert len(report) == 4
        assert all(c.excess == -1 for c in report)
        assert all(c.root_count == 1 for c in report)
        # ordered by smallest vertex, and the vertex sets partition 1..22
        mins = [c.vertices[0] for c in report]
        assert mins == sorted(mins)
        everything = sorted(v for c in report for v in c.vertices)
        assert everything == list(range(1, 23))

    def test_single_isolated_vertex(self):
        f = RootedForest(n=1, b=2, edges=(), roots=(1,))
        report = component_decomposition(f)
        assert len(report) == 1
        assert report.components[0].excess == -1
        assert report.components[0].vertices == (1,)

    def test_triangle_has_excess_zero(self):
        f = RootedForest(n=3, b=2, edges=[(1, 2), (2, 3), (1, 3)], roots=(1,))
        report = component_decomposition(f)
        assert len(report) == 1
        assert report.components[0].excess == 0

    @pytest.mark.parametrize(
        "edge",
        [(1, 2), (1, 2, 3, 4), (1, 1, 2), (1, 2, 9)],
        ids=["too-small", "too-big", "repeated-label", "out-of-range"],
    )
    def test_malformed_edge_raises(self, edge):
        f = RootedForest(n=5, b=3, edges=[edge], roots=(4,))
        with pytest.raises(InvalidStructureError, match="malformed"):
            component_decomposition(f)

    @settings(max_examples=80, deadline=None)
    @given(data=st.data())
    def test_vertex_sets_partition_labels(self, data):
        n = data.draw(st.integers(min_value=2, max_value=10))
        b = data.draw(st.integers(min_value=2, max_value=min(4, n)))
        edge_pool = data.draw(
            st.lists(
                st.lists(
                    st.integers(min_value=1, max_value=n),
                    min_size=b,
                    max_size=b,
                    unique=True,
                ),
                max_size=5,
            )
        )
        edges = []
        seen = set()
        for e in edge_pool:
            t = tuple(sorted(e))
            if t not in seen:
                seen.add(t)
                edges.append(t)
        f = RootedForest(n=n, b=b, edges=edges, roots=(1,))
        report = component_decomposition(f)
        everything = sorted(v for c in report for v in c.vertices)
        assert everything == list(range(1, n + 1))


class TestValidateForest:
    def test_worked_forest_is_valid(self, worked_forest):
        report = validate_forest(worked_forest)
        assert report.valid
        assert report.violations == ()
        assert report.s == 9
        assert report.k == 3

    def test_triangle_reports_excess(self):
        f = RootedForest(n=3, b=2, edges=[(1, 2), (2, 3), (1, 3)], roots=(1,))
        report = validate_forest(f)
        assert not report.valid
        assert any("excess 0" in v for v in report.violations)

    def test_missing_root_reported(self):
        f = RootedForest(n=22, b=3, edges=WORKED_EDGES, roots=(5, 9, 16))
        report = validate_forest(f)
        assert not report.valid
        assert any("0 roots" in v for v in report.violations)

    def test_two_roots_in_one_component_reported(self):
        f = RootedForest(n=5, b=2, edges=[(1, 2), (4, 5)], roots=(3, 4, 5))
        report = validate_forest(f)
        assert not report.valid
        assert any("2 roots" in v for v in report.violations)
        assert any("0 roots" in v for v in report.violations)

    def test_shape_arithmetic_reported(self):
        f = RootedForest(n=4, b=2, edges=[(1, 2)], roots=(3,))
        report = validate_forest(f)
        assert not report.valid
        assert any("s(b-1)+k+1" in v for v in report.violations)

    def test_overlapping_pair_reported(self):
        f = RootedForest(
            n=5, b=3, edges=[(1, 2, 3), (1, 2, 4)], roots=(5,)
        )
        report = validate_forest(f)
        assert not report.valid
        assert any("more than one hyperedge" in v for v in report.violations)

    def test_malformed_edges_become_violations(self):
        f = RootedForest(n=4, b=3, edges=[(1, 2), (1, 2, 9)], roots=(4,))
        report = validate_forest(f)
        assert not report.valid
        assert any("expected b=3" in v for v in report.violations)
        assert any("outside 1..4" in v for v in report.violations)

    def test_lists_every_violation(self):
        f = RootedForest(n=22, b=3, edges=WORKED_EDGES, roots=(5, 9, 16))
        report = validate_forest(f)
        assert len(report.violations) >= 2  # shape arithmetic and rootless tree


class TestLeafBlocks:
    def test_worked_forest_initial_leaves(self, worked_forest):
        found = [(lb.block, lb.link) for lb in leaf_blocks(worked_forest)]
        assert found == [
            ((1, 22), 21),
            ((2, 17), 18),
            ((3, 19), 13),
            ((10, 15), 13),
            ((12, 14), 4),
        ]

    def test_single_edge(self):
        f = RootedForest(n=3, b=3, edges=[(1, 2, 3)], roots=(3,))
        found = leaf_blocks(f)
        assert len(found) == 1
        assert found[0].block == (1, 2)
        assert found[0].link == 3
        assert found[0].edge == (1, 2, 3)

    def test_path_graph(self):
        f = RootedForest(n=3, b=2, edges=[(1, 2), (2, 3)], roots=(1,))
        found = leaf_blocks(f)
        assert [(lb.block, lb.link) for lb in found] == [((3,), 2)]

    def test_invalid_forest_raises(self):
        f = RootedForest(n=3, b=2, edges=[(1, 2), (2, 3), (1, 3)], roots=(1,))
        with pytest.raises(InvalidStructureError, match="invalid forest"):
            leaf_blocks(f)

    def test_blocks_are_disjoint_across_sampled_shapes(self):
        for b, s, k in [(2, 3, 1), (3, 2, 0), (4, 2, 1)]:
            for forest in enumerate_forests(b, s, k):
                found = leaf_blocks(forest)
                members = [v for lb in found for v in lb.block]
                assert len(members) == len(set(members))

    def test_every_valid_forest_has_a_leaf_block(self):
        # every b = 2 shape with n <= 7 and every b >= 3 shape with n <= 8;
        # the larger shapes blow past a sane unit-test budget, and the
        # exhaustive round-trip sweep exercises them anyway
        shapes = []
        for b in range(2, 9):
            for s in range(1, 9):
                for k in range(0, 8):
                    n = s * (b - 1) + k + 1
                    limit = 7 if b == 2 else 8
                    if b <= n <= limit:
                        shapes.append((b, s, k))
        assert (2, 6, 0) in shapes and (3, 3, 1) in shapes
        for b, s, k in shapes:
            for forest in enumerate_forests(b, s, k):
                assert leaf_blocks(forest), (b, s, k, forest)
