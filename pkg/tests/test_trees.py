"""Tree parsing, Euler tours, and the level-ancestor index."""

import io
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from findlarger import (
    CycleError,
    DepthOutOfRangeError,
    EmptyTreeError,
    InvalidKappaError,
    LevelAncestorIndex,
    MalformedTreeError,
    MultipleRootsError,
    UnbalancedParensError,
    UnknownNodeError,
    euler_tour,
    parse_balanced_parens,
    parse_parent_array,
)
from findlarger.formats import write_parens
from findlarger.gen import random_parent_array
from findlarger.oracle import naive_la


def tree_from(parent):
    return parse_parent_array(" ".join(map(str, parent)))


class TestParentArrayParsing:
    def test_chain_with_header(self):
        t = parse_parent_array("4\n-1 0 1 2")
        assert t.parent == [-1, 0, 1, 2]
        assert t.root == 0
        assert t.children == [[1], [2], [3], []]

    def test_star_without_header(self):
        t = parse_parent_array("-1 0 0")
        assert t.parent == [-1, 0, 0]
        assert t.children == [[1, 2], [], []]

    def test_root_anywhere(self):
        t = parse_parent_array("3\n2 2 -1")
        assert t.root == 2
        assert t.children == [[], [], [0, 1]]

    def test_single_node(self):
        assert parse_parent_array("-1").n_nodes == 1

    def test_malformed(self):
        for text in ("", "a b", "3\n-1 0 x", "-1 7", "-1 -2"):
            with pytest.raises(MalformedTreeError):
                parse_parent_array(text)

    def test_self_loops_are_cycles(self):
        with pytest.raises(CycleError):
            parse_parent_array("2\n0 1")

    def test_longer_cycle(self):
        with pytest.raises(CycleError):
            parse_parent_array("-1 2 3 1")

    def test_multiple_roots(self):
        with pytest.raises(MultipleRootsError):
            parse_parent_array("-1 -1 0")


class TestParensParsing:
    def test_nested(self):
        t = parse_balanced_parens("((())())")
        assert t.parent == [-1, 0, 1, 0]
        assert t.children == [[1, 3], [2], [], []]
        assert t.root == 0

    def test_whitespace_ignored(self):
        assert parse_balanced_parens(" ( ( ) ) \n").parent == [-1, 0]

    def test_unbalanced(self):
        for text in ("(()", "())", ")("):
            with pytest.raises(UnbalancedParensError):
                parse_balanced_parens(text)

    def test_forest_rejected(self):
        with pytest.raises(MultipleRootsError):
            parse_balanced_parens("()()")

    def test_empty(self):
        for text in ("", "   \n"):
            with pytest.raises(EmptyTreeError):
                parse_balanced_parens(text)

    def test_garbage_char(self):
        with pytest.raises(MalformedTreeError):
            parse_balanced_parens("(a)")

    def test_write_then_parse_is_stable(self):
        for seed in range(20):
            t = tree_from(random_parent_array(random.Random(seed).randrange(1, 40), seed))
            buf = io.StringIO()
            write_parens(t, buf)
            s1 = buf.getvalue()
            buf2 = io.StringIO()
            write_parens(parse_balanced_parens(s1), buf2)
            assert buf2.getvalue() == s1


class TestEulerTour:
    def test_frozen_star(self):
        tour = euler_tour(parse_parent_array("3\n-1 0 0"))
        assert list(tour.nodes) == [0, 1, 0, 2, 0]
        assert list(tour.depths) == [0, 1, 0, 1, 0]
        assert list(tour.first_pos) == [0, 1, 3]
        assert list(tour.depth) == [0, 1, 1]

    def test_frozen_bigger(self):
        tour = euler_tour(parse_parent_array("6\n-1 0 0 1 1 2"))
        assert list(tour.nodes) == [0, 1, 3, 1, 4, 1, 0, 2, 5, 2, 0]
        assert list(tour.depths) == [0, 1, 2, 1, 2, 1, 0, 1, 2, 1, 0]
        assert list(tour.first_pos) == [0, 1, 7, 2, 4, 8]

    def test_single_node(self):
        tour = euler_tour(parse_parent_array("-1"))
        assert list(tour.nodes) == [0] and list(tour.depths) == [0]

    @settings(max_examples=120, deadline=None)
    @given(st.integers(1, 120), st.integers(0, 10**6), st.floats(0.0, 1.0))
    def test_tour_shape(self, n, seed, path_bias):
        tree = tree_from(random_parent_array(n, seed, path_bias))
        tour = euler_tour(tree)
        assert len(tour.nodes) == len(tour.depths) == 2 * n - 1
        assert tour.nodes[0] == tree.root and tour.nodes[-1] == tree.root
        assert tour.depths[0] == 0 and tour.depths[-1] == 0
        # adjacent stops are parent/child: depth moves by exactly one
        for j in range(1, 2 * n - 1):
            assert abs(tour.depths[j] - tour.depths[j - 1]) == 1
        seen = set()
        for j, v in enumerate(tour.nodes):
            assert tour.depths[j] == tour.depth[v]
            if v not in seen:
                seen.add(v)
                assert tour.first_pos[v] == j
        assert len(seen) == n
        # stored depths agree with parent walks
        for v in range(n):
            d, u = 0, v
            while tree.parent[u] != -1:
                u = tree.parent[u]
                d += 1
            assert tour.depth[v] == d


class TestLevelAncestorIndex:
    def test_frozen_example(self):
        idx = LevelAncestorIndex(parse_parent_array("6\n-1 0 0 1 1 2"))
        assert idx.query(5, 1) == 2
        assert idx.query(5, 2) == 5
        assert idx.query(5, 0) == 0
        assert idx.query(3, 1) == 1

    def test_errors(self):
        idx = LevelAncestorIndex(parse_parent_array("3\n-1 0 0"))
        with pytest.raises(UnknownNodeError):
            idx.query(3, 0)
        with pytest.raises(UnknownNodeError):
            idx.query(-1, 0)
        with pytest.raises(DepthOutOfRangeError):
            idx.query(1, 2)
        with pytest.raises(DepthOutOfRangeError):
            idx.query(1, -1)

    def test_bad_kappa_propagates(self):
        with pytest.raises(InvalidKappaError):
            LevelAncestorIndex(parse_parent_array("-1 0"), kappa=2)

    def test_path_and_star_and_singleton(self):
        for parent in ([-1] + list(range(30)), [-1] + [0] * 30, [-1]):
            tree = tree_from(parent)
            idx = LevelAncestorIndex(tree)
            for v in range(tree.n_nodes):
                for d in range(idx.tour.depth[v] + 1):
                    assert idx.query(v, d) == naive_la(tree, v, d)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(1, 90), st.integers(0, 10**6), st.floats(0.0, 1.0), st.integers(3, 6))
    def test_random_trees_all_pairs(self, n, seed, path_bias, kappa):
        tree = tree_from(random_parent_array(n, seed, path_bias))
        idx = LevelAncestorIndex(tree, kappa)
        depth = idx.tour.depth
        for v in range(n):
            for d in range(depth[v] + 1):
                a = idx.query(v, d)
                assert a == naive_la(tree, v, d)
                assert depth[a] == d
            assert idx.query(v, depth[v]) == v
            assert idx.query(v, 0) == tree.root
