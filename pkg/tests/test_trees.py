import pytest

from invseq.trees import (
    LabelTree,
    boxed_counts_operator,
    count_trees_bounded,
    count_trees_bruteforce,
    count_trees_root_unbounded,
    invseq_to_tree,
    iter_trees,
    tree_to_invseq,
)


class TestLabelTree:
    def test_validation(self):
        with pytest.raises(ValueError):
            LabelTree((0, 2))  # label 2 cannot be parent of label 2

    def test_children(self):
        t = LabelTree((0, 0, 1))
        assert t.n == 4
        assert t.children_counts() == [2, 1, 0, 0]
        assert t.max_branching() == 2
        assert t.max_branching(skip_root=True) == 1

    def test_roundtrip(self):
        for t in iter_trees(5, None):
            assert invseq_to_tree(tree_to_invseq(t)) == t

    def test_unbounded_count_is_factorial(self):
        # unrestricted label-increasing trees on n vertices: (n-1)!
        assert count_trees_bruteforce(5, None) == 24
        assert count_trees_bruteforce(6, None) == 120


class TestCounts:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_series_matches_bruteforce(self, k):
        for n in range(8):
            assert count_trees_bounded(n, k) == count_trees_bruteforce(n, k)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_root_unbounded_matches_bruteforce(self, k):
        for n in range(8):
            assert count_trees_root_unbounded(n, k) == count_trees_bruteforce(
                n, k, root_unbounded=True
            )

    def test_k1_paths(self):
        # branching <= 1 forces a path; exactly one per vertex count
        assert [count_trees_bounded(n, 1) for n in range(6)] == [1, 1, 1, 1, 1, 1]

    def test_k1_root_unbounded_is_bell(self):
        # a star of paths from the root: set partitions of the non-root labels
        assert [count_trees_root_unbounded(n, 1) for n in range(1, 8)] == [
            1, 1, 2, 5, 15, 52, 203,
        ]


class TestOperator:
    @pytest.mark.parametrize("k", [2, 3])
    def test_operator_matches_exp_route(self, k):
        values = boxed_counts_operator(k, 8)
        assert values == [count_trees_root_unbounded(n + 1, k) for n in range(9)]

    def test_known_prefix_k2(self):
        assert boxed_counts_operator(2, 6) == [1, 1, 2, 6, 23, 107, 583]
