import itertools

import pytest

from intcyc.catalog import (
    canonical_form,
    labeled_trees,
    prufer_decode,
    prufer_encode,
    tree_catalog,
    trees,
    trees_by_prufer,
)
from intcyc.graph import is_tree

# unlabeled trees on n vertices, n = 1..9
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_prufer_round_trip():
    for n in range(3, 7):
        for seq in itertools.product(range(n), repeat=n - 2):
            edges = prufer_decode(seq, n)
            assert prufer_encode(n, edges) == list(seq)


def test_prufer_known():
    assert sorted(map(sorted, prufer_decode([3, 3, 3]))) == [[0, 3], [1, 3], [2, 3], [3, 4]]
    with pytest.raises(ValueError):
        prufer_decode([5], 3)


def test_labeled_tree_count_is_cayley():
    for n in range(1, 7):
        assert sum(1 for _ in labeled_trees(n)) == max(1, n ** (n - 2))


@pytest.mark.parametrize("n", range(1, 10))
def test_tree_counts(n):
    ts = trees(n)
    assert len(ts) == TREE_COUNTS[n - 1]
    assert all(is_tree(g) and g.n == n for g in ts)
    assert len({canonical_form(g.n, g.edges) for g in ts}) == len(ts)


@pytest.mark.parametrize("n", range(1, 8))
def test_growth_matches_prufer(n):
    assert trees(n) == trees_by_prufer(n)


def test_catalog_sizes():
    assert len(tree_catalog(1)) == 1
    assert len(tree_catalog(8)) == sum(TREE_COUNTS[1:9])


def test_canonical_form_invariant_under_relabeling():
    edges = [(0, 1), (1, 2), (1, 3), (3, 4)]
    perm = [4, 2, 0, 1, 3]
    relabeled = [(perm[u], perm[v]) for u, v in edges]
    assert canonical_form(5, edges) == canonical_form(5, relabeled)
    assert canonical_form(5, edges) != canonical_form(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
