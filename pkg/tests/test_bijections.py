import pytest

from kmcatalan import bijections
from kmcatalan.trees import (
    LEAF,
    MARK_CRUCIAL,
    MARK_LEAF,
    MarkedKmTree,
    PlaneTree,
    crucial_indices,
    enumerate_km_trees,
    enumerate_mary_trees,
    is_km_tree,
    km_tree_order,
)


def node(*children):
    return PlaneTree(tuple(children))


def star(k):
    return node(*[LEAF] * k)


def figure3_input():
    """(3,2)-ary tree of order 3, circled crucial vertex under the third
    root child; the mark is that vertex's preorder index."""
    p = node(star(3), star(3))
    s = node(star(3), star(3))
    q = node(LEAF, s, LEAF)
    v = node(q, star(3))
    tree = node(p, LEAF, v)
    # preorder: root 0, p occupies 1..9, leaf 10, v at 11
    return MarkedKmTree(tree, 11, MARK_CRUCIAL)


def test_figure3_split():
    out = bijections.split(figure3_input(), 3, 2)
    s = node(star(3), star(3))
    assert out.ordered_trees == (node(LEAF, s, LEAF), star(3))
    residual = node(node(star(3), star(3)), LEAF, LEAF)
    assert out.last_tree.tree == residual
    assert out.last_tree.mark_kind == MARK_LEAF
    assert out.last_tree.tree.node_at((2,)).is_leaf
    assert out.last_tree.mark == 11  # root 0, first subtree 1..9, leaf 10


def test_figure3_merge_inverts():
    marked = figure3_input()
    assert bijections.merge(bijections.split(marked, 3, 2), 3, 2) == marked


def test_order_one_split():
    # the unique crucial vertex of an order-1 tree splits into m order-0
    # trees plus an order-0 tree with a circled leaf
    k, m = 2, 2
    for tree in enumerate_km_trees(k, m, 1):
        marked = MarkedKmTree(tree, crucial_indices(tree, m)[0], MARK_CRUCIAL)
        out = bijections.split(marked, k, m)
        assert out.ordered_trees == (star(k), star(k))
        assert out.last_tree.tree == star(k)


def test_split_validation():
    marked = figure3_input()
    with pytest.raises(ValueError):
        bijections.split(MarkedKmTree(marked.tree, 11, MARK_LEAF), 3, 2)
    with pytest.raises(ValueError):
        bijections.split(MarkedKmTree(marked.tree, 10, MARK_CRUCIAL), 3, 2)  # a leaf
    with pytest.raises(ValueError):
        bijections.split(marked, 2, 2)  # wrong k
    order0 = next(iter(enumerate_km_trees(2, 2, 0)))
    with pytest.raises(ValueError):
        bijections.split(MarkedKmTree(order0, 0, MARK_CRUCIAL), 2, 2)


def test_merge_validation():
    out = bijections.split(figure3_input(), 3, 2)
    with pytest.raises(ValueError):
        bijections.merge(
            bijections.SplitTuple(out.ordered_trees[:1], out.last_tree), 3, 2
        )
    bad_last = MarkedKmTree(out.last_tree.tree, out.last_tree.mark, MARK_CRUCIAL)
    with pytest.raises(ValueError):
        bijections.merge(bijections.SplitTuple(out.ordered_trees, bad_last), 3, 2)


def test_split_outputs_are_valid():
    for k, m, n in [(2, 2, 2), (3, 2, 2), (2, 3, 2), (2, 1, 3), (1, 2, 3)]:
        for marked in bijections.enumerate_marked_trees(k, m, n):
            out = bijections.split(marked, k, m)
            parts = out.ordered_trees + (out.last_tree.tree,)
            assert all(is_km_tree(t, k, m) for t in parts)
            assert sum(km_tree_order(t, k, m) for t in parts) == n - 1
            leaf_positions = [
                i for i, _, nd in out.last_tree.tree.preorder() if nd.is_leaf
            ]
            assert out.last_tree.mark in leaf_positions


def test_roundtrip_grids():
    for k in (1, 2, 3):
        for m in (1, 2, 3):
            for n in (0, 1, 2):
                assert bijections.verify_split_roundtrip(k, m, n), (k, m, n)
    for k, m in ((2, 1), (1, 2)):
        for n in (0, 1, 2, 3):
            assert bijections.verify_split_roundtrip(k, m, n), (k, m, n)


def test_marked_tree_counts():
    assert sum(1 for _ in bijections.enumerate_marked_trees(2, 1, 2)) == 10
    assert sum(1 for _ in bijections.enumerate_marked_trees(1, 2, 2)) == 4
    assert list(bijections.enumerate_marked_trees(3, 2, 0)) == []


def test_tuple_counts():
    for k in (1, 2, 3):
        for m in (1, 2, 3):
            for n in (0, 1, 2):
                assert bijections.verify_tuple_counts(k, m, n), (k, m, n)


def test_contract_k1():
    assert bijections.contract_k1(star(2), 2) == node(LEAF, LEAF)
    images = {bijections.contract_k1(t, 2) for t in enumerate_km_trees(2, 1, 2)}
    assert images == set(enumerate_mary_trees(2, 3))
    assert len(images) == 5
    with pytest.raises(ValueError):
        bijections.contract_k1(star(2), 3)


def test_contract_1m():
    images = {bijections.contract_1m(t, 2) for t in enumerate_km_trees(1, 2, 2)}
    assert images == set(enumerate_mary_trees(2, 2))
    assert len(images) == 2
    order0 = next(iter(enumerate_km_trees(1, 5, 0)))
    assert bijections.contract_1m(order0, 5) == LEAF


def test_contraction_bijectivity_grids():
    for n in range(4):
        for k in (1, 2, 3):
            assert bijections.verify_contraction_k1(k, n), (k, n)
        for m in (1, 2, 3):
            assert bijections.verify_contraction_1m(m, n), (m, n)
