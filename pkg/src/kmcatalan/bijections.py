"""Executable bijections on (k,m)-ary trees.

The split map takes a tree with one circled crucial vertex, removes the m
edges under it, and yields an ordered (m+1)-tuple whose last entry is the
residual tree with the old crucial vertex demoted to a circled leaf; merge
is its inverse.  Contraction maps realize the k=1 / m=1 degenerations onto
plain m-ary (resp. k-ary) trees.

Marks are preorder indices but are always rebuilt from the structural path
to the marked node, never adjusted arithmetically.
"""

from dataclasses import dataclass
from itertools import product

from . import counting
from .trees import (
    DEFAULT_CAP,
    MARK_CRUCIAL,
    MARK_LEAF,
    MarkedKmTree,
    PlaneTree,
    crucial_indices,
    enumerate_km_trees,
    enumerate_mary_trees,
    is_complete_mary,
    is_km_tree,
    km_tree_order,
    leaf_indices,
)


@dataclass(frozen=True)
class SplitTuple:
    """Ordered (T_1..T_m; T_{m+1}) of (k,m)-ary trees; the last carries a
    circled leaf.  Total crucial-vertex count across the tuple is n-1."""

    ordered_trees: tuple
    last_tree: MarkedKmTree


def _path_of_index(tree, index):
    """Child-position path from the root to the node with this preorder index."""
    for i, _, node in tree.preorder():
        if i == index:
            break
    else:
        raise ValueError(f"no vertex with preorder index {index}")
    # rewalk tracking the path; cheaper bookkeeping than threading it above
    path = []
    node = tree
    remaining = index
    while remaining > 0:
        remaining -= 1
        for pos, child in enumerate(node.children):
            size = child.num_vertices()
            if remaining < size:
                path.append(pos)
                node = child
                break
            remaining -= size
    return tuple(path)


def _index_of_path(tree, path):
    index = 0
    node = tree
    for pos in path:
        index += 1 + sum(node.children[p].num_vertices() for p in range(pos))
        node = node.children[pos]
    return index


def _replace_at_path(tree, path, replacement):
    if not path:
        return replacement
    pos = path[0]
    kids = list(tree.children)
    kids[pos] = _replace_at_path(kids[pos], path[1:], replacement)
    return PlaneTree(tuple(kids))


def _level_of_path(path):
    return len(path)


def split(marked, k, m):
    """Detach the m subtrees under the circled crucial vertex.

    Returns the SplitTuple (children of the mark, in order; residual tree
    with the mark demoted to a circled leaf).
    """
    if marked.mark_kind != MARK_CRUCIAL:
        raise ValueError("split needs a circled crucial vertex")
    order = km_tree_order(marked.tree, k, m)
    if order is None or order < 1:
        raise ValueError(f"not a ({k},{m})-ary tree of positive order")
    path = _path_of_index(marked.tree, marked.mark)
    node = marked.tree.node_at(path)
    if _level_of_path(path) % 2 != 1 or len(node.children) != m:
        raise ValueError("mark does not sit on a crucial vertex")
    residual = _replace_at_path(marked.tree, path, PlaneTree())
    return SplitTuple(
        ordered_trees=node.children,
        last_tree=MarkedKmTree(residual, _index_of_path(residual, path), MARK_LEAF),
    )


def merge(split_tuple, k, m):
    """Inverse of split: grow the circled leaf back into a crucial vertex
    whose children are the tuple's first m trees, in order."""
    last = split_tuple.last_tree
    if last.mark_kind != MARK_LEAF:
        raise ValueError("merge needs a circled leaf on the last tree")
    if len(split_tuple.ordered_trees) != m:
        raise ValueError(f"expected {m} detached trees")
    for t in split_tuple.ordered_trees:
        if not is_km_tree(t, k, m):
            raise ValueError(f"detached tree is not a ({k},{m})-ary tree")
    if not is_km_tree(last.tree, k, m):
        raise ValueError(f"residual tree is not a ({k},{m})-ary tree")
    path = _path_of_index(last.tree, last.mark)
    if not last.tree.node_at(path).is_leaf or _level_of_path(path) % 2 != 1:
        raise ValueError("mark does not sit on an odd-level leaf")
    grown = _replace_at_path(last.tree, path, PlaneTree(split_tuple.ordered_trees))
    return MarkedKmTree(grown, _index_of_path(grown, path), MARK_CRUCIAL)


def enumerate_marked_trees(k, m, n, cap=DEFAULT_CAP):
    """All order-n (k,m)-ary trees with one circled crucial vertex."""
    for tree in enumerate_km_trees(k, m, n, cap=cap):
        for index in crucial_indices(tree, m):
            yield MarkedKmTree(tree, index, MARK_CRUCIAL)


def enumerate_split_tuples(k, m, n, cap=DEFAULT_CAP):
    """All (T_1..T_m; T_{m+1}-with-circled-leaf) tuples of total order n-1."""
    for comp in counting.compositions(n - 1, m + 1):
        pools = [tuple(enumerate_km_trees(k, m, i, cap=cap)) for i in comp]
        for choice in product(*pools):
            last = choice[-1]
            for leaf in leaf_indices(last):
                yield SplitTuple(choice[:-1], MarkedKmTree(last, leaf, MARK_LEAF))


def verify_split_roundtrip(k, m, n, cap=DEFAULT_CAP):
    """merge(split(.)) and split(merge(.)) are identities on their domains."""
    for marked in enumerate_marked_trees(k, m, n, cap=cap):
        if merge(split(marked, k, m), k, m) != marked:
            return False
    for tup in enumerate_split_tuples(k, m, n, cap=cap):
        if split(merge(tup, k, m), k, m) != tup:
            return False
    return True


def verify_tuple_counts(k, m, n, cap=DEFAULT_CAP):
    """The three counting equations behind the split bijection, exhaustively.

    marked trees           = n * C_{k,m}(n)
    anywhere-circled sets  = ((mn+1)k+1-n) * (m+1)-fold convolution
    anywhere-circled sets  = (m+1) * last-position-circled tuples
    and the bijection itself forces marked trees = tuples.
    """
    marked = sum(1 for _ in enumerate_marked_trees(k, m, n, cap=cap))
    tuples = sum(1 for _ in enumerate_split_tuples(k, m, n, cap=cap))

    anywhere = 0
    for comp in counting.compositions(n - 1, m + 1):
        pools = [tuple(enumerate_km_trees(k, m, i, cap=cap)) for i in comp]
        for choice in product(*pools):
            anywhere += sum(t.num_leaves() for t in choice)

    convolution = sum(
        _product(counting.catalan_km(k, m, i) for i in comp)
        for comp in counting.compositions(n - 1, m + 1)
    )
    return (
        marked == n * counting.catalan_km(k, m, n)
        and marked == tuples
        and anywhere == ((m * n + 1) * k + 1 - n) * convolution
        and anywhere == (m + 1) * tuples
    )


def _product(values):
    result = 1
    for v in values:
        result *= v
    return result


def contract_k1(tree, k):
    """Fuse every crucial vertex of a (k,1)-ary tree with its single child.

    The result is a complete k-ary tree with one more internal vertex than
    the input has crucial vertices.
    """
    if not is_km_tree(tree, k, 1):
        raise ValueError(f"not a ({k},1)-ary tree")
    return _contract_k1(tree)


def _contract_k1(tree):
    kids = []
    for child in tree.children:
        if child.is_leaf:
            kids.append(child)
        else:
            kids.append(_contract_k1(child.children[0]))
    return PlaneTree(tuple(kids))


def contract_1m(tree, m):
    """Fuse every even-level vertex of a (1,m)-ary tree with its only child.

    The result is a complete m-ary tree with as many internal vertices as
    the input has crucial vertices.
    """
    if not is_km_tree(tree, 1, m):
        raise ValueError(f"not a (1,{m})-ary tree")
    return _contract_1m(tree)


def _contract_1m(tree):
    child = tree.children[0]
    if child.is_leaf:
        return PlaneTree()
    return PlaneTree(tuple(_contract_1m(g) for g in child.children))


def verify_contraction_k1(k, n, cap=DEFAULT_CAP):
    """contract_k1 is a bijection T_{k,1}(n) -> k-ary trees, n+1 internal."""
    domain = list(enumerate_km_trees(k, 1, n, cap=cap))
    images = [contract_k1(t, k) for t in domain]
    target = set(enumerate_mary_trees(k, n + 1, cap=cap))
    return (
        len(set(images)) == len(domain)
        and set(images) == target
        and all(is_complete_mary(t, k) and t.num_internal() == n + 1 for t in images)
    )


def verify_contraction_1m(m, n, cap=DEFAULT_CAP):
    """contract_1m is a bijection T_{1,m}(n) -> m-ary trees, n internal."""
    domain = list(enumerate_km_trees(1, m, n, cap=cap))
    images = [contract_1m(t, m) for t in domain]
    target = set(enumerate_mary_trees(m, n, cap=cap))
    return (
        len(set(images)) == len(domain)
        and set(images) == target
        and all(is_complete_mary(t, m) and t.num_internal() == n for t in images)
    )
