"""Plane trees: data model, validity predicates, exhaustive enumerators, hooks.

A plane tree is a rooted tree whose children are linearly ordered; vertices
are unlabelled, so equality is purely structural.  The same carrier serves
complete m-ary trees, (k,m)-ary trees, and the components of plane forests.

Enumeration is deterministic and cap-guarded: the closed-form count is
consulted before any structure is built, so an accidental combinatorial
explosion raises :class:`EnumerationCapError` instead of hanging.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import counting

DEFAULT_CAP = 10 ** 6

MARK_CRUCIAL = "crucial-vertex"
MARK_LEAF = "leaf"


class EnumerationCapError(Exception):
    """Predicted structure count exceeds the enumeration cap (resource guard)."""


@dataclass(frozen=True)
class PlaneTree:
    """Immutable plane tree; a leaf is a node with an empty child tuple."""

    children: tuple = ()

    def __post_init__(self):
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))

    @property
    def is_leaf(self):
        return not self.children

    def num_vertices(self):
        return 1 + sum(c.num_vertices() for c in self.children)

    def num_internal(self):
        if self.is_leaf:
            return 0
        return 1 + sum(c.num_internal() for c in self.children)

    def num_leaves(self):
        if self.is_leaf:
            return 1
        return sum(c.num_leaves() for c in self.children)

    def preorder(self):
        """Yield (preorder index, level, node), root first, children left to right."""
        stack = [(self, 0)]
        index = 0
        while stack:
            node, level = stack.pop()
            yield index, level, node
            index += 1
            stack.extend((c, level + 1) for c in reversed(node.children))

    def node_at(self, path):
        node = self
        for pos in path:
            node = node.children[pos]
        return node

    def to_paren(self):
        """Canonical text form: leaf "()", internal "(" + children + ")"."""
        return "(" + "".join(c.to_paren() for c in self.children) + ")"

    def to_nested(self):
        """Canonical structured form: nested lists, leaf []."""
        return [c.to_nested() for c in self.children]

    @classmethod
    def from_paren(cls, text):
        tree, end = cls._parse_paren(text, 0)
        if end != len(text):
            raise ValueError(f"trailing characters after tree: {text[end:]!r}")
        return tree

    @classmethod
    def _parse_paren(cls, text, pos):
        if pos >= len(text) or text[pos] != "(":
            raise ValueError(f"expected '(' at position {pos} in {text!r}")
        pos += 1
        children = []
        while pos < len(text) and text[pos] == "(":
            child, pos = cls._parse_paren(text, pos)
            children.append(child)
        if pos >= len(text) or text[pos] != ")":
            raise ValueError(f"expected ')' at position {pos} in {text!r}")
        return cls(tuple(children)), pos + 1

    @classmethod
    def from_nested(cls, obj):
        return cls(tuple(cls.from_nested(c) for c in obj))


LEAF = PlaneTree()


@dataclass(frozen=True)
class MarkedKmTree:
    """A (k,m)-ary tree with one circled vertex, addressed by preorder index.

    ``mark_kind`` declares what the circle sits on: a crucial vertex
    (odd-level vertex of degree m) or a leaf.
    """

    tree: PlaneTree
    mark: int
    mark_kind: str


def is_complete_mary(tree, m):
    """True iff every internal vertex has exactly m children."""
    return all(
        node.is_leaf or len(node.children) == m for _, _, node in tree.preorder()
    )


def km_tree_order(tree, k, m):
    """Order n of ``tree`` as a (k,m)-ary tree, or None if it is not one.

    Every even-level vertex must have degree k; every odd-level vertex
    degree m or 0.  The order is the number of odd-level degree-m vertices.
    """
    order = 0
    for _, level, node in tree.preorder():
        degree = len(node.children)
        if level % 2 == 0:
            if degree != k:
                return None
        elif degree == m:
            order += 1
        elif degree != 0:
            return None
    return order


def is_km_tree(tree, k, m):
    return km_tree_order(tree, k, m) is not None


def crucial_indices(tree, m):
    """Preorder indices of odd-level degree-m vertices."""
    return [
        i for i, level, node in tree.preorder()
        if level % 2 == 1 and len(node.children) == m
    ]


def leaf_indices(tree):
    return [i for i, _, node in tree.preorder() if node.is_leaf]


def _check_cap(predicted, cap, what):
    if predicted > cap:
        raise EnumerationCapError(
            f"{what}: predicted count {predicted} exceeds cap {cap}"
        )


@lru_cache(maxsize=None)
def _mary_trees(m, n):
    if n == 0:
        return (LEAF,)
    out = []
    for comp in counting.compositions(n - 1, m):
        for kids in product(*(_mary_trees(m, i) for i in comp)):
            out.append(PlaneTree(kids))
    return tuple(out)


def enumerate_mary_trees(m, n, cap=DEFAULT_CAP):
    """All complete m-ary trees with n internal vertices, each exactly once.

    Order: n=0 is the single vertex; otherwise trees are ordered by the
    composition of n-1 internal vertices over the root's m subtrees
    (lexicographic), recursing within each child.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_cap(counting.catalan_m(m, n), cap, f"{m}-ary trees, n={n}")
    return iter(_mary_trees(m, n))


@lru_cache(maxsize=None)
def _km_trees(k, m, n):
    out = []
    for comp in counting.compositions(n, k):
        for kids in product(*(_km_slots(k, m, w) for w in comp)):
            out.append(PlaneTree(kids))
    return tuple(out)


@lru_cache(maxsize=None)
def _km_slots(k, m, w):
    # an odd-level position carrying w crucial vertices: a leaf for w=0,
    # else a crucial vertex whose m subtrees share the remaining w-1
    if w == 0:
        return (LEAF,)
    out = []
    for comp in counting.compositions(w - 1, m):
        for kids in product(*(_km_trees(k, m, i) for i in comp)):
            out.append(PlaneTree(kids))
    return tuple(out)


def enumerate_km_trees(k, m, n, cap=DEFAULT_CAP):
    """All (k,m)-ary trees of order n, sorted by their paren serialization."""
    if k < 1 or m < 1:
        raise ValueError("k and m must be >= 1")
    _check_cap(counting.catalan_km(k, m, n), cap, f"({k},{m})-ary trees, n={n}")
    return iter(sorted(_km_trees(k, m, n), key=PlaneTree.to_paren))


@lru_cache(maxsize=None)
def _plane_trees(n):
    # a plane tree on n vertices is a root over a forest on n-1 vertices
    return tuple(PlaneTree(f) for f in _plane_forests(n - 1))


@lru_cache(maxsize=None)
def _plane_forests(n):
    if n == 0:
        return ((),)
    out = []
    for first_size in range(1, n + 1):
        for tree in _plane_trees(first_size):
            for rest in _plane_forests(n - first_size):
                out.append((tree,) + rest)
    return tuple(out)


def enumerate_plane_forests(n, cap=DEFAULT_CAP):
    """All plane forests with n total vertices, as tuples of PlaneTree.

    Ordered by first-tree size (ascending), recursively.  There are
    Catalan(n) of them.
    """
    _check_cap(counting.catalan(n), cap, f"plane forests, n={n}")
    return iter(_plane_forests(n))


def hook_table(tree, mode="internal-only"):
    """Map counted vertices (by preorder index) to their hook lengths.

    mode "internal-only": h_v = internal vertices in the subtree at v,
    entries for internal vertices only (the m-ary convention).
    mode "all-vertices": h_v = all vertices in the subtree at v, entries
    for every vertex (the plane-forest convention).
    """
    if mode not in ("internal-only", "all-vertices"):
        raise ValueError(f"unknown hook mode {mode!r}")
    internal_only = mode == "internal-only"
    entries = {}

    def walk(node, index):
        # returns (next free preorder index, counted vertices in subtree)
        next_index = index + 1
        counted = 0 if (internal_only and node.is_leaf) else 1
        child_counts = 0
        for child in node.children:
            next_index, sub = walk(child, next_index)
            child_counts += sub
        hook = counted + child_counts
        if not (internal_only and node.is_leaf):
            entries[index] = hook
        return next_index, hook

    walk(tree, 0)
    return entries
