from fractions import Fraction
from math import factorial

import pytest

from kmcatalan import counting, hookpoly
from kmcatalan.polys import ONE, X, RationalPolynomial, binom_poly, linear
from kmcatalan.trees import (
    LEAF,
    PlaneTree,
    enumerate_mary_trees,
    enumerate_plane_forests,
)


def node(*children):
    return PlaneTree(tuple(children))


def left_comb_binary(n):
    tree = node(LEAF, LEAF)
    for _ in range(n - 1):
        tree = node(tree, LEAF)
    return tree


COMB_POLY = Fraction(1, 12) * X * linear(2, -1) * linear(3, -1)
BALANCED_POLY = Fraction(1, 3) * X * X * linear(2, -1)


# --- per-structure polynomials ------------------------------------------------

def test_figure_one_tree_polynomials():
    assert hookpoly.mary_tree_poly(left_comb_binary(3), 2) == COMB_POLY
    balanced = node(node(LEAF, LEAF), node(LEAF, LEAF))
    assert hookpoly.mary_tree_poly(balanced, 2) == BALANCED_POLY
    polys = [hookpoly.mary_tree_poly(t, 2) for t in enumerate_mary_trees(2, 3)]
    assert polys.count(COMB_POLY) == 4
    assert polys.count(BALANCED_POLY) == 1


def test_mary_tree_poly_trivial():
    assert hookpoly.mary_tree_poly(LEAF, 2) == ONE
    assert hookpoly.mary_tree_poly(LEAF, 7) == ONE
    with pytest.raises(ValueError):
        hookpoly.mary_tree_poly(node(LEAF, LEAF), 3)


def test_forest_poly():
    assert hookpoly.forest_poly((LEAF, LEAF)) == X * X
    path2 = node(LEAF)
    assert hookpoly.forest_poly((path2,)) == Fraction(1, 2) * X * linear(3, -1)
    assert hookpoly.forest_poly(()) == ONE


# --- the three computation routes ----------------------------------------------

def test_mary_hook_poly_enum():
    worked_example = Fraction(1, 3) * X * linear(4, -1) * linear(2, -1)
    assert hookpoly.mary_hook_poly_enum(3, 2) == worked_example
    assert hookpoly.mary_hook_poly_enum(0, 3) == ONE
    assert hookpoly.mary_hook_poly_enum(2, 3) == Fraction(1, 2) * X * linear(5, -1)


def test_mary_hook_poly_recur():
    assert hookpoly.mary_hook_poly_recur(3, 2) == \
        Fraction(1, 3) * X * linear(4, -1) * linear(2, -1)
    for arity in (1, 2, 3, 4):
        assert hookpoly.mary_hook_poly_recur(1, arity) == X
    assert hookpoly.mary_hook_poly_recur(4, 3) == hookpoly.mary_hook_poly_enum(4, 3)


def test_mary_hook_poly_closed():
    assert hookpoly.mary_hook_poly_closed(3, 2) == Fraction(1, 4) * binom_poly(4, 0, 3)
    for n in range(6):
        assert hookpoly.mary_hook_poly_closed(n, 1) == binom_poly(1, 0, n)
    assert hookpoly.mary_hook_poly_closed(2, 3) == Fraction(1, 2) * X * linear(5, -1)


def test_three_way_agreement_mary():
    for arity in (1, 2, 3, 4):
        for n in range(5):
            enum = hookpoly.mary_hook_poly_enum(n, arity)
            assert enum == hookpoly.mary_hook_poly_recur(n, arity)
            assert enum == hookpoly.mary_hook_poly_closed(n, arity)


def test_forest_three_ways():
    expected = RationalPolynomial([0, Fraction(-1, 2), Fraction(5, 2)])
    assert hookpoly.forest_hook_poly_enum(2) == expected
    assert hookpoly.forest_hook_poly_recur(2) == expected
    assert hookpoly.forest_hook_poly_closed(2) == expected
    assert hookpoly.forest_hook_poly_enum(0) == ONE
    assert hookpoly.forest_hook_poly_recur(5) == hookpoly.forest_hook_poly_closed(5)
    for n in range(6):
        assert hookpoly.forest_hook_poly_enum(n) == hookpoly.forest_hook_poly_closed(n)


def test_degree_and_leading_coefficient():
    for arity in (2, 3, 4):
        m = arity - 1
        for n in range(1, 7):
            p = hookpoly.mary_hook_poly_closed(n, arity)
            assert p.degree == n
            assert p.coefficient(n) == Fraction((m * n + 1) ** (n - 1), factorial(n))
    for n in range(1, 8):
        assert hookpoly.forest_hook_poly_closed(n).degree == n


def test_integer_specialization():
    for k in (1, 2, 3):
        for m in (1, 2, 3):
            for n in range(11):
                assert hookpoly.mary_hook_poly_closed(n, m + 1)(k) == \
                    counting.catalan_km(k, m, n)
    for k in (1, 2, 3):
        for n in range(11):
            assert hookpoly.forest_hook_poly_closed(n)(k) == \
                counting.catalan_km(k, 2, n)
    for n in range(8):
        count = sum(1 for _ in enumerate_plane_forests(n))
        assert hookpoly.forest_hook_poly_closed(n)(1) == counting.catalan(n) == count


# --- product-form identities -----------------------------------------------------

def test_product_identity_lhs():
    assert hookpoly.product_identity_lhs("mary", 1, 2) == linear(1, 1)
    at_one = hookpoly.product_identity_lhs("mary", 3, 2)(1)
    assert at_one == Fraction(64, 3)
    lhs = hookpoly.product_identity_lhs("forest", 2)
    assert lhs == hookpoly.product_identity_rhs("forest", 2)


def test_product_identity_rhs():
    assert hookpoly.product_identity_rhs("mary", 1, 2) == linear(1, 1)
    expected = Fraction(1, 24) * linear(4, 4) * linear(5, 3) * linear(6, 2)
    assert hookpoly.product_identity_rhs("mary", 3, 2) == expected
    forest3 = Fraction(1, 42) * linear(7, 7) * linear(6, 5) * linear(5, 3)
    assert hookpoly.product_identity_rhs("forest", 3) == forest3
    assert hookpoly.product_identity_lhs("forest", 3) == forest3


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        hookpoly.product_identity_lhs("labelled", 2)
    with pytest.raises(ValueError):
        hookpoly.product_identity_rhs("mary", 2)  # arity missing


def test_operator_transport():
    assert hookpoly.verify_operator_transport("mary", 3, 2)
    assert hookpoly.verify_operator_transport("forest", 0)
    assert hookpoly.verify_operator_transport("mary", 4, 3)
    for n in range(6, 9):  # enumeration would be large; closed side only
        assert hookpoly.verify_operator_transport("mary", n, 4, enum_side=False)
        assert hookpoly.verify_operator_transport("forest", n, enum_side=False)


def test_postnikov():
    assert hookpoly.postnikov_lhs(3) == 16 == hookpoly.postnikov_rhs(3)
    for n in range(6):
        assert hookpoly.verify_postnikov(n)


# --- special values ----------------------------------------------------------------

def test_special_value_hand_computations():
    # two plane forests on 2 vertices: hooks {1,1} and {2,1}
    assert hookpoly.special_value_lhs("forest-double-factorial", None, 2) == 3
    assert counting.special_rhs("forest-double-factorial", None, 2) == 3
    # Figure 1 hook multisets: 4 * 1/6 + 1/3 = 1, times 3! = 6 = 1*2*3
    assert hookpoly.special_value_lhs("prod-mi-plus-1", 1, 3) == 6
    assert hookpoly.special_value_lhs("mary-x-eq-m", 1, 3) == Fraction(64, 3)


def test_verify_special_values():
    for name in ("prod-mi-plus-1", "mary-x-eq-m"):
        for m in (1, 2, 3):
            for n in range(5):
                assert hookpoly.verify_special_values(name, m, n), (name, m, n)
    for name in ("forest-double-factorial", "forest-x-eq-2"):
        for n in range(6):
            assert hookpoly.verify_special_values(name, None, n), (name, n)


def test_forest_negative_two_substitution_sign():
    # substituting x=-2 into the (x + 1/h) identity flips exactly n signs,
    # so it reproduces the printed (2 - 1/h) identity up to (-1)^n
    for n in range(7):
        direct = hookpoly.product_identity_rhs("forest", n)(-2)
        printed = counting.special_rhs("forest-x-eq-2", None, n)
        assert (-1) ** n * direct == printed


def test_ternary_forest_equality():
    for n in (0, 2, 6):
        assert hookpoly.verify_ternary_forest_equality(n)
    assert hookpoly.mary_hook_poly_closed(2, 3) == hookpoly.forest_hook_poly_closed(2)
