"""Hook length polynomials for complete m-ary trees and plane forests.

Each family's nth polynomial is computed three independent ways:

* enum   - sum of per-structure products over the exhaustive enumeration,
* recur  - the root-removal recurrence,
* closed - the binomial closed form,

and the library keeps all three so their agreement can be tested rather
than assumed.  On top of these sit the product-form identities obtained by
transporting the closed form through reversal/shift/substitution operators,
and the special-value identities they imply.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import counting, trees
from .polys import (
    ONE,
    RationalPolynomial,
    affine_compose,
    binom_poly,
    linear,
    reverse_coefficients,
    shift,
)


def mary_tree_poly(tree, arity):
    """Per-tree hook polynomial of a complete ``arity``-ary tree.

    Product over internal vertices of
    (((arity-1)*h + 1)*x + 1 - h) / (arity*h); the single vertex gives 1.
    """
    if not trees.is_complete_mary(tree, arity):
        raise ValueError(f"tree is not a complete {arity}-ary tree")
    result = ONE
    for h in trees.hook_table(tree, "internal-only").values():
        result = result * linear(
            Fraction((arity - 1) * h + 1, arity * h), Fraction(1 - h, arity * h)
        )
    return result


def forest_poly(forest):
    """Hook polynomial of a plane forest: product over all vertices of
    ((2h - 1)*x + 1 - h) / h; the empty forest gives 1."""
    result = ONE
    for tree in forest:
        for h in trees.hook_table(tree, "all-vertices").values():
            result = result * linear(Fraction(2 * h - 1, h), Fraction(1 - h, h))
    return result


def mary_hook_poly_enum(n, arity, cap=trees.DEFAULT_CAP):
    """Sum of per-tree hook polynomials over all arity-ary trees, n internal."""
    total = RationalPolynomial()
    for tree in trees.enumerate_mary_trees(arity, n, cap=cap):
        total = total + mary_tree_poly(tree, arity)
    return total


@lru_cache(maxsize=None)
def mary_hook_poly_recur(n, arity):
    """The same polynomial by the root-removal recurrence.

    With m = arity - 1 and n >= 1 the polynomial is
    ((m*n+1)*x + 1 - n)/((m+1)*n) times the sum, over compositions of n-1
    into arity parts, of the products of the lower-order polynomials.
    """
    if n == 0:
        return ONE
    m = arity - 1
    convolution = RationalPolynomial()
    for comp in counting.compositions(n - 1, arity):
        term = ONE
        for i in comp:
            term = term * mary_hook_poly_recur(i, arity)
        convolution = convolution + term
    prefactor = linear(m * n + 1, 1 - n) * Fraction(1, (m + 1) * n)
    return prefactor * convolution


def mary_hook_poly_closed(n, arity):
    """Closed form: binom((m*n+1)*x, n) / (m*n+1) with m = arity - 1."""
    m = arity - 1
    return Fraction(1, m * n + 1) * binom_poly(m * n + 1, 0, n)


def forest_hook_poly_enum(n, cap=trees.DEFAULT_CAP):
    total = RationalPolynomial()
    for forest in trees.enumerate_plane_forests(n, cap=cap):
        total = total + forest_poly(forest)
    return total


@lru_cache(maxsize=None)
def forest_hook_poly_recur(n):
    """First-tree removal recurrence:
    sum_{i=1}^{n} ((2i-1)*x - (i-1))/i * P(i-1) * P(n-i)."""
    if n == 0:
        return ONE
    total = RationalPolynomial()
    for i in range(1, n + 1):
        factor = linear(Fraction(2 * i - 1, i), Fraction(-(i - 1), i))
        total = total + factor * forest_hook_poly_recur(i - 1) * forest_hook_poly_recur(n - i)
    return total


def forest_hook_poly_closed(n):
    """Closed form: binom((2n+1)*x, n) / (2n+1)."""
    return Fraction(1, 2 * n + 1) * binom_poly(2 * n + 1, 0, n)


def _hook_multisets(family, n, arity, cap):
    if family == "mary":
        if arity is None:
            raise ValueError("the mary family needs an arity")
        return [
            list(trees.hook_table(t, "internal-only").values())
            for t in trees.enumerate_mary_trees(arity, n, cap=cap)
        ]
    if family == "forest":
        return [
            [
                h
                for t in forest
                for h in trees.hook_table(t, "all-vertices").values()
            ]
            for forest in trees.enumerate_plane_forests(n, cap=cap)
        ]
    raise ValueError(f"unknown family {family!r}")


def product_identity_lhs(family, n, arity=None, c=1, cap=trees.DEFAULT_CAP):
    """Sum over the family of prod over counted vertices of (x + c/h_v).

    c=1 is the identity's own left side; other values of c serve the
    special-value variants (c=-1 gives the (2 - 1/h) forest identity at
    x=2).
    """
    c = Fraction(c)
    total = RationalPolynomial()
    for hooks in _hook_multisets(family, n, arity, cap):
        term = ONE
        for h in hooks:
            term = term * linear(1, c / h)
        total = total + term
    return total


def product_identity_rhs(family, n, arity=None):
    """Closed product form of the (x + 1/h_v) identity.

    mary:   prod_{i=0}^{n-1} ((m*n+1+i)*x + m*n+1-m*i) / ((m*n+1) * n!)
    forest: prod_{i=0}^{n-1} ((2n+1-i)*x + 2n+1-2i) / ((2n+1) * n!)
    """
    if family == "mary":
        if arity is None:
            raise ValueError("the mary family needs an arity")
        m = arity - 1
        result = ONE
        for i in range(n):
            result = result * linear(m * n + 1 + i, m * n + 1 - m * i)
        return result * Fraction(1, (m * n + 1) * factorial(n))
    if family == "forest":
        result = ONE
        for i in range(n):
            result = result * linear(2 * n + 1 - i, 2 * n + 1 - 2 * i)
        return result * Fraction(1, (2 * n + 1) * factorial(n))
    raise ValueError(f"unknown family {family!r}")


def transport_mary(p, n, arity):
    """Carry a degree-<=n polynomial identity for arity-ary trees into its
    product form: substitute (m+1)x+m, reverse in the degree-n window,
    shift by -1, reverse again, then shift by -(m-1)."""
    m = arity - 1
    q = affine_compose(p, m + 1, m)
    q = reverse_coefficients(q, n)
    q = shift(q, -1)
    q = reverse_coefficients(q, n)
    return shift(q, -(m - 1))


def transport_forest(p, n):
    """Forest analogue: reverse, shift +1, reverse, shift +1."""
    q = reverse_coefficients(p, n)
    q = shift(q, 1)
    q = reverse_coefficients(q, n)
    return shift(q, 1)


def verify_operator_transport(family, n, arity=None, enum_side=True,
                              cap=trees.DEFAULT_CAP):
    """Check that the operator pipeline really maps the hook polynomials
    onto the product-form identities.

    Closed side: transporting the closed form must give the closed product.
    Enum side (skippable, it enumerates the whole family): transporting the
    enumerated polynomial must give the enumerated (x + 1/h) sum.
    """
    if family == "mary":
        transported = transport_mary(mary_hook_poly_closed(n, arity), n, arity)
        ok = transported == product_identity_rhs("mary", n, arity)
        if enum_side:
            lhs = transport_mary(mary_hook_poly_enum(n, arity, cap=cap), n, arity)
            ok = ok and lhs == product_identity_lhs("mary", n, arity, cap=cap)
        return ok
    if family == "forest":
        transported = transport_forest(forest_hook_poly_closed(n), n)
        ok = transported == product_identity_rhs("forest", n)
        if enum_side:
            lhs = transport_forest(forest_hook_poly_enum(n, cap=cap), n)
            ok = ok and lhs == product_identity_lhs("forest", n, cap=cap)
        return ok
    raise ValueError(f"unknown family {family!r}")


def postnikov_lhs(n, cap=trees.DEFAULT_CAP):
    """n!/2^n * sum over binary trees of prod (1 + 1/h_v), exactly."""
    return Fraction(factorial(n), 2 ** n) * product_identity_lhs(
        "mary", n, arity=2, cap=cap
    )(1)


def postnikov_rhs(n):
    """(n+1)^(n-1) as an exact rational (n=0 gives 1)."""
    return Fraction(n + 1) ** (n - 1)


def verify_postnikov(n, cap=trees.DEFAULT_CAP):
    return postnikov_lhs(n, cap=cap) == postnikov_rhs(n)


def special_value_lhs(name, m, n, cap=trees.DEFAULT_CAP):
    """Enumerated left side of one of the four special-value identities."""
    if name == "prod-mi-plus-1":
        return factorial(n) * product_identity_lhs("mary", n, arity=m + 1, cap=cap)(0)
    if name == "mary-x-eq-m":
        return product_identity_lhs("mary", n, arity=m + 1, cap=cap)(m)
    if name == "forest-double-factorial":
        return factorial(n) * product_identity_lhs("forest", n, cap=cap)(0)
    if name == "forest-x-eq-2":
        return product_identity_lhs("forest", n, c=-1, cap=cap)(2)
    raise ValueError(f"unknown special identity {name!r}")


def special_value_poly_route(name, m, n):
    """The same left side evaluated on the closed product form (no
    enumeration), so the identities can be pushed to larger n."""
    if name == "prod-mi-plus-1":
        return factorial(n) * product_identity_rhs("mary", n, arity=m + 1)(0)
    if name == "mary-x-eq-m":
        return product_identity_rhs("mary", n, arity=m + 1)(m)
    if name == "forest-double-factorial":
        return factorial(n) * product_identity_rhs("forest", n)(0)
    if name == "forest-x-eq-2":
        # (x + 1/h) at x=-2 flips every one of the n factors' signs
        return (-1) ** n * product_identity_rhs("forest", n)(-2)
    raise ValueError(f"unknown special identity {name!r}")


def verify_special_values(name, m, n, cap=trees.DEFAULT_CAP):
    """Both routes to the named identity against its closed right side."""
    rhs = counting.special_rhs(name, m, n)
    return (
        special_value_lhs(name, m, n, cap=cap) == rhs
        and special_value_poly_route(name, m, n) == rhs
    )


def verify_ternary_forest_equality(n):
    """Hook polynomials of ternary trees and of plane forests coincide."""
    return (
        mary_hook_poly_closed(n, 3) == forest_hook_poly_closed(n)
        and mary_hook_poly_recur(n, 3) == forest_hook_poly_recur(n)
    )
