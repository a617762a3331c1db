"""Closed-form counts and scalar recurrences for the tree families.

Everything is exact: counts are Python ints (arbitrary precision) and the
few genuinely rational quantities are ``fractions.Fraction``.  Every
binomial-quotient closed form asserts that its division is exact, so a
wrong formula cannot fail silently.
"""

from fractions import Fraction
from math import comb, factorial


def compositions(total, parts):
    """Yield weak compositions of ``total`` into ``parts`` nonnegative ints.

    Tuples come out in ascending lexicographic order; a negative ``total``
    or a 0-part split of a positive total yields nothing.
    """
    if total < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _exact_div(numerator, denominator):
    q, r = divmod(numerator, denominator)
    if r:
        raise ArithmeticError(
            f"inexact division {numerator}/{denominator}; formula bug"
        )
    return q


def catalan(n):
    """nth Catalan number, cross-checked over its four standard closed forms."""
    value = _exact_div(comb(2 * n, n), n + 1)
    assert value == _exact_div(factorial(2 * n), factorial(n + 1) * factorial(n))
    assert value == _exact_div(comb(2 * n + 1, n), 2 * n + 1)
    if n >= 1:
        assert value == _exact_div(comb(2 * n, n - 1), n)
    return value


def catalan_m(m, n):
    """Number of complete m-ary trees with n internal vertices."""
    value = _exact_div(comb(m * n + 1, n), m * n + 1)
    if n >= 1:
        assert value == _exact_div(comb(m * n, n - 1), n)
    return value


def catalan_km(k, m, n):
    """(k,m)-Catalan number: count of (k,m)-ary trees of order n.

    C_{k,m}(n) = binom((mn+1)k, n) / (mn+1).
    """
    return _exact_div(comb((m * n + 1) * k, n), m * n + 1)


# Recurrence tables, keyed (k, m) -> tuple of values for orders 0..len-1.
# Entries are immutable tuples swapped in atomically; a concurrent recompute
# just redoes the same cheap work.
_KM_RECURRENCE_CACHE = {}


def _convolve(a, b, upto):
    return [
        sum(a[i] * b[t - i] for i in range(max(0, t - len(b) + 1), min(t, len(a) - 1) + 1))
        for t in range(upto + 1)
    ]


def _km_recurrence_values(k, m, n):
    cached = _KM_RECURRENCE_CACHE.get((k, m))
    if cached is not None and len(cached) > n:
        return cached
    values = [1]
    # folds[j] holds the (j+1)-fold self-convolution of `values`, extended
    # one index per order so the whole table costs O(m n^2).
    folds = [[] for _ in range(m + 1)]
    for order in range(1, n + 1):
        t = order - 1
        folds[0].append(values[t])
        for j in range(1, m + 1):
            folds[j].append(sum(folds[j - 1][i] * values[t - i] for i in range(t + 1)))
        numerator = ((m * order + 1) * k + 1 - order) * folds[m][t]
        values.append(_exact_div(numerator, (m + 1) * order))
    result = tuple(values)
    _KM_RECURRENCE_CACHE[(k, m)] = result
    return result


def catalan_km_recurrence(k, m, n):
    """C_{k,m}(n) via the split-bijection recurrence rather than the closed form.

    C_{k,m}(n) = ((mn+1)k+1-n)/((m+1)n) * [(m+1)-fold convolution of lower
    orders at n-1], with the division asserted exact.  Memoized per (k, m).
    """
    if n == 0:
        return 1
    return _km_recurrence_values(k, m, n)[n]


def catalan_k2_recurrence(k, n):
    """C_{k,2}(n) via the two-term Catalan-style recurrence.

    C_{k,2}(n) = sum_{i=1}^{n} ((2i-1)k-(i-1))/i * C_{k,2}(i-1) * C_{k,2}(n-i);
    k=1 degenerates to the classical Catalan recurrence.
    """
    values = [1]
    for order in range(1, n + 1):
        # terms are individually rational; only the sum must be an integer
        acc = Fraction(0)
        for i in range(1, order + 1):
            acc += Fraction((2 * i - 1) * k - (i - 1), i) * values[i - 1] * values[order - i]
        if acc.denominator != 1:
            raise ArithmeticError(f"inexact k2 recurrence at k={k}, n={order}")
        values.append(acc.numerator)
    return values[n]


def double_factorial_odd(n):
    """(2n-1)!! = 1*3*...*(2n-1); empty product for n=0."""
    value = 1
    for i in range(1, 2 * n, 2):
        value *= i
    return value


SPECIAL_RHS_NAMES = (
    "prod-mi-plus-1",
    "forest-double-factorial",
    "mary-x-eq-m",
    "forest-x-eq-2",
)


def special_rhs(name, m, n):
    """Right-hand side of one of the four special-value identities, exactly.

    prod-mi-plus-1          -> prod_{i=0}^{n-1} (m*i + 1)
    forest-double-factorial -> (2n-1)!!
    mary-x-eq-m             -> (m+1)^n (mn+1)^(n-1) / n!
    forest-x-eq-2           -> (2n+1)^(n-1) / n!
    """
    if name == "prod-mi-plus-1":
        value = 1
        for i in range(n):
            value *= m * i + 1
        return Fraction(value)
    if name == "forest-double-factorial":
        return Fraction(double_factorial_odd(n))
    if name == "mary-x-eq-m":
        return (m + 1) ** n * Fraction(m * n + 1) ** (n - 1) / factorial(n)
    if name == "forest-x-eq-2":
        return Fraction(2 * n + 1) ** (n - 1) / factorial(n)
    raise ValueError(f"unknown special identity {name!r}")
