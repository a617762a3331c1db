"""Dense univariate polynomials over exact rationals, plus the functionals
(coefficient reversal, shift, affine substitution) used to transport the
hook-polynomial identities into their product forms.

Coefficients are ``fractions.Fraction`` stored ascending by degree with no
trailing zeros; the zero polynomial is the empty tuple.
"""

from fractions import Fraction
from math import factorial


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class RationalPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        stripped = [_as_fraction(c) for c in coeffs]
        while stripped and stripped[-1] == 0:
            stripped.pop()
        object.__setattr__(self, "coeffs", tuple(stripped))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, i):
        """Coefficient of x**i (0 beyond the degree)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RationalPolynomial([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(size)]
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, RationalPolynomial)
                       else RationalPolynomial([-_as_fraction(other)]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([c * other for c in self.coeffs])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, x0):
        """Exact evaluation by Horner's rule."""
        x0 = _as_fraction(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def to_strings(self):
        """Coefficients ascending degree as reduced "p/q" strings."""
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return f"RationalPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "1" if (c == 1 and i > 0) else str(c)
            if i == 1:
                term += "*x" if term != "1" else "x"
            elif i > 1:
                term = (term + "*" if term != "1" else "") + f"x^{i}"
            parts.append(term)
        return " + ".join(parts)


ZERO = RationalPolynomial()
ONE = RationalPolynomial([1])
X = RationalPolynomial([0, 1])


def linear(a, b):
    """The polynomial a*x + b."""
    return RationalPolynomial([b, a])


def binom_poly(a, b, n):
    """binom(a*x + b, n) = prod_{i=0}^{n-1} (a*x + b - i) / n!."""
    result = ONE
    for i in range(n):
        result = result * linear(a, _as_fraction(b) - i)
    return result * Fraction(1, factorial(n))


def reverse_coefficients(p, window):
    """x**window * p(1/x): reverse the coefficient vector within the window.

    Defined only for degree(p) <= window; larger degrees raise ValueError
    (they would not yield a polynomial).
    """
    if p.degree > window:
        raise ValueError(f"degree {p.degree} exceeds reversal window {window}")
    return RationalPolynomial([p.coefficient(window - i) for i in range(window + 1)])


def shift(p, c):
    """p(x + c), exactly (iterated Horner in x + c)."""
    c = _as_fraction(c)
    result = ZERO
    step = linear(1, c)
    for coeff in reversed(p.coeffs):
        result = result * step + coeff
    return result


def affine_compose(p, a, b):
    """p(a*x + b), exactly."""
    result = ZERO
    step = linear(a, b)
    for coeff in reversed(p.coeffs):
        result = result * step + coeff
    return result
