"""Truncated formal power series over exact rationals.

A series of order N carries exact coefficients for z^0..z^N; arithmetic on
two series is exact through the smaller of the two orders, and operations
that genuinely lose or gain an order (derivative, antiderivative, division
by z, multiplication by z) say so in their result's order.

This is all the machinery the two generating-function proofs need: solving
C = (1 + z*C^m)^k by fixed point, the Lagrange-inversion route through
B = z*(1+B)^(mk), and the integrated ODE identity for the (k,2) series.
"""

from fractions import Fraction

from . import counting


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class TruncatedPowerSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series carries at least its constant term")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedPowerSeries is immutable")

    @classmethod
    def constant(cls, value, order):
        return cls([value] + [0] * order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self.coeffs[i]

    def truncate(self, order):
        if order >= self.order:
            return self
        return TruncatedPowerSeries(self.coeffs[: order + 1])

    def agrees_with(self, other, through=None):
        """Exact coefficient equality through ``through`` (default: min order)."""
        if through is None:
            through = min(self.order, other.order)
        if through > min(self.order, other.order):
            raise ValueError("comparison window exceeds a truncation order")
        return self.coeffs[: through + 1] == other.coeffs[: through + 1]

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedPowerSeries.constant(other, self.order)
        if isinstance(other, TruncatedPowerSeries):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedPowerSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPowerSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedPowerSeries([c * other for c in self.coeffs])
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedPowerSeries(
            [
                sum(self.coeffs[i] * other.coeffs[t - i] for i in range(t + 1))
                for t in range(n + 1)
            ]
        )

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative series power; use reciprocal()")
        result = TruncatedPowerSeries.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def reciprocal(self):
        """1/self; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("reciprocal of a series with zero constant term")
        inv0 = 1 / self.coeffs[0]
        out = [inv0]
        for t in range(1, self.order + 1):
            out.append(-inv0 * sum(self.coeffs[i] * out[t - i] for i in range(1, t + 1)))
        return TruncatedPowerSeries(out)

    def derivative(self):
        """d/dz; loses one order."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        return TruncatedPowerSeries(
            [(i + 1) * self.coeffs[i + 1] for i in range(self.order)]
        )

    def antiderivative(self):
        """Antiderivative with constant term 0; gains one order."""
        return TruncatedPowerSeries(
            [Fraction(0)] + [self.coeffs[i] / (i + 1) for i in range(self.order + 1)]
        )

    def shift_down(self):
        """self / z; requires a zero constant term, loses one order."""
        if self.coeffs[0] != 0:
            raise ValueError("cannot divide by z: nonzero constant term")
        if self.order == 0:
            raise ValueError("cannot shift down an order-0 truncation")
        return TruncatedPowerSeries(self.coeffs[1:])

    def times_z(self):
        """z * self; gains one order."""
        return TruncatedPowerSeries((Fraction(0),) + self.coeffs)

    def __repr__(self):
        return f"TruncatedPowerSeries({[str(c) for c in self.coeffs]})"

    def __eq__(self, other):
        if isinstance(other, TruncatedPowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)


def km_tree_series(k, m, order):
    """The series C with C = (1 + z*C^m)^k through the given order.

    Solved by fixed-point iteration from C = 1; coefficient j is stable
    after j rounds, so order+1 rounds pin everything.  Coefficient n is
    the (k,m)-Catalan number of order n.
    """
    if k < 1 or m < 1:
        raise ValueError("k and m must be >= 1")
    current = TruncatedPowerSeries.constant(1, order)
    for _ in range(order + 1):
        current = (1 + (current ** m).times_z().truncate(order)) ** k
    return current


def km_branch_series(k, m, order):
    """The branch series B = z*C^m, solved directly from B = z*(1+B)^(mk).

    Its coefficient 1 is always 1, and Lagrange inversion of this equation
    is what yields the closed form binom((mn+1)k, n)/(mn+1) for the tree
    series coefficients.
    """
    if k < 1 or m < 1:
        raise ValueError("k and m must be >= 1")
    b = TruncatedPowerSeries.constant(0, order)
    for _ in range(order + 1):
        b = ((1 + b) ** (m * k)).times_z().truncate(order)
    return b


def km_tree_series_lagrange(k, m, order):
    """The tree series recovered through the branch substitution:
    C = (1+B)^k with B from :func:`km_branch_series`."""
    return (1 + km_branch_series(k, m, order)) ** k


def verify_k2_ode(k, order):
    """Check the differential identity tying the (k,2) series to its recurrence.

    With C the (k,2) tree series and D its antiderivative, both of these
    must hold exactly:

        (C-1)/z = (2k-1)*C^2 + (1-k)*C*(D/z)        (through order-1)
        (1-k)*D = -(2k-1)*z*C - 1/C + alpha          (through order)

    where alpha is pinned to 1 by evaluating the integrated form at z=0.
    """
    series = km_tree_series(k, 2, order)
    anti = series.antiderivative()

    lhs = (series - 1).shift_down()
    rhs = (2 * k - 1) * series * series + (1 - k) * (series * anti.shift_down())
    quotient_form = lhs.agrees_with(rhs, through=order - 1)

    recip = series.reciprocal()
    z_series = series.times_z()
    alpha = (1 - k) * anti[0] + (2 * k - 1) * z_series[0] + recip[0]
    integrated = ((1 - k) * anti).agrees_with(
        -(2 * k - 1) * z_series - recip + alpha, through=order
    )
    return quotient_form and integrated and alpha == 1


def series_matches_counts(k, m, order):
    """True iff coefficient n of the solved series is C_{k,m}(n) for n <= order."""
    series = km_tree_series(k, m, order)
    return all(
        series[n] == counting.catalan_km(k, m, n) for n in range(order + 1)
    )
