"""Truncated formal power series with exact rational coefficients.

A series carries coefficients for q^0 .. q^N and nothing beyond; arithmetic
truncates to the smaller order of its operands and never extends precision.
"""

from fractions import Fraction


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = cs[: order + 1]
            cs += [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least the constant term")
        self.coeffs = tuple(cs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 7 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    def truncate(self, order):
        return TruncatedSeries(self.coeffs, order)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            out.append(sum(a[j] * b[k - j] for j in range(k + 1)))
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        return TruncatedSeries([c * x for x in self.coeffs])

    def weighted(self):
        """Coefficientwise n * c(n); the series of n-weighted coefficients."""
        return TruncatedSeries([n * c for n, c in enumerate(self.coeffs)])

    def power(self, r):
        """Rational power of a unit-constant series by the classical recurrence.

        Requires c(0) = 1.  Uses n*B(n) = sum_{j=1..n} ((r+1)j - n) a(j) B(n-j)
        with B(0) = 1, which agrees with repeated multiplication for integer
        r >= 0 and with the reciprocal for r = -1.
        """
        if self.coeffs[0] != 1:
            raise ValueError("power requires constant term 1")
        r = Fraction(r)
        a = self.coeffs
        N = self.order
        out = [Fraction(1)]
        for n in range(1, N + 1):
            total = Fraction(0)
            for j in range(1, n + 1):
                if a[j]:
                    total += ((r + 1) * j - n) * a[j] * out[n - j]
            out.append(total / n)
        return TruncatedSeries(out)


def one(order):
    return TruncatedSeries([1], order)


def monomial(c, k, order):
    """c * q^k, truncated at the given order."""
    coeffs = [Fraction(0)] * (order + 1)
    if k <= order:
        coeffs[k] = Fraction(c)
    return TruncatedSeries(coeffs)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def weighted(a):
    return a.weighted()


def power_rational(a, r):
    return a.power(r)
