"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


class TruncatedSeries:
    """A series prefix c_0 + c_1 z + ... + c_D z^D; exactly D+1 coefficients."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs, trunc=None):
        coeffs = [Fraction(c) for c in coeffs]
        if trunc is None:
            trunc = len(coeffs) - 1
        if trunc < 0:
            raise InputError("truncation degree must be >= 0")
        if len(coeffs) < trunc + 1:
            coeffs = coeffs + [Fraction(0)] * (trunc + 1 - len(coeffs))
        self.coeffs = coeffs[: trunc + 1]
        self.trunc = trunc

    @classmethod
    def one(cls, trunc):
        return cls([1], trunc)

    @classmethod
    def zero(cls, trunc):
        return cls([0], trunc)

    @classmethod
    def from_polynomial(cls, coeffs, trunc):
        return cls(list(coeffs), trunc)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.trunc == other.trunc and self.coeffs == other.coeffs)

    def __getitem__(self, d):
        return self.coeffs[d]

    def truncate(self, trunc):
        return TruncatedSeries(self.coeffs[: trunc + 1], trunc)

    def add(self, other):
        D = min(self.trunc, other.trunc)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(D + 1)], D)

    def sub(self, other):
        D = min(self.trunc, other.trunc)
        return TruncatedSeries([self.coeffs[i] - other.coeffs[i] for i in range(D + 1)], D)

    def scale(self, c):
        c = Fraction(c)
        return TruncatedSeries([c * v for v in self.coeffs], self.trunc)

    def mul(self, other):
        D = min(self.trunc, other.trunc)
        out = [Fraction(0)] * (D + 1)
        for i, a in enumerate(self.coeffs[: D + 1]):
            if not a:
                continue
            for j in range(D + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out, D)

    def inverse(self):
        """Multiplicative inverse; rejects series with zero constant term."""
        if not self.coeffs[0]:
            raise InputError("series with zero constant term is not invertible")
        D = self.trunc
        inv0 = 1 / self.coeffs[0]
        out = [inv0]
        for k in range(1, D + 1):
            s = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    s += self.coeffs[i] * out[k - i]
            out.append(-inv0 * s)
        return TruncatedSeries(out, D)

    def sign_alternate(self):
        """Substitute z -> -z."""
        return TruncatedSeries([c if i % 2 == 0 else -c
                                for i, c in enumerate(self.coeffs)], self.trunc)

    def as_ints(self):
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise InputError("series has non-integer coefficients")
            out.append(c.numerator)
        return out

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        if self.trunc >= 8:
            shown += ", ..."
        return f"TruncatedSeries([{shown}]; D={self.trunc})"


def expand_rational(numer, denom, trunc):
    """Prefix of numer(z)/denom(z) as a TruncatedSeries; denom(0) must be nonzero."""
    num = TruncatedSeries(list(numer), trunc)
    den = TruncatedSeries(list(denom), trunc)
    return num.mul(den.inverse())


def geometric_power(exponent, trunc, sign=1):
    """Prefix of 1/(1 - sign*z)^exponent."""
    coeffs = [Fraction(1)]
    for d in range(1, trunc + 1):
        # C(exponent+d-1, d)
        c = coeffs[-1] * Fraction(exponent + d - 1, d)
        coeffs.append(c)
    if sign == -1:
        coeffs = [c if i % 2 == 0 else -c for i, c in enumerate(coeffs)]
    return TruncatedSeries(coeffs, trunc)
