"""Exact coefficient arithmetic: arbitrary-precision rationals and word-size prime fields.

Field objects carry the operations; elements themselves are plain values
(`fractions.Fraction` for Q, ints in [0, p) for F_p), which keeps the inner
loops of elimination and reduction cheap.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


class RationalField:
    """The rationals.  Fraction keeps lowest terms and a positive denominator."""

    characteristic = 0
    name = "q"

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, num, den=1):
        return Fraction(num, den)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def is_zero(self, a):
        return not a

    def format(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(("field", "q"))

    def __repr__(self):
        return "QQ"


QQ = RationalField()

_WORD_MAX = 2**63 - 1


def is_prime(p):
    """Deterministic Miller-Rabin, valid for all word-size integers."""
    if p < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % small == 0:
            return p == small
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """F_p for a word-size prime p; elements are ints reduced into [0, p)."""

    characteristic = None  # set per instance

    def __init__(self, p):
        if not isinstance(p, int) or not 2 <= p <= _WORD_MAX:
            raise InputError(f"prime field modulus must be a word-size integer, got {p!r}")
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"fp:{p}"
        self.zero = 0
        self.one = 1 % p

    def of(self, num, den=1):
        d = den % self.p
        if d == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        return num * pow(d, -1, self.p) % self.p

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            return self.of(value.numerator, value.denominator)
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def format(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("field", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def parse_field(text):
    """Parse a field descriptor: ``q`` or ``fp:<prime>``."""
    text = text.strip().lower()
    if text == "q":
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise InputError(f"bad prime field descriptor {text!r}") from None
        return PrimeField(p)
    raise InputError(f"unknown field {text!r} (expected 'q' or 'fp:<p>')")
