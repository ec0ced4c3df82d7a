"""Coefficient fields: the rationals (default) and prime fields.

All matrix coefficients in the engine live in one of these fields.  Rational
elements are `fractions.Fraction`; prime-field elements are ints in [0, p).
The field object carries the arithmetic so that the linear algebra and the
matrix calculus stay field-generic.
"""

from fractions import Fraction


class Rationals:
    """The field of rational numbers, with Fraction elements."""

    name = "q"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def of_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def parse(self, s):
        return Fraction(s)

    def format(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")


class PrimeField:
    """The field Z/p for a prime p, with int elements in [0, p)."""

    characteristic = None  # set per instance

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"not a prime: {p}")
        self.p = p
        self.name = f"p{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def of_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def parse(self, s):
        f = Fraction(s)
        return self.mul(self.of_int(f.numerator), self.inv(self.of_int(f.denominator)))

    def format(self, a):
        return str(a % self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


QQ = Rationals()


def field_from_spec(spec):
    """Parse a field spec string: 'q' for the rationals, 'p<prime>' for Z/p."""
    if spec == "q":
        return QQ
    if spec.startswith("p") and spec[1:].isdigit():
        return PrimeField(int(spec[1:]))
    raise ValueError(f"bad field spec {spec!r}; want 'q' or 'p<prime>'")
