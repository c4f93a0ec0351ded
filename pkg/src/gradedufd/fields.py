"""Exact ground fields: the rationals and prime fields F_p.

Elements are plain Python values (Fraction over Q, int in [0, p) over F_p);
the Field object supplies the operations.  No floating point anywhere.
"""

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """The rationals (p=None) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None and not _is_prime(p):
            raise FieldError("modulus %r is not prime" % (p,))
        self.p = p

    @property
    def characteristic(self):
        return 0 if self.p is None else self.p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if self.p is None else "Field(F%d)" % self.p

    def name(self):
        return "Q" if self.p is None else "F%d" % self.p

    # -- element constructors -------------------------------------------

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def from_int(self, n):
        return Fraction(n) if self.p is None else n % self.p

    def from_fraction(self, num, den=1):
        """num/den as a field element; den must be invertible."""
        if self.p is None:
            if den == 0:
                raise FieldError("zero denominator")
            return Fraction(num, den)
        d = den % self.p
        if d == 0:
            raise FieldError("denominator %d is zero mod %d" % (den, self.p))
        return (num * self.inv(d)) % self.p

    # -- arithmetic -----------------------------------------------------

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise FieldError("division by zero")
        if self.p is None:
            return Fraction(1) / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    # -- iteration and formatting --------------------------------------

    def elements(self):
        """All field elements; only available for finite fields."""
        if self.p is None:
            raise FieldError("Q is infinite")
        return range(self.p)

    def to_str(self, a):
        if self.p is None:
            return str(a)  # Fraction prints as "n" or "n/d"
        return str(a % self.p)


def field_from_name(name):
    """Parse 'Q' or 'F<p>' into a Field."""
    name = name.strip()
    if name == "Q":
        return Field()
    if name.startswith("F") and name[1:].isdigit():
        return Field(int(name[1:]))
    raise FieldError("unknown field %r (expected 'Q' or 'F<p>')" % name)
