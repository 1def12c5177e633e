"""Exact scalars: Gaussian rationals a + b*i with rational a, b.

The imaginary unit doubles as the fixed primitive fourth root of unity
used throughout the representation theory, so inverses and powers stay
in this field. Values are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction


class GaussianRational:
    """a + b*i with a, b rational, i**2 = -1."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def zeta_power(k: int) -> "GaussianRational":
        """i**k for any integer k."""
        k %= 4
        if k == 0:
            return ONE
        if k == 1:
            return ZETA
        if k == 2:
            return MINUS_ONE
        return MINUS_ZETA

    # -- predicates --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_rational(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def is_unit(self) -> bool:
        """True for 1, -1, i, -i (the allowed monomial coefficients)."""
        return (self.re, self.im) in _UNITS

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other).__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- comparison / hashing ----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- formatting ---------------------------------------------------

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_coefficient(self)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


def format_coefficient(c: GaussianRational) -> str:
    """Canonical text for a coefficient: 'p/q', 'p/q*i' or 'p/q+r/s*i'."""
    if c.is_zero():
        return "0"
    re_s = _frac_str(c.re)
    im_s = _frac_str(c.im) + "*i"
    if not c.im:
        return re_s
    if not c.re:
        return im_s
    joiner = "+" if c.im > 0 else ""
    return re_s + joiner + im_s


def parse_coefficient(text: str) -> GaussianRational:
    """Inverse of format_coefficient."""
    text = text.strip()
    if text.endswith("*i"):
        # split an optional real part: 'a+b*i' / 'a-b*i' / 'b*i'
        body = text[:-2]
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "+-/*":
                re_part = body[:k]
                im_part = body[k:] if body[k] == "-" else body[k + 1 :]
                return GaussianRational(Fraction(re_part), Fraction(im_part))
        return GaussianRational(0, Fraction(body))
    return GaussianRational(Fraction(text))


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
MINUS_ONE = GaussianRational(-1)
ZETA = GaussianRational(0, 1)
MINUS_ZETA = GaussianRational(0, -1)
HALF = GaussianRational(Fraction(1, 2))

_UNITS = {
    (Fraction(1), Fraction(0)),
    (Fraction(-1), Fraction(0)),
    (Fraction(0), Fraction(1)),
    (Fraction(0), Fraction(-1)),
}
