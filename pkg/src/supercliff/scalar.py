"""
Exact scalars: rationals and Gaussian rationals Q(i).

Rationals are gmpy2 ``mpq`` values, which are always stored in lowest terms
with a positive denominator. ``GaussianRational`` pairs two of them and is
immutable, hashable and canonical, so ``==`` on two values is exact
mathematical equality.

Textual form::

    >>> GaussianRational.parse("1/2-1/3 i")
    GaussianRational('1/2-1/3i')
    >>> str(GaussianRational(0, 1))
    '0+1i'
    >>> str(GaussianRational.parse("3/1"))
    '3'
"""

import re

from gmpy2 import mpq

__all__ = ["Rational", "GaussianRational", "ParseError", "gr", "ZERO", "ONE", "I"]

Rational = mpq

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class ParseError(ValueError):
    """Malformed exact-scalar literal."""


def parse_rational(text):
    text = text.strip().replace(" ", "")
    if not _RATIONAL_RE.match(text):
        raise ParseError("malformed rational %r" % text)
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise ParseError("zero denominator in %r" % text)
        return mpq(int(p), int(q))
    return mpq(int(text))


def format_rational(q):
    # mpq prints integers without a denominator
    return str(q)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, complex):
        raise TypeError("floating point complex values are not exact")
    if isinstance(x, float):
        raise TypeError("floating point values are not exact")
    return _make(mpq(x), _Q0)


def _make(re_, im_):
    z = object.__new__(GaussianRational)
    object.__setattr__(z, "re", re_)
    object.__setattr__(z, "im", im_)
    return z


_Q0 = mpq(0)
_Q1 = mpq(1)


class GaussianRational:
    """An exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, (float, complex)) or isinstance(im, (float, complex)):
            raise TypeError("floating point values are not exact")
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    # ---- arithmetic ----

    def __add__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return _make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return _make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return _make(a * c, _Q0)
        return _make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inv()

    def __neg__(self):
        return _make(-self.re, -self.im)

    def __pos__(self):
        return self

    def inv(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return _make(self.re / n, -self.im / n)

    def conj(self):
        return _make(self.re, -self.im)

    def abs2(self):
        """Squared modulus, a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self):
        return not self.im

    def is_zero(self):
        return not self.re and not self.im

    # ---- comparison ----

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(_Q0))):
            return self.re == other and not self.im
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # ---- text ----

    def __str__(self):
        if not self.im:
            return format_rational(self.re)
        sign = "+" if self.im > 0 else "-"
        return "%s%s%si" % (format_rational(self.re), sign, format_rational(abs(self.im)))

    def __repr__(self):
        return "GaussianRational(%r)" % str(self)

    @classmethod
    def parse(cls, text):
        """Parse ``"p/q"``, ``"p/q+r/s i"``, ``"-r/s i"``, ``"3"``, ``"i"`` ..."""
        if not isinstance(text, str):
            raise ParseError("expected a string, got %r" % (text,))
        s = "".join(text.split())
        if not s:
            raise ParseError("empty scalar literal")
        if not s.endswith("i"):
            return _make(parse_rational(s), _Q0)
        body = s[:-1]
        # the imaginary part starts at the last sign that is not leading
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            real_text, imag_text = body[:cut], body[cut:]
        else:
            real_text, imag_text = "", body
        if imag_text in ("", "+", "-"):
            imag_text += "1"
        real = parse_rational(real_text) if real_text else _Q0
        if real_text and imag_text[0] not in "+-":
            raise ParseError("malformed scalar %r" % text)
        return _make(real, parse_rational(imag_text))


def gr(x, im=0):
    """Coerce ints, rationals, strings or Gaussian rationals to ``GaussianRational``."""
    if isinstance(x, GaussianRational):
        if im:
            return x + GaussianRational(0, im)
        return x
    if isinstance(x, str):
        return GaussianRational.parse(x)
    return GaussianRational(x, im)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
