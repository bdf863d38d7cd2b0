"""
The complex Clifford algebra C(V_C) of an n-dimensional real inner product
space with orthonormal basis e1..en.

A basis blade e_K = e_k1 e_k2 ... e_kr (k1 < ... < kr) is encoded as the
bitmask with bits k1-1, ..., kr-1 set; the empty mask is the unit. A
``Multivector`` is a sparse map from masks to Gaussian rationals with no
stored zeros, so two multivectors are equal exactly when their maps are.
"""

import re
from functools import lru_cache

from .scalar import GaussianRational, ParseError, gr, ZERO, ONE, _make, _Q0

__all__ = [
    "DimensionError",
    "NotAVectorError",
    "Multivector",
    "blade_product",
    "blade_sign",
    "blade_name",
    "grade",
    "mul",
    "gamma",
    "star",
    "bar",
    "trace",
    "trace_inner",
    "vector",
    "bilinear_form",
    "hermitian_form",
]


class DimensionError(ValueError):
    """Operands live in Clifford algebras of different ambient dimension."""


class NotAVectorError(ValueError):
    """A degree-1 element was required."""


def grade(mask):
    return mask.bit_count()


@lru_cache(maxsize=None)
def blade_sign(x, y):
    """Sign of the product of blades ``x`` and ``y`` (both bitmasks).

    Each generator of ``y`` is moved left past the generators of ``x`` with a
    larger index; equal generators then contract to +1.
    """
    t = 0
    running = x
    while y:
        low = y & -y
        j = low.bit_length() - 1
        t += (running >> (j + 1)).bit_count()
        running ^= low
        y ^= low
    return -1 if t & 1 else 1


def blade_product(x, y):
    """Return ``(sign, mask)`` with e_x e_y = sign * e_(x XOR y)."""
    return blade_sign(x, y), x ^ y


def _reverse_sign(mask):
    k = mask.bit_count()
    return -1 if (k * (k - 1) // 2) & 1 else 1


def blade_name(mask):
    if not mask:
        return "1"
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append("e%d" % i)
        mask >>= 1
        i += 1
    return "".join(out)


_TERM_RE = re.compile(r"\(([^()]*)\)\*(1|(?:e\d+)+)")


def _parse_blade(text, dim):
    if text == "1":
        return 0
    idx = [int(k) for k in text.split("e")[1:]]
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ParseError("blade %r is not in increasing index order" % text)
    mask = 0
    for k in idx:
        if not 1 <= k <= dim:
            raise ParseError("blade %r out of range for dimension %d" % (text, dim))
        mask |= 1 << (k - 1)
    return mask


class Multivector:
    """An element of C(V_C) for ``dim``-dimensional V.

    ``terms`` maps blade masks to coefficients; zero coefficients are dropped.
    Instances are treated as immutable.
    """

    __slots__ = ("dim", "terms", "_hash")

    def __init__(self, dim, terms=None):
        if dim < 0:
            raise ValueError("negative dimension")
        clean = {}
        limit = 1 << dim
        for mask, c in (terms or {}).items():
            if not 0 <= mask < limit:
                raise DimensionError("blade mask %d out of range for dim %d" % (mask, dim))
            c = gr(c)
            if c:
                clean[mask] = c
        self.dim = dim
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, dim, terms):
        # terms must already be zero-free GaussianRational values
        mv = object.__new__(cls)
        mv.dim = dim
        mv.terms = terms
        mv._hash = None
        return mv

    # ---- constructors ----

    @classmethod
    def zero(cls, dim):
        return cls._raw(dim, {})

    @classmethod
    def scalar(cls, dim, value=1):
        value = gr(value)
        return cls._raw(dim, {0: value} if value else {})

    @classmethod
    def blade(cls, dim, mask, coeff=1):
        return cls(dim, {mask: coeff})

    @classmethod
    def basis_vector(cls, dim, i):
        """The generator e_i, 1-based."""
        if not 1 <= i <= dim:
            raise DimensionError("e%d does not exist in dimension %d" % (i, dim))
        return cls._raw(dim, {1 << (i - 1): ONE})

    # ---- structure ----

    def items(self):
        """(mask, coefficient) pairs in increasing mask order."""
        return sorted(self.terms.items())

    def coefficient(self, mask):
        return self.terms.get(mask, ZERO)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_real(self):
        return all(not c.im for c in self.terms.values())

    def is_even(self):
        return all(not m.bit_count() & 1 for m in self.terms)

    def is_odd(self):
        return all(m.bit_count() & 1 for m in self.terms)

    def is_vector(self):
        return all(m.bit_count() == 1 for m in self.terms)

    def even(self):
        return Multivector._raw(self.dim, {m: c for m, c in self.terms.items() if not m.bit_count() & 1})

    def odd(self):
        return Multivector._raw(self.dim, {m: c for m, c in self.terms.items() if m.bit_count() & 1})

    def grade_part(self, k):
        return Multivector._raw(self.dim, {m: c for m, c in self.terms.items() if m.bit_count() == k})

    def vector_coords(self):
        """Coordinates of a degree-1 element as a list of length ``dim``."""
        if not self.is_vector():
            raise NotAVectorError("%s is not a vector" % self)
        return [self.terms.get(1 << i, ZERO) for i in range(self.dim)]

    def support(self):
        m = 0
        for k in self.terms:
            m |= k
        return m

    # ---- arithmetic ----

    def _check(self, other):
        if self.dim != other.dim:
            raise DimensionError("dimension mismatch: %d vs %d" % (self.dim, other.dim))

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return self + Multivector.scalar(self.dim, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Multivector._raw(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.dim, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = gr(c)
        if not c:
            return Multivector._raw(self.dim, {})
        return Multivector._raw(self.dim, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mul(self, other)
        try:
            return self.scale(other)
        except (TypeError, ParseError):
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except (TypeError, ParseError):
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(gr(other).inv())

    # ---- comparison and text ----

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.dim == other.dim and self.terms == other.terms
        if isinstance(other, (int, GaussianRational)):
            return self == Multivector.scalar(self.dim, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join("(%s)*%s" % (c, blade_name(m)) for m, c in self.items())

    def __repr__(self):
        return "Multivector(%d, %r)" % (self.dim, str(self))

    @classmethod
    def parse(cls, text, dim):
        """Inverse of ``str``: ``"(1/2)*1 + (0+1i)*e1e3"`` or ``"0"``."""
        text = text.strip()
        if text == "0":
            return cls.zero(dim)
        terms = {}
        pos = 0
        first = True
        while pos < len(text):
            if not first:
                if not text.startswith(" + ", pos):
                    raise ParseError("expected ' + ' at offset %d in %r" % (pos, text))
                pos += 3
            m = _TERM_RE.match(text, pos)
            if m is None:
                raise ParseError("malformed term at offset %d in %r" % (pos, text))
            mask = _parse_blade(m.group(2), dim)
            if mask in terms:
                raise ParseError("repeated blade %s" % m.group(2))
            terms[mask] = GaussianRational.parse(m.group(1))
            pos = m.end()
            first = False
        return cls(dim, terms)


def mul(a, b):
    """Clifford product, the bilinear extension of ``blade_product``."""
    if a.dim != b.dim:
        raise DimensionError("dimension mismatch: %d vs %d" % (a.dim, b.dim))
    # accumulate [re, im] pairs and build one scalar per output blade
    acc = {}
    get = acc.get
    bterms = [(m2, c2.re, c2.im) for m2, c2 in b.terms.items()]
    for m1, c1 in a.terms.items():
        p, q = c1.re, c1.im
        for m2, r, s in bterms:
            if q or s:
                re_ = p * r - q * s
                im_ = p * s + q * r
            else:
                re_ = p * r
                im_ = None
            if blade_sign(m1, m2) < 0:
                re_ = -re_
                if im_ is not None:
                    im_ = -im_
            m = m1 ^ m2
            slot = get(m)
            if slot is None:
                acc[m] = [re_, im_ or _Q0]
            else:
                slot[0] += re_
                if im_ is not None:
                    slot[1] += im_
    return Multivector._raw(a.dim, {m: _make(r, i) for m, (r, i) in acc.items() if r or i})


def gamma(a):
    """Grading automorphism: negate odd-degree blades."""
    return Multivector._raw(a.dim, {m: (-c if m.bit_count() & 1 else c) for m, c in a.terms.items()})


def star(a):
    """The *-involution: conjugate coefficients and reverse each blade."""
    return Multivector._raw(
        a.dim, {m: (c.conj() if _reverse_sign(m) > 0 else -c.conj()) for m, c in a.terms.items()}
    )


def bar(a):
    """Complex conjugation fixing the real algebra C(V)."""
    return Multivector._raw(a.dim, {m: c.conj() for m, c in a.terms.items()})


def trace(a):
    return a.terms.get(0, ZERO)


def scalar_part_of_product(a, b):
    """tau(a b) without forming the full product; only equal blades meet at 1."""
    if a.dim != b.dim:
        raise DimensionError("dimension mismatch: %d vs %d" % (a.dim, b.dim))
    if len(b.terms) < len(a.terms):
        small, large = b.terms, a.terms
    else:
        small, large = a.terms, b.terms
    total = ZERO
    for m, c in small.items():
        d = large.get(m)
        if d is None:
            continue
        t = c * d
        if blade_sign(m, m) < 0:
            t = -t
        total = total + t
    return total


def trace_inner(a, b):
    """<a|b>_tau = tau(a* b), conjugate-linear in ``a``."""
    return scalar_part_of_product(star(a), b)


def vector(coords):
    """The degree-1 element sum c_i e_i; ``len(coords)`` is the dimension."""
    coords = [gr(c) for c in coords]
    return Multivector._raw(len(coords), {1 << i: c for i, c in enumerate(coords) if c})


def _coords(x):
    if isinstance(x, Multivector):
        return x.vector_coords()
    return [gr(c) for c in x]


def bilinear_form(x, y):
    """(x|y) = sum x_i y_i, with no conjugation."""
    xs, ys = _coords(x), _coords(y)
    if len(xs) != len(ys):
        raise DimensionError("dimension mismatch: %d vs %d" % (len(xs), len(ys)))
    total = ZERO
    for p, q in zip(xs, ys):
        if p and q:
            total = total + p * q
    return total


def hermitian_form(x, y):
    """<x|y> = (bar x | y); positive definite."""
    xs = [c.conj() for c in _coords(x)]
    return bilinear_form(xs, y)
