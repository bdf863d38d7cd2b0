"""
Subspaces of V_C = C^n (and of V = Q^n) in orthonormal coordinates.

A ``Subspace`` stores the reduced row echelon basis of its span, so equal
subspaces compare equal structurally. Orthogonality always refers to the
symmetric bilinear form (x|y) = sum x_i y_i, never the Hermitian one; for
complex subspaces W and W^⊥ may therefore overlap.
"""

from .clifford import DimensionError, Multivector, vector
from .linalg import EchelonBasis, nullspace
from .scalar import GaussianRational, ZERO, gr

__all__ = [
    "Subspace",
    "RaggedInputError",
    "NotRealError",
    "span",
    "orthogonal_complement",
    "intersect",
    "subspace_sum",
    "member",
    "conj_subspace",
    "orthogonal_projection_onto",
    "orthogonalize",
    "dot",
]


class RaggedInputError(ValueError):
    """Coordinate rows of unequal length."""


class NotRealError(ValueError):
    """A real subspace or vector was required."""


def _row_to_dict(row):
    return {i: c for i, c in enumerate(row) if c}


def _dict_to_row(d, n):
    return tuple(d.get(i, ZERO) for i in range(n))


def _as_row(v):
    if isinstance(v, Multivector):
        return tuple(v.vector_coords())
    return tuple(gr(c) for c in v)


class Subspace:
    """A subspace of C^n in canonical (RREF) form."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, basis):
        # basis must already be canonical; use ``span`` to build one
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(%d, %s)" % (self.ambient_dim, self.to_literal())

    def is_real(self):
        return all(not c.im for row in self.basis for c in row)

    def vectors(self):
        """Basis as degree-1 multivectors."""
        return [vector(row) for row in self.basis]

    def to_literal(self):
        return [[str(c) for c in row] for row in self.basis]

    @classmethod
    def from_literal(cls, rows, n=None):
        """Build from nested lists of exact-scalar strings."""
        return span([[GaussianRational.parse(c) if isinstance(c, str) else gr(c) for c in r] for r in rows], n)

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def full(cls, n):
        return span([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def coordinate(cls, n, indices):
        """span{e_i : i in indices}, 1-based."""
        return span([[1 if j + 1 == i else 0 for j in range(n)] for i in indices], n)

    def __contains__(self, v):
        return member(v, self)


def span(vectors, n=None):
    rows = [_as_row(v) for v in vectors]
    if n is None:
        if not rows:
            raise ValueError("ambient dimension needed for an empty span")
        n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise RaggedInputError("row of length %d in ambient dimension %d" % (len(r), n))
    eb = EchelonBasis()
    for r in rows:
        eb.add(_row_to_dict(r))
    return Subspace(n, [_dict_to_row(d, n) for d in eb.basis()])


def _check(x, y):
    if x.ambient_dim != y.ambient_dim:
        raise DimensionError("ambient dimension mismatch: %d vs %d" % (x.ambient_dim, y.ambient_dim))


def orthogonal_complement(w):
    """W^⊥ for the bilinear form: the kernel of W's basis matrix."""
    n = w.ambient_dim
    ker = nullspace([_row_to_dict(r) for r in w.basis], n)
    return span([_dict_to_row(d, n) for d in ker], n)


def subspace_sum(x, y):
    _check(x, y)
    return span(list(x.basis) + list(y.basis), x.ambient_dim)


def intersect(x, y):
    """X ∩ Y from the relations between the two stacked bases."""
    _check(x, y)
    n = x.ambient_dim
    eb = EchelonBasis(track=True)
    for i, r in enumerate(x.basis):
        eb.add(_row_to_dict(r), ("x", i))
    common = []
    for j, r in enumerate(y.basis):
        dep = eb.add(_row_to_dict(r), ("y", j))
        if dep is None:
            continue
        vec = [ZERO] * n
        for (side, i), c in dep.items():
            if side == "x":
                vec = [a + c * b for a, b in zip(vec, x.basis[i])]
        common.append(vec)
    return span(common, n)


def member(v, w):
    row = _as_row(v)
    if len(row) != w.ambient_dim:
        raise DimensionError("vector of length %d in ambient dimension %d" % (len(row), w.ambient_dim))
    eb = EchelonBasis()
    for r in w.basis:
        eb.add(_row_to_dict(r))
    return eb.contains(_row_to_dict(row))


def conj_subspace(w):
    return span([[c.conj() for c in r] for r in w.basis], w.ambient_dim)


def dot(x, y):
    total = ZERO
    for a, b in zip(x, y):
        if a and b:
            total = total + a * b
    return total


def _require_real_rows(rows):
    for r in rows:
        if any(c.im for c in r):
            raise NotRealError("complex coordinates in %s" % [str(c) for c in r])


def orthogonalize(x):
    """Gram-Schmidt without normalization.

    ``x`` is a real ``Subspace`` (its echelon basis is used) or a sequence of
    real coordinate rows (used in the given order; dependent rows are dropped).
    Returns pairwise orthogonal rows with positive self-pairing.
    """
    rows = list(x.basis) if isinstance(x, Subspace) else [_as_row(r) for r in x]
    _require_real_rows(rows)
    out = []
    norms = []
    for v in rows:
        u = list(v)
        for q, qq in zip(out, norms):
            c = dot(q, v) / qq
            if c:
                u = [a - c * b for a, b in zip(u, q)]
        uu = dot(u, u)
        if uu:
            out.append(tuple(u))
            norms.append(uu)
    return out


def orthogonal_projection_onto(n_space, x_space):
    """Span of the orthogonal projections of N's basis onto X (both real)."""
    _check(n_space, x_space)
    _require_real_rows(n_space.basis)
    ortho = orthogonalize(x_space)
    projected = []
    for v in n_space.basis:
        p = [ZERO] * n_space.ambient_dim
        for q in ortho:
            c = dot(q, v) / dot(q, q)
            if c:
                p = [a + c * b for a, b in zip(p, q)]
        projected.append(p)
    return span(projected, n_space.ambient_dim)
