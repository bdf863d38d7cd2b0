"""
Clifford subalgebras C(Z) and supercommutants C(W)' as exact linear
subspaces of the 2^n-dimensional algebra C(V_C).

The supercommutant of C(W) is the set of ``a`` with ``w a = gamma(a) w`` for
every ``w`` in W; it is computed as the kernel of that linear system in the
blade coefficients of ``a``. Twisted duality says it coincides with C(W^⊥).
"""

from dataclasses import dataclass

from .clifford import DimensionError, Multivector, gamma, mul, vector, bilinear_form
from .linalg import EchelonBasis, nullspace, solve, intersect_spans
from .report import CheckResult
from .scalar import ONE, gr
from .subspace import Subspace, intersect, orthogonal_complement, span

__all__ = [
    "AlgebraSubspace",
    "HyperplaneSplit",
    "DimensionCapError",
    "DEFAULT_MAX_DIM",
    "HARD_MAX_DIM",
    "subalgebra_span",
    "subalgebra_span_from",
    "supercommutant",
    "supercommutant_from",
    "supercommutant_by_intersections",
    "supercentre",
    "intersect_algebra",
    "hyperplane_decompose",
    "hyperplane_decompose_by_solve",
    "verify_twisted_duality",
    "verify_intersection_theorem",
    "verify_hyperplane",
    "verify_supercentre",
]

DEFAULT_MAX_DIM = 10
HARD_MAX_DIM = 14


class DimensionCapError(ValueError):
    """Ambient dimension above the configured cap."""


def check_dim(n, max_dim=DEFAULT_MAX_DIM):
    if max_dim > HARD_MAX_DIM:
        raise DimensionCapError("cap %d exceeds the hard limit %d" % (max_dim, HARD_MAX_DIM))
    if not 0 <= n <= max_dim:
        raise DimensionCapError("ambient dimension %d outside 0..%d" % (n, max_dim))


class AlgebraSubspace:
    """A linear subspace of C(V_C), stored as its echelon basis over blades.

    Columns are blade masks in increasing order, so the basis is canonical and
    ``==`` is equality of subspaces.
    """

    __slots__ = ("ambient_dim", "basis", "_echelon")

    def __init__(self, ambient_dim, basis):
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self._echelon = None

    @classmethod
    def span(cls, dim, elements):
        eb = EchelonBasis()
        for a in elements:
            if a.dim != dim:
                raise DimensionError("element of dimension %d in C(V) of dimension %d" % (a.dim, dim))
            eb.add(a.terms)
        return cls._from_rows(dim, eb.basis())

    @classmethod
    def _from_rows(cls, dim, rows):
        return cls(dim, [Multivector._raw(dim, dict(r)) for r in rows])

    @classmethod
    def whole(cls, dim):
        return cls(dim, [Multivector.blade(dim, m) for m in range(1 << dim)])

    @property
    def dim(self):
        return len(self.basis)

    def _eb(self):
        if self._echelon is None:
            eb = EchelonBasis()
            for a in self.basis:
                eb.add(a.terms)
            self._echelon = eb
        return self._echelon

    def contains(self, a):
        if a.dim != self.ambient_dim:
            raise DimensionError("dimension mismatch")
        return self._eb().contains(a.terms)

    __contains__ = contains

    def is_graded(self):
        """True when the subspace is the sum of its even and odd parts."""
        return all(self.contains(a.even()) for a in self.basis)

    def even_part(self):
        return AlgebraSubspace.span(self.ambient_dim, [a.even() for a in self.basis if self.contains(a.even())])

    def odd_part(self):
        return AlgebraSubspace.span(self.ambient_dim, [a.odd() for a in self.basis if self.contains(a.odd())])

    def __eq__(self, other):
        if not isinstance(other, AlgebraSubspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "AlgebraSubspace(%d, dim=%d)" % (self.ambient_dim, self.dim)

    def first_missing_from(self, other):
        """A basis element of ``self`` outside ``other``, or ``None``."""
        for a in self.basis:
            if not other.contains(a):
                return a
        return None


class IndependenceError(AssertionError):
    """The ordered generator products failed to be linearly independent."""


def _independent_generators(generators, n):
    eb = EchelonBasis()
    kept = []
    for g in generators:
        v = g if isinstance(g, Multivector) else vector(g)
        if v.dim != n:
            raise DimensionError("generator of dimension %d, expected %d" % (v.dim, n))
        if not v.is_vector():
            raise ValueError("generators must be vectors")
        if eb.add(v.terms) is None:
            kept.append(v)
    return kept


def ordered_products(generators):
    """All products z_K = z_k1 ... z_kr over increasing multi-indices K.

    Indexed by subset bitmask over the generator list; index 0 is the unit.
    """
    k = len(generators)
    dim = generators[0].dim if generators else 0
    prods = [None] * (1 << k)
    prods[0] = Multivector.scalar(dim, 1)
    for s in range(1, 1 << k):
        top = s.bit_length() - 1
        prods[s] = mul(prods[s ^ (1 << top)], generators[top])
    return prods


def subalgebra_span_from(generators, n):
    """C(Z) for Z spanned by ``generators`` (vectors or coordinate rows), built
    from the generators in the given order after dropping dependent ones."""
    gens = _independent_generators(generators, n)
    if not gens:
        return AlgebraSubspace(n, [Multivector.scalar(n, 1)])
    prods = ordered_products(gens)
    result = AlgebraSubspace.span(n, prods)
    if result.dim != len(prods):
        raise IndependenceError(
            "ordered products of %d generators have rank %d, not %d" % (len(gens), result.dim, len(prods))
        )
    return result


def subalgebra_span(z):
    """C(Z) as a subspace of C(V_C); its dimension is 2**dim(Z)."""
    return subalgebra_span_from(z.basis, z.ambient_dim)


def _supercommutant_rows(w, n, row_offset):
    # rows of the map a -> w a - gamma(a) w, indexed by output blade
    rows = {}
    for mask in range(1 << n):
        e = Multivector._raw(n, {mask: ONE})
        image = mul(w, e) - mul(gamma(e), w)
        for out, c in image.terms.items():
            rows.setdefault(row_offset + out, {})[mask] = c
    return rows.values()


def supercommutant_from(generators, n, max_dim=DEFAULT_MAX_DIM):
    """Solution space of ``w_j a = gamma(a) w_j`` for all generators at once."""
    check_dim(n, max_dim)
    gens = _independent_generators(generators, n)
    rows = []
    for j, w in enumerate(gens):
        rows.extend(_supercommutant_rows(w, n, j << n))
    ker = nullspace(rows, 1 << n)
    return AlgebraSubspace.span(n, [Multivector._raw(n, x) for x in ker])


def supercommutant(w, max_dim=DEFAULT_MAX_DIM):
    """C(W)' inside C(V_C) by one combined kernel computation."""
    return supercommutant_from(w.basis, w.ambient_dim, max_dim)


def intersect_algebra(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError("dimension mismatch: %d vs %d" % (a.ambient_dim, b.ambient_dim))
    common = intersect_spans([x.terms for x in a.basis], [y.terms for y in b.basis])
    return AlgebraSubspace.span(a.ambient_dim, [Multivector._raw(a.ambient_dim, d) for d in common])


def supercommutant_by_intersections(w):
    """C(W)' as the intersection of C(w_j^⊥) over a basis w_j of W.

    Independent of ``supercommutant``: only the hyperplane case of duality and
    the intersection of subalgebras are used.
    """
    n = w.ambient_dim
    result = AlgebraSubspace.whole(n)
    for row in w.basis:
        result = intersect_algebra(result, subalgebra_span(orthogonal_complement(span([row], n))))
    return result


def supercentre(n, max_dim=DEFAULT_MAX_DIM):
    return supercommutant(Subspace.full(n), max_dim)


# ---- hyperplane decomposition C(V_C) = C(w^⊥) ⊕ aux C(w^⊥) ----


@dataclass(frozen=True)
class HyperplaneSplit:
    a: Multivector
    b: Multivector


class ZeroVectorError(ValueError):
    pass


def _prepare_split(w, n, aux):
    wrow = [gr(c) for c in (w.vector_coords() if isinstance(w, Multivector) else w)]
    if len(wrow) != n:
        raise DimensionError("vector of length %d in dimension %d" % (len(wrow), n))
    if not any(wrow):
        raise ZeroVectorError("w must be nonzero")
    if aux is None:
        aux_row = [c.conj() for c in wrow]
    else:
        aux_row = [gr(c) for c in (aux.vector_coords() if isinstance(aux, Multivector) else aux)]
    pairing = bilinear_form(wrow, aux_row)
    if not pairing:
        raise ValueError("auxiliary vector lies in w^⊥")
    return wrow, aux_row, pairing


def hyperplane_decompose(c, w, aux=None):
    """Split ``c = a + aux*b`` with a, b in C(w^⊥); ``aux`` defaults to bar(w).

    Works blade by blade, peeling the first factor v0 = u + lam*aux off the
    product and folding it into the split of the remaining factors.
    """
    n = c.dim
    wrow, aux_row, pairing = _prepare_split(w, n, aux)
    aux_sq = bilinear_form(aux_row, aux_row)

    splits = {0: (Multivector.scalar(n, 1), Multivector.zero(n))}

    def split(mask):
        got = splits.get(mask)
        if got is not None:
            return got
        low = mask & -mask
        i = low.bit_length() - 1
        a, b = split(mask ^ low)
        lam = wrow[i] / pairing
        u_row = [-lam * x for x in aux_row]
        u_row[i] = u_row[i] + ONE
        u = vector(u_row)
        cross = bilinear_form(aux_row, u_row)
        big_a = mul(u, a) + b.scale(lam * aux_sq + 2 * cross)
        big_b = a.scale(lam) - mul(u, b)
        splits[mask] = (big_a, big_b)
        return splits[mask]

    a_total = Multivector.zero(n)
    b_total = Multivector.zero(n)
    for mask, coeff in c.items():
        a, b = split(mask)
        a_total = a_total + a.scale(coeff)
        b_total = b_total + b.scale(coeff)
    return HyperplaneSplit(a_total, b_total)


def hyperplane_decompose_by_solve(c, w, aux=None):
    """The same split by a direct linear solve; also returns the rank of the
    combined spanning set (2**n exactly when the sum is direct)."""
    n = c.dim
    wrow, aux_row, _ = _prepare_split(w, n, aux)
    hyper = subalgebra_span(orthogonal_complement(span([wrow], n)))
    aux_vec = vector(aux_row)
    m = hyper.dim
    columns = [p.terms for p in hyper.basis] + [mul(aux_vec, p).terms for p in hyper.basis]
    eb = EchelonBasis()
    for col in columns:
        eb.add(col)
    x = solve(columns, c.terms)
    if x is None:
        raise ArithmeticError("c is not in C(w^⊥) + aux C(w^⊥)")
    a = Multivector.zero(n)
    b = Multivector.zero(n)
    for j, coeff in x.items():
        if j < m:
            a = a + hyper.basis[j].scale(coeff)
        else:
            b = b + hyper.basis[j - m].scale(coeff)
    return HyperplaneSplit(a, b), eb.rank


# ---- verification records ----


def _literal(w):
    return w.to_literal()


def verify_twisted_duality(w, max_dim=DEFAULT_MAX_DIM):
    n = w.ambient_dim
    comm = supercommutant(w, max_dim)
    perp = orthogonal_complement(w)
    rhs = subalgebra_span(perp)
    res = CheckResult(
        "duality",
        [_literal(w)],
        passed=comm == rhs,
        dims={"n": n, "W": w.dim, "supercommutant": comm.dim, "C(W_perp)": rhs.dim},
    )
    if perp == w:
        res.notes.append("W^⊥ = W")
    if comm.dim != 1 << (n - w.dim):
        res.fail(comm.basis[0] if comm.basis else "0", "dim C(W)' != 2^(n - dim W)")
    if not res.passed and res.counterexample is None:
        witness = comm.first_missing_from(rhs) or rhs.first_missing_from(comm)
        res.fail(witness)
    return res


def verify_intersection_theorem(subspaces):
    if not subspaces:
        raise ValueError("need at least one subspace")
    n = subspaces[0].ambient_dim
    for z in subspaces:
        if z.ambient_dim != n:
            raise DimensionError("ambient dimension mismatch")
    lhs = subalgebra_span(subspaces[0])
    meet = subspaces[0]
    for z in subspaces[1:]:
        lhs = intersect_algebra(lhs, subalgebra_span(z))
        meet = intersect(meet, z)
    rhs = subalgebra_span(meet)
    res = CheckResult(
        "intersection",
        [_literal(z) for z in subspaces],
        passed=lhs == rhs,
        dims={"n": n, "subspaces": [z.dim for z in subspaces], "meet": meet.dim, "algebra": lhs.dim},
    )
    if not res.passed:
        res.fail(lhs.first_missing_from(rhs) or rhs.first_missing_from(lhs))
    return res


def verify_hyperplane(c, w, aux=None):
    n = c.dim
    wrow = [gr(x) for x in w]
    split = hyperplane_decompose(c, wrow, aux)
    solved, rank = hyperplane_decompose_by_solve(c, wrow, aux)
    aux_vec = vector([x.conj() for x in wrow]) if aux is None else vector(aux)
    hyper = subalgebra_span(orthogonal_complement(span([wrow], n)))
    checks = {
        "reconstructs": split.a + mul(aux_vec, split.b) == c,
        "a_in_C(w_perp)": hyper.contains(split.a),
        "b_in_C(w_perp)": hyper.contains(split.b),
        "matches_solve": split == solved,
        "direct": rank == 1 << n,
    }
    res = CheckResult(
        "hyperplane",
        [str(c), [str(x) for x in wrow]],
        passed=all(checks.values()),
        dims={"n": n, "C(w_perp)": hyper.dim, "rank": rank},
        details=checks,
    )
    if not res.passed:
        res.fail(split.a + mul(aux_vec, split.b) - c if not checks["reconstructs"] else split.b)
    return res


def verify_supercentre(n, max_dim=DEFAULT_MAX_DIM):
    centre = supercentre(n, max_dim)
    scalars = AlgebraSubspace(n, [Multivector.scalar(n, 1)])
    res = CheckResult("supercentre", [n], passed=centre == scalars, dims={"n": n, "supercentre": centre.dim})
    if not res.passed:
        res.fail(centre.first_missing_from(scalars) or "1")
    return res
