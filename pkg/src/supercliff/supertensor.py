"""
The super tensor product C(X) ⊗̂ C(Y) for a coordinate split V_C = X ⊕ Y.

Elements are sparse maps from pairs of blade masks ``(mx, my)`` to
coefficients, where ``mx`` indexes blades of C(X) in X's own generators and
``my`` those of C(Y). Multiplication follows the Koszul-Quillen rule

    (a1 ⊗ b1)(a2 ⊗ b2) = (-1)^(deg b1 * deg a2) (a1 a2) ⊗ (b1 b2).
"""

from .clifford import DimensionError, Multivector, blade_name, blade_sign, mul, gamma, bilinear_form
from .duality import AlgebraSubspace, subalgebra_span, supercommutant
from .linalg import EchelonBasis, axpy, nullspace, rank
from .report import CheckResult
from .sampling import random_multivector, random_row
from .scalar import ONE, gr, _make
from .subspace import Subspace, intersect, subspace_sum, dot

__all__ = [
    "SuperTensorElement",
    "CoordinateSplit",
    "PreconditionError",
    "BasisSplitError",
    "st_mul",
    "verify_phi_isomorphism",
    "verify_tensor_duality",
]


class PreconditionError(ValueError):
    """X and Y do not form an orthogonal direct sum decomposition of V_C."""

    def __init__(self, condition, witness=None):
        super().__init__(condition)
        self.condition = condition
        self.witness = witness


class BasisSplitError(PreconditionError):
    """X and Y are not spanned by complementary sets of basis vectors."""


class SuperTensorElement:
    __slots__ = ("left_dim", "right_dim", "terms")

    def __init__(self, left_dim, right_dim, terms=None):
        self.left_dim = left_dim
        self.right_dim = right_dim
        clean = {}
        for (mx, my), c in (terms or {}).items():
            if not (0 <= mx < 1 << left_dim and 0 <= my < 1 << right_dim):
                raise DimensionError("tensor blade (%d, %d) out of range" % (mx, my))
            c = gr(c)
            if c:
                clean[(mx, my)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, left_dim, right_dim, terms):
        t = object.__new__(cls)
        t.left_dim = left_dim
        t.right_dim = right_dim
        t.terms = terms
        return t

    @classmethod
    def unit(cls, left_dim, right_dim):
        return cls._raw(left_dim, right_dim, {(0, 0): ONE})

    @classmethod
    def pure(cls, left_dim, right_dim, mx, my, coeff=1):
        return cls(left_dim, right_dim, {(mx, my): coeff})

    def _check(self, other):
        if (self.left_dim, self.right_dim) != (other.left_dim, other.right_dim):
            raise DimensionError("super tensor factors differ in dimension")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        axpy(out, ONE, other.terms)
        return SuperTensorElement._raw(self.left_dim, self.right_dim, out)

    def __neg__(self):
        return SuperTensorElement._raw(self.left_dim, self.right_dim, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = gr(c)
        if not c:
            return SuperTensorElement._raw(self.left_dim, self.right_dim, {})
        return SuperTensorElement._raw(self.left_dim, self.right_dim, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SuperTensorElement):
            return st_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SuperTensorElement):
            return NotImplemented
        return (self.left_dim, self.right_dim, self.terms) == (other.left_dim, other.right_dim, other.terms)

    def __hash__(self):
        return hash((self.left_dim, self.right_dim, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def gamma(self):
        """gamma ⊗ gamma: the sign of the total degree."""
        return SuperTensorElement._raw(
            self.left_dim,
            self.right_dim,
            {(mx, my): (-c if (mx.bit_count() + my.bit_count()) & 1 else c) for (mx, my), c in self.terms.items()},
        )

    def key(self, mx, my):
        return mx | (my << self.left_dim)

    def as_sparse(self):
        """Coefficients keyed by the packed integer ``mx | my << left_dim``."""
        return {mx | (my << self.left_dim): c for (mx, my), c in self.terms.items()}

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            "(%s)*%s⊗%s" % (c, blade_name(mx), blade_name(my)) for (mx, my), c in sorted(self.terms.items())
        )

    __repr__ = __str__


def st_mul(s, t):
    """Koszul-Quillen product of two super tensor elements."""
    s._check(t)
    acc = {}
    get = acc.get
    right = [(ay, by, ay.bit_count() & 1, c2.re, c2.im) for (ay, by), c2 in t.terms.items()]
    for (ax, bx), c1 in s.terms.items():
        odd_b1 = bx.bit_count() & 1
        p, q = c1.re, c1.im
        for ay, by, odd_a2, r, v in right:
            sign = blade_sign(ax, ay) * blade_sign(bx, by)
            if odd_b1 and odd_a2:
                sign = -sign
            re_ = p * r - q * v
            im_ = p * v + q * r
            if sign < 0:
                re_, im_ = -re_, -im_
            k = (ax ^ ay, bx ^ by)
            slot = get(k)
            if slot is None:
                acc[k] = [re_, im_]
            else:
                slot[0] += re_
                slot[1] += im_
    return SuperTensorElement._raw(s.left_dim, s.right_dim, {k: _make(r, i) for k, (r, i) in acc.items() if r or i})


def _orthogonal_direct_sum_witness(x, y):
    """Check V_C = X ⊕ Y orthogonally; raise ``PreconditionError`` otherwise."""
    if x.ambient_dim != y.ambient_dim:
        raise PreconditionError("X and Y have different ambient dimensions")
    for a in x.basis:
        for b in y.basis:
            if dot(a, b):
                raise PreconditionError("X is not orthogonal to Y", ([str(c) for c in a], [str(c) for c in b]))
    meet = intersect(x, y)
    if meet.dim:
        raise PreconditionError("X ∩ Y != 0", [str(c) for c in meet.basis[0]])
    if subspace_sum(x, y).dim != x.ambient_dim:
        raise PreconditionError("X + Y != V_C", subspace_sum(x, y).dim)


def _coordinate_indices(z):
    idx = []
    for row in z.basis:
        nz = [i for i, c in enumerate(row) if c]
        if len(nz) != 1 or row[nz[0]] != ONE:
            raise BasisSplitError("%r is not spanned by standard basis vectors" % z)
        idx.append(nz[0])
    return idx


class CoordinateSplit:
    """V_C = X ⊕ Y with X, Y spanned by complementary orthonormal basis vectors.

    Holds the map Phi: C(V_C) -> C(X) ⊗̂ C(Y) extending
    phi(x ⊕ y) = x ⊗ 1 + 1 ⊗ y.
    """

    def __init__(self, x, y):
        _orthogonal_direct_sum_witness(x, y)
        self.x = x
        self.y = y
        self.n = x.ambient_dim
        self.x_index = _coordinate_indices(x)
        self.y_index = _coordinate_indices(y)
        self.left_dim = len(self.x_index)
        self.right_dim = len(self.y_index)
        # generator e_{i+1} -> (side, local bit)
        self.generator = {}
        for k, i in enumerate(self.x_index):
            self.generator[i] = (0, 1 << k)
        for k, i in enumerate(self.y_index):
            self.generator[i] = (1, 1 << k)
        self._blade_cache = {0: SuperTensorElement.unit(self.left_dim, self.right_dim)}

    @classmethod
    def from_indices(cls, n, x_indices):
        """Split with X = span{e_i : i in x_indices} (1-based) and Y its complement."""
        x_indices = sorted(x_indices)
        y_indices = [i for i in range(1, n + 1) if i not in x_indices]
        return cls(Subspace.coordinate(n, x_indices), Subspace.coordinate(n, y_indices))

    def phi_generator(self, i):
        side, bit = self.generator[i]
        if side == 0:
            return SuperTensorElement._raw(self.left_dim, self.right_dim, {(bit, 0): ONE})
        return SuperTensorElement._raw(self.left_dim, self.right_dim, {(0, bit): ONE})

    def phi_vector(self, coords):
        """phi on V_C given by coordinates."""
        out = {}
        for i, c in enumerate(coords):
            c = gr(c)
            if c:
                side, bit = self.generator[i]
                out[(bit, 0) if side == 0 else (0, bit)] = c
        return SuperTensorElement._raw(self.left_dim, self.right_dim, out)

    def phi_blade(self, mask):
        """Phi(e_K): product of phi(e_k) over K in increasing index order."""
        got = self._blade_cache.get(mask)
        if got is None:
            top = mask.bit_length() - 1
            got = st_mul(self.phi_blade(mask ^ (1 << top)), self.phi_generator(top))
            self._blade_cache[mask] = got
        return got

    def phi(self, a):
        """Phi on a whole multivector."""
        if a.dim != self.n:
            raise DimensionError("multivector of dimension %d, split of dimension %d" % (a.dim, self.n))
        out = {}
        for mask, c in a.terms.items():
            axpy(out, c, self.phi_blade(mask).terms)
        return SuperTensorElement._raw(self.left_dim, self.right_dim, out)

    def phi_inverse(self, t):
        """Pull a super tensor element back to C(V_C)."""
        index = {}
        for mask in range(1 << self.n):
            (k, c), = self.phi_blade(mask).terms.items()
            index[k] = (mask, c)
        out = {}
        for k, c in t.terms.items():
            mask, s = index[k]
            out[mask] = c * s.inv()
        return Multivector(self.n, out)

    def left(self, mx):
        """mx ⊗ 1 for a C(X) blade."""
        return SuperTensorElement._raw(self.left_dim, self.right_dim, {(mx, 0): ONE})


def _fail_from_precondition(res, exc):
    res.details["precondition"] = exc.condition
    return res.fail(exc.witness if exc.witness is not None else exc.condition, "precondition: " + exc.condition)


def verify_phi_isomorphism(x, y, rng, samples=200, bound=5, terms=8):
    """Clifford relation for phi, multiplicativity, bijectivity and grading of Phi."""
    res = CheckResult("tensor_isomorphism", [x.to_literal(), y.to_literal()], passed=True)
    try:
        split = CoordinateSplit(x, y)
    except PreconditionError as exc:
        return _fail_from_precondition(res, exc)
    n = split.n
    unit = SuperTensorElement.unit(split.left_dim, split.right_dim)
    checks = {}
    witness = None

    ok = True
    for _ in range(samples):
        v = random_row(rng, n, bound)
        pv = split.phi_vector(v)
        if st_mul(pv, pv) != unit.scale(bilinear_form(v, v)):
            ok = False
            witness = [str(c) for c in v]
            break
    checks["clifford_relation"] = ok

    ok = True
    for _ in range(samples):
        a = random_multivector(rng, n, terms, bound)
        b = random_multivector(rng, n, terms, bound)
        if split.phi(mul(a, b)) != st_mul(split.phi(a), split.phi(b)):
            ok = False
            witness = witness or "a=%s; b=%s" % (a, b)
            break
    checks["homomorphism"] = ok

    images = [split.phi_blade(m).as_sparse() for m in range(1 << n)]
    r = rank(images)
    checks["bijective"] = r == 1 << n

    ok = True
    for m in range(1 << n):
        e = Multivector.blade(n, m)
        if split.phi(gamma(e)) != split.phi_blade(m).gamma():
            ok = False
            witness = witness or str(e)
            break
    checks["grading"] = ok

    res.details = checks
    res.dims = {"n": n, "X": split.left_dim, "Y": split.right_dim, "rank": r}
    if not all(checks.values()):
        res.fail(witness or "rank %d" % r)
    return res


def tensor_supercommutant_of_left(split):
    """Supercommutant of C(X) ⊗̂ 1 inside C(X) ⊗̂ C(Y), straight from the
    graded definition: even c commute with every b ⊗ 1, odd c satisfy
    (b ⊗ 1) c = c (gamma(b) ⊗ 1)."""
    lx, ly = split.left_dim, split.right_dim
    size = 1 << (lx + ly)
    solutions = []
    for parity in (0, 1):
        unknowns = [k for k in range(size) if ((k & ((1 << lx) - 1)).bit_count() + (k >> lx).bit_count()) & 1 == parity]
        rows = {}
        for col, k in enumerate(unknowns):
            c = SuperTensorElement._raw(lx, ly, {(k & ((1 << lx) - 1), k >> lx): ONE})
            for bx in range(1 << lx):
                b = split.left(bx)
                right = b.gamma() if parity else b
                image = st_mul(b, c) - st_mul(c, right)
                for (mx, my), v in image.terms.items():
                    rows.setdefault((bx, mx, my), {})[col] = v
        for x in nullspace(list(rows.values()), len(unknowns)):
            solutions.append({unknowns[col]: v for col, v in x.items()})
    eb = EchelonBasis()
    for s in solutions:
        eb.add(s)
    return eb.basis()


def verify_tensor_duality(x, y):
    """(C(X) ⊗̂ C1)' = C1 ⊗̂ C(Y), also transported back through Phi^-1."""
    res = CheckResult("tensor_duality", [x.to_literal(), y.to_literal()], passed=True)
    try:
        split = CoordinateSplit(x, y)
    except PreconditionError as exc:
        return _fail_from_precondition(res, exc)
    lx, ly = split.left_dim, split.right_dim
    comm = tensor_supercommutant_of_left(split)
    expected = EchelonBasis()
    for my in range(1 << ly):
        expected.add({my << lx: ONE})
    expected_rows = expected.basis()

    pulled = AlgebraSubspace.span(
        split.n,
        [split.phi_inverse(SuperTensorElement._raw(lx, ly, {(k & ((1 << lx) - 1), k >> lx): c for k, c in row.items()}))
         for row in comm],
    )
    checks = {
        "tensor_side": comm == expected_rows,
        "matches_supercommutant": pulled == supercommutant(x),
        "matches_C(Y)": pulled == subalgebra_span(y),
    }
    res.details = checks
    res.dims = {"n": split.n, "X": lx, "Y": ly, "supercommutant": len(comm)}
    if not all(checks.values()):
        row = next((r for r in comm if r not in expected_rows), None)
        if row is not None:
            mask = (1 << lx) - 1
            witness = SuperTensorElement._raw(lx, ly, {(k & mask, k >> lx): c for k, c in row.items()})
        else:
            witness = pulled.basis[0] if pulled.basis else "0"
        res.fail(witness)
    return res
