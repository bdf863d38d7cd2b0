"""
Projectors P_u and conditional expectations E_M on the real Clifford algebra.

For a real nonzero vector u (not necessarily of unit length)

    P_u(a) = (a + u gamma(a) u / (u|u)) / 2

is the <.|.>_tau-orthogonal projector of C(V) onto C(u^⊥). For an orthogonal
family u_1..u_m spanning M, E_M = P_{u_m} ... P_{u_1} projects onto C(M^⊥).
Unit vectors recover the usual formulas; rational vectors rarely have unit
length, hence the division by (u|u).
"""

from .clifford import DimensionError, Multivector, gamma, mul, star, trace, trace_inner, vector
from .duality import subalgebra_span, supercommutant, verify_twisted_duality
from .linalg import rank
from .report import CheckResult
from .sampling import random_multivector, random_rational
from .scalar import GaussianRational, gr
from .subspace import (
    NotRealError,
    dot,
    orthogonal_complement,
    orthogonal_projection_onto,
    orthogonalize,
    span,
    subspace_sum,
)

__all__ = [
    "IsotropicVectorError",
    "ExpectationOperator",
    "project_u",
    "expectation",
    "positive_decomposition",
    "verify_expectation_properties",
    "verify_positivity_identity",
    "verify_stabilization",
    "verify_real_duality",
]


class IsotropicVectorError(ValueError):
    """(u|u) = 0, so P_u is undefined."""


def _real_vector(u, n=None):
    coords = u.vector_coords() if isinstance(u, Multivector) else [gr(c) for c in u]
    if n is not None and len(coords) != n:
        raise DimensionError("vector of length %d in dimension %d" % (len(coords), n))
    if any(c.im for c in coords):
        raise NotRealError("projector vectors must be real")
    uu = dot(coords, coords)
    if not uu:
        raise IsotropicVectorError("(u|u) = 0")
    return vector(coords), uu


def project_u(u, a):
    """P_u(a) = (a + u gamma(a) u / (u|u)) / 2."""
    uv, uu = _real_vector(u, a.dim)
    return (a + mul(mul(uv, gamma(a)), uv).scale(uu.inv())).scale(GaussianRational(1, 0) / 2)


class ExpectationOperator:
    """E_M given by pairwise orthogonal real vectors spanning M."""

    def __init__(self, ortho_basis, ambient_dim):
        self.ambient_dim = ambient_dim
        self.ortho_basis = [tuple(gr(c) for c in u) for u in ortho_basis]
        for u in self.ortho_basis:
            _real_vector(u, ambient_dim)
        for i, u in enumerate(self.ortho_basis):
            for v in self.ortho_basis[:i]:
                if dot(u, v):
                    raise ValueError("basis vectors are not pairwise orthogonal")
        self._prepared = [_real_vector(u, ambient_dim) for u in self.ortho_basis]

    @classmethod
    def from_subspace(cls, m):
        return cls(orthogonalize(m), m.ambient_dim)

    @property
    def subspace(self):
        return span(self.ortho_basis, self.ambient_dim)

    def __call__(self, a):
        return expectation(self, a)

    def projectors(self):
        return list(self.ortho_basis)


def expectation(e, a):
    """E_M(a) = P_{u_m}(...P_{u_1}(a)...)."""
    if a.dim != e.ambient_dim:
        raise DimensionError("dimension mismatch")
    half = GaussianRational(1, 0) / 2
    for uv, uu in e._prepared:
        a = (a + mul(mul(uv, gamma(a)), uv).scale(uu.inv())).scale(half)
    return a


def positive_decomposition(e, a):
    """Weights and elements ``[(w, b), ...]`` with E_M(a* a) = sum w b* b.

    Each projector turns b* b into (b* b + (gamma(b)u)* (gamma(b)u)/(u|u)) / 2,
    so the weights stay nonnegative rationals.
    """
    terms = [(GaussianRational(1), a)]
    for uv, uu in e._prepared:
        nxt = []
        for w, b in terms:
            nxt.append((w / 2, b))
            nxt.append((w / (2 * uu), mul(gamma(b), uv)))
        terms = nxt
    return terms


def operator_matrix(f, n):
    """Images of all blades under the linear map ``f``, as sparse rows."""
    return [f(Multivector.blade(n, m)) for m in range(1 << n)]


def _random_in(alg, rng, bound):
    out = Multivector.zero(alg.ambient_dim)
    for b in alg.basis:
        out = out + b.scale(random_rational(rng, bound))
    return out


def verify_expectation_properties(e, rng, samples=100, bound=5, terms=8, matrix_max_dim=8):
    """Bimodule identity, idempotence, *-preservation, commuting projectors and
    tau-orthogonality of E_M, on random real samples."""
    n = e.ambient_dim
    m = e.subspace
    commutant = subalgebra_span(orthogonal_complement(m))
    checks = {}
    witness = None

    def record(name, ok, wit):
        nonlocal witness
        checks[name] = checks.get(name, True) and ok
        if not ok and witness is None:
            witness = wit

    for _ in range(samples):
        a = random_multivector(rng, n, terms, bound, real=True)
        b = _random_in(commutant, rng, bound)
        c = _random_in(commutant, rng, bound)
        ea = e(a)
        record("bimodule", e(mul(mul(b, a), c)) == mul(mul(b, ea), c), "a=%s; b=%s; c=%s" % (a, b, c))
        record("idempotent", e(ea) == ea, a)
        record("star_preserving", e(star(a)) == star(ea), a)
        record("image_in_C(M_perp)", commutant.contains(ea), a)
        a2 = random_multivector(rng, n, terms, bound, real=True)
        ea2 = e(a2)
        record("tau_orthogonal", trace_inner(a - ea, ea2) == 0, "a=%s; b=%s" % (a, a2))
        for u in e.ortho_basis:
            record(
                "projector_self_adjoint",
                trace_inner(project_u(u, a), a2) == trace_inner(a, project_u(u, a2)),
                "u=%s; a=%s" % ([str(x) for x in u], a),
            )
        basis = e.ortho_basis
        for i in range(len(basis)):
            for j in range(i):
                record(
                    "projectors_commute",
                    project_u(basis[i], project_u(basis[j], a)) == project_u(basis[j], project_u(basis[i], a)),
                    a,
                )

    dims = {"n": n, "M": len(e.ortho_basis), "C(M_perp)": commutant.dim}
    if n <= matrix_max_dim:
        for u in e.ortho_basis:
            uv, uu = _real_vector(u, n)
            images = operator_matrix(lambda x: project_u(u, x), n)
            image_rank = rank([x.terms for x in images])
            ok_rank = image_rank == 1 << (n - 1)
            # complement: a - P_u a satisfies u gamma(a) u = -(u|u) a
            ok_fix = all(mul(mul(uv, gamma(p)), uv) == p.scale(uu) for p in images)
            comp = [Multivector.blade(n, k) - p for k, p in enumerate(images)]
            ok_anti = all(mul(mul(uv, gamma(q)), uv) == q.scale(-uu) for q in comp)
            comp_rank = rank([q.terms for q in comp])
            record("projector_image_dim", ok_rank and comp_rank == 1 << (n - 1), [str(x) for x in u])
            record("projector_eigenspaces", ok_fix and ok_anti, [str(x) for x in u])
        full = rank([e(Multivector.blade(n, k)).terms for k in range(1 << n)])
        dims["image"] = full
        record("expectation_image_dim", full == commutant.dim, full)

    res = CheckResult(
        "expectation",
        [[[str(c) for c in u] for u in e.ortho_basis]],
        passed=all(checks.values()),
        dims=dims,
        details=checks,
    )
    if not res.passed:
        res.fail(witness)
    return res


def verify_positivity_identity(u, a):
    """2 P_u(a* a) = a* a + (gamma(a) u)* (gamma(a) u) / (u|u), and tau(P_u(a* a)) >= 0."""
    uv, uu = _real_vector(u, a.dim)
    asa = mul(star(a), a)
    ga_u = mul(gamma(a), uv)
    lhs = project_u(u, asa).scale(2)
    rhs = asa + mul(star(ga_u), ga_u).scale(uu.inv())
    t = trace(project_u(u, asa))
    checks = {"identity": lhs == rhs, "trace_nonnegative": t.is_real() and t.re >= 0}
    res = CheckResult(
        "positivity",
        [[str(x) for x in (u.vector_coords() if isinstance(u, Multivector) else u)], str(a)],
        passed=all(checks.values()),
        dims={"n": a.dim},
        details=checks,
    )
    if not res.passed:
        res.fail(lhs - rhs if not checks["identity"] else t)
    return res


def verify_positive_decomposition(e, a):
    """E_M(a* a) is a nonnegative combination of b* b, and has nonnegative trace."""
    target = e(mul(star(a), a))
    total = Multivector.zero(a.dim)
    weights_ok = True
    for w, b in positive_decomposition(e, a):
        weights_ok = weights_ok and w.is_real() and w.re >= 0
        total = total + mul(star(b), b).scale(w)
    t = trace(target)
    checks = {"decomposition": total == target, "weights_nonnegative": weights_ok,
              "trace_nonnegative": t.is_real() and t.re >= 0}
    res = CheckResult("positive_decomposition", [str(a)], passed=all(checks.values()),
                      dims={"n": a.dim}, details=checks)
    if not res.passed:
        res.fail(total - target)
    return res


def intermediate_subspaces(x_n, x):
    """A chain X_N = M_0 ⊂ M_1 ⊂ ... ⊂ M_k = X, one dimension at a time."""
    chain = [x_n]
    cur = x_n
    for row in x.basis:
        nxt = subspace_sum(cur, span([row], x.ambient_dim))
        if nxt.dim > cur.dim:
            chain.append(nxt)
            cur = nxt
    return chain


def verify_stabilization(a, x, n_space):
    """E_M(a) = E_{X_N}(a) for X_N ⊆ M ⊆ X, where a ∈ C(N) and X_N is the
    orthogonal projection of N on X; also E_M fixes C(X^⊥)."""
    n = a.dim
    if not (x.is_real() and n_space.is_real()):
        raise NotRealError("X and N must be real")
    if not subalgebra_span(n_space).contains(a):
        raise ValueError("a is not in C(N)")
    x_n = orthogonal_projection_onto(n_space, x)
    base = ExpectationOperator.from_subspace(x_n)(a)
    chain = intermediate_subspaces(x_n, x)
    stable = True
    witness = None
    for m in chain:
        v = ExpectationOperator.from_subspace(m)(a)
        if v != base:
            stable = False
            witness = witness or "M=%s: %s" % (m.to_literal(), v - base)
    checks = {"stable": stable}
    y_alg = subalgebra_span(orthogonal_complement(x))
    if y_alg.contains(a):
        checks["fixes_C(X_perp)"] = all(ExpectationOperator.from_subspace(m)(a) == a for m in chain)
    y_n = orthogonal_projection_onto(n_space, orthogonal_complement(x))
    checks["lands_in_C(Y_N)"] = subalgebra_span(y_n).contains(base)
    res = CheckResult(
        "stabilization",
        [str(a), x.to_literal(), n_space.to_literal()],
        passed=all(checks.values()),
        dims={"n": n, "X": x.dim, "N": n_space.dim, "X_N": x_n.dim, "chain": [mm.dim for mm in chain]},
        details=checks,
    )
    if not res.passed:
        res.fail(witness or base)
    return res


def verify_real_duality(x):
    """C(X)' = C(X^⊥) via the retraction E_X, cross-checked with the direct solve."""
    n = x.ambient_dim
    if not x.is_real():
        raise NotRealError("X must be real")
    e = ExpectationOperator.from_subspace(x)
    comm = supercommutant(x)
    y_alg = subalgebra_span(orthogonal_complement(x))
    fixed = all(e(a) == a for a in comm.basis)
    inside = all(y_alg.contains(a) for a in comm.basis)
    direct = verify_twisted_duality(x)
    checks = {"fixed_by_E_X": fixed, "inside_C(X_perp)": inside, "twisted_duality": direct.passed}
    res = CheckResult(
        "real_duality",
        [x.to_literal()],
        passed=all(checks.values()),
        dims={"n": n, "X": x.dim, "supercommutant": comm.dim},
        details=checks,
    )
    if not res.passed:
        res.fail(next((a for a in comm.basis if e(a) != a or not y_alg.contains(a)), direct.counterexample))
    return res
