"""Conditional expectations onto C(M^perp) for real subspaces M.

E_M is the composition of projectors P_u(a) = (a + u gamma(a) u/(u|u))/2 over
an orthogonal basis of M. It fixes C(M^perp), kills the rest, and sends a* a to
a nonnegative combination of squares.
"""

from supercliff.clifford import Multivector, mul, star, trace
from supercliff.expectations import ExpectationOperator, positive_decomposition, project_u, verify_stabilization
from supercliff.subspace import Subspace, span

u = [3, 4, 0]
a = Multivector.parse("(1)*1 + (2)*e1 + (1/2)*e2e3 + (0+1i)*e1e2", 3)
print("P_u(a) with u = (3, 4, 0):", project_u(u, a))
print("same as with u/5:", project_u(u, a) == project_u(["3/5", "4/5", "0"], a))

m = span([[1, 1, 0], [1, 0, 1]])
e = ExpectationOperator.from_subspace(m)
print("\northogonal basis of M:", [[str(c) for c in v] for v in e.ortho_basis])
print("E_M(a) =", e(a))

pos = positive_decomposition(e, a)
total = sum((mul(star(b), b).scale(w) for w, b in pos), Multivector.zero(3))
print("E_M(a* a) as %d weighted squares:" % len(pos), total == e(mul(star(a), a)))
print("trace of E_M(a* a):", trace(e(mul(star(a), a))))

# stabilization: only the part of X seen by N matters
x = Subspace.coordinate(3, [1, 2])
n_space = span([[1, 0, 1]])
b = Multivector.parse("(2)*1 + (3)*e1 + (3)*e3", 3)
res = verify_stabilization(b, x, n_space)
print("\nE_M(b) constant for X_N <= M <= X:", res.passed, "chain dims", res.dims["chain"])
