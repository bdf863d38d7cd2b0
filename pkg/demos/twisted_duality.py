"""Supercommutants of Clifford subalgebras, computed exactly.

For a subspace W of C^n the supercommutant of C(W) is the set of elements a
with w a = gamma(a) w for every w in W. This script computes it for a few
subspaces, including an isotropic line that is its own orthogonal complement.
"""

from supercliff import GaussianRational, Subspace, orthogonal_complement, span, subalgebra_span, supercommutant

i = GaussianRational(0, 1)

cases = {
    "real line e1 in C^3": Subspace.coordinate(3, [1]),
    "isotropic line (1, -i) in C^2": span([[1, -i]]),
    "plane spanned by (1, 2, i), (0, 1, 1)": span([[1, 2, i], [0, 1, 1]]),
}

for label, w in cases.items():
    comm = supercommutant(w)
    perp = orthogonal_complement(w)
    print(label)
    print("  W^perp basis:", perp.to_literal())
    print("  dim C(W)' =", comm.dim, " expected 2^(n - dim W) =", 2 ** (w.ambient_dim - w.dim))
    print("  C(W)' == C(W^perp):", comm == subalgebra_span(perp))
    for a in comm.basis:
        print("    ", a)
    print()

# the whole space has only scalars in its supercommutant
print("supercentre of C(C^4):", [str(a) for a in supercommutant(Subspace.full(4)).basis])
