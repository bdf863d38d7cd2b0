"""C(X + Y) as a graded tensor product C(X) (x) C(Y).

Odd factors anticommute across the tensor sign, so (1 (x) y)(x (x) 1) equals
-(x (x) y). The map e_i -> e_i (x) 1 or 1 (x) e_i extends to an algebra
isomorphism, and the supercommutant of C(X) (x) 1 is 1 (x) C(Y).
"""

from supercliff.clifford import Multivector
from supercliff.sampling import make_rng
from supercliff.supertensor import (
    CoordinateSplit,
    SuperTensorElement,
    st_mul,
    tensor_supercommutant_of_left,
    verify_phi_isomorphism,
    verify_tensor_duality,
)

x = SuperTensorElement.pure(1, 1, 1, 0)
y = SuperTensorElement.pure(1, 1, 0, 1)
print("(1 (x) y)(x (x) 1) =", st_mul(y, x))
print("(x (x) 1)(1 (x) y) =", st_mul(x, y))

split = CoordinateSplit.from_indices(4, [1, 3])
a = Multivector.parse("(2)*e1e2 + (1-1i)*e2e3e4", 4)
print("\nX = span{e1, e3}, Y = span{e2, e4}")
print("Phi(%s) = %s" % (a, split.phi(a)))

iso = verify_phi_isomorphism(split.x, split.y, make_rng(0), samples=50)
print("isomorphism checks:", iso.details, "rank", iso.dims["rank"])
print("supercommutant of C(X) (x) 1 has dimension", len(tensor_supercommutant_of_left(split)))
print("equals 1 (x) C(Y):", verify_tensor_duality(split.x, split.y).passed)
