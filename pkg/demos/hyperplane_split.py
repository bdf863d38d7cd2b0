"""Every element splits over a hyperplane.

Given a nonzero vector w, any c in C(C^n) is a + bar(w) b with a and b in the
subalgebra generated by w^perp. The split is built blade by blade and compared
with a plain linear solve.
"""

from supercliff.clifford import Multivector, bar, mul, vector
from supercliff.duality import hyperplane_decompose, hyperplane_decompose_by_solve
from supercliff.scalar import GaussianRational as G

n = 3
w = [G(1), G(0, -1), G(2)]
c = Multivector.parse("(1)*1 + (2-1i)*e1e2 + (1/3)*e1e2e3 + (0+1i)*e3", n)

split = hyperplane_decompose(c, w)
print("c      =", c)
print("w      =", vector(w))
print("a      =", split.a)
print("b      =", split.b)
print("a + bar(w) b == c:", split.a + mul(bar(vector(w)), split.b) == c)

solved, rank = hyperplane_decompose_by_solve(c, w)
print("linear solve agrees:", solved == split, "| rank of spanning set:", rank, "of", 2 ** n)
