import pytest
from hypothesis import given, strategies as st

from supercliff.clifford import Multivector, gamma, mul
from supercliff.sampling import make_rng
from supercliff.scalar import GaussianRational as G
from supercliff.subspace import Subspace, span
from supercliff.supertensor import (
    BasisSplitError,
    CoordinateSplit,
    PreconditionError,
    SuperTensorElement as T,
    st_mul,
    tensor_supercommutant_of_left,
    verify_phi_isomorphism,
    verify_tensor_duality,
)

from conftest import multivectors


def test_koszul_sign():
    x1 = T.pure(1, 1, 1, 0)
    y1 = T.pure(1, 1, 0, 1)
    assert st_mul(y1, x1) == -T.pure(1, 1, 1, 1)
    assert st_mul(x1, y1) == T.pure(1, 1, 1, 1)
    assert st_mul(T.unit(1, 1), y1) == y1
    assert st_mul(x1, x1) == T.unit(1, 1)


def test_koszul_sign_even_factors():
    # (a1 ⊗ b1)(a2 ⊗ b2) = (-1)^{|b1||a2|} a1a2 ⊗ b1b2
    a = T.pure(2, 2, 0b11, 0b01)
    b = T.pure(2, 2, 0b01, 0b10)
    # |b1| = 1, |a2| = 1 ; e1e2 e1 = -e2 ; e1 e2 stays
    assert st_mul(a, b) == T.pure(2, 2, 0b10, 0b11)


def test_phi_examples():
    split = CoordinateSplit.from_indices(2, [1])
    n = 2
    assert split.phi(Multivector.basis_vector(n, 1)) == T.pure(1, 1, 1, 0)
    assert split.phi(Multivector.scalar(n, 1)) == T.unit(1, 1)
    assert split.phi(Multivector.blade(n, 0b11)) == T.pure(1, 1, 1, 1)


def test_phi_with_interleaved_indices():
    split = CoordinateSplit.from_indices(3, [2])
    # e1 e2 = -(e2 ⊗ 1)(1 ⊗ e1) after moving e2 to the left
    got = split.phi(Multivector.blade(3, 0b011))
    assert got == T.pure(1, 2, 1, 0b01).scale(-1)
    for m in range(8):
        b = Multivector.blade(3, m)
        assert split.phi_inverse(split.phi(b)) == b


@pytest.mark.parametrize("n, xs", [(2, [1]), (4, [1, 2]), (3, []), (3, [1, 2, 3])])
def test_isomorphism_reports(n, xs):
    split = CoordinateSplit.from_indices(n, xs)
    res = verify_phi_isomorphism(split.x, split.y, make_rng(0), samples=30)
    assert res.passed, res.details
    assert res.dims["rank"] == 1 << n


@pytest.mark.parametrize("n, xs, dim", [(2, [1], 2), (4, [1, 2, 3], 2), (3, [1, 2, 3], 1), (3, [], 8)])
def test_tensor_duality_reports(n, xs, dim):
    split = CoordinateSplit.from_indices(n, xs)
    res = verify_tensor_duality(split.x, split.y)
    assert res.passed, res.details
    assert res.dims["supercommutant"] == dim
    assert len(tensor_supercommutant_of_left(split)) == dim


def test_preconditions():
    x = Subspace.coordinate(2, [1])
    with pytest.raises(PreconditionError):
        CoordinateSplit(x, x)
    with pytest.raises(PreconditionError):
        CoordinateSplit(x, Subspace.zero(2))
    with pytest.raises(BasisSplitError):
        CoordinateSplit(span([[1, 1]]), span([[1, -1]]))
    res = verify_tensor_duality(x, span([[1, 1]]))
    assert not res.passed and res.counterexample is not None
    assert res.details["precondition"]


@given(st.data())
def test_phi_multiplicative(data):
    n = data.draw(st.integers(1, 4))
    xs = data.draw(st.lists(st.integers(1, n), unique=True))
    split = CoordinateSplit.from_indices(n, xs)
    a, b = data.draw(multivectors(n)), data.draw(multivectors(n))
    assert split.phi(mul(a, b)) == st_mul(split.phi(a), split.phi(b))
    assert split.phi(gamma(a)) == split.phi(a).gamma()
    assert split.phi_inverse(split.phi(a)) == a


@given(st.data())
def test_tensor_associativity(data):
    lx, ly = data.draw(st.integers(0, 2)), data.draw(st.integers(0, 2))

    def elt():
        keys = data.draw(st.lists(st.tuples(st.integers(0, (1 << lx) - 1), st.integers(0, (1 << ly) - 1)), max_size=4))
        return T(lx, ly, {k: G(data.draw(st.integers(-3, 3)), data.draw(st.integers(-3, 3))) for k in keys})

    a, b, c = elt(), elt(), elt()
    assert st_mul(st_mul(a, b), c) == st_mul(a, st_mul(b, c))
