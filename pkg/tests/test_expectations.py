import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from supercliff.clifford import Multivector, gamma, mul, star, trace_inner
from supercliff.duality import supercommutant, subalgebra_span
from supercliff.expectations import (
    ExpectationOperator,
    IsotropicVectorError,
    intermediate_subspaces,
    positive_decomposition,
    project_u,
    verify_expectation_properties,
    verify_positive_decomposition,
    verify_positivity_identity,
    verify_real_duality,
    verify_stabilization,
)
from supercliff.sampling import make_rng, random_multivector
from supercliff.scalar import GaussianRational as G
from supercliff.subspace import NotRealError, Subspace, orthogonal_complement, span

from conftest import multivectors


def blade(n, *idx):
    return Multivector.blade(n, sum(1 << (i - 1) for i in idx))


def test_projector_examples():
    u = [1, 0, 0]
    assert project_u(u, blade(3, 2)) == blade(3, 2)
    assert project_u(u, blade(3, 1)).is_zero()
    assert project_u(u, blade(3, 1, 2)).is_zero()


def test_projector_rejects_bad_vectors():
    with pytest.raises(NotRealError):
        project_u([1, G(0, 1)], blade(2))
    with pytest.raises(IsotropicVectorError):
        project_u([0, 0], blade(2))


def test_expectation_examples():
    e = ExpectationOperator.from_subspace(Subspace.coordinate(3, [1]))
    assert e(blade(3, 2, 3)) == blade(3, 2, 3)
    assert e(blade(3, 1)).is_zero()
    full = ExpectationOperator.from_subspace(Subspace.full(2))
    a = blade(2) + blade(2, 1) + blade(2, 2) + blade(2, 1, 2)
    assert full(a) == blade(2)


def test_bimodule_example():
    rng = make_rng(5)
    e = ExpectationOperator.from_subspace(Subspace.coordinate(3, [1]))
    b = blade(3, 2)
    for _ in range(10):
        a = random_multivector(rng, 3, real=True)
        assert e(mul(mul(b, a), b)) == mul(mul(b, e(a)), b)


def test_adjointness_example():
    u = [1, 0]
    e1, e2 = blade(2, 1), blade(2, 2)
    assert trace_inner(project_u(u, e1), e2) == 0 == trace_inner(e1, project_u(u, e2))


def test_positivity_examples():
    u = [1, 0]
    assert verify_positivity_identity(u, blade(2)).passed
    assert verify_positivity_identity(u, blade(2, 1)).passed
    assert project_u(u, mul(star(blade(2, 1)), blade(2, 1))).scale(2) == blade(2).scale(2)


def test_positivity_with_unnormalized_vector():
    rng = make_rng(9)
    for _ in range(20):
        a = random_multivector(rng, 3)
        assert verify_positivity_identity([3, 4, 0], a).passed
        # the normalized vector gives the same projector
        assert project_u([mpq(3, 5), mpq(4, 5), 0], a) == project_u([3, 4, 0], a)


def test_positive_decomposition_size():
    e = ExpectationOperator.from_subspace(Subspace.coordinate(3, [1, 2]))
    a = blade(3, 1) + blade(3, 2, 3).scale(G(0, 1))
    assert len(positive_decomposition(e, a)) == 4
    assert verify_positive_decomposition(e, a).passed


def test_stabilization_examples():
    x = Subspace.coordinate(3, [1, 2])
    n_space = span([[1, 0, 1]])
    a = Multivector(3, {0: G(2), 0b001: G(3), 0b100: G(3)})
    res = verify_stabilization(a, x, n_space)
    assert res.passed, res.details
    assert res.dims["X_N"] == 1 and res.dims["chain"] == [1, 2]
    # N orthogonal to X: X_N = 0 and a is fixed
    far = Subspace.coordinate(3, [3])
    b = blade(3) + blade(3, 3).scale(5)
    res = verify_stabilization(b, x, far)
    assert res.passed and res.dims["X_N"] == 0
    for m in intermediate_subspaces(Subspace.zero(3), x):
        assert ExpectationOperator.from_subspace(m)(b) == b


@pytest.mark.parametrize("x, dim", [
    (Subspace.coordinate(2, [1]), 2),
    (Subspace.full(2), 1),
    (Subspace.zero(2), 4),
])
def test_real_duality_examples(x, dim):
    res = verify_real_duality(x)
    assert res.passed and res.dims["supercommutant"] == dim


def test_fixed_points():
    x = span([[1, 1, 0]])
    e = ExpectationOperator.from_subspace(x)
    for a in subalgebra_span(orthogonal_complement(x)).basis:
        assert e(a) == a
    assert supercommutant(x) == subalgebra_span(orthogonal_complement(x))


def test_non_orthogonal_basis_rejected():
    with pytest.raises(ValueError):
        ExpectationOperator([[1, 0], [1, 1]], 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_property_report(n):
    rng = make_rng([1, n])
    e = ExpectationOperator.from_subspace(span([[1, 2] + [0] * (n - 2), [0, 1] + [1] * (n - 2)]))
    res = verify_expectation_properties(e, rng, samples=15)
    assert res.passed, res.details


@given(st.data())
def test_expectation_projects(data):
    n = data.draw(st.integers(1, 4))
    rows = [[data.draw(st.integers(-3, 3)) for _ in range(n)] for _ in range(data.draw(st.integers(0, n)))]
    m = span(rows, n)
    e = ExpectationOperator.from_subspace(m)
    a = data.draw(multivectors(n, real=True))
    ea = e(a)
    assert e(ea) == ea
    assert e(star(a)) == star(ea)
    assert e(gamma(a)) == gamma(ea)
    assert subalgebra_span(orthogonal_complement(m)).contains(ea)
