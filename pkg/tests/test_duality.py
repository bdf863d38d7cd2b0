import pytest
from hypothesis import given, strategies as st

from supercliff.clifford import Multivector, bar, mul, vector
from supercliff.duality import (
    AlgebraSubspace,
    DimensionCapError,
    ZeroVectorError,
    hyperplane_decompose,
    hyperplane_decompose_by_solve,
    intersect_algebra,
    subalgebra_span,
    supercentre,
    supercommutant,
    supercommutant_by_intersections,
    verify_hyperplane,
    verify_intersection_theorem,
    verify_supercentre,
    verify_twisted_duality,
)
from supercliff.sampling import make_rng, random_multivector, random_recombination, random_subspace
from supercliff.scalar import GaussianRational as G
from supercliff.subspace import Subspace, orthogonal_complement, span

from conftest import multivectors, subspaces

i = G(0, 1)


def alg(n, *elements):
    return AlgebraSubspace.span(n, list(elements))


def one(n):
    return Multivector.scalar(n, 1)


def e(n, k):
    return Multivector.basis_vector(n, k)


def test_subalgebra_span_examples():
    assert subalgebra_span(Subspace.zero(2)) == alg(2, one(2))
    assert subalgebra_span(Subspace.coordinate(2, [1])) == alg(2, one(2), e(2, 1))
    w = vector([1, -i])
    assert subalgebra_span(span([[1, -i]])) == alg(2, one(2), w)
    assert subalgebra_span(Subspace.full(3)).dim == 8


def test_supercommutant_examples():
    assert supercommutant(Subspace.zero(2)) == AlgebraSubspace.whole(2)
    assert supercommutant(Subspace.coordinate(2, [1])) == alg(2, one(2), e(2, 2))
    assert supercommutant(Subspace.full(2)) == alg(2, one(2))


def test_isotropic_line_is_its_own_dual():
    w = span([[1, -i]])
    res = verify_twisted_duality(w)
    assert res.passed
    assert "W^⊥ = W" in res.notes
    assert supercommutant(w) == subalgebra_span(w)
    assert res.dims["supercommutant"] == 2


def test_duality_reports():
    for w in (Subspace.coordinate(3, [1]), Subspace.full(3), Subspace.zero(3)):
        res = verify_twisted_duality(w)
        assert res.passed and res.counterexample is None
        assert res.dims["supercommutant"] == 1 << (3 - w.dim)


@pytest.mark.parametrize("n", [0, 1, 2, 4, 8])
def test_supercentre_is_scalar(n):
    assert supercentre(n) == alg(n, one(n))
    assert verify_supercentre(n).passed


def test_dimension_cap():
    with pytest.raises(DimensionCapError):
        supercentre(12)


def test_hyperplane_examples():
    n = 2
    w = [1, 0]
    got = hyperplane_decompose(one(n), w)
    assert (got.a, got.b) == (one(n), Multivector.zero(n))
    got = hyperplane_decompose(e(n, 1), w)
    assert (got.a, got.b) == (Multivector.zero(n), one(n))
    got = hyperplane_decompose(Multivector.blade(n, 0b11), w)
    assert (got.a, got.b) == (Multivector.zero(n), e(n, 2))


def test_hyperplane_isotropic_w():
    w = [1, -i, 0]
    c = Multivector(3, {0b111: G(1), 0b010: G(2, 1), 0: G(3)})
    got = hyperplane_decompose(c, w)
    assert got.a + mul(bar(vector(w)), got.b) == c
    solved, rank = hyperplane_decompose_by_solve(c, w)
    assert solved == got and rank == 8
    assert verify_hyperplane(c, w).passed


def test_hyperplane_other_aux():
    w = [1, 2, 0]
    aux = [0, 1, 1]
    c = Multivector(3, {0b101: G(1), 0b011: G(0, 1)})
    got = hyperplane_decompose(c, w, aux)
    assert got.a + mul(vector(aux), got.b) == c
    assert verify_hyperplane(c, w, aux).passed


def test_hyperplane_rejects_bad_input():
    with pytest.raises(ZeroVectorError):
        hyperplane_decompose(one(2), [0, 0])
    with pytest.raises(ValueError):
        hyperplane_decompose(one(2), [1, 0], aux=[0, 1])


def test_intersection_examples():
    x, y = Subspace.coordinate(3, [1, 2]), Subspace.coordinate(3, [2, 3])
    assert intersect_algebra(subalgebra_span(x), subalgebra_span(y)) == subalgebra_span(Subspace.coordinate(3, [2]))
    a = subalgebra_span(x)
    assert intersect_algebra(a, a) == a
    meet = intersect_algebra(subalgebra_span(Subspace.coordinate(2, [1])), subalgebra_span(Subspace.coordinate(2, [2])))
    assert meet == alg(2, one(2))
    triple = [Subspace.coordinate(4, [1, 2]), Subspace.coordinate(4, [2, 3]), Subspace.coordinate(4, [2, 4])]
    res = verify_intersection_theorem(triple)
    assert res.passed and res.dims["meet"] == 1 and res.dims["algebra"] == 2
    assert verify_intersection_theorem([Subspace.coordinate(4, [1])]).passed


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_supercommutant_matches_intersection_route(n):
    rng = make_rng([7, n])
    for d in range(n + 1):
        for _ in range(3):
            w = random_subspace(n, d, rng)
            assert supercommutant(w) == supercommutant_by_intersections(w)
    if n % 2 == 0:
        w = random_subspace(n, n // 2, rng, kind="isotropic")
        assert supercommutant(w) == supercommutant_by_intersections(w)


def test_basis_independence():
    rng = make_rng(11)
    for d in range(4):
        w = random_subspace(4, d, rng)
        regen = span(random_recombination(list(w.basis), rng), 4)
        assert regen == w
        assert supercommutant(regen) == supercommutant(w)


@given(st.data())
def test_twisted_duality_property(data):
    n = data.draw(st.integers(0, 4))
    w = data.draw(subspaces(n))
    comm = supercommutant(w)
    assert comm == subalgebra_span(orthogonal_complement(w))
    assert comm.dim == 1 << (n - w.dim)
    assert comm.is_graded()


@given(st.data())
def test_hyperplane_property(data):
    n = data.draw(st.integers(1, 4))
    c = data.draw(multivectors(n))
    w = [G(k + 1, k % 2) for k in range(n)]
    rec = verify_hyperplane(c, w)
    assert rec.passed, rec.details


def test_hyperplane_random_batch():
    rng = make_rng(3)
    for n in range(2, 6):
        for _ in range(5):
            c = random_multivector(rng, n)
            w = random_subspace(n, 1, rng).basis[0]
            assert verify_hyperplane(c, w).passed
