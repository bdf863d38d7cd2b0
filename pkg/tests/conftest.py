import hypothesis.strategies as st
from gmpy2 import mpq
from hypothesis import settings

from supercliff.clifford import Multivector
from supercliff.scalar import GaussianRational

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def scalars(draw, real=False):
    re_ = draw(small_rationals)
    im_ = 0 if real else draw(small_rationals)
    return GaussianRational(mpq(re_), mpq(im_))


@st.composite
def multivectors(draw, n, real=False, max_terms=6):
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_terms, unique=True))
    return Multivector(n, {m: draw(scalars(real=real)) for m in masks})


@st.composite
def vectors(draw, n, real=False):
    return [draw(scalars(real=real)) for _ in range(n)]


@st.composite
def subspaces(draw, n, real=False):
    from supercliff.subspace import span

    k = draw(st.integers(0, n))
    return span([draw(vectors(n, real=real)) for _ in range(k)], n)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[key].line(key))
