"""Acceptance suite: eight criteria, exact equality throughout.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

import itertools
import time

import pytest

from supercliff.clifford import Multivector, blade_product
from supercliff.duality import (
    subalgebra_span,
    supercommutant,
    supercommutant_by_intersections,
    verify_hyperplane,
    verify_intersection_theorem,
    verify_supercentre,
    verify_twisted_duality,
)
from supercliff.expectations import (
    ExpectationOperator,
    verify_expectation_properties,
    verify_positivity_identity,
    verify_stabilization,
)
from supercliff.harness import default_literals, parse_config, run, strip_timing
from supercliff.sampling import make_rng, random_multivector, random_rationals, random_subspace
from supercliff.supertensor import CoordinateSplit, verify_phi_isomorphism, verify_tensor_duality

SEED = 20240601
RESULTS = {}


class Outcome:
    def __init__(self, ok, detail, elapsed, limit):
        self.ok, self.detail, self.elapsed, self.limit = ok, detail, elapsed, limit

    @property
    def passed(self):
        return self.ok and (self.limit is None or self.elapsed < self.limit)

    def line(self, key):
        limit = "" if self.limit is None else " (limit %ds)" % self.limit
        return "%s criterion %d: %s [%.1fs%s]" % ("PASS" if self.passed else "FAIL", key, self.detail, self.elapsed, limit)


def timed(key, limit):
    def wrap(fn):
        def inner():
            t0 = time.perf_counter()
            ok, detail = fn()
            out = Outcome(ok, detail, time.perf_counter() - t0, limit)
            RESULTS[key] = out
            return out
        inner.__name__ = fn.__name__
        return inner
    return wrap


def _first_failure(records):
    bad = [r for r in records if not r.passed]
    return bad[0] if bad else None


@timed(1, 60)
def twisted_duality():
    records = []
    for n in range(2, 7):
        rng = make_rng([SEED, 1, n])
        spaces = list(default_literals(n))
        for d in range(n + 1):
            spaces += [random_subspace(n, d, rng) for _ in range(25)]
        for w in spaces:
            res = verify_twisted_duality(w)
            # dim check is inside the record; repeat it against the formula here
            res.passed = res.passed and supercommutant(w).dim == 1 << (n - w.dim)
            records.append(res)
    bad = _first_failure(records)
    return bad is None, "%d subspaces, C(W)' = C(W^⊥) with dim 2^(n-d)" % len(records) if bad is None else bad.to_dict()


@timed(2, 10)
def hyperplane():
    records = []
    for n in range(2, 7):
        rng = make_rng([SEED, 2, n])
        for _ in range(50):
            c = random_multivector(rng, n)
            w = random_subspace(n, 1, rng).basis[0]
            records.append(verify_hyperplane(c, w))
    bad = _first_failure(records)
    return bad is None, "%d (c, w) pairs reconstruct, lie in C(w^⊥), match the direct solve" % len(records) if bad is None else bad.to_dict()


@timed(3, 30)
def intersections():
    records = []
    for n in range(3, 7):
        rng = make_rng([SEED, 3, n])

        def draw():
            return random_subspace(n, int(rng.integers(0, n + 1)), rng)

        records += [verify_intersection_theorem([draw(), draw()]) for _ in range(100)]
        records += [verify_intersection_theorem([draw(), draw(), draw()]) for _ in range(30)]
    bad = _first_failure(records)
    return bad is None, "%d families, C(X) ∩ C(Y) = C(X ∩ Y)" % len(records) if bad is None else bad.to_dict()


@timed(4, 10)
def supercentre():
    records = [verify_supercentre(n) for n in range(9)]
    bad = _first_failure(records)
    return bad is None, "supercentre = C1 for n = 0..8" if bad is None else bad.to_dict()


@timed(5, 30)
def tensor():
    records = []
    for n in range(2, 7):
        rng = make_rng([SEED, 5, n])
        for k in range(1 << n):
            split = CoordinateSplit.from_indices(n, [i + 1 for i in range(n) if k >> i & 1])
            iso = verify_phi_isomorphism(split.x, split.y, rng, samples=200)
            iso.passed = iso.passed and iso.dims["rank"] == 1 << n
            records += [iso, verify_tensor_duality(split.x, split.y)]
    bad = _first_failure(records)
    return bad is None, "%d coordinate splits, Phi iso + graded duality" % (len(records) // 2) if bad is None else bad.to_dict()


def _in_subalgebra(z, rng):
    alg = subalgebra_span(z)
    out = Multivector.zero(z.ambient_dim)
    for c, b in zip(random_rationals(rng, alg.dim), alg.basis):
        out = out + b.scale(c)
    return out


@timed(6, 60)
def expectations():
    records = []
    for n in range(2, 6):
        rng = make_rng([SEED, 6, n])
        # four subspaces M of growing dimension share the 100 bimodule triples
        for k in range(4):
            m = random_subspace(n, 1 + k % n, rng, kind="real")
            e = ExpectationOperator.from_subspace(m)
            records.append(verify_expectation_properties(e, rng, samples=25))
        for _ in range(100):
            u = random_subspace(n, 1, rng, kind="real").basis[0]
            records.append(verify_positivity_identity(u, random_multivector(rng, n, real=True)))
        for _ in range(50):
            x = random_subspace(n, int(rng.integers(0, n + 1)), rng, kind="real")
            nsp = random_subspace(n, int(rng.integers(0, n + 1)), rng, kind="real")
            records.append(verify_stabilization(_in_subalgebra(nsp, rng), x, nsp))
    bad = _first_failure(records)
    return bad is None, "%d records: projectors, bimodule, positivity, stabilization" % len(records) if bad is None else bad.to_dict()


def _rewrite(word):
    w, sign, i = list(word), 1, 0
    while i < len(w) - 1:
        if w[i] == w[i + 1]:
            del w[i:i + 2]
            i = max(i - 1, 0)
        elif w[i] > w[i + 1]:
            w[i], w[i + 1] = w[i + 1], w[i]
            sign = -sign
            i = max(i - 1, 0)
        else:
            i += 1
    return sign, sum(1 << k for k in w)


@timed(7, None)
def oracles():
    for n in range(4):
        for x, y in itertools.product(range(1 << n), repeat=2):
            word = [k for k in range(n) if x >> k & 1] + [k for k in range(n) if y >> k & 1]
            if blade_product(x, y) != _rewrite(word):
                return False, "blade product mismatch at n=%d: %d * %d" % (n, x, y)
    checked = 0
    for n in range(1, 5):
        rng = make_rng([SEED, 7, n])
        spaces = list(default_literals(n)) + [random_subspace(n, d, rng) for d in range(n + 1) for _ in range(4)]
        for w in spaces:
            if supercommutant(w) != supercommutant_by_intersections(w):
                return False, "supercommutant mismatch for %s" % w.to_literal()
            checked += 1
    return True, "blade products exhaustive for n <= 3; %d supercommutants match the intersection route" % checked


@timed(8, None)
def determinism():
    doc = {"dim": 3, "random": {"count": 3, "seed": SEED}, "tensor_pairing": "complement",
           "subspaces": [s.to_literal() for s in default_literals(3)]}
    first = strip_timing(run(parse_config(doc)))
    second = strip_timing(run(parse_config(doc)))
    same = first == second and first["summary"]["failed"] == 0
    return same, "two seeded runs give identical reports (%d records)" % first["summary"]["total"]


CRITERIA = [twisted_duality, hyperplane, intersections, supercentre, tensor, expectations, oracles, determinism]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(criterion):
    out = criterion()
    assert out.ok, out.detail
    if out.limit is not None:
        assert out.elapsed < out.limit, "took %.1fs" % out.elapsed


if __name__ == "__main__":
    for k, criterion in enumerate(CRITERIA, 1):
        print(criterion().line(k), flush=True)
