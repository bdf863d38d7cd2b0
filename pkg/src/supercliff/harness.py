"""
Run configurations, seeded dispatch of the verification checks, and JSON
reports.

A configuration looks like::

    {"dim": 3, "checks": ["duality", "supercentre"],
     "subspaces": [[["1", "-1i", "0"]]],
     "random": {"count": 5, "dims": [1, 2], "seed": 42},
     "coeff_bound": 5}

Every scalar travels as an exact string, so reports never round.
"""

import json
import time
from dataclasses import dataclass, field
from typing import Optional

from .clifford import Multivector
from .duality import (
    DEFAULT_MAX_DIM,
    HARD_MAX_DIM,
    DimensionCapError,
    subalgebra_span,
    subalgebra_span_from,
    supercommutant,
    supercommutant_from,
    verify_hyperplane,
    verify_intersection_theorem,
    verify_supercentre,
    verify_twisted_duality,
)
from .expectations import (
    ExpectationOperator,
    verify_expectation_properties,
    verify_positive_decomposition,
    verify_positivity_identity,
    verify_real_duality,
    verify_stabilization,
)
from .report import CheckResult
from .sampling import (
    DEFAULT_BOUND,
    RNG_ALGORITHM,
    make_rng,
    random_multivector,
    random_rationals,
    random_recombination,
    random_row,
    random_subspace,
)
from .scalar import ParseError
from .subspace import Subspace, intersect, orthogonal_complement
from .supertensor import CoordinateSplit, verify_phi_isomorphism, verify_tensor_duality

__all__ = [
    "CHECKS",
    "ConfigError",
    "MalformedRationalError",
    "RunConfig",
    "parse_config",
    "random_subspace",
    "run",
    "default_literals",
    "strip_timing",
]

CHECKS = ("duality", "expectation", "hyperplane", "intersection", "supercentre", "tensor")


class ConfigError(ValueError):
    """Schema violation; ``path`` locates the offending field."""

    def __init__(self, path, message):
        super().__init__("%s: %s" % (path, message))
        self.path = path


class MalformedRationalError(ConfigError):
    pass


@dataclass
class RunConfig:
    ambient_dim: int
    checks: list
    subspaces: list = field(default_factory=list)
    count: int = 0
    dims: Optional[list] = None
    seed: Optional[int] = None
    coeff_bound: int = DEFAULT_BOUND
    max_dim: int = DEFAULT_MAX_DIM
    output: Optional[str] = None
    # "consecutive": literals pair up as (X, Y); "complement": each X with X^⊥
    tensor_pairing: str = "consecutive"

    def echo(self):
        out = {
            "dim": self.ambient_dim,
            "checks": list(self.checks),
            "subspaces": [s.to_literal() for s in self.subspaces],
            "random": {"count": self.count, "seed": self.seed, "rng": RNG_ALGORITHM},
            "coeff_bound": self.coeff_bound,
            "tensor_pairing": self.tensor_pairing,
        }
        if self.dims is not None:
            out["random"]["dims"] = list(self.dims)
        return out


def _require(cond, path, message):
    if not cond:
        raise ConfigError(path, message)


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def parse_config(text):
    """Validate a JSON configuration document and build a ``RunConfig``."""
    try:
        doc = json.loads(text) if isinstance(text, (str, bytes)) else text
    except json.JSONDecodeError as exc:
        raise ConfigError("$", "invalid JSON: %s" % exc) from None
    _require(isinstance(doc, dict), "$", "expected an object")
    known = {"dim", "checks", "subspaces", "random", "coeff_bound", "max_dim", "report", "tensor_pairing"}
    for key in doc:
        _require(key in known, "$.%s" % key, "unknown field")

    _require("dim" in doc, "$.dim", "required")
    n = doc["dim"]
    _require(_is_int(n), "$.dim", "expected an integer")
    max_dim = doc.get("max_dim", DEFAULT_MAX_DIM)
    _require(_is_int(max_dim), "$.max_dim", "expected an integer")
    if max_dim > HARD_MAX_DIM:
        raise DimensionCapError("max_dim %d exceeds the hard cap %d" % (max_dim, HARD_MAX_DIM))
    if not 0 <= n <= max_dim:
        raise DimensionCapError("dim %d outside 0..%d" % (n, max_dim))

    checks = doc.get("checks", list(CHECKS))
    _require(isinstance(checks, list) and checks, "$.checks", "expected a nonempty list")
    for i, c in enumerate(checks):
        _require(c in CHECKS, "$.checks[%d]" % i, "unknown check %r" % (c,))

    subspaces = []
    raw = doc.get("subspaces", [])
    _require(isinstance(raw, list), "$.subspaces", "expected a list")
    for i, rows in enumerate(raw):
        path = "$.subspaces[%d]" % i
        _require(isinstance(rows, list), path, "expected a list of rows")
        for j, row in enumerate(rows):
            _require(isinstance(row, list), "%s[%d]" % (path, j), "expected a row")
            _require(len(row) == n, "%s[%d]" % (path, j), "row length %d != dim %d" % (len(row), n))
            for k, entry in enumerate(row):
                _require(isinstance(entry, str), "%s[%d][%d]" % (path, j, k), "scalars must be strings")
        try:
            subspaces.append(Subspace.from_literal(rows, n))
        except ParseError as exc:
            raise MalformedRationalError(path, str(exc)) from None

    rnd = doc.get("random", {})
    _require(isinstance(rnd, dict), "$.random", "expected an object")
    for key in rnd:
        _require(key in ("count", "dims", "seed", "rng"), "$.random.%s" % key, "unknown field")
    count = rnd.get("count", 0)
    _require(_is_int(count) and count >= 0, "$.random.count", "expected a nonnegative integer")
    seed = rnd.get("seed")
    if count > 0:
        _require(seed is not None, "$.random.seed", "required when count > 0")
    if seed is not None:
        _require(_is_int(seed) and 0 <= seed < 2 ** 64, "$.random.seed", "expected a 64-bit unsigned integer")
    if "rng" in rnd:
        _require(rnd["rng"] == RNG_ALGORITHM, "$.random.rng", "only %s is supported" % RNG_ALGORITHM)
    dims = rnd.get("dims")
    if dims is not None:
        _require(isinstance(dims, list), "$.random.dims", "expected a list")
        for i, d in enumerate(dims):
            _require(_is_int(d) and 0 <= d <= n, "$.random.dims[%d]" % i, "expected 0 <= d <= dim")

    bound = doc.get("coeff_bound", DEFAULT_BOUND)
    _require(_is_int(bound) and bound >= 1, "$.coeff_bound", "expected a positive integer")
    report = doc.get("report")
    _require(report is None or isinstance(report, str), "$.report", "expected a path")

    pairing = doc.get("tensor_pairing", "consecutive")
    _require(pairing in ("consecutive", "complement"), "$.tensor_pairing", "expected 'consecutive' or 'complement'")

    return RunConfig(n, list(checks), subspaces, count, dims, seed, bound, max_dim, report, pairing)


def default_literals(n):
    """W = 0, W = V_C, a real line and an isotropic line (when n >= 2)."""
    out = [Subspace.zero(n), Subspace.full(n)]
    if n >= 1:
        out.append(Subspace.coordinate(n, [1]))
    if n >= 2:
        out.append(Subspace.from_literal([["1", "-1i"] + ["0"] * (n - 2)], n))
    return out


# ---- individual checks; each yields CheckResult records ----


def _check_duality(cfg, rng):
    n = cfg.ambient_dim
    for w in cfg.subspaces:
        yield verify_twisted_duality(w, cfg.max_dim)
    dims = cfg.dims if cfg.dims is not None else range(n + 1)
    for d in dims:
        for _ in range(cfg.count):
            w = random_subspace(n, d, rng, cfg.coeff_bound)
            res = verify_twisted_duality(w, cfg.max_dim)
            # a different generating set must give the same algebras
            gens = random_recombination(list(w.basis), rng)
            same = (
                supercommutant_from(gens, n, cfg.max_dim) == supercommutant(w, cfg.max_dim)
                and subalgebra_span_from(gens, n) == subalgebra_span(w)
            )
            res.details["basis_independent"] = same
            if not same:
                res.fail(str([[str(c) for c in g] for g in gens]), "basis dependence")
            yield res


def _check_supercentre(cfg, rng):
    yield verify_supercentre(cfg.ambient_dim, cfg.max_dim)


def _check_hyperplane(cfg, rng):
    n = cfg.ambient_dim
    if n == 0:
        return
    targets = [row for w in cfg.subspaces for row in w.basis]
    while len(targets) < len(cfg.subspaces) + cfg.count:
        row = random_row(rng, n, cfg.coeff_bound)
        if any(row):
            targets.append(row)
    for w in targets:
        c = random_multivector(rng, n, 8, cfg.coeff_bound)
        yield verify_hyperplane(c, w)


def _check_intersection(cfg, rng):
    n = cfg.ambient_dim
    if cfg.subspaces:
        yield verify_intersection_theorem(cfg.subspaces)
    for i in range(cfg.count):
        size = 2 + i % 3
        family = [random_subspace(n, int(rng.integers(0, n + 1)), rng, cfg.coeff_bound) for _ in range(size)]
        yield verify_intersection_theorem(family)


def _tensor_pairs(cfg):
    lits = list(cfg.subspaces)
    if cfg.tensor_pairing == "complement":
        for x in lits:
            y = orthogonal_complement(x)
            # a degenerate X (X ∩ X^⊥ != 0) gives no direct sum to test
            if intersect(x, y).dim == 0:
                yield x, y
        return
    while lits:
        x = lits.pop(0)
        y = lits.pop(0) if lits else orthogonal_complement(x)
        yield x, y


def _check_tensor(cfg, rng):
    n = cfg.ambient_dim
    for x, y in _tensor_pairs(cfg):
        yield verify_phi_isomorphism(x, y, rng, samples=50, bound=cfg.coeff_bound)
        yield verify_tensor_duality(x, y)
    if cfg.count:
        for k in range(1 << n):
            split = CoordinateSplit.from_indices(n, [i + 1 for i in range(n) if k >> i & 1])
            yield verify_phi_isomorphism(split.x, split.y, rng, samples=cfg.count, bound=cfg.coeff_bound)
            yield verify_tensor_duality(split.x, split.y)


def _check_expectation(cfg, rng):
    n = cfg.ambient_dim
    if n == 0:
        return
    bound = cfg.coeff_bound
    spaces = [w for w in cfg.subspaces if w.is_real()]
    spaces += [random_subspace(n, 1 + i % n, rng, bound, kind="real") for i in range(cfg.count)]
    for m in spaces:
        e = ExpectationOperator.from_subspace(m)
        yield verify_real_duality(m)
        if not e.ortho_basis:
            continue
        yield verify_expectation_properties(e, rng, samples=10, bound=bound, matrix_max_dim=6)
        a = random_multivector(rng, n, 6, bound, real=True)
        yield verify_positivity_identity(e.ortho_basis[0], a)
        yield verify_positive_decomposition(e, a)
        x = random_subspace(n, int(rng.integers(0, n + 1)), rng, bound, kind="real")
        nsp = random_subspace(n, int(rng.integers(0, n + 1)), rng, bound, kind="real")
        a = _random_in_subalgebra(nsp, rng, bound)
        yield verify_stabilization(a, x, nsp)


def _random_in_subalgebra(z, rng, bound):
    alg = subalgebra_span(z)
    coeffs = random_rationals(rng, alg.dim, bound)
    out = Multivector.zero(z.ambient_dim)
    for c, b in zip(coeffs, alg.basis):
        out = out + b.scale(c)
    return out


_DISPATCH = {
    "duality": _check_duality,
    "expectation": _check_expectation,
    "hyperplane": _check_hyperplane,
    "intersection": _check_intersection,
    "supercentre": _check_supercentre,
    "tensor": _check_tensor,
}


def _error_record(check, exc):
    res = CheckResult(check, [], passed=False)
    return res.fail("%s: %s" % (type(exc).__name__, exc), "error")


def run(cfg):
    """Execute every requested check. Returns the report as a dict.

    Each check draws from its own PCG64 stream seeded by ``[seed, index]``, so
    a check's records do not depend on which other checks were requested.
    """
    start = time.perf_counter()
    records = []
    for check in sorted(set(cfg.checks)):
        rng = make_rng([cfg.seed or 0, CHECKS.index(check)])
        index = 0
        it = _DISPATCH[check](cfg, rng)
        while True:
            t0 = time.perf_counter()
            try:
                res = next(it)
            except StopIteration:
                break
            except Exception as exc:  # a crash is reported, never swallowed silently
                res = _error_record(check, exc)
                it = iter(())
            res.elapsed = round(time.perf_counter() - t0, 6)
            rec = res.to_dict()
            rec = {"check": check, "index": index, **rec}
            records.append(rec)
            index += 1
    failed = sum(1 for r in records if r["verdict"] == "FAIL")
    return {
        "config": cfg.echo(),
        "rng": RNG_ALGORITHM,
        "records": records,
        "summary": {"total": len(records), "failed": failed},
        "elapsed": round(time.perf_counter() - start, 6),
    }


def merge_reports(reports):
    records = [r for rep in reports for r in rep["records"]]
    failed = sum(1 for r in records if r["verdict"] == "FAIL")
    return {
        "runs": [rep["config"] for rep in reports],
        "rng": RNG_ALGORITHM,
        "records": records,
        "summary": {"total": len(records), "failed": failed},
        "elapsed": round(sum(rep["elapsed"] for rep in reports), 6),
    }


def strip_timing(report):
    """Copy of ``report`` without elapsed-time fields."""
    if isinstance(report, dict):
        return {k: strip_timing(v) for k, v in report.items() if k != "elapsed"}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report


def exit_code(report):
    return 0 if report["summary"]["failed"] == 0 else 1


def dumps(report):
    return json.dumps(report, indent=2, ensure_ascii=False, default=str)
