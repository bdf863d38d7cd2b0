"""
Sparse exact Gauss-Jordan elimination over Q(i).

Vectors are dicts ``{column: GaussianRational}`` with no zero entries. The
column order is the natural integer order, so the reduced basis is the unique
reduced row echelon form of the span.
"""

from .scalar import ONE, _Q0, _make

__all__ = ["EchelonBasis", "rref", "nullspace", "rank", "solve", "intersect_spans", "axpy"]


def axpy(target, coeff, src):
    """In place ``target += coeff * src`` on sparse dicts."""
    get = target.get
    p, q = coeff.re, coeff.im
    for k, v in src.items():
        r, s = v.re, v.im
        if q or s:
            re_ = p * r - q * s
            im_ = p * s + q * r
        else:
            re_ = p * r
            im_ = _Q0
        t = get(k)
        if t is not None:
            re_ += t.re
            im_ += t.im
        if re_ or im_:
            target[k] = _make(re_, im_)
        elif t is not None:
            del target[k]


class EchelonBasis:
    """Incrementally maintained reduced row echelon basis.

    With ``track=True`` every basis row also records its expression in terms
    of the tagged input vectors, and ``add`` reports linear dependencies among
    the inputs.
    """

    def __init__(self, track=False):
        self.track = track
        self.rows = {}
        self.combos = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec, tag=None):
        """Return ``(residual, combo)`` for ``vec`` against the current basis.

        ``combo`` expresses ``residual`` in terms of the input tags (only when
        tracking).
        """
        r = dict(vec)
        combo = {tag: ONE} if self.track else None
        rows = self.rows
        for p in [k for k in r if k in rows]:
            c = r.get(p)
            if c is None:
                continue
            axpy(r, -c, rows[p])
            if self.track:
                axpy(combo, -c, self.combos[p])
        return r, combo

    def contains(self, vec):
        r, _ = self.reduce(vec)
        return not r

    def add(self, vec, tag=None):
        """Insert ``vec``. Returns ``None`` if it was independent.

        Otherwise returns the dependency it created: a dict of input tags to
        coefficients summing to zero (empty dict when not tracking).
        """
        r, combo = self.reduce(vec, tag)
        if not r:
            return combo if self.track else {}
        p = min(r)
        inv = r[p].inv()
        if inv != ONE:
            r = {k: v * inv for k, v in r.items()}
            if self.track:
                combo = {k: v * inv for k, v in combo.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c is not None:
                axpy(row, -c, r)
                if self.track:
                    axpy(self.combos[q], -c, combo)
        self.rows[p] = r
        if self.track:
            self.combos[p] = combo
        return None

    def basis(self):
        """Reduced rows in increasing pivot order."""
        return [self.rows[p] for p in sorted(self.rows)]


def rref(vectors):
    eb = EchelonBasis()
    for v in vectors:
        eb.add(v)
    return eb.basis()


def rank(vectors):
    eb = EchelonBasis()
    for v in vectors:
        eb.add(v)
    return eb.rank


def nullspace(rows, ncols):
    """Basis (as sparse dicts) of ``{x : row . x = 0 for every row}``."""
    eb = EchelonBasis()
    for r in rows:
        eb.add(r)
        if eb.rank == ncols:
            return []
    pivots = eb.rows
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        x = {f: ONE}
        for p, row in pivots.items():
            c = row.get(f)
            if c is not None:
                x[p] = -c
        out.append(x)
    return out


def solve(columns, target):
    """Coefficients ``x`` (dict index -> value) with ``sum x_j columns[j] == target``.

    Returns ``None`` when ``target`` is not in the span. When the columns are
    dependent an arbitrary particular solution is returned.
    """
    eb = EchelonBasis(track=True)
    for j, col in enumerate(columns):
        eb.add(col, j)
    residual, combo = eb.reduce(target, tag=-1)
    if residual:
        return None
    # target - sum(...) == 0  =>  target = -sum over real tags
    return {k: -v for k, v in combo.items() if k != -1}


def intersect_spans(a_vectors, b_vectors):
    """Basis vectors spanning span(a) ∩ span(b) (not reduced)."""
    eb = EchelonBasis(track=True)
    a_list = list(a_vectors)
    for i, v in enumerate(a_list):
        eb.add(v, ("a", i))
    out = []
    for j, v in enumerate(b_vectors):
        dep = eb.add(v, ("b", j))
        if dep is None:
            continue
        w = {}
        for (side, i), c in dep.items():
            if side == "a":
                axpy(w, c, a_list[i])
        if w:
            out.append(w)
    return out
