"""
Exact verification of the defining relations of the generators E_i(p),
F_i(p), H_i(p) as operators on K^G(F_n^d), plus the generation and witness
checks.

Every relation is an identity "sum of words = sum of words" where a word
[g1, g2] means the convolution g1 * g2 (g1 acts first).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .combinat import compositions, diag
from .kclasses import (
    E,
    F,
    FlagFun,
    GenSymbol,
    H,
    KClass,
    UncoveredCase,
    _basis_cached,
    _cols_of,
    _rows_of,
    apply_class_sum,
    apply_expr,
    h_poly,
    op_equal,
    star_local,
)
from .symfunc import LaurentPoly, complete_h, elementary_e


@dataclass(frozen=True)
class RelationId:
    name: str
    indices: tuple
    params: tuple

    def __str__(self):
        return "%s[i=%s; %s]" % (self.name, ",".join(map(str, self.indices)),
                                 ",".join(map(str, self.params)))


@dataclass
class Report:
    """Outcome of one relation tag over a parameter window."""

    tag: str
    n: int
    d: int
    window: int | None = None
    count: int = 0
    ok: bool = True
    counterexample: str | None = None
    seconds: float = 0.0
    skipped: int = 0

    def record(self, rid, good):
        self.count += 1
        if not good and self.ok:
            self.ok = False
            self.counterexample = str(rid)

    def to_json(self):
        return {"tag": self.tag, "n": self.n, "d": self.d, "window": self.window,
                "count": self.count, "ok": self.ok, "counterexample": self.counterexample,
                "seconds": round(self.seconds, 3)}

    @classmethod
    def from_json(cls, data):
        return cls(data["tag"], data["n"], data["d"], data.get("window"), data["count"],
                   data["ok"], data.get("counterexample"), data.get("seconds", 0.0))


def _w(*gens):
    return list(gens)


# relation builders: (indices, p, q) -> (lhs, rhs) as lists of (coeff, word)

def _r11(i, p, q, n):
    return [(1, _w(E(i, p), E(i, q)))], [(-1, _w(E(i, q - 1), E(i, p + 1)))]


def _r12(i, p, q, n):
    return ([(1, _w(E(i + 1, p), E(i, q)))],
            [(1, _w(E(i, q), E(i + 1, p))), (-1, _w(E(i, q + 1), E(i + 1, p - 1)))])


def _r13(i, j, p, q, n):
    return [(1, _w(E(i, p), E(j, q)))], [(1, _w(E(j, q), E(i, p)))]


def _r21(i, p, q, n):
    return [(1, _w(F(i, p), F(i, q)))], [(-1, _w(F(i, q + 1), F(i, p - 1)))]


def _r22(i, p, q, n):
    return ([(1, _w(F(i, p), F(i + 1, q)))],
            [(1, _w(F(i + 1, q), F(i, p))), (-1, _w(F(i + 1, q - 1), F(i, p + 1)))])


def _r23(i, j, p, q, n):
    return [(1, _w(F(i, p), F(j, q)))], [(1, _w(F(j, q), F(i, p)))]


def _r31(i, j, p, q, n):
    return [(1, _w(E(i, p), F(j, q)))], [(1, _w(F(j, q), E(i, p)))]


def _comm(i, p, q):
    return [(1, _w(E(i, p), F(i, q))), (-1, _w(F(i, q), E(i, p)))]


def _r32(i, p, q, p2, q2, n):
    return _comm(i, p, q), _comm(i, p2, q2)


def _r33(i, p, q, n):
    return _comm(i, p, q), [(1, _w(H(i, p + q)))]


def _r41(i, j, p, q, n):
    return [(1, _w(H(i, p), H(j, q)))], [(1, _w(H(j, q), H(i, p)))]


def _r51(p, q, n):
    return ([(1, _w(H(n, p), E(n - 1, q)))],
            [(1, _w(E(n - 1, q), H(n, p))), (-1, _w(E(n - 1, q + 1), H(n, p - 1)))])


def _r52(i, p, q, n):
    return [(1, _w(H(i, p), E(i, q)))], [(-1, _w(E(i, q - 1), H(i, p + 1)))]


def _r53(i, p, q, n):
    return [(1, _w(H(n, p), E(i, q)))], [(1, _w(E(i, q), H(n, p)))]


def _r61(p, q, n):
    return ([(1, _w(F(n - 1, p), H(n, q)))],
            [(1, _w(H(n, q), F(n - 1, p))), (-1, _w(H(n, q - 1), F(n - 1, p + 1)))])


def _r62(i, p, q, n):
    return [(1, _w(H(i, p), F(i, q)))], [(-1, _w(F(i, q + 1), H(i, p - 1)))]


def _r63(i, p, q, n):
    return [(1, _w(H(n, p), F(i, q)))], [(1, _w(F(i, q), H(n, p)))]


def _r51a(i, p, q, n):
    return ([(1, _w(H(i, p), E(i - 1, q)))],
            [(1, _w(E(i - 1, q), H(i, p))), (-1, _w(E(i - 1, q + 1), H(i, p - 1)))])


def _r51b(i, p, q, n):
    return ([(1, _w(E(i, q), H(i - 1, p)))],
            [(1, _w(H(i - 1, p), E(i, q))), (-1, _w(H(i - 1, p + 1), E(i, q - 1)))])


def _r61a(i, p, q, n):
    return ([(1, _w(F(i - 1, p), H(i, q)))],
            [(1, _w(H(i, q), F(i - 1, p))), (-1, _w(H(i, q - 1), F(i - 1, p + 1)))])


def _r61b(i, p, q, n):
    return ([(1, _w(H(i - 1, q), F(i, p)))],
            [(1, _w(F(i, p), H(i - 1, q))), (-1, _w(F(i, p - 1), H(i - 1, q + 1)))])


def _r53a(i, j, p, q, n):
    return [(1, _w(H(i, p), E(j, q)))], [(1, _w(E(j, q), H(i, p)))]


def _r63a(i, j, p, q, n):
    return [(1, _w(H(i, p), F(j, q)))], [(1, _w(F(j, q), H(i, p)))]


def _zero_ee(i, p, n):
    return [(1, _w(E(i, p), E(i, p + 1)))], []


RELATION_NAMES = (
    "1.1", "1.2", "1.3", "2.1", "2.2", "2.3", "3.1", "3.2", "3.3", "4.1",
    "5.1", "5.2", "5.3", "6.1", "6.2", "6.3",
    "5.1'", "5.1''", "6.1'", "6.1''", "5.3'", "6.3'", "EE0",
)


def relation_instances(n, window=2, names=None):
    """Yield (RelationId, lhs, rhs) for every relation instance with parameters in [-window, window]."""
    want = set(names) if names is not None else set(RELATION_NAMES)
    rng = range(-window, window + 1)
    pq = list(product(rng, rng))
    steps = range(1, n)

    def emit(name, idx, params, pair):
        if name in want:
            return (RelationId(name, idx, params), pair[0], pair[1])

    out = []
    for i in steps:
        for p, q in pq:
            out.append(emit("1.1", (i,), (p, q), _r11(i, p, q, n)))
            out.append(emit("2.1", (i,), (p, q), _r21(i, p, q, n)))
            out.append(emit("3.3", (i,), (p, q), _r33(i, p, q, n)))
            out.append(emit("5.2", (i,), (p, q), _r52(i, p, q, n)))
            out.append(emit("6.2", (i,), (p, q), _r62(i, p, q, n)))
        for p in rng:
            out.append(emit("EE0", (i,), (p,), _zero_ee(i, p, n)))
    for i in range(1, n - 1):
        for p, q in pq:
            out.append(emit("1.2", (i,), (p, q), _r12(i, p, q, n)))
            out.append(emit("2.2", (i,), (p, q), _r22(i, p, q, n)))
            out.append(emit("5.3", (i,), (p, q), _r53(i, p, q, n)))
            out.append(emit("6.3", (i,), (p, q), _r63(i, p, q, n)))
    for i in steps:
        for j in steps:
            if abs(i - j) > 1:
                for p, q in pq:
                    out.append(emit("1.3", (i, j), (p, q), _r13(i, j, p, q, n)))
                    out.append(emit("2.3", (i, j), (p, q), _r23(i, j, p, q, n)))
                    out.append(emit("5.3'", (i, j), (p, q), _r53a(i, j, p, q, n)))
                    out.append(emit("6.3'", (i, j), (p, q), _r63a(i, j, p, q, n)))
            if i != j:
                for p, q in pq:
                    out.append(emit("3.1", (i, j), (p, q), _r31(i, j, p, q, n)))
    for i in steps:
        for p, q in pq:
            for p2 in rng:
                q2 = p + q - p2
                if p2 != p and q2 in rng:
                    out.append(emit("3.2", (i,), (p, q, p2, q2), _r32(i, p, q, p2, q2, n)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for p, q in pq:
                out.append(emit("4.1", (i, j), (p, q), _r41(i, j, p, q, n)))
    if n >= 2:
        for p, q in pq:
            out.append(emit("5.1", (n,), (p, q), _r51(p, q, n)))
            out.append(emit("6.1", (n,), (p, q), _r61(p, q, n)))
    for i in range(2, n):
        for p, q in pq:
            out.append(emit("5.1'", (i,), (p, q), _r51a(i, p, q, n)))
            out.append(emit("5.1''", (i,), (p, q), _r51b(i, p, q, n)))
            out.append(emit("6.1'", (i,), (p, q), _r61a(i, p, q, n)))
            out.append(emit("6.1''", (i,), (p, q), _r61b(i, p, q, n)))
    return [x for x in out if x is not None]


def verify_relation(tag, n, d, window=3):
    """Check every instance of one relation tag on the full Schur-box basis of K^G(F_n^d)."""
    t0 = time.perf_counter()
    rep = Report(tag, n, d, window)
    for rid, lhs, rhs in relation_instances(n, window, [tag]):
        rep.record(rid, op_equal(lhs, rhs, n, d))
    rep.seconds = time.perf_counter() - t0
    return rep


def verify_all(n, d, window=3, tags=None):
    """One Report per relation tag; the relations hold iff every report is ok."""
    return [verify_relation(t, n, d, window) for t in (tags or RELATION_NAMES)]


def all_ok(reports):
    return all(r.ok for r in reports)


def plactic_instances(n):
    out = []
    e = lambda i: E(i, 0)
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                out.append((RelationId("plactic-a", (i, j), ()),
                            [(1, [e(i), e(j)])], [(1, [e(j), e(i)])]))
    for i in range(1, n - 1):
        out.append((RelationId("plactic-b", (i,), ()),
                    [(1, [e(i), e(i), e(i + 1)])], [(1, [e(i), e(i + 1), e(i)])]))
        out.append((RelationId("plactic-c", (i,), ()),
                    [(1, [e(i + 1), e(i), e(i + 1)])], [(1, [e(i), e(i + 1), e(i + 1)])]))
    return out


def verify_plactic(n, d):
    """The degree-zero E's satisfy the plactic (Knuth) relations; one Report over all three tags."""
    t0 = time.perf_counter()
    rep = Report("plactic", n, d)
    for rid, lhs, rhs in plactic_instances(n):
        rep.record(rid, op_equal(lhs, rhs, n, d))
    rep.seconds = time.perf_counter() - t0
    return rep


def star_matches_op(c1, c2, n, d):
    """
    Compare the closed form of c1 * c2 against the composite operator.
    Returns True/False, or None when no closed form is known.
    """
    try:
        terms = star_local(c1, c2)
    except UncoveredCase:
        return None
    for v in _basis_cached(n, d):
        a = apply_expr([(1, [c1, c2])], v)
        b = apply_class_sum(terms or [], v)
        if a != b:
            return False
    return True


def local_pairs(n, d, window=1):
    """All composable pairs of local generators acting on K^G(F_n^d), p, q in [-window, window]."""
    rng = range(-window, window + 1)
    singles = []
    for kind in "EFH":
        top = n if kind == "H" else n - 1
        dd = d if kind == "H" else d - 1
        if dd < 0:
            continue
        for mu in compositions(dd, n):
            for k in range(1, top + 1):
                singles.append((kind, k, mu))
    out = []
    for (k1, i1, m1), (k2, i2, m2) in product(singles, repeat=2):
        g1, g2 = GenSymbol(k1, i1, 0, m1), GenSymbol(k2, i2, 0, m2)
        if _cols_of(g1) != _rows_of(g2):
            continue
        for p, q in product(rng, rng):
            out.append((GenSymbol(k1, i1, p, m1), GenSymbol(k2, i2, q, m2)))
    return out


def verify_star_vs_op(n, d, window=1):
    """Every closed-form local product equals the composite operator; uncovered pairs are skipped."""
    t0 = time.perf_counter()
    rep = Report("star", n, d, window)
    skipped = 0
    for c1, c2 in local_pairs(n, d, window):
        r = star_matches_op(c1, c2, n, d)
        if r is None:
            skipped += 1
            continue
        rep.record("%s * %s" % (c1, c2), r)
    rep.skipped = skipped
    rep.seconds = time.perf_counter() - t0
    return rep


# generation

def _target_polys(mu, deg):
    """Per block b: e_j(X_b), h_j(X_b), h_j(X_b^{-1}) for j <= deg, and e_{mu_b}(X_b)^{-1}."""
    d = sum(mu)
    out = []
    start = 0
    for b, m in enumerate(mu):
        X = list(range(start, start + m))
        start += m
        if not m:
            continue
        for j in range(1, deg + 1):
            out.append(("e_%d(X%d)" % (j, b + 1), elementary_e(j, X, d)))
            out.append(("h_%d(X%d)" % (j, b + 1), complete_h(j, X, d)))
            out.append(("h_%d(X%d^-1)" % (j, b + 1), complete_h(j, X, d, inverse=True)))
        out.append(("e_%d(X%d)^-1" % (m, b + 1), elementary_e(m, X, d, inverse=True)))
    return [(name, p) for name, p in out if p]


def _h_generators(mu, rmax):
    """Non-zero H_{mu,k}(r), |r| <= rmax, as (degree, poly); each is homogeneous of degree r."""
    n = len(mu)
    seen = {}
    for k in range(1, n + 1):
        for r in range(-rmax, rmax + 1):
            p = h_poly(mu, k, r)
            if p and p not in seen:
                seen[p] = r
    return [(r, p) for p, r in seen.items()]


def _products_of_degree(gens, length, degree, d, weight):
    """Products of at most ``length`` generators with total degree ``degree`` and sum of |r| = weight."""
    gens = sorted(gens, key=lambda t: t[0])
    out = []

    def rec(start, left, deg, w, poly):
        if deg == degree and w == weight:
            out.append(poly)
        if left == 0:
            return
        for t in range(start, len(gens)):
            r, g = gens[t]
            nw = w + abs(r)
            # the remaining factors must close the degree gap within the weight budget
            if nw > weight or abs(degree - deg - r) > weight - nw:
                continue
            rec(t, left - 1, deg + r, nw, poly * g)

    rec(0, length, 0, 0, LaurentPoly.one(d))
    return out


class _Echelon:
    """Incremental sparse row echelon form over Q, keyed by pivot monomial."""

    def __init__(self):
        self.rows = {}

    def reduce(self, vec):
        vec = dict(vec)
        while vec:
            piv = max(vec)
            row = self.rows.get(piv)
            if row is None:
                return vec
            f = vec[piv] / row[piv]
            for m, c in row.items():
                x = vec.get(m, 0) - f * c
                if x:
                    vec[m] = x
                else:
                    vec.pop(m, None)
        return vec

    def add(self, vec):
        r = self.reduce(vec)
        if r:
            self.rows[max(r)] = r
            return True
        return False


def _as_vec(p):
    return {e: Fraction(c) for e, c in p.terms.items()}


def generation_check(mu, deg=3, length=None):
    """
    Check that the diagonal H-polynomials of type mu generate the block
    generators e_j(X_b), h_j(X_b^{+-1}) (j <= deg) and e_{mu_b}(X_b)^{-1}:
    each target must be a rational linear combination of products of at most
    ``length`` (default deg + 1) H_{mu,k}(r) with |r| <= deg + max(mu).
    Returns a dict name -> bool.
    """
    mu = tuple(mu)
    d = sum(mu)
    if length is None:
        length = deg + 1
    spans = {}
    return {name: h_span_contains(mu, t, deg, length, _cache=spans)
            for name, t in _target_polys(mu, deg)}


def h_span_contains(mu, target, deg=3, length=None, _cache=None):
    """
    Whether a homogeneous polynomial lies in the rational span of products of
    at most ``length`` H_{mu,k}(r), |r| <= deg + max(mu).  Products are fed in
    by increasing total |r| until the target reduces to zero.
    """
    mu = tuple(mu)
    d = sum(mu)
    if length is None:
        length = deg + 1
    if not target:
        return True
    degs = {sum(e) for e in target.terms}
    if len(degs) != 1:
        raise ValueError("target must be homogeneous")
    tdeg = degs.pop()
    rmax = deg + max(mu)
    cache = {} if _cache is None else _cache
    if tdeg not in cache:
        cache[tdeg] = (_Echelon(), [abs(tdeg) - 1], _h_generators(mu, rmax))
    ech, done, gens = cache[tdeg]
    vec = _as_vec(target)
    found = not ech.reduce(vec)
    while not found and done[0] < length * rmax:
        done[0] += 1
        for p in _products_of_degree(gens, length, tdeg, d, done[0]):
            ech.add(_as_vec(p))
        found = not ech.reduce(vec)
    return found


# the witness b_mu

@dataclass
class Witness:
    mu: tuple
    value: LaurentPoly          # b_mu restricted to Diag(mu)
    support: list               # all nu with non-zero restriction to Diag(nu)
    expected: LaurentPoly       # prod (-1)^{mu_k - 1} * (x_1 ... x_d)^{-1}

    @property
    def support_ok(self):
        return self.support == [self.mu]

    @property
    def value_ok(self):
        return self.value == self.expected

    def klass(self):
        return KClass(diag(self.mu), self.value)


def _b_restricted(mu, nu):
    d = sum(nu)
    val = LaurentPoly.one(d)
    for k in range(1, len(nu) + 1):
        val = val * h_poly(nu, k, -mu[k - 1])
        if not val:
            break
    return val


def witness_b(mu):
    """
    b_mu = H_1(-mu_1) x ... x H_n(-mu_n), a product of diagonal classes.
    Records its restriction to every Diag(nu) and the expected value on
    Diag(mu).  The claims hold for mu with positive parts; for mu with zero
    parts the support can be larger, and for degenerate mu (see is_degenerate)
    the class vanishes.
    """
    mu = tuple(mu)
    n, d = len(mu), sum(mu)
    support = [nu for nu in compositions(d, n) if _b_restricted(mu, nu)]
    sign = 1
    for m in mu:
        if (m - 1) & 1:
            sign = -sign
    return Witness(mu, _b_restricted(mu, mu), support, LaurentPoly.monomial((-1,) * d, sign))


def is_degenerate(mu):
    """mu_n = 0 or two consecutive zero parts: some factor of b_mu vanishes on Diag(mu)."""
    n = len(mu)
    if mu[n - 1] == 0:
        return True
    return any(mu[k] == 0 and mu[k + 1] == 0 for k in range(n - 1))


def witness_b_action(mu, f):
    """b_mu acting on f in the mu component through the global H's."""
    v = FlagFun.single(mu, f)
    return apply_expr([(1, [H(k, -mu[k - 1]) for k in range(1, len(mu) + 1)])], v)
