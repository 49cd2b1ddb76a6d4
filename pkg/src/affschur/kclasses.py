"""
Equivariant K-classes on closed orbits, the generator classes E, F, H and
their action as correspondence operators on K^G of the flag varieties.

Conventions
-----------
* A component of K^G(F_n^d) of type mu is a Laurent polynomial in d variables
  symmetric in the consecutive blocks of sizes mu.
* A class on a closed orbit O_M carries one variable block per non-zero cell
  of M, cells taken in row-major order.  For a staircase this order is also
  column-major, so both projections are block merges.
* A class acts by pulling back from the row flag, multiplying, and pushing
  forward to the column flag.  A word [g1, g2, ...] is the convolution
  product g1 * g2 * ..., which acts by applying g1 first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import factorial, prod

from .combinat import (
    add_units,
    as_matrix,
    classify,
    compositions,
    diag,
    margins,
    support,
    unit_vector,
    vadd,
)
from .symfunc import (
    LaurentPoly,
    SymClass,
    _schur_local,
    block_starts,
    complete_h,
    elementary_e,
    merge_blocks,
)


class UncoveredCase(Exception):
    """A generator product with no closed form; use operator identities instead."""


# generator symbols

@dataclass(frozen=True)
class GenSymbol:
    """
    kind is "E", "F" or "H"; k is the 1-based step (k = n allowed for H).
    mu=None means the global generator (sum over all compositions).
    For local E/F, mu is a composition of d-1; for local H, of d.
    """

    kind: str
    k: int
    p: int
    mu: tuple | None = None

    def __post_init__(self):
        kind = "H" if self.kind == "Hn" else self.kind
        object.__setattr__(self, "kind", kind)
        if kind not in ("E", "F", "H"):
            raise ValueError("unknown generator kind %r" % self.kind)
        if self.mu is not None:
            object.__setattr__(self, "mu", tuple(self.mu))
            n = len(self.mu)
            top = n if kind == "H" else n - 1
            if not 1 <= self.k <= top:
                raise ValueError("step %d out of range for %s with n=%d" % (self.k, kind, n))

    @property
    def is_global(self):
        return self.mu is None

    def localize(self, mu):
        return GenSymbol(self.kind, self.k, self.p, tuple(mu))

    def to_json(self):
        out = {"kind": self.kind, "k": self.k, "p": self.p}
        if self.mu is not None:
            out["mu"] = list(self.mu)
        return out

    @classmethod
    def from_json(cls, data):
        mu = data.get("mu")
        return cls(data["kind"], int(data["k"]), int(data["p"]), tuple(mu) if mu is not None else None)

    def __str__(self):
        loc = "" if self.mu is None else "[%s]" % ",".join(map(str, self.mu))
        return "%s%s_%d(%d)" % (self.kind, loc, self.k, self.p)


def E(k, p, mu=None):
    return GenSymbol("E", k, p, mu)


def F(k, p, mu=None):
    return GenSymbol("F", k, p, mu)


def H(k, p, mu=None):
    return GenSymbol("H", k, p, mu)


# K-classes on closed orbits

@dataclass(frozen=True)
class KClass:
    support: tuple
    value: LaurentPoly

    def __post_init__(self):
        M = as_matrix(self.support)
        object.__setattr__(self, "support", M)
        if not classify(M).closed:
            raise ValueError("support is not a closed orbit")
        if self.value.nvars != sum(map(sum, M)):
            raise ValueError("value has the wrong number of variables")

    @property
    def cells(self):
        return support(self.support)

    @property
    def sizes(self):
        return tuple(self.support[i][j] for i, j in self.cells)

    def symclass(self):
        return SymClass(self.value, self.sizes)

    def is_valid(self):
        return self.symclass().is_valid()

    def __neg__(self):
        return KClass(self.support, -self.value)

    def to_json(self):
        return {"matrix": [list(r) for r in self.support], "class": self.value.to_json()}

    @classmethod
    def from_json(cls, data):
        M = as_matrix(data["matrix"])
        return cls(M, LaurentPoly.from_json(data["class"], sum(map(sum, M))))


def _block(mu, k):
    """0-based variable positions of block k (1-based) of mu."""
    s = sum(mu[:k - 1])
    return list(range(s, s + mu[k - 1]))


def h_poly(mu, k, r):
    """The diagonal value of H_{mu,k}(r) as a polynomial in d = |mu| variables."""
    mu = tuple(mu)
    n, d = len(mu), sum(mu)
    if k == n:
        b = mu[n - 1]
        X = _block(mu, n)
        if b == 0:
            return LaurentPoly.zero(d)
        if r >= 0:
            return complete_h(r, X, d)
        if r > -b:
            return LaurentPoly.zero(d)
        sign = -1 if (b - 1) & 1 else 1
        return elementary_e(b, X, d, inverse=True) * complete_h(-r - b, X, d, inverse=True) * sign
    a, b = mu[k - 1], mu[k]
    if a == 0 and b == 0:
        return LaurentPoly.zero(d)
    Xk, Xk1 = _block(mu, k), _block(mu, k + 1)
    if r >= b:
        sign = -1 if b & 1 else 1
        return elementary_e(b, Xk1, d) * complete_h(r - b, Xk + Xk1, d) * sign
    if r <= -a:
        sign = -1 if (a - 1) & 1 else 1
        return (elementary_e(a, Xk, d, inverse=True)
                * complete_h(-r - a, Xk + Xk1, d, inverse=True) * sign)
    return LaurentPoly.zero(d)


def local_class(g: GenSymbol) -> KClass:
    if g.is_global:
        raise ValueError("local_class needs a local symbol")
    mu = g.mu
    if g.kind == "H":
        return KClass(diag(mu), h_poly(mu, g.k, g.p))
    d = sum(mu) + 1
    k = g.k - 1
    cell = (k, k + 1) if g.kind == "E" else (k + 1, k)
    M = add_units(diag(mu), [(cell[0], cell[1], 1)])
    # the unit cell sits right after the first k diagonal cells in row-major order
    s = sum(mu[:g.k])
    return KClass(M, LaurentPoly.var(d, s, g.p))


def support_of(g: GenSymbol):
    mu = g.mu
    if g.kind == "H":
        return diag(mu)
    k = g.k - 1
    cell = (k, k + 1) if g.kind == "E" else (k + 1, k)
    return add_units(diag(mu), [(cell[0], cell[1], 1)])


# functions on the flag varieties

class FlagFun:
    """An element of K^G(F_n^d): components mu -> Laurent polynomial (zeros dropped)."""

    __slots__ = ("n", "d", "comps")

    def __init__(self, n, d, comps=None):
        self.n, self.d = n, d
        self.comps = {}
        for mu, f in (comps or {}).items():
            mu = tuple(mu)
            if len(mu) != n or sum(mu) != d:
                raise ValueError("component %s is not a composition of %d of length %d" % (mu, d, n))
            if f.nvars != d:
                raise ValueError("component polynomial has %d variables, need %d" % (f.nvars, d))
            if f:
                self.comps[mu] = self.comps.get(mu, LaurentPoly.zero(d)) + f
                if not self.comps[mu]:
                    del self.comps[mu]

    @classmethod
    def single(cls, mu, f):
        mu = tuple(mu)
        return cls(len(mu), sum(mu), {mu: f})

    def __add__(self, other):
        out = dict(self.comps)
        for mu, f in other.comps.items():
            g = out.get(mu, LaurentPoly.zero(self.d)) + f
            if g:
                out[mu] = g
            else:
                out.pop(mu, None)
        return FlagFun(self.n, self.d, out)

    def scale(self, c):
        if c == 0:
            return FlagFun(self.n, self.d)
        return FlagFun(self.n, self.d, {mu: f * c for mu, f in self.comps.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, FlagFun) and (self.n, self.d, self.comps) == (other.n, other.d, other.comps)

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.comps.items())))

    def is_zero(self):
        return not self.comps

    def is_valid(self):
        return all(SymClass(f, mu).is_valid() for mu, f in self.comps.items())

    def __repr__(self):
        if not self.comps:
            return "FlagFun(0)"
        return "FlagFun(%s)" % ", ".join("%s: %r" % (mu, f) for mu, f in sorted(self.comps.items()))

    def to_json(self):
        return {"n": self.n, "d": self.d,
                "components": [{"mu": list(mu), "poly": f.to_json()} for mu, f in sorted(self.comps.items())]}

    @classmethod
    def from_json(cls, data):
        n, d = int(data["n"]), int(data["d"])
        return cls(n, d, {tuple(c["mu"]): LaurentPoly.from_json(c["poly"], d) for c in data["components"]})


# operators

def _column_counts(M, cells):
    n_c = len(M[0])
    return [sum(1 for _, j in cells if j == c) for c in range(n_c)]


@lru_cache(maxsize=200000)
def _act_on_poly(M, value, f):
    """Pull f back from the row flag of M, multiply by value, push to the column flag."""
    cells = support(M)
    g = f * value
    if not g:
        return g
    sizes = tuple(M[i][j] for i, j in cells)
    return merge_blocks(SymClass(g, sizes), _column_counts(M, cells), method="demazure").poly


def apply_class(c: KClass, v: FlagFun) -> FlagFun:
    R, C = margins(c.support)
    f = v.comps.get(R)
    if f is None:
        return FlagFun(len(C), v.d)
    return FlagFun(len(C), v.d, {C: _act_on_poly(c.support, c.value, f)})


@lru_cache(maxsize=4096)
def _local_cached(g):
    return local_class(g)


def _source_target(g: GenSymbol, nu):
    """For a global symbol on component nu: (local symbol, target) or None."""
    n = len(nu)
    if g.kind == "H":
        return g.localize(nu), nu
    k = g.k
    if g.kind == "E":
        if nu[k - 1] < 1:
            return None
        mu = vadd(nu, unit_vector(n, k), -1)
        return g.localize(mu), vadd(mu, unit_vector(n, k + 1))
    if nu[k] < 1:
        return None
    mu = vadd(nu, unit_vector(n, k + 1), -1)
    return g.localize(mu), vadd(mu, unit_vector(n, k))


def apply_gen(g: GenSymbol, v: FlagFun) -> FlagFun:
    if not g.is_global:
        return apply_class(_local_cached(g), v)
    out = FlagFun(v.n, v.d)
    for nu, f in v.comps.items():
        st = _source_target(g, nu)
        if st is None:
            continue
        loc, _ = st
        if g.kind != "H" and not 1 <= g.k < v.n:
            raise ValueError("step %d out of range" % g.k)
        out = out + apply_class(_local_cached(loc), FlagFun(v.n, v.d, {nu: f}))
    return out


def apply_word(word, v: FlagFun) -> FlagFun:
    """Apply the convolution word g1 * g2 * ...: g1 acts first."""
    for g in word:
        v = apply_gen(g, v)
        if v.is_zero():
            break
    return v


def _as_expr(x):
    # a bare word becomes [(1, word)]; an empty list is the zero operator
    x = list(x)
    if x and isinstance(x[0], GenSymbol):
        return [(1, x)]
    return [(c, list(w)) for c, w in x]


def apply_expr(expr, v: FlagFun) -> FlagFun:
    out = FlagFun(v.n, v.d)
    for c, w in _as_expr(expr):
        if c:
            out = out + apply_word(w, v).scale(c)
    return out


# exact operator equality

def schur_box_basis(mu):
    """Products of block Schur polynomials with partitions in mu_b x (mu_{b+1}+...+mu_n) boxes."""
    mu = tuple(mu)
    n, d = len(mu), sum(mu)
    per_block = []
    starts = block_starts(mu)
    for b in range(n):
        m, w = mu[b], sum(mu[b + 1:])
        polys = []
        for lam in _box_partitions(m, w):
            s = _schur_local(lam, m) if m else LaurentPoly.one(0)
            polys.append(s.embed(d, list(range(starts[b], starts[b] + m))))
        per_block.append(polys)
    out = []
    for combo in product(*per_block):
        out.append(FlagFun.single(mu, prod(combo, start=LaurentPoly.one(d))))
    return out


def _box_partitions(m, w):
    """Partitions with at most m parts, each at most w, as length-m tuples."""
    if m == 0:
        return [()]
    out = []

    def rec(prefix, cap):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for x in range(cap, -1, -1):
            rec(prefix + [x], x)

    rec([], w)
    return out


def basis_size(mu):
    return factorial(sum(mu)) // prod(factorial(x) for x in mu)


def full_basis(n, d):
    return [v for mu in compositions(d, n) for v in schur_box_basis(mu)]


def op_equal(exprA, exprB, n, d, return_witness=False):
    """
    Decide whether two operator expressions agree on K^G(F_n^d).

    An expression is a word (list of GenSymbol) or a list of (coeff, word).
    Equality on the Schur-box basis of every component decides operator
    equality, since the operators are linear over the representation ring.
    """
    A, B = _as_expr(exprA), _as_expr(exprB)
    for v in _basis_cached(n, d):
        a, b = apply_expr(A, v), apply_expr(B, v)
        if a != b:
            return (False, (v, a, b)) if return_witness else False
    return (True, None) if return_witness else True


@lru_cache(maxsize=64)
def _basis_cached(n, d):
    return tuple(full_basis(n, d))


def window_equal(exprA, exprB, n, d, window=2):
    """Evidence-only check on monomials with exponents in [-window, window], block-symmetrized."""
    from .symfunc import coset_symmetrize
    A, B = _as_expr(exprA), _as_expr(exprB)
    for mu in compositions(d, n):
        for e in product(range(-window, window + 1), repeat=d):
            f = coset_symmetrize(LaurentPoly.monomial(e), (1,) * d, mu)
            v = FlagFun.single(mu, f)
            if apply_expr(A, v) != apply_expr(B, v):
                return False
    return True


# closed-form products of local generators

def _cols_of(g):
    R, C = margins(support_of(g))
    return C


def _rows_of(g):
    return margins(support_of(g))[0]


def _monomial_class(M, exps):
    """Class on closed M with x^exp on each listed unit cell (0-based cell -> exponent)."""
    cells = support(M)
    d = sum(map(sum, M))
    e = [0] * d
    pos = 0
    for (i, j) in cells:
        if (i, j) in exps:
            if M[i][j] != 1:
                raise ValueError("monomial exponent on a non-unit cell")
            e[pos] = exps[(i, j)]
        pos += M[i][j]
    return KClass(M, LaurentPoly.monomial(e))


def _cell_pos(M, cell):
    pos = 0
    for c in support(M):
        if c == cell:
            return pos
        pos += M[c[0]][c[1]]
    raise KeyError(cell)


def star_local(c1: GenSymbol, c2: GenSymbol):
    """
    Closed form of c1 * c2 for local generators: None for a zero product,
    otherwise a list of (sign, KClass).  Raises UncoveredCase when no
    closed form is available.
    """
    if c1.is_global or c2.is_global:
        raise ValueError("star_local needs local symbols")
    if _cols_of(c1) != _rows_of(c2):
        return None
    n = len(c1.mu)
    # anything times a diagonal class: plain multiplication on the other support
    if c1.kind == "H" or c2.kind == "H":
        k1, k2 = _local_cached(c1), _local_cached(c2)
        if c1.kind == "H" and c2.kind == "H":
            return [(1, KClass(k1.support, k1.value * k2.value))]
        if c1.kind == "H":
            return [(1, KClass(k2.support, _h_times(c1, k2)))]
        return [(1, KClass(k1.support, _h_times(c2, k1)))]
    k, l = c1.k, c2.k
    p, q = c1.p, c2.p
    if c1.kind == c2.kind:
        kind = c1.kind
        if k == l:
            # doubled cell: s_(p,q) for E, s_(q,p) for F
            mu = vadd(_rows_of(c1), unit_vector(n, k if kind == "E" else k + 1), -1)
            mu = vadd(mu, unit_vector(n, k if kind == "E" else k + 1), -1)
            cell = (k - 1, k) if kind == "E" else (k, k - 1)
            M = add_units(diag(mu), [(cell[0], cell[1], 2)])
            d = sum(mu) + 2
            s = _cell_pos(M, cell)
            lam = (p, q) if kind == "E" else (q, p)
            val = _gen_schur2(lam).embed(d, [s, s + 1])
            return [(1, KClass(M, val))]
        M = add_units(support_of(c1), [])
        cell1 = (k - 1, k) if kind == "E" else (k, k - 1)
        cell2 = (l - 1, l) if kind == "E" else (l, l - 1)
        base = vadd(_rows_of(c1), unit_vector(n, cell1[0] + 1), -1)
        base = vadd(base, unit_vector(n, cell2[0] + 1), -1)
        M = add_units(diag(base), [(cell1[0], cell1[1], 1), (cell2[0], cell2[1], 1)])
        if abs(k - l) > 1:
            return [(1, _monomial_class(M, {cell1: p, cell2: q}))]
        straight = (kind == "E" and k == l + 1) or (kind == "F" and l == k + 1)
        if straight:
            if not classify(M).closed or M[cell1[0]][cell1[1]] != 1 or M[cell2[0]][cell2[1]] != 1:
                raise UncoveredCase("degenerate adjacent product")
            return [(1, _monomial_class(M, {cell1: p, cell2: q}))]
        raise UncoveredCase("reversed adjacent product %s * %s" % (c1, c2))
    # mixed E/F
    if k != l:
        cell1 = (k - 1, k) if c1.kind == "E" else (k, k - 1)
        cell2 = (l - 1, l) if c2.kind == "E" else (l, l - 1)
        base = vadd(_rows_of(c1), unit_vector(n, cell1[0] + 1), -1)
        base = vadd(base, unit_vector(n, cell2[0] + 1), -1)
        if min(base) < 0:
            raise UncoveredCase("mixed product does not split")
        M = add_units(diag(base), [(cell1[0], cell1[1], 1), (cell2[0], cell2[1], 1)])
        if not classify(M).closed:
            raise UncoveredCase("mixed product support is not closed")
        return [(1, _monomial_class(M, {cell1: p, cell2: q}))]
    nu = _rows_of(c1)
    if c1.kind == "E" and nu[k] == 0:
        return [(1, KClass(diag(nu), h_poly(nu, k, p + q)))]
    if c1.kind == "F" and nu[k - 1] == 0:
        return [(-1, KClass(diag(nu), h_poly(nu, k, p + q)))]
    raise UncoveredCase("single product %s * %s is only known through the commutator" % (c1, c2))


def _h_times(h: GenSymbol, other: KClass):
    # the diagonal class restricted to the row (= column) block structure of the orbit
    hv = _local_cached(h).value
    return hv * other.value


def _gen_schur2(lam):
    from .symfunc import schur_general
    return schur_general(lam, [0, 1], 2)


def commutator_class(mu, k, p, q):
    """E_{mu-e_k,k}(p)*F_{mu-e_k,k}(q) - F_{mu-e_{k+1},k}(q)*E_{mu-e_{k+1},k}(p) as a diagonal class."""
    return KClass(diag(mu), h_poly(mu, k, p + q))


def class_word(c: KClass):
    """A one-letter operator realizing an arbitrary closed-orbit class."""
    return _ClassOp(c)


@dataclass(frozen=True)
class _ClassOp:
    cls: KClass = field()


def apply_any(x, v):
    if isinstance(x, _ClassOp):
        return apply_class(x.cls, v)
    return apply_gen(x, v)


def apply_class_sum(terms, v: FlagFun) -> FlagFun:
    """Sum of sign * (class operator) over (sign, KClass) terms."""
    out = FlagFun(v.n, v.d)
    for s, c in terms:
        out = out + apply_class(c, v).scale(s)
    return out


# the trivial embedding n -> n+1

def embed_trivial(x):
    if isinstance(x, KClass):
        M = x.support
        n = len(M)
        M2 = tuple(tuple(r) + (0,) for r in M) + ((0,) * (n + 1),)
        return KClass(M2, x.value)
    if isinstance(x, FlagFun):
        return FlagFun(x.n + 1, x.d, {mu + (0,): f for mu, f in x.comps.items()})
    if isinstance(x, GenSymbol):
        return GenSymbol(x.kind, x.k, x.p, None if x.mu is None else x.mu + (0,))
    raise TypeError("cannot embed %r" % type(x))
