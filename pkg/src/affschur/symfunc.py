"""
Exact Laurent polynomials, block symmetry, generalized Schur functions and
the push-forward / pull-back calculus for partial flag varieties.

Variables are indexed from 0.  A block structure is a tuple of block sizes
(zero sizes allowed); block ``b`` occupies the consecutive variable positions
``[start_b, start_b + sizes[b])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product

from . import _terms


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        t: dict[tuple, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError("exponent length %d != %d" % (len(e), nvars))
                c = t.get(e, 0) + int(c)
                if c:
                    t[e] = c
                else:
                    t.pop(e, None)
        self.terms = t
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: no zero coefficients, correct lengths
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls._raw(nvars, {(0,) * nvars: 1})

    @classmethod
    def const(cls, nvars, c):
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exp, coeff=1):
        exp = tuple(exp)
        return cls._raw(len(exp), {exp: coeff} if coeff else {})

    @classmethod
    def var(cls, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls._raw(nvars, {tuple(e): 1})

    # arithmetic

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch: %d vs %d" % (self.nvars, other.nvars))

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            c = t.get(e, 0) + c
            if c:
                t[e] = c
            else:
                del t[e]
        return LaurentPoly._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        t: dict[tuple, int] = {}
        get = t.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                t[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.nvars, {e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly.monomial([-x for x in e], c) ** (-k)
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp, coeff=1):
        """Multiply by the monomial ``coeff * x^exp``."""
        return LaurentPoly._raw(
            self.nvars,
            {tuple([x + y for x, y in zip(e, exp)]): c * coeff for e, c in self.terms.items()}
            if coeff else {},
        )

    # comparison

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # variable manipulation

    def substitute(self, perm):
        """Apply the variable substitution x_i -> x_{perm[i]}."""
        n = self.nvars
        t = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, x in enumerate(e):
                ne[perm[i]] += x
            t[tuple(ne)] = c
        return LaurentPoly._raw(n, t)

    def swap(self, i, j):
        t = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i], e[j] = e[j], e[i]
            t[tuple(e)] = c
        return LaurentPoly._raw(self.nvars, t)

    def embed(self, nvars, positions):
        """Re-index into ``nvars`` variables, sending variable i to ``positions[i]``."""
        t = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, x in enumerate(e):
                ne[positions[i]] += x
            t[tuple(ne)] = c
        return LaurentPoly(nvars, t.items())

    def is_symmetric_in(self, positions):
        positions = list(positions)
        for a, b in zip(positions, positions[1:]):
            if self.swap(a, b) != self:
                return False
        return True

    def div_linear(self, i, j):
        """Exact quotient by (x_j - x_i); raises ArithmeticError on a remainder."""
        if i == j:
            raise ValueError("degenerate divisor")
        groups: dict[tuple, dict[int, int]] = {}
        for e, c in self.terms.items():
            key = list(e)
            a = key[i]
            t = a + key[j]
            key[i] = key[j] = 0
            groups.setdefault((tuple(key), t), {})[a] = c
        out = {}
        for (key, t), coeffs in groups.items():
            lo, hi = min(coeffs), max(coeffs)
            acc = 0
            for a in range(lo, hi):
                acc += coeffs.get(a, 0)
                if acc:
                    e = list(key)
                    e[i] = a
                    e[j] = t - 1 - a
                    out[tuple(e)] = acc
            acc += coeffs[hi]
            if acc:
                raise ArithmeticError("not divisible by (x%d - x%d)" % (j + 1, i + 1))
        return LaurentPoly._raw(self.nvars, out)

    # display / serialization

    def sorted_terms(self):
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                ("x%d" % (i + 1)) if x == 1 else ("x%d^%d" % (i + 1, x))
                for i, x in enumerate(e) if x
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%d*%s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return [{"coeff": str(c), "exp": list(e)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, nvars=None):
        if nvars is None:
            if not data:
                raise ValueError("cannot infer variable count of an empty polynomial")
            nvars = len(data[0]["exp"])
        return cls(nvars, [(tuple(t["exp"]), int(t["coeff"])) for t in data])


# block structures

def block_starts(sizes):
    starts, s = [], 0
    for b in sizes:
        starts.append(s)
        s += b
    return starts


def block_intervals(sizes):
    return [(s, s + b) for s, b in zip(block_starts(sizes), sizes)]


def refines(fine, coarse):
    """True iff every coarse block is a union of consecutive fine blocks."""
    if sum(fine) != sum(coarse):
        return False
    cuts_f = set(_cuts(fine))
    return set(_cuts(coarse)) <= cuts_f


def _cuts(sizes):
    s, out = 0, [0]
    for b in sizes:
        s += b
        out.append(s)
    return out


def _groups(fine, coarse):
    # sizes of the non-empty fine blocks inside each coarse block
    if not refines(fine, coarse):
        raise ValueError("%s does not refine %s" % (tuple(fine), tuple(coarse)))
    fine_iv = [iv for iv in block_intervals(fine) if iv[0] < iv[1]]
    return [[e - s for s, e in fine_iv if a <= s and e <= b] for a, b in block_intervals(coarse)]


@dataclass(frozen=True)
class SymClass:
    """A Laurent polynomial together with its block-symmetry type."""

    poly: LaurentPoly
    sizes: tuple

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if sum(self.sizes) != self.poly.nvars:
            raise ValueError("block sizes %s do not cover %d variables" % (self.sizes, self.poly.nvars))

    def is_valid(self):
        return all(self.poly.is_symmetric_in(range(a, b)) for a, b in block_intervals(self.sizes))

    def to_json(self):
        return {"poly": self.poly.to_json(), "blocks": [list(iv) for iv in block_intervals(self.sizes)]}

    @classmethod
    def from_json(cls, data):
        blocks = data["blocks"]
        sizes = tuple(b - a for a, b in blocks)
        return cls(LaurentPoly.from_json(data["poly"], sum(sizes)), sizes)


# symmetric functions

def complete_h(k, vars, nvars, inverse=False):
    """h_k of the variables ``vars`` (or of their reciprocals)."""
    if k < 0:
        return LaurentPoly.zero(nvars)
    s = -1 if inverse else 1
    t: dict[tuple, int] = {}
    for combo in combinations_with_replacement(vars, k):
        e = [0] * nvars
        for v in combo:
            e[v] += s
        t[tuple(e)] = 1
    return LaurentPoly._raw(nvars, t)


def elementary_e(k, vars, nvars, inverse=False):
    """e_k of the variables ``vars`` (or of their reciprocals); 0 if k > len(vars)."""
    if k < 0 or k > len(vars):
        return LaurentPoly.zero(nvars)
    s = -1 if inverse else 1
    t: dict[tuple, int] = {}
    for combo in combinations(vars, k):
        e = [0] * nvars
        for v in combo:
            e[v] = s
        t[tuple(e)] = 1
    return LaurentPoly._raw(nvars, t)


def _perm_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def straighten(lam, m=None):
    """
    Normal form of the generalized Schur function s_lam in m variables.

    Returns None when s_lam vanishes, otherwise (sign, nu, N) with nu a
    weakly decreasing non-negative vector and s_lam = sign * s_nu * (y1...ym)^(-N).
    ``lam`` is padded with trailing zeros up to length m.
    """
    lam = list(lam)
    if m is None:
        m = len(lam)
    if len(lam) > m:
        raise ValueError("too many parts for %d variables" % m)
    lam += [0] * (m - len(lam))
    alpha = [lam[i] + (m - 1 - i) for i in range(m)]
    if len(set(alpha)) < m:
        return None
    order = sorted(range(m), key=lambda i: -alpha[i])
    sign = _perm_sign(order)
    nu = [alpha[order[i]] - (m - 1 - i) for i in range(m)]
    N = max(0, -nu[-1]) if m else 0
    nu = tuple(x + N for x in nu)
    return sign, nu, N


def _jacobi_trudi(nu, vars, nvars):
    nu = [x for x in nu if x]
    l = len(nu)
    if l == 0:
        return LaurentPoly.one(nvars)
    h = {}

    def H(k):
        if k not in h:
            h[k] = complete_h(k, vars, nvars)
        return h[k]

    @lru_cache(maxsize=None)
    def det(row, cols):
        # expansion along ``row`` over the remaining column set
        if row == l:
            return LaurentPoly.one(nvars)
        acc = LaurentPoly.zero(nvars)
        sign = 1
        for idx, c in enumerate(cols):
            k = nu[row] - row + c
            if k >= 0:
                rest = cols[:idx] + cols[idx + 1:]
                term = H(k) * det(row + 1, rest)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    return det(0, tuple(range(l)))


def _alternant(alpha, vars, nvars):
    t = {}
    m = len(vars)
    for perm in permutations(range(m)):
        e = [0] * nvars
        for j in range(m):
            e[vars[perm[j]]] += alpha[j]
        t[tuple(e)] = t.get(tuple(e), 0) + _perm_sign(perm)
    return LaurentPoly(nvars, t.items())


def _divide_vandermonde(f, vars):
    # divide by prod_{i<j} (y_i - y_j), y_i = x_{vars[i]}
    for i in range(len(vars)):
        for j in range(i + 1, len(vars)):
            f = f.div_linear(vars[j], vars[i])
    return f


def schur_alternant(lam, vars, nvars):
    m = len(vars)
    lam = list(lam) + [0] * (m - len(lam))
    alpha = [lam[i] + m - 1 - i for i in range(m)]
    return _divide_vandermonde(_alternant(alpha, vars, nvars), vars)


def schur_straightened(lam, vars, nvars):
    st = straighten(lam, len(vars))
    if st is None:
        return LaurentPoly.zero(nvars)
    sign, nu, N = st
    shift = [0] * nvars
    for v in vars:
        shift[v] = -N
    return _jacobi_trudi(nu, vars, nvars).shift(shift, sign)


def schur_general(lam, vars, nvars, check=True):
    """
    Generalized Schur function s_lam(x_vars) for an arbitrary integer vector.

    With ``check`` both the alternant quotient and the straightened
    Jacobi-Trudi form are computed and required to agree.
    """
    vars = list(vars)
    s = schur_straightened(lam, vars, nvars)
    if check:
        a = schur_alternant(lam, vars, nvars)
        if a != s:
            raise ArithmeticError("alternant and straightened Schur functions disagree for %s" % (lam,))
    return s


# coset symmetrization and push-forwards

def _shuffles(positions, sizes):
    """Ordered set partitions of sorted ``positions`` into parts of the given sizes."""
    if not sizes:
        yield []
        return
    first, rest = sizes[0], sizes[1:]
    for chosen in combinations(positions, first):
        remaining = [p for p in positions if p not in chosen]
        for tail in _shuffles(remaining, rest):
            yield [list(chosen)] + tail


def coset_representatives(fine, coarse):
    """Minimal-length representatives of S_fine\\S_coarse, as position maps."""
    groups = _groups(fine, coarse)
    n = sum(fine)
    per_block = []
    for (a, b), grp in zip(block_intervals(coarse), groups):
        block_reps = []
        for parts in _shuffles(list(range(a, b)), grp):
            src = list(range(a, b))
            mapping = {}
            k = 0
            for part in parts:
                for p in part:
                    mapping[src[k]] = p
                    k += 1
            block_reps.append(mapping)
        per_block.append(block_reps)
    reps = [dict()]
    for block_reps in per_block:
        reps = [{**r, **br} for r in reps for br in block_reps]
    return [[r.get(i, i) for i in range(n)] for r in reps]


def coset_symmetrize(f, fine, coarse):
    """Sum of sigma(f) over coset representatives of S_fine in S_coarse."""
    if not SymClass(f, fine).is_valid():
        raise ValueError("input is not symmetric for blocks %s" % (tuple(fine),))
    acc = LaurentPoly.zero(f.nvars)
    for perm in coset_representatives(fine, coarse):
        acc = acc + f.substitute(perm)
    return acc


def demazure_merge(f, i):
    """(x_{i+1} f - x_i s_i f) / (x_{i+1} - x_i), with 0-based i."""
    n = f.nvars
    num = f.shift(_unit(n, i + 1)) - f.swap(i, i + 1).shift(_unit(n, i))
    return num.div_linear(i, i + 1)


def _unit(n, i):
    e = [0] * n
    e[i] = 1
    return e


def _merge_sizes(sizes, l):
    sizes = list(sizes)
    return tuple(sizes[:l] + [sizes[l] + sizes[l + 1]] + sizes[l + 2:])


@lru_cache(maxsize=8192)
def _schur_terms(nu):
    # s_nu(y_1..y_m), m = len(nu), by the branching rule over interlacing mu
    m = len(nu)
    if m == 1:
        return {(nu[0],): 1}
    out: dict = {}
    total = sum(nu)
    ranges = [range(nu[i + 1], nu[i] + 1) for i in range(m - 1)]
    for mu in product(*ranges):
        k = total - sum(mu)
        for e, c in _schur_terms(mu).items():
            key = e + (k,)
            out[key] = out.get(key, 0) + c
    return out


def _schur_local(nu, m):
    """s_nu in m local variables for a partition nu (padded to length m)."""
    nu = tuple(nu) + (0,) * (m - len(nu))
    return LaurentPoly._raw(m, _schur_terms(nu))


def _push_direct(g, start, a, b):
    """
    Coset symmetrization with the denominator cleared.

    The cleared numerator N = sum over shuffles of sgn * sigma(h) is
    antisymmetric in the merged block, so N / V is read off from the strictly
    decreasing exponents of N (Schur expansion) instead of by long division.
    Because h is antisymmetric in each block separately, those exponents come
    from the terms of h that decrease strictly inside each block.
    """
    n = g.nvars
    m = a + b
    I = list(range(start, start + a))
    J = list(range(start + a, start + a + b))
    e = [0] * n
    for j in J:
        e[j] = a
    h = g.shift(e)
    for blk in (I, J):
        for p, q in combinations(blk, 2):
            h = h * (LaurentPoly.var(n, q) - LaurentPoly.var(n, p))
    lo, hi = start, start + m
    # sign of dividing a_delta by prod_{p<q}(x_q - x_p)
    vsign = -1 if (m * (m - 1) // 2) & 1 else 1
    coeffs: dict = {}
    for ex, c in h.terms.items():
        bi, bj = ex[lo:lo + a], ex[lo + a:hi]
        if any(bi[t] <= bi[t + 1] for t in range(a - 1)):
            continue
        if any(bj[t] <= bj[t + 1] for t in range(b - 1)):
            continue
        inv = 0
        clash = False
        for u in bi:
            for v in bj:
                if u < v:
                    inv += 1
                elif u == v:
                    clash = True
        if clash:
            continue
        alpha = tuple(sorted(bi + bj, reverse=True))
        key = (alpha, ex[:lo], ex[hi:])
        coeffs[key] = coeffs.get(key, 0) + (-c if inv & 1 else c)
    pieces = []
    for (alpha, left, right), c in coeffs.items():
        if c:
            nu = [alpha[i] - (m - 1 - i) for i in range(m)]
            pieces.append((c * vsign, nu, left, right))
    try:
        return _accumulate_np(pieces, n, m)
    except _terms.Unsafe:
        pass
    acc: dict = {}
    for c, nu, left, right in pieces:
        low = nu[-1]
        s = _schur_local(tuple(x - low for x in nu), m)
        for se, sc in s.terms.items():
            k = left + tuple(x + low for x in se) + right
            v = acc.get(k, 0) + c * sc
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
    return LaurentPoly._raw(n, acc)


@lru_cache(maxsize=8192)
def _schur_array(nu):
    E, C = _terms.from_poly(LaurentPoly._raw(len(nu), _schur_terms(nu)))
    E.setflags(write=False)
    C.setflags(write=False)
    return E, C


def _accumulate_np(pieces, n, m):
    # sum of c * x^(left, low.., right) * s_(nu - low) over all pieces
    np = _terms.np
    Es, Cs = [], []
    for c, nu, left, right in pieces:
        low = nu[-1]
        E, C = _schur_array(tuple(x - low for x in nu))
        k = E.shape[0]
        full = np.empty((k, n), dtype=np.int64)
        lo = len(left)
        full[:, :lo] = left
        full[:, lo:lo + m] = E + low
        full[:, lo + m:] = right
        Es.append(full)
        Cs.append(_terms._guard(C * c))
    if not Es:
        return LaurentPoly.zero(n)
    return LaurentPoly._raw(n, _terms.to_terms(*_terms.combine(np.vstack(Es), np.concatenate(Cs))))


def _push_cleared(g, start, a, b):
    # the same formula expanded in full and divided factor by factor
    n = g.nvars
    I = list(range(start, start + a))
    J = list(range(start + a, start + a + b))
    IJ = I + J
    # g * prod_{j in J} x_j^a * V_I * V_J, then antisymmetrize over shuffles
    e = [0] * n
    for j in J:
        e[j] = a
    h = g.shift(e)
    for blk in (I, J):
        for p, q in combinations(blk, 2):
            h = h * (LaurentPoly.var(n, q) - LaurentPoly.var(n, p))
    acc = LaurentPoly.zero(n)
    for chosen in combinations(IJ, a):
        rest = [p for p in IJ if p not in chosen]
        perm = list(range(n))
        for src, dst in zip(IJ, list(chosen) + rest):
            perm[src] = dst
        inv = sum(1 for s in chosen for t in rest if s > t)
        term = h.substitute(perm)
        acc = acc - term if inv & 1 else acc + term
    for p, q in combinations(IJ, 2):
        acc = acc.div_linear(p, q)
    return acc


def _push_demazure_np(g, start, a, b):
    n = g.nvars
    A = _terms.from_poly(g)
    for t in reversed(range(a)):
        for j in range(t, t + b):
            i = start + j
            num = _terms.add(_terms.shift(A, _unit(n, i + 1)),
                             _terms.shift(_terms.swap(A, i, i + 1), _unit(n, i)), -1)
            A = _terms.div_linear(num, i, i + 1)
    return LaurentPoly._raw(n, _terms.to_terms(*A))


# below this many input terms the dict implementation is faster
FAST_MIN_TERMS = 24


def _dispatch(fast, slow, g, start, a, b):
    if len(g) >= FAST_MIN_TERMS:
        try:
            return fast(g, start, a, b)
        except _terms.Unsafe:
            pass
    return slow(g, start, a, b)


def _push_demazure(g, start, a, b):
    # singleton merges along a reduced word of the minimal coset representative
    # moving block [start, start+a) past [start+a, start+a+b); enough because
    # the input is already symmetric within each of the two blocks
    for t in reversed(range(a)):
        for j in range(t, t + b):
            g = demazure_merge(g, start + j)
    return g


def pushforward(f: SymClass, l: int, method: str = "direct") -> SymClass:
    """
    Push-forward along the forgetful map merging blocks l and l+1 (0-based).

    ``method`` is "direct" (coset symmetrization, numerator expanded in Schur
    functions), "cleared" (the same formula divided out factor by factor;
    slow, kept as a reference), "demazure" (a chain of singleton merges), or
    "both" (direct and demazure, required to agree).
    """
    sizes = f.sizes
    if not 0 <= l < len(sizes) - 1:
        raise ValueError("no adjacent block pair at %d" % l)
    a, b = sizes[l], sizes[l + 1]
    new = _merge_sizes(sizes, l)
    if a == 0 or b == 0:
        return SymClass(f.poly, new)
    start = block_starts(sizes)[l]
    g = f.poly
    if method == "direct":
        out = _push_direct(g, start, a, b)
    elif method == "cleared":
        out = _push_cleared(g, start, a, b)
    elif method == "demazure":
        out = _dispatch(_push_demazure_np, _push_demazure, g, start, a, b)
    elif method == "both":
        out = _push_direct(g, start, a, b)
        alt = _dispatch(_push_demazure_np, _push_demazure, g, start, a, b)
        if out != alt:
            raise ArithmeticError("push-forward implementations disagree")
    else:
        raise ValueError("unknown method %r" % method)
    return SymClass(out, new)


def merge_blocks(f: SymClass, counts, method: str = "direct") -> SymClass:
    """
    Push-forward merging consecutive blocks: coarse block i is the union of the
    next ``counts[i]`` blocks of ``f`` (a zero count gives an empty block).
    """
    counts = list(counts)
    if sum(counts) != len(f.sizes):
        raise ValueError("counts %s do not partition %d blocks" % (counts, len(f.sizes)))
    cur = SymClass(f.poly, tuple(s for s in f.sizes))
    firsts = []
    i = 0
    for c in counts:
        firsts.append(i)
        i += c
    for first, c in reversed(list(zip(firsts, counts))):
        for _ in range(c - 1):
            cur = pushforward(cur, first, method)
    sizes = list(cur.sizes)
    # insert empty blocks for zero counts
    out, k = [], 0
    for c in counts:
        if c == 0:
            out.append(0)
        else:
            out.append(sizes[k])
            k += 1
    return SymClass(cur.poly, tuple(out))


def pullback(f: SymClass, refinement) -> SymClass:
    """Pull-back to a finer block structure: same polynomial, finer symmetry."""
    refinement = tuple(refinement)
    if not refines(refinement, f.sizes):
        raise ValueError("%s does not refine %s" % (refinement, f.sizes))
    return SymClass(f.poly, refinement)
