"""
Brute-force ground truth over a small prime field F_q: flag enumeration,
relative-position matrices of flag pairs, and the circ product by
enumerating triples of flags.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .combinat import as_matrix, bruhat_leq, margins

CAP = 10 ** 6


class OracleTooLarge(RuntimeError):
    pass


def _is_prime(q):
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


# linear algebra over F_q; vectors are tuples of ints in [0, q)

def rref(rows, q):
    """Reduced row echelon form of the row space, zero rows dropped."""
    rows = [list(r) for r in rows]
    out = []
    if not rows:
        return ()
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % q), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], q - 2, q)
        rows[r] = [x * inv % q for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % q:
                f = rows[i][c]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    out = tuple(tuple(row) for row in rows[:r])
    return out


def rank(rows, q):
    return len(rref(rows, q))


def dim_intersection(A, B, q):
    if not A or not B:
        return 0
    return len(A) + len(B) - rank(list(A) + list(B), q)


@lru_cache(maxsize=None)
def subspaces(d, k, q):
    """All k-dimensional subspaces of F_q^d as canonical RREF bases."""
    out = []
    for pivots in combinations(range(d), k):
        # free entries: row r, column c > pivots[r], c not a pivot
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, d) if c not in pivots]
        for vals in product(range(q), repeat=len(free)):
            rows = [[0] * d for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            out.append(tuple(tuple(row) for row in rows))
    return tuple(out)


def _contains(A, B, q):
    # B subset of A
    return rank(list(A) + list(B), q) == len(A)


@dataclass(frozen=True)
class FqFlag:
    q: int
    d: int
    spaces: tuple  # V_1 subset ... subset V_n = F_q^d, each an RREF basis

    @property
    def type(self):
        dims = [len(s) for s in self.spaces]
        return tuple(b - a for a, b in zip([0] + dims[:-1], dims))


def enum_flags(mu, q=2, cap=CAP):
    """All flags of type mu in F_q^d, each once."""
    mu = tuple(mu)
    if not _is_prime(q):
        raise ValueError("q must be prime")
    d = sum(mu)
    dims = []
    s = 0
    for m in mu:
        s += m
        dims.append(s)
    out = []

    def rec(i, prev, acc):
        if len(out) > cap:
            raise OracleTooLarge("more than %d flags" % cap)
        if i == len(dims):
            out.append(FqFlag(q, d, tuple(acc)))
            return
        k = dims[i]
        if prev is not None and k == len(prev):
            rec(i + 1, prev, acc + [prev])
            return
        for S in subspaces(d, k, q):
            if prev is None or _contains(S, prev, q):
                rec(i + 1, S, acc + [S])

    rec(0, None, [])
    return out


def orbit_matrix_of_pair(U: FqFlag, W: FqFlag):
    """m_ab by inclusion-exclusion on dim(U_a cap W_b)."""
    if U.d != W.d or U.q != W.q:
        raise ValueError("flags live in different spaces")
    q = U.q
    n1, n2 = len(U.spaces), len(W.spaces)
    c = [[0] * (n2 + 1) for _ in range(n1 + 1)]
    for a in range(n1):
        for b in range(n2):
            c[a + 1][b + 1] = dim_intersection(U.spaces[a], W.spaces[b], q)
    return tuple(tuple(c[a + 1][b + 1] - c[a][b + 1] - c[a + 1][b] + c[a][b]
                       for b in range(n2)) for a in range(n1))


def standard_flag(mu, q=2):
    """The coordinate flag: V_a spanned by the first mu_1 + ... + mu_a basis vectors."""
    d = sum(mu)
    spaces, s = [], 0
    for m in mu:
        s += m
        spaces.append(tuple(tuple(1 if j == i else 0 for j in range(d)) for i in range(s)))
    return FqFlag(q, d, tuple(spaces))


def realized_matrices(mu, nu, q=2, cap=CAP):
    """Orbit matrices of all flag pairs of types (mu, nu)."""
    A, B = enum_flags(mu, q, cap), enum_flags(nu, q, cap)
    if len(A) * len(B) > cap:
        raise OracleTooLarge("%d pairs" % (len(A) * len(B)))
    return {orbit_matrix_of_pair(U, W) for U in A for W in B}


def realized_composites(M, N, q=2, cap=CAP, fix_first=True):
    """
    The set of orbit_matrix(U, W) over triples with orbit_matrix(U, V) = M and
    orbit_matrix(V, W) = N.  With fix_first the first flag is the standard one
    (GL_d acts transitively on flags of a given type, so the set is the same).
    """
    M, N = as_matrix(M), as_matrix(N)
    R, C = margins(M)
    R2, C2 = margins(N)
    if C != R2:
        return set()
    firsts = [standard_flag(R, q)] if fix_first else enum_flags(R, q, cap)
    mids = enum_flags(C, q, cap)
    lasts = enum_flags(C2, q, cap)
    if len(firsts) * len(mids) * len(lasts) > cap:
        raise OracleTooLarge("%d triples" % (len(firsts) * len(mids) * len(lasts)))
    out = set()
    for U in firsts:
        for V in mids:
            if orbit_matrix_of_pair(U, V) != M:
                continue
            for W in lasts:
                if orbit_matrix_of_pair(V, W) == N:
                    out.add(orbit_matrix_of_pair(U, W))
    return out


def circ_oracle(M, N, q=2, cap=CAP, fix_first=True):
    """The unique Bruhat-maximal realized composite, or None if no triple exists."""
    L = realized_composites(M, N, q, cap, fix_first)
    if not L:
        return None
    tops = [x for x in L if all(bruhat_leq(y, x) for y in L)]
    if len(tops) != 1:
        raise AssertionError("realized composites have no unique maximum")
    return tops[0]


# 2x2x2 arrays with equal plane sums in all three directions

TRIPLE_ONES = tuple(tuple(tuple(1 for _ in range(2)) for _ in range(2)) for _ in range(2))
TRIPLE_PARITY = tuple(tuple(tuple(2 if (i + j + k) % 2 == 0 else 0 for k in range(2))
                            for j in range(2)) for i in range(2))


def triple_marginals(T):
    """The three 2-dimensional marginals (sum over i, over j, over k)."""
    n = len(T)
    rng = range(n)
    s_i = tuple(tuple(sum(T[i][a][b] for i in rng) for b in rng) for a in rng)
    s_j = tuple(tuple(sum(T[a][j][b] for j in rng) for b in rng) for a in rng)
    s_k = tuple(tuple(sum(T[a][b][k] for k in rng) for b in rng) for a in rng)
    return s_i, s_j, s_k
