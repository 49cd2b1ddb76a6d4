"""
Compositions, orbit matrices and the Bruhat order on them.

Matrices are tuples of row tuples of non-negative integers.  Public indices
(``corner_sum``, staircases, generator steps) are 1-based; everything else in
the code is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


class MatrixError(ValueError):
    pass


# basic matrix plumbing

def as_matrix(M):
    """Normalize a nested sequence into a tuple-of-tuples matrix."""
    rows = tuple(tuple(int(x) for x in row) for row in M)
    if rows and len({len(r) for r in rows}) != 1:
        raise MatrixError("ragged matrix")
    for r in rows:
        for x in r:
            if x < 0:
                raise MatrixError("negative entry %d" % x)
    return rows


def shape(M):
    return len(M), (len(M[0]) if M else 0)


def zeros(r, c=None):
    c = r if c is None else c
    return tuple((0,) * c for _ in range(r))


def diag(mu):
    n = len(mu)
    return tuple(tuple(mu[i] if i == j else 0 for j in range(n)) for i in range(n))


def add_units(M, changes):
    """M plus sum of c * E_ij over (i, j, c) in ``changes`` (0-based)."""
    rows = [list(r) for r in M]
    for i, j, c in changes:
        rows[i][j] += c
        if rows[i][j] < 0:
            raise MatrixError("negative entry at (%d,%d)" % (i + 1, j + 1))
    return tuple(tuple(r) for r in rows)


def total(M):
    return sum(sum(r) for r in M)


def transpose(M):
    return tuple(zip(*M)) if M else ()


# compositions and enumeration

def compositions(d, n):
    """All weak compositions of d into n parts, lexicographically decreasing."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in compositions(d - first, n - 1):
            yield (first,) + rest


def is_composition(mu, d=None):
    return all(isinstance(x, int) and x >= 0 for x in mu) and (d is None or sum(mu) == d)


def unit_vector(n, k):
    """e_k, 1-based."""
    return tuple(1 if i == k - 1 else 0 for i in range(n))


def vadd(a, b, s=1):
    return tuple(x + s * y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def matrices_with_margins(R, C):
    """All non-negative integer matrices with row sums R and column sums C."""
    R, C = tuple(R), tuple(C)
    if sum(R) != sum(C):
        return ()
    out = []
    nr, nc = len(R), len(C)

    def rec(i, colleft, acc):
        if i == nr:
            if not any(colleft):
                out.append(tuple(acc))
            return
        for row in _rows(R[i], colleft):
            rec(i + 1, tuple(c - x for c, x in zip(colleft, row)), acc + [row])

    rec(0, C, [])
    return tuple(out)


def _rows(s, caps):
    # vectors with entries bounded by caps summing to s
    if not caps:
        if s == 0:
            yield ()
        return
    for x in range(min(s, caps[0]), -1, -1):
        for rest in _rows(s - x, caps[1:]):
            yield (x,) + rest


def all_matrices(n, d):
    """M(n, d): every n x n non-negative integer matrix with entry sum d."""
    out = []
    for cells in _rows(d, (d,) * (n * n)):
        out.append(tuple(tuple(cells[i * n:(i + 1) * n]) for i in range(n)))
    return out


# margins, corner sums, dimensions

def margins(M):
    """(row sums, column sums)."""
    M = as_matrix(M)
    R = tuple(sum(r) for r in M)
    C = tuple(sum(c) for c in zip(*M)) if M else ()
    return R, C


def corner_sums(M):
    """Table s[k][l] = sum of m_ij over i <= k, j <= l (0-based, inclusive)."""
    r, c = shape(M)
    s = [[0] * c for _ in range(r)]
    for i in range(r):
        run = 0
        for j in range(c):
            run += M[i][j]
            s[i][j] = run + (s[i - 1][j] if i else 0)
    return s


def corner_sum(M, k, l):
    """sm_kl with 1-based k, l."""
    M = as_matrix(M)
    r, c = shape(M)
    if not (1 <= k <= r and 1 <= l <= c):
        raise IndexError("corner (%d,%d) outside %dx%d matrix" % (k, l, r, c))
    return sum(M[i][j] for i in range(k) for j in range(l))


def orbit_dim(M):
    """sum over cells of (d - sm_ij) * m_ij."""
    M = as_matrix(M)
    d = total(M)
    s = corner_sums(M)
    return sum((d - s[i][j]) * M[i][j] for i in range(len(M)) for j in range(len(M[i])))


def diagonal_norm(M):
    return sum(abs(i - j) * x for i, row in enumerate(M) for j, x in enumerate(row))


def corner_norm(M):
    """Sum of all corner sums; strictly drops along every cover step upward."""
    return sum(map(sum, corner_sums(M)))


# Bruhat order

def bruhat_leq(N, M):
    """N <= M: equal margins and every corner sum of N dominates that of M."""
    N, M = as_matrix(N), as_matrix(M)
    if shape(N) != shape(M) or margins(N) != margins(M):
        return False
    sn, sm = corner_sums(N), corner_sums(M)
    return all(x >= y for rn, rm in zip(sn, sm) for x, y in zip(rn, rm))


def _rect_clear(M, a1, a2, b1, b2):
    for i in range(a1, a2 + 1):
        for j in range(b1, b2 + 1):
            if (i in (a1, a2)) and (j in (b1, b2)):
                continue
            if M[i][j]:
                return False
    return True


def cover_quadruple(N, M):
    """The 0-based (a1, a2, b1, b2) witnessing N covered by M, or None."""
    N, M = as_matrix(N), as_matrix(M)
    if shape(N) != shape(M):
        return None
    diff = [(i, j, M[i][j] - N[i][j])
            for i in range(len(M)) for j in range(len(M[i])) if M[i][j] != N[i][j]]
    if len(diff) != 4:
        return None
    rows = sorted({i for i, _, _ in diff})
    cols = sorted({j for _, j, _ in diff})
    if len(rows) != 2 or len(cols) != 2:
        return None
    (a1, a2), (b1, b2) = rows, cols
    want = {(a1, b2): 1, (a2, b1): 1, (a1, b1): -1, (a2, b2): -1}
    if {(i, j): v for i, j, v in diff} != want:
        return None
    if not (_rect_clear(M, a1, a2, b1, b2) and _rect_clear(N, a1, a2, b1, b2)):
        return None
    return a1, a2, b1, b2


def is_cover(N, M):
    return cover_quadruple(N, M) is not None


def covers_below(M):
    """Every N covered by M, found by scanning corner quadruples."""
    M = as_matrix(M)
    r, c = shape(M)
    out = set()
    for a1 in range(r):
        for a2 in range(a1 + 1, r):
            for b1 in range(c):
                for b2 in range(b1 + 1, c):
                    if M[a1][b2] == 0 or M[a2][b1] == 0:
                        continue
                    if not _rect_clear(M, a1, a2, b1, b2):
                        continue
                    out.add(add_units(M, [(a1, b2, -1), (a2, b1, -1), (a1, b1, 1), (a2, b2, 1)]))
    return out


def covers_above(N):
    """Every M covering N."""
    N = as_matrix(N)
    r, c = shape(N)
    out = set()
    for a1 in range(r):
        for a2 in range(a1 + 1, r):
            for b1 in range(c):
                for b2 in range(b1 + 1, c):
                    if N[a1][b1] == 0 or N[a2][b2] == 0:
                        continue
                    if not _rect_clear(N, a1, a2, b1, b2):
                        continue
                    out.add(add_units(N, [(a1, b2, 1), (a2, b1, 1), (a1, b1, -1), (a2, b2, -1)]))
    return out


def bruhat_chain(N, M):
    """
    A saturated chain N = L_1 < L_2 < ... < L_k = M of covers.

    Each step follows the constructive argument: take the first (a, b) in
    lexicographic order where the entries start to differ, grow the rectangle
    of strict corner-sum dominance to a maximal (r, s), pick (e, f) with
    n_ef > m_ef in the lower-right part, and among quadruples with positive
    corners choose the one of least perimeter (lexicographic tie-break).
    """
    N, M = as_matrix(N), as_matrix(M)
    if not bruhat_leq(N, M):
        raise MatrixError("no chain: first matrix is not below the second")
    chain = [N]
    cur = N
    while cur != M:
        nxt = _chain_step(cur, M)
        if not is_cover(cur, nxt) or not bruhat_leq(nxt, M):
            raise AssertionError("chain step is not a cover below the target")
        chain.append(nxt)
        cur = nxt
    return chain


def _chain_step(N, M):
    n_r, n_c = shape(N)
    sn, sm = corner_sums(N), corner_sums(M)
    # (a, b): first cell with n_ab > m_ab and equality at every other cell weakly above-left
    a = b = None
    for i in range(n_r):
        for j in range(n_c):
            if N[i][j] > M[i][j] and all(
                N[x][y] == M[x][y] for x in range(i + 1) for y in range(j + 1) if (x, y) != (i, j)
            ):
                a, b = i, j
                break
        if a is not None:
            break
    if a is None:
        raise AssertionError("no starting cell although N < M")
    # grow [a, r) x [b, s) while every corner sum inside is strictly larger
    r, s = a + 1, b + 1
    while True:
        if s < n_c and all(sn[i][s] > sm[i][s] for i in range(a, r)):
            s += 1
        elif r < n_r and all(sn[r][j] > sm[r][j] for j in range(b, s)):
            r += 1
        else:
            break
    # p, q: where the rectangle is blocked (corner sums equal)
    p = next((i for i in range(a, r) if s == n_c or sn[i][s] == sm[i][s]), r - 1)
    q = next((j for j in range(b, s) if r == n_r or sn[r][j] == sm[r][j]), s - 1)
    e = f = None
    for i in range(p + 1, min(r, n_r - 1) + 1):
        for j in range(q + 1, min(s, n_c - 1) + 1):
            if N[i][j] > M[i][j]:
                e, f = i, j
                break
        if e is not None:
            break
    if e is None:
        raise AssertionError("no lower-right excess cell")
    best = None
    for i1 in range(a, e + 1):
        for i2 in range(i1 + 1, e + 1):
            for j1 in range(b, f + 1):
                if N[i1][j1] == 0:
                    continue
                for j2 in range(j1 + 1, f + 1):
                    if N[i2][j2] == 0:
                        continue
                    key = (i2 - i1 + j2 - j1, i1, i2, j1, j2)
                    if best is None or key < best:
                        best = key
    _, a1, a2, b1, b2 = best
    return add_units(N, [(a1, b1, -1), (a2, b2, -1), (a1, b2, 1), (a2, b1, 1)])


def bruhat_interval(mu, nu):
    """All of M_{mu,nu} together with the cover edges (N, M) meaning N covered by M."""
    elems = matrices_with_margins(tuple(mu), tuple(nu))
    edges = [(N, M) for M in elems for N in sorted(covers_below(M))]
    return list(elems), edges


def transitive_reduction(elems, leq):
    """Cover pairs of a finite poset given by a comparison function."""
    elems = list(elems)
    less = {x: [y for y in elems if y != x and leq(x, y)] for x in elems}
    out = set()
    for x in elems:
        for y in less[x]:
            if not any(z != y and leq(z, y) for z in less[x]):
                out.add((x, y))
    return out


# closed and open orbits

@dataclass(frozen=True)
class Classification:
    closed: bool
    open: bool
    rows: tuple       # a_1 <= ... (1-based), support cells in row-major order
    cols: tuple       # b_1, ...
    parts: tuple      # entries at those cells

    @property
    def kind(self):
        if self.closed:
            return "closed"
        return "open" if self.open else "neither"


def support(M):
    """Non-zero cells in row-major order, 0-based."""
    return [(i, j) for i, row in enumerate(M) for j, x in enumerate(row) if x]


def classify(M):
    M = as_matrix(M)
    cells = support(M)
    a = tuple(i + 1 for i, _ in cells)
    b = tuple(j + 1 for _, j in cells)
    closed = all(b[t] <= b[t + 1] for t in range(len(b) - 1))
    # open: ordering the cells of each row right to left gives non-increasing columns
    rev = [j for _, j in sorted(cells, key=lambda c: (c[0], -c[1]))]
    opened = all(rev[t] >= rev[t + 1] for t in range(len(rev) - 1))
    return Classification(closed, opened, a, b, tuple(M[i][j] for i, j in cells))


def is_closed(M):
    return classify(M).closed


def is_open(M):
    return classify(M).open


def is_diagonal(M):
    return all(x == 0 for i, row in enumerate(M) for j, x in enumerate(row) if i != j)


# coarsening

def coarsen(M, mu, nu):
    """
    Block sums of M: row group k has mu[k] consecutive rows, column group l
    has nu[l] consecutive columns (zero-size groups give zero rows/columns).
    """
    M = as_matrix(M)
    r, c = shape(M)
    if sum(mu) != r or sum(nu) != c or min(tuple(mu) + tuple(nu), default=0) < 0:
        raise MatrixError("groups %s x %s do not fit a %dx%d matrix" % (tuple(mu), tuple(nu), r, c))
    rstart = [sum(mu[:k]) for k in range(len(mu))]
    cstart = [sum(nu[:l]) for l in range(len(nu))]
    return tuple(
        tuple(
            sum(M[i][j] for i in range(rstart[k], rstart[k] + mu[k])
                for j in range(cstart[l], cstart[l] + nu[l]))
            for l in range(len(nu))
        )
        for k in range(len(mu))
    )


def permutation_matrix(w):
    """Matrix with ones at (i, w[i]), 0-based one-line notation."""
    n = len(w)
    return tuple(tuple(1 if w[i] == j else 0 for j in range(n)) for i in range(n))


# DOT output

def matrix_label(M):
    return ";".join(",".join(str(x) for x in row) for row in M)


def hasse_dot(mu, nu, name="bruhat"):
    """DOT digraph of the Bruhat order on M_{mu,nu}; an edge N -> M for each cover."""
    elems, edges = bruhat_interval(mu, nu)
    elems = sorted(elems, key=lambda m: (orbit_dim(m), m))
    ids = {m: "m%d" % i for i, m in enumerate(elems)}
    lines = ["digraph %s {" % name, "  rankdir=BT;"]
    for m in elems:
        lines.append('  %s [label="%s"];' % (ids[m], matrix_label(m)))
    for N, M in sorted(edges, key=lambda e: (ids[e[0]], ids[e[1]])):
        lines.append("  %s -> %s;" % (ids[N], ids[M]))
    lines.append("}")
    return "\n".join(lines) + "\n"
