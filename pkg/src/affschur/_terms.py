"""
Vectorized term arrays for the heavy push-forward kernels.

A polynomial is a pair (E, C): an int64 exponent matrix with one row per term
and an int64 coefficient vector.  Every kernel checks coefficient magnitudes
and raises OverflowError when exactness could be at risk; callers fall back to
the pure-Python implementation in that case.
"""

import numpy as np

_GUARD = 1 << 40


class Unsafe(OverflowError):
    pass


def _guard(C):
    if C.size and int(np.abs(C).max()) >= _GUARD:
        raise Unsafe("coefficient growth beyond the int64 guard")
    return C


def from_poly(p):
    n = p.nvars
    if not p.terms:
        return np.zeros((0, n), dtype=np.int64), np.zeros(0, dtype=np.int64)
    items = list(p.terms.items())
    for _, c in items:
        if abs(c) >= _GUARD:
            raise Unsafe("input coefficient too large")
    E = np.array([e for e, _ in items], dtype=np.int64).reshape(len(items), n)
    C = np.array([c for _, c in items], dtype=np.int64)
    return E, C


def to_terms(E, C):
    return {tuple(e): c for e, c in zip(E.tolist(), C.tolist()) if c}


def _pack(E):
    # one int64 key per row, order-compatible with lexicographic row order
    if E.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    lo = E.min(axis=0)
    span = E.max(axis=0) - lo + 1
    bits = [max(1, int(s - 1).bit_length()) for s in span]
    if sum(bits) > 62:
        return None
    key = np.zeros(E.shape[0], dtype=np.int64)
    for j, b in enumerate(bits):
        key = (key << b) | (E[:, j] - lo[j])
    return key


def combine(E, C):
    """Merge equal exponent rows and drop zero coefficients."""
    if E.shape[0] == 0:
        return E, C
    key = _pack(E)
    if key is None:
        order = np.lexsort(E.T[::-1])
        Es = E[order]
        new = np.ones(len(order), dtype=bool)
        new[1:] = np.any(Es[1:] != Es[:-1], axis=1)
    else:
        order = np.argsort(key, kind="stable")
        ks = key[order]
        Es = E[order]
        new = np.ones(len(order), dtype=bool)
        new[1:] = ks[1:] != ks[:-1]
    starts = np.flatnonzero(new)
    Cs = np.add.reduceat(C[order], starts)
    Eu = Es[starts]
    keep = Cs != 0
    return Eu[keep], _guard(Cs[keep])


def mul(A, B):
    (E1, C1), (E2, C2) = A, B
    if E1.shape[0] == 0 or E2.shape[0] == 0:
        return E1[:0], C1[:0]
    n = E1.shape[1]
    E = (E1[:, None, :] + E2[None, :, :]).reshape(-1, n)
    C = np.outer(C1, C2).ravel()
    return combine(E, _guard(C))


def add(A, B, sign=1):
    (E1, C1), (E2, C2) = A, B
    return combine(np.vstack([E1, E2]), np.concatenate([C1, sign * C2]))


def swap(A, i, j):
    E, C = A
    E = E.copy()
    E[:, [i, j]] = E[:, [j, i]]
    return E, C


def substitute(A, perm):
    # x_i -> x_{perm[i]}: column i moves to column perm[i]
    E, C = A
    out = np.empty_like(E)
    out[:, perm] = E
    return out, C


def shift(A, exp):
    E, C = A
    return E + np.asarray(exp, dtype=np.int64), C


def div_linear(A, i, j):
    """Exact quotient by (x_j - x_i)."""
    E, C = A
    if E.shape[0] == 0:
        return A
    a = E[:, i]
    t = a + E[:, j]
    G = E.copy()
    G[:, i] = 0
    G[:, j] = t
    gkey = _pack(G)
    if gkey is None:
        raise Unsafe("exponent range too wide to pack")
    order = np.lexsort((a, gkey))
    a, G, C, gkey = a[order], G[order], C[order], gkey[order]
    T = len(a)
    first = np.ones(T, dtype=bool)
    first[1:] = gkey[1:] != gkey[:-1]
    last = np.ones(T, dtype=bool)
    last[:-1] = first[1:]
    cs = np.cumsum(C)
    gid = np.cumsum(first) - 1
    base = (cs - C)[first]
    run = cs - base[gid]
    if np.any(run[last] != 0):
        raise ArithmeticError("not divisible by (x%d - x%d)" % (j + 1, i + 1))
    # running sum r_k covers exponents a_k .. a_{k+1}-1 inside each group
    use = (~last) & (run != 0)
    idx = np.flatnonzero(use)
    if idx.size == 0:
        return E[:0], C[:0]
    gap = a[idx + 1] - a[idx]
    rows = np.repeat(idx, gap)
    offs = np.arange(rows.size) - np.repeat(np.cumsum(gap) - gap, gap)
    aq = a[rows] + offs
    Q = G[rows].copy()
    Q[:, i] = aq
    Q[:, j] = G[rows, j] - 1 - aq
    return Q, _guard(run[rows])
