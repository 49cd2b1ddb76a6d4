"""
The circ product of orbit matrices: multiplication by almost diagonal
matrices, minimal division, factorization and general products.

``None`` stands for the zero product (margins that do not match).
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import (
    MatrixError,
    add_units,
    as_matrix,
    diag,
    diagonal_norm,
    is_diagonal,
    margins,
    unit_vector,
    vadd,
)


@dataclass(frozen=True)
class AlmostDiag:
    """E(base, k) = Diag(base) + E_{k,k+1} or F(base, k) = Diag(base) + E_{k+1,k}; k is 1-based."""

    kind: str
    base: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        if self.kind not in ("E", "F"):
            raise ValueError("kind must be 'E' or 'F'")
        if not 1 <= self.k < len(self.base):
            raise ValueError("step %d out of range for n=%d" % (self.k, len(self.base)))
        if any(x < 0 for x in self.base):
            raise ValueError("negative part in %s" % (self.base,))

    @property
    def n(self):
        return len(self.base)

    def matrix(self):
        k = self.k - 1
        cell = (k, k + 1) if self.kind == "E" else (k + 1, k)
        return add_units(diag(self.base), [(cell[0], cell[1], 1)])

    def rows(self):
        return margins(self.matrix())[0]

    def cols(self):
        return margins(self.matrix())[1]

    def to_json(self):
        return {"kind": self.kind, "base": list(self.base), "k": self.k}

    @classmethod
    def from_json(cls, data):
        return cls(data["kind"], tuple(data["base"]), int(data["k"]))

    def __str__(self):
        return "%s(%s,%d)" % (self.kind, ",".join(map(str, self.base)), self.k)


def materialize(D: AlmostDiag):
    return D.matrix()


def circ_almost_diag(D: AlmostDiag, M):
    """D o M for an almost diagonal D; None when the margins do not match."""
    M = as_matrix(M)
    if len(M) != D.n:
        raise MatrixError("size mismatch")
    R, _ = margins(M)
    k = D.k - 1
    if R != D.cols():
        return None
    if D.kind == "E":
        m = max(j for j, x in enumerate(M[k + 1]) if x > 0)
        return add_units(M, [(k + 1, m, -1), (k, m, 1)])
    m = min(j for j, x in enumerate(M[k]) if x > 0)
    return add_units(M, [(k, m, -1), (k + 1, m, 1)])


def min_divisor(M, D: AlmostDiag):
    """The smallest L with D o L = M, or None if there is none."""
    M = as_matrix(M)
    R, _ = margins(M)
    if R != D.rows():
        return None
    k = D.k - 1
    n = len(M[0])
    if D.kind == "E":
        b = None
        for j in range(n - 1, -1, -1):
            if M[k][j] > 0 and all(M[k + 1][t] == 0 for t in range(j + 1, n)):
                b = j
                break
        if b is None:
            return None
        L = add_units(M, [(k + 1, b, 1), (k, b, -1)])
    else:
        b = None
        for j in range(n):
            if M[k + 1][j] > 0 and all(M[k][t] == 0 for t in range(j)):
                b = j
                break
        if b is None:
            return None
        L = add_units(M, [(k, b, 1), (k + 1, b, -1)])
    if circ_almost_diag(D, L) != M:
        raise AssertionError("divisor does not multiply back")
    return L


def _factor_step(M):
    # the almost diagonal left factor peeled off first
    n = len(M)
    R, _ = margins(M)
    upper = [(i, j) for i in range(n) for j in range(n) if j > i and M[i][j] > 0]
    if upper:
        b = max(j for _, j in upper)
        a = max(i for i in range(b) if M[i][b] > 0)
        D = AlmostDiag("E", vadd(R, unit_vector(n, a + 1), -1), a + 1)
        N = add_units(M, [(a + 1, b, 1), (a, b, -1)])
        return D, N
    lower = [(i, j) for i in range(n) for j in range(n) if i > j and M[i][j] > 0]
    if lower:
        b = min(j for _, j in lower)
        a = min(i for i in range(b + 1, n) if M[i][b] > 0)
        D = AlmostDiag("F", vadd(R, unit_vector(n, a + 1), -1), a)
        N = add_units(M, [(a - 1, b, 1), (a, b, -1)])
        return D, N
    return None


def strict_factor_step(M):
    """(D, N) with D o N = M, DN(N) = DN(M) - 1 and N the minimal divisor; None on diagonals."""
    M = as_matrix(M)
    step = _factor_step(M)
    if step is None:
        return None
    D, N = step
    if min_divisor(M, D) != N:
        raise AssertionError("factor step is not the minimal divisor")
    if circ_almost_diag(D, N) != M or diagonal_norm(N) != diagonal_norm(M) - 1:
        raise AssertionError("factor step invariant broken")
    return D, N


def factor(M):
    """Almost diagonal D_1, ..., D_m with M = D_1 o (D_2 o (... o Diag(C^M)))."""
    M = as_matrix(M)
    out = []
    cur = M
    while True:
        step = strict_factor_step(cur)
        if step is None:
            break
        D, cur = step
        out.append(D)
    return out


def apply_factors(factors, N):
    """D_1 o (D_2 o (... o (D_m o N))), or None if some product vanishes."""
    cur = as_matrix(N)
    for D in reversed(list(factors)):
        cur = circ_almost_diag(D, cur)
        if cur is None:
            return None
    return cur


def circ(M, N):
    """M o N through a factorization of M; None if C^M != R^N."""
    M, N = as_matrix(M), as_matrix(N)
    if len(M) != len(N):
        raise MatrixError("size mismatch")
    if margins(M)[1] != margins(N)[0]:
        return None
    if is_diagonal(M):
        return N
    out = apply_factors(factor(M), N)
    if out is None:
        raise AssertionError("composable product vanished")
    return out
