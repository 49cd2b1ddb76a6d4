import pytest

from affschur.combinat import compositions, diag, matrices_with_margins, margins
from affschur.oracle import (
    TRIPLE_ONES,
    TRIPLE_PARITY,
    OracleTooLarge,
    circ_oracle,
    dim_intersection,
    enum_flags,
    orbit_matrix_of_pair,
    rank,
    realized_composites,
    realized_matrices,
    rref,
    standard_flag,
    subspaces,
    triple_marginals,
)

AD2 = ((0, 1), (1, 0))
ID2 = ((1, 0), (0, 1))


def test_linear_algebra():
    assert rank([(1, 1), (1, 1)], 2) == 1
    assert rank([(1, 1), (1, 2)], 3) == 2
    assert rref([(0, 1), (1, 1)], 2) == ((1, 0), (0, 1))
    assert dim_intersection(((1, 0),), ((0, 1),), 2) == 0
    assert len(subspaces(3, 1, 2)) == 7
    assert len(subspaces(4, 2, 2)) == 35
    assert len(subspaces(2, 1, 3)) == 4


def test_enum_flags_counts():
    assert len(enum_flags((1, 1), 2)) == 3
    assert len(enum_flags((2,), 2)) == 1
    assert len(enum_flags((1, 1, 1), 2)) == 21
    assert len(enum_flags((1, 0, 1), 2)) == 3
    fl = enum_flags((1, 2), 2)
    assert len(set(fl)) == len(fl) == 7
    assert all(f.type == (1, 2) for f in fl)
    with pytest.raises(ValueError):
        enum_flags((1, 1), 4)


def test_pair_matrices():
    for mu in [(1, 1), (2, 1), (1, 0, 2)]:
        U = standard_flag(mu)
        assert orbit_matrix_of_pair(U, U) == diag(mu)
    a, b = enum_flags((1, 1), 2)[:2]
    assert orbit_matrix_of_pair(a, b) == AD2


def test_realized_matrices():
    assert realized_matrices((1, 1), (1, 1)) == {ID2, AD2}
    assert realized_matrices((2,), (2,)) == {((2,),)}
    for n in (2, 3):
        for d in range(1, 4):
            for mu in compositions(d, n):
                for nu in compositions(d, n):
                    got = realized_matrices(mu, nu)
                    assert got == set(matrices_with_margins(mu, nu))
                    assert all(min(min(r) for r in M) >= 0 for M in got)


def test_circ_oracle_examples():
    assert realized_composites(AD2, AD2) == {ID2, AD2}
    assert circ_oracle(AD2, AD2) == AD2
    assert circ_oracle(AD2, AD2, fix_first=False) == AD2
    M = ((1, 1), (0, 1))
    assert circ_oracle(diag((2, 1)), M) == M
    assert circ_oracle(M, diag((1, 2))) == M
    assert circ_oracle(ID2, diag((2, 0))) is None


def test_q3_agrees_with_q2():
    for M in [AD2, ((1, 1), (0, 1)), ((0, 2), (1, 0))]:
        R, C = margins(M)
        for N in matrices_with_margins(C, R):
            assert circ_oracle(M, N, 3) == circ_oracle(M, N, 2)


def test_cap_guard():
    with pytest.raises(OracleTooLarge):
        enum_flags((1, 1, 1), 2, cap=5)
    with pytest.raises(OracleTooLarge):
        realized_matrices((1, 1, 1), (1, 1, 1), cap=100)


def test_triple_arrays_share_marginals():
    assert triple_marginals(TRIPLE_ONES) == triple_marginals(TRIPLE_PARITY)
    assert TRIPLE_ONES != TRIPLE_PARITY
    assert triple_marginals(TRIPLE_ONES)[0] == ((2, 2), (2, 2))
