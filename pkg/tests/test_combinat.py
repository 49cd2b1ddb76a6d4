import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affschur.combinat import (
    MatrixError,
    all_matrices,
    bruhat_chain,
    bruhat_interval,
    bruhat_leq,
    classify,
    coarsen,
    compositions,
    corner_sum,
    covers_below,
    covers_above,
    diag,
    diagonal_norm,
    hasse_dot,
    is_cover,
    margins,
    matrices_with_margins,
    orbit_dim,
    permutation_matrix,
    transitive_reduction,
)

M9 = ((2, 1, 0), (0, 2, 0), (0, 1, 3))
ID2, AD2 = ((1, 0), (0, 1)), ((0, 1), (1, 0))
ID3, AD3 = diag((1, 1, 1)), ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def margin_classes(n, d):
    for R in compositions(d, n):
        for C in compositions(d, n):
            yield R, C, matrices_with_margins(R, C)


def test_margins():
    assert margins(M9) == ((3, 2, 4), (2, 4, 3))
    assert margins(((0, 0), (0, 0))) == ((0, 0), (0, 0))
    assert margins(diag((2, 0, 1))) == ((2, 0, 1), (2, 0, 1))


def test_corner_sum():
    assert corner_sum(AD2, 1, 1) == 0
    assert corner_sum(AD2, 2, 2) == 2
    assert corner_sum(M9, 2, 2) == 5
    with pytest.raises(IndexError):
        corner_sum(AD2, 3, 1)


def test_orbit_dim():
    assert orbit_dim(ID2) == 1
    assert orbit_dim(AD2) == 2
    for mu in [(2, 1), (1, 0, 2), (1, 1, 1), (3,)]:
        d = sum(mu)
        partial = [sum(mu[:i + 1]) for i in range(len(mu))]
        assert orbit_dim(diag(mu)) == sum(m * (d - s) for m, s in zip(mu, partial))


def test_bruhat_examples():
    assert bruhat_leq(ID2, AD2)
    assert bruhat_leq(AD2, AD2)
    assert not bruhat_leq(AD2, ID2)
    assert is_cover(ID2, AD2)
    assert not is_cover(AD2, AD2)
    assert not is_cover(ID3, AD3)


def test_covers_below_examples():
    assert covers_below(AD2) == {ID2}
    assert covers_below(diag((1, 2))) == set()
    assert len(covers_below(AD3)) == 2


def test_classify_examples():
    c = classify(M9)
    assert c.closed and c.kind == "closed"
    assert c.rows == (1, 1, 2, 3, 3)
    assert c.cols == (1, 2, 2, 2, 3)
    assert c.parts == (2, 1, 2, 1, 3)
    assert classify(diag((1, 2))).closed
    c = classify(AD2)
    assert c.open and not c.closed and c.kind == "open"


def test_coarsen_examples():
    N = ((0, 1, 1), (0, 1, 0), (1, 1, 0), (1, 0, 0), (0, 1, 2))
    # rows grouped by the row pattern of the staircase, then by its column pattern
    assert coarsen(N, (2, 1, 2), (1, 1, 1)) == ((0, 2, 1), (1, 1, 0), (1, 1, 2))
    assert coarsen(N, (1, 3, 1), (1, 1, 1)) == ((0, 1, 1), (2, 2, 0), (0, 1, 2))
    assert coarsen(AD2, (2,), (2,)) == ((2,),)
    assert coarsen(ID2, (1, 1), (2, 0)) == ((1, 0), (1, 0))
    with pytest.raises(MatrixError):
        coarsen(ID2, (3,), (2,))


def test_chain_examples():
    assert bruhat_chain(AD2, AD2) == [AD2]
    assert bruhat_chain(ID2, AD2) == [ID2, AD2]
    assert len(bruhat_chain(ID3, AD3)) == 4
    with pytest.raises(MatrixError):
        bruhat_chain(AD2, ID2)


def test_diagonal_norm():
    assert diagonal_norm(diag((3, 1))) == 0
    assert diagonal_norm(((1, 1, 1), (0, 1, 0), (1, 0, 2))) == 5
    assert diagonal_norm(((1, 1), (0, 2))) == 1


def test_matrix_counts():
    assert len(all_matrices(2, 1)) == 4
    assert len(all_matrices(1, 5)) == 1
    assert sum(len(ms) for _, _, ms in margin_classes(2, 2)) == 10
    # 3x3 matrices with all margins (1,1,1) are the permutation matrices
    assert len(matrices_with_margins((1, 1, 1), (1, 1, 1))) == 6


def test_order_axioms_exhaustive():
    for n in (1, 2, 3):
        for d in range(0, 5):
            for R, C, ms in margin_classes(n, d):
                for a in ms:
                    assert bruhat_leq(a, a)
                    for b in ms:
                        if a != b and bruhat_leq(a, b):
                            assert not bruhat_leq(b, a)
                            assert orbit_dim(a) < orbit_dim(b)


def test_transitivity_sampled():
    rng = random.Random(3)
    for R, C, ms in margin_classes(3, 4):
        if len(ms) < 3:
            continue
        for _ in range(30):
            a, b, c = (rng.choice(ms) for _ in range(3))
            if bruhat_leq(a, b) and bruhat_leq(b, c):
                assert bruhat_leq(a, c)


def test_covers_match_transitive_reduction():
    for n in (1, 2, 3):
        for d in range(0, 5):
            for R, C, ms in margin_classes(n, d):
                red = transitive_reduction(ms, bruhat_leq)
                got = {(a, b) for a in ms for b in ms if is_cover(a, b)}
                assert got == red
                assert {(N, M) for M in ms for N in covers_below(M)} == red
                assert {(N, M) for N in ms for M in covers_above(N)} == red
                for a, b in red:
                    assert diagonal_norm(a) <= diagonal_norm(b)


def test_extremes_open_closed():
    # open orbits are exactly the maxima, closed orbits exactly the minima
    for n in (2, 3):
        for d in range(0, 5):
            for R, C, ms in margin_classes(n, d):
                for m in ms:
                    top = all(bruhat_leq(x, m) for x in ms)
                    bottom = all(bruhat_leq(m, x) for x in ms)
                    assert classify(m).open == top
                    assert classify(m).closed == bottom


def test_chains_random_pairs():
    rng = random.Random(11)
    pool = [ms for n in (2, 3, 4) for d in range(2, 5) for _, _, ms in margin_classes(n, d) if len(ms) > 2]
    done = 0
    while done < 100:
        ms = rng.choice(pool)
        a, b = rng.choice(ms), rng.choice(ms)
        if not bruhat_leq(a, b):
            continue
        ch = bruhat_chain(a, b)
        assert ch[0] == a and ch[-1] == b
        assert all(is_cover(x, y) for x, y in zip(ch, ch[1:]))
        done += 1


def test_s3_chain_lengths_follow_inversions():
    from itertools import permutations

    def inv(w):
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    for w in permutations(range(3)):
        assert len(bruhat_chain(ID3, permutation_matrix(w))) == inv(w) + 1


def test_hasse_dot():
    dot = hasse_dot((1, 1), (1, 1))
    assert dot.count("->") == 1 and dot.count("label=") == 2
    dot = hasse_dot((1, 1, 1), (1, 1, 1))
    assert dot.count("->") == 8 and dot.count("label=") == 6
    elems, edges = bruhat_interval((3,), (3,))
    assert len(elems) == 1 and not edges


@st.composite
def comparable_pair(draw):
    n = draw(st.integers(2, 3))
    d = draw(st.integers(1, 4))
    R = draw(st.sampled_from(list(compositions(d, n))))
    C = draw(st.sampled_from(list(compositions(d, n))))
    ms = matrices_with_margins(R, C)
    return draw(st.sampled_from(ms)), draw(st.sampled_from(ms))


@settings(max_examples=150, deadline=None)
@given(comparable_pair(), st.data())
def test_coarsen_monotone(pair, data):
    a, b = pair
    if not bruhat_leq(a, b):
        a, b = b, a
    if not bruhat_leq(a, b):
        return
    n = len(a)
    cut = data.draw(st.integers(0, n))
    mu = (cut, n - cut)
    cut2 = data.draw(st.integers(0, n))
    nu = (cut2, n - cut2)
    assert bruhat_leq(coarsen(a, mu, nu), coarsen(b, mu, nu))
