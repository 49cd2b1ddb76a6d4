import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affschur.symfunc import (
    LaurentPoly,
    SymClass,
    coset_representatives,
    coset_symmetrize,
    complete_h,
    demazure_merge,
    elementary_e,
    merge_blocks,
    pullback,
    pushforward,
    schur_general,
    straighten,
)

L = LaurentPoly


def x(n, i, p=1):
    return L.var(n, i, p)


def test_h_and_e():
    assert complete_h(1, [0, 1], 2) == x(2, 0) + x(2, 1)
    assert complete_h(0, [0, 1], 2) == L.one(2)
    assert complete_h(2, [0, 1], 2) == x(2, 0, 2) + L.monomial((1, 1)) + x(2, 1, 2)
    assert elementary_e(2, [0, 1], 2) == L.monomial((1, 1))
    assert elementary_e(1, [0, 1], 2, inverse=True) == x(2, 0, -1) + x(2, 1, -1)
    assert elementary_e(0, [0, 1], 2) == L.one(2)
    assert elementary_e(3, [0, 1], 2) == L.zero(2)


def test_laurent_arithmetic():
    a = x(2, 0) + x(2, 1, -1)
    assert a * a == x(2, 0, 2) + L.monomial((1, -1), 2) + x(2, 1, -2)
    assert a - a == L.zero(2)
    assert (a ** 0) == L.one(2)
    assert L.monomial((2, -1)) ** -1 == L.monomial((-2, 1))
    with pytest.raises(ValueError):
        a + L.one(3)
    assert L.from_json(a.to_json(), 2) == a


def test_straighten():
    assert straighten((0, 1)) is None
    assert straighten((-1,), 2) is None
    assert straighten((-2,), 2) == (-1, (0, 0), 1)
    assert straighten((2, 1)) == (1, (2, 1), 0)


def test_schur_examples():
    assert schur_general((1, 0), [0, 1], 2) == x(2, 0) + x(2, 1)
    assert schur_general((1, 1), [0, 1], 2) == L.monomial((1, 1))
    assert schur_general((-2,), [0, 1], 2) == -L.monomial((-1, -1))
    for p in range(-3, 4):
        for q in range(-3, 4):
            assert schur_general((p, q), [0, 1], 2) == -schur_general((q - 1, p + 1), [0, 1], 2)


def test_schur_times_vandermonde_is_alternant():
    rng = random.Random(1)
    for _ in range(20):
        m = rng.randint(1, 3)
        lam = [rng.randint(-3, 3) for _ in range(m)]
        s = schur_general(lam, list(range(m)), m)
        vdm = L.one(m)
        for i in range(m):
            for j in range(i + 1, m):
                vdm = vdm * (x(m, i) - x(m, j))
        alt = L.zero(m)
        for perm in permutations(range(m)):
            sign = 1
            for i in range(m):
                for j in range(i + 1, m):
                    if perm[i] > perm[j]:
                        sign = -sign
            e = [0] * m
            for j in range(m):
                e[perm[j]] = lam[j] + m - 1 - j
            alt = alt + L.monomial(e, sign)
        assert s * vdm == alt


def test_coset_symmetrize():
    assert coset_symmetrize(x(2, 0), (1, 1), (2,)) == x(2, 0) + x(2, 1)
    f = x(3, 0) + x(3, 1) + x(3, 2)
    assert coset_symmetrize(f, (1, 1, 1), (3,)) == f * 6
    g = coset_symmetrize(L.monomial((1, 2, 0)), (1, 1, 1), (3,))
    assert len(g) == 6 and all(c == 1 for c in g.terms.values())
    assert {e for e in g.terms} == set(permutations((1, 2, 0)))
    with pytest.raises(ValueError):
        coset_symmetrize(x(2, 0), (2,), (2,))


def test_coset_representatives_count():
    assert len(coset_representatives((1, 2), (3,))) == 3
    assert len(coset_representatives((2, 2), (4,))) == 6
    assert len(coset_representatives((1, 1, 2), (2, 2))) == 2


def test_demazure_examples():
    assert demazure_merge(L.one(2), 0) == L.one(2)
    assert demazure_merge(x(2, 0), 0) == L.zero(2)
    assert demazure_merge(x(2, 0, -1), 0) == x(2, 0, -1) + x(2, 1, -1)


def test_push_two_singletons_is_schur():
    for p in range(-3, 4):
        for q in range(-3, 4):
            f = SymClass(L.monomial((q, p)), (1, 1))
            assert pushforward(f, 0, "both").poly == schur_general((p, q), [0, 1], 2)


def pi_minus_expected(lam, p):
    # push y_1^p from blocks (1, lam - 1) to (lam)
    ys = list(range(lam))
    if p >= lam:
        top = L.monomial((1,) * lam)
        return top * complete_h(p - lam, ys, lam) * (-1) ** (lam - 1)
    if p > 0:
        return L.zero(lam)
    return complete_h(-p, ys, lam, inverse=True)


def pi_plus_expected(lam, p):
    # push y_lam^p from blocks (lam - 1, 1) to (lam)
    ys = list(range(lam))
    if p >= 0:
        return complete_h(p, ys, lam)
    if p > -lam:
        return L.zero(lam)
    return complete_h(-p - lam, ys, lam, inverse=True) * L.monomial((-1,) * lam) * (-1) ** (lam - 1)


@pytest.mark.parametrize("lam", [1, 2, 3, 4])
def test_case_tables(lam):
    for p in range(-6, 7):
        if lam == 1:
            continue
        got = pushforward(SymClass(x(lam, 0, p), (1, lam - 1)), 0, "both").poly
        assert got == pi_minus_expected(lam, p)
        got = pushforward(SymClass(x(lam, lam - 1, p), (lam - 1, 1)), 0, "both").poly
        assert got == pi_plus_expected(lam, p)


def test_pushforward_of_one_and_zero_blocks():
    for sizes in [(1, 1), (2, 1), (1, 3), (2, 2), (0, 2), (2, 0)]:
        n = sum(sizes)
        assert pushforward(SymClass(L.one(n), sizes), 0).poly == L.one(n)
    with pytest.raises(ValueError):
        pushforward(SymClass(L.one(2), (2,)), 0)


def test_merge_blocks_with_zero_count():
    f = SymClass(x(2, 0), (1, 1))
    assert merge_blocks(f, [2, 0]).sizes == (2, 0)
    assert merge_blocks(f, [0, 2]).poly == merge_blocks(f, [2]).poly


def test_pullback():
    h = complete_h(1, [0, 1], 2)
    assert pullback(SymClass(h, (2,)), (1, 1)).poly == h
    with pytest.raises(ValueError):
        pullback(SymClass(x(2, 0), (1, 1)), (2,))


def test_push_pull_identity():
    rng = random.Random(4)
    for _ in range(20):
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        n = a + b
        e = [rng.randint(-2, 2) for _ in range(n)]
        f = coset_symmetrize(L.monomial(e), (1,) * n, (n,))
        assert pushforward(pullback(SymClass(f, (n,)), (a, b)), 0).poly == f


def random_block_sym(rng, sizes, lo=-2, hi=2):
    n = sum(sizes)
    e = [rng.randint(lo, hi) for _ in range(n)]
    return coset_symmetrize(L.monomial(e), (1,) * n, sizes)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 2), st.integers(0, 10 ** 6))
def test_projection_formula(a, b, seed):
    rng = random.Random(seed)
    n = a + b
    f = random_block_sym(rng, (n,), -1, 1)
    g = random_block_sym(rng, (a, b))
    lhs = pushforward(SymClass(f * g, (a, b)), 0, "both").poly
    rhs = f * pushforward(SymClass(g, (a, b)), 0, "both").poly
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 2), st.integers(1, 2), st.integers(1, 2), st.integers(0, 10 ** 6))
def test_push_commutes_with_untouched_schur(c, a, b, seed):
    # a Schur class on an untouched block passes through the push-forward
    rng = random.Random(seed)
    n = c + a + b
    lam = sorted((rng.randint(-2, 2) for _ in range(c)), reverse=True)
    s = schur_general(lam, list(range(c)), n)
    g = random_block_sym(rng, (c, a, b))
    lhs = pushforward(SymClass(s * g, (c, a, b)), 1, "both").poly
    assert lhs == s * pushforward(SymClass(g, (c, a, b)), 1, "both").poly


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 2), min_size=2, max_size=3), st.integers(0, 10 ** 6))
def test_push_output_is_coarse_symmetric(sizes, seed):
    rng = random.Random(seed)
    g = random_block_sym(rng, tuple(sizes), -3, 3)
    out = pushforward(SymClass(g, tuple(sizes)), 0, "both")
    assert out.is_valid()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_dual_pushforwards_agree_wide_exponents(a, b, seed):
    rng = random.Random(seed)
    g = random_block_sym(rng, (a, b), -4, 4)
    f = SymClass(g, (a, b))
    assert pushforward(f, 0, "direct") == pushforward(f, 0, "demazure")


def test_cleared_reference_matches():
    rng = random.Random(9)
    for _ in range(10):
        g = random_block_sym(rng, (2, 1), -2, 2)
        f = SymClass(g, (2, 1))
        assert pushforward(f, 0, "cleared") == pushforward(f, 0, "direct")


def test_symclass_json_roundtrip():
    f = SymClass(complete_h(2, [0, 1], 3) * x(3, 2, -1), (2, 1))
    assert SymClass.from_json(f.to_json()) == f
    assert f.to_json()["blocks"] == [[0, 2], [2, 3]]
