import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affschur.combinat import compositions
from affschur.kclasses import E, F, H, op_equal
from affschur.symfunc import LaurentPoly as L
from affschur.symfunc import complete_h, elementary_e
from affschur.verify import (
    RELATION_NAMES,
    Report,
    all_ok,
    generation_check,
    h_span_contains,
    is_degenerate,
    relation_instances,
    verify_all,
    verify_plactic,
    verify_relation,
    verify_star_vs_op,
    witness_b,
    witness_b_action,
)


def test_relation_counts():
    r = verify_relation("1.1", 2, 2, 2)
    assert r.ok and r.count == 25 and r.counterexample is None
    r = verify_relation("1.3", 2, 2, 2)
    assert r.ok and r.count == 0
    r = verify_relation("3.2", 2, 1, 2)
    assert r.ok and r.count > 0


def test_every_tag_has_instances_for_n4():
    seen = {rid.name for rid, _, _ in relation_instances(4, window=1)}
    assert seen == set(RELATION_NAMES)


def test_verify_all_small():
    for n, d in [(2, 1), (2, 2)]:
        reps = verify_all(n, d, window=1)
        assert all_ok(reps), [r for r in reps if not r.ok]
        assert [r.tag for r in reps] == list(RELATION_NAMES)


def test_report_failure_and_json():
    r = Report("x", 2, 2, 1)
    r.record("first", True)
    r.record("second", False)
    r.record("third", False)
    assert not r.ok and r.counterexample == "second" and r.count == 3
    back = Report.from_json(r.to_json())
    assert back.ok is False and back.counterexample == "second" and back.count == 3


def test_plactic():
    assert verify_plactic(3, 2).ok
    assert verify_plactic(2, 3).count == 0
    # negative control: adjacent E's do not commute
    assert not op_equal([E(1, 0), E(2, 0)], [E(2, 0), E(1, 0)], 3, 2)


def test_wrong_relation_is_caught():
    # sign flipped in the two-term E relation
    assert not op_equal([E(1, 0), E(1, 1)], [(1, [E(1, 0), E(1, 2)])], 2, 2)
    assert not op_equal([E(1, 0), F(1, 0)], [F(1, 0), E(1, 0)], 2, 2)


def test_star_vs_op():
    r = verify_star_vs_op(2, 2, window=1)
    assert r.ok and r.count > 0
    r = verify_star_vs_op(2, 3, window=1)
    assert r.ok and r.count > 0


def test_generation_examples():
    res = generation_check((2,), 3)
    assert all(res.values()) and "e_2(X1)^-1" in res and "e_2(X1)" in res
    assert all(generation_check((1, 1), 2).values())
    assert all(generation_check((0, 2), 3).values())
    # targets that are not block-symmetric are not reached
    assert not h_span_contains((2,), L.var(2, 0), 2)
    assert h_span_contains((2,), complete_h(2, [0, 1], 2), 2)
    assert h_span_contains((1, 1), elementary_e(1, [1], 2, inverse=True), 2)
    with pytest.raises(ValueError):
        h_span_contains((2,), L.var(2, 0) + L.one(2), 2)


def test_witness_examples():
    w = witness_b((1, 1))
    assert w.support == [(1, 1)] and w.value == L.monomial((-1, -1))
    w = witness_b((3,))
    assert w.value == L.monomial((-1, -1, -1)) and w.support_ok
    w = witness_b((2,))
    assert w.value == -L.monomial((-1, -1))
    # zero parts widen the support
    assert witness_b((0, 1, 1)).support == [(1, 0, 1), (0, 1, 1)]
    assert witness_b((2, 0)).value == L.zero(2)


def test_witness_scoped_claims():
    for d in range(1, 5):
        for n in range(1, 5):
            for mu in compositions(d, n):
                w = witness_b(mu)
                if min(mu) > 0:
                    assert w.support_ok, mu
                if not is_degenerate(mu):
                    assert w.value_ok, mu
                else:
                    assert not w.value


def test_witness_vanishes_on_larger_parts():
    for mu in compositions(3, 3):
        w = witness_b(mu)
        for nu in compositions(3, 3):
            if nu != mu and any(a > b for a, b in zip(nu, mu)) and min(mu) > 0:
                assert nu not in w.support


def test_witness_action_matches_class():
    for mu in [(1, 1), (1, 2), (2, 1, 1)]:
        f = L.monomial((1,) + (0,) * (sum(mu) - 1))
        w = witness_b(mu)
        out = witness_b_action(mu, f)
        assert out.comps == {mu: w.value * f}


@settings(max_examples=20, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_commutator_depends_only_on_sum(p, q, s):
    for n, d in [(2, 2), (3, 2)]:
        for k in range(1, n):
            a = [(1, [E(k, p), F(k, q)]), (-1, [F(k, q), E(k, p)])]
            b = [(1, [E(k, p + s), F(k, q - s)]), (-1, [F(k, q - s), E(k, p + s)])]
            assert op_equal(a, b, n, d)
            assert op_equal(a, [H(k, p + q)], n, d)
