import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grouplab import parse_group
from grouplab.automorphisms import automorphism_group, fix, identity, inner
from grouplab.groups import centralizer, conjugacy_classes, normal_subgroups
from grouplab.powermaps import (check_fiber_law, check_func_gadget, check_lE, check_lThree,
                                check_lTwo, check_shiftCor, check_shiftTwo_fibers, func_value,
                                generalized_count_cosetwise, generalized_p_set, inverted_by_inner,
                                l_counts, l_value, lhat, maxsqrt, p_set, sqrt_counts)


def test_l2_values(grp):
    assert l_value(grp("A4"), 2)[0] == 5
    assert l_value(grp("V4"), 2)[0] == 1


def test_inversion_counts(grp):
    assert l_value(grp("S3"), -1)[0] == 4
    for spec in ("C7", "V4", "C2xC6"):
        g = grp(spec)
        assert l_value(g, -1)[0] == g.order
    assert l_value(grp("D8"), -1)[0] == 6


def test_power_sets_verify(grp, aut):
    for a in aut("A4"):
        for e in (-1, 2, 3):
            assert p_set(a, e).verify()


def test_identity_automorphism_count(grp):
    for spec in ("S3", "Q8", "A4", "C12"):
        g = grp(spec)
        xs = np.arange(g.order)
        for e in (-1, 2, 3):
            direct = int((g.power(xs, e - 1) == 0).sum())
            assert len(p_set(identity(g), e)) == direct


def test_maxsqrt(grp):
    assert maxsqrt(grp("S3")) == 4
    assert maxsqrt(grp("S5")) == 26
    for spec in ("C9", "C15", "C3xC5"):
        assert maxsqrt(grp(spec)) == 1


def test_inner_inversion_equals_maxsqrt(grp):
    assert inverted_by_inner(grp("S3"))[0] == 4
    for spec in ("C8", "V4", "C2xC4"):
        g = grp(spec)
        xs = np.arange(g.order)
        assert inverted_by_inner(g)[0] == int((g.mul[xs, xs] == 0).sum())


def test_quaternion_inner_inversion_identity(grp):
    q8 = grp("Q8")
    xs = np.arange(8)
    sq = q8.mul[xs, xs]
    for h in range(8):
        inverted = set(np.flatnonzero(q8.conj(h, xs) == q8.inv).tolist())
        roots = np.flatnonzero(sq == q8.power(h, -2))
        assert inverted == {int(q8.mul[r, h]) for r in roots}


def test_sqrt_of_identity(grp):
    for spec in ("S4", "D12", "Q8", "A5"):
        g = grp(spec)
        assert sqrt_counts(g)[0] == int((g.element_orders == 2).sum()) + 1


def test_func(grp):
    assert func_value(grp("C3"))[0] == 3
    for spec in ("S3", "D8", "A4", "Q8", "C6"):
        g = grp(spec)
        assert func_value(g)[0] >= l_value(g, 2)[0]


def test_lhat_shift_recursion_s3(grp, aut):
    s3 = grp("S3")
    A = aut("S3")
    a3 = next(h for h in normal_subgroups(s3) if h.order == 3)
    best = 0
    for a, b1, b2, b3 in itertools.product(A.elements, repeat=4):
        direct = len(generalized_p_set(a, (b1, b2, b3)))
        assert generalized_count_cosetwise(a, (b1, b2, b3), a3) == direct
        best = max(best, direct)
    assert lhat(s3, 3, A)[0] == best
    assert lhat(s3, 3, A, reduce_first=False)[0] == best


def test_lemma_bound_s3(grp, aut):
    s3 = grp("S3")
    k = conjugacy_classes(s3).k
    for a in aut("S3"):
        assert len(p_set(a, -1)) <= k * fix(a).order


@pytest.mark.parametrize("spec", ["S3", "A4", "D8", "Q8", "C2xC4", "SL(2,3)", "S4", "D12"])
def test_lemma_families(spec, grp, aut):
    g, A = grp(spec), aut(spec)
    for check in (check_lE, check_lTwo, check_lThree, check_fiber_law, check_shiftCor,
                  check_shiftTwo_fibers):
        rep = check(g, A)
        assert rep.ok, (check.__name__, rep.failures)
        assert rep.passed > 0


def test_func_gadget_exhaustive_s3(grp, aut):
    A = aut("S3")
    for a, b in itertools.product(A.elements, repeat=2):
        assert check_func_gadget(grp("S3"), a, b)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["S3", "D8", "Q8", "A4", "C2xC4", "D10", "C3xS3"]), st.data())
def test_power_count_properties(spec, data):
    g = parse_group(spec)
    A = automorphism_group(g)
    e = data.draw(st.sampled_from([-1, 2, 3, 4]))
    counts = l_counts(A, e)
    i = data.draw(st.integers(0, len(A) - 1))
    a = A.elements[i]
    assert counts[i] == len(p_set(a, e))
    # conjugating the automorphism by an automorphism keeps |P_e|
    j = data.draw(st.integers(0, len(A) - 1))
    b = A.elements[j]
    assert len(p_set(b @ a @ b.inverse(), e)) == counts[i]
    assert 0 in p_set(a, e).members
    # P_1(tau_x) is the centralizer of x
    x = data.draw(st.integers(0, g.order - 1))
    assert len(p_set(inner(g, x), 1)) == centralizer(g, x).order
