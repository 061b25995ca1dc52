import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grouplab import parse_group
from grouplab.automorphisms import (Automorphism, automorphism_group, f_map, fix, identity, inner,
                                    inversion, mao, power_automorphism, shift, t_map)
from grouplab.errors import NotAHomomorphism, NotBijective
from grouplab.groups import centralizer


def test_aut_orders(aut):
    assert len(aut("S3")) == 6 and aut("S3").inner_count == 6
    assert len(aut("V4")) == 6
    assert len(aut("Q8")) == 24
    assert len(aut("A5")) == 120


@pytest.mark.parametrize("n", range(1, 33))
def test_aut_cyclic_is_unit_group(n):
    phi = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
    assert len(automorphism_group(parse_group(f"C{n}"))) == phi


def test_fixed_points(grp):
    c5 = grp("C5")
    assert fix(inversion(c5)).order == 1
    s3 = grp("S3")
    assert fix(identity(s3)).order == 6
    for x in range(6):
        assert np.array_equal(fix(inner(s3, x)).mask, centralizer(s3, x).mask)


def test_t_map(grp):
    c5 = grp("C5")
    a = inversion(c5)
    xs = np.arange(5)
    assert np.array_equal(t_map(a, xs), c5.power(xs, -2))
    s3 = grp("S3")
    assert t_map(inner(s3, 3), 0) == 0
    assert (t_map(identity(s3), np.arange(6)) == 0).all()


def test_shift(grp):
    s3 = grp("S3")
    xs = np.arange(6)
    assert np.array_equal(shift(identity(s3), 3, xs), s3.power(xs, 3))
    assert np.array_equal(shift(inner(s3, 4), 1, xs), xs)
    for g in range(6):
        expect = s3.mul[xs, s3.conj(g, xs)]
        assert np.array_equal(shift(inner(s3, g), 2, xs), expect)


def test_f_map_fibers(grp):
    s3 = grp("S3")
    xs = np.arange(6)
    assert np.array_equal(f_map(0, identity(s3), xs), s3.power(xs, 2))
    assert np.bincount(f_map(2, inner(s3, 1), xs)).sum() == 6
    a4 = grp("A4")
    xs = np.arange(12)
    for g in range(12):
        f = f_map(0, inner(a4, g), xs)
        for h in range(12):
            fiber = set(np.flatnonzero(f == f[h]).tolist())
            a = inner(a4, h) @ inner(a4, g)
            inverted = np.flatnonzero(a.image == a4.inv)
            assert fiber == {int(a4.mul[p, h]) for p in inverted}


def test_mao(grp):
    assert mao(grp("V4")) == 3
    assert mao(grp("S3")) == 3
    assert mao(grp("C2")) == 1


def test_validation(grp):
    s3 = grp("S3")
    with pytest.raises(NotBijective):
        Automorphism(s3, [0, 0, 1, 2, 3, 4])
    with pytest.raises(NotAHomomorphism):
        inversion(s3)
    assert power_automorphism(grp("C7"), 3).order == 6


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["S3", "D8", "Q8", "A4", "C2xC4", "D10", "SL(2,3)"]), st.data())
def test_aut_group_closed_under_composition(spec, data):
    g = parse_group(spec)
    A = automorphism_group(g)
    i = data.draw(st.integers(0, len(A) - 1))
    j = data.draw(st.integers(0, len(A) - 1))
    a, b = A.elements[i], A.elements[j]
    assert (a @ b) in A and a.inverse() in A
    assert (a @ a.inverse()).is_identity
    x, y = data.draw(st.integers(0, g.order - 1)), data.draw(st.integers(0, g.order - 1))
    assert a(g.mul[x, y]) == g.mul[a(x), a(y)]
    assert fix(a).order * len(set(t_map(a, np.arange(g.order)).tolist())) == g.order
