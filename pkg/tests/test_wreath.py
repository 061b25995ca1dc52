import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grouplab import parse_group
from grouplab.automorphisms import identity, inner
from grouplab.errors import PermNotTrivial, PreconditionViolated
from grouplab.groups import conjugacy_classes
from grouplab.powermaps import p_set
from grouplab.wreath import (WreathElement, all_tuples, ambient_cubed, c_determination_ratio,
                             coordinate_agreement, coordinate_condition, coset_survivor_fraction,
                             determination_instance, ncycle_inversion_count, opportune_family,
                             survivor_count, wreath_group)


def test_c2_wreath_is_d8(grp):
    T = wreath_group(grp("C2"), 2).to_table()
    d8 = grp("D8")
    assert T.order == 8 and not T.is_abelian
    assert np.array_equal(np.bincount(T.element_orders), np.bincount(d8.element_orders))
    assert sorted(conjugacy_classes(T).sizes) == sorted(conjugacy_classes(d8).sizes)


def test_orders_and_identity(grp):
    W = wreath_group(grp("S3"), 2)
    assert W.order == 72 and W.to_table().order == 72
    x = WreathElement.make(W, (3, 5), (1, 0))
    e = WreathElement.make(W, (0, 0))
    assert x * e == x and e * x == x
    assert x * x.inverse() == e
    assert W.random_associativity_check(2000, seed=1)


def test_opportune_trivial_and_cycle():
    fam = opportune_family(np.arange(10), np.arange(10))
    assert fam.opportune == () and fam.family == () and fam.verify()
    fam = opportune_family(np.roll(np.arange(32), 1), np.arange(32))
    assert len(fam.opportune) == 32 and len(fam.family) >= 2 and fam.verify()


def test_opportune_random_256():
    rng = np.random.default_rng(0)
    for _ in range(200):
        fam = opportune_family(rng.permutation(256), rng.permutation(256))
        assert fam.verify()
        assert len(fam.family) >= math.ceil(len(fam.opportune) / 16)


def _cubing_pair(W, rng, perm):
    from grouplab.wreath import _conjugator
    while True:
        beta = WreathElement.from_batch(W, W.random(rng, 1, perm=perm))
        alpha = _conjugator(W, beta, beta ** 3, rng)
        if alpha is not None:
            return alpha, beta


def test_coordinate_condition_basics(grp):
    W = wreath_group(grp("S3"), 2)
    rng = np.random.default_rng(3)
    alpha, beta = _cubing_pair(W, rng, (1, 0))
    assert coordinate_condition(alpha, beta, WreathElement.make(W, (0, 0)))
    with pytest.raises(PermNotTrivial):
        coordinate_condition(alpha, beta, WreathElement.make(W, (0, 0), (1, 0)))
    with pytest.raises(PreconditionViolated):
        coordinate_condition(WreathElement.make(W, (0, 0)), WreathElement.make(W, (1, 0), (1, 0)),
                             WreathElement.make(W, (0, 0)))


def test_coordinate_agreement(grp):
    res = coordinate_agreement(grp("S3"), 2, 500, seed=0, beta_perm=(1, 0))
    assert res == {"trials": 500, "agree": 500, "disagree": 0}
    # n = 1 is the single-coordinate cube equation
    assert coordinate_agreement(grp("S3"), 1, 200, seed=1)["disagree"] == 0


def test_ncycle(grp, aut):
    c2, s3 = grp("C2"), grp("S3")
    count, members = ncycle_inversion_count(c2, [identity(c2)] * 2)
    assert count == 2 and set(members) == {(0, 0), (1, 1)}
    rng = np.random.default_rng(5)
    A = aut("S3").elements
    for _ in range(30):
        alphas = [A[i] for i in rng.integers(0, 6, size=3)]
        assert ncycle_inversion_count(s3, alphas)[0] <= 6
    for a in A:
        assert ncycle_inversion_count(s3, [a])[0] == len(p_set(a, -1))


def test_survivors_a5(grp, aut):
    a5 = grp("A5")
    ident = identity(a5)
    assert survivor_count(a5, 0, ident, ident) == 16
    rng = np.random.default_rng(9)
    for _ in range(100):
        k, x, y = (int(v) for v in rng.integers(0, 60, size=3))
        assert survivor_count(a5, k, inner(a5, x), inner(a5, y)) <= 59
    rep = coset_survivor_fraction(a5, [0, 0], [ident, ident], [ident, ident])
    assert rep.strict and rep.ok and rep.counts == (16, 16)


def test_survivors_c2_not_strict(grp):
    c2 = grp("C2")
    rep = coset_survivor_fraction(c2, 0, identity(c2), identity(c2))
    assert not rep.strict and rep.counts == (2,)


def test_determination_degenerate_cases():
    K = all_tuples(3, 2)
    r = c_determination_ratio(K, K, (0, 1), 3, 2)
    assert r.C == 1 and r.bound == pytest.approx(len(K))
    r = c_determination_ratio(K, K, (), 3, 2)
    assert r.C == len(K)


def test_determination_instance_a4(grp):
    inst = determination_instance(grp("A4"), 12, 2, (1, 0), seed=0)
    assert len(inst["reports"]) == 4
    assert all(r.ok for r in inst["reports"])
    alpha, beta = inst["alpha"], inst["beta"]
    W = alpha.group
    for row in inst["K_beta"][:20]:
        k = WreathElement.make(W, row)
        assert ambient_cubed(alpha, k * beta)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["C2", "C3", "S3", "V4"]), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_wreath_group_laws(spec, n, seed):
    W = wreath_group(parse_group(spec), n)
    rng = np.random.default_rng(seed)
    x, y, z = (W.random(rng, 20) for _ in range(3))
    assert W.equal(W.mul(W.mul(x, y), z), W.mul(x, W.mul(y, z))).all()
    assert W.equal(W.mul(x, W.inv(x)), W.identity(20)).all()
    assert W.equal(W.inv(W.mul(x, y)), W.mul(W.inv(y), W.inv(x))).all()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 64), st.data())
def test_opportune_family_property(n, data):
    sa = data.draw(st.permutations(range(n)))
    sb = data.draw(st.permutations(range(n)))
    fam = opportune_family(sa, sb)
    assert fam.verify()
    flat = [i for om in fam.family for i in om]
    assert len(flat) == len(set(flat))
