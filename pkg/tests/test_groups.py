import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grouplab import GroupTable, parse_group
from grouplab.groups import (center, centralizer, conjugacy_classes, derived_length,
                             direct_product, exponent, group_from_permutations, is_nilpotent,
                             is_solvable, normal_subgroups, quotient, socle, solvable_radical,
                             subgroup, subgroups)


def test_permutation_closure_orders():
    assert group_from_permutations(3, ["(1 2)", "(1 2 3)"]).order == 6
    assert group_from_permutations(4, ["(1 2)(3 4)", "(1 2 3)"]).order == 12
    assert group_from_permutations(5, ["(1 2 3 4 5)", "(1 2 3)"]).order == 60


def test_direct_products(grp):
    v = direct_product(grp("C2"), grp("C2"))
    assert v.order == 4 and exponent(v) == 2
    g = grp("S3xA5")
    assert g.order == 360
    aa = grp("A5xA5")
    assert aa.order == 3600 and center(aa).order == 1


def test_conjugacy_classes(grp):
    assert sorted(conjugacy_classes(grp("S3")).sizes) == [1, 2, 3]
    assert sorted(conjugacy_classes(grp("A4")).sizes) == [1, 3, 4, 4]
    for spec in ("C7", "V4", "C2xC4"):
        g = grp(spec)
        assert conjugacy_classes(g).k == g.order


def test_centralizer_and_center(grp):
    s3 = grp("S3")
    three = next(x for x in range(6) if s3.element_orders[x] == 3)
    assert centralizer(s3, three).order == 3
    assert center(grp("Q8")).order == 2
    assert center(grp("C6")).order == 6


def test_subgroup_lattice(grp):
    s3 = grp("S3")
    assert len(subgroups(s3)) == 6
    assert sorted(h.order for h in normal_subgroups(s3)) == [1, 3, 6]
    for p in (2, 3, 5, 7):
        assert len(subgroups(grp(f"C{p}"))) == 2


def test_quotients(grp):
    a4 = grp("A4")
    v4 = next(h for h in normal_subgroups(a4) if h.order == 4)
    q, proj = quotient(a4, v4)
    assert q.order == 3 and q.is_abelian
    # projection is a homomorphism
    x, y = np.meshgrid(np.arange(12), np.arange(12))
    assert np.array_equal(proj[a4.mul[x, y]], q.mul[proj[x], proj[y]])
    s3 = grp("S3")
    a3 = next(h for h in normal_subgroups(s3) if h.order == 3)
    assert quotient(s3, a3)[0].order == 2
    triv = next(h for h in normal_subgroups(s3) if h.order == 1)
    assert quotient(s3, triv)[0].order == 6


def test_radical_and_socle(grp):
    a5 = grp("A5")
    assert solvable_radical(a5).order == 1
    assert socle(a5).order == 60
    assert not is_solvable(a5)
    g = grp("S3xA5")
    rad = solvable_radical(g)
    assert rad.order == 6 and g.order // rad.order == 60
    assert derived_length(g, rad) == 2
    for spec in ("C12", "V4"):
        h = grp(spec)
        assert derived_length(h) == 1 and solvable_radical(h).order == h.order


def test_exponent(grp):
    assert exponent(grp("C6")) == 6
    assert exponent(grp("S3")) == 6
    assert exponent(grp("Q8")) == 4


def test_nilpotent(grp):
    assert is_nilpotent(grp("Q8")) and is_nilpotent(grp("D8"))
    assert not is_nilpotent(grp("S3"))


def test_table_validation_rejects_bad_tables():
    with pytest.raises(ValueError):
        GroupTable([[0, 1], [1, 1]])
    # a Latin square with identity that is not associative (a loop of order 5)
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(ValueError):
        GroupTable(loop)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=3))
def test_permutation_groups_satisfy_axioms(gens):
    g = group_from_permutations(5, [tuple(i + 1 for i in p) for p in gens])
    n = g.order
    assert 120 % n == 0
    assert g.is_associative()
    xs = np.arange(n)
    assert (g.mul[xs, g.inv] == 0).all()
    # Lagrange for every cyclic subgroup and the class equation
    assert all(n % o == 0 for o in g.element_orders)
    assert sum(conjugacy_classes(g).sizes) == n


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["S3", "D8", "Q8", "A4", "D12", "C2xC4", "SL(2,3)"]), st.data())
def test_normal_subgroups_are_normal(spec, data):
    g = parse_group(spec)
    subs = normal_subgroups(g)
    h = data.draw(st.sampled_from(subs))
    m = h.mask
    for x in range(g.order):
        assert m[g.conj(x, h.array)].all()
    x = data.draw(st.integers(0, g.order - 1))
    assert centralizer(g, x).mask[x]
    assert subgroup(g, [x]).order == g.element_orders[x]
