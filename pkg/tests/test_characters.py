import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from grouplab import parse_group
from grouplab.characters import (character_table, check_square_root_identity, degsum,
                                 fs_indicators, splitting_primes, sqrt_via_characters)
from grouplab.groups import conjugacy_classes, exponent
from grouplab.powermaps import l_value, sqrt_counts


def degree_candidates(order, k):
    """Multisets of k divisors of |G| containing 1 whose squares sum to |G|."""
    divs = [d for d in range(1, order + 1) if order % d == 0]
    return {c for c in itertools.combinations_with_replacement(divs, k)
            if c[0] == 1 and sum(d * d for d in c) == order}


@pytest.mark.parametrize("spec", ["S3", "Q8"])
def test_degrees_against_search(spec, grp):
    g = grp(spec)
    k = conjugacy_classes(g).k
    (only,) = degree_candidates(g.order, k)
    assert tuple(sorted(character_table(g).degrees)) == only
    assert tuple(sorted(character_table(grp("S3")).degrees)) == (1, 1, 2)


def test_abelian_degrees(grp):
    for n in (1, 5, 12):
        assert character_table(grp(f"C{n}")).degrees == (1,) * n


def test_frobenius_schur(grp):
    assert fs_indicators(character_table(grp("S3"))).nu2 == (1, 1, 1)
    t = character_table(grp("C3"))
    nu = fs_indicators(t).nu2
    trivial = next(i for i in range(3) if all(t.value(i, x) == 1 for x in range(3)))
    assert nu[trivial] == 1 and sorted(nu) == [0, 0, 1]
    t = character_table(grp("Q8"))
    nu = fs_indicators(t).nu2
    assert [v for d, v in zip(t.degrees, nu) if d == 2] == [-1]


def test_sqrt_identity_pointwise(grp):
    s3 = grp("S3")
    t = character_table(s3)
    assert sqrt_via_characters(t, fs_indicators(t), 0) == 4
    a4 = grp("A4")
    t = character_table(a4)
    nu = fs_indicators(t)
    direct = sqrt_counts(a4)
    for x in range(12):
        assert sqrt_via_characters(t, nu, x) == direct[x]


def test_degsum(grp):
    assert degsum(character_table(grp("S3"))) == 4 <= math.sqrt(18)
    for spec in ("C6", "V4"):
        g = grp(spec)
        assert degsum(character_table(g)) == g.order
    s4 = grp("S4")
    assert degsum(character_table(s4)) == 10
    assert l_value(s4, -1)[0] <= 10


def test_primes(grp):
    g = grp("A5")
    ps = splitting_primes(g)
    assert len(ps) == 2 and all(p > 120 and p % exponent(g) == 1 for p in ps)
    assert ps[0] < ps[1]


@pytest.mark.parametrize("spec", ["S4", "D10", "SL(2,3)", "A5", "C3xS3", "Q8xC2"])
def test_identity_report(spec, grp):
    rep = check_square_root_identity(grp(spec))
    assert rep.ok, rep.mismatches
    assert sum(d * d for d in rep.degrees) == grp(spec).order


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["S3", "D8", "Q8", "A4", "D10", "C2xC4", "S4", "SL(2,3)"]), st.integers(0, 1))
def test_orthogonality_under_both_primes(spec, which):
    g = parse_group(spec)
    p = splitting_primes(g)[which]
    t = character_table(g, prime=p)
    assert t.check_orthogonality()
    # row of the trivial character is all ones and degrees divide |G|
    assert any((t.values[i] == 1).all() for i in range(t.k))
    assert all(g.order % d == 0 for d in t.degrees)
