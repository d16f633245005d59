import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from csfill.catalog import TREFOIL_BAND, trefoil_claims
from csfill.exceptions import PreconditionError
from csfill.filling_bounds import (BoundContext, Certificate, Cyclic, FiniteSeifert,
                                   FiniteType, InfiniteSeifert, MeridianS3, NormBound,
                                   Reducible, audit_fillings, audit_rows, distance_bound,
                                   distance_bound_int, norm_bound, slope_grid,
                                   torus_knot_surgery, triangle_type)
from csfill.lattice import MERIDIAN, distance, slope_of

T = FiniteType


def test_norm_bound_examples():
    assert norm_bound(T.C, BoundContext(2)) == NormBound(2, exact=True)
    assert norm_bound(T.I, BoundContext(1)) == NormBound(5)
    assert norm_bound(T.D, BoundContext(3, 10, {2})) == NormBound(6)
    assert norm_bound(T.Q, BoundContext(3, 10, {2})) == NormBound(6)
    assert norm_bound(T.D, BoundContext(3, 1, {2})) == NormBound(4)


def test_distance_bound_examples():
    assert distance_bound(T.C, BoundContext(7)) == 1
    assert distance_bound(T.I, BoundContext(1)) == 5
    assert distance_bound(T.O, BoundContext(3)) == 2
    assert distance_bound(T.T, BoundContext(4)) == Fraction(3, 2)
    assert distance_bound_int(T.T, BoundContext(4)) == 1
    assert distance_bound(T.D, BoundContext(1, 3, {2})) == 2


def test_hypothesis_must_be_certified():
    ctx = BoundContext(1, certificate=None)
    with pytest.raises(PreconditionError):
        norm_bound(T.C, ctx)
    with pytest.raises(PreconditionError):
        distance_bound(T.I, ctx)
    with pytest.raises(PreconditionError):
        BoundContext(0)
    with pytest.raises(PreconditionError):
        BoundContext(1, -1)
    assert BoundContext(1, certificate=Certificate.SMALL_MANIFOLD_SUBVARIETY).multiplicity_hypothesis_ok


@given(st.integers(1, 50), st.integers(0, 50), st.sampled_from(list(FiniteType)))
def test_bound_monotonicity(s, n, t):
    a, b = BoundContext(s, n), BoundContext(s, n + 1)
    assert norm_bound(t, a).value <= norm_bound(t, b).value
    assert distance_bound(t, a) <= distance_bound(t, b)
    c = BoundContext(s, n, {2})
    assert norm_bound(t, c).value <= norm_bound(t, a).value
    assert distance_bound(t, c) <= distance_bound(t, a)


def test_triangle_type_examples():
    assert triangle_type(2, 3, 5) is T.I
    assert triangle_type(2, 3, 6) is None
    assert triangle_type(2, 2, 7) is T.D
    assert triangle_type(3, 2, 4) is T.O
    assert triangle_type(3, 3, 2) is T.T
    assert triangle_type(1, 9, 9) is T.C


def test_triangle_type_exhaustive():
    for p, q, e in itertools.product(range(1, 31), repeat=3):
        infinite = Fraction(1, p) + Fraction(1, q) + Fraction(1, e) <= 1
        assert (triangle_type(p, q, e) is None) == infinite


def test_torus_knot_examples():
    assert torus_knot_surgery(3, 2, slope_of(6, 1)) == Reducible(3, 2)
    assert torus_knot_surgery(3, 2, slope_of(1, 1)) == FiniteSeifert(T.I, (3, 2, 5))
    assert torus_knot_surgery(3, 2, MERIDIAN) == MeridianS3()
    assert torus_knot_surgery(3, 2, slope_of(7, 1)) == Cyclic(7)
    assert torus_knot_surgery(3, 2, slope_of(0, 1)) == InfiniteSeifert((3, 2, 6))
    assert torus_knot_surgery(2, 5, slope_of(9, 1)) == Cyclic(9)
    with pytest.raises(PreconditionError):
        torus_knot_surgery(2, 4, MERIDIAN)
    with pytest.raises(PreconditionError):
        torus_knot_surgery(1, 4, MERIDIAN)


def test_trefoil_census():
    grid = list(slope_grid(100, 10))
    assert len(grid) == len(set(grid))
    for r in grid:
        c = torus_knot_surgery(3, 2, r)
        assert c.finite_or_cyclic == (1 <= abs(r.p - 6 * r.q) <= 5)
        if isinstance(c, FiniteSeifert):
            assert sum(Fraction(1, x) for x in c.triple) > 1
        if isinstance(c, InfiniteSeifert):
            assert sum(Fraction(1, x) for x in c.triple) <= 1


def test_trefoil_audit_clean_and_sharp():
    claims = trefoil_claims()
    assert len(claims) == 10
    assert audit_fillings(TREFOIL_BAND, claims) == []
    rows = audit_rows(TREFOIL_BAND, claims)
    assert all(r.attained for r in rows)
    assert {r.distance for r in rows if r.type is T.I} == {5}


def test_audit_flags_distance_six():
    ctx = BoundContext(1)
    bad = [(slope_of(12, 1), T.I, ctx)]
    out = audit_fillings(TREFOIL_BAND, trefoil_claims() + bad)
    assert [r.slope for r in out] == [slope_of(12, 1)]
    assert out[0].distance == 6


def test_audit_empty_and_wrong_s():
    assert audit_fillings(TREFOIL_BAND, []) == []
    rows = audit_rows(TREFOIL_BAND, [(slope_of(5, 1), T.C, BoundContext(2))])
    assert not rows[0].ok


def test_d_type_needs_dihedral_character_for_sharpness():
    rows = audit_rows(TREFOIL_BAND, trefoil_claims(n_dihedral=0))
    bad = {str(r.slope) for r in rows if not r.ok}
    assert bad == {"4/1", "8/1"}


def test_norm_case_audit_has_no_distance():
    from csfill.seminorm import CullerShalenSeminorm
    sn = CullerShalenSeminorm.from_pairs([(1, 0), (0, 1)])
    rows = audit_rows(sn, [(slope_of(1, 1), T.T, BoundContext(1))])
    assert rows[0].distance is None and rows[0].norm == 2 and rows[0].ok
