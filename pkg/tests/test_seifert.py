import random
from fractions import Fraction

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from csfill.exceptions import PreconditionError, SchemaError
from csfill.seifert import (AbelianGroup, Geometry, Orbifold2, SeifertData, Verdict,
                            chi_orb, classify_orbifold, h1, irreducible_curve_exists,
                            is_haken, is_listed_parabolic, is_triangle_base, orbifold_census,
                            presentation, relation_matrix, smith_invariants, teichmuller_dim,
                            virtually_irreducible_curve_exists)


def S2(*cones):
    return Orbifold2(True, 0, cones)


def sd(gamma=0, fibers=(), orientable=True, genus=0):
    return SeifertData.build(orientable, genus, gamma, fibers)


POINCARE = sd(-1, [(2, 1), (3, 1), (5, 1)])


def sympy_snf(rows, ncols):
    if not rows:
        return []
    d = [abs(int(x)) for x in invariant_factors(Matrix(rows), domain=ZZ)]
    return sorted(d, key=lambda x: (x == 0, x)) + [0] * (min(len(rows), ncols) - len(d))


def test_chi_examples():
    assert chi_orb(S2(2, 3, 6)) == 0
    assert chi_orb(S2(2, 3, 7)) == Fraction(-1, 42)
    assert chi_orb(Orbifold2(True, 1)) == 0
    assert chi_orb(Orbifold2(True, 0, (2, 3), boundary=1)) == Fraction(-1, 6)


def test_classify_examples():
    assert classify_orbifold(S2(2, 3, 5)) is Geometry.SPHERICAL
    assert classify_orbifold(Orbifold2(False, 1, (2, 2))) is Geometry.PARABOLIC
    assert classify_orbifold(S2(2, 3, 7)) is Geometry.HYPERBOLIC
    assert classify_orbifold(Orbifold2(True, 0, (2, 3), boundary=1)) is Geometry.HYPERBOLIC


def test_parabolic_list_examples():
    assert is_listed_parabolic(S2(4, 2, 4))
    assert is_listed_parabolic(S2(2, 2, 2, 2))
    assert not is_listed_parabolic(S2(2, 3, 7))
    with pytest.raises(PreconditionError):
        is_listed_parabolic(Orbifold2(True, 0, (), boundary=1))


def test_orbifold_validation():
    with pytest.raises(PreconditionError):
        Orbifold2(True, 0, (1, 3))
    with pytest.raises(PreconditionError):
        Orbifold2(False, 0)
    with pytest.raises(PreconditionError):
        sd(0, [(4, 2)])
    with pytest.raises(PreconditionError):
        sd(0, [(3, 3)])
    with pytest.raises(PreconditionError):
        SeifertData(Orbifold2(True, 0, (2,), boundary=1), 0, ((2, 1),))
    with pytest.raises(PreconditionError):
        SeifertData(S2(2, 3), 0, ((2, 1),))


def test_presentation_examples():
    p = presentation(sd())
    assert p.generators == ("h",)
    assert str(h1(sd())) == "Z"
    p = presentation(POINCARE)
    assert len(p.generators) == 4 and len(p.relators) == 4
    assert p.central == ("h",)
    p = presentation(sd(6, genus=1))
    assert p.generators == ("a1", "b1", "h") and len(p.relators) == 1
    assert str(p).startswith("< a1, b1, h | h central")


def test_nonorientable_presentation():
    p = presentation(sd(0, [(2, 1)], orientable=False, genus=1))
    assert p.generators == ("a1", "x1", "h")
    assert p.central == ()
    assert len(p.relators) == 4


def test_h1_examples():
    assert h1(sd(6, genus=1)) == AbelianGroup(2, (6,))
    assert h1(POINCARE) == AbelianGroup(0, ())
    assert h1(POINCARE).order() == 1
    assert h1(sd()) == AbelianGroup(1, ())


def test_h1_more():
    # frozen from the sympy oracle
    assert h1(sd(-2, [(2, 1)] * 4)) == AbelianGroup(1, (2, 2))
    assert h1(sd(-2, [(2, 1), (2, 1), (3, 1), (3, 2)])) == AbelianGroup(1, ())
    assert h1(sd(0, orientable=False, genus=1)) == AbelianGroup(0, (2, 2))
    assert h1(sd(1, [(2, 1)])) == AbelianGroup(0, (3,))
    # lens space from one fibre: |H1| = |alpha*gamma + beta|
    for a in range(2, 9):
        for b in range(1, a):
            if Fraction(b, a).denominator != a:
                continue
            for g in range(-3, 4):
                assert h1(sd(g, [(a, b)])).order() == abs(a * g + b) or a * g + b == 0


def test_euler_number_zero_iff_infinite_h1():
    rng = random.Random(2)
    for _ in range(150):
        genus = rng.randint(0, 2)
        fibers = []
        for _ in range(rng.randint(0, 4)):
            a = rng.randint(2, 9)
            b = rng.choice([b for b in range(1, a) if Fraction(b, a).denominator == a])
            fibers.append((a, b))
        gamma = rng.randint(-4, 4)
        e = gamma + sum(Fraction(b, a) for a, b in fibers)
        g = h1(sd(gamma, fibers, genus=genus))
        assert g.rank == 2 * genus + (1 if e == 0 else 0)


def test_smith_matches_sympy():
    rng = random.Random(7)
    for _ in range(200):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        assert smith_invariants(rows, n) == sympy_snf(rows, n)


def test_presentations_match_sympy():
    rng = random.Random(4)
    for _ in range(40):
        fibers = [(a, 1) for a in rng.sample(range(2, 10), rng.randint(0, 4))]
        s = sd(rng.randint(-3, 3), fibers, orientable=rng.random() < 0.7, genus=1)
        pres = presentation(s)
        n = len(pres.generators)
        rows = relation_matrix(pres)
        assert smith_invariants(rows, n) == sympy_snf(rows, n)


def test_smith_row_operation_invariance():
    rng = random.Random(9)
    rows = relation_matrix(presentation(POINCARE))
    base = smith_invariants(rows, 4)
    for _ in range(30):
        i, j = rng.sample(range(len(rows)), 2)
        k = rng.randint(-3, 3)
        rows[i] = [a + k * b for a, b in zip(rows[i], rows[j])]
        assert smith_invariants(rows, 4) == base


def test_teichmuller_examples():
    assert teichmuller_dim(S2(2, 3, 7)) == 0
    assert teichmuller_dim(Orbifold2(True, 2)) == 6
    assert teichmuller_dim(S2(2, 3, 7, 7)) == 2
    assert teichmuller_dim(Orbifold2(False, 3)) == 3
    with pytest.raises(PreconditionError):
        teichmuller_dim(S2(2, 3, 6))


def test_census_parabolic_set_and_teichmuller():
    census = orbifold_census()
    zero = {(o.orientable, o.genus, o.cone_orders) for o in census if chi_orb(o) == 0}
    assert zero == {(True, 1, ()), (False, 2, ()), (True, 0, (2, 2, 2, 2)), (True, 0, (2, 3, 6)),
                    (True, 0, (2, 4, 4)), (True, 0, (3, 3, 3)), (False, 1, (2, 2))}
    for o in census:
        assert is_listed_parabolic(o) == (classify_orbifold(o) is Geometry.PARABOLIC)
        if classify_orbifold(o) is Geometry.HYPERBOLIC:
            d = teichmuller_dim(o)
            assert d >= 0
            assert (d == 0) == is_triangle_base(o)


def test_irreducible_curve_examples():
    d = irreducible_curve_exists(sd(-1, [(2, 1), (3, 1), (7, 1)]))
    assert d.verdict is Verdict.NO and d.reason == "non-Haken triangle base"
    for g in (-2, 0, 5):
        d = irreducible_curve_exists(sd(g, genus=1))
        assert d.verdict is Verdict.NO and d.reason == "torus without cone points excluded"
    d = irreducible_curve_exists(sd(-2, [(2, 1)] * 4))
    assert not h1(sd(-2, [(2, 1)] * 4)).finite
    assert d.verdict is Verdict.YES and d.reason == "Haken, parabolic non-excluded form"
    assert irreducible_curve_exists(sd(0, orientable=False, genus=1)).verdict is Verdict.YES
    assert irreducible_curve_exists(sd(0)).verdict is Verdict.NO


def test_virtually_irreducible_examples():
    # hyperbolic non-triangle base with infinite H1
    t = sd(-1, [(2, 1), (2, 1)], genus=1)
    assert not h1(t).finite and classify_orbifold(t.base) is Geometry.HYPERBOLIC
    assert virtually_irreducible_curve_exists(t).verdict is Verdict.YES
    # S2(2,3,7,7) with finite H1 is still Haken
    w = sd(-1, [(2, 1), (3, 1), (7, 1), (7, 1)])
    assert h1(w).finite
    assert is_haken(w).verdict is Verdict.YES
    assert virtually_irreducible_curve_exists(w).verdict is Verdict.YES
    for parabolic in (sd(-2, [(2, 1)] * 4), sd(3, genus=1), sd(-1, [(2, 1), (3, 1), (6, 1)])):
        assert virtually_irreducible_curve_exists(parabolic).verdict is Verdict.NO
    assert virtually_irreducible_curve_exists(sd(-1, [(2, 1), (3, 1), (7, 1)])).verdict is Verdict.NO


def test_haken_rules():
    assert is_haken(POINCARE).verdict is Verdict.NO
    assert is_haken(sd(6, genus=1)).verdict is Verdict.YES
    assert is_haken(sd(0)).verdict is Verdict.NO          # S1 x S2
    assert is_haken(sd(0, [(2, 1)], orientable=False, genus=1)).verdict is Verdict.NO
    assert is_haken(sd(0, [(2, 1), (3, 1)], orientable=False, genus=1)).verdict is Verdict.YES


def test_json_roundtrip():
    for s in (POINCARE, sd(2, [(5, 2)], orientable=False, genus=2)):
        assert SeifertData.from_json(s.to_json()) == s
    for bad in ({}, {"base": 3}, {"base": {}, "fibers": [[1, 2, 3]]}, {"base": {}, "gamma": "x"}):
        with pytest.raises(SchemaError):
            SeifertData.from_json(bad)
