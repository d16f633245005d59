import math

import pytest
from hypothesis import given, strategies as st

from csfill.exceptions import PreconditionError, SchemaError
from csfill.lattice import (LONGITUDE, MERIDIAN, PeripheralClass, Slope, distance,
                            h1_filling_order, is_primitive, parse_slope, slope_of)

ints = st.integers(-10**6, 10**6)
nonzero_pairs = st.tuples(ints, ints).filter(lambda v: v != (0, 0))


@pytest.mark.parametrize("a, b, d", [
    ((1, 0), (0, 1), 1),
    ((6, 1), (1, 0), 1),
    ((1, 1), (6, 1), 5),
])
def test_distance_examples(a, b, d):
    assert distance(a, b) == d


@pytest.mark.parametrize("m, n, rep", [((6), 1, (6, 1)), (-6, -1, (6, 1)), (4, 2, (2, 1)),
                                       (0, -3, (0, 1)), (-1, 0, (1, 0))])
def test_slope_of_canonicalises(m, n, rep):
    assert tuple(slope_of(m, n)) == rep


def test_zero_class_rejected():
    with pytest.raises(PreconditionError):
        slope_of(0, 0)


def test_slope_requires_canonical_rep():
    with pytest.raises(PreconditionError):
        Slope(PeripheralClass(-1, 2))
    with pytest.raises(PreconditionError):
        Slope(PeripheralClass(2, 4))


@pytest.mark.parametrize("v, ok", [((3, 5), True), ((2, 4), False), ((0, 1), True), ((0, 0), False)])
def test_is_primitive(v, ok):
    assert is_primitive(v) is ok


def test_h1_filling_order():
    assert h1_filling_order(slope_of(211, 3)) == 211
    assert h1_filling_order(LONGITUDE) == math.inf
    assert h1_filling_order(MERIDIAN) == 1


def test_parse_and_serialise():
    assert parse_slope("6/1") == slope_of(6, 1)
    assert parse_slope("-7") == slope_of(-7, 1)
    assert parse_slope([1, 0]) == MERIDIAN
    assert str(slope_of(1, 0)) == "1/0"
    assert slope_of(-3, 2).to_json() == [3, -2]
    for bad in ("x/2", "1/2/3", [1], [1.5, 2]):
        with pytest.raises(SchemaError):
            parse_slope(bad)
    with pytest.raises(PreconditionError):
        parse_slope("0/0")


def test_class_arithmetic():
    a, b = PeripheralClass(2, 3), PeripheralClass(-1, 4)
    assert a + b == PeripheralClass(1, 7)
    assert a - b == PeripheralClass(3, -1)
    assert 3 * a == a * 3 == PeripheralClass(6, 9)
    assert -a == PeripheralClass(-2, -3)
    assert PeripheralClass(4, 6).content() == 2


@given(nonzero_pairs, nonzero_pairs)
def test_distance_symmetric(a, b):
    assert distance(a, b) == distance(b, a)


@given(nonzero_pairs, nonzero_pairs, st.integers(-50, 50))
def test_distance_scales(a, b, k):
    ka = (k * a[0], k * a[1])
    assert distance(ka, b) == abs(k) * distance(a, b)


@given(nonzero_pairs)
def test_distance_zero_iff_parallel(a):
    assert distance(a, (2 * a[0], 2 * a[1])) == 0
    assert distance(a, (a[0] + 1, a[1])) == abs(a[1])


@given(nonzero_pairs)
def test_slope_of_idempotent(v):
    r = slope_of(*v)
    assert slope_of(*r) == r
    assert math.gcd(r.p, r.q) == 1
    assert r.p > 0 or (r.p, r.q) == (0, 1)


@given(nonzero_pairs, nonzero_pairs, st.integers(-20, 20), st.integers(-20, 20),
       st.integers(-20, 20))
def test_unimodular_invariance(a, b, x, y, z):
    # U = [[1, x], [0, 1]] [[1, 0], [y, 1]] [[1, z], [0, 1]] has det 1
    def act(v):
        p, q = v
        p, q = p + z * q, q
        p, q = p, q + y * p
        return p + x * q, q
    assert distance(act(a), act(b)) == distance(a, b)
