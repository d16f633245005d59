import pytest

from csfill.cable import (CableSpace, distance_scaling, feasible_multiplicity_triples,
                          fill_plus, icosahedral_cable, klein_cable, meridian_image)
from csfill.exceptions import PreconditionError
from csfill.lattice import PeripheralClass, distance, slope_of


def test_fill_plus_examples():
    assert fill_plus(CableSpace(1, 2), 1) == (PeripheralClass(3, 1), PeripheralClass(3, 4))
    assert fill_plus(CableSpace(2, 3), 2) == (PeripheralClass(13, 2), PeripheralClass(13, 18))
    for m, n in [(1, 2), (-3, 5), (4, 7)]:
        assert fill_plus(CableSpace(m, n), 0) == (PeripheralClass(1, 0), PeripheralClass(1, 0))


def test_cable_space_needs_n_at_least_two():
    with pytest.raises(PreconditionError):
        CableSpace(1, 1)
    with pytest.raises(PreconditionError):
        icosahedral_cable(-1, 1, 1)


def test_fill_plus_identities_on_grid():
    for m in range(-20, 21):
        for n in range(2, 11):
            cs = CableSpace(m, n)
            for k in range(-20, 21):
                alpha, mer = fill_plus(cs, k)
                assert distance(alpha, cs.phi_plus) == 1
                assert distance(mer, cs.phi_minus) == n


def test_distance_scaling_examples():
    cs = CableSpace(1, 2)
    a0, a1, a3 = (fill_plus(cs, k)[0] for k in (0, 1, 3))
    assert distance_scaling(cs, a0, a1) == (1, 4)
    assert distance_scaling(cs, a1, a3) == (2, 8)
    assert distance_scaling(cs, a1, a1) == (0, 0)


def test_distance_scaling_grid():
    for m in range(-6, 7):
        for n in range(2, 8):
            cs = CableSpace(m, n)
            for k1 in range(-6, 7):
                for k2 in range(-6, 7):
                    a1, a2 = fill_plus(cs, k1)[0], fill_plus(cs, k2)[0]
                    inner, outer = distance_scaling(cs, a1, a2)
                    assert inner == abs(k1 - k2) and outer == n * n * inner


def test_meridian_image_accepts_signs_and_rejects_far_slopes():
    cs = CableSpace(1, 2)
    assert meridian_image(cs, (-3, -1)) == slope_of(3, 4)
    assert meridian_image(cs, slope_of(3, 1)) == slope_of(3, 4)
    with pytest.raises(PreconditionError):
        meridian_image(cs, (2, 1))


def test_icosahedral_cable_examples():
    e = icosahedral_cable(5, 1, 2)
    assert e.delta_r1_r2 == 5 and tuple(e.r1) == (11, 5)
    assert e.r2_finite and e.r1_vertical_torus
    assert icosahedral_cable(0, 1, 2).delta_r1_r2 == 0
    for k in range(-100, 101):
        assert icosahedral_cable(k, 1, 2).delta_r1_r2 == abs(k)


def test_klein_cable_examples():
    assert klein_cable(1).delta_r1_r2 == 3 and klein_cable(1).r2_finite
    e0 = klein_cable(0)
    assert e0.delta_r1_r2 == 1 and not e0.r2_finite
    assert klein_cable(-3).delta_r1_r2 == 5
    for k in range(-100, 101):
        e = klein_cable(k)
        assert e.delta_r1_r2 == abs(2 * k + 1)
        assert tuple(e.other_fibre_image) == (0, 1)
        assert e.delta_r1_phi_plus == 2 and e.delta_r2_phi_plus == 1


def test_feasible_triples():
    assert feasible_multiplicity_triples() == {(3, 1, 1)}
    assert feasible_multiplicity_triples(n=2) == set()
    assert feasible_multiplicity_triples(min_delta=2) == set()
    assert feasible_multiplicity_triples(bound=50) == {(3, 1, 1)}
