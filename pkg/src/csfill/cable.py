"""
Fillings of cable spaces.

C is the (m, n) cable space, n >= 2, with boundary tori T+ and T-.  In the
bases {mu+, lambda+} and {mu-, lambda-} the Seifert fibre classes are

    phi+ = (mn, 1),    phi- = (m, n).

Filling T+ along a slope at distance 1 from phi+, i.e. along
(kmn + 1) mu+ + k lambda+, gives a solid torus whose meridian is
(kmn + 1) mu- + k n^2 lambda- on T-.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .exceptions import PreconditionError
from .lattice import PeripheralClass, Slope, as_class, distance, slope_of

__all__ = [
    "CableSpace",
    "fill_plus",
    "meridian_image",
    "distance_scaling",
    "IcosahedralCable",
    "KleinCable",
    "icosahedral_cable",
    "klein_cable",
    "feasible_multiplicity_triples",
]


@dataclass(frozen=True)
class CableSpace:
    m: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise PreconditionError(f"cable space needs n >= 2, got n = {self.n}")

    @property
    def phi_plus(self):
        return PeripheralClass(self.m * self.n, 1)

    @property
    def phi_minus(self):
        return PeripheralClass(self.m, self.n)


@functools.lru_cache(maxsize=4096)
def fill_plus(cs: CableSpace, k: int):
    """(alpha(r) on T+, meridian of the resulting solid torus on T-)."""
    m, n = cs.m, cs.n
    return (PeripheralClass(k * m * n + 1, k),
            PeripheralClass(k * m * n + 1, k * n * n))


def _twist(cs: CableSpace, r) -> int:
    """The k with r = +-(kmn + 1, k); r must be at distance 1 from phi+."""
    r = as_class(r)
    a, b = r.p, r.q
    sign = a - cs.m * cs.n * b
    if abs(sign) != 1:
        raise PreconditionError(
            f"slope {a}/{b} is at distance {abs(sign)} from phi+, not 1")
    return sign * b


def meridian_image(cs: CableSpace, r) -> Slope:
    return slope_of(*fill_plus(cs, _twist(cs, r))[1])


def distance_scaling(cs: CableSpace, r1, r2):
    """(distance on T+, distance of the meridian images on T-).

    The second is always n^2 times the first.
    """
    inner = distance(r1, r2)
    k1, k2 = _twist(cs, r1), _twist(cs, r2)
    outer = distance(fill_plus(cs, k1)[1], fill_plus(cs, k2)[1])
    assert outer == cs.n ** 2 * inner
    return inner, outer


@dataclass(frozen=True)
class IcosahedralCable:
    """Cable of type (m, n) on a Seifert space with base D^2(2,3,5).

    Classes on the outer torus are written in the basis {beta, alpha(phi_1)}.
    """

    k: int
    cable: CableSpace
    r1: PeripheralClass
    r2: PeripheralClass
    r1_image: PeripheralClass
    r2_image: PeripheralClass
    delta_r1_r2: int
    delta_r1_image_fibre: int
    delta_r2_image_fibre: int

    @property
    def r2_finite(self):
        return self.delta_r2_image_fibre == 1

    @property
    def r1_vertical_torus(self):
        """M(r1) is Seifert with an essential vertical torus."""
        return self.delta_r1_image_fibre > 1


def icosahedral_cable(k: int, m: int, n: int) -> IcosahedralCable:
    cs = CableSpace(m, n)
    r1, out1 = fill_plus(cs, k)
    r2, out2 = fill_plus(cs, 0)
    # gluing: mu- -> beta = (1, 0), lambda- -> alpha(phi_1) = (0, 1)
    fibre = PeripheralClass(0, 1)
    return IcosahedralCable(k, cs, r1, r2, out1, out2, distance(r1, r2),
                      distance(out1, fibre), distance(out2, fibre))


@dataclass(frozen=True)
class KleinCable:
    """Cable of type (1, 2) on the twisted I-bundle over the Klein bottle.

    Outer classes are written in the basis {beta, alpha(phi_1)}.
    """

    k: int
    r1: PeripheralClass
    r2: PeripheralClass
    delta_r1_r2: int
    delta_r1_phi_plus: int
    delta_r2_phi_plus: int
    r2_meridian_image: PeripheralClass
    delta_r2_image_fibre: int
    other_fibre_image: PeripheralClass

    @property
    def r2_finite(self):
        return self.delta_r2_image_fibre >= 2


def klein_cable(k: int) -> KleinCable:
    cs = CableSpace(1, 2)
    r1 = PeripheralClass(4 * k, 2 * k + 1)
    r2 = PeripheralClass(1, 0)
    # gluing: mu- -> (2k+1) beta - 2 alpha(phi_1), lambda- -> -k beta + alpha(phi_1)
    mu_img = PeripheralClass(2 * k + 1, -2)
    lam_img = PeripheralClass(-k, 1)
    # r2 fills to a solid torus with meridian +-mu-
    meridian = fill_plus(cs, _twist(cs, r2))[1]
    assert slope_of(*meridian) == slope_of(1, 0)
    fibre = PeripheralClass(0, 1)
    # k mu- + (2k+1) lambda- is the other Seifert fibre of C(r1)
    other = k * mu_img + (2 * k + 1) * lam_img
    return KleinCable(k, r1, r2, distance(r1, r2), distance(r1, cs.phi_plus),
                      distance(r2, cs.phi_plus), mu_img,
                      distance(mu_img, fibre), other)


def feasible_multiplicity_triples(n=None, min_delta=1, products=(1, 3), bound=None):
    """Integer triples (n, delta, delta_phi) with n >= 2, delta, delta_phi >= 1
    and n * delta * delta_phi in `products`.

    Each factor is at most max(products), so the search is exhaustive.
    Pass n to fix it, min_delta to restrict delta from below.
    """
    top = bound or max(products)
    ns = [n] if n is not None else range(2, top + 1)
    out = set()
    for nn, d, dphi in itertools.product(ns, range(1, top + 1), range(1, top + 1)):
        if nn >= 2 and d >= min_delta and nn * d * dphi in products:
            out.add((nn, d, dphi))
    return out
