"""
Culler-Shalen seminorms built from ideal-point functionals.

Each ideal point x of a curve of characters contributes an integer linear
functional phi_x on the peripheral lattice; the seminorm is

    ||v|| = sum_x |phi_x(v)|.

The functionals are inputs here.  Computing them from an actual curve
needs valuation theory and is not attempted.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import PreconditionError, SchemaError
from .lattice import PeripheralClass, Slope, as_class, distance, slope_of

__all__ = [
    "IdealFunctional",
    "CullerShalenSeminorm",
    "Norm",
    "Indefinite",
    "Zero",
    "Polygon",
    "Band",
    "Plane",
    "evaluate",
    "pole_order",
    "classify",
    "minimal_value",
    "minimal_vector",
    "fundamental_ball",
    "vertex_slopes",
]


@dataclass(frozen=True)
class IdealFunctional:
    """phi(v) = c1*v.p + c2*v.q, attached to the ideal point `label`."""

    c1: int
    c2: int
    label: str = ""

    def __call__(self, v) -> int:
        v = as_class(v)
        return self.c1 * v.p + self.c2 * v.q

    def is_zero(self):
        return self.c1 == 0 and self.c2 == 0

    def kernel(self) -> Slope:
        """The unique slope on which phi vanishes (the slope associated to x)."""
        if self.is_zero():
            raise PreconditionError("the zero functional has no kernel slope")
        return slope_of(self.c2, -self.c1)

    def to_json(self):
        return {"c1": self.c1, "c2": self.c2, "label": self.label}


@dataclass(frozen=True)
class CullerShalenSeminorm:
    functionals: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "functionals", tuple(self.functionals))

    @classmethod
    def from_pairs(cls, pairs):
        return cls(tuple(IdealFunctional(c1, c2, f"x{i}")
                         for i, (c1, c2) in enumerate(pairs)))

    @classmethod
    def from_json(cls, doc):
        """Build from {"functionals": [{"c1": int, "c2": int, "label": str}]}.

        A bare list of such objects is accepted as well.
        """
        items = doc.get("functionals") if isinstance(doc, dict) else doc
        if not isinstance(items, list):
            raise SchemaError('expected {"functionals": [...]}')
        out = []
        for i, item in enumerate(items):
            if not isinstance(item, dict):
                raise SchemaError(f"functional #{i} is not an object")
            c1, c2 = item.get("c1"), item.get("c2")
            if not (isinstance(c1, int) and isinstance(c2, int)) or \
                    isinstance(c1, bool) or isinstance(c2, bool):
                raise SchemaError(f"functional #{i} needs integer c1 and c2")
            out.append(IdealFunctional(c1, c2, str(item.get("label", f"x{i}"))))
        return cls(tuple(out))

    def to_json(self):
        return {"functionals": [f.to_json() for f in self.functionals]}

    def __call__(self, v):
        return evaluate(self, v)

    def nonzero(self):
        return [f for f in self.functionals if not f.is_zero()]


# classification results

@dataclass(frozen=True)
class Norm:
    def __str__(self):
        return "Norm"


@dataclass(frozen=True)
class Indefinite:
    kernel: Slope

    def __str__(self):
        return f"Indefinite kernel {self.kernel}"


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "Zero"


# fundamental ball shapes

@dataclass(frozen=True)
class Polygon:
    """Compact balanced polygon; vertices in counterclockwise order."""

    vertices: tuple

    def to_json(self):
        return {"kind": "polygon",
                "vertices": [[str(x), str(y)] for x, y in self.vertices]}


@dataclass(frozen=True)
class Band:
    """The band {v : |det(kernel, v)| <= halfwidth}.

    det(kernel, v) = distance-with-sign from the kernel line, so the band is
    the set of classes at (real) distance at most `halfwidth` from the kernel
    slope.
    """

    kernel: Slope
    halfwidth: Fraction

    def to_json(self):
        return {"kind": "band", "kernel": str(self.kernel),
                "halfwidth": str(self.halfwidth)}


@dataclass(frozen=True)
class Plane:
    def to_json(self):
        return {"kind": "plane"}


def evaluate(sn: CullerShalenSeminorm, v) -> int:
    v = as_class(v)
    return sum(abs(f(v)) for f in sn.functionals)


def pole_order(f: IdealFunctional, a) -> int:
    """Order of the pole of f_alpha at the ideal point of f, |phi(alpha)|."""
    return abs(f(a))


def classify(sn: CullerShalenSeminorm):
    live = sn.nonzero()
    if not live:
        return Zero()
    kernels = {f.kernel() for f in live}
    if len(kernels) == 1:
        return Indefinite(kernels.pop())
    return Norm()


def _best_multiplier(sn, b1, b2):
    """Integer mu minimising ||b2 - mu*b1||.

    The function is convex piecewise linear in mu with breakpoints
    phi(b2)/phi(b1) of weight |phi(b1)|, so a weighted median is a real
    minimiser and the integer minimum sits at its floor or ceiling.
    """
    pts = []
    for f in sn.functionals:
        w = abs(f(b1))
        if w:
            pts.append((Fraction(f(b2), f(b1)), w))
    pts.sort()
    total = sum(w for _, w in pts)
    acc = 0
    for t, w in pts:
        acc += w
        if 2 * acc >= total:
            med = t
            break
    lo = med.numerator // med.denominator
    return min((lo, lo + 1), key=lambda mu: evaluate(sn, b2 - mu * b1))


def minimal_vector(sn: CullerShalenSeminorm):
    """(s, alpha) with alpha a primitive class realising the minimal value s.

    Zero seminorms give (0, None).  Norms are handled by generalised Gauss
    reduction, which is exact for any norm on a rank-2 lattice; the
    returned vector is the first vector of a reduced basis.
    """
    kind = classify(sn)
    if isinstance(kind, Zero):
        return 0, None
    if isinstance(kind, Indefinite):
        # every phi is c_x * psi with psi primitive, and psi takes the value 1
        c = sum(abs(f(PeripheralClass(*_unit_partner(kind.kernel))))
                for f in sn.functionals)
        return c, PeripheralClass(*_unit_partner(kind.kernel))
    b1, b2 = PeripheralClass(1, 0), PeripheralClass(0, 1)
    if evaluate(sn, b2) < evaluate(sn, b1):
        b1, b2 = b2, b1
    while True:
        mu = _best_multiplier(sn, b1, b2)
        c = b2 - mu * b1
        if evaluate(sn, c) >= evaluate(sn, b1):
            return evaluate(sn, b1), b1
        b1, b2 = c, b1


def _unit_partner(r: Slope):
    """A class at distance exactly 1 from r (a Farey neighbour)."""
    p, q = r.p, r.q
    # extended Euclid: x*p + y*q = 1, and det((p, q), (-y, x)) = 1
    old_r, rr = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while rr:
        k = old_r // rr
        old_r, rr = rr, old_r - k * rr
        old_s, s = s, old_s - k * s
        old_t, t = t, old_t - k * t
    x, y = old_s * old_r, old_t * old_r    # old_r is +-1 here
    return -y, x


def minimal_value(sn: CullerShalenSeminorm) -> int:
    return minimal_vector(sn)[0]


def _angle_key(v):
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ccw(u, v):
    hu, hv = _angle_key(u), _angle_key(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def fundamental_ball(sn: CullerShalenSeminorm):
    """The ball {v : ||v|| <= s} as a Polygon, Band or Plane.

    In the norm case each kernel line of a nonzero functional carries a
    +-pair of vertices and there are no others, so the vertices are the
    points (s/||u||) * u for u a primitive kernel vector.
    """
    kind = classify(sn)
    if isinstance(kind, Zero):
        return Plane()
    s = minimal_value(sn)
    if isinstance(kind, Indefinite):
        c = s    # psi takes the value 1 on a primitive class, where ||.|| = c
        return Band(kind.kernel, Fraction(s, c))
    verts = []
    for r in vertex_slopes(sn):
        scale = Fraction(s, evaluate(sn, r))
        v = (scale * r.p, scale * r.q)
        verts += [v, (-v[0], -v[1])]
    verts.sort(key=functools.cmp_to_key(_ccw))
    return Polygon(tuple(verts))


def vertex_slopes(sn: CullerShalenSeminorm):
    """Slopes through the vertices of the fundamental polygon, sorted."""
    kind = classify(sn)
    if not isinstance(kind, Norm):
        raise PreconditionError(f"vertex_slopes needs a norm, got {kind}")
    return sorted({f.kernel() for f in sn.nonzero()})


def band_identity_holds(sn: CullerShalenSeminorm, r) -> bool:
    """For an indefinite seminorm: ||r|| == distance(r, kernel) * s."""
    kind = classify(sn)
    if not isinstance(kind, Indefinite):
        raise PreconditionError("band identity needs an indefinite seminorm")
    return evaluate(sn, r) == distance(r, kind.kernel) * minimal_value(sn)
