"""
Norm and distance bounds for finite and cyclic filling slopes, triangle
group types, and the classification of Dehn surgeries on torus knots.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import PreconditionError
from .lattice import MERIDIAN, Slope, as_class, distance, slope_of
from .seminorm import CullerShalenSeminorm, Indefinite, classify, evaluate, minimal_value

__all__ = [
    "FiniteType",
    "Certificate",
    "BoundContext",
    "NormBound",
    "norm_bound",
    "distance_bound",
    "triangle_type",
    "MeridianS3",
    "Reducible",
    "Cyclic",
    "FiniteSeifert",
    "InfiniteSeifert",
    "torus_knot_surgery",
    "AuditRow",
    "audit_rows",
    "audit_fillings",
    "slope_grid",
]


class FiniteType(enum.Enum):
    """Types of finite 3-manifold groups."""

    C = "C"   # cyclic
    D = "D"   # dihedral type
    T = "T"   # tetrahedral type
    O = "O"   # octahedral type
    I = "I"   # icosahedral type
    Q = "Q"   # quaternionic type

    def __str__(self):
        return self.value


class Certificate(enum.Enum):
    """Sufficient conditions for Z_x(f_r1) <= Z_x(f_beta) at every ideal point.

    The multiplicity hypothesis of the bounds cannot be checked without the
    curve itself, so callers certify it by naming one of these.
    """

    NOT_BOUNDARY_SLOPE = "i"
    NOT_STRICT_AND_NOT_VIRTUALLY_ABELIAN = "ii"
    R_CURVE_NO_SURVIVING_CLOSED_SURFACE = "iii"
    SMALL_MANIFOLD_SUBVARIETY = "iv"


@dataclass(frozen=True)
class BoundContext:
    """Data the bounds depend on.

    s                      -- minimal value s(X_0) of the seminorm, >= 1
    n_dihedral             -- number of dihedral characters on X_0 killing r_1
    virtually_irreducible  -- indices q for which X_0 is index-q virtually
                              irreducible
    certificate            -- which Certificate vouches for the multiplicity
                              hypothesis, or None if nobody does
    """

    s: int
    n_dihedral: int = 0
    virtually_irreducible: frozenset = field(default_factory=frozenset)
    certificate: Certificate | None = Certificate.NOT_BOUNDARY_SLOPE

    def __post_init__(self):
        if self.s < 1:
            raise PreconditionError("s(X_0) must be a positive integer")
        if self.n_dihedral < 0:
            raise PreconditionError("n_dihedral must be nonnegative")
        object.__setattr__(self, "virtually_irreducible",
                           frozenset(self.virtually_irreducible))

    @property
    def multiplicity_hypothesis_ok(self):
        return self.certificate is not None


@dataclass(frozen=True)
class NormBound:
    """||alpha(r_1)|| == value if exact, else ||alpha(r_1)|| <= value."""

    value: int
    exact: bool = False

    def admits(self, norm: int) -> bool:
        return norm == self.value if self.exact else norm <= self.value

    def __str__(self):
        return f"= {self.value}" if self.exact else f"<= {self.value}"


# extra amount over s(X_0) allowed for T, O, I slopes
_EXCESS = {FiniteType.T: 2, FiniteType.O: 3, FiniteType.I: 4}


def _check(ctx):
    if not ctx.multiplicity_hypothesis_ok:
        raise PreconditionError(
            "multiplicity hypothesis Z_x(f_r1) <= Z_x(f_beta) is not certified")


def norm_bound(t: FiniteType, ctx: BoundContext) -> NormBound:
    _check(ctx)
    s = ctx.s
    if t is FiniteType.C:
        return NormBound(s, exact=True)
    if t in (FiniteType.D, FiniteType.Q):
        value = s + ctx.n_dihedral
        if 2 in ctx.virtually_irreducible:
            value = min(value, 2 * s)
        return NormBound(value)
    return NormBound(s + _EXCESS[t])


def distance_bound(t: FiniteType, ctx: BoundContext) -> Fraction:
    """Upper bound for distance(r, r_1) when X_0 is an r-curve.

    Exact rational; callers floor it since distances are integers (see
    distance_bound_int).
    """
    _check(ctx)
    s = ctx.s
    if t is FiniteType.C:
        return Fraction(1)
    if t in (FiniteType.D, FiniteType.Q):
        value = 1 + Fraction(ctx.n_dihedral, s)
        if 2 in ctx.virtually_irreducible:
            value = min(value, Fraction(2))
        return value
    return 1 + Fraction(_EXCESS[t], s)


def distance_bound_int(t: FiniteType, ctx: BoundContext) -> int:
    return math.floor(distance_bound(t, ctx))


def triangle_type(p: int, q: int, e: int):
    """Finite type of the (p, q, e) triangle group, or None if it is infinite."""
    if min(p, q, e) < 1:
        raise PreconditionError("triangle group orders must be >= 1")
    if Fraction(1, p) + Fraction(1, q) + Fraction(1, e) <= 1:
        return None
    a, b, c = sorted((p, q, e))
    if a == 1:
        return FiniteType.C
    if (a, b) == (2, 2):
        return FiniteType.D
    return {(2, 3, 3): FiniteType.T,
            (2, 3, 4): FiniteType.O,
            (2, 3, 5): FiniteType.I}[(a, b, c)]


# surgery classes

@dataclass(frozen=True)
class MeridianS3:
    finite_or_cyclic = True

    def __str__(self):
        return "S3 (meridian)"


@dataclass(frozen=True)
class Reducible:
    """Connected sum of lens spaces L(p, .) # L(q, .)."""

    p: int
    q: int
    finite_or_cyclic = False

    def __str__(self):
        return f"reducible L({self.p},*)#L({self.q},*)"


@dataclass(frozen=True)
class Cyclic:
    """Lens space; only the order of its fundamental group is recorded."""

    order: int
    finite_or_cyclic = True

    def __str__(self):
        return f"cyclic, lens space of order {self.order}"


@dataclass(frozen=True)
class FiniteSeifert:
    type: FiniteType
    triple: tuple
    finite_or_cyclic = True

    def __str__(self):
        return f"finite {self.type}-type, S2{self.triple}"


@dataclass(frozen=True)
class InfiniteSeifert:
    triple: tuple
    finite_or_cyclic = False

    def __str__(self):
        return f"infinite, Seifert S2{self.triple}"


def torus_knot_surgery(p: int, q: int, r):
    """Classify m/n surgery on the (p, q) torus knot.

    The fibre slope is pq/1 and the exceptional fibres have orders p, q and
    e = distance(r, pq/1).
    """
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise PreconditionError(f"({p},{q}) is not a nontrivial torus knot type")
    r = r if isinstance(r, Slope) else slope_of(*as_class(r))
    e = distance(r, (p * q, 1))
    if e == 0:
        return Reducible(p, q)
    if e == 1:
        if r == MERIDIAN:
            return MeridianS3()
        return Cyclic(abs(r.p))
    triple = (p, q, e)
    t = triangle_type(*triple)
    if t is None:
        return InfiniteSeifert(triple)
    return FiniteSeifert(t, triple)


def slope_grid(m_max: int, n_max: int):
    """Distinct slopes m/n with |m| <= m_max and 0 <= n <= n_max."""
    seen = set()
    for n in range(0, n_max + 1):
        for m in range(-m_max, m_max + 1):
            if math.gcd(m, n) != 1:
                continue
            r = slope_of(m, n)
            if r not in seen:
                seen.add(r)
                yield r


@dataclass(frozen=True)
class AuditRow:
    slope: Slope
    type: FiniteType
    norm: int
    norm_bound: NormBound
    distance: int | None
    distance_bound: Fraction | None
    s_matches: bool

    @property
    def ok(self):
        if not self.s_matches or not self.norm_bound.admits(self.norm):
            return False
        return self.distance is None or self.distance <= self.distance_bound

    @property
    def attained(self):
        """True when the claim sits exactly on its bound."""
        if self.distance is not None:
            return self.distance == math.floor(self.distance_bound)
        return self.norm == self.norm_bound.value


def audit_rows(sn: CullerShalenSeminorm, claims):
    """One AuditRow per (slope, type, context) claim."""
    kind = classify(sn)
    s = minimal_value(sn)
    rows = []
    for r, t, ctx in claims:
        norm = evaluate(sn, r)
        d = db = None
        if isinstance(kind, Indefinite):
            d = distance(r, kind.kernel)
            db = distance_bound(t, ctx)
        rows.append(AuditRow(r, t, norm, norm_bound(t, ctx), d, db, ctx.s == s))
    return rows


def audit_fillings(sn: CullerShalenSeminorm, claims):
    """The claims that violate their norm or distance bound."""
    return [row for row in audit_rows(sn, claims) if not row.ok]
