"""
Closed 2-orbifolds and Seifert fibred 3-manifolds.

A Seifert space W is given by its base orbifold (surface F of genus g,
orientable or not), an integer gamma, and exceptional fibres (alpha_j,
beta_j) with 0 < beta_j < alpha_j and gcd(alpha_j, beta_j) = 1.  Its
fundamental group is

  orientable F:     <a_i, b_i, x_j, h | h central, x_j^alpha_j h^beta_j = 1,
                                        h^gamma = [a_1,b_1]...[a_g,b_g] x_1...x_q>
  nonorientable F:  <a_i, x_j, h | a_i h a_i^-1 = h^-1, x_j^alpha_j h^beta_j = 1,
                                   x_j h x_j^-1 = h, h^gamma = a_1^2...a_g^2 x_1...x_q>

The fibre relator uses the usual Seifert sign, under which
{gamma = -1; (2,1), (3,1), (5,1)} over S^2 is the Poincare sphere.  Writing
x_j^alpha_j = h^beta_j instead amounts to the substitution
(gamma, beta_j) -> (gamma + q, alpha_j - beta_j).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .charvar import Word
from .exceptions import PreconditionError, SchemaError

__all__ = [
    "Orbifold2",
    "SeifertData",
    "Geometry",
    "Presentation",
    "AbelianGroup",
    "Verdict",
    "Decision",
    "chi_orb",
    "classify_orbifold",
    "is_listed_parabolic",
    "is_triangle_base",
    "presentation",
    "relation_matrix",
    "smith_invariants",
    "h1",
    "teichmuller_dim",
    "is_haken",
    "irreducible_curve_exists",
    "virtually_irreducible_curve_exists",
    "orbifold_census",
]


@dataclass(frozen=True)
class Orbifold2:
    """A 2-orbifold: surface of genus g (crosscaps if nonorientable) with
    cone points and boundary circles."""

    orientable: bool = True
    genus: int = 0
    cone_orders: tuple = ()
    boundary: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cone_orders", tuple(sorted(self.cone_orders)))
        if any(a < 2 for a in self.cone_orders):
            raise PreconditionError("cone orders must be >= 2")
        if self.genus < 0 or (not self.orientable and self.genus < 1):
            raise PreconditionError("bad genus for base surface")
        if self.boundary < 0:
            raise PreconditionError("negative number of boundary circles")

    @property
    def closed(self):
        return self.boundary == 0

    def surface_euler(self):
        g = self.genus
        return (2 - 2 * g if self.orientable else 2 - g) - self.boundary

    def __str__(self):
        if self.orientable:
            base = {0: "S2", 1: "T2"}.get(self.genus, f"Sigma_{self.genus}")
        else:
            base = {1: "RP2", 2: "K"}.get(self.genus, f"N_{self.genus}")
        if self.boundary:
            base += f"-{self.boundary}disk"
        if self.cone_orders:
            base += "(" + ",".join(map(str, self.cone_orders)) + ")"
        return base


@dataclass(frozen=True)
class SeifertData:
    base: Orbifold2
    gamma: int = 0
    fibers: tuple = ()

    def __post_init__(self):
        fibers = tuple((int(a), int(b)) for a, b in self.fibers)
        for a, b in fibers:
            if not (0 < b < a and math.gcd(a, b) == 1):
                raise PreconditionError(
                    f"fibre ({a},{b}) must satisfy 0 < beta < alpha, gcd = 1")
        object.__setattr__(self, "fibers", fibers)
        if not self.base.closed:
            raise PreconditionError("Seifert data needs a closed base surface")
        if self.base.cone_orders != tuple(sorted(a for a, _ in fibers)):
            raise PreconditionError("base cone orders disagree with fibres")

    @classmethod
    def build(cls, orientable=True, genus=0, gamma=0, fibers=()):
        base = Orbifold2(orientable, genus, tuple(a for a, _ in fibers))
        return cls(base, gamma, tuple(fibers))

    @classmethod
    def from_json(cls, doc):
        """{"base": {"orientable": bool, "genus": int}, "gamma": int,
        "fibers": [[alpha, beta], ...]}"""
        try:
            base = doc["base"]
            orientable = bool(base.get("orientable", True))
            genus = int(base.get("genus", 0))
            gamma = int(doc.get("gamma", 0))
            fibers = [tuple(map(int, f)) for f in doc.get("fibers", [])]
            if any(len(f) != 2 for f in fibers):
                raise ValueError("fibre entries must be pairs")
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise SchemaError(f"bad Seifert data: {exc}") from exc
        return cls.build(orientable, genus, gamma, fibers)

    def to_json(self):
        return {"base": {"orientable": self.base.orientable,
                         "genus": self.base.genus},
                "gamma": self.gamma,
                "fibers": [list(f) for f in self.fibers]}


class Geometry(enum.Enum):
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    SPHERICAL = "spherical"


def chi_orb(o: Orbifold2) -> Fraction:
    """chi(F) - sum over cone points of (1 - 1/alpha)."""
    return Fraction(o.surface_euler()) - sum(
        (1 - Fraction(1, a) for a in o.cone_orders), Fraction(0))


def classify_orbifold(o: Orbifold2) -> Geometry:
    c = chi_orb(o)
    if c < 0:
        return Geometry.HYPERBOLIC
    if c == 0:
        return Geometry.PARABOLIC
    return Geometry.SPHERICAL


_PARABOLIC_LIST = {
    (True, 1, ()),                 # torus
    (False, 2, ()),                # Klein bottle
    (True, 0, (2, 2, 2, 2)),
    (True, 0, (2, 3, 6)),
    (True, 0, (2, 4, 4)),
    (True, 0, (3, 3, 3)),
    (False, 1, (2, 2)),            # RP2(2,2)
}


def is_listed_parabolic(o: Orbifold2) -> bool:
    if not o.closed:
        raise PreconditionError("the parabolic list is for closed orbifolds")
    return (o.orientable, o.genus, o.cone_orders) in _PARABOLIC_LIST


def is_triangle_base(o: Orbifold2) -> bool:
    """Is o a 2-sphere with exactly three cone points?"""
    return o.orientable and o.genus == 0 and o.closed and len(o.cone_orders) == 3


@dataclass(frozen=True)
class Presentation:
    """Generators, relators, and the generators declared central."""

    generators: tuple
    relators: tuple
    central: tuple = ()

    def all_relators(self):
        """Relators with each centrality condition expanded to commutators."""
        rels = list(self.relators)
        for c in self.central:
            ci = self.generators.index(c)
            for gi in range(len(self.generators)):
                if gi != ci:
                    g, h = Word(((gi, 1),)), Word(((ci, 1),))
                    rels.append(g * h * g.inverse() * h.inverse())
        return tuple(rels)

    def __str__(self):
        rels = [f"{c} central" for c in self.central]
        rels += [r.format(self.generators) for r in self.relators]
        return "< " + ", ".join(self.generators) + " | " + ", ".join(rels) + " >"


def presentation(sd: SeifertData) -> Presentation:
    o = sd.base
    g = o.genus
    q = len(sd.fibers)
    if o.orientable:
        gens = [n for i in range(1, g + 1) for n in (f"a{i}", f"b{i}")]
    else:
        gens = [f"a{i}" for i in range(1, g + 1)]
    gens += [f"x{j}" for j in range(1, q + 1)] + ["h"]
    idx = {name: i for i, name in enumerate(gens)}
    H = idx["h"]

    def gen(name, k=1):
        return Word.power(idx[name], k)

    rels = []
    if not o.orientable:
        for i in range(1, g + 1):
            a = gen(f"a{i}")
            rels.append(a * gen("h") * a.inverse() * gen("h"))
    for j, (alpha, beta) in enumerate(sd.fibers, start=1):
        rels.append(gen(f"x{j}", alpha) * Word.power(H, beta))
        if not o.orientable:
            x = gen(f"x{j}")
            rels.append(x * gen("h") * x.inverse() * gen("h", -1))
    rhs = Word()
    if o.orientable:
        for i in range(1, g + 1):
            a, b = gen(f"a{i}"), gen(f"b{i}")
            rhs = rhs * (a * b * a.inverse() * b.inverse())
    else:
        for i in range(1, g + 1):
            rhs = rhs * gen(f"a{i}", 2)
    for j in range(1, q + 1):
        rhs = rhs * gen(f"x{j}")
    rels.append(Word.power(H, sd.gamma) * rhs.inverse())
    return Presentation(tuple(gens), tuple(rels), ("h",) if o.orientable else ())


def relation_matrix(pres: Presentation):
    """Exponent-sum matrix: one row per relator, one column per generator."""
    n = len(pres.generators)
    rows = []
    for r in pres.all_relators():
        row = [0] * n
        for gi, e in r.letters:
            row[gi] += e
        rows.append(row)
    return rows


def smith_invariants(rows, ncols=None):
    """Diagonal of the Smith normal form of an integer matrix.

    Returns min(#rows, #cols) nonnegative integers d_1 | d_2 | ... (zeros
    last).
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    diag = []
    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero entry in the remaining block
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                k = A[i][t] // p
                if k:
                    A[i] = [a - k * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                k = A[t][j] // p
                if k:
                    for row in A:
                        row[j] -= k * row[t]
                if A[t][j]:
                    dirty = True
            if not dirty:
                # divisibility: fold in any entry the pivot does not divide
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if A[i][j] % p), None)
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, m):
                if A[i][t] and abs(A[i][t]) < best[0]:
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, n):
                if A[t][j] and abs(A[t][j]) < best[0]:
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    diag += [0] * (min(m, n) - len(diag))
    return diag


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... and t_i > 1."""

    rank: int
    torsion: tuple = ()

    @property
    def finite(self):
        return self.rank == 0

    def order(self):
        return math.prod(self.torsion) if self.finite else math.inf

    @property
    def invariant_factors(self):
        return tuple(self.torsion) + (0,) * self.rank

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelianize(pres: Presentation) -> AbelianGroup:
    rows = relation_matrix(pres)
    n = len(pres.generators)
    d = smith_invariants(rows, n) if rows else []
    rank = n - sum(1 for x in d if x != 0)
    return AbelianGroup(rank, tuple(x for x in d if x > 1))


def h1(sd: SeifertData) -> AbelianGroup:
    return abelianize(presentation(sd))


def teichmuller_dim(o: Orbifold2) -> int:
    """Real dimension -3 chi(F) + 2q of the Teichmuller space of o."""
    if not o.closed or classify_orbifold(o) is not Geometry.HYPERBOLIC:
        raise PreconditionError("Teichmuller dimension needs a closed hyperbolic orbifold")
    return -3 * o.surface_euler() + 2 * len(o.cone_orders)


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    reason: str

    def __bool__(self):
        return self.verdict is Verdict.YES

    def __str__(self):
        return f"{self.verdict.value}: {self.reason}"


def _special(sd: SeifertData, group: AbelianGroup):
    """Recognise S1 x S2 and RP3 # RP3; None otherwise."""
    o = sd.base
    if o.orientable and o.genus == 0 and len(sd.fibers) <= 2 and not group.finite:
        return "S1xS2"
    if not o.orientable and o.genus == 1 and not sd.fibers and sd.gamma == 0:
        return "RP3#RP3"
    return None


def is_haken(sd: SeifertData) -> Decision:
    """Haken determination from the base orbifold and H_1.

    Parabolic or hyperbolic bases that are not triangle orbifolds force W
    to be Haken; a triangle base is Haken exactly when H_1 is infinite
    (otherwise H_1 is finite and W is not Haken).  Spherical bases are not
    Haken.
    """
    group = h1(sd)
    special = _special(sd, group)
    if special:
        return Decision(Verdict.NO, f"{special} is reducible")
    geom = classify_orbifold(sd.base)
    if geom is Geometry.SPHERICAL:
        if not group.finite:
            return Decision(Verdict.UNDETERMINED,
                            "spherical base with infinite H1 not recognised")
        return Decision(Verdict.NO, "spherical base, finite fundamental group")
    if not group.finite:
        return Decision(Verdict.YES, "infinite H1")
    if is_triangle_base(sd.base):
        return Decision(Verdict.NO, "triangle base with finite H1")
    return Decision(Verdict.YES, f"{geom.value} base other than a triangle orbifold")


def irreducible_curve_exists(sd: SeifertData) -> Decision:
    """Is there a curve of PSL(2,C) characters containing an irreducible one?"""
    group = h1(sd)
    special = _special(sd, group)
    if special == "RP3#RP3":
        return Decision(Verdict.YES, "RP3#RP3: fundamental group Z/2 * Z/2")
    if special == "S1xS2":
        return Decision(Verdict.NO, "S1xS2: fundamental group Z")
    haken = is_haken(sd)
    o = sd.base
    if haken.verdict is Verdict.UNDETERMINED:
        return haken
    if haken.verdict is Verdict.NO:
        if is_triangle_base(o):
            return Decision(Verdict.NO, "non-Haken triangle base")
        return Decision(Verdict.NO, f"not Haken ({haken.reason})")
    if o.orientable and o.genus == 1 and not o.cone_orders:
        return Decision(Verdict.NO, "torus without cone points excluded")
    if is_triangle_base(o):
        return Decision(Verdict.NO, "2-sphere with three cone points excluded")
    geom = classify_orbifold(o)
    return Decision(Verdict.YES, f"Haken, {geom.value} non-excluded form")


def virtually_irreducible_curve_exists(sd: SeifertData) -> Decision:
    """Is there a curve that is index-q virtually irreducible for every q?"""
    group = h1(sd)
    special = _special(sd, group)
    if special:
        return Decision(Verdict.NO, f"{special} is not Haken")
    geom = classify_orbifold(sd.base)
    if geom is not Geometry.HYPERBOLIC:
        return Decision(Verdict.NO, f"{geom.value} base is not hyperbolic")
    if is_triangle_base(sd.base):
        return Decision(Verdict.NO, "2-sphere with three cone points excluded")
    haken = is_haken(sd)
    if haken.verdict is Verdict.YES:
        return Decision(Verdict.YES, "Haken with hyperbolic non-triangle base")
    return Decision(haken.verdict, haken.reason)


def orbifold_census(max_genus=2, max_cones=4, max_order=12):
    """All closed orbifolds within the given bounds (cone orders unordered)."""
    from itertools import combinations_with_replacement

    out = []
    for orientable in (True, False):
        for g in range(0 if orientable else 1, max_genus + 1):
            for k in range(max_cones + 1):
                for cones in combinations_with_replacement(range(2, max_order + 1), k):
                    out.append(Orbifold2(orientable, g, cones))
    return out
