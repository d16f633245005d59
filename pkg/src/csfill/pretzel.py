"""
Twist counting for edge-path systems of Montesinos knots, specialised to
the pretzel knots K_m of type (-1/3, 1/(2m+1), 5/18).

An edge path is a list of signed steps between vertices <p/q> of the Farey
diagram.  A step may stop partway along its edge; its weight is then the
fraction of the edge travelled, which is the coefficient of the target
vertex in the stopping point k<target> + l<start>, i.e. k/(k+l).  Steps
along the vertical edge from <p/q> up toward <1/0> are marked `vertical`;
they are not Farey edges.

    tau(S) = 2 * sum of sign * weight over all steps

and the boundary slope of a candidate surface S is tau(S) - tau(S_0) for a
Seifert surface S_0.  Signs are part of the data: no orientation rule is
applied here.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import PreconditionError, SchemaError
from .lattice import h1_filling_order, slope_of

__all__ = [
    "FVertex",
    "PathStep",
    "EdgePathSystem",
    "farey_adjacent",
    "tau",
    "boundary_slope",
    "candidate_system",
    "seifert_system",
    "family_slope_closed_form",
    "PretzelResult",
    "pretzel_family",
]


@dataclass(frozen=True, order=True)
class FVertex:
    """Reduced fraction p/q with q >= 0; 1/0 is the point at infinity."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise PreconditionError("0/0 is not a vertex")
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text):
        s = str(text).strip()
        try:
            if "/" in s:
                a, b = s.split("/")
                return cls(int(a), int(b))
            return cls(int(s), 1)
        except ValueError as exc:
            raise SchemaError(f"bad vertex {text!r}") from exc

    def __str__(self):
        return f"{self.p}/{self.q}"


def farey_adjacent(u: FVertex, v: FVertex) -> bool:
    return abs(u.p * v.q - u.q * v.p) == 1


@dataclass(frozen=True)
class PathStep:
    start: FVertex
    end: FVertex
    sign: int = 1
    weight: Fraction = Fraction(1)
    vertical: bool = False

    def __post_init__(self):
        w = Fraction(self.weight)
        object.__setattr__(self, "weight", w)
        if self.sign not in (1, -1):
            raise PreconditionError("step sign must be +1 or -1")
        if not 0 <= w <= 1:
            raise PreconditionError(f"partial weight {w} outside [0, 1]")
        if self.vertical:
            if self.end != FVertex(1, 0):
                raise PreconditionError("vertical steps head toward 1/0")
        elif not farey_adjacent(self.start, self.end):
            raise PreconditionError(f"<{self.start}> and <{self.end}> are not Farey adjacent")

    @property
    def complete(self):
        return self.weight == 1

    def contribution(self) -> Fraction:
        return self.sign * self.weight

    def to_json(self):
        d = {"from": str(self.start), "to": str(self.end),
             "weight": "complete" if self.complete else str(self.weight),
             "sign": self.sign}
        if self.vertical:
            d["vertical"] = True
        return d


@dataclass(frozen=True)
class EdgePathSystem:
    """One edge path per tangle; an empty path is a constant path."""

    paths: tuple

    def __post_init__(self):
        paths = tuple(tuple(p) for p in self.paths)
        for i, path in enumerate(paths):
            for a, b in zip(path, path[1:]):
                if not a.complete:
                    raise PreconditionError(
                        f"path {i}: a partial step must be the last one")
                if a.end != b.start:
                    raise PreconditionError(
                        f"path {i}: step ends at <{a.end}> but next starts at <{b.start}>")
        object.__setattr__(self, "paths", paths)

    @classmethod
    def from_json(cls, doc):
        """{"paths": [[{"from": "p/q", "to": "r/s", "weight": "k/(k+l)" | "complete",
        "sign": 1 | -1, "vertical": bool}]]}"""
        try:
            paths = []
            for path in doc["paths"]:
                steps = []
                for st in path:
                    w = st.get("weight", "complete")
                    w = Fraction(1) if w == "complete" else Fraction(w)
                    steps.append(PathStep(FVertex.parse(st["from"]), FVertex.parse(st["to"]),
                                          int(st.get("sign", 1)), w,
                                          bool(st.get("vertical", False))))
                paths.append(steps)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, PreconditionError):
                raise
            raise SchemaError(f"bad edge-path system: {exc}") from exc
        return cls(tuple(paths))

    def to_json(self):
        return {"paths": [[st.to_json() for st in path] for path in self.paths]}

    def bracket(self):
        """Per-tangle signed totals (the terms inside 2[...])."""
        return [sum((st.contribution() for st in path), Fraction(0))
                for path in self.paths]


def tau(sys: EdgePathSystem) -> Fraction:
    return 2 * sum(sys.bracket(), Fraction(0))


def boundary_slope(candidate: EdgePathSystem, seifert_ref: EdgePathSystem) -> Fraction:
    return tau(candidate) - tau(seifert_ref)


def _v(p, q=1):
    return FVertex(p, q)


def _chain(vertices, signs):
    return [PathStep(a, b, s) for a, b, s in zip(vertices, vertices[1:], signs)]


def _check_m(m):
    if m < 9:
        raise PreconditionError(
            f"the K_m edge-path templates need m >= 9 (weights in [0,1]), got {m}")


def candidate_system(m: int) -> EdgePathSystem:
    """The edge-path system (gamma_1, gamma_2, gamma_3) of the surface S in K_m.

    gamma_1 is constant, gamma_2 climbs the vertical edge over <1/(2m+1)>
    to (m-7)<1/0> + <1/(2m+1)>, gamma_3 runs <5/18> -> <2/7> and stops at
    (m-9)<1/3> + 3<2/7>.
    """
    _check_m(m)
    g2 = [PathStep(_v(1, 2 * m + 1), _v(1, 0), 1, Fraction(m - 7, m - 6), vertical=True)]
    g3 = [PathStep(_v(5, 18), _v(2, 7), -1),
          PathStep(_v(2, 7), _v(1, 3), -1, Fraction(m - 9, m - 6))]
    return EdgePathSystem(((), tuple(g2), tuple(g3)))


def seifert_system(m: int) -> EdgePathSystem:
    """Edge paths of a Seifert surface S_0 of K_m; tangle totals 1, -(2m+1), 0."""
    _check_m(m)
    g1 = _chain([_v(-1, 3), _v(-1, 2), _v(-1), _v(1, 0)], [1, 1, -1])
    verts = [_v(1, d) for d in range(2 * m + 1, 0, -1)] + [_v(1, 0)]
    g2 = _chain(verts, [-1] * (len(verts) - 1))
    g3 = _chain([_v(5, 18), _v(2, 7), _v(1, 4), _v(0), _v(1, 0)], [-1, 1, 1, -1])
    return EdgePathSystem((tuple(g1), tuple(g2), tuple(g3)))


def family_slope_closed_form(n: int) -> Fraction:
    return Fraction(16 * n * n + 22 * n + 1, n)


@dataclass(frozen=True)
class PretzelResult:
    n: int
    m: int
    slope: Fraction
    h1_order: int
    edge_path_checked: bool


def pretzel_family(n: int) -> PretzelResult:
    """Boundary slope (16n^2 + 22n + 1)/n of K_{4n+6} and |H_1| of that filling.

    For n >= 3 the slope is computed twice, from the closed form and from
    the two edge-path systems; for n <= -3 the templates do not apply
    (negative weights) and only the closed form is used.
    """
    if abs(n) < 3:
        raise PreconditionError(f"the family needs |n| >= 3, got n = {n}")
    m = 4 * n + 6
    slope = family_slope_closed_form(n)
    checked = False
    if m >= 9:
        via_paths = boundary_slope(candidate_system(m), seifert_system(m))
        if via_paths != slope:
            raise AssertionError(f"edge-path slope {via_paths} != closed form {slope}")
        checked = True
    num = 16 * n * n + 22 * n + 1
    r = slope_of(num, n)
    return PretzelResult(n, m, slope, h1_filling_order(r), checked)
