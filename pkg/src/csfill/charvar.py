"""
PSL(2,C) representations and characters of free products Z/p * Z/q.

Matrices are stored as 2x2 complex numpy arrays with determinant 1; a
ProjMatrix stands for the pair +-A.  Numerical comparisons use an absolute
tolerance scaled by the size of the quantities compared.
"""
from __future__ import annotations

import cmath
import itertools
import math
import re
from dataclasses import dataclass

import numpy as np

from .exceptions import PreconditionError, SchemaError

__all__ = [
    "DEFAULT_TOL",
    "LOCUS_TOL",
    "ProjMatrix",
    "ProjRep",
    "Word",
    "ComponentIndex",
    "component_counts",
    "rho_a",
    "word_eval",
    "f_gamma",
    "canonical_words",
    "trace_tuple",
    "char_equal",
    "is_reducible",
    "is_dihedral",
    "reducible_parameters",
    "g1",
    "g1_critical_point",
    "g1_critical_point_exact",
]

DEFAULT_TOL = 1e-9
LOCUS_TOL = 1e-6

_IDENTITY = np.eye(2, dtype=complex)


def _close(a, b, tol):
    return abs(a - b) <= tol * (1.0 + max(abs(a), abs(b)))


class ProjMatrix:
    """An element +-A of PSL(2,C)."""

    __slots__ = ("m",)

    def __init__(self, m, check=True, tol=1e-9):
        m = np.array(m, dtype=complex).reshape(2, 2)
        if check and abs(np.linalg.det(m) - 1) > tol * (1 + np.abs(m).max() ** 2):
            raise PreconditionError(f"determinant {np.linalg.det(m)} != 1")
        self.m = m

    @classmethod
    def identity(cls):
        return cls(_IDENTITY, check=False)

    def __matmul__(self, other):
        return ProjMatrix(self.m @ other.m, check=False)

    def inverse(self):
        (a, b), (c, d) = self.m
        return ProjMatrix([[d, -b], [-c, a]], check=False)

    def __neg__(self):
        return ProjMatrix(-self.m, check=False)

    def trace(self):
        """Trace of the stored lift; only defined up to sign on PSL(2,C)."""
        return complex(self.m[0, 0] + self.m[1, 1])

    def det(self):
        return complex(np.linalg.det(self.m))

    def is_central(self, tol=DEFAULT_TOL):
        return self.isclose(ProjMatrix.identity(), tol)

    def isclose(self, other, tol=DEFAULT_TOL):
        scale = 1 + max(np.abs(self.m).max(), np.abs(other.m).max())
        return (np.abs(self.m - other.m).max() <= tol * scale
                or np.abs(self.m + other.m).max() <= tol * scale)

    def __repr__(self):
        return f"ProjMatrix({self.m.tolist()})"


@dataclass(frozen=True)
class ProjRep:
    """Images of the generators of a free group (or a quotient of it)."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(
            im if isinstance(im, ProjMatrix) else ProjMatrix(im)
            for im in self.images))

    @property
    def num_generators(self):
        return len(self.images)

    def negate(self, i):
        """Same PSL(2,C) representation with a different lift of generator i."""
        ims = list(self.images)
        ims[i] = -ims[i]
        return ProjRep(tuple(ims))


_LETTER = re.compile(r"([A-Za-z])(?:\^(-?\d+))?")


@dataclass(frozen=True)
class Word:
    """A freely reduced word, as a tuple of (generator index, +-1) letters."""

    letters: tuple = ()

    def __post_init__(self):
        out = []
        for g, e in self.letters:
            if e not in (1, -1):
                raise PreconditionError("letters carry exponent +1 or -1")
            if out and out[-1] == (g, -e):
                out.pop()
            else:
                out.append((g, e))
        object.__setattr__(self, "letters", tuple(out))

    @classmethod
    def power(cls, g, k):
        e = 1 if k >= 0 else -1
        return cls(((g, e),) * abs(k))

    @classmethod
    def parse(cls, text, alphabet="xyzw"):
        """Parse e.g. "xyX" or "x^2 y^-1"; upper case letters are inverses."""
        letters = []
        pos = 0
        text = text.replace(" ", "")
        while pos < len(text):
            mt = _LETTER.match(text, pos)
            if not mt:
                raise SchemaError(f"cannot parse word {text!r} at {pos}")
            ch, k = mt.group(1), int(mt.group(2) or 1)
            idx = alphabet.find(ch.lower())
            if idx < 0:
                raise SchemaError(f"letter {ch!r} not in alphabet {alphabet!r}")
            if ch.isupper():
                k = -k
            letters += Word.power(idx, k).letters
            pos = mt.end()
        return cls(tuple(letters))

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def inverse(self):
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def format(self, names):
        if not self.letters:
            return "1"
        parts = []
        for (g, e), run in itertools.groupby(self.letters):
            k = e * len(list(run))
            parts.append(names[g] if k == 1 else f"{names[g]}^{k}")
        return " ".join(parts)


@dataclass(frozen=True)
class ComponentIndex:
    """The component C(j, k) of the PSL(2,C) character variety of Z/p * Z/q."""

    p: int
    q: int
    j: int
    k: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise PreconditionError("cyclic orders must be >= 2")
        if not (0 <= self.j <= self.p // 2 and 0 <= self.k <= self.q // 2):
            raise PreconditionError(
                f"need 0 <= j <= {self.p // 2} and 0 <= k <= {self.q // 2}")

    @property
    def is_curve(self):
        return self.j >= 1 and self.k >= 1

    @property
    def lam(self):
        return cmath.exp(1j * math.pi * self.j / self.p)

    @property
    def mu(self):
        return cmath.exp(1j * math.pi * self.k / self.q)

    @property
    def tau(self):
        mu = self.mu
        return mu + 1 / mu

    @property
    def folded(self):
        """True when j = p/2 or k = q/2, where a and tau - a give one character."""
        return 2 * self.j == self.p or 2 * self.k == self.q


def component_counts(p: int, q: int):
    """(number of components, number of curve components)."""
    return (p // 2 + 1) * (q // 2 + 1), (p // 2) * (q // 2)


def components(p: int, q: int):
    return [ComponentIndex(p, q, j, k)
            for j in range(p // 2 + 1) for k in range(q // 2 + 1)]


def rho_a(c: ComponentIndex, a: complex) -> ProjRep:
    if not c.is_curve:
        raise PreconditionError(f"C({c.j},{c.k}) is an isolated point, not a curve")
    lam, tau = c.lam, c.tau
    x = [[lam, 0], [0, 1 / lam]]
    y = [[a, 1], [a * (tau - a) - 1, tau - a]]
    return ProjRep((ProjMatrix(x), ProjMatrix(y)))


def word_eval(rep: ProjRep, w: Word) -> ProjMatrix:
    out = ProjMatrix.identity()
    inverses = {}
    for g, e in w.letters:
        if not 0 <= g < rep.num_generators:
            raise PreconditionError(f"generator index {g} out of range")
        if e == 1:
            m = rep.images[g]
        else:
            if g not in inverses:
                inverses[g] = rep.images[g].inverse()
            m = inverses[g]
        out = out @ m
    return out


def f_gamma(rep: ProjRep, w: Word) -> complex:
    """trace(rho(gamma))^2 - 4, which does not depend on the lift."""
    return word_eval(rep, w).trace() ** 2 - 4


def canonical_words(n: int):
    """x_i, then x_i x_j (i < j), then x_i x_j x_k (i < j < k).

    There are n(n^2 + 5)/6 of them, and their traces determine a character.
    """
    ws = [Word(((i, 1),)) for i in range(n)]
    ws += [Word(((i, 1), (j, 1))) for i, j in itertools.combinations(range(n), 2)]
    ws += [Word(((i, 1), (j, 1), (k, 1)))
           for i, j, k in itertools.combinations(range(n), 3)]
    return ws


def trace_tuple(rep: ProjRep):
    return [word_eval(rep, w).trace() for w in canonical_words(rep.num_generators)]


def char_equal(r1: ProjRep, r2: ProjRep, tol=DEFAULT_TOL) -> bool:
    """Do r1 and r2 have the same PSL(2,C) character?

    True iff some sign homomorphism eps: F_n -> {+-1} gives
    trace(r2(y)) = eps(y) trace(r1(y)) on every canonical word y.
    """
    n = r1.num_generators
    if r2.num_generators != n:
        raise PreconditionError("representations of different rank")
    words = canonical_words(n)
    t1, t2 = trace_tuple(r1), trace_tuple(r2)
    for eps in itertools.product((1, -1), repeat=n):
        if all(_close(b, math.prod(eps[g] for g, _ in w.letters) * a, tol)
               for w, a, b in zip(words, t1, t2)):
            return True
    return False


def _commutator(a: ProjMatrix, b: ProjMatrix):
    return a @ b @ a.inverse() @ b.inverse()


def is_reducible(rep: ProjRep, tol=LOCUS_TOL) -> bool:
    """All generator commutators have trace 2 (a well-defined trace)."""
    ims = rep.images
    return all(_close(_commutator(ims[i], ims[j]).trace(), 2, tol)
               for i, j in itertools.combinations(range(len(ims)), 2))


def _eigenbasis(m: ProjMatrix, tol):
    """Columns diagonalising m, or None when m is parabolic (+-I excluded)."""
    t = m.trace()
    if _close(t * t, 4, tol):
        return None
    vals, vecs = np.linalg.eig(m.m)
    return vecs


def is_dihedral(rep: ProjRep, tol=LOCUS_TOL) -> bool:
    """Is the image an (irreducible) dihedral group?

    Such an image lies in the normaliser of a diagonal torus: every element
    is diagonal or antidiagonal in a suitable basis.  The torus is spanned by
    a generator or by a product of two generators, so each of those is tried
    as the element to diagonalise.
    """
    ims = rep.images
    if all(g.is_central(tol) for g in ims):
        raise PreconditionError("all generator images are central; "
                                "dihedral test is undefined")
    if is_reducible(rep, tol):
        return False
    candidates = list(ims) + [a @ b for a, b in itertools.combinations(ims, 2)]
    for c in candidates:
        if c.is_central(tol):
            continue
        basis = _eigenbasis(c, tol)
        if basis is None:
            continue
        binv = np.linalg.inv(basis)
        ok = True
        for g in ims:
            h = binv @ g.m @ basis
            scale = tol * (1 + np.abs(h).max())
            diag = abs(h[0, 1]) <= scale and abs(h[1, 0]) <= scale
            anti = abs(h[0, 0]) <= scale and abs(h[1, 1]) <= scale
            if not (diag or anti):
                ok = False
                break
        if ok:
            return True
    return False


def reducible_parameters(c: ComponentIndex):
    """Parameter values of reducible characters on C(j, k), and their number.

    The values are mu and 1/mu.  They give two distinct characters unless
    j = p/2 or k = q/2, when the involution a -> tau - a swaps them.
    """
    if not c.is_curve:
        raise PreconditionError("reducible parameters are defined on curves")
    mu = c.mu
    return (mu, 1 / mu), (1 if c.folded else 2)


def g1(c: ComponentIndex, a: complex) -> complex:
    """trace(rho_a(xy))^2."""
    return word_eval(rho_a(c, a), Word(((0, 1), (1, 1)))).trace() ** 2


def _dg1(c, a, h):
    return (g1(c, a + h) - g1(c, a - h)) / (2 * h)


def g1_critical_point(c: ComponentIndex, a0=0.3 + 0.2j, a1=1.1 - 0.4j, h=1e-5):
    """Zero of d g1/da located from central finite differences.

    g1 is quadratic in a, so its derivative is affine and one secant step
    through two sample points lands on the root.
    """
    d0, d1 = _dg1(c, a0, h), _dg1(c, a1, h)
    return a0 - d0 * (a1 - a0) / (d1 - d0)


def g1_critical_point_exact(c: ComponentIndex) -> complex:
    """-lambda^-1 tau / (lambda - lambda^-1)."""
    lam = c.lam
    return -(1 / lam) * c.tau / (lam - 1 / lam)
