"""Constructors for the geometric ideals used throughout: points, fat points,
point configurations in P^1 x P^1, line unions in P^3, determinantal scrolls,
random complete intersections and linkage residuals.

Each constructor records what it knows about the scheme in ``Ideal.tags``
(``radical``, ``lci``, ``unmixed``, ``ci``, ``provenance``); the symbolic
power machinery relies on those tags rather than on primary decomposition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import GenericityError, HypothesisError, InvariantViolation, RingMismatchError
from .groebner import syzygy_module, minimal_generators_of_submodule
from .ideals import (Ideal, _rank, codimension, colon, hilbert_series, intersect,
                     min_generators, power)
from .polyring import QQ, DegreeVector, GradedRing, Polynomial

__all__ = [
    "point_ideal", "fat_points_ideal", "PointConfig", "PointP1P1", "PointConfigP1P1",
    "AlphaTuple", "p1p1_ring", "p1p1_config", "ferrers_config", "alpha_tuple",
    "classify_p1p1", "P1P1Classification", "aci_presentation", "triple_point_twists",
    "scroll_ideal", "generic_matrix_minors", "random_form", "random_ci", "linkage_residual",
    "linked_residual_112_222", "lines_p3_ideal", "LineConfig", "general_lines_p3",
    "fermat_ideal", "fermat_configuration", "fermat_points", "general_p1p1_points",
]

COEFF_RANGE = 20
MAX_ATTEMPTS = 10


# ---------------------------------------------------------------------------
# points in P^n

def _normalize(coords, field):
    coords = [field(c) for c in coords]
    for c in coords:
        if c:
            inv = 1 / c
            return tuple(x * inv for x in coords)
    raise ValueError("zero coordinate vector is not a projective point")


def point_ideal(coords, ring: GradedRing) -> Ideal:
    """Ideal of the point ``[c_0 : ... : c_n]``: ``c_k x_i - c_i x_k`` for ``i != k``."""
    if len(coords) != ring.nvars:
        raise RingMismatchError("point has %d coordinates, ring has %d variables" % (len(coords), ring.nvars))
    p = _normalize(coords, ring.field)
    k = next(i for i, c in enumerate(p) if c)
    x = ring.gens()
    gens = [p[k] * x[i] - p[i] * x[k] for i in range(ring.nvars) if i != k]
    return Ideal(ring, gens, {"radical": True, "lci": True, "unmixed": True, "ci": True,
                              "provenance": "point %s" % (list(map(str, p)),)})


class PointConfig:
    """Fat points ``m_1 P_1 + ... + m_s P_s`` in P^n; components are CI point ideals."""

    def __init__(self, ring: GradedRing, points, mults=None):
        if not points:
            raise ValueError("empty point configuration")
        self.ring = ring
        self.points = [_normalize(p, ring.field) for p in points]
        if len(set(self.points)) != len(self.points):
            raise ValueError("repeated points in configuration")
        self.mults = list(mults) if mults is not None else [1] * len(self.points)
        if len(self.mults) != len(self.points) or any(m < 1 for m in self.mults):
            raise ValueError("multiplicities must be positive, one per point")
        self.components = [(point_ideal(p, ring), m) for p, m in zip(self.points, self.mults)]
        self._ideal = None

    def ideal(self) -> Ideal:
        if self._ideal is None:
            reduced = all(m == 1 for m in self.mults)
            parts = [P if m == 1 else power(P, m) for P, m in self.components]
            I = intersect(*parts)
            self._ideal = I.with_tags(radical=reduced, lci=reduced, unmixed=True,
                                      provenance="%d points in P^%d" % (len(self.points), self.ring.nvars - 1))
        return self._ideal


def fat_points_ideal(points, mults, ring: GradedRing) -> Ideal:
    return PointConfig(ring, points, mults).ideal()


def fermat_ideal(m: int, ring: GradedRing) -> Ideal:
    """``(x(y^m - z^m), y(z^m - x^m), z(x^m - y^m))`` in ``k[x, y, z]``."""
    x, y, z = ring.gens()
    gens = [x * (y ** m - z ** m), y * (z ** m - x ** m), z * (x ** m - y ** m)]
    return Ideal(ring, gens, {"radical": True, "lci": True, "unmixed": True,
                              "provenance": "Fermat configuration, m = %d" % m})


class _ComponentConfig:
    """A scheme given directly by tagged CI components (with multiplicities)."""

    def __init__(self, ring, components, provenance=""):
        self.ring = ring
        self.components = list(components)
        for P, _ in self.components:
            if not P.tags.get("ci"):
                raise HypothesisError("component %r is not tagged as a complete intersection" % (P,))
        self.provenance = provenance
        self._ideal = None

    def ideal(self) -> Ideal:
        if self._ideal is None:
            reduced = all(m == 1 and P.tags.get("radical") for P, m in self.components)
            parts = [P if m == 1 else power(P, m) for P, m in self.components]
            self._ideal = intersect(*parts).with_tags(radical=reduced, lci=reduced, unmixed=True,
                                                      provenance=self.provenance)
        return self._ideal


def fermat_configuration(m: int, ring: GradedRing) -> _ComponentConfig:
    """The ``m^2 + 3`` Fermat points as components usable over Q.

    The ``m^2`` points with ``x^m = y^m = z^m`` are not rational, so they
    enter as the single reduced complete intersection ``(x^m - y^m, y^m - z^m)``;
    the three coordinate points are separate components.
    """
    x, y, z = ring.gens()
    ci = Ideal(ring, [x ** m - y ** m, y ** m - z ** m],
               {"radical": True, "lci": True, "unmixed": True, "ci": True,
                "provenance": "%d points with x^m = y^m = z^m" % (m * m)})
    comps = [(ci, 1)]
    for k in range(3):
        c = [0, 0, 0]
        c[k] = 1
        comps.append((point_ideal(c, ring), 1))
    return _ComponentConfig(ring, comps, "Fermat configuration, m = %d" % m)


def fermat_points(m: int, field):
    """All ``m^2 + 3`` Fermat points; needs ``m``-th roots of unity in ``field``."""
    p = getattr(field, "p", None)
    if p is None:
        raise ValueError("the Fermat points are rational only over suitable finite fields")
    roots = [a for a in range(1, p) if pow(a, m, p) == 1]
    if len(roots) != m:
        raise ValueError("GF(%d) lacks %d distinct %d-th roots of unity" % (p, m, m))
    pts = [(1, a, b) for a in roots for b in roots]
    pts += [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    return pts


# ---------------------------------------------------------------------------
# P^1 x P^1

def p1p1_ring(field=QQ) -> GradedRing:
    return GradedRing(["x0", "x1", "x2", "x3"], [(1, 0), (1, 0), (0, 1), (0, 1)], field)


@dataclass(frozen=True)
class PointP1P1:
    """``[a0 : a1] x [b0 : b1]`` with a multiplicity; stored normalized."""

    a: tuple
    b: tuple
    mult: int = 1

    @classmethod
    def make(cls, a, b, mult=1, field=QQ):
        if mult < 1:
            raise ValueError("multiplicity must be positive")
        return cls(_normalize(a, field), _normalize(b, field), mult)

    def ideal(self, ring: GradedRing) -> Ideal:
        x0, x1, x2, x3 = ring.gens()
        (a0, a1), (b0, b1) = self.a, self.b
        return Ideal(ring, [a1 * x0 - a0 * x1, b1 * x2 - b0 * x3],
                     {"radical": True, "lci": True, "unmixed": True, "ci": True,
                      "provenance": "point [%s:%s]x[%s:%s]" % (a0, a1, b0, b1)})

    def support(self):
        return (self.a, self.b)


class PointConfigP1P1:
    """Distinct points of P^1 x P^1 (optionally fat) and their bihomogeneous ideal."""

    def __init__(self, points, ring: GradedRing = None):
        if not points:
            raise ValueError("empty configuration")
        self.ring = ring or p1p1_ring()
        self.points = list(points)
        supports = [p.support() for p in self.points]
        if len(set(supports)) != len(supports):
            raise ValueError("points of a configuration must be distinct")
        self.components = [(p.ideal(self.ring), p.mult) for p in self.points]
        self._ideal = None

    @property
    def reduced(self) -> bool:
        return all(p.mult == 1 for p in self.points)

    def ideal(self) -> Ideal:
        if self._ideal is None:
            parts = [P if m == 1 else power(P, m) for P, m in self.components]
            I = intersect(*parts)
            self._ideal = I.with_tags(radical=self.reduced, lci=self.reduced, unmixed=True,
                                      provenance="%d points in P1xP1" % len(self.points))
        return self._ideal

    def support(self) -> "PointConfigP1P1":
        return PointConfigP1P1([PointP1P1(p.a, p.b, 1) for p in self.points], self.ring)

    def with_multiplicity(self, m: int) -> "PointConfigP1P1":
        return PointConfigP1P1([PointP1P1(p.a, p.b, m) for p in self.points], self.ring)

    def __len__(self):
        return len(self.points)


def p1p1_config(points, ring=None) -> PointConfigP1P1:
    """From ``((a0, a1), (b0, b1))`` or ``((a0, a1), (b0, b1), mult)`` tuples."""
    ring = ring or p1p1_ring()
    pts = []
    for p in points:
        if isinstance(p, PointP1P1):
            pts.append(p)
        else:
            pts.append(PointP1P1.make(p[0], p[1], p[2] if len(p) > 2 else 1, ring.field))
    return PointConfigP1P1(pts, ring)


def ferrers_config(alpha, ring=None, mult=1) -> PointConfigP1P1:
    """ACM configuration with fibre sizes ``alpha``: points ``A_i x B_j`` for ``j < alpha_i``.

    ``A_i = [1 : i]`` and ``B_j = [1 : j]``.
    """
    alpha = list(alpha)
    if not alpha or any(a < 1 for a in alpha) or any(alpha[i] < alpha[i + 1] for i in range(len(alpha) - 1)):
        raise ValueError("alpha must be a nonempty nonincreasing tuple of positive integers")
    pts = [((1, i), (1, j), mult) for i, a in enumerate(alpha) for j in range(a)]
    return p1p1_config(pts, ring)


def general_p1p1_points(count: int, seed: int = 0, ring=None) -> PointConfigP1P1:
    """``count`` points with pairwise distinct first and second coordinates."""
    rng = random.Random(seed)
    seen_a, seen_b, pts = set(), set(), []
    field = (ring or p1p1_ring()).field
    while len(pts) < count:
        a = (1, rng.randint(-COEFF_RANGE, COEFF_RANGE))
        b = (1, rng.randint(-COEFF_RANGE, COEFF_RANGE))
        na, nb = _normalize(a, field), _normalize(b, field)
        if na in seen_a or nb in seen_b:
            continue
        seen_a.add(na)
        seen_b.add(nb)
        pts.append((a, b))
    return p1p1_config(pts, ring)


class AlphaTuple(tuple):
    """Nonincreasing fibre sizes of a P^1 x P^1 configuration over the first factor."""

    def __new__(cls, values):
        values = tuple(values)
        if not values or any(v < 1 for v in values) or any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError("alpha tuple must be nonincreasing and positive: %r" % (values,))
        return super().__new__(cls, values)

    @property
    def npoints(self) -> int:
        return sum(self)

    def distinct(self):
        return sorted(set(self), reverse=True)

    def is_constant(self) -> bool:
        return len(set(self)) == 1

    def is_two_valued(self) -> bool:
        return len(set(self)) == 2

    def aci_parameters(self):
        """``(a, b, c, d)`` for ``alpha = (a^c, b^d)``."""
        if not self.is_two_valued():
            raise HypothesisError("alpha %r does not take exactly two values" % (tuple(self),))
        a, b = self.distinct()
        return a, b, self.count(a), self.count(b)


def alpha_tuple(config: PointConfigP1P1) -> AlphaTuple:
    counts = {}
    for p in config.points:
        counts[p.a] = counts.get(p.a, 0) + 1
    return AlphaTuple(sorted(counts.values(), reverse=True))


@dataclass
class P1P1Classification:
    kind: str                    # "CI", "ACI", "other" or "non-ACM"
    alpha: AlphaTuple
    acm: bool
    mu: int = None
    prediction: str = ""

    def to_json(self) -> dict:
        return {"kind": self.kind, "alpha": list(self.alpha), "acm": self.acm, "mu": self.mu,
                "prediction": self.prediction}


def classify_p1p1(config: PointConfigP1P1) -> P1P1Classification:
    """CI / ACI / other for an ACM reduced configuration, from its alpha tuple."""
    from .resolve import is_acm
    alpha = alpha_tuple(config)
    I = config.support().ideal()
    if not is_acm(I):
        return P1P1Classification("non-ACM", alpha, False, None,
                                  "not ACM: the codimension-two criteria do not apply")
    mu = sum(c for _, c in min_generators(I)[0])
    if alpha.is_constant():
        kind = "CI"
        pred = "complete intersection: I^(m) = I^m for all m, I^m ACM"
    elif alpha.is_two_valued():
        kind = "ACI"
        pred = "almost complete intersection: I^(m) = I^m for all m, I^3 saturated but not ACM"
    else:
        kind = "other"
        pred = "mu = %d >= 4: I^(2) = I^2 but I^(3) != I^3" % mu
    expected_mu = {"CI": 2, "ACI": 3}.get(kind)
    if expected_mu is not None and mu != expected_mu:
        raise InvariantViolation("alpha %r classified %s but mu = %d" % (tuple(alpha), kind, mu))
    if kind == "other" and mu < 4:
        raise InvariantViolation("alpha %r has at least three values but mu = %d" % (tuple(alpha), mu))
    return P1P1Classification(kind, alpha, True, mu, pred)


def _aci_closed_form(a, b, c, d):
    F = [(c + d, b), (c, a)]
    G = [(c + d, 0), (c, b), (0, a)]
    return F, G


def aci_presentation(alpha, ring=None):
    """Hilbert-Burch presentation of the ACI configuration with fibre sizes ``alpha``.

    The generators and syzygies are computed from the actual ideal of
    :func:`ferrers_config` and ordered to match the closed-form twists
    ``G = R(-c-d,0) + R(-c,-b) + R(0,-a)`` and ``F = R(-c-d,-b) + R(-c,-a)``.
    """
    from .resolve import FreeModule, ModuleMap, Presentation
    alpha = AlphaTuple(alpha)
    a, b, c, d = alpha.aci_parameters()
    config = ferrers_config(alpha, ring)
    ring = config.ring
    I = config.ideal()
    gens = min_generators(I)[1]
    Ft, Gt = _aci_closed_form(a, b, c, d)
    by_deg = {tuple(g.degree): g for g in gens}
    if sorted(by_deg) != sorted(Gt) or len(gens) != 3:
        raise InvariantViolation("generator bidegrees %s differ from %s" % (sorted(by_deg), sorted(Gt)))
    gens = [by_deg[t] for t in Gt]
    syz = minimal_generators_of_submodule(syzygy_module(gens))
    by_deg = {}
    for v in syz:
        by_deg[tuple(v.degree)] = v
    if sorted(by_deg) != sorted(Ft) or len(syz) != 2:
        raise InvariantViolation("syzygy bidegrees %s differ from %s" % (sorted(by_deg), sorted(Ft)))
    cols = [by_deg[t] for t in Ft]
    matrix = [[col[i] for col in cols] for i in range(3)]
    phi = ModuleMap(FreeModule(ring, Ft), FreeModule(ring, Gt), matrix)
    return Presentation(phi, gens)


def triple_point_twists(a, b, c, d):
    """Twists of ``F_0, F_1, F_2`` in the resolution of triple points on an ACI support.

    Each list holds the pairs ``(u, v)`` of the summands ``R(-u, -v)``.
    """
    if not (a > b >= 1 and c >= 1 and d >= 1):
        raise ValueError("need a > b >= 1 and c, d >= 1")
    F0 = [(3 * c + 3 * d, 0), (3 * c + 2 * d, b), (2 * c + 2 * d, a), (3 * c + d, 2 * b), (2 * c + d, b + a),
          (c + d, 2 * a), (3 * c, 3 * b), (2 * c, 2 * b + a), (c, b + 2 * a), (0, 3 * a)]
    F1 = [(c, 3 * a), (2 * c, 2 * a + b), (3 * c, a + 2 * b), (c + d, 2 * a + b), (2 * c + d, a + 2 * b),
          (3 * c + d, 3 * b), (2 * c + d, 2 * a), (3 * c + d, a + b), (2 * c + 2 * d, a + b),
          (3 * c + 2 * d, 2 * b), (3 * c + 2 * d, a), (3 * c + 3 * d, b)]
    F2 = [(3 * c + 2 * d, b + a), (3 * c + d, a + 2 * b), (2 * c + d, 2 * a + b)]
    return F0, F1, F2


# ---------------------------------------------------------------------------
# determinantal ideals

def _det(M):
    if len(M) == 1:
        return M[0][0]
    total = None
    for j in range(len(M)):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def generic_matrix_minors(rows: int, cols: int, size: int, ring: GradedRing = None) -> Ideal:
    """All ``size x size`` minors of the ``rows x cols`` matrix of distinct variables (row-major)."""
    if ring is None:
        ring = GradedRing(["x%d" % i for i in range(rows * cols)])
    if ring.nvars != rows * cols:
        raise RingMismatchError("need %d variables, ring has %d" % (rows * cols, ring.nvars))
    if not 1 <= size <= min(rows, cols):
        raise ValueError("minor size out of range")
    x = ring.gens()
    M = [[x[r * cols + c] for c in range(cols)] for r in range(rows)]
    gens = []
    for R in combinations(range(rows), size):
        for C in combinations(range(cols), size):
            gens.append(_det([[M[r][c] for c in C] for r in R]))
    return Ideal(ring, gens, {"provenance": "%dx%d minors of a generic %dx%d matrix" % (size, size, rows, cols)})


def scroll_ideal(n: int, ring: GradedRing = None) -> Ideal:
    """2x2 minors of a generic 2 x (n+1) matrix: the Segre P^1 x P^n in P^(2n+1)."""
    I = generic_matrix_minors(2, n + 1, 2, ring)
    return I.with_tags(radical=True, lci="asserted", unmixed=True, acm=True,
                       provenance="Segre scroll P1xP%d" % n)


# ---------------------------------------------------------------------------
# random complete intersections and linkage

def _monomials(ring, degree):
    from .ideals import _monomials_of_degree
    return _monomials_of_degree(ring, DegreeVector(degree) if not isinstance(degree, int) else (degree,))


def random_form(ring: GradedRing, degree, rng: random.Random) -> Polynomial:
    """Form of the given degree with uniform integer coefficients in [-20, 20]."""
    while True:
        terms = {}
        for e in _monomials(ring, degree):
            c = rng.randint(-COEFF_RANGE, COEFF_RANGE)
            if c:
                terms[e] = ring.field(c)
        if terms:
            return Polynomial(ring, terms)


def random_ci(degrees, ring: GradedRing, seed: int = 0, attempts: int = MAX_ATTEMPTS) -> Ideal:
    """Complete intersection of random forms, reseeding until the codimension is right."""
    tried = []
    for k in range(attempts):
        s = seed + k
        tried.append(s)
        rng = random.Random(s)
        gens = [random_form(ring, d, rng) for d in degrees]
        I = Ideal(ring, gens)
        if codimension(I) == len(degrees):
            return I.with_tags(ci=True, unmixed=True, seed=s,
                               provenance="random CI of type %s, seed %d" % (tuple(degrees), s))
    raise GenericityError("random CI of type %s failed for seeds %s" % (tuple(degrees), tried))


def linkage_residual(ci: Ideal, inside: Ideal) -> Ideal:
    """``ci : inside``."""
    return colon(ci, inside)


def _generic_ci_inside(J: Ideal, degrees, rng):
    """Forms of the given degrees that are random combinations of the generators of ``J``."""
    ring = J.ring
    out = []
    for dg in degrees:
        f = ring.zero()
        for g in J.gens:
            gd = g.degree.total
            if gd > dg:
                continue
            f = f + random_form(ring, dg - gd, rng) * g
        out.append(f)
    return out


def _first_difference(vals):
    return [vals[0]] + [vals[i] - vals[i - 1] for i in range(1, len(vals))]


def linked_residual_112_222(ring: GradedRing, seed: int = 0, attempts: int = MAX_ATTEMPTS):
    """Residual of a general CI of type (1,1,2) under a general CI of type (2,2,2) inside it.

    Genericity is validated afterwards: both complete intersections must
    have codimension 3 and the residual must have codimension 3, four
    minimal generators and h-vector ``(1, 3, 2)``, i.e. Hilbert function
    ``1, 4, 6, 6, ...`` after cutting by general linear forms down to points.
    Returns ``(residual, info)`` where ``info`` records the seeds tried.
    """
    n = ring.nvars
    tried = []
    for k in range(attempts):
        s = seed + k
        tried.append(s)
        rng = random.Random(s)
        J = Ideal(ring, [random_form(ring, 1, rng), random_form(ring, 1, rng), random_form(ring, 2, rng)])
        if codimension(J) != 3:
            continue
        C = Ideal(ring, _generic_ci_inside(J, [2, 2, 2], rng))
        if codimension(C) != 3:
            continue
        Res = linkage_residual(C, J)
        if codimension(Res) != 3:
            continue
        vals = hilbert_series(Res).values(5)
        for _ in range(n - 4):
            vals = _first_difference(vals)
        if vals[:5] != [1, 4, 6, 6, 6]:
            continue
        if sum(c for _, c in min_generators(Res)[0]) != 4:
            continue
        tags = {"radical": True, "lci": True, "unmixed": True, "seed": s,
                "provenance": "residual of CI(1,1,2) in CI(2,2,2), P^%d, seed %d" % (n - 1, s)}
        return Res.with_tags(**tags), {"seed": s, "tried": tried, "linked": J, "ci": C}
    raise GenericityError("linkage validation failed for seeds %s" % (tried,))


# ---------------------------------------------------------------------------
# lines in P^3

def _linear_vectors(forms):
    return [dict(f._d) for f in forms]


def _linear_rank(ring, forms):
    return _rank(_linear_vectors(forms), ring.order.key)


class LineConfig:
    """A union of lines in P^3, each cut out by two independent linear forms."""

    def __init__(self, ring: GradedRing, lines):
        self.ring = ring
        if ring.nvars != 4:
            raise RingMismatchError("lines live in P^3 (four variables)")
        self.lines = []
        for l1, l2 in lines:
            l1, l2 = ring(l1), ring(l2)
            for f in (l1, l2):
                if not f or f.total_degree() != 1 or not f.is_homogeneous():
                    raise ValueError("line equations must be linear forms, got %s" % f)
            if _linear_rank(ring, [l1, l2]) != 2:
                raise ValueError("dependent linear forms %s, %s" % (l1, l2))
            self.lines.append((l1, l2))
        for (i, L), (j, M) in combinations(enumerate(self.lines), 2):
            if _linear_rank(ring, list(L) + list(M)) == 2:
                raise ValueError("lines %d and %d coincide" % (i, j))
        self.components = [(Ideal(ring, list(L), {"radical": True, "lci": True, "unmixed": True, "ci": True,
                                                   "provenance": "line"}), 1) for L in self.lines]
        self._ideal = None

    def meeting_pairs(self):
        return [(i, j) for (i, L), (j, M) in combinations(enumerate(self.lines), 2)
                if _linear_rank(self.ring, list(L) + list(M)) < 4]

    def has_concurrent_triple(self) -> bool:
        for trip in combinations(self.lines, 3):
            forms = [f for L in trip for f in L]
            if _linear_rank(self.ring, forms) <= 3:
                return True
        return False

    def ideal(self) -> Ideal:
        if self._ideal is None:
            I = intersect(*[P for P, _ in self.components])
            lci = True if not self.has_concurrent_triple() else None
            tags = {"radical": True, "unmixed": True, "provenance": "%d lines in P^3" % len(self.lines)}
            if lci:
                tags["lci"] = True
            self._ideal = I.with_tags(**tags)
        return self._ideal


def lines_p3_ideal(lines, ring: GradedRing = None) -> Ideal:
    ring = ring or GradedRing(["x0", "x1", "x2", "x3"])
    return LineConfig(ring, lines).ideal()


def general_lines_p3(count: int, seed: int = 0, ring: GradedRing = None, attempts: int = MAX_ATTEMPTS) -> LineConfig:
    """``count`` random lines, reseeded until they are pairwise skew."""
    ring = ring or GradedRing(["x0", "x1", "x2", "x3"])
    tried = []
    for k in range(attempts):
        s = seed + k
        tried.append(s)
        rng = random.Random(s)
        lines = [(random_form(ring, 1, rng), random_form(ring, 1, rng)) for _ in range(count)]
        try:
            cfg = LineConfig(ring, lines)
        except ValueError:
            continue
        if not cfg.meeting_pairs():
            cfg.seed = s
            return cfg
    raise GenericityError("no pairwise skew lines for seeds %s" % (tried,))
