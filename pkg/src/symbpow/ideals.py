"""Ideals of a graded polynomial ring and the operations on them.

Equality of ideals is equality of reduced Groebner bases for the ring's
ambient order.  Intersections use one auxiliary variable ``t`` placed in an
eliminating block: ``I cap J = (t I + (1 - t) J) cap R``.  The auxiliary
variable gets weight 0, so for homogeneous inputs every intermediate
polynomial stays homogeneous in the original variables.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb

from .errors import HomogeneityError, InvariantViolation, RingMismatchError
from .groebner import GroebnerBasis, TermOverPosition, _gb, buchberger, normal_form
from .polyring import DegreeVector, GradedRing, MonomialOrder, Polynomial

__all__ = [
    "Ideal", "HilbertSeries", "ideal_sum", "product", "power", "intersect", "colon",
    "saturate", "equals", "contains", "hilbert_series", "dimension", "codimension",
    "min_generators", "initial_degree", "quotient_by_variable", "saturate_by_variable",
]

SATURATION_CAP = 50


class Ideal:
    """An ideal given by generators, with cached reduced Groebner bases.

    ``tags`` carries constructor knowledge that is not computed here:
    ``radical``, ``lci`` (``True``, ``"asserted"`` or absent), ``unmixed``,
    ``ci`` and a free-form ``provenance`` string.
    """

    def __init__(self, ring: GradedRing, gens, tags=None):
        polys = []
        for g in gens:
            g = ring(g)
            if g:
                polys.append(g)
        self.ring = ring
        self.gens = tuple(polys)
        self.tags = dict(tags or {})
        self._gb = {}

    # Groebner bases --------------------------------------------------------
    def groebner_basis(self, order: MonomialOrder = None) -> GroebnerBasis:
        order = order or self.ring.order
        G = self._gb.get(order)
        if G is None:
            if self.gens:
                G = buchberger(self.gens, order)
            else:
                G = GroebnerBasis(self.ring, 1, [self.ring.zero_degree()], TermOverPosition(order), [])
            self._gb[order] = G
        return G

    @property
    def gb(self):
        """Reduced Groebner basis (ambient order) as a list of polynomials."""
        return self.groebner_basis().elements

    # predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.gb)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def _require_homogeneous(self, what):
        if not self.is_homogeneous():
            raise HomogeneityError("%s needs a homogeneous ideal" % what)

    # sugar --------------------------------------------------------------------
    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, m):
        return power(self, m)

    def __contains__(self, f):
        return contains(self, f)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return equals(self, other)

    __hash__ = None

    def __le__(self, other):
        """Containment ``self ⊆ other``."""
        _same_ring(self, other)
        return all(contains(other, g) for g in self.gens)

    def __ge__(self, other):
        return other <= self

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.gens)

    def with_tags(self, **tags) -> "Ideal":
        J = Ideal(self.ring, self.gens, {**self.tags, **tags})
        J._gb = self._gb
        return J


def _same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")


def _from_gb(ring, G: GroebnerBasis, order=None) -> Ideal:
    J = Ideal(ring, G.elements)
    if order is None or order == ring.order:
        J._gb[ring.order] = G
    return J


# ---------------------------------------------------------------------------
# sums, products, powers

def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def power(I: Ideal, m: int) -> Ideal:
    """``I^m`` from all ``m``-fold products of a minimal generating set of ``I``."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("power needs a positive integer exponent, got %r" % (m,))
    if m == 1:
        return I
    if I.is_zero():
        return I
    if I.is_homogeneous():
        gens = min_generators(I)[1]
    else:
        gens = list(I.gens)
    out = []
    for combo in combinations_with_replacement(range(len(gens)), m):
        f = gens[combo[0]]
        for k in combo[1:]:
            f = f * gens[k]
        out.append(f)
    assert len(out) <= comb(len(gens) + m - 1, m)
    return Ideal(I.ring, out)


# ---------------------------------------------------------------------------
# intersection, colon, saturation

def _to_raw(f: Polynomial, prefix=()):
    return {(0, prefix + e): c for e, c in f._d.items()}


def _intersect2(I: Ideal, J: Ideal) -> Ideal:
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    n = ring.nvars
    one = ring.field.one
    data = []
    for f in I.gens:
        data.append({(0, (1,) + e): c for e, c in f._d.items()})
    for g in J.gens:
        d = {}
        for e, c in g._d.items():
            d[(0, (0,) + e)] = c
            d[(0, (1,) + e)] = -c
        data.append(d)
    order = TermOverPosition(MonomialOrder.elimination(n + 1, 1))
    weights = (0,) + ring.weights
    elts = _gb(data, order.key, weights, [0], product_criterion=True)
    out = []
    for g in elts:
        if g.lexp[0]:
            continue
        if any(e[0] for (_, e) in g.terms):
            raise InvariantViolation("auxiliary variable leaked into an intersection")
        out.append(Polynomial(ring, {e[1:]: c for (_, e), c in g.terms.items()}))
    del one
    return Ideal(ring, out)


def intersect(I: Ideal, *others: Ideal) -> Ideal:
    """Intersection of one or more ideals (elimination of an auxiliary variable)."""
    result = I
    for J in others:
        _same_ring(result, J)
        result = _intersect2(result, J)
    return result


def quotient_by_variable(I: Ideal, i: int, infinite=False) -> Ideal:
    """``I : x_i`` (or ``I : x_i^oo``) for homogeneous ``I``.

    Uses a grevlex basis with ``x_i`` as the last variable: for homogeneous
    ``g`` in such a basis, ``x_i`` divides ``g`` exactly when it divides its
    leading term, so dividing each basis element by ``x_i`` (or by its full
    ``x_i``-power) yields generators of the quotient.
    """
    I._require_homogeneous("quotient by a variable")
    ring = I.ring
    order = MonomialOrder.grevlex(ring.nvars, last=i)
    G = I.groebner_basis(order)
    out = []
    for g in G.elements:
        k = min(e[i] for e in g._d)
        if not infinite:
            k = min(k, 1)
        if k:
            shift = [0] * ring.nvars
            shift[i] = k
            g = Polynomial(ring, {tuple(a - b for a, b in zip(e, shift)): c for e, c in g._d.items()})
        out.append(g)
    return Ideal(ring, out)


def saturate_by_variable(I: Ideal, i: int) -> Ideal:
    return quotient_by_variable(I, i, infinite=True)


def _is_variable(g: Polynomial):
    if len(g._d) != 1:
        return None
    e = next(iter(g._d))
    if sum(e) == 1:
        return e.index(1)
    return None


def _colon_poly(I: Ideal, g: Polynomial) -> Ideal:
    v = _is_variable(g)
    if v is not None and I.is_homogeneous():
        return quotient_by_variable(I, v)
    K = _intersect2(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [f.exact_div(g) for f in K.gb])


def colon(I: Ideal, J: Ideal) -> Ideal:
    """``I : J``, the intersection of ``I : g`` over the generators ``g`` of ``J``."""
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    if I.is_zero():
        return Ideal(I.ring, [])
    result = None
    for g in J.gens:
        K = _colon_poly(I, g)
        result = K if result is None else _intersect2(result, K)
    return result


def _is_irrelevant(J: Ideal) -> bool:
    ring = J.ring
    return equals(J, ring.irrelevant_ideal())


def saturate(I: Ideal, J: Ideal = None) -> Ideal:
    """``I : J^oo`` (default ``J`` = the irrelevant ideal).

    For the irrelevant ideal and homogeneous ``I`` this is the intersection
    of the single-variable saturations ``I : x_i^oo``; otherwise the colon
    ``K <- K : J`` is iterated until the reduced basis stabilises.
    """
    ring = I.ring
    if J is None:
        J = ring.irrelevant_ideal()
    _same_ring(I, J)
    if I.is_zero():
        return I
    if I.is_homogeneous() and _is_irrelevant(J):
        parts = []
        for i in range(ring.nvars):
            K = saturate_by_variable(I, i)
            if equals(K, I):
                return _canonical(I)
            if not any(equals(K, P) for P in parts):
                parts.append(K)
        return intersect(*parts)
    K = I
    for _ in range(SATURATION_CAP):
        K2 = colon(K, J)
        if equals(K2, K):
            return K
        K = K2
    raise InvariantViolation("saturation did not stabilise within %d colon steps" % SATURATION_CAP)


def _canonical(I: Ideal) -> Ideal:
    return Ideal(I.ring, I.gb)


# ---------------------------------------------------------------------------
# equality and membership

def equals(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    return I.groebner_basis() == J.groebner_basis()


def contains(I: Ideal, f) -> bool:
    f = I.ring(f)
    if not f:
        return True
    if I.is_zero():
        return False
    return not normal_form(f, I.groebner_basis())


# ---------------------------------------------------------------------------
# Hilbert series

def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _minimalize(mons):
    mons = sorted(set(mons), key=sum)
    out = []
    for m in mons:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = tuple(x + y for x, y in zip(k1, k2))
            out[k] = out.get(k, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def _poly_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


class _HSNumerator:
    """Recursion ``N(m_1..m_k) = N(m_1..m_{k-1}) - t^deg(m_k) N((m_1..m_{k-1}) : m_k)``."""

    def __init__(self, ring: GradedRing):
        self.ring = ring
        self.zero = tuple(ring.zero_degree())
        self.memo = {}

    def deg(self, m):
        return tuple(self.ring.mono_degree(m))

    def __call__(self, gens):
        gens = _minimalize(gens)
        key = frozenset(gens)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        result = self._compute(gens)
        self.memo[key] = result
        return result

    def _compute(self, gens):
        if not gens:
            return {self.zero: 1}
        # generators sharing no variable with any other one factor off
        supports = [frozenset(i for i, a in enumerate(m) if a) for m in gens]
        free, rest = [], []
        for k, m in enumerate(gens):
            others = set()
            for j, s in enumerate(supports):
                if j != k:
                    others |= s
            (rest if supports[k] & others else free).append(m)
        result = {self.zero: 1}
        for m in free:
            result = _poly_mul(result, {self.zero: 1, self.deg(m): -1})
        if not rest:
            return result
        rest.sort()
        last = rest[-1]
        head = rest[:-1]
        colon_gens = [tuple(max(a - b, 0) for a, b in zip(m, last)) for m in head]
        n1 = self(head)
        n2 = self(colon_gens) if head else {self.zero: 1}
        shifted = {tuple(x + y for x, y in zip(k, self.deg(last))): v for k, v in n2.items()}
        if not head:
            shifted = {self.deg(last): 1}
        return _poly_mul(result, _poly_sub(n1, shifted))


class HilbertSeries:
    """``N(t) / prod_i (1 - t^deg x_i)`` with an integer numerator.

    The numerator is a dict from degree tuples (length 1 or 2) to integers.
    """

    def __init__(self, ring: GradedRing, numerator: dict):
        self.ring = ring
        self.numerator = {tuple(k): v for k, v in numerator.items() if v}
        self._counts = {}

    def totalized(self) -> dict:
        """Numerator after setting every grading variable equal to one ``t``."""
        out = {}
        for k, v in self.numerator.items():
            out[sum(k)] = out.get(sum(k), 0) + v
        return {k: v for k, v in out.items() if v}

    def _count_monomials(self, target):
        """Number of monomials of multidegree ``target``."""
        target = tuple(target)
        if target in self._counts:
            return self._counts[target]
        degs = [tuple(d) for d in self.ring.degrees]
        table = {tuple([0] * len(target)): 1}
        for d in degs:
            new = {}
            for k, v in table.items():
                cur = k
                while all(c <= t for c, t in zip(cur, target)):
                    new[cur] = new.get(cur, 0) + v
                    cur = tuple(c + e for c, e in zip(cur, d))
            table = new
        val = table.get(target, 0)
        self._counts[target] = val
        return val

    def value(self, degree) -> int:
        """``dim_k (R/I)_degree`` for a full multidegree."""
        degree = tuple(DegreeVector(degree))
        total = 0
        for k, v in self.numerator.items():
            diff = tuple(a - b for a, b in zip(degree, k))
            if min(diff) >= 0:
                total += v * self._count_monomials(diff)
        return total

    def total_value(self, d: int) -> int:
        """Hilbert function of the totalized grading at degree ``d``."""
        n = self.ring.nvars
        w = self.ring.weights
        if all(x == 1 for x in w):
            return sum(v * comb(d - k + n - 1, n - 1) for k, v in self.totalized().items() if d >= k)
        if self.ring.arity == 1:
            return self.value((d,))
        return sum(self.value((a, d - a)) for a in range(d + 1))

    def values(self, bound: int):
        return [self.total_value(d) for d in range(bound + 1)]

    def pole_order(self) -> int:
        """Order of the pole at ``t = 1`` of the totalized series (= Krull dimension)."""
        num = self.totalized()
        if not num:
            raise ValueError("zero Hilbert series (unit ideal)")
        deg = max(num)
        coeffs = [num.get(i, 0) for i in range(deg + 1)]
        mult = 0
        while coeffs and sum(coeffs) == 0:
            # synthetic division by (1 - t): q_i = sum_{j<=i} c_j
            q, acc = [], 0
            for c in coeffs[:-1]:
                acc += c
                q.append(acc)
            coeffs = q
            mult += 1
        return self.ring.nvars - mult

    def format(self, bound: int = 8) -> str:
        num = self.numerator
        names = ["t"] if self.ring.arity == 1 else ["t1", "t2"]
        terms = []
        for k in sorted(num):
            mono = "*".join(("%s^%d" % (nm, e) if e > 1 else nm) for nm, e in zip(names, k) if e)
            c = num[k]
            body = mono if mono and abs(c) == 1 else (str(abs(c)) + ("*" + mono if mono else ""))
            terms.append(("-" if c < 0 else "+", body))
        text = "".join((" %s %s" % (s, b)) if i else ("-" + b if s == "-" else b) for i, (s, b) in enumerate(terms))
        den = " * ".join("(1 - %s)" % _deg_str(names, d) for d in self.ring.degrees)
        return "(%s) / (%s)\nHF: %s" % (text or "0", den, " ".join(str(v) for v in self.values(bound)))

    def __repr__(self):
        return "HilbertSeries(%r)" % (self.numerator,)


def _deg_str(names, d):
    return "*".join(("%s^%d" % (nm, e) if e > 1 else nm) for nm, e in zip(names, d) if e)


def hilbert_series(I: Ideal) -> HilbertSeries:
    """Hilbert series of ``R/I`` computed from the leading-term ideal."""
    I._require_homogeneous("hilbert_series")
    ring = I.ring
    if I.is_zero():
        return HilbertSeries(ring, {tuple(ring.zero_degree()): 1})
    lms = [e for (_, e) in I.groebner_basis().leading_monomials()]
    return HilbertSeries(ring, _HSNumerator(ring)(lms))


def dimension(I: Ideal) -> int:
    """Krull dimension of ``R/I``."""
    if I.is_unit():
        raise ValueError("the unit ideal has no dimension")
    return hilbert_series(I).pole_order()


def codimension(I: Ideal) -> int:
    return I.ring.nvars - dimension(I)


# ---------------------------------------------------------------------------
# minimal generators

def _monomials_of_degree(ring: GradedRing, target):
    """All exponent vectors of multidegree ``target``."""
    target = tuple(target)
    degs = [tuple(d) for d in ring.degrees]
    out = []

    def rec(i, rem, acc):
        if i == len(degs):
            if not any(rem):
                out.append(tuple(acc))
            return
        d = degs[i]
        k = 0
        cur = rem
        while min(cur) >= 0:
            acc.append(k)
            rec(i + 1, cur, acc)
            acc.pop()
            k += 1
            cur = tuple(a - b for a, b in zip(cur, d))
            if not any(d):
                break

    rec(0, target, [])
    return out


def _degree_basis(I: Ideal, target):
    """A basis of ``I_target``: one multiple of a basis element per leading monomial."""
    ring = I.ring
    G = I.groebner_basis()
    elts = G._elts
    basis = []
    for u in _monomials_of_degree(ring, target):
        for g in elts:
            if _divides(g.lexp, u):
                shift = tuple(a - b for a, b in zip(u, g.lexp))
                basis.append({tuple(a + b for a, b in zip(e, shift)): c for (_, e), c in g.terms.items()})
                break
    return basis


def _rank(vectors, key):
    """Exact rank of sparse vectors ``{monomial: coeff}`` by incremental elimination."""
    pivots = {}
    rank = 0
    for v in vectors:
        v = dict(v)
        while v:
            lead = max(v, key=key)
            p = pivots.get(lead)
            if p is None:
                inv = 1 / v[lead]
                pivots[lead] = {m: c * inv for m, c in v.items()}
                rank += 1
                break
            c = v[lead]
            for m, pc in p.items():
                w = v.get(m, 0) - c * pc
                if w:
                    v[m] = w
                else:
                    v.pop(m, None)
    return rank


def degree_dimension(I: Ideal, target) -> int:
    """``dim_k I_target`` as the rank of the spanning set built from the basis."""
    return _rank(_degree_basis(I, target), I.ring.order.key)


def min_generators(I: Ideal):
    """Minimal generator counts per degree and a minimal generating subset.

    Returns ``(counts, subset)`` with ``counts`` a list of
    ``(degree, count)`` pairs in ascending degree order.  Counts are
    ``dim (I / m I)_d``; the subset is extracted from the given generators.
    """
    I._require_homogeneous("min_generators")
    if I.is_zero():
        raise ValueError("the zero ideal has no generators")
    ring = I.ring
    key = ring.order.key
    degrees = sorted({g.degree for g in I.gens}, key=lambda d: (d.total, tuple(d)))
    counts = []
    for d in degrees:
        dim_d = len(_degree_basis(I, d))
        span = []
        for j, vd in enumerate(ring.degrees):
            lower = d - vd
            if min(lower) < 0:
                continue
            for b in _degree_basis(I, lower):
                span.append({tuple(a + (1 if k == j else 0) for k, a in enumerate(e)): c for e, c in b.items()})
        cnt = dim_d - _rank(span, key)
        if cnt:
            counts.append((d, cnt))
    gens = sorted(I.gens, key=lambda g: (g.degree.total, tuple(g.degree)))
    kept = []
    G = None
    for g in gens:
        if G is not None and not normal_form(g, G):
            continue
        kept.append(g)
        G = buchberger(kept)
    if len(kept) != sum(c for _, c in counts):
        raise InvariantViolation("greedy generator count %d disagrees with linear algebra %d"
                                 % (len(kept), sum(c for _, c in counts)))
    return counts, kept


def num_generators(I: Ideal) -> int:
    return sum(c for _, c in min_generators(I)[0])


def initial_degree(I: Ideal) -> int:
    """Least total degree of a nonzero form in ``I``."""
    if I.is_zero():
        raise ValueError("the zero ideal has no initial degree")
    I._require_homogeneous("initial_degree")
    return min(g.degree.total for g in I.gens)
