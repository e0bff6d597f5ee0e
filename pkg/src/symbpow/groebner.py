"""Normal forms, Buchberger's algorithm and Schreyer syzygies.

Everything here works on submodules of a free module ``R^r``; an ideal is
the rank-one case.  Internally a vector is a dict ``{(comp, exp): coeff}``
and monomial orders are realised by memoized sort keys, so a module order is
just a function from ``(comp, exp)`` to a comparable tuple.

Module orders provided:

* :class:`TermOverPosition` -- ambient order on the ring monomial, ties
  broken in favour of the lower component index;
* :class:`BlockOrder` -- components ``< split`` dominate, TOP inside blocks
  (used to eliminate components when computing syzygies of arbitrary
  generators);
* :class:`SchreyerOrder` -- the order induced by a Groebner basis on its
  syzygy module; ties go to the higher index, so the syzygy of the pair
  ``(j, i)``, ``j < i``, has leading term ``(lcm / lm_i) e_i``.
"""

from __future__ import annotations

from bisect import insort
from heapq import heappop, heappush
from operator import add, sub

from .errors import NotAGroebnerBasisError, RingMismatchError
from .polyring import DegreeVector, GradedRing, MonomialOrder, Polynomial

__all__ = [
    "ModuleOrder", "TermOverPosition", "BlockOrder", "SchreyerOrder",
    "FreeModuleElement", "GroebnerBasis",
    "normal_form", "buchberger", "syzygies", "syzygy_module",
    "minimal_generators_of_submodule",
]


# ---------------------------------------------------------------------------
# module orders

class ModuleOrder:
    """Base class: subclasses implement ``_key(comp, exp)``."""

    def __init__(self, mono: MonomialOrder):
        self.mono = mono
        cache = {}
        compute = self._key

        def key(m):
            k = cache.get(m)
            if k is None:
                k = cache[m] = compute(m[0], m[1])
            return k

        self.key = key
        self._cache = cache

    def _key(self, comp, exp):
        raise NotImplementedError


class TermOverPosition(ModuleOrder):
    def __init__(self, mono: MonomialOrder):
        self._mkey = mono.key
        super().__init__(mono)

    def _key(self, comp, exp):
        return (self._mkey(exp), -comp)

    def __eq__(self, other):
        return type(other) is TermOverPosition and other.mono == self.mono

    def __hash__(self):
        return hash(("TOP", self.mono))

    def __repr__(self):
        return "TermOverPosition(%r)" % (self.mono,)


class BlockOrder(ModuleOrder):
    """Components below ``split`` are larger than every component above it."""

    def __init__(self, mono: MonomialOrder, split: int):
        self._mkey = mono.key
        self.split = split
        super().__init__(mono)

    def _key(self, comp, exp):
        return (comp < self.split, self._mkey(exp), -comp)


class SchreyerOrder(ModuleOrder):
    """``x^a e_i`` is compared via ``x^a * lm(g_i)`` in the previous order."""

    def __init__(self, prev: ModuleOrder, leads):
        self.prev = prev
        self.leads = list(leads)  # (comp, exp) of each g_i in the previous module
        super().__init__(prev.mono)

    def _key(self, comp, exp):
        c, e = self.leads[comp]
        return (self.prev.key((c, tuple(map(add, exp, e)))), comp)


# ---------------------------------------------------------------------------
# internal basis elements

def _mask(exp):
    m = 0
    for i, a in enumerate(exp):
        if a:
            m |= 1 << i
    return m


class _Elt:
    """A monic basis element with cached leading data."""

    __slots__ = ("terms", "comp", "lexp", "mask", "tail", "sugar", "idx")

    def __init__(self, terms, key, sugar, idx=-1, lm=None):
        if lm is None:
            lm = max(terms, key=key)
        lc = terms[lm]
        if lc != 1:
            inv = 1 / lc
            terms = {m: c * inv for m, c in terms.items()}
        self.terms = terms
        self.comp, self.lexp = lm
        self.mask = _mask(self.lexp)
        self.tail = [(m, terms[m]) for m in sorted(terms, key=key, reverse=True) if m != lm]
        self.sugar = sugar
        self.idx = idx

    @property
    def lm(self):
        return (self.comp, self.lexp)


def _find_divisor(cands, e):
    me = _mask(e)
    for h in cands:
        if h.mask & ~me:
            continue
        for a, b in zip(h.lexp, e):
            if a > b:
                break
        else:
            return h
    return None


def _reduce(f, by_comp, key, record=None):
    """Fully reduce the dict ``f`` (consumed) modulo the elements in ``by_comp``.

    ``by_comp`` maps a component to its reducers in basis order.  When
    ``record`` is a list, each division step appends ``(idx, delta, coeff)``.
    """
    if not f:
        return {}
    heap = sorted([(key(m), m) for m in f])
    rem = {}
    while heap:
        m = heap.pop()[1]
        c = f.pop(m, None)
        if c is None:
            continue
        cands = by_comp.get(m[0])
        g = _find_divisor(cands, m[1]) if cands else None
        if g is None:
            rem[m] = c
            continue
        delta = tuple(map(sub, m[1], g.lexp))
        if record is not None:
            record.append((g.idx, delta, c))
        for (gc, ge), gv in g.tail:
            nm = (gc, tuple(map(add, ge, delta)))
            old = f.get(nm)
            if old is None:
                f[nm] = -(c * gv)
                insort(heap, (key(nm), nm))
            else:
                v = old - c * gv
                if v:
                    f[nm] = v
                else:
                    del f[nm]
    return rem


def _wdeg(exp, weights):
    return sum(a * w for a, w in zip(exp, weights))


def _sugar(f, weights, twists):
    return max(_wdeg(e, weights) + twists[c] for c, e in f)


def _lcm(a, b):
    return tuple(map(max, a, b))


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _spoly(g, h, lcm):
    """``(lcm/lm g) g - (lcm/lm h) h`` with the cancelling leading terms removed."""
    dg = tuple(map(sub, lcm, g.lexp))
    dh = tuple(map(sub, lcm, h.lexp))
    f = {}
    for (c, e), v in g.tail:
        f[(c, tuple(map(add, e, dg)))] = v
    for (c, e), v in h.tail:
        m = (c, tuple(map(add, e, dh)))
        old = f.get(m)
        if old is None:
            f[m] = -v
        else:
            w = old - v
            if w:
                f[m] = w
            else:
                del f[m]
    return f


def _group(elts):
    by_comp = {}
    for g in elts:
        by_comp.setdefault(g.comp, []).append(g)
    return by_comp


def _gb(gens, key, weights, twists, product_criterion, stats=None):
    """Buchberger with Gebauer--Moeller pair management and sugar selection.

    Returns the reduced basis as a list of monic :class:`_Elt`, sorted by
    descending leading monomial.
    """
    elts = []
    active = []
    lcms = {}
    heap = []
    for gi, f in enumerate(gens):
        if f:
            heappush(heap, (_sugar(f, weights, twists), 0, gi, 0))
    by_comp = {}
    npairs = nzero = 0
    while heap:
        s, kind, a, b = heappop(heap)
        if kind == 0:
            f = dict(gens[a])
        else:
            if (a, b) not in lcms:
                continue
            lcm = lcms.pop((a, b))
            f = _spoly(elts[a], elts[b], lcm)
            npairs += 1
        r = _reduce(f, by_comp, key)
        if not r:
            nzero += kind
            continue
        k = len(elts)
        h = _Elt(r, key, s, k)
        elts.append(h)
        mh, ch = h.lexp, h.comp

        # new pairs (chain and product criteria)
        cands = [i for i in active if elts[i].comp == ch]
        cl = {i: _lcm(elts[i].lexp, mh) for i in cands}
        coprime = {}
        if product_criterion:
            for i in cands:
                ei = elts[i].lexp
                coprime[i] = all(x == 0 or y == 0 for x, y in zip(ei, mh))
        kept = []
        for pos, i in enumerate(cands):
            L = cl[i]
            if coprime.get(i):
                kept.append(i)
                continue
            if any(_divides(cl[j], L) for j in cands[pos + 1:]) or any(_divides(cl[j], L) for j in kept):
                continue
            kept.append(i)
        # old pairs made redundant by h
        for pair, L in list(lcms.items()):
            i, j = pair
            if elts[i].comp != ch or not _divides(mh, L):
                continue
            if _lcm(elts[i].lexp, mh) != L and _lcm(elts[j].lexp, mh) != L:
                del lcms[pair]
        for i in kept:
            if coprime.get(i):
                continue
            L = cl[i]
            gi = elts[i]
            sg = max(gi.sugar + _wdeg(tuple(map(sub, L, gi.lexp)), weights),
                     s + _wdeg(tuple(map(sub, L, mh)), weights))
            lcms[(i, k)] = L
            heappush(heap, (sg, 1, i, k))
        active = [i for i in active if not (elts[i].comp == ch and _divides(mh, elts[i].lexp))]
        active.append(k)
        by_comp = _group(elts[i] for i in active)

    basis = [elts[i] for i in active]
    basis.sort(key=lambda g: key(g.lm), reverse=True)
    by_comp = _group(basis)
    reduced = []
    for g in basis:
        tail = dict(g.tail)
        r = _reduce(tail, by_comp, key)
        r[g.lm] = g.terms[g.lm]
        reduced.append(_Elt(r, key, g.sugar, len(reduced), lm=g.lm))
    if stats is not None:
        stats.update(pairs=npairs, zero_reductions=nzero, size=len(reduced))
    return reduced


# ---------------------------------------------------------------------------
# public types

class FreeModuleElement:
    """An element of ``R^rank`` whose summands carry degree twists.

    Stored sparsely as ``{(comp, exp): coeff}``.  Component ``c`` lives in
    the summand ``R(-twists[c])``.
    """

    __slots__ = ("ring", "rank", "twists", "terms")

    def __init__(self, ring: GradedRing, rank: int, terms=None, twists=None):
        self.ring = ring
        self.rank = rank
        if twists is None:
            twists = [ring.zero_degree()] * rank
        self.twists = tuple(DegreeVector(t) for t in twists)
        if len(self.twists) != rank:
            raise ValueError("one twist per component required")
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def from_polys(cls, polys, twists=None):
        polys = list(polys)
        if not polys:
            raise ValueError("at least one component needed")
        ring = polys[0].ring
        terms = {}
        for c, f in enumerate(polys):
            if f.ring != ring:
                raise RingMismatchError("components from different rings")
            for e, v in f._d.items():
                terms[(c, e)] = v
        return cls(ring, len(polys), terms, twists)

    def components(self):
        parts = [dict() for _ in range(self.rank)]
        for (c, e), v in self.terms.items():
            parts[c][e] = v
        return [Polynomial(self.ring, d) for d in parts]

    def __getitem__(self, c):
        return Polynomial(self.ring, {e: v for (cc, e), v in self.terms.items() if cc == c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _compatible(self, other):
        if not isinstance(other, FreeModuleElement) or other.ring != self.ring or other.rank != self.rank:
            raise RingMismatchError("module elements of different ambient modules")

    def __add__(self, other):
        self._compatible(other)
        d = dict(self.terms)
        for m, v in other.terms.items():
            w = d.get(m, 0) + v
            if w:
                d[m] = w
            else:
                d.pop(m, None)
        return FreeModuleElement(self.ring, self.rank, d, self.twists)

    def __neg__(self):
        return FreeModuleElement(self.ring, self.rank, {m: -v for m, v in self.terms.items()}, self.twists)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, f):
        """Multiply by a ring element (polynomial or scalar)."""
        f = self.ring(f)
        d = {}
        for (c, e), v in self.terms.items():
            for e2, v2 in f._d.items():
                m = (c, tuple(map(add, e, e2)))
                d[m] = d.get(m, 0) + v * v2
        return FreeModuleElement(self.ring, self.rank, d, self.twists)

    __rmul__ = __mul__

    def degrees(self):
        md = self.ring.mono_degree
        return {md(e) + self.twists[c] for c, e in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> DegreeVector:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree of a zero or inhomogeneous module element")
        return next(iter(degs))

    def __eq__(self, other):
        return (isinstance(other, FreeModuleElement) and self.ring == other.ring
                and self.rank == other.rank and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return "[" + ", ".join(str(p) for p in self.components()) + "]"


def _as_module(gens):
    """Normalise a list of polynomials or module elements to module elements."""
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    if all(isinstance(g, Polynomial) for g in gens):
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generators from different rings")
        return [FreeModuleElement.from_polys([g]) for g in gens], True
    if all(isinstance(g, FreeModuleElement) for g in gens):
        g0 = gens[0]
        for g in gens:
            if g.ring != g0.ring or g.rank != g0.rank:
                raise RingMismatchError("module generators of different ranks or rings")
        return gens, False
    raise TypeError("generators must be all polynomials or all module elements")


class GroebnerBasis:
    """A Groebner basis of a submodule, with the order it was computed for."""

    def __init__(self, ring, rank, twists, order: ModuleOrder, elts, reduced=True, polynomial=True):
        self.ring = ring
        self.rank = rank
        self.twists = tuple(twists)
        self.order = order
        self._elts = list(elts)
        self.reduced = reduced
        self.polynomial = polynomial and rank == 1

    @property
    def elements(self):
        out = []
        for g in self._elts:
            v = FreeModuleElement(self.ring, self.rank, g.terms, self.twists)
            out.append(v[0] if self.polynomial else v)
        return out

    def __len__(self):
        return len(self._elts)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self):
        return [g.lm for g in self._elts]

    def _by_comp(self):
        return _group(self._elts)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring and self.rank == other.rank
                and len(self) == len(other)
                and all(a.terms == b.terms for a, b in zip(self._elts, other._elts)))

    def __repr__(self):
        return "GroebnerBasis(%s)" % ", ".join(str(g) for g in self.elements)


def _module_setup(ring, order):
    if order is None:
        order = ring.order
    if isinstance(order, MonomialOrder):
        if order.nvars != ring.nvars:
            raise RingMismatchError("order has %d variables, ring has %d" % (order.nvars, ring.nvars))
        order = TermOverPosition(order)
    return order


def _elts_from(gens, order, weights, twists):
    key = order.key
    out = []
    for i, v in enumerate(gens):
        out.append(_Elt(dict(v.terms), key, _sugar(v.terms, weights, twists), i))
    return out


def buchberger(gens, order=None, stats=None) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule (or ideal) generated by ``gens``.

    ``order`` may be a ring :class:`MonomialOrder` (term-over-position is
    induced on modules) or a :class:`ModuleOrder`; it defaults to the ring's
    ambient order.  The output does not depend on the order of ``gens``.
    """
    vecs, polynomial = _as_module(gens)
    ring, rank = vecs[0].ring, vecs[0].rank
    twists = vecs[0].twists
    order = _module_setup(ring, order)
    weights = ring.weights
    tw = [t.total for t in twists]
    data = [dict(v.terms) for v in vecs if v.terms]
    elts = _gb(data, order.key, weights, tw, product_criterion=(rank == 1), stats=stats)
    return GroebnerBasis(ring, rank, twists, order, elts, True, polynomial)


def normal_form(f, G: GroebnerBasis):
    """Remainder of ``f`` on division by ``G`` (divisors tried in basis order)."""
    if isinstance(f, Polynomial):
        if G.rank != 1:
            raise RingMismatchError("polynomial reduced against a module basis")
        if f.ring != G.ring:
            raise RingMismatchError("ring mismatch in normal_form")
        terms = {(0, e): c for e, c in f._d.items()}
        r = _reduce(terms, G._by_comp(), G.order.key)
        return Polynomial(G.ring, {e: c for (_, e), c in r.items()})
    if not isinstance(f, FreeModuleElement) or f.rank != G.rank or f.ring != G.ring:
        raise RingMismatchError("module element and basis differ in ring or rank")
    r = _reduce(dict(f.terms), G._by_comp(), G.order.key)
    return FreeModuleElement(G.ring, G.rank, r, f.twists)


def _schreyer(elts, order: ModuleOrder, check=True):
    """Schreyer syzygies of the basis ``elts`` (each with ``idx`` = position).

    Only pairs whose monomial ``lcm/lm_i`` is a minimal generator of
    ``(lm_j : j < i) : lm_i`` are used; the result is a Groebner basis of
    the syzygy module for the induced Schreyer order.
    """
    key = order.key
    by_comp = _group(elts)
    syz = []
    for i, gi in enumerate(elts):
        mons = []
        for j in range(i):
            gj = elts[j]
            if gj.comp != gi.comp:
                continue
            m = tuple(map(sub, _lcm(gj.lexp, gi.lexp), gi.lexp))
            mons.append((j, m))
        minimal = []
        for j, m in mons:
            if any(_divides(m2, m) for _, m2 in minimal):
                continue
            if any(_divides(m2, m) and m2 != m for _, m2 in mons):
                continue
            minimal.append((j, m))
        for j, m in minimal:
            gj = elts[j]
            lcm = tuple(map(add, m, gi.lexp))
            f = _spoly(gi, gj, lcm)
            record = []
            r = _reduce(f, by_comp, key, record)
            if r:
                if check:
                    raise NotAGroebnerBasisError("S-pair (%d, %d) has nonzero normal form" % (j, i))
                continue
            mj = tuple(map(sub, lcm, gj.lexp))
            s = {(i, m): 1, (j, mj): -1}
            for k, delta, q in record:
                t = (k, delta)
                v = s.get(t, 0) - q
                if v:
                    s[t] = v
                else:
                    s.pop(t, None)
            syz.append(s)
    return syz


def syzygies(G: GroebnerBasis, check=True):
    """Schreyer generators of the syzygy module of ``G``.

    Returns ``(syz, order)``: module elements of ``R^len(G)`` twisted by the
    degrees of the basis elements, and the induced Schreyer order for which
    ``syz`` is a Groebner basis.  Raises :class:`NotAGroebnerBasisError` if
    an S-pair does not reduce to zero.
    """
    elts = G._elts
    for i, g in enumerate(elts):
        g.idx = i
    twists = []
    md = G.ring.mono_degree
    for g in elts:
        twists.append(md(g.lexp) + G.twists[g.comp])
    sorder = SchreyerOrder(G.order, [g.lm for g in elts])
    raw = _schreyer(elts, G.order, check)
    out = [FreeModuleElement(G.ring, len(elts), s, twists) for s in raw]
    return out, sorder


def syzygy_module(gens, twists=None):
    """Groebner basis of the syzygies of arbitrary generators ``gens``.

    ``gens`` are polynomials or module elements ``v_1..v_k`` of ``R^r``.  The
    vectors ``(v_i, e_i)`` of ``R^(r+k)`` are reduced under a block order that
    eliminates the first ``r`` components; the survivors form the syzygies.
    Returns module elements of ``R^k`` (twisted by the generator degrees).
    """
    vecs, _ = _as_module(gens)
    ring, r = vecs[0].ring, vecs[0].rank
    k = len(vecs)
    if twists is None:
        twists = [v.degree for v in vecs]
    twists = [DegreeVector(t) for t in twists]
    tw = [t.total for t in vecs[0].twists] + [t.total for t in twists]
    data = []
    for i, v in enumerate(vecs):
        d = dict(v.terms)
        d[(r + i, (0,) * ring.nvars)] = ring.field.one
        data.append(d)
    order = BlockOrder(ring.order, r)
    elts = _gb(data, order.key, ring.weights, tw, product_criterion=False)
    out = []
    for g in elts:
        if g.comp >= r:
            out.append(FreeModuleElement(ring, k, {(c - r, e): v for (c, e), v in g.terms.items()}, twists))
    return out


def minimal_generators_of_submodule(vecs):
    """Greedy minimal homogeneous generating set (process by increasing degree)."""
    vecs = [v for v in vecs if v]
    if not vecs:
        return []
    vecs = sorted(vecs, key=lambda v: (v.degree.total, tuple(v.degree)))
    kept = []
    G = None
    for v in vecs:
        if G is not None and not normal_form(v, G):
            continue
        kept.append(v)
        G = buchberger(kept)
    return kept
