"""Exact coefficient fields, multigraded polynomial rings and monomial orders.

Polynomials are sparse dictionaries ``{exponent tuple: coefficient}``.  The
coefficient field is either the rationals (``gmpy2.mpq``, always reduced) or
a prime field ``GF(p)`` whose elements are :class:`ModP` residues.  The
rationals are the reference field; ``GF(p)`` exists as a fast preview mode.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property
from numbers import Integral

import gmpy2
from gmpy2 import mpq

from .errors import HomogeneityError, ParseError, RingMismatchError

__all__ = [
    "QQ", "GF", "ModP", "RationalField", "PrimeField",
    "DegreeVector", "MonomialOrder", "GradedRing", "Polynomial",
    "parse_polynomial", "multidegree", "compare",
]


# ---------------------------------------------------------------------------
# coefficient fields

class RationalField:
    """The field of rational numbers with ``gmpy2.mpq`` elements."""

    characteristic = 0
    name = "QQ"

    def __call__(self, value):
        if isinstance(value, type(mpq())):
            return value
        if isinstance(value, ModP):
            raise TypeError("cannot coerce a GF(p) element into QQ")
        if isinstance(value, str):
            return mpq(Fraction(value))
        return mpq(value)

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class ModP:
    """Residue class modulo an odd prime; the stored value lies in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise RingMismatchError("GF(%d) and GF(%d) elements mixed" % (self.p, other.p))
            return other.v
        if isinstance(other, Integral):
            return other
        if isinstance(other, (Fraction, type(mpq()))):
            return int(other.numerator) * pow(int(other.denominator), -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        o %= self.p
        if o == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        o = self._coerce(other)
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __pow__(self, e):
        return ModP(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, Integral):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return str(self.v)


class PrimeField:
    """``GF(p)`` for an odd prime ``p < 2**31``."""

    def __init__(self, p: int):
        p = int(p)
        if p < 3 or p >= 2 ** 31 or not gmpy2.is_prime(p):
            raise ValueError("GF(p) needs an odd prime p < 2^31, got %d" % p)
        self.p = p
        self.characteristic = p
        self.name = "GF(%d)" % p

    def __call__(self, value):
        if isinstance(value, ModP):
            if value.p != self.p:
                raise RingMismatchError("element of GF(%d) used in GF(%d)" % (value.p, self.p))
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, (Fraction, type(mpq()))):
            num, den = int(value.numerator), int(value.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return ModP(num * pow(den, -1, self.p), self.p)
        return ModP(int(value), self.p)

    @property
    def zero(self):
        return ModP(0, self.p)

    @property
    def one(self):
        return ModP(1, self.p)

    def inv(self, a):
        return self.one / a

    def format(self, a) -> str:
        return str(a.v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


def GF(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# degrees and monomial orders

class DegreeVector(tuple):
    """An integer vector of length 1 or 2 with componentwise arithmetic.

    Ordinary tuple comparison (lexicographic) is kept so that degree vectors
    sort naturally; the componentwise partial order is :meth:`le`.
    """

    def __new__(cls, values):
        if isinstance(values, Integral):
            values = (values,)
        return super().__new__(cls, (int(v) for v in values))

    def _check(self, other):
        if len(other) != len(self):
            raise RingMismatchError("degree vectors of arity %d and %d mixed" % (len(self), len(other)))

    def __add__(self, other):
        other = DegreeVector(other)
        self._check(other)
        return DegreeVector(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        other = DegreeVector(other)
        self._check(other)
        return DegreeVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return DegreeVector(-a for a in self)

    def scale(self, k: int) -> "DegreeVector":
        return DegreeVector(k * a for a in self)

    def le(self, other) -> bool:
        """Componentwise ``self <= other``."""
        other = DegreeVector(other)
        self._check(other)
        return all(a <= b for a, b in zip(self, other))

    @property
    def total(self) -> int:
        return sum(self)

    def __repr__(self):
        if len(self) == 1:
            return "(%d)" % self[0]
        return "(" + ",".join(str(a) for a in self) + ")"


class MonomialOrder:
    """Monomial order on exponent tuples, realised by a sort key.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``.  A block order
    eliminates the first ``block`` variables: it compares their total degree
    first and breaks ties by grevlex on all variables.  ``perm`` lists the
    variable indices from largest to smallest; grevlex with ``perm`` ending in
    ``i`` makes ``x_i`` the last variable.
    """

    def __init__(self, kind: str, nvars: int, block: int = 0, perm=None):
        if kind not in ("grevlex", "lex", "block"):
            raise ValueError("unknown monomial order %r" % kind)
        if kind == "block" and not 0 < block <= nvars:
            raise ValueError("block size must lie in 1..nvars")
        self.kind = kind
        self.nvars = nvars
        self.block = block if kind == "block" else 0
        self.perm = tuple(range(nvars)) if perm is None else tuple(perm)
        if sorted(self.perm) != list(range(nvars)):
            raise ValueError("perm must be a permutation of the variables")
        rev = self.perm[::-1]
        if kind == "lex":
            p = self.perm
            self.key = lambda e: tuple([e[i] for i in p])
        elif kind == "grevlex":
            self.key = lambda e: (sum(e),) + tuple([-e[i] for i in rev])
        else:
            k = block
            self.key = lambda e: (sum(e[:k]), sum(e)) + tuple([-e[i] for i in rev])

    @classmethod
    def grevlex(cls, nvars, last=None):
        if last is None:
            return cls("grevlex", nvars)
        perm = [i for i in range(nvars) if i != last] + [last]
        return cls("grevlex", nvars, perm=perm)

    @classmethod
    def lex(cls, nvars):
        return cls("lex", nvars)

    @classmethod
    def elimination(cls, nvars, k):
        return cls("block", nvars, block=k)

    def compare(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def _ident(self):
        return (self.kind, self.nvars, self.block, self.perm)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        extra = ""
        if self.block:
            extra = ", block=%d" % self.block
        if self.perm != tuple(range(self.nvars)):
            extra += ", perm=%s" % (self.perm,)
        return "MonomialOrder(%r, %d%s)" % (self.kind, self.nvars, extra)


def compare(a, b, order: MonomialOrder) -> int:
    """Compare exponent tuples ``a`` and ``b``: returns -1, 0 or 1."""
    return order.compare(tuple(a), tuple(b))


# ---------------------------------------------------------------------------
# rings

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class GradedRing:
    """A polynomial ring ``k[x_0..x_n]`` with a Z or Z^2 grading.

    >>> R = GradedRing(["x", "y", "z"])
    >>> R.parse("x*(y^3-z^3)")
    x*y^3 - x*z^3
    """

    def __init__(self, names, degrees=None, field=QQ, order=None):
        if isinstance(names, str):
            names = [s.strip() for s in names.split(",")]
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for nm in names:
            if not _IDENT.match(nm):
                raise ValueError("bad variable name %r" % nm)
        if degrees is None:
            degrees = [(1,)] * len(names)
        degrees = tuple(DegreeVector(d) for d in degrees)
        if len(degrees) != len(names):
            raise ValueError("one degree per variable required")
        arity = len(degrees[0])
        if arity not in (1, 2) or any(len(d) != arity for d in degrees):
            raise ValueError("grading arity must be 1 or 2 and uniform")
        if any(d.total <= 0 or min(d) < 0 for d in degrees):
            raise ValueError("variable degrees must be nonnegative with positive total")
        self.names = names
        self.degrees = degrees
        self.arity = arity
        self.field = field
        self.nvars = len(names)
        self.order = order if order is not None else MonomialOrder.grevlex(self.nvars)
        self._index = {nm: i for i, nm in enumerate(names)}

    # identity -----------------------------------------------------------
    def _ident(self):
        return (self.names, self.degrees, self.field, self.order)

    def __eq__(self, other):
        return isinstance(other, GradedRing) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        grading = ""
        if any(d != (1,) for d in self.degrees):
            grading = " graded by " + " ".join(repr(d) for d in self.degrees)
        return "%r[%s]%s" % (self.field, ", ".join(self.names), grading)

    # constructors -------------------------------------------------------
    @property
    def n(self) -> int:
        """Projective dimension of the ambient space (variables minus one)."""
        return self.nvars - 1

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError("unknown variable %r" % name) from None

    def monomial(self, exp, coeff=1) -> "Polynomial":
        exp = tuple(int(e) for e in exp)
        if len(exp) != self.nvars or min(exp) < 0:
            raise ValueError("bad exponent vector %r" % (exp,))
        c = self.field(coeff)
        return Polynomial(self, {exp: c} if c else {})

    def from_dict(self, terms) -> "Polynomial":
        f = self.field
        d = {}
        for e, c in terms.items():
            c = f(c)
            if c:
                d[tuple(e)] = c
        return Polynomial(self, d)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatchError("polynomial from %r used in %r" % (value.ring, self))
            return value
        if isinstance(value, str):
            return parse_polynomial(value, self)
        return self.constant(value)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def mono_degree(self, exp) -> DegreeVector:
        acc = [0] * self.arity
        for e, d in zip(exp, self.degrees):
            if e:
                for k in range(self.arity):
                    acc[k] += e * d[k]
        return DegreeVector(acc)

    def zero_degree(self) -> DegreeVector:
        return DegreeVector([0] * self.arity)

    @cached_property
    def weights(self):
        """Total degree of each variable (used for sugar / degree bookkeeping)."""
        return tuple(d.total for d in self.degrees)

    def with_order(self, order: MonomialOrder) -> "GradedRing":
        return GradedRing(self.names, self.degrees, self.field, order)

    def with_field(self, field) -> "GradedRing":
        return GradedRing(self.names, self.degrees, field, self.order)

    def standard_graded(self) -> "GradedRing":
        """Same variables and order, every variable of degree 1."""
        return GradedRing(self.names, None, self.field, self.order)

    def irrelevant_ideal(self):
        from .ideals import Ideal
        return Ideal(self, self.gens())


# ---------------------------------------------------------------------------
# polynomials

_UNSET = object()


class Polynomial:
    """Immutable sparse polynomial.  Equality is exact term-by-term equality."""

    __slots__ = ("ring", "_d", "_hdeg", "_terms")

    def __init__(self, ring: GradedRing, terms: dict):
        self.ring = ring
        self._d = terms
        self._hdeg = _UNSET
        self._terms = None

    # basic access --------------------------------------------------------
    def dict(self) -> dict:
        return dict(self._d)

    def terms(self):
        """List of ``(coefficient, exponent)`` pairs, descending in the ring order."""
        if self._terms is None:
            key = self.ring.order.key
            self._terms = [(self._d[e], e) for e in sorted(self._d, key=key, reverse=True)]
        return self._terms

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    def is_constant(self) -> bool:
        return not self._d or (len(self._d) == 1 and not any(next(iter(self._d))))

    def lm(self, order=None):
        order = order or self.ring.order
        if not self._d:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._d, key=order.key)

    def lc(self, order=None):
        return self._d[self.lm(order)]

    def coefficient(self, exp):
        return self._d.get(tuple(exp), self.ring.field.zero)

    def total_degree(self) -> int:
        if not self._d:
            raise ValueError("zero polynomial has no degree")
        w = self.ring.weights
        return max(sum(a * b for a, b in zip(e, w)) for e in self._d)

    def support_degrees(self):
        md = self.ring.mono_degree
        return {md(e) for e in self._d}

    def is_homogeneous(self) -> bool:
        if self._hdeg is _UNSET:
            degs = self.support_degrees()
            self._hdeg = degs.pop() if len(degs) == 1 else None
        return self._hdeg is not None or not self._d

    @property
    def degree(self) -> DegreeVector:
        return multidegree(self)

    # arithmetic ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError("polynomials from different rings")
            return other
        try:
            return self.ring.constant(other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self._d)
        for e, c in o._d.items():
            v = d.get(e)
            if v is None:
                d[e] = c
            else:
                v = v + c
                if v:
                    d[e] = v
                else:
                    del d[e]
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._d.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = {}
        for e1, c1 in self._d.items():
            for e2, c2 in o._d.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                v = d.get(e)
                d[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial(self.ring, {e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, Integral) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: c * v for e, v in self._d.items()})

    def mul_monomial(self, exp, coeff=None) -> "Polynomial":
        if coeff is None:
            return Polynomial(self.ring, {tuple([a + b for a, b in zip(e, exp)]): c
                                          for e, c in self._d.items()})
        return self.mul_monomial(exp).scale(coeff)

    def monic(self, order=None) -> "Polynomial":
        if not self._d:
            return self
        return self.scale(self.ring.field.inv(self.lc(order)))

    def divmod(self, other: "Polynomial"):
        """Multivariate division by a single polynomial (ring order).

        Returns ``(q, r)`` with ``self = q*other + r`` and no term of ``r``
        divisible by the leading monomial of ``other``.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        key = self.ring.order.key
        lm = other.lm()
        lc = other._d[lm]
        f = dict(self._d)
        q = {}
        r = {}
        while f:
            e = max(f, key=key)
            c = f.pop(e)
            if all(a >= b for a, b in zip(e, lm)):
                delta = tuple(a - b for a, b in zip(e, lm))
                t = c / lc
                q[delta] = q.get(delta, 0) + t
                for e2, c2 in other._d.items():
                    if e2 == lm:
                        continue
                    ne = tuple(a + b for a, b in zip(e2, delta))
                    v = f.get(ne, 0) - t * c2
                    if v:
                        f[ne] = v
                    else:
                        f.pop(ne, None)
            else:
                r[e] = c
        ring = self.ring
        return ring.from_dict(q), ring.from_dict(r)

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def evaluate(self, point):
        f = self.ring.field
        pt = [f(v) for v in point]
        total = f.zero
        for e, c in self._d.items():
            t = c
            for v, k in zip(pt, e):
                if k:
                    t = t * v ** k
            total = total + t
        return total

    def variables(self):
        """Indices of the variables that occur."""
        used = set()
        for e in self._d:
            used.update(i for i, a in enumerate(e) if a)
        return sorted(used)

    # comparison / printing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        o = self._coerce(other)
        return o is not None and self._d == o._d

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return format_polynomial(self)


def multidegree(f: Polynomial) -> DegreeVector:
    """The common degree vector of all terms of a nonzero homogeneous ``f``."""
    if f.is_zero():
        raise HomogeneityError("the zero polynomial has no degree")
    if not f.is_homogeneous():
        degs = sorted(f.support_degrees())
        raise HomogeneityError("inhomogeneous polynomial: term degrees %r and %r conflict"
                               % (degs[0], degs[-1]))
    return f._hdeg


def _format_monomial(ring, exp):
    parts = []
    for nm, e in zip(ring.names, exp):
        if e == 1:
            parts.append(nm)
        elif e > 1:
            parts.append("%s^%d" % (nm, e))
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    fmt = f.ring.field.format
    out = []
    for i, (c, e) in enumerate(f.terms()):
        s = fmt(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mono = _format_monomial(f.ring, e)
        if mono:
            body = mono if s == "1" else s + "*" + mono
        else:
            body = s
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, ident, op = m.groups()
        if num is not None:
            toks.append(("num", int(num), m.start(1)))
        elif ident is not None:
            toks.append(("var", ident, m.start(2)))
        else:
            if op not in "+-*/^()":
                raise ParseError("unexpected character %r at position %d" % (op, m.start(3)))
            toks.append((op, op, m.start(3)))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of input in %r" % self.text)
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %r at position %d of %r" % (kind, tok[2], self.text))
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty polynomial")
        f = self.expr()
        if self.i != len(self.toks):
            tok = self.toks[self.i]
            raise ParseError("unexpected %r at position %d of %r" % (tok[1], tok[2], self.text))
        return f

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            f = f + t if op == "+" else f - t
        return f

    def term(self):
        f = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            g = self.factor()
            if op == "*":
                f = f * g
            else:
                if not g.is_constant() or g.is_zero():
                    raise ParseError("division by a non-constant or zero in %r" % self.text)
                f = f.scale(self.ring.field.inv(g.coefficient((0,) * self.ring.nvars)))
        return f

    def exponent(self):
        if self.peek() != "num":
            bad = self.toks[self.i][1] if self.i < len(self.toks) else "end of input"
            raise ParseError("malformed exponent %r in %r" % (bad, self.text))
        return self.take()[1]

    def factor(self):
        kind = self.peek()
        if kind == "num":
            return self.ring.constant(self.take()[1])
        if kind == "var":
            name = self.take()[1]
            if name not in self.ring._index:
                raise ParseError("unknown variable %r in %r" % (name, self.text))
            base = self.ring.gen(name)
            if self.peek() == "^":
                self.take()
                return base ** self.exponent()
            return base
        if kind == "(":
            self.take()
            f = self.expr()
            self.take(")")
            if self.peek() == "^":
                self.take()
                return f ** self.exponent()
            return f
        if kind is None:
            raise ParseError("unexpected end of input in %r" % self.text)
        tok = self.toks[self.i]
        raise ParseError("unexpected %r at position %d of %r" % (tok[1], tok[2], self.text))


def parse_polynomial(text: str, ring: GradedRing) -> Polynomial:
    """Parse ``text`` (integers, rationals, ``+ - * / ^`` and parentheses)."""
    if not isinstance(text, str):
        raise ParseError("polynomial text must be a string")
    return _Parser(text, ring).parse()
