"""Graded free resolutions, Betti tables and the strand complex of a power.

Complexes are stored with ascending homological index: ``modules[0]`` is
``R`` (for resolutions of ``R/I``) and ``maps[i-1]`` is the differential
``d_i: modules[i] -> modules[i-1]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb

from .errors import HomogeneityError, HypothesisError, InvariantViolation, RingMismatchError
from .groebner import SchreyerOrder, _Elt, _schreyer
from .ideals import Ideal, codimension, colon, equals, hilbert_series, min_generators
from .polyring import DegreeVector, GradedRing, Polynomial

__all__ = [
    "FreeModule", "ModuleMap", "Presentation", "ChainComplex", "BettiTable",
    "minimal_resolution", "betti_table", "power_complex", "exactness_hypotheses",
    "ExactnessReport", "is_acm", "is_saturated", "projective_dimension",
    "verify_complex", "VerificationReport", "format_betti", "betti_json",
]


# ---------------------------------------------------------------------------
# free modules and maps

class FreeModule:
    """``⊕ R(-a)`` over the list of twists ``a``."""

    def __init__(self, ring: GradedRing, twists):
        self.ring = ring
        self.twists = [DegreeVector(t) for t in twists]
        for t in self.twists:
            if len(t) != ring.arity:
                raise RingMismatchError("twist %r does not match the grading" % (t,))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def hilbert_numerator(self) -> dict:
        out = {}
        for t in self.twists:
            out[tuple(t)] = out.get(tuple(t), 0) + 1
        return out

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.ring == other.ring and self.twists == other.twists

    def __repr__(self):
        return "FreeModule(%s)" % ", ".join(_fmt_twist(t) for t in self.twists)


def _fmt_twist(t):
    """``R(-a)`` or ``R(-a,-b)``, writing zero shifts as ``0``."""
    return "R(%s)" % ",".join("-%d" % v if v else "0" for v in t)


class ModuleMap:
    """A matrix of polynomials with ``target.rank`` rows and ``source.rank`` columns."""

    def __init__(self, source: FreeModule, target: FreeModule, matrix, check=True):
        self.source = source
        self.target = target
        ring = source.ring
        self.matrix = [[ring(x) for x in row] for row in matrix]
        if len(self.matrix) != target.rank or any(len(r) != source.rank for r in self.matrix):
            raise RingMismatchError("matrix shape does not match the free modules")
        if check:
            self.check_homogeneous()

    @property
    def ring(self):
        return self.source.ring

    def entry(self, i, j) -> Polynomial:
        return self.matrix[i][j]

    def column(self, j):
        return [row[j] for row in self.matrix]

    def check_homogeneous(self):
        for i, row in enumerate(self.matrix):
            for j, f in enumerate(row):
                if not f:
                    continue
                want = self.source.twists[j] - self.target.twists[i]
                if not f.is_homogeneous() or f.degree != want:
                    raise HomogeneityError("entry (%d, %d) = %s is not of degree %r" % (i, j, f, want))

    def is_minimal(self) -> bool:
        """No entry is a nonzero constant."""
        return not any(f and f.is_constant() for row in self.matrix for f in row)

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self ∘ other``."""
        if other.target.twists != self.source.twists:
            raise RingMismatchError("maps are not composable")
        zero = self.ring.zero()
        out = []
        for row in self.matrix:
            new = []
            for j in range(other.source.rank):
                acc = zero
                for k, a in enumerate(row):
                    if a:
                        b = other.matrix[k][j]
                        if b:
                            acc = acc + a * b
                new.append(acc)
            out.append(new)
        return ModuleMap(other.source, self.target, out, check=False)

    def is_zero(self) -> bool:
        return not any(f for row in self.matrix for f in row)

    def __repr__(self):
        return "ModuleMap(%d x %d)" % (self.target.rank, self.source.rank)


class Presentation:
    """A map ``phi: F -> G`` whose columns are syzygies of ``f_1..f_d``.

    ``G`` carries the degrees of the ``f_i``; ``phi`` presents the ideal
    they generate when the sequence ``0 -> F -> G -> I -> 0`` is exact.
    """

    def __init__(self, phi: ModuleMap, gens):
        self.phi = phi
        self.gens = [phi.ring(g) for g in gens]
        if len(self.gens) != phi.target.rank:
            raise RingMismatchError("need one generator per summand of G")
        for i, g in enumerate(self.gens):
            if g.degree != phi.target.twists[i]:
                raise HomogeneityError("generator %d has degree %r, summand twist %r"
                                       % (i, g.degree, phi.target.twists[i]))
        for j in range(phi.source.rank):
            s = phi.ring.zero()
            for i, g in enumerate(self.gens):
                s = s + phi.matrix[i][j] * g
            if s:
                raise HypothesisError("column %d of the presentation is not a syzygy" % j)

    @property
    def ring(self):
        return self.phi.ring

    @property
    def F(self) -> FreeModule:
        return self.phi.source

    @property
    def G(self) -> FreeModule:
        return self.phi.target

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.gens)

    @classmethod
    def from_matrix(cls, ring, gens, matrix):
        """Build from generators and a ``d x s`` matrix; twists are inferred."""
        gens = [ring(g) for g in gens]
        G = FreeModule(ring, [g.degree for g in gens])
        tw = []
        for j in range(len(matrix[0])):
            for i in range(len(gens)):
                e = ring(matrix[i][j])
                if e:
                    tw.append(e.degree + G.twists[i])
                    break
            else:
                raise ValueError("zero column in presentation matrix")
        return cls(ModuleMap(FreeModule(ring, tw), G, matrix), gens)

    @classmethod
    def of_ideal(cls, I: Ideal) -> "Presentation":
        """Minimal presentation read off the first two steps of a minimal resolution."""
        C, _ = minimal_resolution(I)
        if len(C.maps) < 2:
            raise HypothesisError("ideal has no syzygies (principal ideal)")
        gens = C.maps[0].matrix[0]
        return cls(C.maps[1], gens)


class ChainComplex:
    def __init__(self, modules, maps, augmentation: Ideal = None):
        self.modules = list(modules)
        self.maps = list(maps)
        self.augmentation = augmentation
        if len(self.maps) != max(len(self.modules) - 1, 0):
            raise ValueError("need exactly one map between consecutive modules")
        for i, d in enumerate(self.maps):
            if d.source.twists != self.modules[i + 1].twists or d.target.twists != self.modules[i].twists:
                raise RingMismatchError("map %d does not fit its modules" % (i + 1))

    @property
    def ring(self):
        return self.modules[0].ring

    def ranks(self):
        return [M.rank for M in self.modules]

    def length(self) -> int:
        return len(self.modules) - 1

    def is_complex(self) -> bool:
        return all(self.maps[i].compose(self.maps[i + 1]).is_zero() for i in range(len(self.maps) - 1))

    def is_minimal(self) -> bool:
        return all(d.is_minimal() for d in self.maps)

    def betti(self) -> "BettiTable":
        entries = {}
        for i, M in enumerate(self.modules):
            for t in M.twists:
                k = (i, tuple(t))
                entries[k] = entries.get(k, 0) + 1
        return BettiTable(entries, self.ring.arity)

    def euler_numerator(self) -> dict:
        """``sum_i (-1)^i sum_a t^a``: the Hilbert numerator of ``H_0`` when exact."""
        out = {}
        for i, M in enumerate(self.modules):
            for t in M.twists:
                out[tuple(t)] = out.get(tuple(t), 0) + (-1) ** i
        return {k: v for k, v in out.items() if v}

    def __repr__(self):
        return "ChainComplex(ranks=%s)" % self.ranks()


# ---------------------------------------------------------------------------
# Betti tables

class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` keyed by ``(i, j)`` with ``j`` a degree tuple."""

    def __init__(self, entries: dict, arity: int = 1):
        self.entries = {(i, tuple(j)): c for (i, j), c in entries.items() if c}
        self.arity = arity

    def __getitem__(self, key):
        i, j = key
        if isinstance(j, int):
            j = (j,)
        return self.entries.get((i, tuple(j)), 0)

    @property
    def pdim(self) -> int:
        return max(i for i, _ in self.entries)

    def totals(self):
        out = [0] * (self.pdim + 1)
        for (i, _), c in self.entries.items():
            out[i] += c
        return out

    def maxima(self):
        """``M_i``: the largest total degree with ``beta_{i,j} != 0``."""
        out = []
        for i in range(self.pdim + 1):
            ds = [sum(j) for (k, j) in self.entries if k == i]
            out.append(max(ds) if ds else None)
        return out

    def totalized(self) -> "BettiTable":
        out = {}
        for (i, j), c in self.entries.items():
            k = (i, (sum(j),))
            out[k] = out.get(k, 0) + c
        return BettiTable(out, 1)

    def shift_homological(self, k: int) -> "BettiTable":
        return BettiTable({(i + k, j): c for (i, j), c in self.entries.items()}, self.arity)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return "BettiTable(totals=%s)" % self.totals()

    def to_json(self) -> dict:
        rows = [[i, list(j), c] for (i, j), c in sorted(self.entries.items())]
        return {"betti": rows, "pdim": self.pdim, "M": self.maxima()}

    @classmethod
    def from_json(cls, data) -> "BettiTable":
        rows = data["betti"]
        arity = len(rows[0][1]) if rows else 1
        return cls({(i, tuple(j)): c for i, j, c in rows}, arity)

    @classmethod
    def from_diagram(cls, rows: dict) -> "BettiTable":
        """From a diagram ``{row: [entries by column]}`` with row = j - i (None for '-')."""
        out = {}
        for r, vals in rows.items():
            for i, v in enumerate(vals):
                if v:
                    out[(i, (r + i,))] = v
        return cls(out, 1)


def format_betti(B: BettiTable) -> str:
    """Macaulay2-style diagram (rows ``j - i``); bigraded tables list twists per index."""
    if B.arity != 1:
        lines = []
        for i in range(B.pdim + 1):
            parts = []
            for (k, j), c in sorted(B.entries.items()):
                if k == i:
                    parts.append("%s%s" % (_fmt_twist(j), "^%d" % c if c > 1 else ""))
            lines.append("%d: %s" % (i, " + ".join(parts) if parts else "0"))
        return "\n".join(lines)
    p = B.pdim
    rows = sorted({j[0] - i for (i, j) in B.entries})
    lo, hi = min(rows + [0]), max(rows)
    header = [""] + [str(i) for i in range(p + 1)]
    table = []
    for r in range(lo, hi + 1):
        cells = ["%d:" % r]
        for i in range(p + 1):
            c = B[(i, r + i)]
            cells.append(str(c) if c else "-")
        table.append(cells)
    table.append(["Tot:"] + [str(t) for t in B.totals()])
    widths = [max(len(row[k]) for row in [header] + table) for k in range(p + 2)]
    lines = []
    for row in [header] + table:
        lines.append(" ".join(cell.rjust(widths[k]) for k, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def betti_json(B: BettiTable) -> str:
    return json.dumps(B.to_json())


# ---------------------------------------------------------------------------
# minimal resolutions: Schreyer frame, then pruning of unit entries

def _frame(I: Ideal):
    """Non-minimal free resolution of ``R/I`` from iterated Schreyer syzygies.

    Returns per homological index ``i >= 1`` a pair ``(twists, columns)``;
    column ``c`` of level ``i`` is a dict ``{(row, exp): coeff}``.  Basis
    elements are sorted by ascending lex order of their leading monomials
    inside each component, which makes the leading terms lose one variable
    per step so the frame has length at most the number of variables.
    """
    ring = I.ring
    G = I.groebner_basis()
    order = G.order
    md = ring.mono_degree
    key = order.key
    cur = [_Elt(dict(g.terms), key, g.sugar, lm=g.lm) for g in G._elts]
    cur.sort(key=lambda g: (g.comp, g.lexp))
    prev_tw = [ring.zero_degree()]
    levels = []
    while cur:
        for i, g in enumerate(cur):
            g.idx = i
        tw = [md(g.lexp) + prev_tw[g.comp] for g in cur]
        levels.append((tw, [g.terms for g in cur]))
        sorder = SchreyerOrder(order, [g.lm for g in cur])
        raw = _schreyer(cur, order, check=True)
        nxt = [_Elt(s, sorder.key, 0) for s in raw]
        nxt.sort(key=lambda g: (g.comp, g.lexp))
        cur, order, prev_tw = nxt, sorder, tw
    return levels


def _mul_raw(a: dict, b: dict) -> dict:
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e)
            v = c1 * c2 if v is None else v + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _prune(ring: GradedRing, twists, mats):
    """Remove unit entries from the differentials.

    ``twists[i]`` lists the summand degrees of ``F_i`` (``F_0 = R``) and
    ``mats[i]`` is ``d_{i+1}`` as a list of columns ``{row: {exp: coeff}}``.
    A unit ``u = d[r][c]`` is eliminated by the change of basis that turns
    ``d`` into ``d - d[:, c] d[r, :] / u`` on the other rows and columns,
    deleting row ``c`` of the next differential and column ``r`` of the
    previous one.  Pivots are taken at the lowest homological index, then
    the lowest row, then the lowest column.
    """
    const = tuple([0] * ring.nvars)
    alive = [list(range(len(t))) for t in twists]
    for lvl in range(len(mats)):
        cols = mats[lvl]
        src, tgt = lvl + 1, lvl
        while True:
            pivot = None
            tgt_pos = {r: k for k, r in enumerate(alive[tgt])}
            for c in alive[src]:
                col = cols[c]
                for r, f in col.items():
                    if len(f) == 1 and const in f:
                        cand = (tgt_pos[r], c)
                        if pivot is None or cand < pivot:
                            pivot = cand
            if pivot is None:
                break
            r = alive[tgt][pivot[0]]
            c = pivot[1]
            pcol = cols[c]
            u = pcol[r][const]
            inv = 1 / u
            for b in alive[src]:
                if b == c:
                    continue
                col = cols[b]
                f = col.get(r)
                if not f:
                    continue
                scale = {e: v * inv for e, v in f.items()}
                for a, g in pcol.items():
                    if a == r:
                        continue
                    prod = _mul_raw(g, scale)
                    cur = col.get(a)
                    if cur is None:
                        new = {e: -v for e, v in prod.items()}
                    else:
                        new = dict(cur)
                        for e, v in prod.items():
                            w = new.get(e)
                            w = -v if w is None else w - v
                            if w:
                                new[e] = w
                            else:
                                new.pop(e, None)
                    if new:
                        col[a] = new
                    else:
                        col.pop(a, None)
                col.pop(r, None)
            alive[src].remove(c)
            alive[tgt].remove(r)
            if lvl + 1 < len(mats):
                for col in mats[lvl + 1]:
                    col.pop(c, None)
            if lvl > 0:
                mats[lvl - 1][r] = {}
    return alive


def minimal_resolution(I: Ideal):
    """Minimal graded free resolution of ``R/I`` and its Betti table.

    The resolution is cached on the ideal.
    """
    cached = getattr(I, "_resolution", None)
    if cached is not None:
        return cached
    if not I.is_homogeneous():
        raise HomogeneityError("minimal_resolution needs a homogeneous ideal")
    if I.is_unit():
        raise ValueError("the unit ideal has an empty resolution")
    ring = I.ring
    if I.is_zero():
        C = ChainComplex([FreeModule(ring, [ring.zero_degree()])], [])
        out = (C, C.betti())
        I._resolution = out
        return out
    levels = _frame(I)
    twists = [[ring.zero_degree()]] + [tw for tw, _ in levels]
    mats = []
    for tw, vecs in levels:
        cols = []
        for v in vecs:
            col = {}
            for (r, e), c in v.items():
                col.setdefault(r, {})[e] = c
            cols.append(col)
        mats.append(cols)
    alive = _prune(ring, twists, mats)
    modules = [FreeModule(ring, [twists[i][k] for k in alive[i]]) for i in range(len(twists))]
    while len(modules) > 1 and modules[-1].rank == 0:
        modules.pop()
    maps = []
    for lvl in range(len(modules) - 1):
        rows = alive[lvl]
        cols = alive[lvl + 1]
        pos = {r: k for k, r in enumerate(rows)}
        matrix = [[ring.zero()] * len(cols) for _ in rows]
        for k, c in enumerate(cols):
            for r, f in mats[lvl][c].items():
                matrix[pos[r]][k] = Polynomial(ring, f)
        maps.append(ModuleMap(modules[lvl + 1], modules[lvl], matrix, check=False))
    C = ChainComplex(modules, maps, augmentation=I)
    if not C.is_minimal():
        raise InvariantViolation("pruned resolution still has a unit entry")
    out = (C, C.betti())
    I._resolution = out
    return out


def betti_table(I: Ideal) -> BettiTable:
    return minimal_resolution(I)[1]


def projective_dimension(I: Ideal) -> int:
    """Projective dimension of ``R/I``."""
    return betti_table(I).pdim


def is_acm(I: Ideal) -> bool:
    """``R/I`` Cohen-Macaulay: projective dimension equals codimension."""
    return projective_dimension(I) == codimension(I)


def is_saturated(I: Ideal) -> bool:
    return equals(colon(I, I.ring.irrelevant_ideal()), I)


# ---------------------------------------------------------------------------
# the strand complex  ⋀^a F ⊗ Sym^b G  (a + b = m)

def _sym_basis(d, b):
    """Exponent vectors of degree ``b`` in ``d`` variables, lexicographically descending
    in ``(beta_1, ..., beta_d)`` -- i.e. ``g_1^b`` first."""
    out = []
    for combo in combinations_with_replacement(range(d), b):
        beta = [0] * d
        for k in combo:
            beta[k] += 1
        out.append(tuple(beta))
    return out


def power_complex(P: Presentation, m: int) -> ChainComplex:
    """The complex ``0 -> ⋀^a F ⊗ Sym^(m-a) G -> ... -> Sym^m G -> R``.

    Index ``0`` is ``R`` and index ``a + 1`` is ``⋀^a F ⊗ Sym^(m-a) G``; the
    map out of index 1 is the augmentation ``g^beta -> prod f_i^beta_i``.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("power_complex needs m >= 1")
    phi = P.phi
    if not phi.is_minimal():
        raise HypothesisError("presentation matrix has a unit entry (not minimal)")
    ring = P.ring
    d, s = P.G.rank, P.F.rank
    twF, twG = P.F.twists, P.G.twists
    zero_deg = ring.zero_degree()

    bases = []
    for a in range(0, min(m, s) + 1):
        b = m - a
        basis = [(J, beta) for J in combinations(range(s), a) for beta in _sym_basis(d, b)]
        bases.append(basis)

    def twist(J, beta):
        t = zero_deg
        for j in J:
            t = t + twF[j]
        for i, k in enumerate(beta):
            if k:
                t = t + twG[i].scale(k)
        return t

    modules = [FreeModule(ring, [zero_deg])]
    for basis in bases:
        modules.append(FreeModule(ring, [twist(J, beta) for J, beta in basis]))

    # augmentation
    pw = {}

    def gen_power(beta):
        f = pw.get(beta)
        if f is None:
            f = ring.one()
            for i, k in enumerate(beta):
                if k:
                    f = f * P.gens[i] ** k
            pw[beta] = f
        return f

    maps = [ModuleMap(modules[1], modules[0], [[gen_power(beta) for _, beta in bases[0]]])]
    for a in range(1, len(bases)):
        src, tgt = bases[a], bases[a - 1]
        index = {t: k for k, t in enumerate(tgt)}
        matrix = [[ring.zero()] * len(src) for _ in tgt]
        for col, (J, beta) in enumerate(src):
            for k, jk in enumerate(J):
                sign = 1 if k % 2 == 0 else -1
                rest = J[:k] + J[k + 1:]
                for i in range(d):
                    f = phi.matrix[i][jk]
                    if not f:
                        continue
                    nb = list(beta)
                    nb[i] += 1
                    row = index[(rest, tuple(nb))]
                    matrix[row][col] = matrix[row][col] + (f if sign > 0 else -f)
        maps.append(ModuleMap(modules[a + 1], modules[a], matrix))
    C = ChainComplex(modules, maps, augmentation=Ideal(ring, P.gens) ** m)
    if not C.is_complex():
        raise InvariantViolation("strand complex differentials do not compose to zero")
    if not all(dm.is_minimal() for dm in C.maps[1:]):
        raise InvariantViolation("strand complex differential has a unit entry")
    for i in range(1, len(modules)):
        if modules[i].rank != comb(s, i - 1) * comb(d + m - i, d - 1):
            raise InvariantViolation("strand complex rank mismatch at index %d" % i)
    return C


# ---------------------------------------------------------------------------
# hypotheses of the exactness theorem

PASS, FAIL, ASSERTED, UNVERIFIED = "pass", "fail", "asserted", "unverified"


@dataclass
class ExactnessReport:
    """Status of each hypothesis guaranteeing that the strand complex resolves ``I^m``."""

    m: int
    n: int
    mu: int
    codim: int
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v in (PASS, ASSERTED) for v in self.checks.values())

    @property
    def verified(self) -> bool:
        return all(v == PASS for v in self.checks.values())

    def failures(self):
        return [k for k, v in self.checks.items() if v not in (PASS, ASSERTED)]

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "mu": self.mu, "codim": self.codim,
                "checks": dict(self.checks), "passed": self.passed}

    def format(self) -> str:
        lines = ["hypotheses for m = %d (n = %d, mu = %d):" % (self.m, self.n, self.mu)]
        for k, v in self.checks.items():
            lines.append("  %-12s %s" % (k, v))
        lines.append("  => %s" % ("exact (resolution of I^m)" if self.passed else "not guaranteed"))
        return "\n".join(lines)


def lci_status(I: Ideal) -> str:
    tag = I.tags.get("lci")
    if tag is True:
        return PASS
    if tag == ASSERTED:
        return ASSERTED
    if tag is False:
        return FAIL
    return UNVERIFIED


def exactness_hypotheses(I: Ideal, m: int) -> ExactnessReport:
    """Codimension two, ACM, locally a complete intersection, and ``min(mu - 1, m) <= n``."""
    n = I.ring.nvars - 1
    c = codimension(I)
    mu = sum(k for _, k in min_generators(I)[0])
    checks = {"codim2": PASS if c == 2 else FAIL}
    checks["acm"] = PASS if is_acm(I) else FAIL
    checks["lci"] = lci_status(I)
    checks["inequality"] = PASS if min(mu - 1, m) <= n else FAIL
    return ExactnessReport(m, n, mu, c, checks)


# ---------------------------------------------------------------------------
# verification

@dataclass
class VerificationReport:
    d_squared_zero: bool
    augmentation_onto: bool
    hilbert_identity: bool
    betti_match: bool
    expected: BettiTable = None
    actual: BettiTable = None

    @property
    def ok(self) -> bool:
        return self.d_squared_zero and self.augmentation_onto and self.hilbert_identity and self.betti_match

    def to_json(self) -> dict:
        return {"d_squared_zero": self.d_squared_zero, "augmentation_onto": self.augmentation_onto,
                "hilbert_identity": self.hilbert_identity, "betti_match": self.betti_match, "ok": self.ok}


def verify_complex(C: ChainComplex, target: Ideal = None) -> VerificationReport:
    """Check ``C`` against the minimal resolution of ``R/target`` in four ways."""
    target = target if target is not None else C.augmentation
    if target is None:
        raise ValueError("complex has no augmentation target")
    dd = C.is_complex()
    gens = [f for f in C.maps[0].matrix[0]] if C.maps else []
    onto = equals(Ideal(target.ring, gens), target)
    hs = hilbert_series(target)
    hid = C.euler_numerator() == hs.numerator
    expected = minimal_resolution(target)[1]
    actual = C.betti()
    return VerificationReport(dd, onto, hid, expected == actual, expected, actual)
