"""Symbolic powers by two routes, power-equality verdicts with witnesses,
the all-powers classification for codimension-two ACM LCI ideals, and the
Betti-number bound checker.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod

from .errors import HypothesisError, InvariantViolation
from .groebner import normal_form
from .ideals import Ideal, codimension, contains, equals, intersect, min_generators, power, saturate
from .resolve import BettiTable, is_acm, is_saturated, lci_status

__all__ = [
    "symbolic_power_saturation", "symbolic_power_components", "symbolic_power",
    "powers_equal", "PowerVerdict", "classify_all_powers", "ClassificationReport",
    "romer_check", "RomerReport", "predicted_power_betti",
]


def _saturation_route_ok(I: Ideal) -> bool:
    return I.tags.get("lci") in (True, "asserted") and I.tags.get("unmixed") is True


def symbolic_power_saturation(I: Ideal, m: int) -> Ideal:
    """``sat(I^m)``: the symbolic power of an unmixed LCI ideal."""
    if not _saturation_route_ok(I):
        raise HypothesisError("saturation route needs an ideal tagged LCI and unmixed; "
                              "use the component route instead")
    return saturate(power(I, m))


def _components(config):
    comps = config.components if hasattr(config, "components") else config
    comps = list(comps)
    for P, _ in comps:
        if not P.tags.get("ci"):
            raise HypothesisError("component %r is not tagged as a complete intersection" % (P,))
    return comps


def symbolic_power_components(config, m: int) -> Ideal:
    """``⋂ P^(m e)`` over CI components ``P`` of multiplicity ``e``.

    Powers of complete intersections are unmixed, so each term is the
    primary component of the symbolic power.
    """
    if m < 1:
        raise ValueError("m must be positive")
    parts = [power(P, m * e) for P, e in _components(config)]
    return intersect(*parts)


def symbolic_power(I: Ideal, m: int, config=None) -> Ideal:
    """Component route when a configuration is known, saturation route otherwise."""
    if config is not None:
        return symbolic_power_components(config, m)
    return symbolic_power_saturation(I, m)


@dataclass
class PowerVerdict:
    m: int
    equal: bool
    routes: list
    witness: object = None
    symbolic: Ideal = None

    @property
    def witness_degree(self):
        return None if self.witness is None else self.witness.degree.total

    def to_json(self) -> dict:
        return {"m": self.m, "equal": self.equal, "routes": list(self.routes),
                "witness": None if self.witness is None else str(self.witness),
                "witness_degree": self.witness_degree}

    def format(self) -> str:
        if self.equal:
            return "EQUAL (m = %d, routes: %s)" % (self.m, ", ".join(self.routes))
        return "UNEQUAL (m = %d), witness degree %d: %s" % (self.m, self.witness_degree, self.witness)


def _witness(S: Ideal, P: Ideal):
    """Lowest-degree reduced basis element of ``S`` outside ``P`` (ties: smallest in the ring order)."""
    G = P.groebner_basis()
    key = S.ring.order.key
    cands = [g for g in S.gb if normal_form(g, G)]
    if not cands:
        return None
    return min(cands, key=lambda g: (g.degree.total, key(g.lm())))


def powers_equal(I: Ideal, m: int, config=None, routes=None) -> PowerVerdict:
    """Compare ``I^(m)`` (every applicable route, which must agree) with ``I^m``."""
    avail = []
    if config is not None:
        avail.append("components")
    if _saturation_route_ok(I):
        avail.append("saturation")
    if routes is not None:
        bad = [r for r in routes if r not in avail]
        if bad:
            raise HypothesisError("route(s) %s not applicable to this input" % bad)
        avail = list(routes)
    if not avail:
        raise HypothesisError("no symbolic power route applies (need CI components or LCI + unmixed tags)")
    results = {}
    for r in avail:
        if r == "components":
            results[r] = symbolic_power_components(config, m)
        else:
            results[r] = symbolic_power_saturation(I, m)
    first = results[avail[0]]
    for r in avail[1:]:
        if not equals(results[r], first):
            raise InvariantViolation("symbolic power routes %s and %s disagree at m = %d" % (avail[0], r, m))
    Pm = power(I, m)
    for g in Pm.gens:
        if not contains(first, g):
            raise InvariantViolation("I^%d is not contained in the computed symbolic power" % m)
    w = _witness(first, Pm)
    return PowerVerdict(m, w is None, avail, w, first)


# ---------------------------------------------------------------------------
# classification

@dataclass
class ClassificationReport:
    n: int
    codim: int
    acm: bool
    lci: str
    mu: int
    hypotheses: dict
    predictions: dict = field(default_factory=dict)   # m -> True/False/None
    verdicts: list = field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        return all(v in ("pass", "asserted") for v in self.hypotheses.values())

    @property
    def witness(self):
        for v in self.verdicts:
            if v.witness is not None:
                return v.witness
        return None

    def summary(self) -> str:
        if not self.hypotheses_hold:
            return "observation only"
        if self.mu <= self.n:
            return "all powers equal (mu = %d <= n = %d)" % (self.mu, self.n)
        return "equal for m < %d, unequal at m = %d (mu = %d > n)" % (self.n, self.n, self.mu)

    def to_json(self) -> dict:
        w = self.witness
        return {"hypotheses": dict(self.hypotheses), "n": self.n, "codim": self.codim, "mu": self.mu,
                "prediction": self.summary(),
                "verdicts": [dict(v.to_json(), predicted=self.predictions.get(v.m)) for v in self.verdicts],
                "witness": None if w is None else str(w)}

    def format(self) -> str:
        lines = ["n = %d, codim = %d, mu = %d, ACM = %s, LCI = %s" % (self.n, self.codim, self.mu,
                                                                     self.acm, self.lci),
                 "hypotheses: " + ", ".join("%s %s" % kv for kv in self.hypotheses.items()),
                 "prediction: " + self.summary()]
        for v in self.verdicts:
            p = self.predictions.get(v.m)
            tag = "" if p is None else (" [predicted %s]" % ("equal" if p else "unequal"))
            lines.append("  " + v.format() + tag)
        return "\n".join(lines)


def _prediction(mu, n, m):
    if mu <= n:
        return True
    if m < n:
        return True
    if m == n:
        return False
    return None


def classify_all_powers(I: Ideal, n: int = None, max_m: int = None, config=None) -> ClassificationReport:
    """Predict from codimension, ACM, LCI and ``mu``; then observe ``m = 1..max_m``."""
    if n is None:
        n = I.ring.nvars - 1
    if max_m is None:
        max_m = min(n, 3)
    if not is_saturated(I):
        raise HypothesisError("classification needs a saturated ideal")
    c = codimension(I)
    acm = is_acm(I)
    lci = lci_status(I)
    mu = sum(k for _, k in min_generators(I)[0])
    hyp = {"codim2": "pass" if c == 2 else "fail", "acm": "pass" if acm else "fail", "lci": lci}
    rep = ClassificationReport(n, c, acm, lci, mu, hyp)
    for m in range(1, max_m + 1):
        v = powers_equal(I, m, config)
        rep.verdicts.append(v)
        if rep.hypotheses_hold:
            p = _prediction(mu, n, m)
            rep.predictions[m] = p
            if p is not None and p != v.equal:
                raise InvariantViolation("observed %s but predicted %s at m = %d"
                                         % ("equal" if v.equal else "unequal", "equal" if p else "unequal", m))
    return rep


# ---------------------------------------------------------------------------
# Betti bound

def predicted_power_betti(d: int, m: int, i: int) -> int:
    """``C(d-1, i-1) C(d+m-i, d-1)``: rank of the ``i``-th module resolving ``R/I^m``."""
    if d < 2 or not 1 <= i <= m + 1:
        raise ValueError("need d >= 2 and 1 <= i <= m+1")
    return comb(d - 1, i - 1) * comb(d + m - i, d - 1)


@dataclass
class RomerReport:
    rows: list          # (i, beta_i, bound as Fraction, holds)

    @property
    def holds(self) -> bool:
        return all(r[3] for r in self.rows)

    def to_json(self) -> dict:
        return {"holds": self.holds,
                "rows": [{"i": i, "beta": b, "bound": str(bd), "margin": str(bd - b), "holds": ok}
                         for i, b, bd, ok in self.rows]}

    def format(self) -> str:
        lines = ["%3s %8s %14s" % ("i", "beta_i", "bound")]
        for i, b, bd, ok in self.rows:
            lines.append("%3d %8d %14s  %s" % (i, b, bd, "ok" if ok else "VIOLATED"))
        return "\n".join(lines)


def romer_check(B: BettiTable) -> RomerReport:
    """``beta_i <= prod_{j != i} M_j / ((i-1)! (p-i)!)`` for ``i = 1..p``, exactly."""
    if B.arity != 1:
        B = B.totalized()
    p = B.pdim
    totals = B.totals()
    M = B.maxima()
    if any(M[i] is None or M[i + 1] is None or M[i] >= M[i + 1] for i in range(1, p)):
        warnings.warn("maximal shifts are not strictly increasing; table may not be minimal")
    rows = []
    for i in range(1, p + 1):
        num = prod(M[j] for j in range(1, p + 1) if j != i)
        bound = Fraction(num, factorial(i - 1) * factorial(p - i))
        rows.append((i, totals[i], bound, totals[i] <= bound))
    return RomerReport(rows)
