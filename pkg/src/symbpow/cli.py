"""``symb``: command-line front end.

Definition files are line oriented; ``#`` starts a comment::

    ring R = QQ[x, y, z]
    ring S = QQ[x0, x1, x2, x3] degrees (1,0),(1,0),(0,1),(0,1)
    ideal I = x*(y^3 - z^3), y*(z^3 - x^3), z*(x^3 - y^3)
    tag I lci=true unmixed=true
    point: [1:0:0] mult 2
    p1p1: [1:0]x[1:2] mult 1
    line: x0, x1

``ideal`` records use the most recent ring (or ``ideal J in S = ...``).
``point``/``p1p1``/``line`` records build one configuration per file.

Exit status: 0 success, 1 mathematical refusal, 2 input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from fractions import Fraction

from . import ideals as ideal_ops
from .errors import HypothesisError, InvariantViolation, NotAGroebnerBasisError, ParseError, SymbPowError
from .groebner import normal_form
from .ideals import Ideal, hilbert_series
from .polyring import GF, QQ, GradedRing, MonomialOrder
from .repro import SLOW_TARGETS, TARGETS, run_target
from .resolve import (Presentation, _fmt_twist, format_betti, minimal_resolution, power_complex, exactness_hypotheses,
                      verify_complex)
from .schemes import (AlphaTuple, LineConfig, PointConfig, PointConfigP1P1, PointP1P1, aci_presentation,
                      alpha_tuple, classify_p1p1, ferrers_config, p1p1_ring, triple_point_twists)
from .symbolic import classify_all_powers, powers_equal, romer_check

EXIT_OK, EXIT_REFUSED, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3


# ---------------------------------------------------------------------------
# definition files

class Session:
    """Named rings, ideals and at most one configuration per loaded file."""

    def __init__(self):
        self.rings = {}
        self.ideals = {}
        self.config = None
        self._ring = None

    # records ---------------------------------------------------------------
    _RING = re.compile(r"ring\s+(\w+)\s*=\s*(QQ|GF\(\s*(\d+)\s*\))\s*\[([^\]]*)\]\s*(.*)$")
    _IDEAL = re.compile(r"ideal\s+(\w+)(?:\s+in\s+(\w+))?\s*=\s*(.*)$")
    _TAG = re.compile(r"tag\s+(\w+)\s+(.*)$")
    _MULT = re.compile(r"^(.*?)(?:\s+mult\s+(\d+))?\s*$")

    def load(self, path):
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError("cannot read %s: %s" % (path, exc.strerror))
        self.loads(text, path)
        return self

    def loads(self, text, source="<input>"):
        points, p1p1, lines = [], [], []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                if line.startswith("ring "):
                    self._ring_record(line)
                elif line.startswith("ideal "):
                    self._ideal_record(line)
                elif line.startswith("tag "):
                    self._tag_record(line)
                elif line.startswith("point:"):
                    points.append(self._point_record(line[6:]))
                elif line.startswith("p1p1:"):
                    p1p1.append(self._p1p1_record(line[5:]))
                elif line.startswith("line:"):
                    lines.append([s.strip() for s in line[5:].split(",")])
                else:
                    raise ParseError("unknown record")
            except (ParseError, ValueError) as exc:
                raise ParseError("%s:%d: %s" % (source, lineno, exc)) from None
        kinds = [k for k, v in (("point", points), ("p1p1", p1p1), ("line", lines)) if v]
        if len(kinds) > 1:
            raise ParseError("%s: mixes %s records" % (source, " and ".join(kinds)))
        if points:
            ring = self._need_ring()
            self.config = PointConfig(ring, [c for c, _ in points], [m for _, m in points])
        elif p1p1:
            ring = self._ring if self._ring is not None and self._ring.arity == 2 else p1p1_ring()
            self.config = PointConfigP1P1([PointP1P1.make(a, b, m, ring.field) for a, b, m in p1p1], ring)
        elif lines:
            ring = self._ring or GradedRing(["x0", "x1", "x2", "x3"])
            for L in lines:
                if len(L) != 2:
                    raise ParseError("%s: a line needs exactly two linear forms" % source)
            self.config = LineConfig(ring, [(ring(a), ring(b)) for a, b in lines])
        return self

    def _ring_record(self, line):
        m = self._RING.match(line)
        if not m:
            raise ParseError("malformed ring record")
        name, _, p, names, rest = m.groups()
        field = GF(int(p)) if p else QQ
        degrees = None
        rest = rest.strip()
        dm = re.search(r"degrees\s+((?:\(\s*\d+\s*(?:,\s*\d+\s*)?\)\s*,?\s*)+)", rest)
        if dm:
            degrees = [tuple(int(v) for v in grp.split(","))
                       for grp in re.findall(r"\(([^)]*)\)", dm.group(1))]
            rest = rest.replace(dm.group(0), "").strip()
        om = re.search(r"order\s+(grevlex|lex)", rest)
        if om:
            rest = rest.replace(om.group(0), "").strip()
        if rest:
            raise ParseError("unexpected text in ring record: %r" % rest)
        vars_ = [v.strip() for v in names.split(",") if v.strip()]
        ring = GradedRing(vars_, degrees, field)
        if om and om.group(1) == "lex":
            ring = ring.with_order(MonomialOrder.lex(ring.nvars))
        self.rings[name] = ring
        self._ring = ring

    def _need_ring(self, name=None):
        if name is not None:
            if name not in self.rings:
                raise ParseError("unknown ring %r" % name)
            return self.rings[name]
        if self._ring is None:
            raise ParseError("no ring declared")
        return self._ring

    def _ideal_record(self, line):
        m = self._IDEAL.match(line)
        if not m:
            raise ParseError("malformed ideal record")
        name, rname, body = m.groups()
        if name in self.ideals:
            raise ParseError("ideal %r defined twice" % name)
        ring = self._need_ring(rname)
        gens = [g.strip() for g in body.split(",") if g.strip()]
        self.ideals[name] = Ideal(ring, [ring.parse(g) for g in gens])

    def _tag_record(self, line):
        m = self._TAG.match(line)
        name, body = m.groups()
        if name not in self.ideals:
            raise ParseError("tag for unknown ideal %r" % name)
        tags = {}
        for item in body.split():
            if "=" not in item:
                raise ParseError("tags are key=value pairs")
            k, v = item.split("=", 1)
            v = {"true": True, "false": False}.get(v.lower(), v)
            tags[k] = v
        self.ideals[name] = self.ideals[name].with_tags(**tags)

    @staticmethod
    def _coords(text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ParseError("coordinates must look like [c0:c1:...]")
        try:
            return [Fraction(c.strip()) for c in text[1:-1].split(":")]
        except (ValueError, ZeroDivisionError):
            raise ParseError("bad coordinate in %s" % text) from None

    def _point_record(self, body):
        m = self._MULT.match(body.strip())
        return self._coords(m.group(1)), int(m.group(2) or 1)

    def _p1p1_record(self, body):
        m = self._MULT.match(body.strip())
        parts = m.group(1).split("x")
        if len(parts) != 2:
            raise ParseError("p1p1 points look like [a0:a1]x[b0:b1]")
        a, b = self._coords(parts[0]), self._coords(parts[1])
        if len(a) != 2 or len(b) != 2:
            raise ParseError("each P^1 coordinate needs two entries")
        return a, b, int(m.group(2) or 1)

    def ideal(self, name=None) -> Ideal:
        if name is not None:
            if name not in self.ideals:
                raise ParseError("no ideal named %r" % name)
            return self.ideals[name]
        if len(self.ideals) == 1:
            return next(iter(self.ideals.values()))
        if not self.ideals and self.config is not None:
            return self.config.ideal()
        raise ParseError("several ideals defined; pick one with PATH:NAME")


def _load_ideal(target):
    """``PATH`` or ``PATH:NAME`` -> (ideal, session)."""
    path, name = target, None
    if ":" in target and not target.endswith(":"):
        head, tail = target.rsplit(":", 1)
        if re.match(r"\w+\Z", tail) and not re.match(r"[A-Za-z]\Z", head):
            path, name = head, tail
    S = Session().load(path)
    return S.ideal(name), S


def _load_config(path):
    S = Session().load(path)
    if S.config is None:
        raise ParseError("%s defines no point/p1p1/line configuration" % path)
    return S.config, S


# ---------------------------------------------------------------------------
# output helpers

def _emit(args, text, data):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _polys(ps):
    return [str(p) for p in ps]


def _target_ideal(args):
    if getattr(args, "config", None):
        cfg, _ = _load_config(args.config)
        return cfg.ideal(), cfg
    if not getattr(args, "ideal", None):
        raise ParseError("give --ideal PATH[:NAME] or --config PATH")
    I, S = _load_ideal(args.ideal)
    return I, S.config


def _maybe_power(I, args):
    p = getattr(args, "power", None)
    return I ** p if p and p > 1 else I


# ---------------------------------------------------------------------------
# subcommands

def cmd_gb(args):
    I, _ = _target_ideal(args)
    order = None
    if args.order == "lex":
        order = MonomialOrder.lex(I.ring.nvars)
    G = I.groebner_basis(order)
    els = _polys(G.elements)
    _emit(args, "\n".join(els), {"gb": els, "order": args.order})


def cmd_nf(args):
    I, _ = _target_ideal(args)
    f = I.ring.parse(args.poly)
    r = normal_form(f, I.groebner_basis())
    _emit(args, str(r), {"nf": str(r), "member": not r})


def cmd_ideal(args):
    I, S = _target_ideal(args)
    op = args.op

    def other():
        if not args.other:
            raise ParseError("operation %r needs --other PATH[:NAME]" % op)
        J, _ = _load_ideal(args.other)
        return J

    if op in ("sum", "product", "intersect", "colon"):
        fn = {"sum": ideal_ops.ideal_sum, "product": ideal_ops.product,
              "intersect": ideal_ops.intersect, "colon": ideal_ops.colon}[op]
        K = fn(I, other())
        gens = _polys(K.gb)
        _emit(args, "\n".join(gens), {"op": op, "gb": gens})
    elif op == "power":
        K = ideal_ops.power(I, args.m)
        gens = _polys(K.gens)
        _emit(args, "\n".join(gens), {"op": op, "gens": gens})
    elif op == "saturate":
        K = ideal_ops.saturate(I, other() if args.other else None)
        gens = _polys(K.gb)
        _emit(args, "\n".join(gens), {"op": op, "gb": gens})
    elif op == "equals":
        v = ideal_ops.equals(I, other())
        _emit(args, str(v).lower(), {"op": op, "equal": v})
    elif op == "contains":
        if not args.poly:
            raise ParseError("contains needs --poly")
        v = ideal_ops.contains(I, I.ring.parse(args.poly))
        _emit(args, str(v).lower(), {"op": op, "contains": v})
    elif op == "mingens":
        counts, subset = ideal_ops.min_generators(I)
        text = "\n".join(["degree %s: %d" % (tuple(d) if len(d) > 1 else d[0], c) for d, c in counts]
                         + _polys(subset))
        _emit(args, text, {"op": op, "counts": [[list(d), c] for d, c in counts], "gens": _polys(subset)})
    elif op in ("dim", "codim"):
        v = ideal_ops.dimension(I) if op == "dim" else ideal_ops.codimension(I)
        _emit(args, str(v), {"op": op, "value": v})
    elif op == "initial-degree":
        v = ideal_ops.initial_degree(I)
        _emit(args, str(v), {"op": op, "value": v})
    else:
        raise ParseError("unknown ideal operation %r" % op)


def cmd_hilbert(args):
    I, _ = _target_ideal(args)
    I = _maybe_power(I, args)
    H = hilbert_series(I)
    data = {"numerator": [[list(k), v] for k, v in sorted(H.numerator.items())],
            "denominator": [list(d) for d in I.ring.degrees], "values": H.values(args.bound)}
    _emit(args, H.format(args.bound), data)


def cmd_resolve(args):
    I, _ = _target_ideal(args)
    I = _maybe_power(I, args)
    C, B = minimal_resolution(I)
    if args.json:
        _emit(args, "", dict(B.to_json(), ranks=C.ranks()))
        return
    lines = ["ranks: %s" % C.ranks()]
    if args.maps:
        for i, d in enumerate(C.maps, 1):
            lines.append("d_%d:" % i)
            for row in d.matrix:
                lines.append("  [" + ", ".join(str(x) for x in row) + "]")
    lines.append(format_betti(B))
    print("\n".join(lines))


def cmd_betti(args):
    I, _ = _target_ideal(args)
    I = _maybe_power(I, args)
    B = minimal_resolution(I)[1]
    if args.totalize:
        B = B.totalized()
    _emit(args, format_betti(B), B.to_json())


def cmd_power_complex(args):
    I, _ = _target_ideal(args)
    rep = exactness_hypotheses(I, args.m)
    if not rep.passed and not args.force:
        raise HypothesisError("exactness hypotheses fail (%s); use --force to build anyway"
                              % ", ".join(rep.failures()))
    P = Presentation.of_ideal(I)
    C = power_complex(P, args.m)
    vr = verify_complex(C, I ** args.m)
    text = "\n".join([rep.format(), "ranks: %s" % C.ranks(), format_betti(C.betti()),
                      "verification: %s" % ", ".join("%s=%s" % kv for kv in vr.to_json().items())])
    _emit(args, text, {"hypotheses": rep.to_json(), "ranks": C.ranks(), "betti": C.betti().to_json(),
                       "verification": vr.to_json()})
    if not vr.ok and rep.passed:
        raise InvariantViolation("hypotheses hold but the strand complex is not the minimal resolution")


def cmd_classify(args):
    I, cfg = _target_ideal(args)
    rep = classify_all_powers(I, n=args.n, max_m=args.max_m, config=cfg)
    extra = {}
    lines = []
    if isinstance(cfg, PointConfigP1P1):
        cl = classify_p1p1(cfg)
        extra["p1p1"] = cl.to_json()
        lines.append("alpha = %s: %s" % (tuple(cl.alpha), cl.kind))
    lines.append(rep.format())
    _emit(args, "\n".join(lines), dict(rep.to_json(), **extra))


def cmd_powers_equal(args):
    I, cfg = _target_ideal(args)
    routes = args.route or None
    v = powers_equal(I, args.m, cfg, routes)
    _emit(args, v.format(), v.to_json())


def cmd_romer(args):
    I, _ = _target_ideal(args)
    I = _maybe_power(I, args)
    B = minimal_resolution(I)[1]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        r = romer_check(B)
    _emit(args, r.format(), r.to_json())


def cmd_p1p1(args):
    if args.alpha:
        alpha = AlphaTuple(int(v) for v in args.alpha.split(","))
        cfg = ferrers_config(alpha)
    elif args.config:
        cfg, _ = _load_config(args.config)
        if not isinstance(cfg, PointConfigP1P1):
            raise ParseError("%s is not a p1p1 configuration" % args.config)
        alpha = alpha_tuple(cfg)
    else:
        raise ParseError("give --alpha a,b,... or --config PATH")
    cl = classify_p1p1(cfg)
    data = cl.to_json()
    lines = ["alpha = %s" % (tuple(alpha),), "kind: %s" % cl.kind, "mu: %s" % cl.mu, cl.prediction]
    if cl.kind == "ACI":
        a, b, c, d = alpha.aci_parameters()
        P = aci_presentation(alpha)
        data["presentation"] = {"F": [list(t) for t in P.F.twists], "G": [list(t) for t in P.G.twists],
                                "matrix": [[str(x) for x in row] for row in P.phi.matrix]}
        lines.append("G twists: %s" % [tuple(t) for t in P.G.twists])
        lines.append("F twists: %s" % [tuple(t) for t in P.F.twists])
        if args.triple:
            C = power_complex(P, 3)
            closed = triple_point_twists(a, b, c, d)
            match = [sorted(tuple(t) for t in M.twists) == sorted(w) for M, w in zip(C.modules[1:], closed)]
            data["triple_points"] = {"F%d" % k: [list(t) for t in w] for k, w in enumerate(closed)}
            data["triple_points_match"] = all(match)
            for k, w in enumerate(closed):
                lines.append("F_%d: %s" % (k, " + ".join(_fmt_twist(t) for t in w)))
            lines.append("matches strand complex: %s" % all(match))
    _emit(args, "\n".join(lines), data)


def cmd_repro(args):
    if args.list or not args.name:
        names = [n + (" (slow)" if n in SLOW_TARGETS else "") for n in TARGETS]
        print("\n".join(names))
        return EXIT_OK
    if args.name not in TARGETS:
        raise ParseError("unknown repro target %r (see --list)" % args.name)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = run_target(args.name, seed=args.seed, max_m=args.max_m)
    if args.json:
        print(json.dumps({"name": res.name, "passed": res.passed, "checks": res.lines,
                          "failures": res.failures}, sort_keys=True))
    else:
        print(res.format())
    return EXIT_OK if res.passed else EXIT_INVARIANT


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="symb", description="Symbolic and ordinary powers of ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, target=True, power=False):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if target:
            sp.add_argument("--ideal", help="definition file, optionally PATH:NAME")
            sp.add_argument("--config", help="point/p1p1/line configuration file")
        if power:
            sp.add_argument("--power", type=int, default=1, help="use I^k instead of I")
        return sp

    sp = add("gb", cmd_gb, "reduced Groebner basis")
    sp.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    sp = add("nf", cmd_nf, "normal form of a polynomial")
    sp.add_argument("--poly", required=True)
    sp = add("ideal", cmd_ideal, "ideal operations")
    sp.add_argument("op", choices=["sum", "product", "power", "intersect", "colon", "saturate", "equals",
                                   "contains", "mingens", "dim", "codim", "initial-degree"])
    sp.add_argument("--other", help="second ideal, PATH[:NAME]")
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--poly")
    sp = add("hilbert", cmd_hilbert, "Hilbert series and function", power=True)
    sp.add_argument("--bound", type=int, default=8)
    sp = add("resolve", cmd_resolve, "minimal free resolution", power=True)
    sp.add_argument("--maps", action="store_true", help="print the differentials")
    sp = add("betti", cmd_betti, "Betti diagram", power=True)
    sp.add_argument("--totalize", action="store_true", help="collapse a bigrading to total degree")
    sp = add("power-complex", cmd_power_complex, "strand complex of I^m and its verification")
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--force", action="store_true", help="build even if the hypotheses fail")
    sp = add("classify", cmd_classify, "predict and observe I^(m) = I^m")
    sp.add_argument("--n", type=int, default=None, help="ambient projective dimension")
    sp.add_argument("--max-m", type=int, default=None)
    sp = add("powers-equal", cmd_powers_equal, "compare I^(m) with I^m")
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--route", action="append", choices=["components", "saturation"])
    add("romer", cmd_romer, "check the Betti-number bound", power=True)
    sp = add("p1p1", cmd_p1p1, "P1xP1 configurations", target=False)
    sp.add_argument("--alpha", help="comma-separated fibre sizes, e.g. 3,2,1")
    sp.add_argument("--config")
    sp.add_argument("--triple", action="store_true", help="also list triple-point twists")
    sp = add("repro", cmd_repro, "re-derive a worked example", target=False)
    sp.add_argument("name", nargs="?")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--seed", type=int, default=0, help="seed for random choices (default 0)")
    sp.add_argument("--max-m", type=int, default=2, help="highest power checked by example-3.4-p4")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        status = args.fn(args)
        return EXIT_OK if status is None else status
    except HypothesisError as exc:
        print("refused: %s" % exc, file=sys.stderr)
        return EXIT_REFUSED
    except (InvariantViolation, NotAGroebnerBasisError) as exc:
        print("invariant violation: %s" % exc, file=sys.stderr)
        return EXIT_INVARIANT
    except (SymbPowError, ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
