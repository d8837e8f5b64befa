"""Text grammar for rings, polynomials and ideals, plus the structured
report format emitted by every CLI invocation.

Ring grammar:     ring char=<n> vars=<id,...> order=<lex|grevlex> [mod <poly;...>]
Polynomial text:  integer (or a/b) coefficients, + - * ^ and parentheses,
                  explicit * and ^; canonical rendering round-trips.
Report documents: line-oriented "key: value" records with a fixed key
                  order, so equal inputs give byte-identical output
                  modulo the timing lines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .ideals import Ideal
from .polys import GREVLEX, LEX, Poly, Ring, TermOrder, is_prime


class ParseError(ValueError):
    """Syntax or validation error, with line/column when available."""

    def __init__(self, message, line=1, col=None):
        self.line = line
        self.col = col
        where = " (line %d%s)" % (line, ", col %d" % col if col is not None else "")
        super().__init__(message + where)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()/]))")


class _Tokens:
    def __init__(self, text, line=1):
        self.text = text
        self.line = line
        self.pos = 0
        self.items = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                col = len(text) - len(stripped) + 1
                raise ParseError("unexpected character %r" % stripped[0], line, col)
            if m.group(1) is not None:
                self.items.append(("int", int(m.group(1)), m.start(1) + 1))
            elif m.group(2) is not None:
                self.items.append(("name", m.group(2), m.start(2) + 1))
            else:
                self.items.append(("op", m.group(3), m.start(3) + 1))
            pos = m.end()

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else ("end", None, len(self.text) + 1)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.line, tok[2])


def parse_poly(text, ring, line=1):
    """Parse polynomial text into a canonical element of `ring`."""
    toks = _Tokens(text, line)
    poly = _parse_expr(toks, ring)
    kind, val, col = toks.peek()
    if kind != "end":
        toks.error("trailing input %r" % (val,))
    return poly


def _parse_expr(toks, ring):
    sign = 1
    kind, val, _ = toks.peek()
    if kind == "op" and val in "+-":
        toks.next()
        sign = -1 if val == "-" else 1
    acc = _parse_term(toks, ring)
    if sign < 0:
        acc = -acc
    while True:
        kind, val, _ = toks.peek()
        if kind == "op" and val in "+-":
            toks.next()
            rhs = _parse_term(toks, ring)
            acc = acc - rhs if val == "-" else acc + rhs
        else:
            return acc


def _parse_term(toks, ring):
    acc = _parse_factor(toks, ring)
    while True:
        kind, val, _ = toks.peek()
        if kind == "op" and val == "*":
            toks.next()
            acc = acc * _parse_factor(toks, ring)
        else:
            return acc


def _parse_factor(toks, ring):
    base = _parse_atom(toks, ring)
    kind, val, _ = toks.peek()
    if kind == "op" and val == "^":
        toks.next()
        ekind, eval_, ecol = toks.next()
        if ekind != "int":
            raise ParseError("malformed exponent", toks.line, ecol)
        return base ** eval_
    return base


def _parse_atom(toks, ring):
    kind, val, col = toks.next()
    if kind == "int":
        nkind, nval, _ = toks.peek()
        if nkind == "op" and nval == "/":
            toks.next()
            dkind, dval, dcol = toks.next()
            if dkind != "int" or dval == 0:
                raise ParseError("malformed rational coefficient", toks.line, dcol)
            if ring.char:
                return ring.const(val * pow(dval % ring.char, -1, ring.char))
            return ring.const(Fraction(val, dval))
        return ring.const(val)
    if kind == "name":
        if val not in ring.names:
            raise ParseError("unknown variable %r" % val, toks.line, col)
        return ring.gen(ring.var_index(val))
    if kind == "op" and val == "(":
        inner = _parse_expr(toks, ring)
        ckind, cval, ccol = toks.next()
        if not (ckind == "op" and cval == ")"):
            raise ParseError("expected ')'", toks.line, ccol)
        return inner
    if kind == "op" and val == "-":
        return -_parse_factor(toks, ring)
    raise ParseError("expected a coefficient, variable or '('", toks.line, col)


def poly_text(p):
    """Canonical rendering; parse_poly(poly_text(p), p.ring) == p."""
    return str(p)


_RING_RE = re.compile(
    r"^\s*ring\s+char=(\d+)\s+vars=([A-Za-z_0-9,]+)\s+order=(\w+)"
    r"(?:\s+mod\s+(.*))?\s*$")


def parse_ring(text, line=1, assume_equidimensional=False):
    """Parse the ring grammar into a Ring value."""
    m = _RING_RE.match(text)
    if m is None:
        raise ParseError("ring line does not match the grammar", line, 1)
    char = int(m.group(1))
    if char != 0 and not is_prime(char):
        raise ParseError("characteristic %d is not prime" % char, line,
                         text.index("char=") + 6)
    names = tuple(v for v in m.group(2).split(",") if v)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable", line, text.index("vars=") + 6)
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
            raise ParseError("bad variable name %r" % v, line)
    order_name = m.group(3)
    if order_name == LEX:
        order = TermOrder(LEX)
    elif order_name == GREVLEX:
        order = TermOrder(GREVLEX)
    else:
        raise ParseError("unknown order %r" % order_name, line)
    base = Ring(char, names, order)
    quotient = []
    if m.group(4):
        for chunk in m.group(4).split(";"):
            chunk = chunk.strip()
            if chunk:
                quotient.append(parse_poly(chunk, base, line))
    if quotient:
        return Ring(char, names, order, quotient=quotient,
                    assume_equidimensional=assume_equidimensional)
    base.assume_equidimensional = assume_equidimensional
    return base


def ring_text(ring):
    s = "ring char=%d vars=%s order=%s" % (ring.char, ",".join(ring.names),
                                           ring.order.kind)
    if ring.quotient:
        s += " mod %s" % ";".join(str(q) for q in ring.quotient)
    return s


def parse_ideal(text, ring, line=1):
    """Semicolon-separated polynomial list -> Ideal."""
    gens = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            gens.append(parse_poly(chunk, ring, line))
    return Ideal(ring, gens)


def ideal_text(I):
    return ";".join(str(g) for g in I.generators) if I.generators else "0"


# ---------------------------------------------------------------------------
# report documents
# ---------------------------------------------------------------------------

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"

_HEADER = "bskoda-report v1"


@dataclass
class Verdict:
    name: str
    status: str
    checked: int = 0
    skipped: int = 0
    detail: str = ""


@dataclass
class Witness:
    verdict: str
    element: str
    lhs: str
    rhs: str


@dataclass
class ReportDoc:
    """One self-describing document per CLI invocation."""
    command: str = ""
    ring: str = ""
    seed: int | None = None
    verdicts: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    results: list = field(default_factory=list)   # (name, value) pairs
    timings: list = field(default_factory=list)   # (name, seconds) pairs

    def add_verdict(self, name, status, checked=0, skipped=0, detail=""):
        self.verdicts.append(Verdict(name, status, checked, skipped, detail))

    def add_witness(self, verdict, element, lhs, rhs):
        self.witnesses.append(Witness(verdict, element, lhs, rhs))

    def add_result(self, name, value):
        self.results.append((name, str(value)))

    def add_timing(self, name, seconds):
        self.timings.append((name, float(seconds)))

    @property
    def failed(self):
        return any(v.status == FAIL for v in self.verdicts)


def emit_report(doc, include_timings=True):
    """Deterministic serialization; parse_report(emit_report(r)) == r."""
    for v in doc.verdicts:
        if v.status == FAIL and not any(w.verdict == v.name for w in doc.witnesses):
            raise ValueError("FAIL verdict %r has no witness" % v.name)
    lines = [_HEADER]
    lines.append("command: %s" % doc.command)
    lines.append("ring: %s" % (doc.ring or "-"))
    if doc.seed is not None:
        lines.append("seed: %d" % doc.seed)
    for name, value in doc.results:
        lines.append("result: name=%s value=%s" % (name, value))
    for v in doc.verdicts:
        line = "verdict: name=%s status=%s checked=%d skipped=%d" % (
            v.name, v.status, v.checked, v.skipped)
        if v.detail:
            line += " detail=%s" % v.detail
        lines.append(line)
    for w in doc.witnesses:
        lines.append("witness: verdict=%s element=%s lhs=%s rhs=%s"
                     % (w.verdict, w.element, w.lhs, w.rhs))
    if include_timings:
        for name, seconds in doc.timings:
            lines.append("timing: name=%s seconds=%.6f" % (name, seconds))
    lines.append("end")
    return "\n".join(lines) + "\n"


def _split_fields(rest, keys, line_no):
    out = {}
    parts = rest.split(" ")
    current_key = None
    for part in parts:
        if "=" in part:
            key, _, value = part.partition("=")
            if key in keys:
                out[key] = value
                current_key = key
                continue
        if current_key is None:
            raise ParseError("malformed report field %r" % part, line_no)
        out[current_key] += " " + part
    return out


def parse_report(text):
    """Parse an emitted report document back into a ReportDoc."""
    lines = text.splitlines()
    if not lines or lines[0] != _HEADER:
        raise ParseError("missing report header", 1)
    doc = ReportDoc()
    for idx, line in enumerate(lines[1:], start=2):
        if line == "end":
            break
        key, sep, rest = line.partition(": ")
        if not sep and line.rstrip() != "ring:" and not line.startswith("command:"):
            raise ParseError("malformed report line", idx)
        if key == "command":
            doc.command = rest
        elif key == "ring":
            doc.ring = "" if rest == "-" else rest
        elif key == "seed":
            doc.seed = int(rest)
        elif key == "result":
            f = _split_fields(rest, {"name", "value"}, idx)
            doc.results.append((f.get("name", ""), f.get("value", "")))
        elif key == "verdict":
            f = _split_fields(rest, {"name", "status", "checked", "skipped", "detail"}, idx)
            doc.verdicts.append(Verdict(f["name"], f["status"],
                                        int(f.get("checked", 0)),
                                        int(f.get("skipped", 0)),
                                        f.get("detail", "")))
        elif key == "witness":
            f = _split_fields(rest, {"verdict", "element", "lhs", "rhs"}, idx)
            doc.witnesses.append(Witness(f["verdict"], f["element"],
                                         f["lhs"], f["rhs"]))
        elif key == "timing":
            f = _split_fields(rest, {"name", "seconds"}, idx)
            doc.timings.append((f["name"], float(f["seconds"])))
        else:
            raise ParseError("unknown report key %r" % key, idx)
    else:
        raise ParseError("report has no end marker", len(lines))
    return doc


# ---------------------------------------------------------------------------
# fixture files
# ---------------------------------------------------------------------------

KNOWN_FLAGS = {"regular", "f_rational_literature", "gorenstein", "r_over_i_cm",
               "r_over_i_equidimensional", "domain"}


@dataclass
class Fixture:
    """A named ring + ideal with assumed flags (echoed, never computed)."""
    name: str
    ring: Ring
    ideal: Ideal
    reduction: Ideal | None = None
    flags: frozenset = frozenset()
    note: str = ""
    tc_element: Poly | None = None
    suite_checks: tuple = ()


def parse_fixture(text, name="fixture"):
    """Parse one fixture file (see fixtures/ for the line grammar)."""
    ring = None
    ideal = None
    reduction = None
    flags = set()
    note = ""
    tc_element = None
    checks = []
    fixture_name = name
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "fixture":
            fixture_name = rest or name
        elif key == "ring":
            ring = parse_ring(line, line_no)
        elif key == "ideal":
            if ring is None:
                raise ParseError("ideal before ring", line_no)
            ideal = parse_ideal(rest, ring, line_no)
        elif key == "reduction":
            if ring is None:
                raise ParseError("reduction before ring", line_no)
            reduction = parse_ideal(rest, ring, line_no)
        elif key == "flags":
            for f in rest.replace(",", " ").split():
                if f not in KNOWN_FLAGS:
                    raise ParseError("unknown flag %r" % f, line_no)
                flags.add(f)
        elif key == "note":
            note = rest
        elif key == "tc_element":
            if ring is None:
                raise ParseError("tc_element before ring", line_no)
            tc_element = parse_poly(rest, ring, line_no)
        elif key == "suite":
            checks.extend(rest.split())
        else:
            raise ParseError("unknown fixture key %r" % key, line_no)
    if ring is None or ideal is None:
        raise ParseError("fixture needs at least a ring and an ideal", 1)
    return Fixture(name=fixture_name, ring=ring, ideal=ideal, reduction=reduction,
                   flags=frozenset(flags), note=note, tc_element=tc_element,
                   suite_checks=tuple(checks))
