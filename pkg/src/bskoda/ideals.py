"""Ideal calculus: sums, products, powers, Frobenius powers, colon,
intersection, elimination, saturation and equality.

Ideals carry their reduced Groebner basis, computed eagerly so values are
immutable and safely shareable.  In a quotient ring S/Q every operation
is performed in S on the generators with the defining relations adjoined.
Monomial ideals in a plain polynomial ring take an exponent-arithmetic
fast path; it computes the same reduced bases the generic route would.
"""

from __future__ import annotations

from .groebner import (BudgetExceededError, GroebnerBasis, buchberger,
                        exact_div)
from .polys import BLOCK, Poly, Ring, RingMismatchError, TermOrder, frobenius_power


def quotient_gb(ring):
    """Reduced basis of the defining relations (cached on the ring)."""
    if not ring.quotient:
        return GroebnerBasis(ring, ())
    if ring._qgb is None:
        polys = [ring.poly(q.terms) for q in ring.quotient]
        gb = buchberger(polys, ring)
        ring._qgb = gb
    return ring._qgb


def _minimalize_exps(exps_list):
    """Minimal elements of an exponent set under componentwise <=."""
    exps_list = sorted(set(exps_list), key=lambda e: (sum(e), e))
    kept = []
    for e in exps_list:
        if not any(all(a <= b for a, b in zip(k, e)) for k in kept):
            kept.append(e)
    return kept


class Ideal:
    """Generator list plus cached reduced Groebner basis."""

    __slots__ = ("ring", "generators", "_gb", "_newton")

    def __init__(self, ring, gens, budget_steps=None):
        gens = list(gens)
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
        if ring.quotient:
            qgb = quotient_gb(ring)
            gens = [qgb.normal_form(g) for g in gens]
        gens = tuple(g for g in gens if not g.is_zero)
        self.ring = ring
        self.generators = gens
        self._newton = None
        if self.is_monomial:
            exps = _minimalize_exps([g.lead_exps() for g in gens])
            keyf = ring.order.key
            exps.sort(key=keyf, reverse=True)
            self._gb = GroebnerBasis(ring, tuple(ring.monomial(e) for e in exps))
        else:
            self._gb = buchberger(list(gens) + [ring.poly(q.terms) for q in ring.quotient],
                                  ring, budget_steps)

    @property
    def is_monomial(self):
        return not self.ring.quotient and all(g.is_term for g in self.generators)

    def groebner(self):
        return self._gb

    def min_exps(self):
        if not self.is_monomial:
            raise ValueError("not a monomial ideal")
        return [g.lead_exps() for g in self._gb.generators]

    @property
    def is_zero(self):
        # generators are reduced modulo the relations at construction, so
        # an empty list means the zero ideal even in a quotient ring
        return not self.generators

    def is_proper(self):
        return not self._gb.is_unit

    def contains(self, f, budget_steps=None):
        if f.ring != self.ring:
            raise RingMismatchError("membership test across different rings")
        if self.is_monomial:
            mins = self.min_exps()
            return all(any(all(a <= b for a, b in zip(m, e)) for m in mins)
                       for e, _ in f.terms)
        return self._gb.contains(f, budget_steps)

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ring == other.ring
                and self._gb.generators == other._gb.generators)

    def __hash__(self):
        return hash((self.ring, self._gb.generators))

    def __repr__(self):
        return "Ideal(%s)" % "; ".join(str(g) for g in self.generators)


def unit_ideal(ring):
    return Ideal(ring, [ring.one()])


def zero_ideal(ring):
    return Ideal(ring, [])


def ideal_equal(I, J):
    """True iff the reduced Groebner bases coincide."""
    _same_ring(I, J)
    return I._gb.generators == J._gb.generators


def _same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatchError("ideals from different rings")


def ideal_sum(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I, J):
    _same_ring(I, J)
    if I.is_monomial and J.is_monomial:
        exps = [tuple(a + b for a, b in zip(e1, e2))
                for e1 in I.min_exps() for e2 in J.min_exps()]
        ring = I.ring
        return Ideal(ring, [ring.monomial(e) for e in _minimalize_exps(exps)])
    gens = [a * b for a in I.generators for b in J.generators]
    return Ideal(I.ring, gens)


def ideal_combine(op, I, J):
    if op == "sum":
        return ideal_sum(I, J)
    if op == "product":
        return ideal_product(I, J)
    raise ValueError("unknown ideal combination %r" % op)


def ideal_power(I, n):
    """I^n, generator products deduplicated through the reduced basis."""
    n = int(n)
    if n < 0:
        raise ValueError("negative ideal power")
    if n == 0:
        return unit_ideal(I.ring)
    if n == 1:
        return I
    result = I
    for _ in range(n - 1):
        result = ideal_product(result, I)
        # cap generator blowup: re-generate from the reduced basis
        if not result.is_monomial:
            gens = [g for g in result._gb.generators]
            result = Ideal(result.ring, gens)
    return result


def bracket_power(I, q):
    """Frobenius power I^[q]: generated by g^q over the listed generators."""
    p = I.ring.char
    if p == 0:
        raise ValueError("bracket powers need positive characteristic")
    m = int(q)
    while m > 1 and m % p == 0:
        m //= p
    if m != 1 or q < 1:
        raise ValueError("%s is not a power of the characteristic %d" % (q, p))
    return Ideal(I.ring, [frobenius_power(g, q) for g in I.generators])


def _fresh_name(taken, base):
    name = base
    while name in taken:
        name = "_" + name
    return name


def _extend_ring(ring, extra, order):
    """Polynomial ring on ring.names + extra with the given order (no quotient)."""
    return Ring(ring.char, tuple(ring.names) + tuple(extra), order)


def _lift(poly, ext):
    pad = ext.arity - len(poly.ring.names)
    return ext.poly([(e + (0,) * pad, c) for e, c in poly.terms])


def _project(poly, target, keep):
    """Map a polynomial down to `target`, keeping the coordinates in `keep`."""
    terms = []
    for e, c in poly.terms:
        terms.append((tuple(e[i] for i in keep), c))
    return target.poly(terms)


def _ambient_gens(I):
    """Generators + defining relations, lifted to the ambient polynomial ring."""
    S = I.ring.ambient()
    gens = [S.poly(g.terms) for g in I.generators]
    gens += [S.poly(q.terms) for q in I.ring.quotient]
    return S, gens


def _wrap(ring, S_gens):
    """Re-interpret ambient generators inside `ring` (reducing mod relations)."""
    gens = [ring.poly(g.terms) for g in S_gens]
    return Ideal(ring, gens)


def intersect(I, J):
    """I intersect J, by eliminating t from t*I + (1-t)*J."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_monomial and J.is_monomial:
        exps = [tuple(max(a, b) for a, b in zip(e1, e2))
                for e1 in I.min_exps() for e2 in J.min_exps()]
        return Ideal(ring, [ring.monomial(e) for e in _minimalize_exps(exps)])
    S, gens_i = _ambient_gens(I)
    _, gens_j = _ambient_gens(J)
    tname = _fresh_name(S.names, "t")
    tidx = S.arity
    E = _extend_ring(S, [tname], TermOrder(BLOCK, [tidx]))
    t = E.gen(tidx)
    one = E.one()
    ext_gens = [t * _lift(g, E) for g in gens_i]
    ext_gens += [(one - t) * _lift(g, E) for g in gens_j]
    gb = buchberger(ext_gens, E)
    keep = tuple(range(S.arity))
    down = [_project(g, S, keep) for g in gb.generators if g.lead_exps()[tidx] == 0
            and all(e[tidx] == 0 for e, _ in g.terms)]
    return _wrap(ring, down)


def eliminate(I, names):
    """I intersected with the subring omitting `names` (same ambient ring)."""
    ring = I.ring
    idxs = sorted(ring.var_index(n) for n in names)
    if not idxs:
        return I
    S, gens = _ambient_gens(I)
    E = S.with_order(TermOrder(BLOCK, idxs))
    egens = [E.poly(g.terms) for g in gens]
    gb = buchberger(egens, E)
    kept = [g for g in gb.generators
            if all(all(e[i] == 0 for i in idxs) for e, _ in g.terms)]
    back = [S.poly(g.terms) for g in kept]
    return _wrap(ring, back)


def _colon_principal(A, f):
    """A : (f) in a plain polynomial ring, via (A intersect (f)) / f."""
    S = A.ring
    N = intersect(A, Ideal(S, [f]))
    gens = [exact_div(g, f) for g in N.generators]
    return Ideal(S, gens)


def colon(I, J):
    """I : J = {x : xJ inside I}; J = (0) returns (1) (degenerate input)."""
    _same_ring(I, J)
    ring = I.ring
    if not J.generators:
        return unit_ideal(ring)
    if I.is_monomial and J.is_monomial:
        parts = None
        for je in J.min_exps():
            exps = [tuple(max(a - b, 0) for a, b in zip(e, je)) for e in I.min_exps()]
            part = Ideal(ring, [ring.monomial(e) for e in _minimalize_exps(exps)])
            parts = part if parts is None else intersect(parts, part)
        return parts
    S, gens_i = _ambient_gens(I)
    A = Ideal(S, gens_i)
    result = None
    for f in J.generators:
        fS = S.poly(f.terms)
        if fS.is_zero:
            continue
        part = _colon_principal(A, fS)
        result = part if result is None else intersect(result, part)
    if result is None:
        return unit_ideal(ring)
    return _wrap(ring, result.generators)


def saturation(I, J, max_steps=32):
    """I : J^infinity, by iterating colon until it stabilizes."""
    current = I
    for _ in range(max_steps):
        nxt = colon(current, J)
        if ideal_equal(nxt, current):
            return current
        current = nxt
    raise BudgetExceededError("saturation did not stabilize in %d steps" % max_steps)
