"""General integral-closure membership (determinant-trick stabilization),
tight-closure membership traces over Frobenius powers, and test-element
candidates.

The stabilization certificate is sound in any Noetherian ring: when
(I + (x))^(n+1) equals I * (I + (x))^n the element x is integral over I.
An exhausted bound is *not* a non-membership certificate, and no verdict
about tight-closure membership is ever asserted here; traces just record
which Frobenius rows hold for a given multiplier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import (Ideal, bracket_power, ideal_equal, ideal_power,
                     ideal_product, ideal_sum, quotient_gb)
from .invariants import height
from .polys import derivative, frobenius_power


@dataclass(frozen=True)
class IclVerdict:
    """member(n): the equality (I+(x))^(n+1) = I (I+(x))^n was verified;
    unknown: the bound n_max was exhausted without stabilizing."""
    member: bool
    witness_n: int | None
    n_max: int

    def __bool__(self):
        return self.member


def icl_member_general(x, I, n_max=8):
    """Stabilization test for x integral over I.

    Scans n = 1..n_max for (I+(x))^(n+1) = I (I+(x))^n and returns the
    least stabilizing n; sound but incomplete (unknown proves nothing).
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    K = ideal_sum(I, Ideal(I.ring, [x]))
    Kn = K
    for n in range(1, n_max + 1):
        Kn1 = ideal_product(Kn, K)
        if ideal_equal(Kn1, ideal_product(I, Kn)):
            return IclVerdict(True, n, n_max)
        Kn = Kn1
    return IclVerdict(False, None, n_max)


@dataclass(frozen=True)
class TcTrace:
    """Rows (e, q = p^e, c x^q in I^[q]) of a tight-closure trace."""
    element: object
    ideal: object
    multiplier: object
    rows: tuple

    def all_member(self):
        return all(m for _, _, m in self.rows)


def tc_trace(x, I, c, e_max=2):
    """Frobenius membership trace: does c x^q land in I^[q] for q = p^e?

    Requires positive characteristic and a multiplier c that is nonzero
    in the ring; the fixture is expected to be a domain, which is the
    caller's responsibility (flagged, never computed).
    """
    ring = I.ring
    p = ring.char
    if p == 0:
        raise ValueError("tight closure traces need positive characteristic")
    if x.ring != ring or c.ring != ring:
        raise ValueError("element, ideal and multiplier must share a ring")
    qgb = quotient_gb(ring)
    if qgb.normal_form(c).is_zero:
        raise ValueError("multiplier c is zero in the ring")
    rows = []
    for e in range(1, e_max + 1):
        q = p ** e
        xq = frobenius_power(x, q)
        member = bracket_power(I, q).contains(c * xq)
        rows.append((e, q, member))
    return TcTrace(element=x, ideal=I, multiplier=c, rows=tuple(rows))


def jacobian_test_candidates(ring):
    """Multiplier candidates for a reduced hypersurface quotient S/(f):
    the nonzero partials of f (reduced mod f), then the squares of their
    monomials as fallbacks."""
    if len(ring.quotient) != 1:
        raise ValueError("test candidates need a hypersurface quotient S/(f)")
    f = ring.poly(ring.quotient[0].terms)
    qgb = quotient_gb(ring)
    out = []
    seen = set()

    def push(g):
        g = qgb.normal_form(g)
        if not g.is_zero and g.terms not in seen:
            seen.add(g.terms)
            out.append(g)

    partials = []
    for i in range(ring.arity):
        d = derivative(f, i)
        if not d.is_zero:
            partials.append(d)
            push(d)
    for d in partials:
        for exps, _ in d.terms:
            push(ring.monomial(tuple(2 * e for e in exps)))
    return out


def find_multiplier_c(I, M):
    """A deterministic nonzero element of I^M: the first generator of the
    reduced basis of I^M that survives reduction modulo the relations."""
    if M < 0:
        raise ValueError("negative colon exponent")
    if not I.generators:
        raise ValueError("cannot pick a multiplier inside the zero ideal")
    if height(I) < 1:
        raise ValueError("multiplier search needs an ideal of positive height")
    P = ideal_power(I, M)
    qgb = quotient_gb(I.ring)
    for g in P.groebner().generators:
        c = qgb.normal_form(g) if I.ring.quotient else g
        if not c.is_zero:
            return c
    raise ValueError("I^%d is zero in the ring" % M)
