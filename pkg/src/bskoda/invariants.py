"""Numerical invariants: height, analytic spread, parameter and reduction
tests, minimal reductions, regular sequences, monomial minimal primes.

The "local ring with infinite residue field" of the source theorems is
modeled by the graded-local polynomial ring at the irrelevant maximal
ideal, with randomized scalar combinations standing in for genericity;
every randomized choice is verified after the fact and seeded.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .groebner import krull_dim
from .ideals import (Ideal, _extend_ring, _fresh_name, _lift, colon,
                     ideal_equal, ideal_product, ideal_sum, unit_ideal,
                     zero_ideal)
from .polys import BLOCK, GREVLEX, Ring, TermOrder

INFINITE_HEIGHT = math.inf  # sentinel for the unit ideal; comparisons are exact


class EquidimensionalityError(ValueError):
    """Height via dimension difference needs an equidimensional catenary ring."""


def _check_equidimensional(ring):
    # polynomial ring or hypersurface quotient are fine; anything else
    # needs an explicit assertion from the caller
    if len(ring.quotient) <= 1 or ring.assume_equidimensional:
        return
    raise EquidimensionalityError(
        "ring has %d defining relations; assert equidimensionality to proceed"
        % len(ring.quotient))


def ring_dim(ring):
    """Krull dimension of the ring itself (cached)."""
    if ring._dim is None:
        ring._dim = krull_dim(zero_ideal(ring))
    return ring._dim


def height(I):
    """dim R - dim R/I; the unit ideal reports the infinity sentinel."""
    _check_equidimensional(I.ring)
    if not I.is_proper():
        return INFINITE_HEIGHT
    return ring_dim(I.ring) - krull_dim(I)


def is_parameters(elems, ring=None):
    """True when the elements generate an ideal of height >= their number."""
    elems = list(elems)
    if not elems:
        return True
    if ring is None:
        ring = elems[0].ring
    h = height(Ideal(ring, elems))
    return h >= len(elems)


def analytic_spread(I, budget_steps=None):
    """Dimension of the special fiber of the Rees algebra.

    Presents R[It] by eliminating t from (y_i - t f_i) + Q, then adds the
    irrelevant maximal ideal and measures the dimension left in the fiber
    variables.
    """
    ring = I.ring
    if not I.generators:
        raise ValueError("analytic spread of the zero ideal")
    if not I.is_proper():
        raise ValueError("analytic spread of the unit ideal")
    from .groebner import DEFAULT_BUDGET, buchberger
    budget = budget_steps or DEFAULT_BUDGET
    S = ring.ambient()
    gens = [S.poly(g.terms) for g in I.generators]
    qgens = [S.poly(q.terms) for q in ring.quotient]
    taken = set(S.names)
    ynames = []
    for k in range(len(gens)):
        nm = _fresh_name(taken, "u%d" % (k + 1))
        taken.add(nm)
        ynames.append(nm)
    tname = _fresh_name(taken, "t")
    tidx = S.arity + len(ynames)
    E = _extend_ring(S, ynames + [tname], TermOrder(BLOCK, [tidx]))
    t = E.gen(tidx)
    rels = []
    for k, f in enumerate(gens):
        rels.append(E.gen(S.arity + k) - t * _lift(f, E))
    rels += [_lift(q, E) for q in qgens]
    gb = buchberger(rels, E, budget)
    P = Ring(S.char, tuple(S.names) + tuple(ynames), TermOrder(GREVLEX))
    keep = tuple(range(P.arity))
    rees = [P.poly([(e[:-1], c) for e, c in g.terms]) for g in gb.generators
            if all(e[tidx] == 0 for e, _ in g.terms)]
    fiber = rees + [P.gen(i) for i in range(S.arity)]
    return krull_dim(Ideal(P, fiber))


@dataclass
class InvariantProfile:
    """Height g, analytic spread ell and friends for one ideal."""
    height: object
    spread: int
    n_generators: int
    ambient_dim: int
    is_parameter_ideal: bool
    is_proper: bool


def invariant_profile(I):
    h = height(I)
    ell = analytic_spread(I) if I.is_proper() and not I.is_zero else 0
    prof = InvariantProfile(
        height=h,
        spread=ell,
        n_generators=len(I.generators),
        ambient_dim=ring_dim(I.ring),
        is_parameter_ideal=(h >= len(I.generators)),
        is_proper=I.is_proper(),
    )
    return prof


@dataclass
class ReductionVerdict:
    """Northcott-Rees test result: I^{n+1} = J * I^n found (or bound hit)."""
    is_reduction: bool
    reduction_number: int | None
    n_max: int


def is_reduction(J, I, n_max=8):
    """Scan n = 0..n_max for I^{n+1} = J * I^n; J must sit inside I."""
    if not I.contains_ideal(J):
        raise ValueError("J is not contained in I")
    In = unit_ideal(I.ring)  # I^0
    for n in range(n_max + 1):
        In1 = ideal_product(In, I) if n > 0 else I
        if ideal_equal(In1, ideal_product(J, In)):
            return ReductionVerdict(True, n, n_max)
        In = In1
    return ReductionVerdict(False, None, n_max)


def _random_scalar(rng, ring):
    if ring.char:
        return rng.randrange(1, min(ring.char, 1000))
    return rng.randint(1, 50)


def random_combination(rng, gens, ring):
    out = ring.zero()
    for g in gens:
        out = out + g.scale(_random_scalar(rng, ring))
    return out


def minimal_reduction(I, ell, seed=0, retries=64, n_max=8):
    """Search for an ell-generated reduction via random combinations.

    Returns the reduction ideal, or None when every retry failed (the
    caller reports this; it is not fatal).  Deterministic under `seed`.
    """
    if len(I.generators) <= ell:
        return I
    rng = random.Random(seed)
    gens = list(I.generators)
    for _ in range(retries):
        combos = [random_combination(rng, gens, I.ring) for _ in range(ell)]
        J = Ideal(I.ring, combos)
        if not all(I.contains(g) for g in J.generators):
            continue
        if is_reduction(J, I, n_max).is_reduction:
            return J
    return None


def is_regular_sequence_mod(elems, I):
    """Sequential colon test for a regular sequence on R/I.

    For each element e: (I + previous) : e must equal I + previous, and
    the accumulated ideal must stay proper.
    """
    current = I
    for e in elems:
        if e.is_zero:
            return False
        step = colon(current, Ideal(I.ring, [e]))
        if not ideal_equal(step, current):
            return False
        current = ideal_sum(current, Ideal(I.ring, [e]))
        if not current.is_proper():
            return False
    return True


def monomial_min_primes(I):
    """Minimal primes of a monomial ideal, as variable-generated ideals.

    These are the minimal variable subsets meeting the support of every
    generator.
    """
    if not I.is_monomial:
        raise ValueError("minimal primes require a monomial ideal")
    ring = I.ring
    mins = I.min_exps()
    if not mins:
        return [zero_ideal(ring)]
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in mins]
    if any(not s for s in supports):
        return []  # unit ideal
    n = ring.arity
    covers = []
    for k in range(0, n + 1):
        for subset in combinations(range(n), k):
            sset = set(subset)
            if not all(s & sset for s in supports):
                continue
            if any(set(c) <= sset for c in covers):
                continue
            covers.append(subset)
    covers.sort(key=lambda c: (len(c), c))
    return [Ideal(ring, [ring.gen(i) for i in c]) for c in covers]
