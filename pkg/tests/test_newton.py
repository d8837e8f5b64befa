"""Newton polyhedra and the combinatorial integral-closure oracle."""

import random

import pytest

from bskoda import (Ideal, Ring, ideal_equal, ideal_power, monomial_icl,
                    monomial_icl_member, newton_hull)
from bskoda.closures import icl_member_general
from bskoda.newton import NotMonomialError

from genrandom import random_monomial_ideal


def test_hull_examples():
    R = Ring(0, ("x", "y"))
    x, y = R.gens()
    h = newton_hull(Ideal(R, [x ** 2, y ** 2]))
    assert set(h.facets) == {((1, 0), 0), ((0, 1), 0), ((1, 1), 2)}
    assert set(h.vertices) == {(2, 0), (0, 2)}
    hx = newton_hull(Ideal(R, [x]))
    assert set(hx.facets) == {((1, 0), 1), ((0, 1), 0)}
    h3 = newton_hull(Ideal(R, [x ** 3, y ** 3]))
    assert ((1, 1), 3) in h3.facets
    with pytest.raises(NotMonomialError):
        newton_hull(Ideal(R, [x + y]))


def test_hull_invariants_random():
    rng = random.Random(41)
    for _ in range(30):
        nv = rng.randint(1, 3)
        ring = Ring(0, ("x", "y", "z")[:nv])
        I = random_monomial_ideal(rng, ring, max_gens=4, max_deg=5)
        h = newton_hull(I)
        for p in h.points:
            assert h.member(p)
        assert set(h.vertices) <= set(h.points)
        for normal, rhs in h.facets:
            assert all(a >= 0 for a in normal)


def test_member_examples():
    R = Ring(0, ("x", "y"))
    x, y = R.gens()
    I = Ideal(R, [x ** 2, y ** 2])
    assert monomial_icl_member((1, 1), I)
    assert not monomial_icl_member((1, 0), I)
    for g in I.min_exps():
        assert monomial_icl_member(g, I)


def test_closure_classical_values():
    R = Ring(0, ("x", "y"))
    x, y = R.gens()
    assert ideal_equal(monomial_icl(Ideal(R, [x ** 2, y ** 2])),
                       Ideal(R, [x ** 2, x * y, y ** 2]))
    assert ideal_equal(monomial_icl(Ideal(R, [x ** 3, y ** 3])),
                       Ideal(R, [x ** 3, x ** 2 * y, x * y ** 2, y ** 3]))
    P = Ideal(R, [x])
    assert ideal_equal(monomial_icl(P), P)


def test_closure_idempotence_and_inclusion_random():
    rng = random.Random(42)
    for _ in range(20):
        nv = rng.randint(1, 3)
        ring = Ring(0, ("x", "y", "z")[:nv])
        I = random_monomial_ideal(rng, ring, max_gens=4, max_deg=5)
        cl = monomial_icl(I)
        assert cl.contains_ideal(I)
        assert ideal_equal(monomial_icl(cl), cl)


def test_oracle_agreement_random():
    # facet membership agrees with the stabilization oracle both ways
    rng = random.Random(43)
    for _ in range(25):
        nv = rng.randint(1, 3)
        ring = Ring(0, ("x", "y", "z")[:nv])
        I = random_monomial_ideal(rng, ring, max_gens=3, max_deg=6)
        for _ in range(6):
            exps = tuple(rng.randint(0, 7) for _ in range(nv))
            fast = monomial_icl_member(exps, I)
            slow = icl_member_general(ring.monomial(exps), I, 8)
            assert fast == slow.member, (I, exps)


def test_homogeneity_of_criterion():
    rng = random.Random(44)
    for _ in range(15):
        nv = rng.randint(1, 2)
        ring = Ring(0, ("x", "y")[:nv])
        I = random_monomial_ideal(rng, ring, max_gens=3, max_deg=4)
        for _ in range(4):
            exps = tuple(rng.randint(0, 5) for _ in range(nv))
            if monomial_icl_member(exps, I):
                for k in (2, 3):
                    scaled = tuple(k * e for e in exps)
                    assert monomial_icl_member(scaled, ideal_power(I, k))
