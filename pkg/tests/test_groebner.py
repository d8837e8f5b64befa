"""Groebner engine: canonical bases, normal forms, membership, dimension."""

import random

import pytest

from bskoda import (BudgetExceededError, Ideal, LEX, Ring, TermOrder,
                    buchberger, is_member, krull_dim, normal_form)
from bskoda.groebner import exact_div

from genrandom import random_ideal, random_poly, random_ring


def test_buchberger_examples():
    RL = Ring(0, ("x", "y"), TermOrder(LEX))
    x, y = RL.gens()
    gb = buchberger([x ** 2, x * y])
    assert [str(g) for g in gb.generators] == ["x^2", "x*y"]
    gb2 = buchberger([x + y, x - y])
    assert [str(g) for g in gb2.generators] == ["x", "y"]
    R2 = Ring(2, ("x", "y"))
    a, b = R2.gens()
    gb3 = buchberger([a + b, a - b])
    assert [str(g) for g in gb3.generators] == ["x+y"]


def test_normal_form_examples():
    R = Ring(0, ("x", "y"))
    x, y = R.gens()
    G = buchberger([x ** 2, y ** 2])
    assert normal_form(x ** 2 * y, G).is_zero
    assert str(normal_form(x * y, G)) == "x*y"
    assert normal_form(R.zero(), G).is_zero


def test_membership_examples():
    R = Ring(0, ("x", "y"))
    x, y = R.gens()
    I = Ideal(R, [x ** 2, y ** 2])
    assert is_member(x ** 3 * y, I)
    assert not is_member(x * y, I)
    assert is_member(R.one(), Ideal(R, [R.one()]))


def test_krull_dim_examples():
    R = Ring(0, ("x", "y", "z"))
    x, y, z = R.gens()
    assert krull_dim(Ideal(R, [x, y])) == 1
    assert krull_dim(Ideal(R, [x * y, x * z])) == 2
    R2 = Ring(0, ("x", "y"))
    assert krull_dim(Ideal(R2, [])) == 2
    assert krull_dim(Ideal(R2, [R2.one()])) == -1


def test_gb_canonical_under_shuffle():
    rng = random.Random(11)
    for _ in range(60):
        ring = random_ring(rng)
        I = random_ideal(rng, ring)
        gens = list(I.generators)
        gb = buchberger(gens)
        shuffled = list(gens)
        rng.shuffle(shuffled)
        assert buchberger(shuffled) == gb
        assert buchberger(list(gb.generators)) == gb  # idempotence


def test_membership_consistency_random():
    rng = random.Random(12)
    for _ in range(40):
        ring = random_ring(rng)
        I = random_ideal(rng, ring)
        f = random_poly(rng, ring)
        g = random_poly(rng, ring)
        mem_f = I.contains(f)
        mem_g = I.contains(g)
        if mem_f and mem_g:
            assert I.contains(f + g)
        if mem_f:
            h = random_poly(rng, ring)
            assert I.contains(h * f)


def test_nf_of_reduction_difference():
    rng = random.Random(13)
    for _ in range(40):
        ring = random_ring(rng)
        I = random_ideal(rng, ring)
        f = random_poly(rng, ring)
        gb = I.groebner()
        r = normal_form(f, gb)
        assert normal_form(f - r, gb).is_zero
        # no remainder term is divisible by a leading term
        for e, _ in r.terms:
            assert not any(all(a <= b for a, b in zip(g.lead_exps(), e))
                           for g in gb.generators)


def test_exact_div():
    R = Ring(0, ("x", "y"))
    x, y = R.gens()
    f = (x + y) * (x ** 2 - 3 * y)
    assert exact_div(f, x + y) == x ** 2 - 3 * y
    with pytest.raises(ValueError):
        exact_div(x ** 2 + y, x + y)


def test_budget_exceeded():
    R = Ring(0, ("x", "y", "z"))
    x, y, z = R.gens()
    with pytest.raises(BudgetExceededError):
        buchberger([x ** 3 - y * z + x, y ** 3 - x * z, z ** 3 - x * y + z],
                   budget_steps=3)
