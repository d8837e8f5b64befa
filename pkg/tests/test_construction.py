"""The randomized parameter construction and its containment sweeps."""

from dataclasses import replace

import pytest

from bskoda import (Ideal, construct_32, find_M, find_multiplier_c,
                    ideal_equal, lemma31_condition, parse_ideal, parse_ring,
                    verify_34, verify_35, verify_items)
from bskoda.construction import SKIPPED, VERIFIED


def _fixture(char=32003):
    R = parse_ring("ring char=%d vars=x,y,z order=grevlex" % char)
    I = parse_ideal("x*y;x*z", R)
    return R, I


def test_lemma31_parameter_case():
    R = parse_ring("ring char=0 vars=x,y order=grevlex")
    I = parse_ideal("x;y", R)
    # i = ell = 2: the colon is the unit ideal, height infinity
    assert lemma31_condition(list(I.generators), I, 1)
    with pytest.raises(ValueError):
        lemma31_condition([], I, 0)


def test_lemma31_on_fixture():
    R, I = _fixture()
    a1 = I.generators[0]          # x*y
    assert lemma31_condition([a1], I, 0)


def test_construct_trivial_parameter_case():
    # g = ell: no perturbations, vacuous verification
    R = parse_ring("ring char=32003 vars=x,y order=grevlex")
    I = parse_ideal("x;y", R)
    state = construct_32(I, I, N=2, w=0, seed=1)
    assert state.g == state.ell == 2
    assert all(t.is_zero for t in state.t)
    assert all(v in (VERIFIED, SKIPPED) for v in state.item_status.values())


def test_construct_fixture_and_reverify():
    R, I = _fixture()
    state = construct_32(I, I, N=2, w=0, seed=7)
    assert state.g == 1 and state.ell == 2
    assert state.t[0].is_zero and not state.t[1].is_zero
    assert state.b[1] == state.a[1] + state.t[1]
    # perturbation sits in m^N
    assert state.t[1].min_degree() >= state.N
    # independent re-verification from scratch
    status = verify_items(state)
    assert status["item1"] == VERIFIED
    assert status["item2"] == VERIFIED
    assert status["item3"] == VERIFIED
    assert status["item4"] == SKIPPED       # R/I equidimensionality not asserted
    assert status["item5"] == VERIFIED
    assert status["item6"] == VERIFIED


def test_construct_determinism():
    R, I = _fixture()
    s1 = construct_32(I, I, N=2, w=0, seed=13)
    s2 = construct_32(I, I, N=2, w=0, seed=13)
    assert s1.a == s2.a and s1.t == s2.t and s1.b == s2.b and s1.M == s2.M


def test_find_M_on_state():
    R, I = _fixture()
    state = construct_32(I, I, N=2, w=0, seed=7)
    m = find_M(state, 1, n_bound=6)
    assert m == 0 and state.M >= 0


def test_lambda_validation():
    R, I = _fixture()
    whole = parse_ideal("x;y;z", R)      # height 3, wrong for index 1
    with pytest.raises(ValueError):
        construct_32(I, I, N=2, w=0, lambdas={1: [whole]}, seed=1)
    not_containing = parse_ideal("y;x-z", R)   # xz is not in (y, x-z)
    with pytest.raises(ValueError):
        construct_32(I, I, N=2, w=0, lambdas={1: [not_containing]}, seed=1)
    with pytest.raises(ValueError):
        # index outside [g, ell-1]
        construct_32(I, I, N=2, w=0, lambdas={2: [parse_ideal("x;y", R)]}, seed=1)
    # a legal height-1 prime containing I: (x); t_2 must avoid it
    P = parse_ideal("x", R)
    state = construct_32(I, I, N=2, w=0, lambdas={1: [P]}, seed=1)
    assert not P.contains(state.t[1])


def test_construct_input_validation():
    R, I = _fixture()
    J_wrong = parse_ideal("x*y", R)       # 1 generator, spread is 2
    with pytest.raises(ValueError):
        construct_32(I, J_wrong, N=2, w=0, seed=1)
    not_reduction = parse_ideal("x^2*y;x^2*z", R)
    with pytest.raises(ValueError):
        construct_32(I, not_reduction, N=2, w=0, seed=1)


def test_verify_34_fixture_and_corruption():
    R, I = _fixture()
    state = construct_32(I, I, N=2, w=0, seed=7)
    c = find_multiplier_c(I, state.M)
    ok, witness = verify_34(state, c, n_max=1)
    assert ok and witness is None
    # vacuous when every perturbation vanishes
    R2 = parse_ring("ring char=32003 vars=x,y order=grevlex")
    I2 = parse_ideal("x;y", R2)
    triv = construct_32(I2, I2, N=2, w=0, seed=1)
    assert verify_34(triv, find_multiplier_c(I2, triv.M), 1) == (True, None)
    # corrupted state: t_2 replaced by 1 must fail with a witness
    bad = replace(state, t=(state.t[0], R.one()))
    ok_bad, witness_bad = verify_34(bad, c, n_max=1)
    assert not ok_bad and witness_bad is not None


def test_verify_35_base_case_char2():
    # g = ell, r = 0, q = p: (x,y)^(2q) inside ((x,y)^[q]) with c^0 = 1
    R = parse_ring("ring char=2 vars=x,y order=grevlex")
    I = parse_ideal("x;y", R)
    state = construct_32(I, I, N=1, w=0, seed=1)
    c = find_multiplier_c(I, state.M)
    ok, _ = verify_35(state, c, [2], r=0)
    assert ok


def test_verify_35_fixture_char3():
    R, I = _fixture(char=3)
    state = construct_32(I, I, N=2, w=0, seed=7)
    c = find_multiplier_c(I, state.M)
    ok, witness = verify_35(state, c, [3, 9], r=0)
    assert ok, witness
    with pytest.raises(ValueError):
        verify_35(state, c, [4], r=0)        # not a power of p
    with pytest.raises(ValueError):
        verify_35(state, c, [3], r=1)        # r exceeds w


def test_verify_35_needs_char_p():
    R = parse_ring("ring char=0 vars=x,y order=grevlex")
    I = parse_ideal("x;y", R)
    state = construct_32(I, I, N=1, w=0, seed=1)
    with pytest.raises(ValueError):
        verify_35(state, R.one(), [2], r=0)


def test_item4_checked_when_asserted():
    # I = (x^2 y, x y^2): R/I has the single minimal prime (x*y), so it is
    # equidimensional; height 1, spread 2, and the reduction is handed over
    # with a basic first generator x^2 y + x y^2
    R = parse_ring("ring char=32003 vars=x,y order=grevlex")
    I = parse_ideal("x^2*y;x*y^2", R)
    J = parse_ideal("x^2*y+x*y^2;x*y^2", R)
    assert ideal_equal(I, J)
    state = construct_32(I, J, N=1, w=0, seed=3, r_over_i_equidimensional=True)
    assert state.item_status["item4"] == VERIFIED
    # the image of t_2 in R/I is a parameter: it avoids both (x) and (y)
    t2 = state.t[1]
    x, y = R.gens()
    assert not Ideal(R, [x]).contains(t2)
    assert not Ideal(R, [y]).contains(t2)


def test_item5_t1_implies_34_base():
    # item (5) at t = 1 is the ideal containment t_j I^(M+1) inside
    # J_(j-1) I^M; multiplied by c in I^M it gives the k = 1, n = 0 slice
    # of the containment sweep
    R, I = _fixture()
    state = construct_32(I, I, N=2, w=0, seed=7)
    from bskoda import ideal_power, ideal_product
    IM = ideal_power(I, state.M)
    for j in range(state.g + 1, state.ell + 1):
        tj = state.t[j - 1]
        Jj1 = Ideal(R, state.a[:j - 1])
        rhs = ideal_product(Jj1, IM)
        for h in ideal_power(I, state.M + 1).generators:
            assert rhs.contains(tj * h)
    c = find_multiplier_c(I, state.M)
    ok, _ = verify_34(state, c, n_max=0)
    assert ok
