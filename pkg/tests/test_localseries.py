import random

import pytest

from charthree.localseries import (LocalData, TruncatedSeries,
                                   build_beta1_chain, expand_coordinates,
                                   expand_x_at_beta_zero)
from charthree.polyfamilies import eval_chain


def series_from_ints(lvl, val, ints, prec):
    return TruncatedSeries.from_coeffs(lvl, val,
                                       [lvl.from_int(c) for c in ints], prec)


# -- TruncatedSeries unit behaviour ------------------------------------------


def test_series_normalization(tower9):
    lvl = tower9.level(2)
    s = series_from_ints(lvl, 1, [0, 0, 2, 0, 1, 0], 10)
    assert s.val == 3 and len(s.pk) == 3  # leading and trailing zeros gone
    z = series_from_ints(lvl, 2, [0, 0], 7)
    assert z.is_zero() and z.val == 7


def test_series_mul_valuation_additivity(tower9):
    rng = random.Random(13)
    lvl = tower9.level(4)
    for _ in range(40):
        va, vb = rng.randrange(0, 4), rng.randrange(0, 4)
        a = TruncatedSeries.from_coeffs(
            lvl, va, [lvl.random_element(rng) for _ in range(6)], 12)
        b = TruncatedSeries.from_coeffs(
            lvl, vb, [lvl.random_element(rng) for _ in range(6)], 12)
        if a.is_zero() or b.is_zero():
            continue
        p = a * b
        assert p.val == a.val + b.val
        # distributivity against addition
        c = TruncatedSeries.from_coeffs(
            lvl, vb, [lvl.random_element(rng) for _ in range(6)], 12)
        lhs = a * (b + c)
        rhs = a * b + a * c
        common = min(lhs.prec, rhs.prec)
        assert lhs.truncate(common) == rhs.truncate(common)


def test_series_precision_rules(tower9):
    lvl = tower9.level(2)
    a = series_from_ints(lvl, 2, [1, 1], 10)   # known to O(T^10)
    b = series_from_ints(lvl, 3, [2], 8)       # known to O(T^8)
    p = a * b
    assert p.val == 5
    assert p.prec == min(2 + 8, 3 + 10)
    s = a + b
    assert s.prec == 8
    with pytest.raises(AssertionError):
        a.truncate(12)


def test_series_cube_is_frobenius(tower9):
    rng = random.Random(17)
    lvl = tower9.level(4)
    a = TruncatedSeries.from_coeffs(
        lvl, 1, [lvl.random_element(rng) for _ in range(5)], 8)
    cubed = a.cube()
    assert cubed.prec == 24
    direct = (a * a * a).truncate(a.prec)  # plain product, lower precision
    assert cubed.truncate(direct.prec) == direct


def test_series_coefficient_access(tower9):
    lvl = tower9.level(2)
    s = series_from_ints(lvl, 1, [1, 0, 2], 9)
    assert s.coefficient(1) == 1
    assert s.coefficient(2) == 0
    assert s.coefficient(3) == 2
    assert s.coefficient(7) == 0   # implicit zero below precision
    with pytest.raises(ValueError):
        s.coefficient(9)


# -- coordinate expansion -----------------------------------------------------


def test_expand_coordinates_leading_terms(curve9, places9):
    place = next(p for p in places9
                 if p.place_class.kind == "rational_general")
    for which in range(3):
        lift = curve9.hermitian_lift(place, which)
        basis = expand_coordinates(curve9, lift, 2 * curve9.q + 1)
        one = lift.level.one()
        q = curve9.q
        assert basis.x_a.val == 1
        assert basis.x_a.coefficient(1) == one and basis.x_a.coefficient(2) == one
        # x_a = T + T^2 + O(T^q) with an exactly zero tail below q
        assert all(basis.x_a.coefficient(k).is_zero() for k in range(3, q))
        # y_b = T - beta T^3 exactly
        assert basis.y_b.coefficient(1) == one
        assert basis.y_b.coefficient(3) == -basis.beta
        assert all(basis.y_b.coefficient(k).is_zero()
                   for k in range(4, basis.prec))
        assert basis.y_b.coefficient(2).is_zero()
        # f0 = T^2 + beta T^3 + O(T^q), zero tail below q
        assert basis.f0.coefficient(2) == one
        assert basis.f0.coefficient(3) == basis.beta
        assert all(basis.f0.coefficient(k).is_zero() for k in range(4, q))
        assert basis.newton_steps <= 4


def test_expand_requires_min_precision(curve9, places9):
    place = next(p for p in places9 if p.place_class.kind == "beta_one")
    lift = curve9.hermitian_lift(place)
    with pytest.raises(ValueError, match="at least"):
        expand_coordinates(curve9, lift, curve9.q)
    with pytest.raises(ValueError, match="bound"):
        expand_coordinates(curve9, lift, 500)


def test_f_chain_leading_pairs_and_paper_coeffs(curve9, places9):
    place = next(p for p in places9
                 if p.place_class.kind == "rational_general"
                 and p.place_class.i == 4)
    local = LocalData(curve9, place)
    f = local.f_chain(2)
    beta = local.basis.beta
    fam = eval_chain(3, beta)
    q = curve9.q
    for j, fj in enumerate(f):
        assert fj.val == 3 * j + 2
        assert fj.coefficient(3 * j + 2) == fam[j + 1].p_val
        if 3 * j + 3 < q:
            assert fj.coefficient(3 * j + 3) == fam[j + 1].q_val
    assert f[1].coefficient(5) == 2 * beta ** 3
    assert f[1].coefficient(6) == beta ** 4 - beta ** 3 - beta ** 2
    assert f[2].coefficient(8) == beta ** 3


def test_f_chain_final_valuation_jump(curve27):
    # at an i = 3 rational place (q = 27): v(f_0..f_3) = 2, 5, 8, 12
    place = next(p for p in curve27.enumerate_rational()
                 if p.place_class.kind == "rational_general"
                 and p.place_class.i == 3)
    local = LocalData(curve27, place)
    f = local.f_chain(3)
    assert [fj.val for fj in f] == [2, 5, 8, 12]


def test_f_chain_index_cap(curve9, places9):
    place = next(p for p in places9
                 if p.place_class.kind == "rational_general"
                 and p.place_class.i == 4)
    local = LocalData(curve9, place)
    with pytest.raises(ValueError, match="exceeds"):
        local.f_chain(3)   # min(i, m-1) = 2 at q = 9


def test_g_chain_special_and_generic(curve9):
    # special (3,0): v(g_0) = 4 (the R-zero sits at index 1)
    sp = curve9.sample_nonrational(4, count=1)[0]
    local = LocalData(curve9, sp)
    g = local.g_chain(0)
    assert g[0].val == 4
    beta = local.basis.beta
    fam = eval_chain(1, beta)
    assert g[0].coefficient(4) == fam[1].p_val  # leading pair (R_1=0, P_1)
    # generic (7,4): v(g_0, g_1) = 3, 6 and leading pairs (R, P)
    gen = curve9.sample_nonrational(8, count=1)[0]
    local2 = LocalData(curve9, gen)
    g2 = local2.g_chain(curve9.m - 2)
    fam2 = eval_chain(curve9.m - 1, local2.basis.beta)
    for ell, gl in enumerate(g2):
        assert gl.val == 3 * ell + 3
        assert gl.coefficient(3 * ell + 3) == fam2[ell + 1].r_val
        assert gl.coefficient(3 * ell + 4) == fam2[ell + 1].p_val


def test_beta1_chain(curve9, places9):
    place = next(p for p in places9 if p.place_class.kind == "beta_one")
    local = LocalData(curve9, place)
    h = build_beta1_chain(curve9, local.basis, curve9.m - 1)
    one = local.basis.x_a.level.one()
    assert [hj.val for hj in h] == [2, 5, 8]
    assert h[0].coefficient(2) == one and h[0].coefficient(3) == one
    assert h[1].coefficient(5) == one and h[1].coefficient(6) == one
    with pytest.raises(ValueError, match="beta = 1"):
        bad = next(p for p in places9
                   if p.place_class.kind == "rational_general")
        build_beta1_chain(curve9, LocalData(curve9, bad).basis, 1)


def test_valuations_independent_of_lift_choice(curve9):
    sp = curve9.sample_nonrational(4, count=1)[0]
    records = []
    for which in range(3):
        local = LocalData(curve9, sp, which_lift=which)
        f = local.f_chain(min(sp.place_class.i, curve9.m - 1))
        g = local.g_chain(sp.place_class.K)
        records.append(([x.val for x in f], [x.val for x in g]))
    assert records[0] == records[1] == records[2]


def test_gap_witness_index_validation(curve9):
    sp = curve9.sample_nonrational(4, count=1)[0]   # (i,K) = (3,0)
    local = LocalData(curve9, sp)
    with pytest.raises(ValueError, match="removed"):
        local.gap_witness(1, 4)    # the removed diagonal gap
    with pytest.raises(ValueError, match="not a gap|outside"):
        local.gap_witness(0, 26)
    w = local.gap_witness(1, 5)    # the added gap 14
    assert w.v_at_P == 13 and w.fp_exponent == 1


def test_gap_witness_examples_from_theorem(curve9):
    # generic place: (0,1) -> 1 with v = 0; (0,2) -> x_a; (m-1,1) -> F^(m-1)
    gen = curve9.sample_nonrational(8, count=1)[0]
    local = LocalData(curve9, gen)
    w = local.gap_witness(0, 1)
    assert w.v_at_P == 0 and w.fp_exponent == 0
    w = local.gap_witness(0, 2)
    assert w.v_at_P == 1 and "x_a" in w.label
    w = local.gap_witness(curve9.m - 1, 1)
    assert w.v_at_P == (curve9.m - 1) * curve9.q
    assert w.fp_exponent == curve9.m - 1


def test_beta_zero_expansion(curve9, places9):
    for place in places9:
        if place.place_class.kind != "beta_zero":
            continue
        x = expand_x_at_beta_zero(curve9, place, 2 * curve9.q + 1)
        assert x.val == 2
        break
    with pytest.raises(ValueError):
        expand_x_at_beta_zero(curve9, curve9.infinity(), 19)
