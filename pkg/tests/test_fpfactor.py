import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclocert.cyclo import cyclotomic_poly, euler_phi
from cyclocert.fpfactor import (
    distinct_degree,
    factor_fp,
    is_irreducible,
    is_separable,
    squarefree_decomposition,
)
from cyclocert.zxpoly import FpPoly, ZPoly, mod_reduce

from oracles import monic_polys, mult_order, trial_factor


def _as_dict(fac):
    return {g.coeffs: e for g, e in fac.factors}


def test_separable_xn_minus_1_when_p_does_not_divide_n():
    for n, p in [(12, 5), (7, 2), (15, 2), (9, 7)]:
        assert is_separable(mod_reduce(ZPoly.x_pow_minus_one(n), p))
    assert not is_separable(mod_reduce(ZPoly.x_pow_minus_one(12), 3))


def test_repeated_root_not_separable():
    x1 = FpPoly(5, [-1, 1])
    assert not is_separable(x1 * x1)


def test_x4_x2_1_over_f2_is_a_square():
    a = FpPoly(2, [1, 0, 1, 0, 1])
    assert FpPoly(2, [1, 1, 1]) ** 2 == a
    assert not is_separable(a)


def test_zero_input_rejected():
    with pytest.raises(ValueError):
        is_separable(FpPoly(3))
    with pytest.raises(ValueError):
        factor_fp(FpPoly(3))


def test_phi12_mod_2():
    a = mod_reduce(cyclotomic_poly(12), 2)
    # oracle: test the four monic quadratics over F_2 directly
    dividing = [g for g in monic_polys(2, 2) if (a % FpPoly(2, g)).is_zero()]
    assert dividing == [[1, 1, 1]]
    assert _as_dict(factor_fp(a)) == {(1, 1, 1): 2}


def test_phi12_mod_3():
    a = mod_reduce(cyclotomic_poly(12), 3)
    dividing = [g for g in monic_polys(3, 2) if (a % FpPoly(3, g)).is_zero()]
    assert dividing == [[1, 0, 1]]
    assert _as_dict(factor_fp(a)) == {(1, 0, 1): 2}


def test_phi12_mod_13_splits_completely():
    a = mod_reduce(cyclotomic_poly(12), 13)
    roots = [x for x in range(13) if a(x) == 0]
    assert len(roots) == 4
    fac = factor_fp(a)
    assert _as_dict(fac) == {((-r) % 13, 1): 1 for r in roots}


def test_canonical_order_and_seed_independence():
    a = mod_reduce(cyclotomic_poly(60), 7)
    first = factor_fp(a, seed=1)
    for seed in (2, 3, 99):
        assert factor_fp(a, seed=seed) == first
    keys = [g.sort_key() for g, _ in first.factors]
    assert keys == sorted(keys)


def test_squarefree_decomposition_in_characteristic_p():
    # (X+1)^2 (X+2)^3 (X^2+1)^3 ... with a p-th power part over F_3
    p = 3
    a = FpPoly(p, [1, 1]) ** 2 * FpPoly(p, [2, 1]) ** 3 * FpPoly(p, [1, 0, 1]) ** 4
    parts = squarefree_decomposition(a)
    rebuilt = FpPoly.one(p)
    for s, m in parts:
        assert is_separable(s)
        rebuilt = rebuilt * s**m
    assert rebuilt == a


def test_distinct_degree_blocks():
    p = 2
    a = FpPoly(p, [1, 1]) * FpPoly(p, [0, 1]) * FpPoly(p, [1, 1, 1]) * FpPoly(p, [1, 1, 0, 1])
    blocks = dict((d, g) for g, d in distinct_degree(a))
    assert blocks[1].degree == 2 and blocks[2].degree == 2 and blocks[3].degree == 3


@given(st.sampled_from([2, 3, 5, 7, 11]), st.lists(st.integers(0, 10), min_size=1, max_size=10))
def test_reconstruction_and_degree_bookkeeping(p, coeffs):
    a = FpPoly(p, coeffs)
    if a.is_zero():
        return
    fac = factor_fp(a)
    assert fac.reconstruct() == a
    assert fac.degree_sum() == a.degree
    gs = [g for g, _ in fac.factors]
    assert len(set(gs)) == len(gs)
    for g in gs:
        assert g.is_monic() and is_irreducible(g) and is_separable(g)


def test_irreducibility_check_against_trial_division():
    for p in (2, 3):
        for d in range(1, 5):
            for g in monic_polys(p, d):
                expected = trial_factor(g, p) == {tuple(g): 1}
                assert is_irreducible(FpPoly(p, g)) == expected


def test_splitting_type_matches_multiplicative_order():
    from sympy import primerange

    for n in range(1, 41):
        for p in primerange(2, 41):
            if n % p == 0:
                continue
            fac = factor_fp(mod_reduce(cyclotomic_poly(n), p))
            f = mult_order(p, n)
            assert all(e == 1 for _, e in fac.factors)
            assert {g.degree for g, _ in fac.factors} == {f}
            assert len(fac.factors) == euler_phi(n) // f
