import random
from math import prod

import pytest
from sympy import primerange

from cyclocert.cyclo import CycloElt, cyclo_ring, cyclotomic_poly, power_root
from cyclocert.fpfactor import factor_fp
from cyclocert.ideal import (
    FracElt,
    contains,
    ideal_equal,
    ideal_from_generators,
    ideal_inverse,
    ideal_minimum,
    ideal_norm,
    ideal_product,
    invert_ideal,
    is_subset,
    unit_ideal,
    verify_invertibility,
)
from cyclocert.zxpoly import lift, mod_reduce

from oracles import fp_divmod, naive_hnf, trial_factor


def primes_above(n, p):
    R = cyclo_ring(n)
    fac = factor_fp(mod_reduce(cyclotomic_poly(n), p))
    return [(g, ideal_from_generators(R, [p, R.evaluate(lift(g))])) for g, _ in fac.factors]


def test_unit_ideal_is_identity():
    R = cyclo_ring(12)
    I = unit_ideal(R)
    assert I.basis == tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
    assert ideal_norm(I) == 1


def test_principal_rational_integer():
    for n, p in [(12, 5), (7, 3), (9, 2)]:
        R = cyclo_ring(n)
        I = ideal_from_generators(R, [p])
        m = R.degree
        assert I.basis == tuple(tuple(p * int(i == j) for j in range(m)) for i in range(m))
        assert ideal_norm(I) == p**m


def test_rejects_all_zero_generators():
    R = cyclo_ring(5)
    with pytest.raises(ValueError):
        ideal_from_generators(R, [0, R.zero])


def test_prime_above_2_in_z_zeta12_against_naive_hnf():
    R = cyclo_ring(12)
    z = R.zeta
    g = z * z + z + 1
    P = ideal_from_generators(R, [2, g])
    rows = []
    for x in (R.from_int(2), g):
        for j in range(4):
            rows.append((x * power_root(R, j)).coeffs)
    oracle = naive_hnf(rows, 4)
    assert P.basis == tuple(oracle)
    assert ideal_norm(P) == prod(oracle[i][i] for i in range(4)) == 4


def test_hnf_canonical_under_permutation_and_redundancy():
    rng = random.Random(11)
    R = cyclo_ring(15)
    for _ in range(10):
        gens = [CycloElt(R, [rng.randint(-4, 4) for _ in range(8)]) for _ in range(3)]
        I = ideal_from_generators(R, gens)
        J = ideal_from_generators(R, list(reversed(gens)))
        K = ideal_from_generators(R, gens + [gens[0] * R.zeta * 3 + gens[1] * 2])
        assert I == J == K


def test_membership_examples():
    R = cyclo_ring(12)
    z = R.zeta
    P = ideal_from_generators(R, [2, z * z + z + 1])
    assert contains(P, R.zero)
    assert not contains(P, z + 1)
    assert contains(P, power_root(R, 3) - 1)
    # oracle: image in F_2[X]/(X^2+X+1)
    assert fp_divmod([1, 1], [1, 1, 1], 2)[1] != []
    assert fp_divmod([1, 0, 0, 1], [1, 1, 1], 2)[1] == []


def test_membership_agrees_with_reduction_map():
    rng = random.Random(2)
    cases = [(12, 2), (12, 5), (15, 2), (20, 3), (9, 3), (13, 5)]
    per_case = 1000 // len(cases) + 1
    for n, p in cases:
        R = cyclo_ring(n)
        for g, P in primes_above(n, p):
            for _ in range(per_case):
                x = CycloElt(R, [rng.randint(-6, 6) for _ in range(R.degree)])
                expected = fp_divmod(list(x.coeffs), list(g.coeffs), p)[1] == []
                assert contains(P, x) == expected


def test_prime_norm_is_p_to_the_f():
    for n in (5, 7, 8, 12, 15, 16, 20, 21):
        for p in primerange(2, 30):
            for g, P in primes_above(n, p):
                assert ideal_norm(P) == p**g.degree


def test_product_with_unit_ideal():
    R = cyclo_ring(12)
    _, P = primes_above(12, 5)[0]
    assert ideal_product(P, unit_ideal(R)) == P
    assert ideal_product(unit_ideal(R), P) == P


def test_inert_prime_product_is_itself():
    # 2 has order 4 mod 5, so Phi_5 stays irreducible mod 2
    assert trial_factor([1, 1, 1, 1, 1], 2) == {(1, 1, 1, 1, 1): 1}
    R = cyclo_ring(5)
    ((_, P),) = primes_above(5, 2)
    assert P == ideal_from_generators(R, [2])


def test_product_of_primes_above_5_in_z_zeta12():
    R = cyclo_ring(12)
    primes = primes_above(12, 5)
    assert len(primes) == 2
    total = ideal_product(primes[0][1], primes[1][1])
    assert total.basis == ideal_from_generators(R, [5]).basis


def test_norm_multiplicative_on_products():
    for n, p in [(12, 13), (15, 7), (21, 2), (16, 17)]:
        primes = [P for _, P in primes_above(n, p)]
        acc = primes[0]
        for P in primes[1:]:
            new = ideal_product(acc, P)
            assert ideal_norm(new) == ideal_norm(acc) * ideal_norm(P)
            acc = new


def test_ideal_equal_and_norm_basics():
    R = cyclo_ring(8)
    I = ideal_from_generators(R, [3, R.zeta + 1])
    assert ideal_equal(I, I)
    assert ideal_norm(ideal_from_generators(R, [7])) == 7**4


def test_minimum_is_smallest_positive_integer():
    for n, p in [(12, 2), (12, 5), (9, 3)]:
        for _, P in primes_above(n, p):
            assert ideal_minimum(P) == p
    R = cyclo_ring(12)
    I = ideal_from_generators(R, [6, R.zeta * 4])
    m = ideal_minimum(I)
    assert contains(I, int(m)) and not any(contains(I, c) for c in range(1, int(m)))


def test_inverse_of_primes():
    for n, p in [(12, 2), (12, 5), (9, 3), (15, 5), (7, 2)]:
        R = cyclo_ring(n)
        for _, P in primes_above(n, p):
            inv = ideal_inverse(P)
            assert ideal_product(P, inv) == unit_ideal(R)
            assert is_subset(unit_ideal(R), inv)


def test_inverse_of_fractional_ideal():
    R = cyclo_ring(12)
    _, P = primes_above(12, 5)[0]
    inv = ideal_inverse(P)
    assert ideal_inverse(inv) == P


def test_certificate_for_principal_p():
    R = cyclo_ring(12)
    I = ideal_from_generators(R, [5])
    cert = invert_ideal(I, I)
    assert cert.a == (R.from_int(5),)
    assert cert.b == (FracElt(R.one, 5),)
    assert all(verify_invertibility(cert).values())


@pytest.mark.parametrize("n,p", [(12, 5), (12, 13), (7, 2), (15, 2), (12, 2), (9, 3)])
def test_certificate_for_primes(n, p):
    R = cyclo_ring(n)
    for _, P in primes_above(n, p):
        cert = invert_ideal(P, P)
        checks = verify_invertibility(cert)
        assert all(checks.values()), checks
        # every product a_i b_i is integral; the designated one is outside P
        for a, b in zip(cert.a, cert.b):
            assert (a * b).is_integral()
        i = cert.unit_index
        assert not contains(P, (cert.a[i] * cert.b[i]).num)
        total = FracElt(R.zero)
        for a, b in zip(cert.a, cert.b):
            total = total + b * a
        assert total == FracElt(R.one)


def test_corrupted_certificate_rejected():
    _, P = primes_above(12, 5)[0]
    cert = invert_ideal(P, P)
    a0 = cert.a[0]
    cert.a = (CycloElt(a0.ring, (a0.coeffs[0] + 1,) + a0.coeffs[1:]),) + cert.a[1:]
    assert not all(verify_invertibility(cert).values())
