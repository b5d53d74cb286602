import random

import pytest

from skewpoly.bound import bound_v2, centralize, decentralize, is_twosided
from skewpoly.errors import FieldError
from skewpoly.ffield import GF
from skewpoly.ratfun import RatFunField, RatSigma, rf_arith, rf_sigma_pow
from skewpoly.skew import rat_skew_ring

import cases_f16t


@pytest.fixture(scope="module")
def rf():
    return RatFunField(GF(2, 4, modulus=cases_f16t.MODULUS))


@pytest.fixture(scope="module")
def sigma(rf):
    c = rf.base.pow_(rf.base.gen, 5)
    return RatSigma(rf, c)


def rand_rf(rf, rng, maxdeg=3):
    k = rf.base
    num = tuple(k.rand(rng) for _ in range(rng.randrange(1, maxdeg + 1)))
    den = tuple(k.rand(rng) for _ in range(rng.randrange(1, maxdeg + 1)))
    if not any(den):
        den = (k.one,)
    return rf.make(num, den)


def test_canonicalization(rf):
    k = rf.base
    # (t^2 + t) / (t + 1) = t over F_2 coefficients embedded in F_16
    x = rf.make((0, 1, 1), (1, 1))
    assert x == rf.make((0, 1))
    assert x.den == (k.one,)
    y = rf.make((k.gen, k.gen), (k.gen,))
    assert y.den[-1] == k.one  # monic denominator


def test_field_axioms_sampled(rf):
    rng = random.Random(0)
    for _ in range(10000):
        x, y, z = (rand_rf(rf, rng, 2) for _ in range(3))
        assert rf.add(rf.add(x, y), z) == rf.add(x, rf.add(y, z))
        assert rf.mul(x, rf.add(y, z)) == rf.add(rf.mul(x, y), rf.mul(x, z))
        if x.num:
            assert rf.mul(x, rf.inv(x)) == rf.one
    x = rand_rf(rf, rng)
    assert rf.add(x, rf.zero) == x
    assert rf_arith(rf, "sub", x, x) == rf.zero


def test_canonical_after_every_op(rf):
    from skewpoly.cpoly import pk_gcd
    rng = random.Random(3)
    for _ in range(500):
        x, y = rand_rf(rf, rng), rand_rf(rf, rng)
        for op in ("add", "mul", "div" if y.num else "add"):
            z = rf_arith(rf, op, x, y)
            assert z.den[-1] == rf.base.one
            if z.num:
                assert len(pk_gcd(rf.base, z.num, z.den)) == 1


def test_sigma_action(rf, sigma):
    k = rf.base
    t = rf.t_elem()
    st = sigma.apply(t, 1)
    assert st == rf.make((0, k.pow_(k.gen, 5)))  # a^5 * t
    t3 = rf.pow_(t, 3)
    assert sigma.apply(t3, 1) == t3  # a^15 = 1: t^3 is invariant
    assert sigma.mu == 3
    x = rand_rf(rf, random.Random(9))
    assert sigma.apply(x, sigma.mu) == x
    assert rf_sigma_pow(sigma, x, 0) == x


def test_sigma_is_homomorphism(rf, sigma):
    rng = random.Random(5)
    for _ in range(700):
        x, y = rand_rf(rf, rng), rand_rf(rf, rng)
        e = rng.randrange(0, 4)
        assert sigma.apply(rf.mul(x, y), e) == \
            rf.mul(sigma.apply(x, e), sigma.apply(y, e))


def test_ring_construction(RT16):
    assert RT16.mu == 3
    assert RT16.r == 9
    trivial = rat_skew_ring(GF(2, 4, modulus=cases_f16t.MODULUS),
                            GF(2, 4, modulus=cases_f16t.MODULUS).one)
    assert trivial.mu == 1


def test_sigma_scale_zero_rejected(rf):
    with pytest.raises(FieldError):
        RatSigma(rf, rf.base.zero)


def test_expand_contract_coefficients(RT16):
    rng = random.Random(7)
    for _ in range(300):
        x = RT16.c_rand(rng)
        coords = RT16.expand_coeff(x)
        assert len(coords) == RT16.mu
        for kappa in coords:
            assert RT16.sigma_map.is_invariant(kappa)
        assert RT16.contract_coeff(coords) == x


def test_bound_degree_cap_and_membership(RT16):
    rng = random.Random(2)
    for _ in range(12):
        f = RT16.random_poly(rng.randrange(1, 4), rng, monic=False)
        fs = bound_v2(f)
        assert fs.deg <= 3 * f.deg
        assert is_twosided(fs)
        cf = centralize(fs)
        for kappa in cf.fhat.c:
            assert RT16.sigma_map.is_invariant(kappa)
        assert decentralize(cf) == fs


def test_bound_v1_equals_v2_over_ratfun(RT16):
    from skewpoly.bound import bound_v1
    rng = random.Random(19)
    for _ in range(4):
        f = RT16.random_poly(rng.randrange(1, 3), rng, monic=False)
        assert bound_v1(f) == bound_v2(f)


def test_k_section_rejects_noninvariant(RT16):
    t = RT16.rf.t_elem()
    with pytest.raises(FieldError):
        RT16.k_section(t)
    t3 = RT16.rf.pow_(t, 3)
    assert RT16.k_section(t3) == t3
