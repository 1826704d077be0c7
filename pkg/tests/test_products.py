import pytest
from hypothesis import given, settings, strategies as st

from qparity.catalog import SeriesCache, UnknownSeriesError, build, is_known
from qparity.products import (
    HAUPTMODUL_ETA,
    LEVELS,
    EtaQuotientError,
    borwein_a,
    borwein_c,
    delta,
    divisor_sigma,
    eisenstein_E4,
    eisenstein_E12hat,
    eta_quotient,
    euler_inf,
    hauptmodul,
    p10_gf,
    partition_gf,
    pochhammer_fin,
    pochhammer_inf,
    rr_fraction_F,
    theta_psi,
)
from qparity.series import add, coeff, inv, mul, power, reduce_mod, scale, shift, sub, substitute_power

import oracles


# -- Pochhammer and Euler products ----------------------------------------------


@pytest.mark.parametrize("k", range(1, 26))
def test_pentagonal_matches_literal_product(k):
    assert euler_inf(k, 300) == pochhammer_inf(k, k, False, 300)
    assert list(euler_inf(k, 120).dense(0, 120)) == oracles.naive_euler(k, 120)


def test_pentagonal_to_2000_terms():
    f = euler_inf(1, 2000)
    assert f.dense(0, 2000) == oracles.naive_euler(1, 2000)
    support = {n for n in range(2000) if coeff(f, n)}
    assert support == oracles.pentagonal_exponents(2000)


def test_pentagonal_small_support():
    assert {n for n in range(13) if coeff(euler_inf(1, 13), n)} == {0, 1, 2, 5, 7, 12}


def test_negated_pochhammer():
    assert pochhammer_inf(1, 2, True, 6).dense(0, 6) == [1, 1, 0, 1, 1, 1]
    exps = list(range(1, 40, 2))
    assert pochhammer_inf(1, 2, True, 40).dense(0, 40) == oracles.naive_product(exps, [1] * len(exps), 40)


def test_pochhammer_rejects_zero_step():
    with pytest.raises(ValueError):
        pochhammer_inf(1, 0, False, 10)


def test_finite_pochhammer():
    # (q; q)_3 = (1 - q)(1 - q^2)(1 - q^3)
    expected = oracles.naive_product([1, 2, 3], [-1, -1, -1], 10)
    assert pochhammer_fin(1, 1, 3, False, 10).dense(0, 10) == expected
    assert pochhammer_fin(1, 1, 0, False, 4).dense(0, 4) == [1, 0, 0, 0]
    # a factor (1 - q^0) kills the product
    assert pochhammer_fin(0, 1, 2, False, 5).is_zero()


def test_cube_of_euler_is_jacobi_sum():
    assert power(euler_inf(1, 400), 3).dense(0, 400) == oracles.jacobi_cube(400)


def test_inverse_euler_is_partitions():
    f = partition_gf(61)
    assert [coeff(f, n) for n in range(61)] == [oracles.partition_count(n, n) for n in range(61)]
    assert f.dense(0, 10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_p10_counts_partitions_avoiding_multiples_of_ten():
    f = p10_gf(31)
    for n in range(31):
        assert coeff(f, n) == len(oracles.partitions(n, forbid=lambda p: p % 10 == 0))
    assert coeff(f, 10) == 41


# -- eta quotients and hauptmoduln -------------------------------------------------


def test_eta_quotient_needs_integral_q_power():
    with pytest.raises(EtaQuotientError):
        eta_quotient([(1, 1)], 10)


def test_eta_quotient_precision_must_exceed_leading_exponent():
    with pytest.raises(ValueError):
        eta_quotient([(1, 24)], 1)


@pytest.mark.parametrize("N", sorted(HAUPTMODUL_ETA))
def test_table_quotients_match_naive_expansion(N):
    spec = HAUPTMODUL_ETA[N]
    f = hauptmodul(N, 40)
    s = sum(k * r for k, r in spec) // 24
    assert s == -1
    inner = oracles.naive_eta_quotient(spec, 41)
    assert [coeff(f, n) for n in range(-1, 40)] == inner


@pytest.mark.parametrize("N", LEVELS)
def test_hauptmodul_leading_term(N):
    f = hauptmodul(N, 50)
    assert f.order == -1 and coeff(f, -1) == 1 and f.prec == 50


def test_j1_prefix():
    f = hauptmodul(1, 3)
    assert [coeff(f, n) for n in range(-1, 3)] == [1, 744, 196884, 21493760]


def test_j2_prefix():
    f = hauptmodul(2, 3)
    assert [coeff(f, n) for n in range(-1, 3)] == [1, -24, 276, -2048]


def test_j6_prefix():
    f = hauptmodul(6, 6)
    assert [coeff(f, n) for n in range(-1, 6)] == [1, 3, 6, 4, -3, -12, -8]


def test_unknown_level():
    with pytest.raises(ValueError):
        hauptmodul(11, 10)


def test_j1_parity_outside_seven_mod_eight():
    f = reduce_mod(hauptmodul(1, 2000), 2)
    assert all(coeff(f, n) == 0 for n in range(1, 2000) if n % 8 != 7)


# -- Eisenstein series -------------------------------------------------------------


def test_divisor_sigma_against_direct_sum():
    for k in (1, 3, 11):
        sig = divisor_sigma(k, 301)
        assert sig[0] == 0
        assert sig[1:] == [oracles.sigma_direct(k, n) for n in range(1, 301)]


def test_eisenstein_prefixes():
    assert eisenstein_E4(3).dense(0, 3) == [1, 240, 2160]
    assert eisenstein_E12hat(3).dense(0, 3) == [691, 65520, 134250480]


def test_E4_is_one_mod_two():
    f = reduce_mod(eisenstein_E4(500), 2)
    assert f.dense(0, 500) == [1] + [0] * 499


def test_delta_prefix_and_oracle():
    assert delta(5).dense(0, 5) == [0, 1, -24, 252, -1472]
    naive = oracles.naive_power(oracles.naive_euler(1, 60), 24, 60)
    assert [coeff(delta(61), n + 1) for n in range(60)] == naive


def test_weight_twelve_cusp_form_is_multiple_of_delta():
    # 691 E4^3 - 691 E12 has no constant term, so it is 432000 Delta
    N = 200
    cusp = sub(scale(power(eisenstein_E4(N), 3), 691), eisenstein_E12hat(N))
    assert cusp == scale(delta(N), 432000)


@pytest.mark.parametrize("a,slope,const", [(-3, -2072, 1296000), (-7, -4836, 3024000)])
def test_E12_relations_exact(a, slope, const):
    # (E4^3 + a * 691 E12) / Delta = slope * j1 + const
    N = 300
    top = add(power(eisenstein_E4(N + 1), 3), scale(eisenstein_E12hat(N + 1), a))
    lhs = mul(top, inv(delta(N + 2)))
    rhs = scale(hauptmodul(1, N), slope) + const
    assert lhs == rhs and min(lhs.prec, rhs.prec) >= N


# -- cubic theta functions ---------------------------------------------------------


def test_borwein_prefixes():
    assert borwein_a(5).dense(0, 5) == [1, 6, 0, 6, 6]
    assert borwein_c(8).dense(0, 8) == [3, 3, 6, 0, 6, 3, 6, 0]


def test_borwein_against_large_box():
    assert borwein_a(200).dense(0, 200) == oracles.lattice_sum(200, linear=False)
    assert borwein_c(200).dense(0, 200) == oracles.lattice_sum(200, linear=True)


def test_c_times_euler_is_three_euler_cubed_at_q3():
    N = 600
    lhs = mul(borwein_c(N), euler_inf(1, N))
    rhs = scale(power(euler_inf(3, N), 3), 3)
    assert lhs == rhs


def test_cubic_dissection_of_euler_cube():
    # (q)^3 / (q^3) = a(q^3) - q c(q^3)
    N = 600
    lhs = mul(power(euler_inf(1, N), 3), inv(euler_inf(3, N)))
    rhs = sub(substitute_power(borwein_a(N // 3 + 1), 3), shift(substitute_power(borwein_c(N // 3 + 1), 3), 1))
    assert lhs == rhs


def test_theta_psi_is_triangular_indicator():
    f = theta_psi(200)
    tri = set(oracles.triangular_numbers_upto(199))
    assert [coeff(f, n) for n in range(200)] == [int(n in tri) for n in range(200)]


def test_rogers_ramanujan_fraction():
    f = rr_fraction_F(200)
    assert f.dense(0, 6) == [1, -1, 1, 0, -1, 1]
    num = [e for e in range(1, 200) if e % 5 in (1, 4)]
    den = [e for e in range(1, 200) if e % 5 in (2, 3)]
    top = oracles.naive_product(num, [-1] * len(num), 200)
    bottom = oracles.naive_inverse(oracles.naive_product(den, [-1] * len(den), 200), 200)
    assert f.dense(0, 200) == oracles.poly_mul(top, bottom, 200)


# -- modular constructors agree with exact-then-reduce ---------------------------------


@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from(LEVELS),
    st.integers(1, 300),
    st.sampled_from([2, 3, 5, 7]),
)
def test_hauptmodul_mod_path_matches_exact(N, prec, m):
    assert hauptmodul(N, prec, m).identical(reduce_mod(hauptmodul(N, prec), m))


# -- catalog ---------------------------------------------------------------------


def test_catalog_names():
    for name in ("j1", "j25", "E4", "mu2", "euler_7", "poch_1_2", "negpoch_3_5"):
        assert is_known(name)
    for name in ("j11", "euler_0", "poch_0_1", "nope"):
        assert not is_known(name)
    with pytest.raises(UnknownSeriesError):
        build("j11", 10)


def test_catalog_patterns():
    assert build("euler_3", 30) == euler_inf(3, 30)
    assert build("negpoch_1_2", 30) == pochhammer_inf(1, 2, True, 30)


def test_cache_truncation_is_identical_to_fresh_build():
    cache = SeriesCache()
    for name in ("j1", "j6", "mu2", "borwein_c", "E12hat"):
        for m in (None, 2):
            cache.get(name, 400, m)
            for p in (1, 37, 200, 400):
                assert cache.get(name, p, m).identical(build(name, p, m))


def test_exact_cache_matches_modular_cache():
    fast, slow = SeriesCache(), SeriesCache(exact=True)
    for name in ("j1", "j3", "j5", "f3", "phi6", "rr_F", "p10_gf"):
        assert fast.get(name, 300, 2).identical(slow.get(name, 300, 2))
