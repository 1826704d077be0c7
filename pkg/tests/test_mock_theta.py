import pytest
from hypothesis import given, settings, strategies as st

from qparity.claims import is_triangular
from qparity.mock_theta import MOCK_THETA, MOCK_THETA_NAMES, mock_theta_series, mu2_appell_lerch
from qparity.products import euler_inf, pochhammer_inf
from qparity.series import coeff, inv, mul, reduce_mod

# Printed expansions, exponent -> coefficient from q^0 up to the last shown power.
PRINTED = {
    "mu2": [1, -1, 1, 2, -1, -4, 1, 5, -2, -5, 4, 7],
    "f3": [1, 1, -2, 3, -3, 3, -5, 7, -6, 6],
    "phi3": [1, 1, 0, -1, 1, 1, -1, -1, 0, 2],
    "chi3": [1, 1, 1, 0, 0, 0, 1, 1, 0, 0, -1],
    "phi6": [1, -1, 2, -1, 1, -3, 3, -3, 4, -4, 6, -6],
    "psi6": [0, 1, -1, 1, -2, 3, -2, 2, -4, 5],
    "lambda6": [1, -1, 3, -5, 6, -7, 11, -16, 18],
    "two_mu6": [1, 2, -3, 4, -4, 6, -11],
    "U0": [1, 1, 1, 0, 1, 0, -1, 1, 0, 1],
    "S0": [1, 1, 1, -1, 0, 2, 0, -1, 0, 1],
    "S1": [1, 0, 0, 1, 1, -1, -1, 1, 2],
    "X10": [1, -1, 1, 0, 1, -2, 1, -1, 1, -2],
    "chi10": [0, 1, -1, 1, -2, 2, -1, 2, -3, 3],
}


def test_every_function_has_a_printed_prefix():
    assert set(PRINTED) == set(MOCK_THETA_NAMES)


@pytest.mark.parametrize("name", sorted(PRINTED))
def test_printed_prefix(name):
    want = PRINTED[name]
    f = mock_theta_series(name, len(want))
    assert f.dense(0, len(want)) == want


@pytest.mark.parametrize("name", sorted(PRINTED))
def test_precision_is_honored(name):
    short = mock_theta_series(name, 40)
    long = mock_theta_series(name, 120)
    assert short.prec == 40 and short == long


def test_unknown_name():
    with pytest.raises(ValueError):
        mock_theta_series("mu7", 10)
    with pytest.raises(ValueError):
        mock_theta_series("mu2", 0)


def test_mu2_mod_two_reduction_of_prefix():
    assert mock_theta_series("mu2", 5, 2).dense(0, 5) == [1, 1, 1, 0, 1]


def test_appell_lerch_matches_eulerian_sum():
    assert mu2_appell_lerch(200).identical(mock_theta_series("mu2", 200))


def test_appell_lerch_long_range():
    assert mu2_appell_lerch(600) == mock_theta_series("mu2", 600)


def test_mu2_parity_is_a_product():
    # mu2 = (-q; q^2) / (q^2; q^2) mod 2
    N = 400
    prod = mul(pochhammer_inf(1, 2, True, N, 2), inv(euler_inf(2, N, 2)))
    assert mock_theta_series("mu2", N, 2) == prod


def test_f3_and_chi3_agree_mod_three():
    N = 300
    assert mock_theta_series("f3", N, 3) == mock_theta_series("chi3", N, 3)


def test_lambda6_parity_relations():
    # odd part follows psi6, even part is odd exactly at triangular indices
    N = 200
    lam = mock_theta_series("lambda6", 2 * N + 1, 2)
    psi = mock_theta_series("psi6", N + 1, 2)
    assert all(coeff(lam, 2 * n - 1) == coeff(psi, n) for n in range(1, N + 1))
    assert all(coeff(lam, 2 * n) == int(is_triangular(n)) for n in range(N + 1))


def test_summation_stops_at_precision():
    spec = MOCK_THETA["mu2"]
    ns = [n for n, _, _ in spec.terms(50)]
    assert ns == list(range(8))  # 7^2 = 49 < 50 <= 8^2


def test_summand_exponents_must_not_decrease():
    from qparity.mock_theta import EulerianSum

    bad = EulerianSum(lambda n: 10 - n)
    with pytest.raises(AssertionError):
        list(bad.terms(20))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(MOCK_THETA_NAMES), st.integers(1, 150), st.sampled_from([2, 3]))
def test_modular_expansion_matches_exact(name, prec, m):
    assert mock_theta_series(name, prec, m).identical(reduce_mod(mock_theta_series(name, prec), m))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(MOCK_THETA_NAMES), st.integers(1, 80), st.integers(1, 80))
def test_truncation_consistency(name, p1, p2):
    a, b = mock_theta_series(name, p1), mock_theta_series(name, p2)
    assert a == b
    assert coeff(a, min(p1, p2) - 1) == coeff(b, min(p1, p2) - 1)
