"""Closed-form bound evaluators: pinned values, domains, and the exact
first-moment oracle for the cycle-count lower bound."""

import math

import pytest

from critdigraph.bounds import (
    BoundParams,
    DELTA_MAX,
    FACTOR2_C_LIMIT,
    LOG_2,
    chernoff_g,
    component_prob_bound,
    expected_large_components,
    harmonic_cycle_bound,
    janson_delta_upper,
    janson_mu_lower,
    lower_tail_bound,
    lower_tail_bound_center,
    partition_constants,
    tau1_bound,
    upper_tail_bound,
)
from critdigraph.enumeration import ENUMERATION_CONSTANT
from critdigraph.errors import ParameterError

REL = 1e-12


def close(a, b, rel=REL):
    return a == pytest.approx(b, rel=rel)


# --- lower tail ---------------------------------------------------------

def test_lower_tail_values():
    value, valid = lower_tail_bound(1.0 / 800.0, 0.0)
    assert close(value, 1.0222379051983623)
    assert valid
    assert close(lower_tail_bound(1.0 / 800.0, 0.0)[0],
                 2.0 * math.e * (1.0 / 800.0) ** 0.25)


def test_lower_tail_domain():
    # the endpoint delta = 1/800 itself is allowed
    lower_tail_bound(DELTA_MAX, 0.0)
    for bad in (0.0, -0.1, 1.0 / 800.0 + 1e-9, 0.5):
        with pytest.raises(ParameterError):
            lower_tail_bound(bad, 0.0)


def test_lower_tail_validity_flag():
    # the assertion needs delta <= (log 2)^2 / (4 lambda^2)
    delta = 1.0 / 800.0
    lam_crit = LOG_2 / (2.0 * math.sqrt(delta))
    assert lower_tail_bound(delta, lam_crit * 0.999)[1]
    assert not lower_tail_bound(delta, lam_crit * 1.001)[1]
    assert not lower_tail_bound(delta, -lam_crit * 1.001)[1]
    assert lower_tail_bound(delta, 0.0)[1]


def test_center_bound():
    assert close(lower_tail_bound_center(1.0 / 800.0), 0.07071067811865475)
    assert close(lower_tail_bound_center(0.25), 1.0)
    for bad in (0.0, 1.0, -0.2):
        with pytest.raises(ParameterError):
            lower_tail_bound_center(bad)


# --- upper tail ---------------------------------------------------------

def test_upper_tail_values():
    assert close(upper_tail_bound(4.0, 0.0), 15483846.08929519)
    # default constants are zeta = 800*C/0.18 and eta = 0.03
    zeta = 8.0 * 100.0 * ENUMERATION_CONSTANT / (3.0 * 0.06)
    assert close(upper_tail_bound(1.0, 0.0), zeta * math.exp(-0.03))
    # negative lambda clamps to zero in the exponent
    assert upper_tail_bound(4.0, -3.0) == upper_tail_bound(4.0, 0.0)
    assert upper_tail_bound(4.0, 0.5) > upper_tail_bound(4.0, 0.0)


def test_upper_tail_validation():
    with pytest.raises(ParameterError):
        upper_tail_bound(0.0, 0.0)
    with pytest.raises(ParameterError):
        upper_tail_bound(1.0, 0.0, zeta=-1.0)
    with pytest.raises(ParameterError):
        upper_tail_bound(1.0, 0.0, eta=0.0)


# --- Janson quantities --------------------------------------------------

def exact_window_mu(delta, lam, n):
    """First moment of the cycle count over the window, by the literal
    formula C(n,m)*(m-1)!*p^m summed over integer lengths.  The sum
    starts at ceil(delta*n^(1/3)) even when that is 1; the length-1 term
    n*p is part of the counting identity the bound is derived from.
    """
    c = n ** (1.0 / 3.0)
    p = 1.0 / n + lam * n ** (-4.0 / 3.0)
    lo = math.ceil(round(delta * c, 9))
    hi = math.floor(math.sqrt(delta) * c)
    total = 0.0
    for m in range(lo, hi + 1):
        term = 1.0 / m
        for j in range(m):
            term *= (n - j) * p
        total += term
    return total


@pytest.mark.parametrize("delta,lam", [
    (0.01, 0.0), (0.04, 0.0), (0.09, 0.0),
    (0.01, 0.5), (0.04, 1.0), (0.09, 2.0),
    (0.01, -1.0), (0.04, -2.0),
])
def test_mu_lower_is_a_lower_bound(delta, lam):
    n = 10**6
    assert janson_mu_lower(delta, lam, n) <= exact_window_mu(delta, lam, n)


def test_mu_lower_values():
    assert close(janson_mu_lower(0.01, 0.0, 10**6), math.log(100.0) / 2.0)
    # scaling: e^(lam*delta/2) above, e^(2 sqrt(delta) lam) below zero
    base = janson_mu_lower(0.04, 0.0, 10**6)
    assert close(janson_mu_lower(0.04, 1.0, 10**6), base * math.exp(0.02))
    assert close(janson_mu_lower(0.04, -1.0, 10**6), base * math.exp(-0.4))


def test_mu_lower_window_precondition():
    # needs delta*n^(1/3) >= 1; the check is exact on perfect cubes
    janson_mu_lower(0.01, 0.0, 10**6)
    with pytest.raises(ParameterError):
        janson_mu_lower(1.0 / 800.0, 0.0, 10**6)
    with pytest.raises(ParameterError):
        janson_mu_lower(0.5, 0.0, 7)
    with pytest.raises(ParameterError):
        janson_mu_lower(1.5, 0.0, 10**6)


def test_delta_literal_value():
    assert close(janson_delta_upper(1.0 / 800.0), 1.164657548421594)
    # its three building blocks
    delta = 1.0 / 800.0
    assert close(math.log(4.0 / delta) / 2.0, 4.035453044393909)
    assert close(math.expm1(432.0 * delta**1.5), 0.01927529848098386, rel=1e-10)
    assert close(23328.0 * math.e**2 * delta**2, 0.2693310948060222)
    # the literal form fails the log 2 budget at the theorem's delta
    assert janson_delta_upper(1.0 / 800.0) > LOG_2


def test_delta_n_corrected_values():
    expect = {
        2: 0.24745251980535676,
        10**3: 0.0804778728847474,
        10**6: 0.07781149504616779,
    }
    for n, want in expect.items():
        got = janson_delta_upper(1.0 / 800.0, 0.0, n, variant="n_corrected")
        assert close(got, want)
        assert got <= LOG_2


def test_delta_lambda_scaling():
    delta = 1.0 / 800.0
    base = janson_delta_upper(delta)
    up = janson_delta_upper(delta, lam=1.0)
    down = janson_delta_upper(delta, lam=-1.0)
    assert close(up, base * math.exp(2.0 * math.sqrt(delta)))
    assert close(down, base * math.exp(-delta))


def test_delta_validation():
    with pytest.raises(ParameterError):
        janson_delta_upper(0.0)
    with pytest.raises(ParameterError):
        janson_delta_upper(0.1, variant="exact")
    with pytest.raises(ParameterError):
        janson_delta_upper(0.1, variant="n_corrected")  # n missing
    with pytest.raises(ParameterError):
        janson_delta_upper(0.1, n=1, variant="n_corrected")


# --- exploration-time bounds --------------------------------------------

def test_tau1_bound_value():
    bound, slack = tau1_bound(900, 10**6, 1.0)
    assert close(bound, 0.06843623662333206)
    assert close(bound, 2.0 * math.exp(-3.375))
    assert close(slack, 0.81)


def test_tau1_bound_validation():
    with pytest.raises(ParameterError):
        tau1_bound(0, 10, 1.0)
    with pytest.raises(ParameterError):
        tau1_bound(11, 10, 1.0)
    with pytest.raises(ParameterError):
        tau1_bound(2, 10, math.sqrt(2.0))
    with pytest.raises(ParameterError):
        tau1_bound(2, 10, 0.0)


def test_factor2_limit_is_wider_than_sqrt2():
    assert close(FACTOR2_C_LIMIT, math.sqrt(2.0 * (1.0 + 3.0 * math.sqrt(6.0))))
    assert FACTOR2_C_LIMIT > math.sqrt(2.0)


def test_partition_constants():
    beta, gamma = partition_constants()
    assert beta == 91
    assert close(gamma, 0.06375005918560595)
    # the i = 1 cell alone would give a much larger exponent; the min is
    # attained in the interior of the partition
    first_cell = (2.0 - 0.025**2) ** 2 / (8.0 * 0.025)
    assert close(first_cell, 19.987501953124998)
    assert gamma + 1.0 < first_cell


def test_partition_constants_top_clamp():
    # with r*eps = 1.025, below the interior minimum of 1.06375..., the
    # top cell clamps and gamma = r*eps - 1
    beta, gamma = partition_constants(epsilon=0.025, r=41)
    assert beta == 83
    assert close(gamma, 0.025, rel=1e-10)


def test_partition_validation():
    with pytest.raises(ParameterError):
        partition_constants(epsilon=0.0)
    with pytest.raises(ParameterError):
        partition_constants(r=0)
    with pytest.raises(ParameterError):
        partition_constants(epsilon=0.01, r=45)  # r*eps < 1


def test_component_prob_bound():
    beta, gamma, bound = component_prob_bound(900, 10**6)
    assert beta == 91
    assert close(gamma, 0.06375005918560595)
    assert close(bound, 3.058864997902776e-11)
    with pytest.raises(ParameterError):
        component_prob_bound(0, 10)
    with pytest.raises(ParameterError):
        component_prob_bound(20, 10)


# --- expected count of large components ---------------------------------

def test_expected_large_closed_form():
    est = expected_large_components(4.0, 10**6, 0.0)
    assert close(est.value, 15483846.08929519)
    assert close(est.zeta, 19683826.184723914)
    assert close(est.eta, 0.03)
    assert est.valid
    # at lambda = 0 this matches the default upper tail bound exactly
    assert close(est.value, upper_tail_bound(4.0, 0.0))


def test_expected_large_modes_agree():
    kwargs = dict(A=4.0, n=10**6, lam=0.0)
    s = expected_large_components(mode="sum", **kwargs).value
    i = expected_large_components(mode="integral", **kwargs).value
    cf = expected_large_components(mode="closed_form", **kwargs).value
    assert abs(s - i) / i < 0.02
    # truncating at (log n)^2 only loses mass, up to quadrature noise
    assert i <= cf * (1.0 + 1e-9)
    est40 = expected_large_components(40.0, 10**6, 0.0, mode="integral")
    assert close(est40.value, expected_large_components(
        40.0, 10**6, 0.0).value, rel=1e-8)


def test_expected_large_positive_lambda():
    cf0 = expected_large_components(4.0, 10**6, 0.0)
    cfp = expected_large_components(4.0, 10**6, 0.1)
    # the lam > 0 closed form swaps 8 -> 10 in the prefactor and adds lam*A
    assert close(cfp.value / cf0.value, 1.25 * math.exp(0.4))
    # validity knee: A >= (20 lam / (3 gamma))^2
    assert not cfp.valid
    knee = (20.0 * 0.1 / (3.0 * 0.06)) ** 2
    assert expected_large_components(knee + 1.0, 10**6, 0.1).valid
    assert expected_large_components(4.0, 10**6, -2.0).valid


def test_expected_large_empty_ranges():
    # A beyond (log n)^2 leaves nothing to count in truncated modes
    assert expected_large_components(200.0, 10**6, 0.0, mode="sum").value == 0.0
    assert expected_large_components(200.0, 10**6, 0.0, mode="integral").value == 0.0


def test_expected_large_validation():
    with pytest.raises(ParameterError):
        expected_large_components(0.0, 10**6, 0.0)
    with pytest.raises(ParameterError):
        expected_large_components(4.0, 10**6, 0.0, gamma=0.0)
    with pytest.raises(ParameterError):
        expected_large_components(4.0, 10**6, 0.0, mode="montecarlo")
    with pytest.raises(ParameterError):
        expected_large_components(4.0, 1, 0.0, mode="sum")


# --- harmonic cycle bound -----------------------------------------------

def test_harmonic_values():
    assert close(harmonic_cycle_bound(10**6, 0.0), 6.57055271824005)
    assert close(harmonic_cycle_bound(10**6, 1.0), 2.0 * math.log(10**6) ** 2)


def test_harmonic_is_small_order_of_sixth_root():
    # both branches are o(n^(1/6)): tiny ratios already at n = 10^30
    sixth = 10.0**5
    assert harmonic_cycle_bound(10**30, 0.0) / sixth < 0.0003
    assert harmonic_cycle_bound(10**30, 1.0) / sixth < 0.096


def test_harmonic_log_cap():
    # the lam = 0 expression is clamped at log n
    for n in (3, 4, 10, 10**6):
        assert harmonic_cycle_bound(n, 0.0) <= math.log(n)


def test_harmonic_validation():
    with pytest.raises(ParameterError):
        harmonic_cycle_bound(2, 0.0)
    with pytest.raises(ParameterError):
        harmonic_cycle_bound(10**6, -0.5)


# --- Chernoff rate -------------------------------------------------------

def test_chernoff_value():
    assert close(chernoff_g(0.2, 0.4), 0.09151622184943578)
    assert chernoff_g(0.3, 0.3) == 0.0


def test_chernoff_quadratic_minorant():
    # g(x, p) >= (p - x)^2 / (2p) on the lower tail x < p
    for p in (0.1, 0.4, 0.7, 0.95):
        for k in range(1, 20):
            x = p * k / 20.0
            assert chernoff_g(x, p) >= (p - x) ** 2 / (2.0 * p) - 1e-15


def test_chernoff_validation():
    for x, p in [(0.0, 0.5), (1.0, 0.5), (0.5, 0.0), (0.5, 1.0), (-0.1, 0.5)]:
        with pytest.raises(ParameterError):
            chernoff_g(x, p)


# --- parameter bundle ----------------------------------------------------

def test_bound_params_defaults():
    bp = BoundParams()
    assert bp.beta == 91.0
    assert close(bp.gamma, 0.06375005918560595)
    assert close(bp.zeta, 16858602.539597157)
    assert close(bp.eta, bp.gamma / 2.0)
    assert bp.lam_plus == 0.0


def test_bound_params_explicit_constants():
    bp = BoundParams(beta=100.0, gamma=0.06)
    assert close(bp.zeta, 19683826.184723914)
    assert close(bp.eta, 0.03)
    assert BoundParams(lam=-2.0).lam_plus == 0.0
    assert BoundParams(lam=1.5).lam_plus == 1.5


def test_bound_params_validation():
    with pytest.raises(ParameterError):
        BoundParams(delta=1.5)
    with pytest.raises(ParameterError):
        BoundParams(A=0.0)
    with pytest.raises(ParameterError):
        BoundParams(gamma=-0.1)
    with pytest.raises(ParameterError):
        BoundParams(beta=50.0)  # below 2r + 1 = 91
