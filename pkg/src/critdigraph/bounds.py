"""Closed-form evaluators for the tail bounds and their constants.

Everything here is a deterministic pure function: tail bounds for the
largest-component size in the critical window, the first-moment and
overlap quantities driving the Janson argument, the exploration-time
bound and its partition constants, the expected count of large complex
components (with the constants zeta and eta it produces), and the
Chernoff rate function.  Monte Carlo counterparts live in montecarlo.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .enumeration import ENUMERATION_CONSTANT
from .errors import ParameterError

__all__ = [
    "LOG_2",
    "DELTA_MAX",
    "FACTOR2_C_LIMIT",
    "BoundParams",
    "LargeComponentsEstimate",
    "lower_tail_bound",
    "lower_tail_bound_center",
    "upper_tail_bound",
    "janson_mu_lower",
    "janson_delta_upper",
    "tau1_bound",
    "partition_constants",
    "component_prob_bound",
    "expected_large_components",
    "harmonic_cycle_bound",
    "chernoff_g",
]

LOG_2 = math.log(2.0)

# the lower-tail theorem is stated for delta up to 1/800
DELTA_MAX = 1.0 / 800.0

# the factor-2 merge of the two exploration failure events actually
# holds on this wider c-range; exposed for diagnostics only
FACTOR2_C_LIMIT = math.sqrt(2.0 * (1.0 + 3.0 * math.sqrt(6.0)))


def lower_tail_bound(delta: float, lam: float) -> tuple[float, bool]:
    """Tail bound 2e*delta^(1/4) for P(largest component < delta*n^(1/3)).

    The flag reports whether delta <= (log 2)^2 / (4 lambda^2), the
    condition under which the bound is asserted (always true at
    lambda = 0).
    """
    if not 0.0 < delta <= DELTA_MAX:
        raise ParameterError(
            f"delta must lie in (0, 1/800], got {delta}"
        )
    valid = True if lam == 0.0 else delta <= LOG_2**2 / (4.0 * lam * lam)
    return 2.0 * math.e * delta**0.25, valid


def lower_tail_bound_center(delta: float) -> float:
    """Sharper lambda = 0 tail bound 2*delta^(1/2)."""
    if not 0.0 < delta < 1.0:
        raise ParameterError(f"delta must lie in (0, 1), got {delta}")
    return 2.0 * math.sqrt(delta)


def upper_tail_bound(A: float, lam: float, zeta: float | None = None,
                     eta: float | None = None) -> float:
    """Tail bound zeta * e^(-eta*A^(3/2) + max(lam,0)*A) for components >= A*n^(1/3)."""
    if A <= 0.0:
        raise ParameterError(f"A must be positive, got {A}")
    if zeta is None:
        zeta = 8.0 * 100.0 * ENUMERATION_CONSTANT / (3.0 * 0.06)
    if eta is None:
        eta = 0.03
    if zeta <= 0.0 or eta <= 0.0:
        raise ParameterError("zeta and eta must be positive")
    return zeta * math.exp(-eta * A**1.5 + max(lam, 0.0) * A)


def janson_mu_lower(delta: float, lam: float, n: int) -> float:
    """Lower bound on the expected number of cycles with length in
    [delta*n^(1/3), delta^(1/2)*n^(1/3)].

    log(1/delta)/2 at lambda = 0, scaled by e^(lam*delta/2) for
    lam >= 0 and by e^(2*sqrt(delta)*lam) for lam < 0.
    """
    if not 0.0 < delta < 1.0:
        raise ParameterError(f"delta must lie in (0, 1), got {delta}")
    # delta*n^(1/3) >= 1 tested as delta^3*n >= 1 so a perfect cube such
    # as n = 10^6 does not fail through cube-root rounding
    if delta**3 * n < 1.0:
        raise ParameterError(
            f"window start delta*n^(1/3) = {delta * n ** (1.0 / 3.0):.4g} < 1;"
            " increase n or delta"
        )
    base = math.log(1.0 / delta) / 2.0
    factor = math.exp(lam * delta / 2.0) if lam >= 0.0 else math.exp(
        2.0 * math.sqrt(delta) * lam
    )
    return factor * base


def janson_delta_upper(delta: float, lam: float = 0.0, n: int | None = None,
                       variant: str = "literal") -> float:
    """Upper bound on the Janson overlap term Delta for the cycle count.

    The literal variant is (log(4/delta)/2) * (e^(432*delta^(3/2)) - 1
    + 23328*e^2*delta^2); it exceeds log 2 at delta = 1/800.  The
    n_corrected variant restores the n^(-2/3) factor that the overlap
    term's cubic sum carries, which the literal expression drops, giving
    (log(4/delta)/2) * (e^(432*delta^(3/2)) - 1) + 23328*e^2*delta^2*n^(-2/3);
    this stays below log 2 for every n >= 2.  For lam != 0 the whole
    quantity is scaled by e^(2*sqrt(delta)*lam) when lam >= 0 and by
    e^(delta*lam) when lam < 0.
    """
    if not 0.0 < delta < 1.0:
        raise ParameterError(f"delta must lie in (0, 1), got {delta}")
    if variant not in ("literal", "n_corrected"):
        raise ParameterError(
            f"variant must be 'literal' or 'n_corrected', got {variant!r}"
        )
    prefactor = math.log(4.0 / delta) / 2.0
    e_term = math.expm1(432.0 * delta**1.5)
    quad = 23328.0 * math.e**2 * delta**2
    if variant == "literal":
        value = prefactor * (e_term + quad)
    else:
        if n is None:
            raise ParameterError("variant 'n_corrected' requires n")
        if n < 2:
            raise ParameterError(f"n must be >= 2, got {n}")
        value = prefactor * e_term + quad * float(n) ** (-2.0 / 3.0)
    factor = math.exp(2.0 * math.sqrt(delta) * lam) if lam >= 0.0 else math.exp(
        delta * lam
    )
    return factor * value


def tau1_bound(m: int, n: int, c: float) -> tuple[float, float]:
    """Bound 2*e^(-((2-c^2)^2/(8c)) * m^(3/2)/sqrt(n)) on early exploration death.

    Returns (bound, slack) where slack = m^2/n is the exponent of the
    unspecified e^(O(m^2/n)) envelope, left to the caller to fold in.
    """
    if not 1 <= m <= n:
        raise ParameterError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not 0.0 < c < math.sqrt(2.0):
        raise ParameterError(f"c must lie in (0, sqrt(2)), got {c}")
    coeff = (2.0 - c * c) ** 2 / (8.0 * c)
    bound = 2.0 * math.exp(-coeff * m**1.5 / math.sqrt(n))
    return bound, m * m / n


def partition_constants(epsilon: float = 0.025, r: int = 45) -> tuple[int, float]:
    """Constants (beta, gamma) from the r-part partition of exploration scales.

    beta = 2r + 1 counts the union-bound terms; gamma is the worst
    exponent across the partition cells, min over i of
    (i-1)*eps + (2 - i^2 eps^2)^2/(8 i eps), clamped by the top cell's
    r*eps, minus 1.
    """
    if epsilon <= 0.0:
        raise ParameterError(f"epsilon must be positive, got {epsilon}")
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    if r * epsilon < 1.0:
        raise ParameterError(
            f"partition must cover the unit scale: r*epsilon = {r * epsilon} < 1"
        )
    interior = min(
        (i - 1) * epsilon + (2.0 - (i * epsilon) ** 2) ** 2 / (8.0 * i * epsilon)
        for i in range(1, r + 1)
    )
    gamma = min(interior, r * epsilon) - 1.0
    return 2 * r + 1, gamma


def component_prob_bound(m: int, n: int, epsilon: float = 0.025,
                         r: int = 45) -> tuple[int, float, float]:
    """Bound beta*e^(-(1+gamma) * m^(3/2)/sqrt(n)) on P(some component of
    size ~m fails certification), with (beta, gamma) derived from the
    partition.  Returns (beta, gamma, bound)."""
    if not 1 <= m <= n:
        raise ParameterError(f"need 1 <= m <= n, got m={m}, n={n}")
    beta, gamma = partition_constants(epsilon, r)
    bound = beta * math.exp(-(1.0 + gamma) * m**1.5 / math.sqrt(n))
    return beta, gamma, bound


@dataclass(frozen=True)
class LargeComponentsEstimate:
    """Expected number of components at least A*n^(1/3) large, plus the
    tail constants it induces.

    ``valid`` is False when lam > 0 and A sits below the knee
    (20*lam/(3*gamma))^2 where the closed form's geometric-tail step
    needs A large compared to lam.
    """

    value: float
    zeta: float
    eta: float
    valid: bool


def _adaptive_simpson(f, a: float, b: float, tol: float) -> float:
    fa, fb = f(a), f(b)
    mid = 0.5 * (a + b)
    fm = f(mid)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def recurse(a, fa, b, fb, mid, fm, whole, tol, depth):
        lm = 0.5 * (a + mid)
        rm = 0.5 * (mid + b)
        flm, frm = f(lm), f(rm)
        left = (mid - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - mid) / 6.0 * (fm + 4.0 * frm + fb)
        if depth > 50 or abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return (recurse(a, fa, mid, fm, lm, flm, left, tol / 2.0, depth + 1)
                + recurse(mid, fm, b, fb, rm, frm, right, tol / 2.0, depth + 1))

    return recurse(a, fa, b, fb, mid, fm, whole, tol, 0)


def expected_large_components(A: float, n: int, lam: float,
                              beta: float = 100.0, gamma: float = 0.06,
                              C_enum: float = ENUMERATION_CONSTANT,
                              mode: str = "closed_form") -> LargeComponentsEstimate:
    """Expected count of complex components of size >= A*n^(1/3).

    sum mode adds (2*beta*C*sqrt(m/n)) * e^(-gamma*m^(3/2)/(2 sqrt(n))
    + max(lam,0)*m*n^(-1/3)) over integer m in [A*n^(1/3),
    n^(1/3)*(log n)^2]; integral mode integrates the continuous version
    in x = m*n^(-1/3) by adaptive Simpson (rel tol 1e-10); closed_form
    extends the limit to infinity, giving (8*beta*C/(3*gamma)) *
    e^(-gamma*A^(3/2)/2) at lam <= 0 and (10*beta*C/(3*gamma)) *
    e^(-gamma*A^(3/2)/2 + lam*A) at lam > 0.

    zeta = 8*beta*C/(3*gamma) and eta = gamma/2 are the induced
    upper-tail constants.
    """
    if A <= 0.0:
        raise ParameterError(f"A must be positive, got {A}")
    if gamma <= 0.0 or beta <= 0.0 or C_enum <= 0.0:
        raise ParameterError("beta, gamma, C_enum must be positive")
    if mode not in ("sum", "integral", "closed_form"):
        raise ParameterError(
            f"mode must be 'sum', 'integral' or 'closed_form', got {mode!r}"
        )
    if mode != "closed_form" and n < 2:
        raise ParameterError(f"n must be >= 2 for mode {mode!r}, got {n}")
    zeta = 8.0 * beta * C_enum / (3.0 * gamma)
    eta = gamma / 2.0
    valid = lam <= 0.0 or A >= (20.0 * lam / (3.0 * gamma)) ** 2
    lam_plus = max(lam, 0.0)
    if mode == "closed_form":
        if lam > 0.0:
            value = (10.0 * beta * C_enum / (3.0 * gamma)
                     * math.exp(-gamma * A**1.5 / 2.0 + lam * A))
        else:
            value = zeta * math.exp(-gamma * A**1.5 / 2.0)
        return LargeComponentsEstimate(value, zeta, eta, valid)
    cbrt = float(n) ** (1.0 / 3.0)
    upper_x = math.log(n) ** 2
    if mode == "sum":
        m_lo = math.ceil(A * cbrt)
        m_hi = math.floor(cbrt * upper_x)
        if m_hi < m_lo:
            return LargeComponentsEstimate(0.0, zeta, eta, valid)
        ms = np.arange(m_lo, m_hi + 1, dtype=np.float64)
        terms = (2.0 * beta * C_enum * np.sqrt(ms / n)
                 * np.exp(-gamma * ms**1.5 / (2.0 * math.sqrt(n))
                          + lam_plus * ms / cbrt))
        return LargeComponentsEstimate(float(terms.sum()), zeta, eta, valid)
    if upper_x <= A:
        return LargeComponentsEstimate(0.0, zeta, eta, valid)

    def integrand(x: float) -> float:
        return (2.0 * beta * C_enum * math.sqrt(x)
                * math.exp(-gamma * x**1.5 / 2.0 + lam_plus * x))

    # tolerance must scale with the integral's magnitude: an absolute
    # 1e-10 on a ~1e7 result asks for accuracy below double precision
    # and the refinement never converges
    scale = max(1.0, abs(upper_x - A) * max(integrand(A), integrand(upper_x)))
    value = _adaptive_simpson(integrand, A, upper_x, 1e-10 * scale)
    return LargeComponentsEstimate(value, zeta, eta, valid)


def harmonic_cycle_bound(n: int, lam: float) -> float:
    """Bound on the expected harmonic-weighted count of long cycles.

    log(n)/3 + log(log(log n)) + 1 at lam = 0 (never worse than log n);
    2*(log n)^(lam+1) for lam > 0.  Both are o(n^(1/6)).
    """
    if n < 3:
        raise ParameterError(f"n must be >= 3, got {n}")
    if lam < 0.0:
        raise ParameterError(f"lambda must be >= 0 here, got {lam}")
    if lam == 0.0:
        raw = math.log(n) / 3.0 + math.log(math.log(math.log(n))) + 1.0
        return min(raw, math.log(n))
    return 2.0 * math.log(n) ** (lam + 1.0)


def chernoff_g(x: float, p: float) -> float:
    """Binomial large-deviation rate x*log(x/p) + (1-x)*log((1-x)/(1-p))."""
    if not 0.0 < x < 1.0:
        raise ParameterError(f"x must lie in (0, 1), got {x}")
    if not 0.0 < p < 1.0:
        raise ParameterError(f"p must lie in (0, 1), got {p}")
    return x * math.log(x / p) + (1.0 - x) * math.log((1.0 - x) / (1.0 - p))


@dataclass(frozen=True)
class BoundParams:
    """Bundle of window and bound parameters with derived constants.

    Leaving beta/gamma unset derives them from (epsilon, r); leaving
    zeta/eta unset derives them from (beta, gamma, C_enum).
    """

    lam: float = 0.0
    delta: float | None = None
    A: float | None = None
    epsilon: float = 0.025
    r: int = 45
    C_enum: float = ENUMERATION_CONSTANT
    beta: float | None = None
    gamma: float | None = None
    zeta: float | None = None
    eta: float | None = None

    def __post_init__(self):
        if self.delta is not None and not 0.0 < self.delta < 1.0:
            raise ParameterError(f"delta must lie in (0, 1), got {self.delta}")
        if self.A is not None and self.A <= 0.0:
            raise ParameterError(f"A must be positive, got {self.A}")
        if self.beta is None or self.gamma is None:
            beta, gamma = partition_constants(self.epsilon, self.r)
            if self.beta is None:
                object.__setattr__(self, "beta", float(beta))
            if self.gamma is None:
                object.__setattr__(self, "gamma", gamma)
        if self.gamma <= 0.0:
            raise ParameterError(f"gamma must be positive, got {self.gamma}")
        if self.beta < 2 * self.r + 1:
            raise ParameterError(
                f"beta must be at least 2r+1 = {2 * self.r + 1}, got {self.beta}"
            )
        if self.zeta is None:
            object.__setattr__(
                self, "zeta", 8.0 * self.beta * self.C_enum / (3.0 * self.gamma)
            )
        if self.eta is None:
            object.__setattr__(self, "eta", self.gamma / 2.0)

    @property
    def lam_plus(self) -> float:
        return max(self.lam, 0.0)
