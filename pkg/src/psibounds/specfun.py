"""Core evaluation of log-gamma, digamma, polygamma and the Stirling ratio.

Everything is built from two convergent series with completely monotone,
cancellation-free terms:

    digamma gap   log(x) - psi(x)      = sum_{j>=0} kernel_r(x + j)
    Stirling term log of the ratio     = sum_{j>=0} kernel_w(x + j)

plus the defining series for polygamma.  Tails are enclosed by
:mod:`psibounds.tails`, truncated where the enclosure width drops to a
fraction of an ulp of the result, so the core functions are accurate to a
few ulps across (0, 1e6] and degrade gracefully beyond.

All functions are pure; there is no shared mutable state.
"""

from __future__ import annotations

import math

from . import kernels, tails
from .errors import DomainError

_EPS = 2.0**-52

#: Euler-Mascheroni constant, nearest double.  The oracle re-derives this
#: value independently from the series; the test suite cross-checks the two.
EULER_GAMMA = 0.5772156649015329

LOG_TWO_PI = math.log(2.0 * math.pi)
HALF_LOG_TWO_PI = LOG_TWO_PI / 2.0


def _check_domain(x: float, name: str = "x") -> float:
    x = float(x)
    if not (x > 0.0) or math.isinf(x) or math.isnan(x):
        raise DomainError(f"{name} must be a positive finite real, got {x!r}")
    return x


def _tail_start(x: float, scale: float) -> float:
    # First tail abscissa: far enough out that the enclosure width
    # (~scale / M^5) is below a quarter ulp of the expected magnitude.
    target = 0.25 * _EPS * max(0.5 / x, 1e-8)
    m = (scale / target) ** 0.2
    return max(x + 8.0, m, 64.0)


def digamma_gap(x: float) -> float:
    """log(x) - psi(x), evaluated without cancellation.

    Positive and strictly decreasing on (0, inf); ~1/(2x) for large x.
    Accurate to a few relative ulps, which the plain difference of
    log and digamma cannot achieve once x is large.
    """
    x = _check_domain(x)
    y_tail = _tail_start(x, 1.0 / 60.0)
    count = int(math.ceil(y_tail - x))
    lo, hi = tails.gap_tail(x + count)
    terms = [kernels.kernel_r(x + j) for j in range(count)]
    terms.append(0.5 * (lo + hi))
    return math.fsum(terms)


def binet_mu(x: float) -> float:
    """log of Gamma(x) / (sqrt(2 pi) x^(x-1/2) e^-x): the Stirling-series sum.

    Positive, strictly decreasing, ~1/(12x) for large x.
    """
    x = _check_domain(x)
    y_tail = _tail_start(x, 1.0 / 360.0)
    count = int(math.ceil(y_tail - x))
    lo, hi = tails.mu_tail(x + count)
    terms = [kernels.kernel_w(x + j) for j in range(count)]
    terms.append(0.5 * (lo + hi))
    return math.fsum(terms)


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0."""
    x = _check_domain(x)
    return math.log(x) - digamma_gap(x)


def polygamma(n: int, x: float) -> float:
    """psi^(n)(x) = (-1)^(n-1) n! sum_{k>=0} 1/(x+k)^(n+1), n >= 1, x > 0."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"polygamma order must be an integer >= 1, got {n!r}")
    x = _check_domain(x)
    # Enclosure width ~ (n+3)!/(n-1)! / (720 M^(n+4)); aim below a quarter
    # ulp of the leading magnitude max(x^-(n+1), M^-n / n).
    target = 0.25 * _EPS * max(x ** -(n + 1), 1e-300)
    scale = (n + 1) * (n + 2) * (n + 3) / 720.0
    m_tail = max(x + 8.0, 64.0, (scale / target) ** (1.0 / (n + 4)))
    count = int(math.ceil(m_tail - x))
    lo, hi = tails.polygamma_tail(x + count, n)
    terms = [(x + k) ** -(n + 1) for k in range(count)]
    terms.append(0.5 * (lo + hi))
    total = math.fsum(terms)
    sign = 1.0 if n % 2 == 1 else -1.0
    return sign * math.factorial(n) * total


def trigamma(x: float) -> float:
    """psi'(x), the first derivative of digamma."""
    return polygamma(1, x)


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0.

    Satisfies log_gamma(x+1) = log_gamma(x) + log(x) to ulp-scale accuracy.
    """
    x = _check_domain(x)
    return math.fsum(
        [binet_mu(x), (x - 0.5) * math.log(x), -x, HALF_LOG_TWO_PI]
    )


def stirling_ratio(x: float) -> float:
    """Gamma(x) / (sqrt(2 pi) x^(x-1/2) e^-x).

    Greater than 1, strictly decreasing, -> 1 as x -> inf.  Evaluated in log
    space, so there is no overflow even at x = 1e6 and beyond.
    """
    return math.exp(binet_mu(_check_domain(x)))


def log_stirling_root_scaled(x: float) -> float:
    """log of Gamma(x) / (sqrt(2 pi) x^x e^-x), the root-scaled remainder.

    This is binet_mu(x) - log(x)/2: the quantity the exponential bound
    families enclose.  It tends to -inf like -log(x)/2.
    """
    x = _check_domain(x)
    return binet_mu(x) - 0.5 * math.log(x)


def kernel_r(x: float) -> float:
    """1/x - log(1+1/x); see :func:`psibounds.kernels.kernel_r`."""
    return kernels.kernel_r(_check_domain(x))


def kernel_s(x: float) -> float:
    """(x+1) log(1+1/x) - 1; see :func:`psibounds.kernels.kernel_s`."""
    return kernels.kernel_s(_check_domain(x))
