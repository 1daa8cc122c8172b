"""Special functions used by the polynomial and kernel layers.

Everything here is a pure function. Gamma-function ratios are computed in log
space with explicit sign bookkeeping so they stay finite for large indices.
Power series are truncated once the term magnitude stays below ``1e-16`` times
the partial sum for three consecutive terms.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gamma as _gamma_fn
from scipy.special import gammaln, gammasgn, rgamma

from .errors import DivergenceError, DomainError, InfiniteValueError, PoleError
from .quadrature import adaptive

_TRUNC = 1e-16
_TINY = 1e-300


def _is_nonpositive_integer(x: float, tol: float = 1e-12) -> bool:
    return x < 0.5 and abs(x - round(x)) < tol and round(x) <= 0


def _is_nonnegative_integer(x: float, tol: float = 1e-12) -> bool:
    return x > -0.5 and abs(x - round(x)) < tol and round(x) >= 0


def gammaln_signed(x):
    """``(log|Gamma(x)|, sign(Gamma(x)))`` for real ``x`` (vectorized)."""
    return gammaln(x), gammasgn(x)


def gamma_ratio(x: float, alpha: float) -> float:
    """The normalized Gamma ratio ``Gamma(x+1+alpha) / (Gamma(1+alpha) Gamma(x+1))``.

    For integer ``x = n`` this is the generalized binomial coefficient
    ``(1+alpha)(2+alpha)...(n+alpha)/n!`` that appears as a polynomial
    coefficient throughout the package.
    """
    args = (x + 1.0 + alpha, 1.0 + alpha, x + 1.0)
    for a in args:
        if _is_nonpositive_integer(a):
            raise PoleError(f"gamma_ratio({x}, {alpha}): Gamma pole at argument {a}")
    log_val = gammaln(args[0]) - gammaln(args[1]) - gammaln(args[2])
    sign = gammasgn(args[0]) * gammasgn(args[1]) * gammasgn(args[2])
    return sign * math.exp(log_val)


def gamma_ratio_table(n: int, alpha: float) -> np.ndarray:
    """Vectorized ``gamma_ratio(k, alpha)`` for ``k = 0..n`` (inclusive)."""
    k = np.arange(n + 1, dtype=float)
    args = (k + 1.0 + alpha, 1.0 + alpha, k + 1.0)
    for a in np.atleast_1d(args[0]):
        if _is_nonpositive_integer(float(a)):
            raise PoleError(f"gamma_ratio table: Gamma pole at argument {a}")
    if _is_nonpositive_integer(1.0 + alpha):
        raise PoleError(f"gamma_ratio table: Gamma pole at argument {1.0 + alpha}")
    log_val = gammaln(args[0]) - gammaln(args[1]) - gammaln(args[2])
    sign = gammasgn(args[0]) * gammasgn(args[1]) * gammasgn(args[2])
    return sign * np.exp(log_val)


def hyp1f1_M(alpha: float, beta: float, z, max_terms: int = 100000):
    """Confluent-hypergeometric family ``M_{alpha,beta}(z)``.

    Defined by the normalized series with coefficient ratio
    ``(n+1+alpha)/((n+1+gamma)(n+1))`` where ``gamma = 1+alpha+beta``; the
    value at 0 is 1. The special case ``(1/2, -3/2)`` is the kernel of the
    circle scaling limits. Accepts scalars or numpy arrays.
    """
    g = 1.0 + alpha + beta
    if _is_nonpositive_integer(g + 1.0):
        # poles occur when 1+gamma hits a non-positive integer, i.e. gamma in {-1,-2,...}
        raise PoleError(f"hyp1f1_M: parameter gamma = {g} is a negative integer")
    z_arr = np.asarray(z, dtype=complex)
    term = np.ones_like(z_arr)
    total = term.copy()
    quiet = 0
    for n in range(max_terms):
        term = term * ((n + 1.0 + alpha) / ((n + 1.0 + g) * (n + 1.0))) * z_arr
        total = total + term
        if np.max(np.abs(term)) <= _TRUNC * max(np.max(np.abs(total)), _TINY):
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
    if np.isscalar(z) or np.asarray(z).ndim == 0:
        return complex(total)
    return total


def big_m_pair(z):
    """``(M(z), M'(z))`` for ``M = M_{1/2,-3/2} = 1F1(3/2, 1; z)``, vectorized.

    Both series are accumulated in a single pass so kernel integrands pay for
    one loop only.
    """
    z_arr = np.asarray(z, dtype=complex)
    if np.max(np.abs(z_arr)) > 25.0:
        # the alternating series loses ~e^{|z|} eps to cancellation; switch
        # to arbitrary precision for large arguments (cold path)
        import mpmath
        with mpmath.workdps(30):
            flat = z_arr.ravel()
            m_hi = np.array([complex(mpmath.hyp1f1(1.5, 1.0, zz))
                             for zz in flat]).reshape(z_arr.shape)
            d_hi = np.array([1.5 * complex(mpmath.hyp1f1(2.5, 2.0, zz))
                             for zz in flat]).reshape(z_arr.shape)
        if np.isscalar(z) or np.asarray(z).ndim == 0:
            return complex(m_hi), complex(d_hi)
        return m_hi, d_hi
    term = np.ones_like(z_arr)            # a_n z^n
    m_val = term.copy()
    d_val = np.zeros_like(z_arr)          # sum n a_n z^{n-1}
    quiet = 0
    for n in range(100000):
        # a_{n+1} z^{n+1} from a_n z^n ; gamma = 0 for (1/2, -3/2)
        term = term * ((n + 1.5) / ((n + 1.0) * (n + 1.0))) * z_arr
        m_val = m_val + term
        with np.errstate(invalid="ignore", divide="ignore"):
            d_term = np.where(z_arr != 0, (n + 1.0) * term / z_arr,
                              1.5 if n == 0 else 0.0)
        d_val = d_val + d_term
        if np.max(np.abs(term)) <= _TRUNC * max(np.max(np.abs(m_val)), _TINY):
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
    if np.isscalar(z) or np.asarray(z).ndim == 0:
        return complex(m_val), complex(d_val)
    return m_val, d_val


def big_m(z):
    """``M(z) = 1F1(3/2, 1; z)``."""
    return big_m_pair(z)[0]


def big_m_prime(z):
    """``M'(z)``, the derivative of ``1F1(3/2, 1; z)``."""
    return big_m_pair(z)[1]


def e_gamma(g: float, tau, tol: float = 1e-13) -> complex:
    """``(1+g) \\int_0^1 x^g e^{tau x} dx``, normalized so the value at 0 is 1.

    For ``g < 0`` the algebraic endpoint singularity is removed with the
    substitution ``x = t^{2/(1+g)}`` before Gauss–Legendre integration.
    """
    if g <= -1.0:
        raise DomainError(f"e_gamma requires g > -1, got {g}")
    tau = complex(tau)
    if g < 0.0:
        p = 2.0 / (1.0 + g)

        def f(t):
            return p * t * np.exp(tau * t**p)
    else:

        def f(x):
            return x**g * np.exp(tau * x)

    val, _ = adaptive(f, 0.0, 1.0, tol=tol)
    return (1.0 + g) * val


def e_pair(a1: float, b1: float, a2: float, b2: float, t1, t2,
           tol: float = 1e-12) -> complex:
    """``(1+g) \\int_0^1 x^g M_{a1,b1}(t1 x) M_{a2,b2}(t2 x) dx``, ``g = 2+a1+b1+a2+b2``."""
    g = 2.0 + a1 + b1 + a2 + b2
    if g <= -1.0:
        raise DomainError(f"e_pair requires 2+a1+b1+a2+b2 > -1, got {g}")
    t1, t2 = complex(t1), complex(t2)

    def core(x):
        return hyp1f1_M(a1, b1, t1 * x) * hyp1f1_M(a2, b2, t2 * x)

    if g < 0.0:
        p = 2.0 / (1.0 + g)

        def f(t):
            return p * t * core(t**p)
    else:

        def f(x):
            return x**g * core(x)

    val, _ = adaptive(f, 0.0, 1.0, tol=tol)
    return (1.0 + g) * val


def hyp2f1(a: float, b: float, c: float, z, tol: float = 1e-12,
           max_terms: int = 2_000_000) -> complex:
    """Gauss hypergeometric series ``2F1(a, b; c; z)`` for ``|z| <= 1``.

    At ``z = 1`` with ``c - a - b > 0`` the exact Gauss sum
    ``Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b))`` is returned (the raw
    series converges far too slowly there to be summed term by term).
    """
    for p in (a, b, c):
        if _is_nonpositive_integer(p):
            raise PoleError(f"hyp2f1: parameter {p} is a non-positive integer")
    z = complex(z)
    r = abs(z)
    if r > 1.0 + 1e-12:
        raise DomainError(f"hyp2f1 requires |z| <= 1, got |z| = {r}")
    on_circle = r > 1.0 - 1e-12
    if on_circle and c - a - b <= 0:
        raise DivergenceError(
            f"hyp2f1 series diverges on |z|=1 when c-a-b = {c - a - b} <= 0")
    if abs(z - 1.0) < 1e-12:
        log_val = gammaln(c) + gammaln(c - a - b) - gammaln(c - a) - gammaln(c - b)
        sign = (gammasgn(c) * gammasgn(c - a - b)
                * gammasgn(c - a) * gammasgn(c - b))
        return complex(sign * math.exp(log_val))
    term = 1.0 + 0.0j
    total = term
    quiet = 0
    for n in range(max_terms):
        term = term * ((n + a) * (n + b) / ((n + c) * (n + 1.0))) * z
        total += term
        if abs(term) <= _TRUNC * max(abs(total), _TINY):
            quiet += 1
            if quiet >= 3:
                return total
        else:
            quiet = 0
        if on_circle and n > 200000:
            break
    if on_circle:
        # absolutely convergent but too slowly for direct summation: delegate
        # to an arbitrary-precision evaluator of the same function
        import mpmath

        val = mpmath.hyp2f1(a, b, c, mpmath.mpc(z.real, z.imag))
        return complex(val)
    raise DivergenceError("hyp2f1 series failed to converge")


def _hyp2f1_unit(a: float, b: float, c: float, z: complex) -> complex:
    """2F1 on the closed unit disk, tolerant of conditional convergence.

    Used by :func:`lambda_weight`, whose constituent series converge only
    conditionally on the circle for part of the admissible parameter range.
    """
    z = complex(z)
    if abs(z) < 1.0 - 1e-9:
        return hyp2f1(a, b, c, z)
    import mpmath

    return complex(mpmath.hyp2f1(a, b, c, mpmath.mpc(z.real, z.imag)))


def lambda_weight(b1: float, b2: float, zeta) -> complex:
    """Circle weight ``Lambda_{b1,b2}(zeta)`` for ``b1 + b2 + 1 < 0``.

    Evaluated through the closed three-branch hypergeometric form: a generic
    branch when neither parameter is a non-negative integer, and degenerate
    branches (where the relevant 2F1 collapses to ``(1-z)^{-(2+b1+b2)}``)
    otherwise. Raises :class:`InfiniteValueError` at ``zeta = 1`` in the
    parameter range where the weight has an integrable singularity there.
    """
    if b1 + b2 + 1.0 >= 0:
        raise DomainError(f"lambda_weight requires b1+b2+1 < 0, got {b1 + b2 + 1.0}")
    zeta = complex(zeta)
    if abs(abs(zeta) - 1.0) > 1e-9:
        raise DomainError(f"lambda_weight requires |zeta| = 1, got {abs(zeta)}")
    zeta = zeta / abs(zeta)
    if abs(zeta - 1.0) < 1e-12 and b1 + b2 + 1.0 >= -1.0:
        raise InfiniteValueError(
            "lambda_weight has an integrable singularity at zeta = 1 "
            f"for b1+b2+1 = {b1 + b2 + 1.0} >= -1")
    front = _gamma_fn(-b1 - b2 - 1.0)
    if _is_nonnegative_integer(b1):
        q = 2.0 + b1 + b2
        pref = front * rgamma(-b2) * rgamma(1.0 + b2)
        return pref * zeta ** (1.0 + b1) * (1.0 - zeta) ** (-q)
    if _is_nonnegative_integer(b2):
        q = 2.0 + b1 + b2
        zb = np.conj(zeta)
        pref = front * rgamma(-b1) * rgamma(1.0 + b1)
        return pref * zb ** (1.0 + b2) * (1.0 - zb) ** (-q)
    pref = front * rgamma(-b1) * rgamma(-b2)
    f1 = _hyp2f1_unit(1.0, 1.0 + b1, -b2, np.conj(zeta))
    f2 = _hyp2f1_unit(1.0, 1.0 + b2, -b1, zeta)
    return pref * (f1 + f2 - 1.0)


def omega(lam: float, tau) -> float:
    """Exponential damping factor ``min(1, e^{-Re(tau)/lam})``.

    At ``lam = 0`` this degenerates to the characteristic function of the
    closed half-plane ``Re(tau) <= 0`` (closed unit disk after the change of
    variables that produces it).
    """
    if lam < 0.0 or lam > 1.0:
        raise DomainError(f"omega requires lam in [0, 1], got {lam}")
    if np.ndim(tau) == 0:
        re = complex(tau).real
        if lam == 0.0:
            return 1.0 if re <= 0.0 else 0.0
        return 1.0 if re <= 0.0 else math.exp(-re / lam)
    re = np.real(np.asarray(tau))
    if lam == 0.0:
        return (re <= 0.0).astype(float)
    return np.where(re <= 0.0, 1.0, np.exp(-np.maximum(re, 0.0) / lam))


def iota(z) -> complex:
    """``i sgn(Im z)``: the phase attached to conjugating a nonreal argument."""
    im = complex(z).imag
    if im > 0:
        return 1j
    if im < 0:
        return -1j
    return 0j
