"""Polynomial layer: the two-parameter family ``P_n``, the skew-orthogonal
family ``pi_n``, weighted variants, closed-form eps-transforms, and norms.

``P_n^{a,b}(z) = sum_k c_k(a) c_{n-k}(b) z^k`` with ``c_x(a)`` the normalized
Gamma ratio of :func:`mahler.specfun.gamma_ratio`. The skew-orthogonal family
attached to the weight ``max(1,|x|)^{-s}`` is

* ``pi_{2n}(z)   = P_n^{1/2,-1/2}(z^2)`` (even, degree 2n),
* ``pi_{2n+1}(z) = (1/4s) sum_k (s-2k-2) c_k(1/2) c_{n-k}(-3/2) z^{2k+1}``
  (odd, degree 2n+1), where ``(s-2k-2)/s`` is read as 1 when s is infinite.

The eps-transform ``eps f(y) = (1/2) int f(t) sgn(t-y) dt`` of a weighted
monomial has elementary closed forms on both sides of ``|y| = 1``; all
eps-evaluations here reduce to those.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConditioningError, DomainError, IntegrabilityError, PoleError
from .specfun import gamma_ratio_table, gammaln_signed

_INF = math.inf


@dataclass(frozen=True)
class PolyCoeffs:
    """Dense real polynomial, coefficients in ascending degree order."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("empty coefficient list")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        """Horner evaluation; accepts scalars or numpy arrays."""
        z = np.asarray(z)
        acc = np.zeros_like(z, dtype=complex) if np.iscomplexobj(z) \
            else np.zeros_like(z, dtype=float)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        if np.ndim(z) == 0:
            return acc[()]
        return acc

    def derivative(self) -> "PolyCoeffs":
        if self.degree == 0:
            return PolyCoeffs((0.0,))
        return PolyCoeffs(tuple(k * c for k, c in enumerate(self.coeffs))[1:])


def p_poly(n: int, alpha: float, beta: float) -> PolyCoeffs:
    """Coefficients of ``P_n^{alpha,beta}``."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    ca = gamma_ratio_table(n, alpha)
    cb = gamma_ratio_table(n, beta)
    return PolyCoeffs(tuple(ca[k] * cb[n - k] for k in range(n + 1)))


def p_eval(n: int, alpha: float, beta: float, z):
    """Evaluate ``P_n^{alpha,beta}(z)`` by the three-term recurrence.

    ``P_0 = 1``, ``P_1 = (1+beta) + (1+alpha) z`` and for ``n >= 2``
    ``P_n = [((n+alpha)/n) z + (n+beta)/n] P_{n-1} - ((n+alpha+beta)/n) z P_{n-2}``.
    """
    z = np.asarray(z, dtype=complex)
    p_prev = np.ones_like(z)
    if n == 0:
        return p_prev[()] if z.ndim == 0 else p_prev
    p = (1.0 + beta) + (1.0 + alpha) * z
    for k in range(2, n + 1):
        p, p_prev = (((k + alpha) / k) * z + (k + beta) / k) * p \
            - ((k + alpha + beta) / k) * z * p_prev, p
    return p[()] if z.ndim == 0 else p


def p_eval_sequence(count: int, alpha: float, beta: float, z) -> np.ndarray:
    """Stack ``[P_0(z), ..., P_{count-1}(z)]`` along a new leading axis."""
    z = np.asarray(z, dtype=complex)
    out = np.empty((count,) + z.shape, dtype=complex)
    p_prev = np.ones_like(z)
    out[0] = p_prev
    if count == 1:
        return out
    p = (1.0 + beta) + (1.0 + alpha) * z
    out[1] = p
    for k in range(2, count):
        p, p_prev = (((k + alpha) / k) * z + (k + beta) / k) * p \
            - ((k + alpha + beta) / k) * z * p_prev, p
        out[k] = p
    return out


# ---------------------------------------------------------------------------
# skew-orthogonal family
# ---------------------------------------------------------------------------


def pi_even_core(n: int) -> np.ndarray:
    """Coefficients of ``pi_{2n}`` in the variable ``t = z^2`` (length n+1)."""
    ca = gamma_ratio_table(n, 0.5)
    cb = gamma_ratio_table(n, -0.5)
    return np.array([ca[k] * cb[n - k] for k in range(n + 1)])


def pi_odd_core(n: int, s: float) -> np.ndarray:
    """Coefficients of ``pi_{2n+1}/z`` in ``t = z^2`` (length n+1)."""
    if not (s > 0):
        raise DomainError("pi_pair requires s > 0")
    ca = gamma_ratio_table(n, 0.5)
    cb = gamma_ratio_table(n, -1.5)
    k = np.arange(n + 1, dtype=float)
    if math.isinf(s):
        factor = 0.25 * np.ones(n + 1)
    else:
        factor = (s - 2.0 * k - 2.0) / (4.0 * s)
    return factor * np.array([ca[j] * cb[n - j] for j in range(n + 1)])


def pi_pair(n: int, s: float) -> tuple[PolyCoeffs, PolyCoeffs]:
    """The skew-orthonormal pair ``(pi_{2n}, pi_{2n+1})`` as dense polynomials."""
    even_core = pi_even_core(n)
    odd_core = pi_odd_core(n, s)
    even = np.zeros(2 * n + 1)
    even[::2] = even_core
    odd = np.zeros(2 * n + 2)
    odd[1::2] = odd_core
    return PolyCoeffs(tuple(even)), PolyCoeffs(tuple(odd))


def weight(s: float, z):
    """The ensemble weight ``max(1, |z|)^{-s}`` (vectorized, s may be inf)."""
    mod = np.maximum(1.0, np.abs(z))
    if math.isinf(s):
        w = np.where(np.abs(z) <= 1.0 + 1e-15, 1.0, 0.0)
    else:
        w = mod ** (-s)
    return w


# ---------------------------------------------------------------------------
# eps-transforms
# ---------------------------------------------------------------------------


def eps_monomial_even(k: int, s: float, y):
    """``eps(x^{2k} max(1,|x|)^{-s})(y)`` for real ``y``; requires ``s > 2k+1``.

    Equals ``-int_0^y x^{2k} max(1,|x|)^{-s} dx`` (the weighted monomial is
    even, so its half-line masses cancel).
    """
    if not math.isinf(s) and s <= 2 * k + 1:
        raise IntegrabilityError(f"eps of x^{2*k} requires s > {2*k+1}, got {s}")
    y = np.asarray(y, dtype=float)
    t = np.abs(y)
    inner = np.minimum(t, 1.0) ** (2 * k + 1) / (2 * k + 1)
    if math.isinf(s):
        outer = np.zeros_like(t)
    else:
        with np.errstate(over="ignore"):
            outer = np.where(
                t > 1.0,
                (np.maximum(t, 1.0) ** (2 * k + 1 - s) - 1.0) / (2 * k + 1 - s),
                0.0,
            )
    g = np.sign(y) * (np.where(t > 1.0, 1.0 / (2 * k + 1), inner) + outer)
    out = -g
    return out[()] if np.ndim(y) == 0 else out


def eps_monomial_odd(k: int, s: float, y):
    """``eps(x^{2k+1} max(1,|x|)^{-s})(y)`` for real ``y``; requires ``s > 2k+2``."""
    if not math.isinf(s) and s <= 2 * k + 2:
        raise IntegrabilityError(f"eps of x^{2*k+1} requires s > {2*k+2}, got {s}")
    y = np.asarray(y, dtype=float)
    t = np.abs(y)
    if math.isinf(s):
        half = 1.0 / (2 * k + 2)
        outer = np.zeros_like(t)
    else:
        half = 1.0 / (2 * k + 2) + 1.0 / (s - 2 * k - 2)
        with np.errstate(over="ignore"):
            outer = np.where(
                t > 1.0,
                (np.maximum(t, 1.0) ** (2 * k + 2 - s) - 1.0) / (2 * k + 2 - s),
                0.0,
            )
    inner = np.minimum(t, 1.0) ** (2 * k + 2) / (2 * k + 2)
    g = np.where(t > 1.0, 1.0 / (2 * k + 2), inner) + outer
    out = half - g
    return out[()] if np.ndim(y) == 0 else out


def eps_pi(kind: str, n: int, s: float, y):
    """Closed-form ``eps`` of the weighted skew-orthogonal polynomials.

    ``kind='even'`` gives ``eps(pi_{2n} w)(y)`` (equal to
    ``-y P_n^{-1/2,-1/2}(y^2)`` inside [-1, 1]); ``kind='odd'`` gives
    ``eps(pi_{2n+1} w)(y)``. Vectorized over real ``y``.
    """
    if kind == "even":
        core = pi_even_core(n)
        pieces = [c * eps_monomial_even(k, s, y) for k, c in enumerate(core)]
    elif kind == "odd":
        core = pi_odd_core(n, s)
        pieces = [c * eps_monomial_odd(k, s, y) for k, c in enumerate(core)]
    else:
        raise DomainError(f"kind must be 'even' or 'odd', got {kind!r}")
    return sum(pieces)


def eps_poly(coeffs, s: float, y):
    """``eps`` of a general weighted real polynomial given ascending coeffs."""
    coeffs = np.asarray(coeffs, dtype=float)
    total = 0.0
    for m, c in enumerate(coeffs):
        if c == 0.0:
            continue
        if m % 2 == 0:
            total = total + c * eps_monomial_even(m // 2, s, y)
        else:
            total = total + c * eps_monomial_odd((m - 1) // 2, s, y)
    return total


def s_norm(n: int, s: float) -> float:
    """Skew norm ``s_{2n}`` of the even family member (2 when s is infinite)."""
    if math.isinf(s):
        return 2.0
    if s <= 2 * n + 1:
        raise DomainError(f"s_norm requires s > {2*n+1}, got {s}")
    num1, sg1 = gammaln_signed((s + 2.0) / 2.0)
    num2, sg2 = gammaln_signed((s - 2.0 * n - 1.0) / 2.0)
    den1, sg3 = gammaln_signed((s + 1.0) / 2.0)
    den2, sg4 = gammaln_signed((s - 2.0 * n) / 2.0)
    return 2.0 * sg1 * sg2 * sg3 * sg4 * math.exp(num1 + num2 - den1 - den2)


# ---------------------------------------------------------------------------
# zero behavior
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroReport:
    order_at_1: int
    expected_order_at_1: int
    all_simple_away_from_1: bool
    location_class: str          # "disk_union_one" | "unit_circle" | "unclassified"
    location_ok: bool
    max_residual: float
    roots: tuple[complex, ...]


def _forced_order_at_1(n: int, alpha: float, beta: float, tol: float = 1e-9) -> int:
    """Order m >= 1 with m + 1 + alpha + beta = 0, capped at n; else 0."""
    m = -(1.0 + alpha + beta)
    if m >= 1.0 - tol and abs(m - round(m)) < tol:
        return min(n, int(round(m)))
    return 0


def zero_check(n: int, alpha: float, beta: float, cluster_tol: float = 1e-6) -> ZeroReport:
    """Root locations of ``P_n^{alpha,beta}`` against their predicted behavior.

    Computes companion-matrix roots, counts the multiplicity of the root
    cluster at 1, checks simplicity elsewhere, and classifies the location:
    ``alpha > beta`` with ``2+alpha+beta > 0`` (or a forced integer-order root
    at 1) puts all zeros in the closed unit disk together with 1;
    ``alpha == beta`` with ``3+2*alpha > 0`` (or an even forced order at 1)
    puts them on the unit circle.
    """
    if n > 64:
        raise DomainError("zero_check limited to n <= 64 in double precision")
    poly = p_poly(n, alpha, beta)
    coeffs = np.asarray(poly.coeffs)
    roots = np.roots(coeffs[::-1])
    scale = np.max(np.abs(coeffs))
    residuals = np.abs(poly(roots)) / (scale * np.maximum(1.0, np.abs(roots)) ** n)
    max_res = float(np.max(residuals)) if len(roots) else 0.0
    if max_res > 1e-6:
        raise ConditioningError(f"root residual {max_res:.3e} exceeds 1e-6")

    tol = cluster_tol * (1.0 + scale)
    at_one = np.abs(roots - 1.0) < max(cluster_tol, 1e-8) * 10
    order_at_1 = int(np.sum(at_one))
    others = roots[~at_one]
    simple = True
    for i in range(len(others)):
        for j in range(i + 1, len(others)):
            if abs(others[i] - others[j]) < max(cluster_tol, 1e-8):
                simple = False

    expected = _forced_order_at_1(n, alpha, beta)
    forced = expected > 0
    if alpha > beta and (2.0 + alpha + beta > 0 or forced):
        cls = "disk_union_one"
        ok = bool(np.all(np.abs(roots) <= 1.0 + 1e-6))
    elif alpha == beta and (3.0 + 2.0 * alpha > 0
                            or (forced and expected % 2 == 0)):
        cls = "unit_circle"
        ok = bool(np.all(np.abs(np.abs(roots) - 1.0) <= 1e-6))
    else:
        cls = "unclassified"
        ok = True
    return ZeroReport(order_at_1, expected, simple, cls, ok, max_res,
                      tuple(roots))
