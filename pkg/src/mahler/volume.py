"""Skew-symmetric bilinear form, Gram matrix, and the volume identity.

The form splits into a real part (a double integral against ``sgn(y - x)``,
reduced here to one dimension through the eps antiderivative) and a complex
part (an area integral of ``Im(conj(f) g)`` against the squared weight over
the upper half-plane). Monomial moments have closed forms; general monic
bases are handled by bilinearity. The Pfaffian of the Gram matrix equals a
finite rational product in ``s`` — the star-body volume, up to the factor
``2/(N+1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kernel import pfaffian
from .polys import PolyCoeffs, eps_poly, weight
from .quadrature import adaptive, halfline, leg_nodes


def skew_moment(n: int, m: int, s: float) -> float:
    """Skew product of ``z^{2n}`` against ``z^{2m+1}`` (both parts combined).

    ``(s/(s - 2m - 2)) / ((n + 1/2)(m - n + 1/2))``; the prefactor is 1 at
    ``s = inf``. Same-parity products vanish identically.
    """
    if n < 0 or m < 0:
        raise DomainError("exponent indices must be nonnegative")
    if not (s > 2 * m + 2):
        raise DomainError(f"requires s > 2m+2 = {2 * m + 2}, got s={s}")
    pref = 1.0 if math.isinf(s) else s / (s - 2 * m - 2)
    return pref / ((n + 0.5) * (m - n + 0.5))


def monomial_moment(a: int, b: int, s: float) -> float:
    """Skew product of ``z^a`` against ``z^b`` for arbitrary parities."""
    if (a - b) % 2 == 0:
        return 0.0
    if a % 2 == 0:
        return skew_moment(a // 2, (b - 1) // 2, s)
    return -skew_moment(b // 2, (a - 1) // 2, s)


@dataclass(frozen=True)
class GramMatrix:
    N: int
    s: float
    entries: np.ndarray
    basis: tuple[PolyCoeffs, ...]


def _monomial_basis(N: int) -> tuple[PolyCoeffs, ...]:
    return tuple(PolyCoeffs((0.0,) * n + (1.0,)) for n in range(N))


def gram_matrix(N: int, s: float, basis=None) -> GramMatrix:
    """Gram matrix of a monic family under the skew form, by bilinearity."""
    if N % 2 != 0 or N < 2:
        raise DomainError("Gram matrix requires even positive N")
    if not s > N:
        raise DomainError(f"requires s > N, got s={s}")
    if basis is None:
        basis = _monomial_basis(N)
    basis = tuple(basis)
    if len(basis) != N:
        raise DomainError("basis must contain N polynomials")
    for n, p in enumerate(basis):
        if p.degree != n or abs(p.coeffs[-1] - 1.0) > 1e-12:
            raise DomainError(f"basis element {n} is not monic of degree {n}")
    # moment table <z^a | z^b> for a, b < N
    M = np.zeros((N, N))
    for a in range(N):
        for b in range(N):
            M[a, b] = monomial_moment(a, b, s)
    C = np.zeros((N, N))
    for n, p in enumerate(basis):
        C[n, :len(p.coeffs)] = p.coeffs
    U = C @ M @ C.T
    U = 0.5 * (U - U.T)       # exact antisymmetry
    return GramMatrix(N, s, U, basis)


def gram_pf(N: int, s: float, basis=None) -> tuple[GramMatrix, float]:
    """Gram matrix and its Pfaffian."""
    G = gram_matrix(N, s, basis)
    return G, float(pfaffian(G.entries).real)


def chern_vaaler_f(N: int, s: float) -> float:
    """The rational product ``F(s)``; at ``s = inf`` the constant ``C_N``.

    ``F(s) = C_N prod_{j=0}^J s/(s - (N - 2j))`` with ``J = floor(N/2)`` and
    ``C_N = 2^N prod_{j=1}^J (2j/(2j+1))^{N-2j}``. Equals the Pfaffian of the
    Gram matrix of any monic family; ``(2/(N+1)) F((N+1)/lambda)`` is the
    volume of the degree-N star body at inverse radius ``lambda``.
    """
    if N < 1:
        raise DomainError("N must be positive")
    if not s > N:
        raise DomainError(f"requires s > N, got s={s}")
    J = N // 2
    c = 2.0 ** N
    for j in range(1, J + 1):
        c *= (2.0 * j / (2.0 * j + 1.0)) ** (N - 2 * j)
    if math.isinf(s):
        return c
    prod = 1.0
    for j in range(J + 1):
        if N - 2 * j == 0:
            continue
        prod *= s / (s - (N - 2 * j))
    return c * prod


def volume_ball(N: int, lam: float) -> float:
    """Volume of the star body of degree-N polynomials at inverse radius
    ``lam``: ``(2/(N+1)) F((N+1)/lam)``."""
    if lam <= 0:
        raise DomainError("lam must be positive")
    s = (N + 1) / lam
    return 2.0 * chern_vaaler_f(N, s) / (N + 1)


# ---------------------------------------------------------------------------
# quadrature evaluation of the bilinear form (oracle route)
# ---------------------------------------------------------------------------


def bilinear_r(f: PolyCoeffs, g: PolyCoeffs, s: float, tol: float = 1e-10) -> float:
    """Real part of the skew form: ``2 int f~(x) (eps g~)(x) dx``.

    The double integral against ``sgn(y - x)`` collapses to one dimension via
    the eps antiderivative of the weighted polynomial.
    """
    fc = np.asarray(f.coeffs, dtype=float)
    gc = np.asarray(g.coeffs, dtype=float)

    def simple(x):
        xv = np.asarray(x, dtype=float)
        fx = np.zeros_like(xv)
        for c in fc[::-1]:
            fx = fx * xv + c
        return 2.0 * fx * weight(s, xv) * eps_poly(gc, s, xv)

    val, err = adaptive(simple, -1.0, 1.0, tol=tol)
    total = val
    if not math.isinf(s):
        v1, e1 = halfline(simple, 1.0, tol=tol)
        v2, e2 = halfline(lambda x: simple(-x), 1.0, tol=tol)
        total += v1 + v2
    return total


def bilinear_c(f: PolyCoeffs, g: PolyCoeffs, s: float, tol: float = 1e-10,
               n_theta: int = 96) -> float:
    """Complex part: ``4 int_H Im(conj(f) g) max(1,|z|)^{-2s} dA`` in polar
    coordinates, radially split at the unit circle."""
    xg, wg = leg_nodes(n_theta)
    theta = 0.5 * math.pi * (xg + 1.0)
    wtheta = 0.5 * math.pi * wg
    etheta = np.exp(1j * theta)

    def radial(r):
        z = np.multiply.outer(np.asarray(r, dtype=float), etheta)
        fz = np.zeros_like(z)
        for c in np.asarray(f.coeffs)[::-1]:
            fz = fz * z + c
        gz = np.zeros_like(z)
        for c in np.asarray(g.coeffs)[::-1]:
            gz = gz * z + c
        w2 = weight(s, z) ** 2 if not math.isinf(s) else weight(s, z)
        vals = np.imag(np.conj(fz) * gz) * w2
        return 4.0 * (vals * wtheta).sum(axis=-1) * np.asarray(r)

    val, err = adaptive(radial, 0.0, 1.0, tol=tol)
    total = val
    if not math.isinf(s):
        v1, e1 = halfline(radial, 1.0, tol=tol)
        total += v1
    return total


def bilinear(f: PolyCoeffs, g: PolyCoeffs, s: float, tol: float = 1e-10) -> float:
    """Full skew form by quadrature (real plus complex part)."""
    return bilinear_r(f, g, s, tol) + bilinear_c(f, g, s, tol)
