"""Gauss–Legendre panel quadrature with adaptive bisection.

Conventions used throughout the package:

* finite intervals are integrated with fixed-order Gauss–Legendre panels,
  refined by bisection until the panel-sum error estimate meets the target;
* half-lines ``[a, inf)`` with ``a > 0`` are mapped to ``(0, 1/a]`` through
  ``x = 1/t``;
* integrals over the unit circle use a periodic trapezoid rule in the angle.

Integrands must be vectorized over numpy arrays (real or complex output).
The default panel order is 64 and may be overridden globally through the
``MAHLER_QUAD_ORDER`` environment variable (consumed by the CLI) or per call.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from .errors import QuadratureError

DEFAULT_ORDER = 64


def default_order() -> int:
    """Panel order, honoring the MAHLER_QUAD_ORDER environment override."""
    raw = os.environ.get("MAHLER_QUAD_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    order = int(raw)
    if order < 2:
        raise ValueError("quadrature order must be at least 2")
    return order


@lru_cache(maxsize=32)
def leg_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss–Legendre nodes and weights on [-1, 1]."""
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def fixed_panel(f, a: float, b: float, order: int | None = None):
    """One Gauss–Legendre panel for ``f`` over ``[a, b]``."""
    order = order or default_order()
    x, w = leg_nodes(order)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return half * np.sum(w * f(mid + half * x))


def adaptive(f, a: float, b: float, tol: float = 1e-12, order: int | None = None,
             max_panels: int = 4096):
    """Adaptive Gauss–Legendre integral of ``f`` over ``[a, b]``.

    Bisects the panel with the largest error estimate (difference between the
    panel value and the sum over its two halves) until the global estimate is
    below ``tol`` (absolute, scaled by the integral magnitude when that is
    larger than one). Returns ``(value, error_estimate)``.
    """
    order = order or default_order()

    def panel(lo, hi):
        whole = fixed_panel(f, lo, hi, order)
        mid = 0.5 * (lo + hi)
        halves = fixed_panel(f, lo, mid, order) + fixed_panel(f, mid, hi, order)
        return halves, abs(whole - halves)

    value, err = panel(a, b)
    panels = [(err, a, b, value)]
    while True:
        total = sum(p[3] for p in panels)
        total_err = sum(p[0] for p in panels)
        scale = max(1.0, abs(total))
        if total_err <= tol * scale:
            return total, total_err
        if len(panels) >= max_panels:
            raise QuadratureError(
                f"adaptive quadrature did not converge: error {total_err:.3e} "
                f"with {len(panels)} panels")
        panels.sort(key=lambda p: p[0])
        _, lo, hi, _ = panels.pop()
        mid = 0.5 * (lo + hi)
        v1, e1 = panel(lo, mid)
        v2, e2 = panel(mid, hi)
        panels.append((e1, lo, mid, v1))
        panels.append((e2, mid, hi, v2))


def halfline(f, a: float, tol: float = 1e-12, order: int | None = None):
    """Integral of ``f`` over ``[a, inf)`` for ``a > 0`` via ``x = 1/t``.

    The integrand must decay fast enough that ``f(1/t)/t^2`` is integrable
    at ``t = 0``; the substituted integrand is evaluated on ``(0, 1/a]`` where
    Gauss nodes never touch the endpoint.
    """
    if a <= 0:
        raise ValueError("halfline requires a > 0")

    def g(t):
        return f(1.0 / t) / t**2

    return adaptive(g, 0.0, 1.0 / a, tol=tol, order=order)


def circle_trapezoid(f, n: int = 1024, midpoint: bool = False):
    """Periodic-trapezoid integral of ``f(e^{i\\theta})`` d\\theta over [0, 2pi).

    With ``midpoint=True`` the nodes are offset by half a step, which avoids
    placing a node exactly at angle 0.
    """
    theta = (np.arange(n) + (0.5 if midpoint else 0.0)) * (2.0 * np.pi / n)
    return (2.0 * np.pi / n) * np.sum(f(np.exp(1j * theta)))
