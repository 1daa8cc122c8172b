"""Monte-Carlo validation: Mahler measure, star-body ball-walk sampler,
root classification, and empirical statistics against kernel predictions.

The sampler is a Metropolis ball walk on the coefficient vector of a monic
polynomial: at infinite ``s`` proposals are accepted iff the monic Mahler
measure stays at most 1 (uniform sampling of the monic star body); at finite
``s`` the acceptance ratio is the Mahler-measure power ``(M'/M)^{-s}``.
Proposals are never auto-rejected silently: a rejected step re-emits the
current state, which is what keeps the chain's invariant density correct.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConditioningError, DomainError, PairingError
from .polys import PolyCoeffs


@dataclass(frozen=True)
class SamplerConfig:
    N: int
    s: float
    step_length: float = 0.25
    steps: int = 10_000
    burn_in: int = 1_000
    thin: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.N < 1:
            raise DomainError("N must be positive")
        if not (math.isinf(self.s) or self.s > self.N):
            raise DomainError("requires s > N (or s = inf)")
        if self.step_length <= 0:
            raise DomainError("step_length must be positive")
        if self.steps < self.burn_in or self.burn_in < 0:
            raise DomainError("need steps >= burn_in >= 0")
        if self.thin < 1:
            raise DomainError("thin must be >= 1")


@dataclass(frozen=True)
class RootSet:
    reals: tuple[float, ...]
    pairs: tuple[complex, ...]


def _poly_roots(coeffs) -> np.ndarray:
    """Roots via the companion-matrix eigenvalues (descending for np.roots)."""
    c = np.asarray(coeffs, dtype=float)
    c = np.trim_zeros(c, trim="b")
    if c.size == 0:
        raise DomainError("mahler measure of the zero polynomial")
    if c.size == 1:
        return np.array([])
    return np.roots(c[::-1])


def mahler_measure(p: PolyCoeffs, cross_check: bool = False) -> float:
    """``|leading coefficient| * prod max(1, |root|)``.

    With ``cross_check=True`` the value is compared against the circle
    average of ``log |p|`` (512-node trapezoid); the slow convergence of that
    average for roots near the circle is why the check is opt-in.
    """
    c = np.asarray(p.coeffs, dtype=float)
    roots = _poly_roots(c)
    lead = np.trim_zeros(c, trim="b")[-1]
    val = abs(lead) * float(np.prod(np.maximum(1.0, np.abs(roots)))) \
        if roots.size else abs(lead)
    if cross_check:
        n = 512
        theta = (np.arange(n) + 0.5) * (2.0 * math.pi / n)
        z = np.exp(1j * theta)
        pv = np.zeros_like(z)
        for ck in c[::-1]:
            pv = pv * z + ck
        jensen = math.exp(float(np.mean(np.log(np.abs(pv)))))
        if abs(jensen - val) > 1e-4 * max(1.0, abs(val)):
            raise ConditioningError(
                f"root-product {val:.8g} vs circle-average {jensen:.8g}")
    return val


def _monic_measure(b: np.ndarray) -> float:
    """Mahler measure of ``z^N + sum b_k z^k`` from its roots."""
    coeffs = np.concatenate([b, [1.0]])
    roots = np.roots(coeffs[::-1])
    return float(np.prod(np.maximum(1.0, np.abs(roots))))


def sample(cfg: SamplerConfig):
    """Generator of monic samples from the ball walk; deterministic per seed.

    Emits every ``thin``-th post-burn-in state (rejected proposals re-emit
    the current state, they are not skipped).
    """
    rng = np.random.default_rng(cfg.seed)
    N = cfg.N
    b = np.zeros(N)
    m_cur = 1.0
    for step in range(cfg.steps):
        direction = rng.standard_normal(N)
        norm = float(np.linalg.norm(direction))
        radius = rng.random() ** (1.0 / N)
        prop = b + cfg.step_length * radius * direction / norm
        m_prop = _monic_measure(prop)
        if math.isinf(cfg.s):
            accept = m_prop <= 1.0 + 1e-12
        else:
            ratio = (m_prop / m_cur) ** (-cfg.s)
            accept = ratio >= 1.0 or rng.random() < ratio
        if accept:
            b, m_cur = prop, m_prop
        if step >= cfg.burn_in and (step - cfg.burn_in) % cfg.thin == 0:
            yield PolyCoeffs(tuple(b) + (1.0,))


def roots_classify(p: PolyCoeffs, tol: float = 1e-9) -> RootSet:
    """Split the roots into reals and conjugate-pair representatives.

    Roots with small imaginary part (relative to their magnitude) are snapped
    to the real axis; the rest are greedily matched with their nearest
    conjugate.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    roots = _poly_roots(p.coeffs)
    reals, complexes = [], []
    for r in roots:
        if abs(r.imag) <= tol * (1.0 + abs(r)):
            reals.append(float(r.real))
        else:
            complexes.append(complex(r))
    uppers = [z for z in complexes if z.imag > 0]
    lowers = [z for z in complexes if z.imag < 0]
    if len(uppers) != len(lowers):
        raise PairingError("unequal numbers of upper and lower roots")
    pairs = []
    remaining = list(lowers)
    for z in uppers:
        if not remaining:
            raise PairingError("ran out of conjugate partners")
        dist = [abs(np.conj(z) - w) for w in remaining]
        k = int(np.argmin(dist))
        if dist[k] > max(tol * (1.0 + abs(z)) * 1e3, 1e-6 * (1.0 + abs(z))):
            raise PairingError(
                f"root {z} has no conjugate partner within tolerance")
        remaining.pop(k)
        pairs.append(z)
    return RootSet(tuple(sorted(reals)), tuple(pairs))


@dataclass(frozen=True)
class Histogram1D:
    edges: np.ndarray
    density: np.ndarray
    stderr: np.ndarray


@dataclass(frozen=True)
class Histogram2D:
    x_edges: np.ndarray
    y_edges: np.ndarray
    density: np.ndarray
    stderr: np.ndarray


@dataclass(frozen=True)
class EmpiricalStats:
    n_samples: int
    mean_real_count: float
    stderr_real_count: float
    real_hist: Histogram1D
    complex_hist: Histogram2D


def empirical_stats(samples, real_edges, complex_x_edges,
                    complex_y_edges) -> EmpiricalStats:
    """Root statistics of a sample collection, normalized as densities.

    The real histogram estimates the one-point density of real roots; the
    complex histogram records each conjugate pair at its representative and
    its mirror, so it is conjugate-symmetric by construction and estimates
    the density of non-real roots.
    """
    real_edges = np.asarray(real_edges, dtype=float)
    cx = np.asarray(complex_x_edges, dtype=float)
    cy = np.asarray(complex_y_edges, dtype=float)
    counts = []
    real_rows = []
    chist_total = np.zeros((cx.size - 1, cy.size - 1))
    chist_sq = np.zeros_like(chist_total)
    n = 0
    for p in samples:
        rs = roots_classify(p)
        counts.append(len(rs.reals))
        row, _ = np.histogram(rs.reals, bins=real_edges)
        real_rows.append(row)
        pts_x, pts_y = [], []
        for z in rs.pairs:
            pts_x.extend([z.real, z.real])
            pts_y.extend([z.imag, -z.imag])
        crow, _, _ = np.histogram2d(pts_x, pts_y, bins=(cx, cy))
        chist_total += crow
        chist_sq += crow ** 2
        n += 1
    if n < 1:
        raise DomainError("no samples provided")
    counts = np.asarray(counts, dtype=float)
    real_rows = np.asarray(real_rows, dtype=float)
    widths = np.diff(real_edges)
    density = real_rows.mean(axis=0) / widths
    stderr = real_rows.std(axis=0, ddof=1) / widths / math.sqrt(n) \
        if n > 1 else np.zeros_like(density)
    area = np.outer(np.diff(cx), np.diff(cy))
    cdensity = chist_total / (n * area)
    cvar = chist_sq / n - (chist_total / n) ** 2
    cstderr = np.sqrt(np.maximum(cvar, 0.0) / max(n - 1, 1)) / area
    return EmpiricalStats(
        n_samples=n,
        mean_real_count=float(counts.mean()),
        stderr_real_count=float(counts.std(ddof=1) / math.sqrt(n))
        if n > 1 else 0.0,
        real_hist=Histogram1D(real_edges, density, stderr),
        complex_hist=Histogram2D(cx, cy, cdensity, cstderr))


# ---------------------------------------------------------------------------
# CSV output
# ---------------------------------------------------------------------------


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_samples_csv(path: str, cfg: SamplerConfig, samples) -> int:
    """One row per polynomial: seed, step index, ascending coefficients."""
    n = 0
    with open(path, "w", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["seed", "index"]
                        + [f"c{k}" for k in range(cfg.N + 1)])
        for i, p in enumerate(samples):
            writer.writerow([cfg.seed, i] + [_fmt(c) for c in p.coeffs])
            n += 1
    return n


def write_histogram_csv(path: str, hist: Histogram1D) -> None:
    with open(path, "w", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["bin_lo", "bin_hi", "density", "stderr"])
        for lo, hi, d, e in zip(hist.edges[:-1], hist.edges[1:],
                                hist.density, hist.stderr):
            writer.writerow([_fmt(lo), _fmt(hi), _fmt(d), _fmt(e)])
