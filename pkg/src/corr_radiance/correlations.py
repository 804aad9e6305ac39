"""Correlation measures for two-atom states: quantum discord and concurrence.

Every closed form here is paired with an independent numerical route (direct
measurement optimization for discord, the spin-flip eigenvalue construction
for concurrence) so the two can be cross-checked against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .qstate import (
    ID2,
    PAULI_Y,
    DensityMatrix,
    partial_trace,
    von_neumann_entropy,
)

# snap window for the separability threshold c = 1/3
CLASS_BOUNDARY_TOL = 1e-12


class CorrelationClass(Enum):
    CLASSICAL = "classical"
    DISCORDANT_SEPARABLE = "discordant_separable"
    ENTANGLED = "entangled"


@dataclass(frozen=True)
class DiscordResult:
    """Discord value with the minimizing measurement angles on the Bloch sphere."""

    value: float
    optimizer_angles: tuple[float, float]
    iterations: int
    converged: bool = True


def _xlog2(x: float) -> float:
    return x * math.log2(x) if x > 0.0 else 0.0


def discord_werner_closed(c: float) -> float:
    """Quantum discord of the Werner state with mixing parameter c, in bits."""
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"Werner parameter c = {c} lies outside [0, 1]")
    return 0.25 * _xlog2(1.0 - c) - 0.5 * _xlog2(1.0 + c) + 0.25 * _xlog2(1.0 + 3.0 * c)


def _embed_projectors(projs: np.ndarray, measured: int) -> np.ndarray:
    """Lift a batch of single-atom projectors into the two-atom space."""
    n = projs.shape[0]
    out = np.zeros((n, 4, 4), dtype=complex)
    if measured == 1:
        out[:, 0::2, 0::2] = projs
        out[:, 1::2, 1::2] = projs
    else:
        out[:, :2, :2] = projs
        out[:, 2:, 2:] = projs
    return out


def _conditional_entropy(rho4: np.ndarray, measured: int, thetas, phis) -> np.ndarray:
    """Average post-measurement entropy of the unmeasured atom.

    Vectorized over a batch of measurement directions: for each (theta, phi)
    the Bloch projector is embedded, the state conjugated, the measured atom
    traced out, and the branch entropies weighted by the branch probability.
    """
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    phis = np.atleast_1d(np.asarray(phis, dtype=float))
    kets = np.stack(
        [np.cos(thetas / 2.0) + 0.0j, np.sin(thetas / 2.0) * np.exp(1j * phis)],
        axis=-1,
    )
    projs = kets[:, :, None] * kets.conj()[:, None, :]
    total = np.zeros(len(thetas))
    for branch in (projs, ID2[None, :, :] - projs):
        m = _embed_projectors(branch, measured)
        sub = m @ rho4 @ m
        r = sub.reshape(-1, 2, 2, 2, 2)
        reduced = np.einsum("nabac->nbc", r) if measured == 1 else np.einsum("nabcb->nac", r)
        p = np.real(reduced[:, 0, 0] + reduced[:, 1, 1])
        # 2x2 Hermitian spectrum in closed form: mean +/- half-gap
        mean = 0.5 * p
        gap = np.sqrt(
            0.25 * np.real(reduced[:, 0, 0] - reduced[:, 1, 1]) ** 2
            + np.abs(reduced[:, 0, 1]) ** 2
        )
        lam = np.stack([mean + gap, mean - gap], axis=-1)
        safe_p = np.where(p > 1e-15, p, 1.0)
        lam = np.clip(lam / safe_p[:, None], 0.0, None)
        entropy = -np.sum(np.where(lam > 0.0, lam * np.log2(np.where(lam > 0.0, lam, 1.0)), 0.0), axis=-1)
        total += np.where(p > 1e-15, p * entropy, 0.0)
    return total


def discord_numeric(
    rho: DensityMatrix,
    measured: int = 2,
    grid: int = 64,
    tol: float = 1e-8,
    max_depth: int = 50,
) -> DiscordResult:
    """Discord by direct minimization over projective measurements.

    Computes S(rho_measured) - S(rho) + min over rank-one projective
    measurements on atom ``measured`` of the average conditional entropy of
    the other atom.  The minimization runs an exhaustive grid x grid scan
    over the measurement Bloch angles (theta, phi) followed by pattern
    search with step halving; it stops once a sweep improves the objective
    by less than ``tol``.  Grid ties resolve to the lowest (theta, phi)
    in lexicographic order.

    Returns
    -------
    DiscordResult
        ``converged`` is False if the refinement depth cap was exhausted
        before the improvement dropped below ``tol``.
    """
    if measured not in (1, 2):
        raise ValueError(f"measured atom must be 1 or 2, got {measured}")
    if grid < 2:
        raise ValueError(f"grid resolution must be at least 2, got {grid}")
    if rho.dim != 4:
        raise ValueError("discord needs a two-atom (4x4) state")
    rho4 = rho.mat
    s_total = von_neumann_entropy(rho)
    s_measured = von_neumann_entropy(partial_trace(rho, keep=measured))

    theta_axis = np.linspace(0.0, math.pi, grid)
    phi_axis = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
    # theta-major layout so the first minimum is the lexicographically lowest
    tt, pp = np.meshgrid(theta_axis, phi_axis, indexing="ij")
    values = _conditional_entropy(rho4, measured, tt.ravel(), pp.ravel())
    best = int(np.argmin(values))
    best_f = float(values[best])
    best_t = float(tt.ravel()[best])
    best_p = float(pp.ravel()[best])
    evaluations = grid * grid

    step_t = math.pi / grid
    step_p = 2.0 * math.pi / grid
    converged = False
    for _ in range(max_depth):
        before = best_f
        for dt, dp in ((step_t, 0.0), (-step_t, 0.0), (0.0, step_p), (0.0, -step_p)):
            t = min(max(best_t + dt, 0.0), math.pi)
            p = (best_p + dp) % (2.0 * math.pi)
            f = float(_conditional_entropy(rho4, measured, t, p)[0])
            evaluations += 1
            if f < best_f:
                best_f, best_t, best_p = f, t, p
        gain = before - best_f
        if gain > 0.0:
            if gain < tol:
                converged = True
                break
        else:
            step_t *= 0.5
            step_p *= 0.5
            if step_t < 1e-9:
                converged = True
                break

    value = s_measured - s_total + best_f
    return DiscordResult(value, (best_t, best_p), evaluations, converged)


def concurrence_closed(c: float) -> float:
    """Concurrence of the Werner state: max{0, (3c - 1)/2}."""
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"Werner parameter c = {c} lies outside [0, 1]")
    return max(0.0, (3.0 * c - 1.0) / 2.0)


_YY = np.kron(PAULI_Y, PAULI_Y)


def concurrence_wootters(rho: DensityMatrix) -> float:
    """Concurrence from the spin-flip construction.

    The eigenvalues l1 >= l2 >= l3 >= l4 of rho (YY) rho* (YY) give
    C = max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)}.
    """
    if rho.dim != 4:
        raise ValueError("concurrence needs a two-atom (4x4) state")
    r = rho.mat
    flipped = _YY @ r.conj() @ _YY
    lam = np.sort(np.clip(np.linalg.eigvals(r @ flipped).real, 0.0, None))[::-1]
    roots = np.sqrt(lam)
    return max(0.0, float(roots[0] - roots[1] - roots[2] - roots[3]))


def discord_to_c(d: float, tol: float = 1e-9) -> float:
    """Invert the Werner discord curve: the c in [0, 1] whose discord is d.

    Bisection on the monotone closed form; ``tol`` bounds both the bracket
    width in c and the residual in discord.
    """
    if not 0.0 <= d <= 1.0:
        raise ValueError(f"discord target {d} lies outside the attainable range [0, 1]")
    if d == 0.0:
        return 0.0
    if d == 1.0:
        return 1.0
    lo, hi = 0.0, 1.0
    mid = 0.5
    floor = max(tol, 1e-15)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        value = discord_werner_closed(mid)
        if abs(value - d) <= tol and hi - lo <= floor:
            break
        if value < d:
            lo = mid
        else:
            hi = mid
    return mid


def classify_correlations(c: float) -> CorrelationClass:
    """Correlation regime of the Werner state: classical, discordant, entangled."""
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"Werner parameter c = {c} lies outside [0, 1]")
    if c <= CLASS_BOUNDARY_TOL:
        return CorrelationClass.CLASSICAL
    if c <= 1.0 / 3.0 + CLASS_BOUNDARY_TOL:
        return CorrelationClass.DISCORDANT_SEPARABLE
    return CorrelationClass.ENTANGLED
