"""Heat-kernel evaluation: spectral synthesis and Poisson-series uniformization.

Both engines evaluate ``K(t) = exp(t (A - D))`` — a symmetric doubly
stochastic matrix whose entry ``K[x, y]`` is the heat at y after time t of a
unit source at x.  The spectral route is cheap per extra t; uniformization
never subtracts, so its entries are nonnegative by construction and tiny
entries keep relative accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .spectral import SpectralDecomposition, eigendecompose, kirchhoff_matrix

#: Default truncation bound on the neglected Poisson tail mass.
DEFAULT_EPS = 1e-12

# Split e^{tL} into equal semigroup factors once c*t exceeds this, keeping
# e^{-ct} comfortably away from double underflow (exp(-200) ~ 1.4e-87).
_MAX_POISSON_MEAN = 200.0


@dataclass(frozen=True)
class HeatKernel:
    """Kernel matrix at a fixed time; ``K[x, y] = p_t(x, y)``."""

    t: float
    K: np.ndarray
    method: str

    @property
    def n(self) -> int:
        return int(self.K.shape[0])

    def entry(self, x: int, y: int) -> float:
        return float(self.K[x, y])


def kernel_spectral(dec: SpectralDecomposition, t: float) -> HeatKernel:
    """Evaluate ``V diag(e^{mu t}) V^T`` from a precomputed eigendecomposition.

    ``t = 0`` returns the exact identity.  The result is symmetrized, so
    ``K[x, y] == K[y, x]`` holds exactly.
    """
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    n = dec.n
    if t == 0:
        K = np.eye(n)
    else:
        w = np.exp(dec.mu * t)
        K = (dec.V * w) @ dec.V.T
        K = 0.5 * (K + K.T)
    K.setflags(write=False)
    return HeatKernel(float(t), K, "spectral")


def _poisson_series(P: np.ndarray, ct: float, eps: float) -> np.ndarray:
    """Sum ``e^{-ct} sum_k (ct)^k / k! P^k`` with a rigorous tail cutoff.

    Poisson weights are accumulated by the exact recurrence
    ``w_{k+1} = w_k * ct / (k+1)``.  Once ``k + 2 > ct`` the remaining mass is
    bounded by the geometric tail ``w_{k+1} / (1 - ct/(k+2))``; the loop stops
    when that bound drops below eps.  This terminates for any eps > 0 (the
    weights eventually underflow to zero) — an "accumulate until the partial
    sums reach 1 - eps" test would stall near machine precision instead.
    """
    n = P.shape[0]
    w = math.exp(-ct)
    S = w * np.eye(n)
    M = np.eye(n)
    k = 0
    while True:
        if k + 2.0 > ct:
            w_next = w * ct / (k + 1.0)
            if w_next / (1.0 - ct / (k + 2.0)) < eps:
                break
        k += 1
        w *= ct / k
        M = M @ P
        S += w * M
    return S


def kernel_uniformization(g: Graph, t: float, eps: float = DEFAULT_EPS) -> HeatKernel:
    """Evaluate ``e^{t(A-D)}`` through the substochastic shift ``P = (A-D)/c + I``.

    ``c`` is the maximum weighted degree — the smallest shift making P
    entrywise nonnegative — so every series term is nonnegative and no
    cancellation occurs.  The neglected Poisson tail carries at most ``eps``
    of the total mass.  Edgeless graphs (c = 0) short-circuit to the
    identity, which is the exact kernel there.  Large ``c*t`` is split into
    equal semigroup factors to avoid underflow of ``e^{-ct}``; splitting
    preserves nonnegativity since it only multiplies nonnegative matrices.
    """
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    n = g.n
    c = g.max_weighted_degree()
    if c == 0.0 or t == 0:
        K = np.eye(n)
    else:
        P = kirchhoff_matrix(g).dense / c + np.eye(n)
        ct = c * t
        steps = max(1, math.ceil(ct / _MAX_POISSON_MEAN))
        factor = _poisson_series(P, ct / steps, eps / steps)
        K = factor
        for _ in range(steps - 1):
            K = K @ factor
        K = 0.5 * (K + K.T)  # average of two nonnegative matrices stays nonnegative
    K.setflags(write=False)
    return HeatKernel(float(t), K, "uniformization")


def kernel_entry(
    g: Graph, t: float, x: int, y: int, method: str = "spectral", eps: float = DEFAULT_EPS
) -> float:
    """One kernel entry ``p_t(x, y)``, building the kernel from scratch.

    Convenience for one-off queries; batch callers should build the kernel
    (or a sampler) once and reuse it.
    """
    if method == "spectral":
        dec = eigendecompose(kirchhoff_matrix(g))
        return kernel_spectral(dec, t).entry(x, y)
    if method == "uniformization":
        return kernel_uniformization(g, t, eps).entry(x, y)
    raise ValueError(f"unknown method {method!r}")
