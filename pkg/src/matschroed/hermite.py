"""Scalar Hermite polynomials, wave functions and Gauss-Hermite quadrature.

Conventions: H_n are the physicists' polynomials (H_{n+1} = 2x H_n - 2n H_{n-1}),
hat-H_n the monic ones (hH_{n+1} = x hH_n - n hH_{n-1}), and
psi_n(x) = (2^n n! sqrt(pi))^{-1/2} e^{-x^2/2} H_n(x) the normalized wave
functions.  The quadrature rule integrates against the weight e^{-x^2} on R.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Hermite nodes/weights for the weight e^{-x^2}."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray


def hermite_monic(n):
    """Monomial coefficients (ascending) of the monic Hermite polynomial."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return np.array([1.0])
    prev = np.array([1.0])
    cur = np.array([0.0, 1.0])
    for k in range(1, n):
        nxt = np.zeros(k + 2)
        nxt[1:] = cur
        nxt[: k] -= k * prev
        prev, cur = cur, nxt
    return cur


def hermite_phys(n):
    """Monomial coefficients (ascending) of the physicists' Hermite polynomial."""
    if n == 0:
        return np.array([1.0])
    prev = np.array([1.0])
    cur = np.array([0.0, 2.0])
    for k in range(1, n):
        nxt = np.zeros(k + 2)
        nxt[1:] = 2.0 * cur
        nxt[: k] -= 2.0 * k * prev
        prev, cur = cur, nxt
    return cur


def wave_function(n, x):
    """psi_n(x), evaluated by the normalized three-term recurrence.

    psi_{k+1} = x sqrt(2/(k+1)) psi_k - sqrt(k/(k+1)) psi_{k-1}; no factorials,
    stable for large n.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    x = np.asarray(x, dtype=float)
    psi_prev = np.zeros_like(x)
    psi = np.pi ** -0.25 * np.exp(-x * x / 2.0)
    for k in range(n):
        psi_prev, psi = psi, x * np.sqrt(2.0 / (k + 1)) * psi - np.sqrt(k / (k + 1.0)) * psi_prev
    return psi


def wave_poly(n):
    """Monomial coefficients of the polynomial part of psi_n.

    psi_n(x) = (sum_j c_j x^j) e^{-x^2/2}; computed by the same normalized
    recurrence on coefficient vectors.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    prev = np.array([np.pi ** -0.25])
    if n == 0:
        return prev
    cur = np.array([0.0, np.sqrt(2.0) * np.pi ** -0.25])
    for k in range(1, n):
        nxt = np.zeros(k + 2)
        nxt[1:] = np.sqrt(2.0 / (k + 1)) * cur
        nxt[: k] -= np.sqrt(k / (k + 1.0)) * prev
        prev, cur = cur, nxt
    return cur


def gauss_hermite(m):
    """m-point Gauss-Hermite rule from the symmetric Jacobi matrix.

    Eigen-decomposition of the tridiagonal matrix with off-diagonal
    sqrt(k/2); weights are sqrt(pi) times the squared first eigenvector
    components.
    """
    if m < 1:
        raise ValueError("order must be >= 1")
    if m == 1:
        return QuadratureRule(order=1, nodes=np.zeros(1), weights=np.array([np.sqrt(np.pi)]))
    beta = np.sqrt(np.arange(1, m) / 2.0)
    try:
        nodes, vecs = eigh_tridiagonal(np.zeros(m), beta)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise RuntimeError("Jacobi matrix eigen-decomposition failed") from exc
    weights = np.sqrt(np.pi) * vecs[0] ** 2
    # symmetrize: nodes come out symmetric up to rounding
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    return QuadratureRule(order=m, nodes=nodes, weights=weights)
