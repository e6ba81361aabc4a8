"""The two concrete families of matrix-valued orthogonal functions.

Family 1 has weight e^{-x^2} e^{Ax} e^{A*x}; family 2 has weight
e^{-x^2} e^{Bx^2} e^{B*x^2} with B = A(I+A)^{-1}.  In both cases the monic
orthogonal polynomials are built by Gram-Schmidt under the weighted inner
product (quadrature-exact, every integrand is a polynomial times e^{-x^2}),
then rescaled by a constant leading factor so the norms become diagonal, and
finally turned into L^2 orthonormal functions Phi-tilde_n.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .hermite import gauss_hermite, wave_poly
from .matpoly import MatrixGaussian
from .structmat import (
    StructuredPair,
    build_structured,
    inv_sqrt_power,
    nilpotent_series,
    phase_diag,
)


class ConsistencyError(RuntimeError):
    """A structural identity the construction relies on failed numerically."""


@dataclass(frozen=True)
class FamilySpec:
    """Which family (1 or 2), matrix size N and superdiagonal parameters nu."""

    kind: int
    size: int
    nu: tuple

    def __post_init__(self):
        if self.kind not in (1, 2):
            raise ValueError("kind must be 1 or 2")
        if self.size < 1:
            raise ValueError("size must be >= 1")
        object.__setattr__(self, "nu", tuple(float(v) for v in self.nu))
        if len(self.nu) != self.size - 1:
            raise ValueError(f"expected {self.size - 1} parameters, got {len(self.nu)}")

    def to_json(self):
        return json.dumps({"kind": self.kind, "N": self.size, "nu": list(self.nu)})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(kind=data["kind"], size=data["N"], nu=data["nu"])


def gamma_seq(spec, n_max):
    """The scalar normalization sequence for N = 2 closed forms.

    Family 1: gamma_n = 1 + n nu1^2 / 2.  Family 2: gamma_n = 1 + (nu1^2/2) C(n, 2).
    """
    if spec.size != 2:
        raise ValueError("gamma sequence is defined for N = 2 only")
    nu1 = spec.nu[0]
    n = np.arange(n_max + 1)
    if spec.kind == 1:
        return 1.0 + 0.5 * n * nu1 ** 2
    return 1.0 + 0.5 * nu1 ** 2 * (n * (n - 1) / 2.0)


# -- matrix polynomial helpers (ascending coeffs, shape (d+1, N, N)) --------


def poly_matmul(p, q):
    """Product of two matrix polynomials (convolution with matrix products)."""
    dp, dq = p.shape[0] - 1, q.shape[0] - 1
    N = p.shape[1]
    out = np.zeros((dp + dq + 1, N, N), dtype=np.result_type(p, q))
    for a in range(dp + 1):
        for b in range(dq + 1):
            out[a + b] += p[a] @ q[b]
    return out


def poly_eval(p, xs):
    """Evaluate a matrix polynomial at 1-d points xs -> (len(xs), N, N)."""
    out = np.broadcast_to(p[-1], (xs.size,) + p.shape[1:]).copy()
    for j in range(p.shape[0] - 2, -1, -1):
        out = out * xs[:, None, None] + p[j]
    return out


def right_factor_poly(pair: StructuredPair, kind):
    """Matrix polynomial part of the weight factor: e^{Ax} or e^{Bx^2}."""
    N, A = pair.size, pair.A
    if kind == 1:
        coeffs = np.zeros((N, N, N))
        term = np.eye(N)
        for j in range(N):
            coeffs[j] = term / math.factorial(j)
            term = term @ A
        return coeffs
    B = A @ nilpotent_series([(-1) ** j * math.factorial(j) for j in range(N)], A)  # A (I+A)^{-1}
    coeffs = np.zeros((2 * N - 1, N, N))
    term = np.eye(N)
    for j in range(N):
        coeffs[2 * j] = term / math.factorial(j)
        term = term @ B
    return coeffs


def weight_poly(spec, pair):
    """Polynomial part of the weight: e^{x^2} W(x) = R(x) R(x)^T."""
    R = right_factor_poly(pair, spec.kind)
    RT = np.swapaxes(R, 1, 2)
    return poly_matmul(R, RT)


def weight_eval(spec, x):
    """The weight matrix W(x); symmetric positive definite, W(0) = I."""
    pair = build_structured(spec.size, spec.nu)
    V = weight_poly(spec, pair)
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    xs = np.atleast_1d(x)
    vals = poly_eval(V, xs) * np.exp(-xs * xs)[:, None, None]
    return vals[0] if scalar else vals


def normalizer(pair: StructuredPair, kind, n):
    """Constant leading factor L_n making the eigenvalue and norms diagonal."""
    if kind == 1:
        # e^{-A^2/4}
        return nilpotent_series([(-0.25) ** j for j in range(pair.size)], pair.A @ pair.A)
    return inv_sqrt_power(pair.A, 2 * n + 1)


@dataclass(frozen=True)
class FamilyContext:
    """Everything built for one family up to index n_max."""

    spec: FamilySpec
    structured: StructuredPair
    n_max: int
    quad: object = field(repr=False)
    right_factor: np.ndarray = field(repr=False)
    wpoly: np.ndarray = field(repr=False)
    monic: list = field(repr=False)
    normalizers: list = field(repr=False)
    pn: list = field(repr=False)
    norms: list = field(repr=False)
    phi: list = field(repr=False)
    phi_tilde: list = field(repr=False)

    @property
    def size(self):
        return self.spec.size


def build_family(spec, n_max, quad_order=None):
    """Construct monic polynomials, normalized polynomials and functions.

    Gram-Schmidt (classical, with one re-orthogonalization pass) on the monic
    monomials x^n I under the weighted inner product, then P_n = L_n hat-P_n,
    Phi_n = e^{-x^2/2} P_n(x) R(x) and Phi-tilde_n = ||P_n||^{-1} Phi_n.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    pair = build_structured(spec.size, spec.nu)
    N = spec.size
    V = weight_poly(spec, pair)
    deg_w = V.shape[0] - 1
    # integrands are degree <= 2 n_max + deg_w; exactness needs 2m - 1 >= that
    required = (2 * n_max + deg_w) // 2 + 1
    if quad_order is None:
        quad_order = max(n_max + N + 8, required)
    elif quad_order < required:
        raise ValueError(f"quadrature order {quad_order} below exactness requirement {required}")
    rule = gauss_hermite(quad_order)
    xs, ws = rule.nodes, rule.weights
    Vx = poly_eval(V, xs)

    def inner_w(p, q):
        px = poly_eval(p, xs)
        qx = poly_eval(q, xs)
        return np.einsum("i,iab,ibc,idc->ad", ws, px, Vx, np.conj(qx))

    # W(-x) = E W(x) E (family 1, E = diag((-1)^{N-1-j})) or W(-x) = W(x)
    # (family 2), so hat-P_n is even under the matching reflection; projecting
    # onto that symmetric part removes the anti-symmetric rounding noise.
    E = phase_diag(N, 2).real
    signs = (-1.0) ** np.arange(n_max + 1)

    def symmetrize(p, n):
        refl = p * signs[: p.shape[0], None, None]
        if spec.kind == 1:
            refl = np.einsum("ab,jbc,cd->jad", E, refl, E)
        return 0.5 * (p + (-1.0) ** n * refl)

    monic, hat_norms = [], []
    for n in range(n_max + 1):
        p = np.zeros((n + 1, N, N), dtype=complex)
        p[n] = np.eye(N)
        for _ in range(2):
            for m in range(n):
                C = np.linalg.solve(hat_norms[m].T, inner_w(p, monic[m]).T).T
                p[: m + 1] -= np.einsum("ab,jbc->jac", C, monic[m])
            p = symmetrize(p, n)
        monic.append(p)
        hat_norms.append(inner_w(p, p))

    R = right_factor_poly(pair, spec.kind)
    normalizers_, pn, norms, phi, phi_tilde = [], [], [], [], []
    for n in range(n_max + 1):
        L = normalizer(pair, spec.kind, n)
        normalizers_.append(L)
        p = np.einsum("ab,jbc->jac", L, monic[n])
        pn.append(p)
        G = L @ hat_norms[n] @ np.conj(L).T
        diag = np.real(np.diag(G))
        off = G - np.diag(np.diag(G))
        if np.max(np.abs(off)) > 1e-8 * np.max(np.abs(diag)):
            raise ConsistencyError(f"norm of P_{n} is not diagonal: off-diagonal {np.max(np.abs(off)):.3e}")
        if np.any(diag <= 0):
            raise ConsistencyError(f"norm of P_{n} has non-positive diagonal entries")
        norms.append(np.diag(diag))
        f = MatrixGaussian.from_poly(poly_matmul(p, R))
        phi.append(f)
        phi_tilde.append(f.left_mul(np.diag(1.0 / np.sqrt(diag))))

    return FamilyContext(
        spec=spec,
        structured=pair,
        n_max=n_max,
        quad=rule,
        right_factor=R,
        wpoly=V,
        monic=monic,
        normalizers=normalizers_,
        pn=pn,
        norms=norms,
        phi=phi,
        phi_tilde=phi_tilde,
    )


def closed_form_N2(spec, n):
    """The explicit normalized Phi-tilde_n for N = 2, assembled from wave functions."""
    if spec.size != 2:
        raise ValueError("closed forms are available for N = 2 only")
    nu1 = spec.nu[0]
    gseq = gamma_seq(spec, n + 3)

    def entry(idx, coeff):
        if coeff == 0.0 or idx < 0:
            return np.zeros(1)
        return coeff * wave_poly(idx)

    if spec.kind == 1:
        e11 = entry(n, 1.0 / np.sqrt(gseq[n + 1]))
        e12 = entry(n + 1, nu1 * np.sqrt((n + 1) / (2.0 * gseq[n + 1])))
        e21 = entry(n - 1, -nu1 * np.sqrt(n / (2.0 * gseq[n]))) if n >= 1 else np.zeros(1)
        e22 = entry(n, 1.0 / np.sqrt(gseq[n]))
        deg = n + 1
    else:
        e11 = entry(n, 1.0 / np.sqrt(gseq[n + 2]))
        e12 = entry(n + 2, 0.5 * nu1 * np.sqrt((n + 1) * (n + 2) / gseq[n + 2]))
        e21 = entry(n - 2, -0.5 * nu1 * np.sqrt(n * (n - 1) / gseq[n])) if n >= 2 else np.zeros(1)
        e22 = entry(n, 1.0 / np.sqrt(gseq[n]))
        deg = n + 2
    coeffs = np.zeros((deg + 1, 2, 2), dtype=complex)
    for (i, j), e in (((0, 0), e11), ((0, 1), e12), ((1, 0), e21), ((1, 1), e22)):
        coeffs[: len(e), i, j] = e
    return MatrixGaussian(coeffs)
