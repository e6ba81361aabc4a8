"""Inner products, expansion/reconstruction in the orthonormal basis,
matrix elements of multiplication by x^k, and band patterns.
"""

import csv
from dataclasses import dataclass, field

import numpy as np

from .families import FamilyContext, FamilySpec, build_structured, poly_eval, poly_matmul, weight_poly
from .hermite import gauss_hermite
from .matpoly import MatrixGaussian
from .structmat import nilpotent_series


def inner_product(F: MatrixGaussian, G: MatrixGaussian):
    """<F, G> = int F(x) G(x)^* dx, quadrature-exact.

    The paired Gaussian envelopes leave a polynomial against e^{-x^2}.
    """
    if F.size != G.size:
        raise ValueError("size mismatch")
    rule = gauss_hermite((F.degree + G.degree) // 2 + 8)
    t, w = rule.nodes, rule.weights
    return np.einsum("i,iab,icb->ac", w, F.poly_at(t), np.conj(G.poly_at(t)))


def inner_product_weighted(P, Q, spec: FamilySpec):
    """<P, Q>_W = int P(x) W(x) Q(x)^* dx for matrix polynomials P, Q.

    P and Q are coefficient arrays (degree+1, N, N) or MatrixGaussian objects,
    in which case their polynomial parts are used.
    """
    if isinstance(P, MatrixGaussian):
        P = P.coeffs
    if isinstance(Q, MatrixGaussian):
        Q = Q.coeffs
    pair = build_structured(spec.size, spec.nu)
    V = weight_poly(spec, pair)
    deg = (P.shape[0] - 1) + (Q.shape[0] - 1) + (V.shape[0] - 1)
    rule = gauss_hermite(deg // 2 + 8)
    t, w = rule.nodes, rule.weights
    return np.einsum(
        "i,iab,ibc,idc->ad", w, poly_eval(P, t), poly_eval(V, t), np.conj(poly_eval(Q, t))
    )


@dataclass(frozen=True)
class CoefficientExpansion:
    """F = sum_n coeffs[n] Phi-tilde_n, coefficients against the orthonormal family."""

    spec: FamilySpec
    n_max: int
    coeffs: np.ndarray = field(repr=False)


def _inverse_right_factor(ctx: FamilyContext):
    """Polynomial coefficients of R(x)^{-1}: e^{-Ax} or e^{-Bx^2}."""
    N = ctx.size
    A = ctx.structured.A
    import math

    if ctx.spec.kind == 1:
        coeffs = np.zeros((N, N, N))
        term = np.eye(N)
        for j in range(N):
            coeffs[j] = (-1) ** j * term / math.factorial(j)
            term = term @ A
        return coeffs
    B = A @ nilpotent_series([(-1) ** j * math.factorial(j) for j in range(N)], A)
    coeffs = np.zeros((2 * N - 1, N, N))
    term = np.eye(N)
    for j in range(N):
        coeffs[2 * j] = (-1) ** j * term / math.factorial(j)
        term = term @ B
    return coeffs


def expand(F: MatrixGaussian, ctx: FamilyContext, project=False):
    """Coefficients C_n = <F, Phi-tilde_n> of F against the orthonormal family.

    F must lie in the span of Phi-tilde_0..Phi-tilde_{n_max}; equivalently
    F(x) e^{x^2/2} R(x)^{-1} must be a matrix polynomial of degree <= n_max.
    Out-of-span inputs raise unless project=True, which returns the truncated
    projection instead.
    """
    if F.size != ctx.size:
        raise ValueError("size mismatch")
    if not project:
        q = poly_matmul(F.coeffs, _inverse_right_factor(ctx))
        scale = max(np.max(np.abs(q)), 1.0)
        deg = q.shape[0] - 1
        while deg > 0 and np.max(np.abs(q[deg])) < 1e-10 * scale:
            deg -= 1
        if deg > ctx.n_max:
            raise ValueError(
                f"input spans degree {deg} > n_max {ctx.n_max}; expansion would truncate "
                "(pass project=True for a projection)"
            )
    coeffs = np.stack([inner_product(F, ctx.phi_tilde[n]) for n in range(ctx.n_max + 1)])
    return CoefficientExpansion(spec=ctx.spec, n_max=ctx.n_max, coeffs=coeffs)


def reconstruct(expansion: CoefficientExpansion, ctx: FamilyContext):
    """Sum C_n Phi-tilde_n in exact coefficient algebra."""
    if expansion.n_max > ctx.n_max:
        raise ValueError("expansion index exceeds context")
    out = MatrixGaussian.zero(ctx.size)
    for n in range(expansion.n_max + 1):
        out = out + ctx.phi_tilde[n].left_mul(expansion.coeffs[n])
    return out


def matrix_element(ctx: FamilyContext, k, n, m):
    """(x^k I)_{nm} = int x^k Phi-tilde_n(x) Phi-tilde_m(x)^* dx."""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    xk = np.zeros(k + 1)
    xk[k] = 1.0
    return inner_product(ctx.phi_tilde[n].poly_mul(xk), ctx.phi_tilde[m])


@dataclass(frozen=True)
class BandMatrix:
    """Blocks (x^k I)_{nm} for n, m <= n_max, plus the flattened scalar view."""

    spec: FamilySpec
    k: int
    n_max: int
    threshold: float
    blocks: np.ndarray = field(repr=False)
    flat: np.ndarray = field(repr=False)
    mask: np.ndarray = field(repr=False)

    def to_csv(self, path):
        """Flattened matrix as CSV, complex entries split into _re/_im pairs."""
        size = self.flat.shape[0]
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            header = []
            for j in range(size):
                header += [f"c{j}_re", f"c{j}_im"]
            writer.writerow(header)
            for i in range(size):
                row = []
                for j in range(size):
                    row += [format(self.flat[i, j].real, ".17g"), format(self.flat[i, j].imag, ".17g")]
                writer.writerow(row)


def band_pattern(ctx: FamilyContext, k, n_max=None, threshold=1e-10):
    """Matrix of the homomorphism F -> x^k F in the orthonormal basis.

    Blocks with |n - m| > k vanish by degree counting; the boolean mask marks
    entries of the flattened scalar matrix above the threshold.
    """
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    if n_max is None:
        n_max = ctx.n_max
    if n_max > ctx.n_max:
        raise ValueError("n_max exceeds context")
    N = ctx.size
    blocks = np.zeros((n_max + 1, n_max + 1, N, N), dtype=complex)
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            if abs(n - m) <= k:
                blocks[n, m] = matrix_element(ctx, k, n, m)
    flat = blocks.transpose(0, 2, 1, 3).reshape((n_max + 1) * N, (n_max + 1) * N)
    return BandMatrix(
        spec=ctx.spec,
        k=k,
        n_max=n_max,
        threshold=threshold,
        blocks=blocks,
        flat=flat,
        mask=np.abs(flat) > threshold,
    )
