"""Expansion, reconstruction and commutation.

Any function in the span of the orthonormal family expands into matrix
coefficients C_n = <F, Phi-tilde_n> and reconstructs exactly.  The span is
invariant under the Fourier-type transform, and the transform commutes with
the Schrodinger operator on it.
"""

import numpy as np

from matschroed import FamilySpec, build_family
from matschroed.expansion import expand, reconstruct
from matschroed.matpoly import MatrixGaussian
from matschroed.operators import potential_shift, schrodinger_apply, transform_apply

rng = np.random.default_rng(42)
spec = FamilySpec(1, 3, [1.0, -0.5])
ctx = build_family(spec, 8)
N = spec.size

# random element of span{Phi-tilde_0..Phi-tilde_8}
target = rng.standard_normal((9, N, N)) + 1j * rng.standard_normal((9, N, N))
F = MatrixGaussian.zero(N)
for n in range(9):
    F = F + ctx.phi_tilde[n].left_mul(target[n])

e = expand(F, ctx)
print(f"coefficient recovery error: {np.max(np.abs(e.coeffs - target)):.2e}")
G = reconstruct(e, ctx)
print(f"reconstruction error: {(F - G).max_abs():.2e}")

k = spec.kind
H = transform_apply(transform_apply(F, k, 1), k, -1)
print(f"transform round-trip error: {(F - H).max_abs():.2e}")

c = potential_shift(k)
J = ctx.structured.J
a = transform_apply(schrodinger_apply(F, J, c), k)
b = schrodinger_apply(transform_apply(F, k), J, c)
print(f"commutation defect (transform vs schrodinger): {(a - b).max_abs():.2e}")

# out-of-span inputs are rejected unless a projection is requested
big = build_family(spec, 10)
try:
    expand(big.phi_tilde[10], ctx)
except ValueError as exc:
    print(f"out-of-span input rejected: {exc}")
proj = expand(big.phi_tilde[10], ctx, project=True)
print(f"projection of an orthogonal function: {np.max(np.abs(proj.coeffs)):.2e}")
