"""The two eigen-equations satisfied by every Phi_n.

Each function solves a matrix Schrodinger equation with potential
x^2 I + 2J (family 1) or x^2 I + 4J (family 2), and is an eigenfunction of
a Fourier-type integral transform with diagonal eigenvalue i^n i^{kJ}.
Both identities are checked in exact coefficient algebra, and the transform
is replayed through an independent Gauss-Hermite quadrature.
"""

import numpy as np

from matschroed import FamilySpec, build_family
from matschroed.operators import (
    fourier_eigen_residual,
    quadrature_transform,
    schrodinger_residual,
    transform_apply,
)

for spec in (FamilySpec(1, 3, [1.0, 0.5]), FamilySpec(2, 3, [1.0, 0.5])):
    ctx = build_family(spec, 8)
    print(f"--- family {spec.kind}, N = {spec.size}, nu = {spec.nu} ---")
    for n in (0, 4, 8):
        s = schrodinger_residual(ctx, n)
        f = fourier_eigen_residual(ctx, n)
        print(f"n={n}: schrodinger residual {s.max_coeff_norm:.2e}, "
              f"transform residual {f.max_coeff_norm:.2e}")

    # the exact transform against brute-force numerical integration
    phi = ctx.phi[5]
    exact = transform_apply(phi, spec.kind)
    xs = np.linspace(-5, 5, 11)
    quad = quadrature_transform(phi, spec.kind, xs, 50)
    print(f"quadrature oracle vs exact transform (n=5): "
          f"{np.max(np.abs(quad - np.stack([exact(x) for x in xs]))):.2e}")
    print()
