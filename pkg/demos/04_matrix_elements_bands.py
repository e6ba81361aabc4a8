"""Band structure of multiplication by x and x^2 in the orthonormal basis.

The blocks (x^k I)_{nm} vanish for |n - m| > k, and the flattened scalar
matrices show characteristic star patterns: family 1 multiplication by x
is 4-diagonal with a zero main diagonal; family 2 is 7-diagonal with the
central three diagonals zero.
"""

import numpy as np

from matschroed import FamilySpec, build_family
from matschroed.expansion import band_pattern, matrix_element

for kind in (1, 2):
    spec = FamilySpec(kind, 2, [1.0])
    ctx = build_family(spec, 6)
    print(f"--- family {kind}, N = 2, multiplication by x ---")
    bp = band_pattern(ctx, 1, n_max=5)
    for row in bp.mask.astype(int):
        print(" ".join("*" if v else "." for v in row))
    print()

spec = FamilySpec(1, 2, [1.0])
ctx = build_family(spec, 4)
print("sample blocks for family 1 (n = 2):")
for m in (1, 2, 3):
    block = matrix_element(ctx, 1, 2, m)
    print(f"(x I)_(2,{m}) =")
    print(np.array_str(block.real, precision=6, suppress_small=True))
