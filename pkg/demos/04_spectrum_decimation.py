# Spectrum of the fundamental matrix by decimation
# ================================================
#
# Each eigenvalue of P_g = I - R̄_g spawns two eigenvalues of P_{g+1};
# 2 * 4**g fresh eigenvalues equal to 1 fill in the rest.
from collections import Counter

import numpy as np

from recipwalk import NetworkConfig, assemble, build_weighted, spectrum
from recipwalk.spectral import lambda_min, largest_k_eigenvalue_scaling, numerical_eigenvalues, verify_block_identity

theta = 1.0
s = spectrum(3, theta)
for e in s.entries:
    print(f"{e.value:.10f}  x{e.multiplicity:<3d} {'/'.join(e.lineage)}")
print("total:", s.total_multiplicity, " multiplicity of 1:", s.multiplicity_of(1.0))
print("lineage roots:", Counter(e.lineage[0] for e in s.entries))

# Compare with a dense eigensolve of P_4.
numeric = numerical_eigenvalues(assemble(build_weighted(NetworkConfig(4, 2.0))).p_matrix)
print("g=4, theta=2, max |decimation - eig| =", np.max(np.abs(spectrum(4, 2.0).expanded() - numeric)))

# The recursion rests on P_ab P_ba = I - P_g / (2 theta + 2).
print("block identity deviation, g=3:", verify_block_identity(3, theta))

# The largest eigenvalue of K = P^-1 grows like the MFPT.
print(f"lambda_min(10) = {lambda_min(10, theta):.6e}")
for row in largest_k_eigenvalue_scaling(10, theta)[-4:]:
    print(row)
