"""Why the ball picture of state space is exact only for qubits.

States embed into a closed ball in R^(n^2 - 1) via the coherence vector,
with |s|^2 = Tr(rho^2) - 1/n.  For n = 2 every point of the ball is a
state.  For n = 3 positivity carves the ball: spheres of purity up to 1/2
are fully physical, then physical directions thin out until only the
measure-zero pure-state orbit remains on the boundary sphere.
"""

import numpy as np

from orbit_atlas import (
    convert_convention,
    from_coherence_vector,
    purity,
    random_density_matrix,
    sphere_physical_fraction,
    to_coherence_vector,
)
from orbit_atlas.pauli import Convention

rng = np.random.default_rng(2024)

print("Norm identity |s|^2 = Tr(rho^2) - 1/n on random states:")
for n in (2, 3, 4):
    rho = random_density_matrix(n, rng)
    vec = to_coherence_vector(rho)
    print(f"  n={n}: |s|^2 = {vec.norm() ** 2:.12f}, "
          f"Tr(rho^2) - 1/n = {purity(rho) - 1 / n:.12f}")

rho = random_density_matrix(3, rng)
vec = to_coherence_vector(rho)
bloch = convert_convention(vec, Convention.BLOCH)
err = np.abs(from_coherence_vector(bloch) - rho.matrix).max()
print(f"\nBloch convention is twice the coherence vector; reconstruction "
      f"error through it: {err:.2e}")

print("\nFraction of a fixed-purity sphere that is physical (10^4 samples):")
print("  purity   n=2      n=3")
for c2 in (0.55, 0.6, 0.7, 0.8, 0.9, 1.0):
    f2 = sphere_physical_fraction(2, c2, 10_000, seed=1)
    f3 = sphere_physical_fraction(3, c2, 10_000, seed=1)
    print(f"  {c2:.2f}   {f2:.4f}   {f3:.4f}")
print("\nThe qubit column stays at 1: the embedding is onto the whole ball.")
print("The qutrit column decays to ~0: only the pure orbit lives on the")
print("boundary sphere, and it has measure zero there.")
