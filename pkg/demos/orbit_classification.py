"""Walk through orbit classification for a few three- and four-level states.

Every density matrix is unitarily reachable exactly from the states sharing
its spectrum, so the orbit is named by the degeneracy pattern alone.  This
script classifies a handful of states, prints their flag-manifold labels and
dimensions, and compares disorder via majorization and entropy.
"""

import numpy as np

from orbit_atlas import (
    DensityMatrix,
    enumerate_orbit_table,
    flag_manifold_name,
    majorize_compare,
    orbit_dimension,
    orbit_signature,
    von_neumann_entropy,
)

STATES = {
    "maximally mixed": np.diag([1 / 3, 1 / 3, 1 / 3]),
    "pure": np.diag([1.0, 0.0, 0.0]),
    "degenerate pair": np.diag([0.6, 0.2, 0.2]),
    "generic": np.diag([0.5, 0.3, 0.2]),
    "two doublets (n=4)": np.diag([0.3, 0.3, 0.2, 0.2]),
}

print("state                 class              manifold                        dim  entropy")
print("-" * 92)
for name, matrix in STATES.items():
    rho = DensityMatrix(matrix)
    sig = orbit_signature(rho)
    print(f"{name:<21} {sig.state_class.value:<18} "
          f"{flag_manifold_name(sig):<31} {orbit_dimension(sig):>3}  "
          f"{von_neumann_entropy(rho):.6f}")

print()
print("Majorization compares disorder through partial sums of the sorted")
print("spectrum (ascending-order dominance, as in the worked example):")
pairs = [
    (np.diag([0.2, 0.2, 0.6]), np.diag([0.4, 0.4, 0.2])),
    (np.diag([5 / 8, 2 / 8, 1 / 8]), np.diag([4 / 8, 4 / 8, 0.0])),
]
for m1, m2 in pairs:
    rho1, rho2 = DensityMatrix(m1), DensityMatrix(m2)
    rel = majorize_compare(rho1, rho2)
    print(f"  spec {np.diag(m1).round(3)} vs {np.diag(m2).round(3)}: {rel.value}")

print()
print("All orbit types for n = 4, one per degeneracy pattern:")
for row in enumerate_orbit_table(4):
    pattern = "+".join(str(m) for m in row.partition)
    print(f"  multiplicities {pattern:<9} {row.manifold:<32} dim {row.dimension}")
