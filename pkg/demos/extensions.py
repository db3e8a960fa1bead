"""Where the central generator comes from.

The inhomogeneous Lorentz algebra has no nontrivial central extension, while
the inhomogeneous unitary algebra has exactly one. Adding it recovers the
Heisenberg-extended algebra, and contracting the unitary part shows the
relativistic and Galilean limits.
"""

import numpy as np

from quaplectic.liealg import (
    builtin_algebra,
    central_extensions,
    contract,
    extend,
    fingerprint,
    jacobi_residual,
    preset_weights,
)

for name in ("poincare13", "inhom_unitary11", "inhom_unitary13", "heisenberg1"):
    L = builtin_algebra(name)
    sol = central_extensions(L)
    print(f"{name:16s} dim {L.dim:2d}  Jacobi {jacobi_residual(L):.1e}  h2 {sol.h2_dim}")

L = builtin_algebra("inhom_unitary11")
omega = central_extensions(L).cocycles[0]
print("\nThe single cocycle pairs translations only:")
for a, b in zip(*np.nonzero(np.triu(np.abs(omega) > 1e-12))):
    print(f"  {L.names[a]} ^ {L.names[b]}  {omega[a, b]:+.4f}")

Q = extend(L, omega)
print("\nExtended algebra fingerprint:", fingerprint(Q))
print("Catalog quaplectic11 fingerprint:", fingerprint(builtin_algebra("quaplectic11")))

U = builtin_algebra("unitary13")
for preset in ("special_relativity", "nonrelativistic"):
    C = contract(U, preset_weights(U, preset))
    fp = fingerprint(C)
    print(f"\n{preset}: dim {fp['dim']}, derived {fp['derived']}, Killing rank {fp['killing_rank']}")
