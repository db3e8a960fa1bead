"""Frames with bounded velocity and bounded force.

Walks through the reciprocal transform: it reduces to a Lorentz boost when the
force vanishes, composes in closed form, and has a fixed-point surface that
generalizes the light cone.
"""

import numpy as np

from quaplectic.kinematics import (
    FrameParams,
    build_transform,
    compose,
    extract_params,
    invariance_residuals,
    limit_check,
    null_surface,
    rates_transform,
    RateVector,
)

np.set_printoptions(precision=4, suppress=True)

boost = FrameParams(0.6)
print("A pure boost at v = 0.6 is the ordinary Lorentz matrix:")
print(build_transform("reciprocal", boost).matrix)

a, b = FrameParams(0.3, 0.2, 0.05), FrameParams(-0.1, 0.4, 0.0)
law = compose("reciprocal", b, a)
prod = build_transform("reciprocal", a).matrix @ build_transform("reciprocal", b).matrix
print("\nComposition law:", law.as_array())
print("Read off the matrix product:", extract_params(prod).as_array())

print("\nInvariant forms survive:", invariance_residuals(build_transform("reciprocal", a)))
print("The Hamilton limit keeps the symplectic form but not the Born-Green metric:")
print(invariance_residuals(build_transform("hamilton", FrameParams(0, 1, 0))))

print("\nAcceleration seen from a frame moving at 0.6:", rates_transform(boost, RateVector(1, 0, 0)).as_array())

edge = FrameParams(0.6, 0.8, 0.0)
print("\nOn the null surface v^2 + f^2 = 1 the frame composes to itself:", null_surface(edge))

rep = limit_check(FrameParams(0.5, 0.3, 0.1))
print("\nDistance to the large-b form falls like b^-2; fitted slope", round(rep.slope, 4))
for (_, bb), e in zip(rep.schedule, rep.binf_error):
    print(f"  b = {bb:8.0e}  error {e:.3e}")
