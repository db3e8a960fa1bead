"""Reciprocal-relativity kinematics, quaplectic Lie algebras and their oscillator representations."""

from . import errors, fockrep, kinematics, liealg

__version__ = "0.1.0"
__all__ = ["errors", "kinematics", "liealg", "fockrep"]
