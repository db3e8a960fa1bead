"""Complex matrix realization of the quaplectic group U(1,n) x_s H(n+1).

An element is a triple ``(upsilon, z, iota)`` with ``upsilon`` eta-unitary
(``upsilon^H eta upsilon = eta``, ``eta = diag(-1, 1, ..., 1)``), ``z`` complex
and ``iota`` real. Its realization is the ``(m + 2) x (m + 2)`` matrix::

    [ upsilon      0   upsilon z ]
    [ z^H eta      1   kappa     ]
    [ 0            0   1         ]

with ``kappa = i iota + z^H eta z / 2``. Lowering the row index of ``z`` with
``eta`` and shifting the corner by the real number ``z^H eta z / 2`` makes the
layout closed under multiplication with a *real* central parameter. The group
law is::

    (U1, z1, i1) (U2, z2, i2) = (U1 U2, U2^-1 z1 + z2, i1 + i2 + Im(z1^H eta U2 z2))

Real 8x8 (here 2m x 2m) homogeneous transforms in the coordinate order
(t, q, e, p) with block form ``[[Lam, M], [-M, Lam]]`` correspond to
``upsilon = phase * (M + i Lam)``, which is twice the half-normalised
``Xi = (M + i Lam)/2``; the factor 2 is what makes ``upsilon`` eta-unitary.
The default phase ``-i`` gives ``upsilon = Lam - i M``, for which the map
from real transforms is a group homomorphism (other unit phases only hold up
to a phase).
In 1+1 dimensions the (t, q, p, e) matrices of this package are first permuted
to (t, q, e, p) by :data:`TQPE_TO_TQEP`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError

#: index permutation taking (t, q, p, e) ordering to (t, q, e, p)
TQPE_TO_TQEP = np.array([0, 1, 3, 2])


def eta(m: int) -> np.ndarray:
    d = np.ones(m)
    d[0] = -1.0
    return np.diag(d)


def eta_unitarity_residual(upsilon: np.ndarray) -> float:
    u = np.asarray(upsilon, dtype=complex)
    e = eta(u.shape[0])
    return float(np.max(np.abs(u.conj().T @ e @ u - e)))


@dataclass(frozen=True)
class QuaplecticElement:
    upsilon: np.ndarray
    z: np.ndarray
    iota: float = 0.0
    tol: float = 1e-10

    def __post_init__(self):
        u = np.array(self.upsilon, dtype=complex)
        z = np.array(self.z, dtype=complex).reshape(-1)
        if u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise ValidationError(f"upsilon must be square, got shape {u.shape}")
        if z.shape != (u.shape[0],):
            raise ValidationError(f"z must have length {u.shape[0]}, got {z.shape}")
        res = eta_unitarity_residual(u)
        if res > self.tol:
            raise ValidationError(f"upsilon is not eta-unitary (residual {res:.3g})")
        if not np.isfinite(self.iota) or np.iscomplexobj(self.iota):
            raise ValidationError("iota must be a finite real number")
        u.setflags(write=False)
        z.setflags(write=False)
        object.__setattr__(self, "upsilon", u)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "iota", float(self.iota))

    @property
    def dim(self) -> int:
        return self.upsilon.shape[0]

    @property
    def realized(self) -> np.ndarray:
        m = self.dim
        e = eta(m)
        g = np.zeros((m + 2, m + 2), dtype=complex)
        g[:m, :m] = self.upsilon
        g[:m, m + 1] = self.upsilon @ self.z
        g[m, :m] = self.z.conj() @ e
        g[m, m] = 1.0
        g[m, m + 1] = 1j * self.iota + 0.5 * (self.z.conj() @ e @ self.z)
        g[m + 1, m + 1] = 1.0
        return g

    def __mul__(self, other: "QuaplecticElement") -> "QuaplecticElement":
        u2 = other.upsilon
        u2inv = eta(self.dim) @ u2.conj().T @ eta(self.dim)
        z = u2inv @ self.z + other.z
        cross = self.z.conj() @ eta(self.dim) @ u2 @ other.z
        return QuaplecticElement(self.upsilon @ u2, z, self.iota + other.iota + cross.imag)

    def inverse(self) -> "QuaplecticElement":
        e = eta(self.dim)
        return QuaplecticElement(e @ self.upsilon.conj().T @ e, -(self.upsilon @ self.z), -self.iota)

    @classmethod
    def identity(cls, m: int = 4) -> "QuaplecticElement":
        return cls(np.eye(m), np.zeros(m), 0.0)

    @classmethod
    def from_realized(cls, g: np.ndarray) -> "QuaplecticElement":
        g = np.asarray(g, dtype=complex)
        m = g.shape[0] - 2
        u = g[:m, :m]
        z = (g[m, :m] @ eta(m)).conj()
        kappa = g[m, m + 1] - 0.5 * (z.conj() @ eta(m) @ z)
        return cls(u, z, float(kappa.imag))


def upsilon_from_blocks(lam: np.ndarray, m: np.ndarray, phase: complex = -1j) -> np.ndarray:
    """``phase * (M + i Lam)`` for a real transform ``[[Lam, M], [-M, Lam]]`` in (x, y) order."""
    lam = np.asarray(lam, dtype=float)
    m = np.asarray(m, dtype=float)
    if abs(abs(phase) - 1.0) > 1e-12:
        raise ValidationError("phase must have unit modulus")
    return phase * (m + 1j * lam)


def blocks_from_real(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split a real ``2m x 2m`` (x, y)-ordered transform into ``(Lam, M)``.

    Raises ``ValidationError`` unless the matrix has the ``[[Lam, M], [-M, Lam]]``
    pattern to 1e-12.
    """
    a = np.asarray(matrix, dtype=float)
    m = a.shape[0] // 2
    lam, mm = a[:m, :m], a[:m, m:]
    if np.max(np.abs(a[m:, m:] - lam)) > 1e-12 or np.max(np.abs(a[m:, :m] + mm)) > 1e-12:
        raise ValidationError("matrix does not have the [[L, M], [-M, L]] block pattern")
    return lam, mm


def upsilon_from_transform(matrix: np.ndarray, phase: complex = -1j) -> np.ndarray:
    """eta-unitary 2x2 matrix for a natural-unit 1+1 reciprocal transform in (t, q, p, e) order."""
    a = np.asarray(matrix, dtype=float)[np.ix_(TQPE_TO_TQEP, TQPE_TO_TQEP)]
    return upsilon_from_blocks(*blocks_from_real(a), phase=phase)


def real_from_upsilon(upsilon: np.ndarray, phase: complex = -1j) -> np.ndarray:
    """Inverse of :func:`upsilon_from_blocks`; returns the (x, y)-ordered real matrix."""
    w = np.asarray(upsilon, dtype=complex) / phase
    lam, m = w.imag, w.real
    return np.block([[lam, m], [-m, lam]])
