"""Central extensions as second Lie algebra cohomology with trivial coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ..errors import ValidationError
from .algebra import LieAlgebra, jacobi_residual

RANK_RTOL = 1e-9


@dataclass(frozen=True)
class CocycleSolution:
    """Nontrivial 2-cocycles modulo coboundaries.

    ``cocycles[k]`` is an antisymmetric ``dim x dim`` matrix with unit Frobenius
    norm; ``[X_a, X_b]`` picks up ``cocycles[k][a, b] * I_k`` in the extension.
    """

    h2_dim: int
    cocycles: list[np.ndarray]
    kernel_dim: int
    coboundary_rank: int
    singular_values: np.ndarray = field(repr=False)

    def max_cocycle_residual(self, L: LieAlgebra) -> float:
        return max((cocycle_residual(L, w) for w in self.cocycles), default=0.0)


def _pairs(d: int):
    return list(combinations(range(d), 2))


def _unpack(vec: np.ndarray, d: int) -> np.ndarray:
    w = np.zeros((d, d))
    iu = np.triu_indices(d, 1)
    w[iu] = vec
    return w - w.T


def cocycle_matrix(L: LieAlgebra) -> np.ndarray:
    """Linear map from ``omega_{ab}`` (a < b) to the cocycle condition per triple a < b < c.

    The condition is ``omega([X_a, X_b], X_c) + cyclic = 0``.
    """
    d = L.dim
    pairs = _pairs(d)
    col = {p: i for i, p in enumerate(pairs)}
    triples = list(combinations(range(d), 3))
    m = np.zeros((len(triples), len(pairs)))
    c = L.structure

    def add(row, e, g, coeff):
        # coeff * omega[e, g]
        if e == g or coeff == 0.0:
            return
        if e < g:
            m[row, col[(e, g)]] += coeff
        else:
            m[row, col[(g, e)]] -= coeff

    for row, (a, b, g) in enumerate(triples):
        for x, y, z in ((a, b, g), (b, g, a), (g, a, b)):
            for e in np.nonzero(c[x, y])[0]:
                add(row, int(e), z, c[x, y, e])
    return m


def coboundary_matrix(L: LieAlgebra) -> np.ndarray:
    """Map ``lambda -> omega_{ab} = sum_c c[a, b, c] lambda_c`` on a < b."""
    iu = np.triu_indices(L.dim, 1)
    return L.structure[iu[0], iu[1], :]


def cocycle_residual(L: LieAlgebra, omega: np.ndarray) -> float:
    iu = np.triu_indices(L.dim, 1)
    m = cocycle_matrix(L)
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m @ np.asarray(omega)[iu])))


def coboundary_distance(L: LieAlgebra, omega: np.ndarray) -> float:
    """Frobenius-type distance from ``omega`` to the coboundary space (on a < b entries)."""
    iu = np.triu_indices(L.dim, 1)
    vec = np.asarray(omega)[iu]
    b = coboundary_matrix(L)
    if b.size == 0:
        return float(np.linalg.norm(vec))
    coeff, *_ = np.linalg.lstsq(b, vec, rcond=None)
    return float(np.linalg.norm(vec - b @ coeff))


def _null_space(m: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    if m.shape[0] == 0:
        return np.eye(n), np.zeros(0)
    _, s, vt = np.linalg.svd(m)
    tol = RANK_RTOL * (s[0] if s.size and s[0] > 0 else 1.0)
    rank = int(np.sum(s > tol))
    return vt[rank:].T, s


def _range(m: np.ndarray) -> np.ndarray:
    if m.size == 0:
        return np.zeros((m.shape[0], 0))
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    tol = RANK_RTOL * (s[0] if s.size and s[0] > 0 else 1.0)
    return u[:, s > tol]


def central_extensions(L: LieAlgebra, jacobi_tol: float = 1e-9) -> CocycleSolution:
    """Solve for the nontrivial central extensions of ``L``.

    Raises ``ValidationError`` if ``L`` fails the Jacobi identity.
    """
    res = jacobi_residual(L)
    if res > jacobi_tol:
        raise ValidationError(f"Jacobi residual {res:.3g} exceeds {jacobi_tol:g}")
    d = L.dim
    npairs = d * (d - 1) // 2
    kernel, svals = _null_space(cocycle_matrix(L), npairs)
    image = _range(coboundary_matrix(L))
    h2 = kernel.shape[1] - image.shape[1]

    # project the cocycle space off the coboundaries and orthonormalise
    proj = kernel - image @ (image.T @ kernel)
    basis = _range(proj)[:, :h2] if h2 > 0 else np.zeros((npairs, 0))
    cocycles = []
    for k in range(basis.shape[1]):
        w = _unpack(basis[:, k], d)
        w /= np.linalg.norm(w)
        # fix the sign so the largest entry in the upper triangle is positive
        iu = np.triu_indices(d, 1)
        big = np.argmax(np.abs(w[iu]))
        if w[iu][big] < 0:
            w = -w
        cocycles.append(w)
    return CocycleSolution(h2, cocycles, kernel.shape[1], image.shape[1], svals)


def extend(L: LieAlgebra, omega: np.ndarray, name: str = "I") -> LieAlgebra:
    """Central extension of ``L`` by one generator using the cocycle ``omega``."""
    d = L.dim
    c = np.zeros((d + 1, d + 1, d + 1))
    c[:d, :d, :d] = L.structure
    c[:d, :d, d] = omega
    return LieAlgebra(L.names + (name,), c)
