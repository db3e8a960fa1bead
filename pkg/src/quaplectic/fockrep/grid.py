"""Finite-difference oracle for the relativistic oscillator spectrum."""

from __future__ import annotations

from math import factorial

import numpy as np
import scipy.linalg

from ..errors import ResolutionError, ValidationError
from .casimir import SpectrumReport
from .rep import Signature, Truncation, build_rep

LEVEL_TOL = 1e-3


def second_derivative_weights(order: int) -> np.ndarray:
    """Central stencil weights for ``d^2/dx^2`` of the given even accuracy order (unit spacing)."""
    if order < 2 or order % 2:
        raise ValidationError("stencil order must be an even integer >= 2")
    half = order // 2
    offsets = np.arange(-half, half + 1)
    vander = np.vander(offsets, increasing=True).T.astype(float)
    rhs = np.zeros(len(offsets))
    rhs[2] = factorial(2)
    return np.linalg.solve(vander, rhs)


def oscillator_1d(half_width: float, points: int, levels: int = 5, order: int = 4) -> np.ndarray:
    """Lowest ``levels`` eigenvalues of ``-d^2/dx^2 + x^2`` with Dirichlet walls."""
    x, h = np.linspace(-half_width, half_width, points, retstep=True)
    w = second_derivative_weights(order)
    half = len(w) // 2
    n = points - 2  # interior nodes; boundary values are zero
    diag = -w[half] / h**2 + x[1:-1] ** 2
    bands = [diag] + [np.full(n - k, -w[half + k] / h**2) for k in range(1, half + 1)]
    band = np.zeros((half + 1, n))
    for k, row in enumerate(bands):
        band[k, : n - k] = row
    return scipy.linalg.eig_banded(band, lower=True, select="i", select_range=(0, levels - 1), eigvals_only=True)


def oscillator_spectrum_grid(
    domain_half_width: float = 8.0,
    points_per_axis: int = 201,
    levels: int = 5,
    order: int = 4,
) -> SpectrumReport:
    """Spectrum of ``(-d_q^2 + q^2) - (-d_t^2 + t^2)`` by separation of variables.

    Each axis is a standard oscillator solved on the grid; the combined values
    are all differences ``E_q - E_t`` among the lowest ``levels`` of each.
    Raises ``ResolutionError`` if the 1-D levels miss ``2n + 1`` by more than
    1e-3.
    """
    if points_per_axis < 101 or domain_half_width < 6:
        raise ValidationError("need points_per_axis >= 101 and domain_half_width >= 6")
    e1 = oscillator_1d(domain_half_width, points_per_axis, levels, order)
    exact = 2 * np.arange(levels) + 1
    dev = float(np.max(np.abs(e1 - exact)))
    if dev > LEVEL_TOL:
        raise ResolutionError(f"1-D levels deviate from 2n+1 by {dev:.3g} (> {LEVEL_TOL:g}); refine the grid")
    combined = np.sort((e1[None, :] - e1[:, None]).ravel())  # [t, q] -> E_q - E_t
    even = float(np.max(np.abs(combined - 2 * np.round(combined / 2))))
    return SpectrumReport(combined, "grid", {"level_deviation": dev, "even_deviation": even, "one_d": e1})


def oscillator_spectrum_fock(levels: int = 5, cutoff: int | None = None) -> SpectrumReport:
    """Fock counterpart: eigenvalues of ``2N + 2`` for signature (1, 1) with ``n_a < levels``.

    ``N = n_1 - n_0 - 1`` in this representation, so ``2N + 2`` is the
    oscillator difference ``(2 n_1 + 1) - (2 n_0 + 1)``.
    """
    cutoff = cutoff or max(levels + 1, 4)
    b = build_rep(Signature(1, 1), Truncation(cutoff, 1))
    op = 2 * b.number_op + 2 * b.identity
    mask = np.all(b.occupations < levels, axis=1)
    vals = np.sort(np.real(np.diag(op)[mask]))
    offdiag = float(np.max(np.abs(op - np.diag(np.diag(op)))))
    return SpectrumReport(vals, "fock", {"offdiagonal": offdiag})


def oscillator_1d_fock(levels: int = 5) -> np.ndarray:
    """``2N + 1`` for one Euclidean mode: ``1, 3, 5, ...``."""
    b = build_rep(Signature(0, 1), Truncation(max(levels, 4), 1))
    return np.sort(np.real(np.diag(2 * b.number_op + b.identity)))[:levels]
