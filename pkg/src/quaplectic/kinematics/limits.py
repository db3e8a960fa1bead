"""Contraction limits of the reciprocal group and the integrated Hamilton maps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .transforms import Constants, FrameParams, build_transform


@dataclass(frozen=True)
class LimitReport:
    """Errors of the reciprocal matrix against its limiting forms along a schedule.

    Attributes
    ----------
    schedule : list of (c, b)
    binf_error : max-norm of ``Gamma_{c,b} - Gamma0_c`` (the b -> inf form)
    lorentz_error : max-norm of ``Gamma_{c,b} - Lambda_c``
    hamilton_error : max-norm of ``Gamma_{c,b} - Phi``
    slope : least-squares slope of ``log(binf_error)`` against ``log(b)``;
        ``nan`` when any error vanishes or ``b`` does not vary
    """

    schedule: list[tuple[float, float]]
    binf_error: np.ndarray
    lorentz_error: np.ndarray
    hamilton_error: np.ndarray
    slope: float

    @property
    def binf_monotone(self) -> bool:
        return bool(np.all(np.diff(self.binf_error) <= 0.0))

    @property
    def hamilton_monotone(self) -> bool:
        return bool(np.all(np.diff(self.hamilton_error) < 0.0))


def geometric_schedule(start: float = 1e2, stop: float = 1e6, factor: float = 10.0) -> list[float]:
    n = int(round(np.log(stop / start) / np.log(factor))) + 1
    return [start * factor ** i for i in range(n)]


def limit_check(
    params: FrameParams,
    schedule: Sequence[tuple[float, float]] | None = None,
    c: float = 1.0,
) -> LimitReport:
    """Measure how the reciprocal transform approaches its b and (b, c) limits.

    If ``schedule`` is omitted, ``c`` is held fixed and ``b`` runs over
    ``1e2 .. 1e6`` in decades. Raises ``DomainError`` if any point leaves the
    gamma domain.
    """
    if schedule is None:
        schedule = [(c, b) for b in geometric_schedule()]
    schedule = [(float(ci), float(bi)) for ci, bi in schedule]

    binf, lor, ham = [], [], []
    phi = build_transform("hamilton", params).matrix
    for ci, bi in schedule:
        k = Constants(c=ci, b=bi)
        g = build_transform("reciprocal", params, k).matrix
        binf.append(np.max(np.abs(g - build_transform("reciprocal_binf", params, k).matrix)))
        lor.append(np.max(np.abs(g - build_transform("lorentz", params, k).matrix)))
        ham.append(np.max(np.abs(g - phi)))

    binf = np.array(binf)
    bs = np.array([bi for _, bi in schedule])
    slope = float("nan")
    if len(bs) > 1 and np.ptp(bs) > 0 and np.all(binf > 0):
        slope = float(np.polyfit(np.log(bs), np.log(binf), 1)[0])
    return LimitReport(list(schedule), binf, np.array(lor), np.array(ham), slope)


@dataclass(frozen=True)
class FrameMap:
    """Global affine Hamilton map ``z -> f(z)`` with integration constants set to zero.

    ``t~ = t``, ``q~ = q + v t``, ``p~ = p + f t``, ``e~ = e + H(t, q, p)`` with
    ``H = v p - f q + r t``.
    """

    params: FrameParams

    def hamiltonian(self, t: float, q: float, p: float) -> float:
        v, f, r = self.params.v, self.params.f, self.params.r
        return v * p - f * q + r * t

    def __call__(self, z) -> np.ndarray:
        t, q, p, e = np.asarray(z, dtype=float)
        v, f = self.params.v, self.params.f
        return np.array([t, q + v * t, p + f * t, e + self.hamiltonian(t, q, p)])

    @property
    def matrix(self) -> np.ndarray:
        return build_transform("hamilton", self.params).matrix


def _central_jacobian(fn: Callable, z: np.ndarray, h: float) -> np.ndarray:
    cols = []
    for i in range(len(z)):
        dz = np.zeros_like(z)
        dz[i] = h
        cols.append((fn(z + dz) - fn(z - dz)) / (2 * h))
    return np.column_stack(cols)


def integrate_frame(params: FrameParams, point=(0.3, -0.7, 1.1, 0.5), h: float = 1e-3):
    """Integrate the Hamilton frame equations and check the result.

    Returns the :class:`FrameMap` and a dict of residuals. The Jacobian is taken
    by central differences (exact for an affine map up to rounding) and compared
    entrywise with the Hamilton matrix; the remaining residuals check the
    velocity, force and power equations and Hamilton's equations for ``H``.
    """
    fmap = FrameMap(params)
    z = np.asarray(point, dtype=float)
    jac = _central_jacobian(fmap, z, h)
    v, f, r = params.v, params.f, params.r
    t, q, p, _ = z

    def dH(i):
        e = np.zeros(3)
        e[i] = h
        lo = fmap.hamiltonian(*(np.array([t, q, p]) - e))
        hi = fmap.hamiltonian(*(np.array([t, q, p]) + e))
        return (hi - lo) / (2 * h)

    residuals = {
        "jacobian": float(np.max(np.abs(jac - fmap.matrix))),
        "velocity": float(abs(jac[1, 0] - v)),
        "force": float(abs(jac[2, 0] - f)),
        "power": float(abs(jac[3, 0] - r)),
        "dH_dp": float(abs(dH(2) - v)),
        "dH_dq": float(abs(-dH(1) - f)),
        "dH_dt": float(abs(dH(0) - r)),
    }
    return fmap, residuals
