"""Frame transformations on time-position-momentum-energy space.

All matrices act on cotangent frames ``dz = (dt, dq, dp, de)`` in that order.
Internally every construction is done in natural units (c = b = 1) and mapped
to physical units by the diagonal similarity ``D^-1 N D`` with
``D = diag(1, 1/c, 1/b, 1/(b c))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from ..errors import DomainError, SingularCompositionError

Kind = Literal["lorentz", "hamilton", "reciprocal", "reciprocal_binf"]
KINDS: tuple[str, ...] = ("lorentz", "hamilton", "reciprocal", "reciprocal_binf")

#: radicands at or below this value are treated as on/beyond the null surface
GAMMA_GUARD = 1e-12
#: composition denominators at or below this magnitude are singular
SINGULAR_GUARD = 1e-14


@dataclass(frozen=True)
class Constants:
    """Universal constants: speed bound ``c``, force bound ``b`` and ``hbar``.

    Newton's constant is related through ``G = alpha_G c**4 / b``; it plays no
    role in any computation here.
    """

    c: float = 1.0
    b: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("c", "b", "hbar"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")


NATURAL = Constants()


@dataclass(frozen=True)
class FrameParams:
    """Relative velocity ``v``, force ``f`` and power ``r`` of a frame."""

    v: float = 0.0
    f: float = 0.0
    r: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array([self.v, self.f, self.r], dtype=float)

    def to_natural(self, k: Constants) -> "FrameParams":
        return FrameParams(self.v / k.c, self.f / k.b, self.r / (k.b * k.c))

    def from_natural(self, k: Constants) -> "FrameParams":
        return FrameParams(self.v * k.c, self.f * k.b, self.r * k.b * k.c)


@dataclass(frozen=True)
class PhaseFrame:
    """A cotangent frame ``(dt, dq, dp, de)``."""

    dt: float = 0.0
    dq: float = 0.0
    dp: float = 0.0
    de: float = 0.0

    def __post_init__(self):
        if not np.all(np.isfinite(self.as_array())):
            raise ValueError("frame components must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.dt, self.dq, self.dp, self.de], dtype=float)


@dataclass(frozen=True)
class RateVector:
    """Proper acceleration ``dv_dt``, force rate ``df_dt`` and power rate ``dr_dt``."""

    dv_dt: float = 0.0
    df_dt: float = 0.0
    dr_dt: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array([self.dv_dt, self.df_dt, self.dr_dt], dtype=float)


@dataclass(frozen=True)
class Transform:
    """A 4x4 frame transformation tagged with how it was built."""

    kind: str
    matrix: np.ndarray
    params: FrameParams
    constants: Constants = field(default=NATURAL)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.shape != (4, 4):
            raise ValueError(f"transform matrix must be 4x4, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __matmul__(self, other: "Transform") -> np.ndarray:
        return self.matrix @ other.matrix


@dataclass(frozen=True)
class GammaFactors:
    gamma0: float
    gamma: float


@dataclass(frozen=True)
class Metrics:
    """Invariant bilinear forms on (t, q, p, e), in physical units."""

    born_green: np.ndarray
    symplectic: np.ndarray
    nonrel: np.ndarray
    sr_pair: tuple[np.ndarray, np.ndarray]


def _unit_scaling(k: Constants) -> np.ndarray:
    return np.array([1.0, 1.0 / k.c, 1.0 / k.b, 1.0 / (k.b * k.c)])


def _to_physical(natural: np.ndarray, k: Constants) -> np.ndarray:
    d = _unit_scaling(k)
    return natural * d[np.newaxis, :] / d[:, np.newaxis]


def _radicand(p: FrameParams) -> float:
    # natural-unit parameters
    return 1.0 - p.v * p.v - p.f * p.f + p.r * p.r


def _gamma(n: FrameParams) -> float:
    # noninertial factor alone; |v| may reach c when r != 0
    rad = _radicand(n)
    if rad <= GAMMA_GUARD:
        raise DomainError(
            f"parameters lie on or beyond the null surface "
            f"(1 - v^2/c^2 - f^2/b^2 + r^2/(b^2 c^2) = {rad!r})"
        )
    return float(1.0 / np.sqrt(rad))


def gamma_factors(params: FrameParams, k: Constants = NATURAL) -> GammaFactors:
    """Return the inertial ``gamma0(v)`` and noninertial ``gamma(v, f, r)`` factors.

    Raises
    ------
    DomainError
        If either radicand is at or below :data:`GAMMA_GUARD`.
    """
    n = params.to_natural(k)
    rad0 = 1.0 - n.v * n.v
    rad = _radicand(n)
    if rad0 <= GAMMA_GUARD:
        raise DomainError(f"|v| must be below c (1 - v^2/c^2 = {rad0!r})")
    if rad <= GAMMA_GUARD:
        raise DomainError(
            f"parameters lie on or beyond the null surface "
            f"(1 - v^2/c^2 - f^2/b^2 + r^2/(b^2 c^2) = {rad!r})"
        )
    gamma0 = 1.0 / np.sqrt(rad0)
    # identical arithmetic path when f = r = 0 so both factors agree bit for bit
    gamma = gamma0 if (n.f == 0.0 and n.r == 0.0) else 1.0 / np.sqrt(rad)
    return GammaFactors(float(gamma0), float(gamma))


def _natural_matrix(kind: str, n: FrameParams) -> np.ndarray:
    v, f, r = n.v, n.f, n.r
    if kind == "hamilton":
        return np.array(
            [[1.0, 0.0, 0.0, 0.0],
             [v, 1.0, 0.0, 0.0],
             [f, 0.0, 1.0, 0.0],
             [r, -f, v, 1.0]]
        )
    if kind == "lorentz":
        g0 = gamma_factors(FrameParams(v, 0.0, 0.0)).gamma0
        return g0 * np.array(
            [[1.0, v, 0.0, 0.0],
             [v, 1.0, 0.0, 0.0],
             [0.0, 0.0, 1.0, v],
             [0.0, 0.0, v, 1.0]]
        )
    if kind == "reciprocal":
        g = gamma_factors(n).gamma if n.f == 0.0 and n.r == 0.0 else _gamma(n)
        return g * np.array(
            [[1.0, v, f, -r],
             [v, 1.0, r, -f],
             [f, -r, 1.0, v],
             [r, -f, v, 1.0]]
        )
    if kind == "reciprocal_binf":
        g0 = gamma_factors(FrameParams(v, 0.0, 0.0)).gamma0
        return g0 * np.array(
            [[1.0, v, 0.0, 0.0],
             [v, 1.0, 0.0, 0.0],
             [f, -r, 1.0, v],
             [r, -f, v, 1.0]]
        )
    raise ValueError(f"unknown transform kind {kind!r}; expected one of {KINDS}")


def build_transform(kind: str, params: FrameParams, k: Constants = NATURAL) -> Transform:
    """Build the transformation matrix of the given kind.

    ``lorentz`` ignores ``f`` and ``r``. ``reciprocal_binf`` is the b -> infinity
    limit of ``reciprocal``; ``hamilton`` is the joint b, c -> infinity limit and
    does not depend on the constants.
    """
    if kind == "lorentz":
        params = FrameParams(params.v, 0.0, 0.0)
    n = params.to_natural(k)
    return Transform(kind, _to_physical(_natural_matrix(kind, n), k), params, k)


def apply_transform(t: Transform, frame: PhaseFrame) -> PhaseFrame:
    return PhaseFrame(*(t.matrix @ frame.as_array()))


def extract_params(matrix: np.ndarray, kind: str = "reciprocal") -> FrameParams:
    """Read ``(v, f, r)`` off the first column of a transformation matrix."""
    m = np.asarray(matrix, dtype=float)
    col = m[:, 0] / m[0, 0]
    if kind == "lorentz":
        return FrameParams(col[1], 0.0, 0.0)
    return FrameParams(col[1], col[2], col[3])


def compose(kind: str, p2: FrameParams, p1: FrameParams, k: Constants = NATURAL) -> FrameParams:
    """Closed-form composition law for frame parameters.

    ``p2`` fills the double-primed (tilde) slot of the law and ``p1`` the primed
    one. The result is the parameter set of the matrix product
    ``build_transform(kind, p1) @ build_transform(kind, p2)``, i.e. the
    transformation that applies ``p2`` first. For the Hamilton group::

        compose("hamilton", (1, 2, 3), (4, 5, 6)) == (5, 7, 12)

    Formula-level composition does not require the gamma domain, so it can be
    evaluated on the null surface.

    Raises
    ------
    SingularCompositionError
        If the denominator of the law vanishes.
    """
    if kind == "hamilton":
        v = p1.v + p2.v
        f = p1.f + p2.f
        r = p1.r + p2.r + p1.v * p2.f - p1.f * p2.v
        return FrameParams(v, f, r)

    a = p2.to_natural(k)  # double-primed
    s = p1.to_natural(k)  # primed
    if kind == "lorentz":
        den = 1.0 + s.v * a.v
        _check_denominator(den)
        return FrameParams((a.v + s.v) / den, 0.0, 0.0).from_natural(k)
    if kind == "reciprocal":
        den = 1.0 + s.v * a.v + s.f * a.f - s.r * a.r
        _check_denominator(den)
        v = (a.v + s.v + (s.r * a.f - s.f * a.r)) / den
        f = (a.f + s.f + (-s.r * a.v + s.v * a.r)) / den
        r = (a.r + s.r - s.f * a.v + s.v * a.f) / den
        return FrameParams(v, f, r).from_natural(k)
    if kind == "reciprocal_binf":
        den = 1.0 + s.v * a.v
        _check_denominator(den)
        v = (a.v + s.v) / den
        f = (a.f + s.f + (s.v * a.r - s.r * a.v)) / den
        r = (a.r + s.r - s.f * a.v + s.v * a.f) / den
        return FrameParams(v, f, r).from_natural(k)
    raise ValueError(f"unknown transform kind {kind!r}; expected one of {KINDS}")


def _check_denominator(den: float) -> None:
    if abs(den) <= SINGULAR_GUARD:
        raise SingularCompositionError(f"composition denominator vanishes ({den!r})")


def rates_transform(params: FrameParams, rates: RateVector, k: Constants = NATURAL) -> RateVector:
    """Transform proper acceleration, force rate and power rate.

    The frame ``params`` is held fixed while a momentarily comoving frame
    changes; the primed rates are ``gamma * J^-1`` applied to the unprimed ones,
    where ``J`` is the Jacobian of :func:`compose` in its primed slot. In closed
    form::

        dv'/dt' = g^3 (dv/dt + (r df/dt - f dr/dt) / b^2)
        df'/dt' = g^3 (df/dt + (v dr/dt - r dv/dt) / c^2)
        dr'/dt' = g^3 (dr/dt - f dv/dt + v df/dt)

    With ``f = r = 0`` this reduces to ``dv'/dt' = gamma0^3 dv/dt``.
    """
    n = params.to_natural(k)
    g = gamma_factors(params, k).gamma if n.f == 0.0 and n.r == 0.0 else _gamma(n)
    c2, b2 = k.c ** 2, k.b ** 2
    v, f, r = params.v, params.f, params.r
    a, fd, rd = rates.dv_dt, rates.df_dt, rates.dr_dt
    g3 = g ** 3
    return RateVector(
        g3 * (a + (r * fd - f * rd) / b2),
        g3 * (fd + (v * rd - r * a) / c2),
        g3 * (rd - f * a + v * fd),
    )


def metrics(k: Constants = NATURAL) -> Metrics:
    """Born-Green, symplectic, nonrelativistic and special-relativistic forms."""
    c2, b2 = k.c ** 2, k.b ** 2
    born_green = np.diag([-1.0, 1.0 / c2, 1.0 / b2, -1.0 / (b2 * c2)])
    # zeta = -de ^ dt + dp ^ dq
    symplectic = np.zeros((4, 4))
    symplectic[2, 1], symplectic[1, 2] = 1.0, -1.0
    symplectic[3, 0], symplectic[0, 3] = -1.0, 1.0
    nonrel = np.diag([-1.0, 0.0, 0.0, 0.0])
    sr_pair = (np.diag([-1.0, 1.0 / c2, 0.0, 0.0]), np.diag([0.0, 0.0, 1.0, -1.0 / c2]))
    return Metrics(born_green, symplectic, nonrel, sr_pair)


def _form_residual(m: np.ndarray, form: np.ndarray) -> float:
    return float(np.max(np.abs(m.T @ form @ m - form)))


def invariance_residuals(t: Transform | np.ndarray, k: Constants | None = None) -> dict[str, float]:
    """Max-norm of ``T^T M T - M`` for the Born-Green, symplectic and ``-dt^2`` forms."""
    if isinstance(t, Transform):
        m = t.matrix
        k = k or t.constants
    else:
        m = np.asarray(t, dtype=float)
        k = k or NATURAL
    forms = metrics(k)
    return {
        "born_green": _form_residual(m, forms.born_green),
        "symplectic": _form_residual(m, forms.symplectic),
        "nonrel": _form_residual(m, forms.nonrel),
    }


@dataclass(frozen=True)
class NullSurfaceReport:
    residual: float
    is_fixed_point: bool


def null_surface(params: FrameParams, k: Constants = NATURAL, tol: float = 1e-14) -> NullSurfaceReport:
    """Distance from the ``r = 0`` null surface and self-composition fixed-point test.

    ``residual`` is ``v^2/c^2 + f^2/b^2 - 1``; it is ``+inf`` when ``r != 0``
    because only the ``r = 0`` branch of the surface is characterised.
    """
    n = params.to_natural(k)
    residual = n.v ** 2 + n.f ** 2 - 1.0 if n.r == 0.0 else float("inf")
    try:
        twice = compose("reciprocal", params, params, k).to_natural(k)
    except SingularCompositionError:
        return NullSurfaceReport(residual, False)
    err = np.max(np.abs(twice.as_array() - n.as_array()))
    return NullSurfaceReport(float(residual), bool(err <= tol))


@dataclass(frozen=True)
class DimensionalScales:
    lambda_t: float
    lambda_q: float
    lambda_p: float
    lambda_e: float


def scales(k: Constants = NATURAL) -> DimensionalScales:
    """Time, length, momentum and energy scales built from ``c``, ``b`` and ``hbar``."""
    h, b, c = k.hbar, k.b, k.c
    return DimensionalScales(
        lambda_t=float(np.sqrt(h / (b * c))),
        lambda_q=float(np.sqrt(h * c / b)),
        lambda_p=float(np.sqrt(h * b / c)),
        lambda_e=float(np.sqrt(h * b * c)),
    )
