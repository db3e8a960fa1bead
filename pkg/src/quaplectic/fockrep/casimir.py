"""Casimir operators, trace identities and wave operators in the truncated basis."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from ..errors import ValidationError
from .rep import RepresentationBundle, comm

MAX_ORDER = 4


def _opmat_product(x, y):
    """Product of two matrices whose entries are operators."""
    m = len(x)
    return [[sum(x[a][c] @ y[c][b] for c in range(m)) for b in range(m)] for a in range(m)]


def _lower(bundle, entries):
    """``(X eta)_ab = X_ac eta^cb``; eta is diagonal and its own inverse."""
    eta = bundle.eta
    m = bundle.modes
    return [[entries[a][b] * eta[b, b] for b in range(m)] for a in range(m)]


def trace_powers(bundle: RepresentationBundle, entries, max_order: int) -> list[np.ndarray]:
    """``[tr((X eta)^k) for k = 1 .. max_order]`` with operator-valued entries."""
    xe = _lower(bundle, entries)
    power = xe
    out = []
    for k in range(1, max_order + 1):
        if k > 1:
            power = _opmat_product(power, xe)
        out.append(sum(power[a][a] for a in range(bundle.modes)))
    return out


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: np.ndarray
    method: str
    residuals: dict = field(default_factory=dict)

    def degeneracies(self, decimals: int = 8) -> list[tuple[float, int]]:
        vals, counts = np.unique(np.round(self.eigenvalues.real, decimals), return_counts=True)
        return [(float(v) + 0.0, int(c)) for v, c in zip(vals, counts)]


def interior_spectrum(bundle: RepresentationBundle, op: np.ndarray, margin: int, method: str = "fock") -> SpectrumReport:
    """Eigenvalues of ``op`` restricted to the interior block.

    The Hermitian part is diagonalised; the anti-Hermitian defect is reported
    under ``residuals["hermiticity"]``.
    """
    mask = bundle.interior_mask(margin)
    sub = op[np.ix_(mask, mask)]
    herm = float(np.max(np.abs(sub - sub.conj().T), initial=0.0))
    vals = scipy.linalg.eigvalsh(0.5 * (sub + sub.conj().T))
    return SpectrumReport(np.sort(vals), method, {"hermiticity": herm})


@dataclass
class CasimirResult:
    c_ops: list[np.ndarray]
    d_ops: list[np.ndarray]
    c_spectra: list[SpectrumReport]
    d_spectra: list[SpectrumReport]
    residuals: dict


def casimir_ops(bundle: RepresentationBundle, max_order: int = MAX_ORDER) -> CasimirResult:
    """``C_k = tr((W eta)^k)`` and ``D_k = tr((A eta)^k)`` for ``k <= max_order``.

    Residuals (interior max-norms, margin sized to the operator degrees):

    ``c_gen``     ``[C_k, g]`` for every generator ``g`` (``Z+-``, ``A``)
    ``d_a``       ``[D_k, A_ab]``
    ``d_z``       ``[D_k, Z+-_c]``; not expected to vanish since ``D_k`` is only a ``u(1,n)`` invariant
    ``mutual``    ``[C_k, C_j]``, ``[C_k, D_j]``, ``[D_k, D_j]``
    ``c1_check``  ``C_1 - (N - I U)``
    """
    if not 1 <= max_order <= MAX_ORDER:
        raise ValidationError(f"max_order must be in 1..{MAX_ORDER}")
    b = bundle
    m = b.modes
    w = [[b.w_op(x, y) for y in range(m)] for x in range(m)]
    c_ops = trace_powers(b, w, max_order)
    d_ops = trace_powers(b, b.a_op, max_order)
    base = b.truncation.interior_margin
    res = dict.fromkeys(["c_gen", "d_a", "d_z", "mutual", "c1_check"], 0.0)

    def upd(key, op, margin):
        res[key] = max(res[key], b.interior_norm(op, max(base, margin)))

    ladders = list(b.zplus) + list(b.zminus)
    a_flat = [b.a_op[x][y] for x in range(m) for y in range(m)]
    for k, (ck, dk) in enumerate(zip(c_ops, d_ops), start=1):
        for g in ladders:
            upd("c_gen", comm(ck, g), 2 * k + 1)
            upd("d_z", comm(dk, g), 2 * k + 1)
        for g in a_flat:
            upd("c_gen", comm(ck, g), 2 * k + 2)
            upd("d_a", comm(dk, g), 2 * k + 2)
        for j, (cj, dj) in enumerate(zip(c_ops, d_ops), start=1):
            margin = 2 * (k + j)
            upd("mutual", comm(ck, cj), margin)
            upd("mutual", comm(ck, dj), margin)
            upd("mutual", comm(dk, dj), margin)
    upd("c1_check", c_ops[0] - (b.number_op - b.identity @ b.u_op), 2)

    c_spec = [interior_spectrum(b, op, max(base, 2 * k)) for k, op in enumerate(c_ops, 1)]
    d_spec = [interior_spectrum(b, op, max(base, 2 * k)) for k, op in enumerate(d_ops, 1)]
    return CasimirResult(c_ops, d_ops, c_spec, d_spec, res)


def contracted_z_power(bundle: RepresentationBundle, k: int) -> np.ndarray:
    """``tr((Z eta)^k)``; for ``k = 2`` this is ``eta^bc eta^ad Z_ab Z_cd``."""
    return trace_powers(bundle, bundle.zab, k)[-1]


def resolve_n(bundle: RepresentationBundle) -> float:
    """Least-squares ``n`` in ``tr((Z eta)^2) = N (N - n)`` on the interior."""
    b = bundle
    mask = b.interior_mask(max(b.truncation.interior_margin, 4))
    lhs = (contracted_z_power(b, 2) - b.number_op @ b.number_op)[np.ix_(mask, mask)]
    rhs = (-b.number_op)[np.ix_(mask, mask)]
    x = rhs.reshape(-1)
    return float(np.real(np.vdot(x, lhs.reshape(-1)) / np.vdot(x, x)))


def g_polynomial(x, k: int, n: float):
    return x * (x - n) ** (k - 1)


def g_identity(bundle: RepresentationBundle, k: int, n: float | None = None) -> tuple[float, float]:
    """Interior residual of ``tr((Z eta)^k) - N (N - n I)^(k-1)``.

    ``n`` defaults to the value resolved from ``k = 2`` by :func:`resolve_n`.
    Returns ``(residual, n)``.
    """
    if not 1 <= k <= MAX_ORDER:
        raise ValidationError(f"k must be in 1..{MAX_ORDER}")
    b = bundle
    if n is None:
        n = resolve_n(b)
    lhs = contracted_z_power(b, k)
    shifted = b.number_op - n * b.identity
    rhs = b.number_op @ np.linalg.matrix_power(shifted, k - 1)
    return b.interior_norm(lhs - rhs, max(b.truncation.interior_margin, 2 * k)), n


def wave_operator(bundle: RepresentationBundle, k: int, eps_block=None) -> np.ndarray:
    """Order-``k`` wave operator ``tr(Z eta (eps eta)^(k-1))``.

    ``k = 1`` gives the number operator. With ``eps_block`` (shape ``(m, m)``
    of scalars, Hermitian) the blocks are scalars multiplying the Fock
    operators; otherwise the bundle's own ``eps`` operators are used.
    """
    b = bundle
    m = b.modes
    if not 1 <= k <= MAX_ORDER:
        raise ValidationError(f"k must be in 1..{MAX_ORDER}")
    if eps_block is None:
        eps = b.eps
    else:
        e = np.asarray(eps_block, dtype=complex)
        if e.shape != (m, m):
            raise ValidationError(f"eps_block must have shape ({m}, {m}), got {e.shape}")
        if np.max(np.abs(e - e.conj().T)) > 1e-12:
            raise ValidationError("eps_block must be Hermitian")
        eps = [[e[x, y] * b.identity for y in range(m)] for x in range(m)]
    out = _lower(b, b.zab)
    ee = _lower(b, eps)
    for _ in range(k - 1):
        out = _opmat_product(out, ee)
    return sum(out[a][a] for a in range(m))


def f_label_check(c1: float, c2: float, d1: float, d2: float, n: float) -> float:
    """Second wave-equation label ``(d2 - c2 - g2(d1 + c1)) / 2`` with ``g2(x) = x (x - n)``."""
    return 0.5 * (d2 - c2 - g_polynomial(d1 + c1, 2, n))
