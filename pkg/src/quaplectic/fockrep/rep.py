"""Truncated oscillator representation of the quaplectic algebra.

Mode ``a`` carries ladder operators with ``[Z-_a, Z+_b] = eta_ab I``. For the
spacelike modes ``Z- = a`` and ``Z+ = a^dagger``; for the timelike mode the
roles swap (``Z- = a^dagger``, ``Z+ = a``) so that the sign of ``eta_00`` comes
out right while ``Z+`` stays the adjoint of ``Z-``. Both are the coordinate
operators ``(x +- d/dx) / sqrt 2`` written in the number basis.

The Hilbert space is ``aux (x) Fock`` where the auxiliary factor carries the
optional finite blocks ``eps_ab`` (dimension 1 and ``eps = 0`` by default).
Fock states are ordered lexicographically by occupation numbers, mode 0
slowest.

Truncation violates the commutation relations only near the top levels, so
every check is projected onto the interior: states whose occupation numbers
all sit at least ``margin`` levels below the cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import product

import numpy as np

from ..errors import SizeError, ValidationError

DEFAULT_ELEMENT_BUDGET = 4_000_000


@dataclass(frozen=True)
class Signature:
    p: int = 1
    q: int = 1

    def __post_init__(self):
        if self.p not in (0, 1) or self.q < 0 or self.p + self.q < 1:
            raise ValidationError(f"unsupported signature ({self.p}, {self.q}); need p in (0, 1) and p + q >= 1")

    @property
    def modes(self) -> int:
        return self.p + self.q

    @property
    def eta(self) -> np.ndarray:
        return np.diag([-1.0] * self.p + [1.0] * self.q)

    def timelike(self, a: int) -> bool:
        return a < self.p


@dataclass(frozen=True)
class Truncation:
    cutoff: int = 10
    interior_margin: int = 2

    def __post_init__(self):
        if self.cutoff < 4:
            raise ValidationError(f"cutoff must be >= 4, got {self.cutoff}")
        if self.interior_margin < 1:
            raise ValidationError("interior_margin must be >= 1")
        if self.interior_margin > self.cutoff:
            raise ValidationError("interior_margin cannot exceed the cutoff")

    @property
    def levels(self) -> int:
        return self.cutoff + 1


def annihilator(levels: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, levels, dtype=float)), 1).astype(complex)


def _embed(op: np.ndarray, a: int, modes: int, levels: int) -> np.ndarray:
    eye = np.eye(levels, dtype=complex)
    return reduce(np.kron, [op if i == a else eye for i in range(modes)])


def check_eps_block(eps, m: int, hermitian: bool = True) -> np.ndarray:
    """Validate ``eps`` as an ``(m, m, d, d)`` array with ``eps[a, b]^H = eps[b, a]``.

    An ``(m, m)`` array is read as scalar (``d = 1``) blocks. Pass
    ``hermitian=False`` for blocks that only satisfy the commutation
    relations, such as :func:`defining_eps`.
    """
    e = np.asarray(eps, dtype=complex)
    if e.ndim == 2:
        e = e[:, :, None, None]
    if e.ndim != 4 or e.shape[:2] != (m, m) or e.shape[2] != e.shape[3]:
        raise ValidationError(f"eps_block must have shape ({m}, {m}) or ({m}, {m}, d, d), got {e.shape}")
    if not hermitian:
        return e
    herm = np.max(np.abs(e - e.transpose(1, 0, 3, 2).conj()), initial=0.0)
    if herm > 1e-12:
        raise ValidationError(f"eps_block is not Hermitian (eps_ab^H != eps_ba, defect {herm:.3g})")
    return e


def defining_eps(sig: Signature) -> np.ndarray:
    """``eps_ab = E_ab eta``, a finite block satisfying the ``A_ab`` commutation relations.

    It is Hermitian only for the indefinite inner product ``eta`` (finite
    representations of the noncompact algebra are not unitary), so build with
    ``hermitian_eps=False``.
    """
    m = sig.modes
    eta = sig.eta
    e = np.zeros((m, m, m, m), dtype=complex)
    for a in range(m):
        for b in range(m):
            unit = np.zeros((m, m))
            unit[a, b] = 1.0
            e[a, b] = unit @ eta
    return e


@dataclass(frozen=True, eq=False)
class RepresentationBundle:
    signature: Signature
    truncation: Truncation
    zplus: list
    zminus: list
    zab: list
    number_op: np.ndarray
    u_op: np.ndarray
    identity: np.ndarray
    eps: list
    a_op: list
    occupations: np.ndarray = field(repr=False)
    aux_dim: int = 1

    @property
    def dim(self) -> int:
        return self.identity.shape[0]

    @property
    def modes(self) -> int:
        return self.signature.modes

    @property
    def eta(self) -> np.ndarray:
        return self.signature.eta

    def interior_mask(self, margin: int | None = None) -> np.ndarray:
        margin = self.truncation.interior_margin if margin is None else margin
        top = self.truncation.cutoff - margin
        return np.all(self.occupations <= top, axis=1)

    def interior_projector(self, margin: int | None = None) -> np.ndarray:
        return np.diag(self.interior_mask(margin).astype(complex))

    def interior_norm(self, op: np.ndarray, margin: int | None = None) -> float:
        """Max-norm of ``op`` restricted to interior rows and columns."""
        m = self.interior_mask(margin)
        sub = op[np.ix_(m, m)]
        return float(np.max(np.abs(sub), initial=0.0))

    def w_op(self, a: int, b: int) -> np.ndarray:
        """``W_ab = Z+_a Z-_b - I A_ab`` (equal to ``-eps_ab`` before truncation)."""
        return self.zplus[a] @ self.zminus[b] - self.identity @ self.a_op[a][b]


def build_rep(
    sig: Signature,
    trunc: Truncation,
    eps_block=None,
    element_budget: int = DEFAULT_ELEMENT_BUDGET,
    hermitian_eps: bool = True,
) -> RepresentationBundle:
    """Assemble ladder, bilinear, number and ``U`` operators.

    Raises ``SizeError`` if a dense operator would exceed ``element_budget``
    entries and ``ValidationError`` for a malformed ``eps_block``.
    """
    m, L = sig.modes, trunc.levels
    if eps_block is None:
        eps = np.zeros((m, m, 1, 1), dtype=complex)
    else:
        eps = check_eps_block(eps_block, m, hermitian_eps)
    d_aux = eps.shape[2]
    dim = d_aux * L ** m
    if dim * dim > element_budget:
        raise SizeError(f"basis of {dim} states exceeds the element budget {element_budget}")

    a1 = annihilator(L)
    eye_aux = np.eye(d_aux, dtype=complex)
    zminus, zplus = [], []
    for a in range(m):
        low = np.kron(eye_aux, _embed(a1, a, m, L))
        if sig.timelike(a):
            zminus.append(low.conj().T.copy())
            zplus.append(low)
        else:
            zminus.append(low)
            zplus.append(low.conj().T.copy())

    eye_f = np.eye(L ** m, dtype=complex)
    eta = sig.eta
    zab = [[zplus[a] @ zminus[b] for b in range(m)] for a in range(m)]
    eps_ops = [[np.kron(eps[a, b], eye_f) for b in range(m)] for a in range(m)]
    a_op = [[zab[a][b] + eps_ops[a][b] for b in range(m)] for a in range(m)]
    number = sum(eta[a, a] * zab[a][a] for a in range(m))
    u_op = sum(eta[a, a] * a_op[a][a] for a in range(m))
    occ = np.array(list(product(range(L), repeat=m)), dtype=int)
    occ = np.tile(occ, (d_aux, 1))

    for ops in (zplus, zminus):
        for x in ops:
            x.setflags(write=False)
    return RepresentationBundle(
        signature=sig,
        truncation=trunc,
        zplus=zplus,
        zminus=zminus,
        zab=zab,
        number_op=number,
        u_op=u_op,
        identity=np.eye(dim, dtype=complex),
        eps=eps_ops,
        a_op=a_op,
        occupations=occ,
        aux_dim=d_aux,
    )


def comm(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x


def commutator_residuals(bundle: RepresentationBundle) -> dict[str, float]:
    """Interior max-norm residuals of the algebra relations.

    Keys:

    ``ccr``            ``[Z-_a, Z+_b] - eta_ab I``
    ``ladder``         ``[Z-_a, Z-_b]`` and ``[Z+_a, Z+_b]``
    ``zab_zplus``      ``[Z_ab, Z+_c] - eta_bc Z+_a``
    ``zab_zminus``     ``[Z_ab, Z-_c] + eta_ac Z-_b``
    ``zab_zab``        ``[Z_ab, Z_cd] - (eta_bc Z_ad - eta_ad Z_cb)``
    ``swapped_zplus``  ``[Y_ab, Z+_c] + eta_ac Z+_b`` for ``Y_ab = -Z+_b Z-_a``
    ``swapped_zminus`` ``[Y_ab, Z-_c] - eta_bc Z-_a``
    ``a_a``            ``[A_ab, A_cd]`` against the same structure as ``zab_zab``
    ``zab_eps``        ``[Z_ab, eps_cd]`` (exactly zero: different tensor factors)
    ``w_z``            ``[W_ab, Z+-_c]``
    ``w_plus_eps``     ``W_ab + eps_ab``
    """
    b = bundle
    m, eta, I = b.modes, b.eta, b.identity
    base = b.truncation.interior_margin
    res = dict.fromkeys(
        ["ccr", "ladder", "zab_zplus", "zab_zminus", "zab_zab", "swapped_zplus",
         "swapped_zminus", "a_a", "zab_eps", "w_z", "w_plus_eps"], 0.0)

    def upd(key, op, margin):
        res[key] = max(res[key], b.interior_norm(op, max(base, margin)))

    rng = range(m)
    for x in rng:
        for y in rng:
            upd("ccr", comm(b.zminus[x], b.zplus[y]) - eta[x, y] * I, 1)
            upd("ladder", comm(b.zminus[x], b.zminus[y]), 2)
            upd("ladder", comm(b.zplus[x], b.zplus[y]), 2)
            w = b.w_op(x, y)
            upd("w_plus_eps", w + b.eps[x][y], 2)
            swapped = -b.zplus[y] @ b.zminus[x]
            for c in rng:
                upd("zab_zplus", comm(b.zab[x][y], b.zplus[c]) - eta[y, c] * b.zplus[x], 3)
                upd("zab_zminus", comm(b.zab[x][y], b.zminus[c]) + eta[x, c] * b.zminus[y], 3)
                upd("swapped_zplus", comm(swapped, b.zplus[c]) + eta[x, c] * b.zplus[y], 3)
                upd("swapped_zminus", comm(swapped, b.zminus[c]) - eta[y, c] * b.zminus[x], 3)
                upd("w_z", comm(w, b.zplus[c]), 3)
                upd("w_z", comm(w, b.zminus[c]), 3)
                for d in rng:
                    rhs = eta[y, c] * b.zab[x][d] - eta[x, d] * b.zab[c][y]
                    upd("zab_zab", comm(b.zab[x][y], b.zab[c][d]) - rhs, 4)
                    rhs_a = eta[y, c] * b.a_op[x][d] - eta[x, d] * b.a_op[c][y]
                    upd("a_a", comm(b.a_op[x][y], b.a_op[c][d]) - rhs_a, 4)
                    res["zab_eps"] = max(res["zab_eps"], float(np.max(np.abs(comm(b.zab[x][y], b.eps[c][d])))))
    return res


def naive_w_residual(bundle: RepresentationBundle) -> float:
    """``[Z+_a Z-_b, Z+-_c]`` without the ``I A_ab`` term; O(1) because that term is needed."""
    b = bundle
    out = 0.0
    for x in range(b.modes):
        for y in range(b.modes):
            for c in range(b.modes):
                for z in (b.zplus[c], b.zminus[c]):
                    out = max(out, b.interior_norm(comm(b.zplus[x] @ b.zminus[y], z), 3))
    return out
