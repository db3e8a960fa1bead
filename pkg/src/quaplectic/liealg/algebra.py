"""Real Lie algebras given by structure constants.

``structure[a, b, c]`` is the coefficient of ``X_c`` in ``[X_a, X_b]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from ..errors import ValidationError


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    names: tuple[str, ...]
    structure: np.ndarray

    def __post_init__(self):
        c = np.array(self.structure, dtype=float)
        d = len(self.names)
        if c.shape != (d, d, d):
            raise ValidationError(f"structure constants must have shape {(d, d, d)}, got {c.shape}")
        if len(set(self.names)) != d:
            raise ValidationError("generator names must be unique")
        c.setflags(write=False)
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "structure", c)

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    @property
    def brackets(self) -> list[tuple[int, int, int, float]]:
        """Nonzero ``(a, b, c, coeff)`` entries with ``a < b``."""
        out = []
        for a, b, c in zip(*np.nonzero(self.structure)):
            if a < b:
                out.append((int(a), int(b), int(c), float(self.structure[a, b, c])))
        return out

    @classmethod
    def from_brackets(
        cls, names: Sequence[str], brackets: Iterable[Sequence[float]]
    ) -> "LieAlgebra":
        """Build from ``(a, b, c, coeff)`` entries, closing them antisymmetrically.

        Repeated or mirrored entries must agree; a nonzero ``[X_a, X_a]`` is
        rejected.
        """
        d = len(names)
        c = np.zeros((d, d, d))
        seen = np.zeros((d, d, d), dtype=bool)
        for entry in brackets:
            a, b, g, coeff = int(entry[0]), int(entry[1]), int(entry[2]), float(entry[3])
            if not all(0 <= i < d for i in (a, b, g)):
                raise ValidationError(f"bracket index out of range in {entry!r}")
            if a == b:
                if coeff != 0.0:
                    raise ValidationError(f"[X_{a}, X_{a}] must vanish, got {coeff}")
                continue
            for (i, j, s) in ((a, b, 1.0), (b, a, -1.0)):
                if seen[i, j, g] and c[i, j, g] != s * coeff:
                    raise ValidationError(f"inconsistent entries for [X_{a}, X_{b}] along X_{g}")
                c[i, j, g] = s * coeff
                seen[i, j, g] = True
        return cls(tuple(names), c)

    # -- serialisation -------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "names": list(self.names),
            "brackets": [[a, b, c, coeff] for a, b, c, coeff in self.brackets],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "LieAlgebra":
        try:
            dim = int(doc["dim"])
            names = doc.get("names") or [f"X{i}" for i in range(dim)]
            brackets = doc["brackets"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed algebra document: {exc}") from exc
        if len(names) != dim:
            raise ValidationError(f"dim is {dim} but {len(names)} names were given")
        for entry in brackets:
            if len(entry) != 4:
                raise ValidationError(f"bracket entries need 4 fields, got {entry!r}")
        return cls.from_brackets(names, brackets)

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def save(self, path) -> None:
        Path(path).write_text(self.dumps() + "\n")

    @classmethod
    def load(cls, path) -> "LieAlgebra":
        try:
            doc = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: not valid JSON ({exc})") from exc
        return cls.from_dict(doc)

    # -- basic operations ---------------------------------------------

    def antisymmetry_defect(self) -> float:
        return float(np.max(np.abs(self.structure + self.structure.transpose(1, 0, 2)), initial=0.0))

    def change_basis(self, p: np.ndarray, names: Sequence[str] | None = None) -> "LieAlgebra":
        """Structure constants in the basis ``Y_i = sum_a p[a, i] X_a``."""
        p = np.asarray(p, dtype=float)
        pinv = np.linalg.inv(p)
        c = np.einsum("ai,bj,abc,kc->ijk", p, p, self.structure, pinv)
        c = 0.5 * (c - c.transpose(1, 0, 2))  # exact antisymmetry despite rounding
        return LieAlgebra(tuple(names or (f"Y{i}" for i in range(self.dim))), c)

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, names={list(self.names)!r})"


def bracket(L: LieAlgebra, x, y) -> np.ndarray:
    """Bracket of two coefficient vectors."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != (L.dim,) or y.shape != (L.dim,):
        raise ValidationError(f"coefficient vectors must have length {L.dim}")
    return np.einsum("a,b,abc->c", x, y, L.structure)


def jacobi_tensor(L: LieAlgebra) -> np.ndarray:
    """``J[a, b, c, :]``: coefficients of the cyclic sum of ``[X_a, [X_b, X_c]]``."""
    c = L.structure
    # [X_a, [X_b, X_c]] = sum_e c[b,c,e] c[a,e,d] X_d
    t = np.einsum("bce,aed->abcd", c, c)
    return t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)


def jacobi_residual(L: LieAlgebra, tol: float = 0.0) -> float:
    """Largest Jacobi-identity violation over all generator triples.

    Raises ``ValidationError`` if the structure constants are not antisymmetric
    (beyond ``tol``).
    """
    defect = L.antisymmetry_defect()
    if defect > tol:
        raise ValidationError(f"brackets are not antisymmetric (defect {defect:.3g})")
    if L.dim == 0:
        return 0.0
    return float(np.max(np.abs(jacobi_tensor(L))))


def from_matrices(names: Sequence[str], mats: Sequence[np.ndarray], tol: float = 1e-9) -> LieAlgebra:
    """Structure constants of a matrix Lie algebra by least-squares decomposition.

    Coefficients are snapped to the nearest multiple of 1/2 when within ``tol``
    (matrix bases used in this package have half-integer structure constants).
    Raises ``ValidationError`` if the span is not closed under commutators.
    """
    mats = [np.asarray(m) for m in mats]
    basis = np.column_stack([m.reshape(-1) for m in mats])
    if np.iscomplexobj(basis):
        basis = np.vstack([basis.real, basis.imag])
    d = len(mats)
    c = np.zeros((d, d, d))
    for a in range(d):
        for b in range(a + 1, d):
            comm = (mats[a] @ mats[b] - mats[b] @ mats[a]).reshape(-1)
            if np.iscomplexobj(comm):
                comm = np.concatenate([comm.real, comm.imag])
            coeff, *_ = np.linalg.lstsq(basis, comm, rcond=None)
            if np.max(np.abs(basis @ coeff - comm), initial=0.0) > tol:
                raise ValidationError(f"[{names[a]}, {names[b]}] leaves the span")
            snapped = np.round(coeff * 2) / 2
            coeff = np.where(np.abs(coeff - snapped) < tol, snapped, coeff)
            c[a, b] = coeff
            c[b, a] = -coeff
    return LieAlgebra(tuple(names), c)


# -- structural fingerprints ---------------------------------------------


def _rank(m: np.ndarray, rtol: float = 1e-9) -> int:
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    return int(np.sum(s > rtol * max(s[0], 1.0)))


def _orth(m: np.ndarray, rtol: float = 1e-9) -> np.ndarray:
    if m.size == 0:
        return m.reshape(m.shape[0], 0)
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    return u[:, s > rtol * max(s[0] if s.size else 0.0, 1.0)]


def _bracket_span(L: LieAlgebra, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # columns of a, b are vectors; span of all pairwise brackets
    if a.shape[1] == 0 or b.shape[1] == 0:
        return np.zeros((L.dim, 0))
    prods = np.einsum("ai,bj,abc->cij", a, b, L.structure).reshape(L.dim, -1)
    return _orth(prods)


def center(L: LieAlgebra) -> np.ndarray:
    """Orthonormal basis (columns) of the center."""
    # z in center iff sum_a z_a c[a, b, :] = 0 for all b
    m = L.structure.transpose(1, 2, 0).reshape(-1, L.dim)
    if L.dim == 0:
        return np.zeros((0, 0))
    _, s, vt = np.linalg.svd(m)
    tol = 1e-9 * max(s[0] if s.size else 0.0, 1.0)
    rank = int(np.sum(s > tol))
    return vt[rank:].T


def killing_form(L: LieAlgebra) -> np.ndarray:
    c = L.structure
    # ad(X_a)[c, b] = c[a, b, c]; K_ab = tr(ad a ad b)
    return np.einsum("acd,bdc->ab", c, c)


def fingerprint(L: LieAlgebra, depth: int = 6) -> dict:
    """Basis-independent dimension data used to compare algebras.

    Derived series, lower central series, center dimension, Killing form rank
    and the dimension of the center of the derived algebra.
    """
    full = np.eye(L.dim)
    derived, lower = [L.dim], [L.dim]
    d_cur, l_cur = full, full
    for _ in range(depth):
        d_cur = _bracket_span(L, d_cur, d_cur)
        l_cur = _bracket_span(L, full, l_cur)
        derived.append(d_cur.shape[1])
        lower.append(l_cur.shape[1])
    g1 = _bracket_span(L, full, full)
    # center of derived algebra: elements of g1 commuting with all of g1
    if g1.shape[1]:
        m = np.einsum("ai,bj,abc->jci", g1, g1, L.structure).reshape(-1, g1.shape[1])
        zg1 = g1.shape[1] - _rank(m)
    else:
        zg1 = 0
    return {
        "dim": L.dim,
        "derived": tuple(derived),
        "lower_central": tuple(lower),
        "center": int(center(L).shape[1]),
        "killing_rank": _rank(killing_form(L)),
        "derived_center": int(zg1),
    }
