"""Built-in algebras in a real basis.

Basis conventions for ``u(1,n)`` (``m = n + 1`` modes, ``eta = diag(-1, 1, ..., 1)``).
Each generator is ``A = eta K`` with ``K`` anti-Hermitian:

* ``H{a}``: ``K = i E_aa``
* ``L{a}{b}`` (a < b): ``K = E_ab - E_ba``; these span ``so(1,n)``
* ``M{a}{b}`` (a < b): ``K = i (E_ab + E_ba)``

Translations act by ``[A, T(w)] = T(A w)``. ``X{a}`` is ``T(e_a)`` and
``Y{a}`` is ``T(i e_a)``. The central generator ``I`` enters through
``[T(w1), T(w2)] = Im(w1^H eta w2) I``, so ``[X_a, Y_b] = eta_ab I``. The
complex ladder combinations are ``Z-+_a = (X_a -+ i Y_a) / sqrt 2``.
"""

from __future__ import annotations

import re
from itertools import combinations

import numpy as np

from ..errors import ValidationError
from .algebra import LieAlgebra, from_matrices


def _eta(m):
    d = np.ones(m)
    d[0] = -1.0
    return np.diag(d)


def _unit(m, a, b):
    e = np.zeros((m, m), dtype=complex)
    e[a, b] = 1.0
    return e


def _unitary_basis(m, orthogonal_only=False):
    eta = _eta(m)
    names, mats = [], []
    if not orthogonal_only:
        for a in range(m):
            names.append(f"H{a}")
            mats.append(eta @ (1j * _unit(m, a, a)))
    for a, b in combinations(range(m), 2):
        names.append(f"L{a}{b}")
        mats.append(eta @ (_unit(m, a, b) - _unit(m, b, a)))
    if not orthogonal_only:
        for a, b in combinations(range(m), 2):
            names.append(f"M{a}{b}")
            mats.append(eta @ (1j * (_unit(m, a, b) + _unit(m, b, a))))
    return names, mats


def _affine(m, linear, translations, central):
    """Algebra of triples (A, w, iota) under the semidirect Heisenberg bracket."""
    eta = _eta(m)
    names, elems = [], []
    lnames, lmats = linear
    for n, a in zip(lnames, lmats):
        names.append(n)
        elems.append((a, np.zeros(m, dtype=complex), 0.0))
    for n, w in translations:
        names.append(n)
        elems.append((np.zeros((m, m), dtype=complex), np.asarray(w, dtype=complex), 0.0))
    if central:
        names.append("I")
        elems.append((np.zeros((m, m), dtype=complex), np.zeros(m, dtype=complex), 1.0))

    def flat(e):
        a, w, i = e
        return np.concatenate([a.real.ravel(), a.imag.ravel(), w.real, w.imag, [i]])

    basis = np.column_stack([flat(e) for e in elems])
    d = len(elems)
    c = np.zeros((d, d, d))
    for i, j in combinations(range(d), 2):
        a1, w1, _ = elems[i]
        a2, w2, _ = elems[j]
        iota = float(np.imag(w1.conj() @ eta @ w2)) if central else 0.0
        out = flat((a1 @ a2 - a2 @ a1, a1 @ w2 - a2 @ w1, iota))
        coeff, *_ = np.linalg.lstsq(basis, out, rcond=None)
        if np.max(np.abs(basis @ coeff - out), initial=0.0) > 1e-12:
            raise AssertionError(f"[{names[i]}, {names[j]}] leaves the span")  # construction bug
        coeff = np.round(coeff, 12) + 0.0
        c[i, j], c[j, i] = coeff, -coeff
    return LieAlgebra(tuple(names), c)


def _translations(m, imaginary=True):
    out = []
    for a in range(m):
        e = np.zeros(m, dtype=complex)
        e[a] = 1.0
        out.append((f"X{a}", e))
    if imaginary:
        for a in range(m):
            e = np.zeros(m, dtype=complex)
            e[a] = 1j
            out.append((f"Y{a}", e))
    return out


def unitary(p: int, n: int) -> LieAlgebra:
    _check_sig(p, n)
    return _affine(n + 1, _unitary_basis(n + 1), [], central=False)


def inhom_unitary(p: int, n: int) -> LieAlgebra:
    """``u(1,n)`` acting on ``C^{n+1}`` viewed as ``2n+2`` real translations."""
    _check_sig(p, n)
    return _affine(n + 1, _unitary_basis(n + 1), _translations(n + 1), central=False)


def quaplectic(p: int, n: int) -> LieAlgebra:
    """``u(1,n)`` semidirect the Heisenberg algebra ``h(n+1)``."""
    _check_sig(p, n)
    return _affine(n + 1, _unitary_basis(n + 1), _translations(n + 1), central=True)


def poincare(p: int, n: int) -> LieAlgebra:
    _check_sig(p, n)
    m = n + 1
    return _affine(m, _unitary_basis(m, orthogonal_only=True), _translations(m, imaginary=False), central=False)


def heisenberg(n: int) -> LieAlgebra:
    """``[Zp{a}, Zm{a}] = I`` for ``a < n``."""
    if n < 1:
        raise ValidationError("heisenberg(n) needs n >= 1")
    names = [f"Zp{a}" for a in range(n)] + [f"Zm{a}" for a in range(n)] + ["I"]
    return LieAlgebra.from_brackets(names, [(a, n + a, 2 * n, 1.0) for a in range(n)])


def hamilton(n: int = 1) -> LieAlgebra:
    """Algebra of the Hamilton group: ``V``, ``F``, ``R`` with ``[V, F] = 2R``.

    Generators are the 4x4 (t, q, p, e) matrices whose exponential
    ``I + vV + fF + rR`` is the Hamilton transform with parameters ``(v, f, r)``.
    """
    if n != 1:
        raise ValidationError("hamilton is only available for n = 1")
    return from_matrices(("V", "F", "R"), hamilton_matrices())


def hamilton_matrices():
    def e(i, j):
        m = np.zeros((4, 4))
        m[i, j] = 1.0
        return m

    return [e(1, 0) + e(3, 2), e(2, 0) - e(3, 1), e(3, 0)]


def abelian(n: int) -> LieAlgebra:
    if n < 0:
        raise ValidationError("abelian(n) needs n >= 0")
    return LieAlgebra(tuple(f"A{i}" for i in range(n)), np.zeros((n, n, n)))


def _check_sig(p, n):
    if p != 1:
        raise ValidationError("only signature (1, n) is supported")
    if not 1 <= n <= 3:
        raise ValidationError(f"n must be in 1..3, got {n}")


_FACTORIES = {
    "poincare": (poincare, 2),
    "inhom_unitary": (inhom_unitary, 2),
    "quaplectic": (quaplectic, 2),
    "unitary": (unitary, 2),
    "heisenberg": (heisenberg, 1),
    "hamilton": (hamilton, 1),
    "abelian": (abelian, 1),
}

CATALOG_NAMES = tuple(sorted(_FACTORIES))


def builtin_algebra(name: str, *params: int) -> LieAlgebra:
    """Look up a catalog algebra, e.g. ``builtin_algebra("quaplectic", 1, 3)``.

    Compact spellings such as ``"quaplectic13"`` or ``"heisenberg(2)"`` are
    accepted when ``params`` is empty. Raises ``ValidationError`` for unknown
    names or unsupported parameters.
    """
    if not params:
        name, params = parse_algebra_name(name)
    try:
        factory, arity = _FACTORIES[name]
    except KeyError:
        raise ValidationError(
            f"unknown algebra {name!r}; known: {', '.join(CATALOG_NAMES)}"
        ) from None
    if len(params) != arity:
        raise ValidationError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return factory(*(int(x) for x in params))


_NAME_RE = re.compile(r"^([a-z_]+?)\(?(\d+(?:\s*,\s*\d+)*|\d*)\)?$")


def parse_algebra_name(text: str) -> tuple[str, tuple[int, ...]]:
    m = _NAME_RE.match(text.strip().lower())
    if not m or m.group(1) not in _FACTORIES:
        raise ValidationError(f"cannot parse algebra name {text!r}")
    name, digits = m.group(1), m.group(2)
    arity = _FACTORIES[name][1]
    if "," in digits:
        params = tuple(int(x) for x in digits.split(","))
    elif arity == 2 and len(digits) == 2:
        params = (int(digits[0]), int(digits[1]))
    elif digits:
        params = (int(digits),)
    else:
        params = ()
    return name, params
