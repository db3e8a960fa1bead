import json
from itertools import combinations

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given
from hypothesis import strategies as st

from quaplectic.errors import DivergenceError, ValidationError
from quaplectic.liealg import (
    ContractionWeights,
    LieAlgebra,
    abelian,
    bracket,
    builtin_algebra,
    central_extensions,
    coboundary_distance,
    cocycle_residual,
    contract,
    extend,
    fingerprint,
    from_matrices,
    hamilton,
    hamilton_matrices,
    heisenberg,
    inhom_unitary,
    jacobi_residual,
    parse_algebra_name,
    poincare,
    preset_weights,
    quaplectic,
    unitary,
)


# -- independent matrix realizations -------------------------------------------


def eta(m):
    return np.diag([-1.0] + [1.0] * (m - 1))


def unit(m, a, b):
    e = np.zeros((m, m), dtype=complex)
    e[a, b] = 1
    return e


def realify(a):
    """complex m x m acting on (Re w, Im w)"""
    return np.block([[a.real, -a.imag], [a.imag, a.real]])


def jacobi_group_matrix(m, metric, a=None, w=None, s=0.0):
    """[[0, v^T Om, s], [0, A_R, v], [0, 0, 0]] with 2 v1^T Om v2 = Im(w1^H metric w2)."""
    n = 2 * m
    om = 0.5 * np.block([[np.zeros((m, m)), metric], [-metric, np.zeros((m, m))]])
    v = np.zeros(n) if w is None else np.concatenate([np.real(w), np.imag(w)])
    out = np.zeros((n + 2, n + 2))
    out[0, 1 : n + 1] = v @ om
    out[0, n + 1] = s
    if a is not None:
        out[1 : n + 1, 1 : n + 1] = realify(a)
    out[1 : n + 1, n + 1] = v
    return out


def quaplectic_realization(m, metric=None, translations=True, central=True, unitary_part=True):
    metric = eta(m) if metric is None else metric
    names, mats = [], []
    if unitary_part:
        for a in range(m):
            names.append(f"H{a}")
            mats.append(jacobi_group_matrix(m, metric, metric @ (1j * unit(m, a, a))))
        for a, b in combinations(range(m), 2):
            names.append(f"L{a}{b}")
            mats.append(jacobi_group_matrix(m, metric, metric @ (unit(m, a, b) - unit(m, b, a))))
        for a, b in combinations(range(m), 2):
            names.append(f"M{a}{b}")
            mats.append(jacobi_group_matrix(m, metric, metric @ (1j * (unit(m, a, b) + unit(m, b, a)))))
    if translations:
        for a in range(m):
            names.append(f"X{a}")
            mats.append(jacobi_group_matrix(m, metric, w=np.eye(m)[a]))
        for a in range(m):
            names.append(f"Y{a}")
            mats.append(jacobi_group_matrix(m, metric, w=1j * np.eye(m)[a]))
    if central:
        names.append("I")
        mats.append(jacobi_group_matrix(m, metric, s=1.0))
    return names, mats


def so13_on_symmetric():
    """so(1,3) semidirect the 10-dim module eta Sym, as [[l, s], [0, l]] blocks."""
    m, e = 4, eta(4)
    names, mats = [], []
    for a, b in combinations(range(m), 2):
        k = np.zeros((m, m))
        k[a, b], k[b, a] = 1, -1
        names.append(f"L{a}{b}")
        mats.append(np.kron(np.eye(2), e @ k))
    for a in range(m):
        for b in range(a, m):
            s = np.zeros((m, m))
            s[a, b] = s[b, a] = 1
            names.append(f"S{a}{b}")
            blk = np.zeros((8, 8))
            blk[:4, 4:] = e @ s
            mats.append(blk)
    return names, mats


# -- catalog --------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quaplectic_matches_matrix_realization(n):
    L = quaplectic(1, n)
    names, mats = quaplectic_realization(n + 1)
    R = from_matrices(names, mats)
    assert L.names == R.names
    assert np.max(np.abs(L.structure - R.structure)) < 1e-12


def test_inhom_unitary_is_quaplectic_without_center():
    L = inhom_unitary(1, 2)
    Q = quaplectic(1, 2)
    assert L.names == Q.names[:-1]
    assert np.array_equal(L.structure, Q.structure[:-1, :-1, :-1])


def test_frozen_brackets():
    Q = quaplectic(1, 1)
    e = lambda n: np.eye(Q.dim)[Q.index(n)]  # noqa: E731
    # [X_a, Y_b] = eta_ab I
    assert np.array_equal(bracket(Q, e("X0"), e("Y0")), -e("I"))
    assert np.array_equal(bracket(Q, e("X1"), e("Y1")), e("I"))
    assert np.array_equal(bracket(Q, e("X0"), e("Y1")), 0 * e("I"))
    # H0 = eta (i E00) sends e_0 to -i e_0
    assert np.array_equal(bracket(Q, e("H0"), e("X0")), -e("Y0"))
    # boost L01 = eta (E01 - E10) mixes X0 and X1
    assert np.array_equal(bracket(Q, e("L01"), e("X1")), -e("X0"))


def test_quaplectic_dimensions():
    assert quaplectic(1, 1).dim == 9
    assert quaplectic(1, 3).dim == 25
    assert inhom_unitary(1, 3).dim == 24
    assert poincare(1, 3).dim == 10


def test_heisenberg_one():
    H = heisenberg(1)
    assert H.dim == 3
    assert H.brackets == [(0, 1, 2, 1.0)]
    assert np.array_equal(bracket(H, [1, 0, 0], [0, 1, 0]), [0, 0, 1])


def test_hamilton_exponentiates_to_group_law():
    V, F, R = hamilton_matrices()
    H = hamilton(1)
    assert H.brackets == [(0, 1, 2, 2.0)]

    def group(v, f, r):
        return np.array([[1, 0, 0, 0], [v, 1, 0, 0], [f, 0, 1, 0], [r, -f, v, 1]], dtype=float)

    for v, f, r in [(1, 2, 3), (-0.5, 0.25, 4), (0, 1, 0)]:
        assert np.allclose(scipy.linalg.expm(v * V + f * F + r * R), group(v, f, r), atol=1e-14)
    # product law follows from BCH with [V, F] = 2R
    p1, p2 = (4, 5, 6), (1, 2, 3)
    prod = group(*p1) @ group(*p2)
    assert np.array_equal(prod, group(5, 7, 12))


@pytest.mark.parametrize("name", ["poincare13", "inhom_unitary11", "inhom_unitary13", "quaplectic13",
                                  "quaplectic11", "heisenberg1", "heisenberg3", "hamilton1", "unitary12"])
def test_catalog_jacobi(name):
    L = builtin_algebra(name)
    assert jacobi_residual(L) < 1e-12
    assert L.antisymmetry_defect() == 0.0


def test_catalog_names():
    assert parse_algebra_name("quaplectic13") == ("quaplectic", (1, 3))
    assert parse_algebra_name("quaplectic(1,2)") == ("quaplectic", (1, 2))
    assert parse_algebra_name("heisenberg2") == ("heisenberg", (2,))
    assert builtin_algebra("inhom_unitary", 1, 1).dim == 8
    with pytest.raises(ValidationError):
        builtin_algebra("sl2")
    with pytest.raises(ValidationError):
        builtin_algebra("quaplectic", 1, 5)
    with pytest.raises(ValidationError):
        builtin_algebra("quaplectic", 2, 1)


# -- algebra basics ----------------------------------------------------------------


def test_perturbed_quaplectic_detected():
    Q = quaplectic(1, 3)
    c = np.array(Q.structure)
    a, b, g = Q.brackets[5][:3]
    c[a, b, g] += 0.1
    c[b, a, g] -= 0.1
    assert jacobi_residual(LieAlgebra(Q.names, c)) >= 0.01


def test_non_antisymmetric_rejected():
    c = np.zeros((2, 2, 2))
    c[0, 1, 0] = 1.0
    with pytest.raises(ValidationError):
        jacobi_residual(LieAlgebra(("a", "b"), c))


def test_inconsistent_brackets_rejected():
    with pytest.raises(ValidationError):
        LieAlgebra.from_brackets(["a", "b"], [(0, 1, 0, 1.0), (1, 0, 0, 1.0)])
    with pytest.raises(ValidationError):
        LieAlgebra.from_brackets(["a", "b"], [(0, 0, 1, 1.0)])
    with pytest.raises(ValidationError):
        LieAlgebra.from_brackets(["a", "b"], [(0, 2, 1, 1.0)])


def test_antisymmetric_closure():
    L = LieAlgebra.from_brackets(["a", "b"], [(1, 0, 0, 2.0)])
    assert L.structure[0, 1, 0] == -2.0 and L.structure[1, 0, 0] == 2.0


vec = st.lists(st.floats(-3, 3), min_size=9, max_size=9).map(np.array)


@given(vec, vec, vec)
def test_bracket_bilinear_antisymmetric(x, y, z):
    Q = quaplectic(1, 1)
    assert np.allclose(bracket(Q, x, y + z), bracket(Q, x, y) + bracket(Q, x, z), atol=1e-12)
    assert np.allclose(bracket(Q, x, y), -bracket(Q, y, x), atol=1e-12)
    assert np.array_equal(bracket(Q, x, x), np.zeros(9)) or np.max(np.abs(bracket(Q, x, x))) < 1e-12


def test_bracket_length_mismatch():
    with pytest.raises(ValidationError):
        bracket(heisenberg(1), [1, 0], [0, 1, 0])


def test_json_roundtrip(tmp_path):
    Q = quaplectic(1, 2)
    path = tmp_path / "q.json"
    Q.save(path)
    back = LieAlgebra.load(path)
    assert back.names == Q.names
    assert np.array_equal(back.structure, Q.structure)
    doc = json.loads(path.read_text())
    assert doc["dim"] == Q.dim and len(doc["brackets"][0]) == 4


def test_json_malformed(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValidationError):
        LieAlgebra.load(bad)
    bad.write_text(json.dumps({"dim": 2, "names": ["a"], "brackets": []}))
    with pytest.raises(ValidationError):
        LieAlgebra.load(bad)
    bad.write_text(json.dumps({"dim": 2, "brackets": [[0, 1, 0]]}))
    with pytest.raises(ValidationError):
        LieAlgebra.load(bad)


# -- cohomology --------------------------------------------------------------------


def brute_force_h2(L):
    """dim of closed 2-forms minus exact ones, via explicit loops over all index triples"""
    d = L.dim
    pairs = list(combinations(range(d), 2))
    rows = []
    for a, b, c in combinations(range(d), 3):
        row = np.zeros(len(pairs))
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            for e in range(d):
                coeff = L.structure[x, y, e]
                if coeff == 0 or e == z:
                    continue
                i, j, s = (e, z, 1) if e < z else (z, e, -1)
                row[pairs.index((i, j))] += s * coeff
        rows.append(row)
    closed = len(pairs) - (np.linalg.matrix_rank(np.array(rows)) if rows else 0)
    exact = np.linalg.matrix_rank(np.array([[L.structure[i, j, g] for g in range(d)] for i, j in pairs])) if pairs else 0
    return closed - exact


@pytest.mark.parametrize(
    "L, expected",
    [
        (poincare(1, 3), 0),
        (inhom_unitary(1, 1), 1),
        (inhom_unitary(1, 3), 1),
        (abelian(2), 1),
        (abelian(3), 3),
        (heisenberg(1), 2),
        (quaplectic(1, 1), 0),
    ],
)
def test_h2(L, expected):
    sol = central_extensions(L)
    assert sol.h2_dim == expected
    assert sol.max_cocycle_residual(L) < 1e-9
    for w in sol.cocycles:
        assert np.linalg.norm(w) == pytest.approx(1.0)
        assert coboundary_distance(L, w) > 1e-6


@pytest.mark.parametrize("L", [inhom_unitary(1, 1), hamilton(1), heisenberg(2), poincare(1, 1)])
def test_h2_brute_force(L):
    assert central_extensions(L).h2_dim == brute_force_h2(L)


def translation_block(L, w):
    m = sum(n.startswith("X") for n in L.names)
    idx = [L.index(f"X{a}") for a in range(m)] + [L.index(f"Y{a}") for a in range(m)]
    e = eta(m)
    target = np.block([[np.zeros((m, m)), e], [-e, np.zeros((m, m))]])
    blk = w[np.ix_(idx, idx)]
    return blk, target


@pytest.mark.parametrize("n", [1, 3])
def test_inhom_unitary_cocycle_is_eta_pairing(n):
    L = inhom_unitary(1, n)
    w = central_extensions(L).cocycles[0]
    blk, target = translation_block(L, w)
    cos = np.sum(blk * target) / (np.linalg.norm(blk) * np.linalg.norm(target))
    assert abs(cos) > 0.999
    # and nothing outside the translation block
    assert np.linalg.norm(blk) == pytest.approx(1.0, abs=1e-9)


def test_extension_recovers_quaplectic():
    L = inhom_unitary(1, 1)
    ext = extend(L, central_extensions(L).cocycles[0])
    assert jacobi_residual(ext) < 1e-12
    assert fingerprint(ext) == fingerprint(quaplectic(1, 1))


def test_cocycle_residual_of_non_cocycle():
    L = heisenberg(1).structure
    Lg = LieAlgebra(("a", "b", "c", "d"), np.pad(L, ((0, 1), (0, 1), (0, 1))))
    w = np.zeros((4, 4))
    w[0, 3], w[3, 0] = 1, -1  # pairs Zp with the spectator; closed
    assert cocycle_residual(Lg, w) == 0.0
    w = np.zeros((4, 4))
    w[2, 3], w[3, 2] = 1, -1  # I with spectator: d omega (Zp, Zm, d) = omega(I, d) != 0
    assert cocycle_residual(Lg, w) > 0.5


def test_extensions_reject_non_lie():
    Q = quaplectic(1, 1)
    c = np.array(Q.structure)
    a, b, g = Q.brackets[3][:3]
    c[a, b, g] += 0.5
    c[b, a, g] -= 0.5
    bad = LieAlgebra(Q.names, c)
    assert jacobi_residual(bad) > 1e-9
    with pytest.raises(ValidationError):
        central_extensions(bad)


@given(st.integers(0, 2**32 - 1), st.sampled_from(["poincare13", "inhom_unitary11", "heisenberg2"]))
def test_h2_basis_independent(seed, name):
    L = builtin_algebra(name)
    rng = np.random.default_rng(seed)
    # orthogonal times a bounded diagonal keeps the condition number below 4
    q, _ = np.linalg.qr(rng.normal(size=(L.dim, L.dim)))
    p = q @ np.diag(rng.uniform(0.5, 2.0, L.dim))
    M = L.change_basis(p)
    assert jacobi_residual(M) < 1e-9
    assert central_extensions(M).h2_dim == central_extensions(L).h2_dim


# -- contraction ---------------------------------------------------------------------


def test_zero_weights_unchanged():
    Q = quaplectic(1, 2)
    C = contract(Q, ContractionWeights.zeros(Q.dim))
    assert np.array_equal(C.structure, Q.structure)


def test_divergence_reported():
    H = heisenberg(1)
    with pytest.raises(DivergenceError, match=r"\[Zp0, Zm0\]"):
        contract(H, ContractionWeights((0, 0, 1)))


def test_non_integer_weights():
    with pytest.raises(ValidationError):
        ContractionWeights((0.5, 1))


def test_so11_to_e1():
    # boost L01 rescaled with the translation X0 survive; [L01, X1] -> X0 keeps, X1 scaled
    P = poincare(1, 1)
    w = ContractionWeights.from_mapping(P, {"L01": 1, "X1": 1})
    C = contract(P, w)
    assert jacobi_residual(C) == 0.0
    assert fingerprint(C)["derived"][:3] == (3, 1, 0)


@pytest.mark.parametrize("preset", ["b", "bc"])
def test_contraction_idempotent(preset):
    U = unitary(1, 3)
    w = preset_weights(U, preset)
    once = contract(U, w)
    assert np.array_equal(contract(once, w).structure, once.structure)
    assert jacobi_residual(once) < 1e-12


def test_b_limit_is_lorentz_on_abelian_ten():
    C = contract(unitary(1, 3), preset_weights(unitary(1, 3), "b"))
    target = from_matrices(*so13_on_symmetric())
    assert jacobi_residual(target) < 1e-12
    assert fingerprint(C) == fingerprint(target)


def test_bc_limit_is_unitary_on_heisenberg():
    C = contract(unitary(1, 3), preset_weights(unitary(1, 3), "bc"))
    names, mats = quaplectic_realization(3, metric=np.eye(3))
    target = from_matrices(names, mats)
    assert target.dim == 16
    assert fingerprint(C) == fingerprint(target)


def test_bc_limit_two_dimensional_case():
    C = contract(unitary(1, 1), preset_weights(unitary(1, 1), "bc"))
    names, mats = quaplectic_realization(1, metric=np.eye(1))
    assert fingerprint(C) == fingerprint(from_matrices(names, mats))


def test_presets_on_full_quaplectic_are_finite():
    Q = quaplectic(1, 3)
    for preset in ("b", "bc"):
        assert jacobi_residual(contract(Q, preset_weights(Q, preset))) < 1e-12


def test_preset_unknown_generator():
    with pytest.raises(ValidationError):
        preset_weights(heisenberg(1), "b")
    with pytest.raises(ValidationError):
        preset_weights(unitary(1, 1), "galilean")
