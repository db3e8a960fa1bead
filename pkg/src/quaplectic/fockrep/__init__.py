"""Truncated oscillator representations, Casimir operators and spectra."""

from .casimir import (
    CasimirResult,
    SpectrumReport,
    casimir_ops,
    contracted_z_power,
    f_label_check,
    g_identity,
    g_polynomial,
    interior_spectrum,
    resolve_n,
    trace_powers,
    wave_operator,
)
from .grid import (
    oscillator_1d,
    oscillator_1d_fock,
    oscillator_spectrum_fock,
    oscillator_spectrum_grid,
    second_derivative_weights,
)
from .io import matrix_csv, read_matrix_csv, read_spectrum_csv, spectrum_csv
from .rep import (
    RepresentationBundle,
    Signature,
    Truncation,
    annihilator,
    build_rep,
    check_eps_block,
    comm,
    commutator_residuals,
    defining_eps,
    naive_w_residual,
)

__all__ = [
    "CasimirResult", "SpectrumReport", "casimir_ops", "contracted_z_power", "f_label_check",
    "g_identity", "g_polynomial", "interior_spectrum", "resolve_n", "trace_powers",
    "wave_operator", "oscillator_1d", "oscillator_1d_fock", "oscillator_spectrum_fock",
    "oscillator_spectrum_grid", "second_derivative_weights", "matrix_csv", "read_matrix_csv",
    "read_spectrum_csv", "spectrum_csv", "RepresentationBundle", "Signature", "Truncation",
    "annihilator", "build_rep", "check_eps_block", "comm", "commutator_residuals",
    "defining_eps", "naive_w_residual",
]
