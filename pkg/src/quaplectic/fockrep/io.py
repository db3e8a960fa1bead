"""CSV export of spectra and operator matrices."""

from __future__ import annotations

import csv
import io

import numpy as np


def spectrum_csv(values, method: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "eigenvalue", "method"])
    for i, v in enumerate(np.asarray(values).real):
        w.writerow([i, f"{v:.17g}", method])
    return buf.getvalue()


def matrix_csv(op) -> str:
    """Row-major ``row,col,real,imag`` listing of every entry."""
    a = np.asarray(op, dtype=complex)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "col", "real", "imag"])
    for (r, c), z in np.ndenumerate(a):
        w.writerow([r, c, f"{z.real:.17g}", f"{z.imag:.17g}"])
    return buf.getvalue()


def read_spectrum_csv(text: str) -> tuple[np.ndarray, list[str]]:
    rows = list(csv.DictReader(io.StringIO(text)))
    return np.array([float(r["eigenvalue"]) for r in rows]), [r["method"] for r in rows]


def read_matrix_csv(text: str) -> np.ndarray:
    rows = list(csv.DictReader(io.StringIO(text)))
    n = max(int(r["row"]) for r in rows) + 1
    k = max(int(r["col"]) for r in rows) + 1
    out = np.zeros((n, k), dtype=complex)
    for r in rows:
        out[int(r["row"]), int(r["col"])] = complex(float(r["real"]), float(r["imag"]))
    return out
