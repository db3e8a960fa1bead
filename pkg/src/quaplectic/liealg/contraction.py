"""Inonu-Wigner style contractions by integer rescaling weights."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from ..errors import DivergenceError, ValidationError
from .algebra import LieAlgebra


@dataclass(frozen=True)
class ContractionWeights:
    """Exponents ``w`` for the rescaling ``X_a -> eps**w[a] X_a``."""

    weights: tuple[int, ...]

    def __post_init__(self):
        try:
            w = tuple(int(x) for x in self.weights)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"weights must be integers: {exc}") from exc
        if any(int(x) != x for x in self.weights):
            raise ValidationError("weights must be integers")
        object.__setattr__(self, "weights", w)

    @classmethod
    def zeros(cls, dim: int) -> "ContractionWeights":
        return cls((0,) * dim)

    @classmethod
    def from_mapping(cls, L: LieAlgebra, mapping: Mapping[str, int], default: int = 0):
        unknown = set(mapping) - set(L.names)
        if unknown:
            raise ValidationError(f"unknown generators: {sorted(unknown)}")
        return cls(tuple(mapping.get(n, default) for n in L.names))


def bracket_degrees(L: LieAlgebra, w: ContractionWeights) -> np.ndarray:
    """``deg[a, b, c] = w_a + w_b - w_c``; the rescaled coefficient is ``eps**deg * c[a, b, c]``."""
    wa = np.asarray(w.weights)
    return wa[:, None, None] + wa[None, :, None] - wa[None, None, :]


def contract(L: LieAlgebra, w: ContractionWeights) -> LieAlgebra:
    """Limit ``eps -> 0`` of the rescaled algebra.

    Terms of degree 0 survive and positive degrees vanish. Raises
    ``DivergenceError`` naming the offending brackets if any nonzero term has
    negative degree.
    """
    if len(w.weights) != L.dim:
        raise ValidationError(f"need {L.dim} weights, got {len(w.weights)}")
    deg = bracket_degrees(L, w)
    c = L.structure
    bad = np.argwhere((deg < 0) & (c != 0))
    if bad.size:
        shown = [
            f"[{L.names[a]}, {L.names[b]}] -> {L.names[g]} (degree {deg[a, b, g]})"
            for a, b, g in bad
            if a < b
        ]
        raise DivergenceError("contraction diverges: " + "; ".join(shown[:8])
                              + (" ..." if len(shown) > 8 else ""))
    return LieAlgebra(L.names, np.where(deg == 0, c, 0.0))


_GEN_RE = re.compile(r"^([A-Z][a-z]*)(\d*)$")

# weights by generator family; ``lead`` is true when the first index is the time mode
_PRESETS = {
    # momentum/energy-like directions scale with 1/b
    "b": {
        "L": lambda lead: 0,
        "M": lambda lead: 1,
        "H": lambda lead: 1,
        "X": lambda lead: 0,
        "Y": lambda lead: 1,
        "I": lambda lead: 1,
    },
    # additionally 1/c on the time/energy directions
    "bc": {
        "L": lambda lead: 1 if lead else 0,
        "M": lambda lead: 1 if lead else 0,
        "H": lambda lead: 2 if lead else 0,
        "X": lambda lead: 0 if lead else 1,
        "Y": lambda lead: 2 if lead else 1,
        "I": lambda lead: 2,
    },
}

PRESET_ALIASES = {
    "b": "b",
    "special_relativity": "b",
    "sr": "b",
    "bc": "bc",
    "nonrelativistic": "bc",
    "nr": "bc",
}


def preset_weights(L: LieAlgebra, preset: str) -> ContractionWeights:
    """Named weights for the ``b -> inf`` (``"b"``) and ``b, c -> inf`` (``"bc"``) limits.

    Only generators named in the catalog convention (``L01``, ``H0``, ``X2``,
    ``I`` ...) are understood.
    """
    try:
        table = _PRESETS[PRESET_ALIASES[preset]]
    except KeyError:
        raise ValidationError(f"unknown preset {preset!r}; use one of {sorted(PRESET_ALIASES)}") from None
    out = []
    for n in L.names:
        m = _GEN_RE.match(n)
        if not m or m.group(1) not in table:
            raise ValidationError(f"preset {preset!r} has no weight for generator {n!r}")
        lead = m.group(2).startswith("0") if m.group(2) else False
        out.append(table[m.group(1)](lead))
    return ContractionWeights(tuple(out))
