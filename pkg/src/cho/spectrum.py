"""Quantum energy levels of the decoupled modes.

Once the Hamiltonian splits into n independent oscillators with squared
frequencies lambda_i, the spectrum is
E(n_1..n_N) = hbar * sum_i sqrt(lambda_i) * (n_i + 1/2).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .diagonalize import ModeDecomposition
from .errors import UnboundSystem

__all__ = ["EnergyLevel", "ground_state_energy", "lowest_levels", "MAX_LEVELS"]

MAX_LEVELS = 100_000


@dataclass(frozen=True)
class EnergyLevel:
    occupations: tuple[int, ...]
    energy: float


def _mode_frequencies(dec: ModeDecomposition) -> np.ndarray:
    lam = np.asarray(dec.lambdas, dtype=float)
    for i, value in enumerate(lam):
        if value <= 0.0:
            raise UnboundSystem(i, float(value))
    return np.sqrt(lam)


def _energy(freqs, hbar: float, occ: tuple[int, ...]) -> float:
    return hbar * math.fsum(f * (n + 0.5) for f, n in zip(freqs, occ))


def ground_state_energy(dec: ModeDecomposition, hbar: float = 1.0) -> float:
    """Zero-point energy (hbar/2) * sum_i sqrt(lambda_i)."""
    freqs = _mode_frequencies(dec)
    return _energy(freqs, hbar, (0,) * len(freqs))


def lowest_levels(dec: ModeDecomposition, hbar: float = 1.0,
                  k: int = 10) -> list[EnergyLevel]:
    """The k lowest energy eigenvalues with their occupation numbers.

    Levels come back sorted ascending; equal energies are ordered by
    lexicographic occupation tuple.  Enumeration walks the occupation
    lattice best-first from the ground state; a successor increments
    index i only when every occupation after i is zero, which reaches
    each tuple exactly once and never needs a visited set.

    Raises UnboundSystem if any squared frequency is non-positive, and
    ValueError for k outside [1, 100000].
    """
    if not 1 <= k <= MAX_LEVELS:
        raise ValueError(f"k must be in [1, {MAX_LEVELS}], got {k}")
    freqs = tuple(float(f) for f in _mode_frequencies(dec))
    n = len(freqs)
    hbar = float(hbar)

    ground = (0,) * n
    heap = [(_energy(freqs, hbar, ground), ground)]
    out: list[EnergyLevel] = []
    while heap and len(out) < k:
        energy, occ = heapq.heappop(heap)
        out.append(EnergyLevel(occupations=occ, energy=energy))
        for i in range(n):
            if all(occ[j] == 0 for j in range(i + 1, n)):
                succ = occ[:i] + (occ[i] + 1,) + occ[i + 1 :]
                heapq.heappush(heap, (_energy(freqs, hbar, succ), succ))
    return out
