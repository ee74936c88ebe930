"""Normal-mode decomposition of the quadratic Hamiltonian.

The point transformation x = C x', p = (C^T)^-1 p' with C = T^(1/2) U
turns H = (1/2) p^T T p + (1/2) x^T V x into n independent modes whose
squared frequencies are the eigenvalues of S = T^(1/2) V T^(1/2).  S is
symmetric and similar to A = T V, so both carry the same spectrum; only
S is handed to the eigensolver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ConsistencyError
from .linalg import SymMatrix, jacobi_eigh, max_abs, spd_sqrt
from .model import OscillatorModel, build_T, build_V

__all__ = [
    "ModeDecomposition",
    "MassNormalizedDecomposition",
    "compute_A",
    "compute_S",
    "decompose",
    "decompose_mass_normalized",
]

# residual budgets, relative to the max entry of the matrix they test
_ORTH_TOL = 1e-9
_KINETIC_TOL = 1e-8
_POTENTIAL_TOL = 1e-8


def compute_A(t, v) -> np.ndarray:
    """Product T V.  Not symmetric in general, but similar to S."""
    t = np.asarray(t, dtype=float)
    v = np.asarray(v, dtype=float)
    return t @ v


def compute_S(t, v) -> SymMatrix:
    """Symmetrized T^(1/2) V T^(1/2).

    The product is symmetric up to rounding; skew beyond 1e-12 relative
    to the largest entry means the inputs were inconsistent and raises
    ConsistencyError instead of being averaged away.
    """
    t = SymMatrix(np.asarray(t, dtype=float)) if not isinstance(t, SymMatrix) else t
    v = np.asarray(v, dtype=float)
    r = spd_sqrt(t).mat
    s = r @ v @ r
    skew = max_abs(s - s.T)
    if skew > 1e-12 * (1.0 + max_abs(s)):
        raise ConsistencyError(f"T^(1/2) V T^(1/2) skew {skew:.3e} above tolerance")
    return SymMatrix(s)


@dataclass(frozen=True)
class ModeDecomposition:
    """Normal modes of one model.

    Attributes
    ----------
    lambdas : ndarray
        Squared mode frequencies, ascending.
    u : ndarray
        Orthogonal eigenvector matrix of S (columns follow lambdas).
    c : ndarray
        Transformation matrix T^(1/2) U.
    residual_orth, residual_kinetic, residual_potential : float
        Max-norm residuals of U^T U - I, C^-1 T C^-T - I and the
        off-diagonal part of C^T V C, computed eagerly at construction.
    """

    lambdas: np.ndarray
    u: np.ndarray
    c: np.ndarray
    residual_orth: float
    residual_kinetic: float
    residual_potential: float


@dataclass(frozen=True)
class MassNormalizedDecomposition:
    """Mass-normalized variant: C^-1 T C^-T = (1/m_ref) I, C^T V C = diag(k)."""

    m_ref: float
    k: np.ndarray
    c: np.ndarray
    lambdas: np.ndarray


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def decompose(model: OscillatorModel, tol: float = 1e-12,
              max_sweeps: int = 50) -> ModeDecomposition:
    """Full normal-mode decomposition with eager residual checks.

    Raises
    ------
    NotPositiveDefinite
        If the kinetic matrix is not positive definite.
    ConsistencyError
        If any transformation residual exceeds its budget; results would
        be silently wrong physics otherwise.
    """
    t = build_T(model)
    v = build_V(model)
    s = compute_S(t, v)
    eig = jacobi_eigh(s, tol=tol, max_sweeps=max_sweeps)
    root = spd_sqrt(t).mat
    c = root @ eig.vectors

    residual_orth = max_abs(eig.vectors.T @ eig.vectors - np.eye(model.n))
    c_inv = linalg.inverse(c)
    residual_kinetic = max_abs(c_inv @ t.mat @ c_inv.T - np.eye(model.n))
    cvc = c.T @ v.mat @ c
    residual_potential = max_abs(cvc - np.diag(np.diagonal(cvc)))

    checks = [
        (residual_orth, _ORTH_TOL, "orthogonality"),
        (residual_kinetic, _KINETIC_TOL * (1.0 + max_abs(t.mat)), "kinetic"),
        (residual_potential, _POTENTIAL_TOL * (1.0 + max_abs(v.mat)), "potential"),
    ]
    for value, bound, name in checks:
        if value > bound:
            raise ConsistencyError(
                f"{name} residual {value:.3e} exceeds {bound:.3e}"
            )
    lam = eig.values
    for i in range(model.n):
        if abs(cvc[i, i] - lam[i]) > 1e-8 * (1.0 + abs(lam[i])):
            raise ConsistencyError(
                f"diag(C^T V C)[{i}] = {cvc[i, i]:.12e} disagrees with "
                f"eigenvalue {lam[i]:.12e}"
            )
    return ModeDecomposition(
        lambdas=_frozen(lam),
        u=_frozen(eig.vectors),
        c=_frozen(c),
        residual_orth=residual_orth,
        residual_kinetic=residual_kinetic,
        residual_potential=residual_potential,
    )


def decompose_mass_normalized(model: OscillatorModel, m_ref: float | None = None,
                              tol: float = 1e-12) -> MassNormalizedDecomposition:
    """Decomposition scaled to a reference mass.

    C = sqrt(m_ref) T^(1/2) U is dimensionless; the diagonal stiffness
    k_i = m_ref * lambda_i depends on the (arbitrary) m_ref, while
    lambdas = k / m_ref does not.  The default m_ref is the geometric
    mean of the masses, so identical masses give C = U exactly up to
    rounding.
    """
    dec = decompose(model, tol=tol)
    if m_ref is None:
        m_ref = float(np.exp(np.mean(np.log(model.masses))))
    m_ref = float(m_ref)
    if not np.isfinite(m_ref) or m_ref <= 0.0:
        raise ValueError(f"m_ref must be > 0, got {m_ref}")
    c = np.sqrt(m_ref) * dec.c
    v = build_V(model)
    cvc = c.T @ v.mat @ c
    k = np.diagonal(cvc).copy()

    t = build_T(model)
    c_inv = linalg.inverse(c)
    kin = m_ref * (c_inv @ t.mat @ c_inv.T)
    if max_abs(kin - np.eye(model.n)) > _KINETIC_TOL * (1.0 + max_abs(t.mat)):
        raise ConsistencyError("mass-normalized kinetic residual above tolerance")
    return MassNormalizedDecomposition(
        m_ref=m_ref,
        k=_frozen(k),
        c=_frozen(c),
        lambdas=_frozen(k / m_ref),
    )
