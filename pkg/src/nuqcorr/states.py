"""Small dense Hermitian state matrices and their information primitives.

Everything in the package runs on 2x2 (single flavor mode) and 4x4 (two
flavor modes) density matrices.  The joint basis is always ordered
|00>, |01>, |10>, |11>, with subsystem A the first tensor factor and B the
second.  All entropies are in bits.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10

QUBIT_LABELS = ("0", "1")
PAIR_LABELS = ("00", "01", "10", "11")


class StateValidationError(ValueError):
    """Raised when a matrix fails the density-matrix invariants."""


@dataclass(frozen=True)
class DensityMatrix:
    """Validated complex Hermitian, unit-trace, positive-semidefinite matrix.

    Parameters
    ----------
    matrix:
        2x2 or 4x4 complex array.  A defensive read-only copy is stored.
    basis_labels:
        Names of the basis kets, defaulting to "0","1" (dim 2) or
        "00","01","10","11" (dim 4).
    """

    matrix: np.ndarray
    basis_labels: tuple = field(default=())

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise StateValidationError(f"expected a square matrix, got shape {m.shape}")
        dim = m.shape[0]
        if dim not in (2, 4):
            raise StateValidationError(f"unsupported dimension {dim}, expected 2 or 4")
        if not np.all(np.isfinite(m.view(float))):
            raise StateValidationError("matrix contains NaN or Inf entries")
        herm = np.max(np.abs(m - m.conj().T))
        if herm > HERMITICITY_TOL:
            raise StateValidationError(f"matrix is not Hermitian (max deviation {herm:.3e})")
        tr = np.trace(m).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise StateValidationError(f"trace is {tr!r}, expected 1 within {TRACE_TOL}")
        # symmetrize round-off before the eigenvalue check
        m = (m + m.conj().T) / 2
        spectrum = np.linalg.eigvalsh(m)
        if spectrum[0] < -PSD_TOL:
            raise StateValidationError(
                f"matrix is not positive semidefinite (min eigenvalue {spectrum[0]:.3e})")
        m.setflags(write=False)
        spectrum.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        # validation already diagonalized the matrix; keep the result so the
        # entropy calls do not repeat the work
        object.__setattr__(self, "_spectrum_asc", spectrum)
        labels = tuple(self.basis_labels) or (QUBIT_LABELS if dim == 2 else PAIR_LABELS)
        if len(labels) != dim:
            raise StateValidationError(f"{len(labels)} basis labels for dimension {dim}")
        object.__setattr__(self, "basis_labels", labels)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def eig_hermitian(state: DensityMatrix) -> np.ndarray:
    """Eigenvalues of a density matrix, descending.

    For dim 2 the closed form from trace and determinant is used; for dim 4
    the LAPACK Hermitian solver.  Eigenvalues in [-PSD_TOL, 0) are clamped
    to zero.
    """
    m = state.matrix
    if state.dim == 2:
        t = np.trace(m).real
        d = (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real
        disc = max(t * t - 4.0 * d, 0.0)
        root = np.sqrt(disc)
        ev = np.array([(t + root) / 2.0, (t - root) / 2.0])
    else:
        ev = state._spectrum_asc[::-1].copy()
    bad = ev < -PSD_TOL
    if np.any(bad):
        raise StateValidationError(f"eigenvalue {ev[bad][0]:.3e} below -{PSD_TOL}")
    ev[(ev < 0.0)] = 0.0
    return ev


def vn_entropy(state: DensityMatrix) -> float:
    """von Neumann entropy in bits, with 0*log(0) := 0."""
    ev = eig_hermitian(state)
    ev = ev[ev > 0.0]
    return float(-(ev * np.log2(ev)).sum()) if ev.size else 0.0


def partial_trace(state: DensityMatrix, keep: str) -> DensityMatrix:
    """Reduce a two-mode state to one mode.

    ``keep="A"`` traces out the second tensor factor, ``keep="B"`` the
    first.  Basis order of the input must be |00>,|01>,|10>,|11>.
    """
    if state.dim != 4:
        raise StateValidationError(f"partial trace needs a 4x4 state, got dim {state.dim}")
    if keep not in ("A", "B"):
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    m = state.matrix
    out = np.zeros((2, 2), dtype=complex)
    for i in range(2):
        for k in range(2):
            acc = 0.0 + 0.0j
            for j in range(2):
                if keep == "A":
                    acc += m[2 * i + j, 2 * k + j]
                else:
                    acc += m[2 * j + i, 2 * j + k]
            out[i, k] = acc
    return DensityMatrix(out)


def dephase(state: DensityMatrix) -> DensityMatrix:
    """Zero all off-diagonal entries in the declared reference basis."""
    return DensityMatrix(np.diag(np.diag(state.matrix)), state.basis_labels)


def purity(state: DensityMatrix) -> float:
    """Tr(rho^2), in (0, 1]."""
    m = state.matrix
    return float(np.trace(m @ m).real)
