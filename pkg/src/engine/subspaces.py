# Convfix Lab
# Subspaces of C^G, fixed spaces and principal-angle comparison
# October 2026

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from config.vars import ANGLE_TOL, RANK_TOL
from src.errors import PreconditionError
from src.engine.operators import LEFT, operator_matrix
from src.measures.measure import ComplexMeasure


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of C^n held as an n x d matrix with orthonormal columns."""
    basis: np.ndarray
    tol: float = RANK_TOL

    @property
    def dim(self) -> int:
        return int(self.basis.shape[1])

    @property
    def ambient(self) -> int:
        return int(self.basis.shape[0])

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T

    def contains(self, vector, tol: float = ANGLE_TOL) -> bool:
        v = np.asarray(vector, dtype=complex)
        return float(np.linalg.norm(v - self.projector() @ v)) <= tol * max(1.0, float(np.linalg.norm(v)))

    def orthonormality_residual(self) -> float:
        if self.dim == 0:
            return 0.0
        return float(np.abs(self.basis.conj().T @ self.basis - np.eye(self.dim)).max())


def empty_subspace(n: int, tol: float = RANK_TOL) -> Subspace:
    return Subspace(np.zeros((n, 0), dtype=complex), tol)


def span(vectors: np.ndarray, tol: float = RANK_TOL) -> Subspace:
    """Column span of a matrix, rank decided relative to its largest singular value."""
    vectors = np.asarray(vectors, dtype=complex)
    if vectors.size == 0 or not np.any(vectors):
        return empty_subspace(vectors.shape[0], tol)
    return Subspace(scipy.linalg.orth(vectors, rcond=tol), tol)


def null_space(matrix: np.ndarray, tol: float = RANK_TOL, scale: float = 1.0) -> Subspace:
    """
    Numerical kernel with an absolute cutoff.

    Singular values at or below tol * max(1, scale) count as zero, so a
    matrix made only of rounding noise has the whole space as its kernel.
    scale is the norm of the operator the matrix was built from.
    """
    matrix = np.asarray(matrix, dtype=complex)
    cutoff = tol * max(1.0, float(scale))
    sigma = scipy.linalg.svdvals(matrix) if matrix.size else np.zeros(0)
    if sigma.size == 0 or sigma[0] <= cutoff:
        return Subspace(np.eye(matrix.shape[1], dtype=complex), tol)
    return Subspace(scipy.linalg.null_space(matrix, rcond=cutoff / sigma[0]), tol)


def coordinate_span(n: int, indices) -> Subspace:
    """span{e_i : i in indices}."""
    idx = sorted(indices)
    basis = np.zeros((n, len(idx)), dtype=complex)
    basis[idx, np.arange(len(idx))] = 1
    return Subspace(basis)


def twist(subspace: Subspace, phase: np.ndarray) -> Subspace:
    """Pointwise product of every vector with a unimodular function."""
    return Subspace(subspace.basis * np.asarray(phase, dtype=complex)[:, None], subspace.tol)


def fixed_subspace(omega: ComplexMeasure, tol: float = RANK_TOL) -> Subspace:
    """
    Fix L_omega = ker(L_omega - I) on a finite group.

    Args:
        omega (ComplexMeasure): finite-carrier measure.
        tol (float): singular-value threshold, scaled by the operator norm when it exceeds 1.
    Returns:
        Subspace: orthonormal basis of the fixed functions.
    """
    if omega.on_lattice:
        raise PreconditionError("fixed_subspace needs a finite carrier")
    entries = operator_matrix(omega, LEFT).entries
    return null_space(entries - np.eye(entries.shape[0]), tol, np.linalg.norm(entries, 2))


def subspace_equal(a: Subspace, b: Subspace, tol: float = ANGLE_TOL) -> tuple[bool, float]:
    """
    Compare two subspaces by dimension and largest principal angle.

    Returns:
        tuple[bool, float]: (equal, largest angle); the angle is pi/2 when dimensions differ.
    """
    if a.ambient != b.ambient:
        raise PreconditionError(f"subspaces live in C^{a.ambient} and C^{b.ambient}")
    if a.dim != b.dim:
        return False, float(np.pi / 2)
    if a.dim == 0:
        return True, 0.0
    angle = float(np.max(scipy.linalg.subspace_angles(a.basis, b.basis)))
    return angle <= tol, angle
