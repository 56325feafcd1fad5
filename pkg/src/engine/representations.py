# Convfix Lab
# Unitary representations of the built-in groups and their fixed vectors
# October 2026

import itertools
from dataclasses import dataclass, field

import numpy as np

from config.vars import ANGLE_TOL, RANK_TOL
from src.errors import PreconditionError, RepresentationError
from src.groups.cayley import GroupTable
from src.measures.measure import ComplexMeasure, tv_norm
from src.engine.structure import NoCharacter, extract_character
from src.engine.subspaces import Subspace, null_space, subspace_equal

HOMOMORPHISM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Representation:
    """matrices[g] is the unitary pi(g)."""
    group: GroupTable
    matrices: np.ndarray
    name: str = "pi"

    @property
    def dim(self) -> int:
        return int(self.matrices.shape[1])

    def __call__(self, g: int) -> np.ndarray:
        return self.matrices[g]

    def integrate(self, omega: ComplexMeasure) -> np.ndarray:
        """pi(omega) = sum_s omega(s) pi(s)."""
        return np.einsum("g,gij->ij", omega.coeffs, self.matrices)


def make_representation(group: GroupTable, matrices, name: str = "pi") -> Representation:
    """
    Validate a family of matrices as a unitary representation.

    Raises:
        RepresentationError: if a matrix is not unitary or pi(ab) != pi(a) pi(b).
    """
    mats = np.array(matrices, dtype=complex)
    if mats.ndim != 3 or mats.shape[0] != group.order or mats.shape[1] != mats.shape[2]:
        raise RepresentationError(f"{name}: expected {group.order} square matrices")
    eye = np.eye(mats.shape[1])
    for g in range(group.order):
        if np.abs(mats[g].conj().T @ mats[g] - eye).max() > HOMOMORPHISM_TOL:
            raise RepresentationError(f"{name}({group.label(g)}) is not unitary")
    products = np.einsum("aij,bjk->abik", mats, mats)
    expected = mats[group.mul]
    worst = float(np.abs(products - expected).max())
    if worst > HOMOMORPHISM_TOL:
        raise RepresentationError(f"{name} is not a homomorphism (residual {worst:.2e})")
    return Representation(group, mats, name)


def regular_representation(group: GroupTable) -> Representation:
    """lambda(s) e_t = e_{s t}."""
    order = group.order
    mats = np.zeros((order, order, order), dtype=complex)
    for s in range(order):
        mats[s, group.mul[s], np.arange(order)] = 1
    return make_representation(group, mats, "lambda")


def trivial_representation(group: GroupTable, dim: int = 1) -> Representation:
    return make_representation(group, np.broadcast_to(np.eye(dim), (group.order, dim, dim)), "trivial")


def _symmetric3_standard(group: GroupTable) -> np.ndarray:
    # permutation action restricted to the sum-zero plane of C^3
    basis = np.array([[1, 1], [-1, 1], [0, -2]], dtype=float) / np.array([np.sqrt(2), np.sqrt(6)])
    mats = []
    for perm in itertools.permutations(range(3)):
        p = np.zeros((3, 3))
        p[list(perm), [0, 1, 2]] = 1
        mats.append(basis.T @ p @ basis)
    return np.array(mats)


def _dihedral_standard(group: GroupTable, n: int) -> np.ndarray:
    mats = []
    for f in range(2):
        for k in range(n):
            c, s = np.cos(2 * np.pi * k / n), np.sin(2 * np.pi * k / n)
            rot = np.array([[c, -s], [s, c]])
            mats.append(rot @ np.diag([1.0, -1.0]) if f else rot)
    return np.array(mats)


def _quaternion_standard() -> np.ndarray:
    units = [
        np.eye(2),
        np.array([[1j, 0], [0, -1j]]),
        np.array([[0, 1], [-1, 0]]),
        np.array([[0, 1j], [1j, 0]]),
    ]
    return np.array(units + [-u for u in units], dtype=complex)


def standard_irrep(group: GroupTable) -> Representation:
    """
    The two-dimensional irreducible representation shipped for S3, D_n and Q8.

    Raises:
        RepresentationError: for any other group.
    """
    spec = group.spec
    if spec == "symmetric:3":
        mats = _symmetric3_standard(group)
    elif spec.startswith("dihedral:"):
        mats = _dihedral_standard(group, int(spec.split(":")[1]))
    elif spec == "quaternion8":
        mats = _quaternion_standard()
    else:
        raise RepresentationError(f"no two-dimensional irrep shipped for {group.name}")
    return make_representation(group, mats, f"rho2({group.name})")


@dataclass
class RepresentationReport:
    fixed: Subspace
    predicted: Subspace | None
    matches: bool
    angle: float
    residuals: dict = field(default_factory=dict)


def representation_fixed_points(pi: Representation, omega: ComplexMeasure, tol: float = RANK_TOL,
                                angle_tol: float = ANGLE_TOL) -> RepresentationReport:
    """
    Fix pi(omega) against {x : pi(s) x = conj(chi(s)) x for s in G_|omega|}.

    Args:
        pi (Representation): validated unitary representation.
        omega (ComplexMeasure): contractive measure on the same group.
    Returns:
        RepresentationReport: both spaces and their largest principal angle.
    """
    if omega.carrier is not pi.group:
        raise PreconditionError("representation and measure live on different groups")
    operator = pi.integrate(omega)
    eye = np.eye(pi.dim)
    fixed = null_space(operator - eye, tol, np.linalg.norm(operator, 2))
    extracted = extract_character(omega)
    if isinstance(extracted, NoCharacter):
        return RepresentationReport(fixed, None, fixed.dim == 0, 0.0)
    stacked = np.vstack([pi(s) - extracted(s).conjugate() * eye for s in extracted.domain.elements])
    predicted = null_space(stacked, tol)
    if fixed.dim == 0:
        # below norm one nothing is fixed; at norm one every predicted vector is
        return RepresentationReport(fixed, predicted, predicted.dim == 0 or tv_norm(omega) < 1 - tol, 0.0)
    same, angle = subspace_equal(fixed, predicted, angle_tol)
    return RepresentationReport(fixed, predicted, same, angle, {"principal_angle": angle})
