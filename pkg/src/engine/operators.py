# Convfix Lab
# Convolution operators L_omega and R_omega as explicit matrices
# October 2026

from dataclasses import dataclass

import numpy as np

from src.errors import PreconditionError
from src.groups.cayley import GroupTable
from src.measures.measure import ComplexMeasure, tv_norm

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """
    Matrix of a convolution operator acting on functions on G.

    Left: (L f)(t) = sum_s omega(s) f(s t).  Right: (R f)(t) = sum_s omega(s) f(t s).
    """
    carrier: GroupTable
    entries: np.ndarray
    convention: str

    def apply(self, f: np.ndarray) -> np.ndarray:
        return self.entries @ np.asarray(f, dtype=complex)

    def sup_norm(self) -> float:
        """Operator norm on l-infinity: the largest absolute row sum."""
        return float(np.abs(self.entries).sum(axis=1).max())

    def __matmul__(self, other: "OperatorMatrix") -> np.ndarray:
        return self.entries @ other.entries


def operator_matrix(omega: ComplexMeasure, convention: str = LEFT) -> OperatorMatrix:
    """
    Build L_omega (or R_omega) on the finite carrier of omega.

    Args:
        omega (ComplexMeasure): inducing measure.
        convention (str): LEFT or RIGHT.
    Returns:
        OperatorMatrix: |G| x |G| matrix with M[t, t'] the weight of f(t') in (M f)(t).
    """
    if omega.on_lattice:
        raise PreconditionError("operator matrices are built on finite carriers only")
    if convention not in (LEFT, RIGHT):
        raise PreconditionError(f"unknown convention {convention!r}")
    group = omega.carrier
    order = group.order
    s, t = np.meshgrid(np.arange(order), np.arange(order), indexing="ij")
    cols = group.mul[s, t] if convention == LEFT else group.mul[t, s]
    entries = np.zeros((order, order), dtype=complex)
    np.add.at(entries, (t.reshape(-1), cols.reshape(-1)), omega.coeffs[s.reshape(-1)])
    return OperatorMatrix(group, entries, convention)


def norm_bound_residual(omega: ComplexMeasure, convention: str = LEFT) -> float:
    """How far the l-infinity operator norm sits above tv(omega); <= 0 when the bound holds."""
    return operator_matrix(omega, convention).sup_norm() - tv_norm(omega)


def commutator_residual(omega: ComplexMeasure, nu: ComplexMeasure) -> float:
    """max |L_omega R_nu - R_nu L_omega|."""
    left = operator_matrix(omega, LEFT)
    right = operator_matrix(nu, RIGHT)
    return float(np.abs(left @ right - right @ left).max())
