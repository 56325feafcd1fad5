# Convfix Lab
# The right ideal I_omega and its annihilator
# October 2026

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from config.vars import ANGLE_TOL, RANK_TOL
from src.errors import PreconditionError
from src.measures.measure import ComplexMeasure, is_state
from src.engine.operators import LEFT, operator_matrix
from src.engine.subspaces import Subspace, fixed_subspace, subspace_equal


@dataclass
class IdealReport:
    """
    I_omega = span{delta_g - omega * delta_g} inside l^1(G) = C^G.

    annihilator is taken for the bilinear pairing <f, nu> = sum f(x) nu(x).
    """
    ideal: Subspace
    annihilator: Subspace
    dim_fix: int
    annihilator_matches_fix: bool
    angle: float
    is_state: bool
    l10_residual: float | None = None
    residuals: dict = field(default_factory=dict)

    @property
    def dims_add_up(self) -> bool:
        return self.ideal.dim + self.annihilator.dim == self.ideal.ambient

    @property
    def contained_in_l10(self) -> bool | None:
        if self.l10_residual is None:
            return None
        return self.l10_residual <= 1e-12

    @property
    def is_maximal(self) -> bool:
        """I_omega is all of l^1_0, the mean-zero functions."""
        return bool(self.contained_in_l10) and self.ideal.dim == self.ideal.ambient - 1

    @property
    def ok(self) -> bool:
        return self.dims_add_up and self.annihilator_matches_fix and self.contained_in_l10 is not False


def ideal_I_omega(omega: ComplexMeasure, tol: float = RANK_TOL, angle_tol: float = ANGLE_TOL) -> IdealReport:
    """
    Build I_omega and compare its annihilator with Fix L_omega.

    The columns delta_g - omega * delta_g form the matrix I - L^T. One SVD
    gives both the ideal (leading left singular vectors) and its annihilator
    (conjugates of the trailing ones), so the dimensions add up to |G|.
    """
    if omega.on_lattice:
        raise PreconditionError("ideal_I_omega needs a finite carrier")
    entries = operator_matrix(omega, LEFT).entries
    order = entries.shape[0]
    generators = np.eye(order) - entries.T
    u, s, _ = scipy.linalg.svd(generators)
    rank = int(np.sum(s > tol * max(1.0, float(np.linalg.norm(entries, 2)))))
    ideal = Subspace(u[:, :rank], tol)
    annihilator = Subspace(u[:, rank:].conj(), tol)

    fix = fixed_subspace(omega, tol)
    same, angle = subspace_equal(annihilator, fix, angle_tol)
    state = is_state(omega)
    report = IdealReport(ideal, annihilator, fix.dim, same, angle, state)
    if state:
        # mean-zero test on the orthonormal basis
        report.l10_residual = float(np.abs(ideal.basis.sum(axis=0)).max(initial=0.0))
    report.residuals["principal_angle"] = angle
    return report
