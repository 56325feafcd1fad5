# Convfix Lab
# Cesaro limits as projections and the equivalent forms of having fixed points
# October 2026

import logging
from dataclasses import dataclass, field

import numpy as np

from config.vars import ANGLE_TOL, CESARO_EPS, N_MAX, RANK_TOL
from src.errors import PreconditionError
from src.measures.cesaro import CesaroTrace, ConvergedTo, ConvergedToZero, cesaro_limit
from src.measures.measure import (
    ComplexMeasure, character_twist, convolution_power, convolve, is_idempotent, right_action_matrix, tv_norm,
)
from src.engine.operators import LEFT, operator_matrix
from src.engine.structure import NoCharacter, extract_character
from src.engine.subspaces import fixed_subspace, null_space, span, subspace_equal

logger = logging.getLogger(__name__)


@dataclass
class ProjectionReport:
    verdict: str
    ok: bool
    residuals: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)


def cesaro_projection_check(omega: ComplexMeasure, tol: float = RANK_TOL, trace: CesaroTrace | None = None,
                            eps: float = CESARO_EPS, n_max: int = N_MAX,
                            angle_tol: float = ANGLE_TOL) -> ProjectionReport:
    """
    Check that L of the Cesaro limit projects onto Fix L_omega.

    For a nonzero limit: L_limit is idempotent, its range and its own fixed
    space both equal Fix L_omega, the limit absorbs omega on both sides, and
    when omega has a character the limit is chi . m_{G_|omega|}. For a zero
    limit, Fix L_omega must be {0}.

    Raises:
        PreconditionError: if the Cesaro run is undecided.
    """
    if trace is None:
        trace = cesaro_limit(omega, eps, n_max)
    verdict = trace.verdict
    fix = fixed_subspace(omega, tol)
    report = ProjectionReport(verdict.kind, True, dims={"fix": fix.dim})

    if isinstance(verdict, ConvergedToZero):
        report.ok = fix.dim == 0
        return report
    if not isinstance(verdict, ConvergedTo):
        raise PreconditionError("cesaro_projection_check needs a decided Cesaro run")

    limit = verdict.limit
    op = operator_matrix(limit, LEFT).entries
    report.residuals["projection"] = float(np.linalg.norm(op @ op - op, 2))
    same_range, range_angle = subspace_equal(span(op, tol), fix, angle_tol)
    same_fix, fix_angle = subspace_equal(fixed_subspace(limit, tol), fix, angle_tol)
    report.residuals["range_angle"] = range_angle
    report.residuals["limit_fix_angle"] = fix_angle
    report.residuals["absorb_left"] = tv_norm(convolve(omega, limit) - limit)
    report.residuals["absorb_right"] = tv_norm(convolve(limit, omega) - limit)
    report.residuals["idempotent"] = tv_norm(convolve(limit, limit) - limit)

    bound = 10 * max(tol, eps)
    report.ok = (same_range and same_fix
                 and report.residuals["projection"] <= bound
                 and max(report.residuals["absorb_left"], report.residuals["absorb_right"],
                         report.residuals["idempotent"]) <= bound)

    extracted = extract_character(omega)
    if fix.dim > 0 and not isinstance(extracted, NoCharacter):
        fit = tv_norm(limit - character_twist(extracted, extracted.domain))
        report.residuals["greenleaf_fit"] = fit
        report.ok = report.ok and fit <= 1e-8
    report.dims["range"] = span(op, tol).dim
    return report


def iterate_decay(omega: ComplexMeasure, n: int) -> float:
    """tv(omega^{*n}) on a finite group."""
    return tv_norm(convolution_power(omega, n))


@dataclass
class EquivalenceReport:
    """Boolean forms of 'omega has fixed points'; they must all agree."""
    cesaro_nonzero: bool
    idempotent_limit: bool
    fixed_points: bool
    left_fixed_measure: bool
    dims: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)

    @property
    def flags(self) -> dict:
        return {
            "cesaro_nonzero": self.cesaro_nonzero,
            "idempotent_limit": self.idempotent_limit,
            "fixed_points": self.fixed_points,
            "left_fixed_measure": self.left_fixed_measure,
        }

    @property
    def consistent(self) -> bool:
        return len(set(self.flags.values())) == 1


def more_equiv_suite(omega: ComplexMeasure, tol: float = RANK_TOL, eps: float = CESARO_EPS,
                     n_max: int = N_MAX, trace: CesaroTrace | None = None) -> EquivalenceReport:
    """
    Evaluate the equivalent conditions on a finite group.

    cesaro_nonzero: S_n(omega) does not tend to 0.
    idempotent_limit: the limit is a nonzero idempotent.
    fixed_points: Fix L_omega != {0} (on finite groups the bounded, uniformly
        continuous and C_0 versions coincide).
    left_fixed_measure: some tau != 0 has tau * omega = tau.
    The support-idempotent condition on the positive part follows from the
    second one and is not evaluated separately.
    """
    norm = tv_norm(omega)
    if norm > 1 + tol:
        raise PreconditionError(f"more_equiv_suite needs a contractive measure, tv norm is {norm}")
    if trace is None:
        trace = cesaro_limit(omega, eps, n_max)
    limit = trace.limit
    nonzero = isinstance(trace.verdict, ConvergedTo) and tv_norm(trace.verdict.limit) >= eps
    idem = nonzero and is_idempotent(limit, 10 * eps)
    fix = fixed_subspace(omega, tol)
    right = right_action_matrix(omega)
    tau_space = null_space(right.T - np.eye(right.shape[0]), tol, np.linalg.norm(right, 2))

    report = EquivalenceReport(nonzero, idem, fix.dim > 0, tau_space.dim > 0,
                               dims={"fix": fix.dim, "left_fixed": tau_space.dim})
    report.residuals["iterate_tv"] = iterate_decay(omega, n_max)
    report.residuals["cesaro_residual"] = trace.last_residual
    logger.debug(f"[engine] equivalences on {omega.carrier.name}: {report.flags}")
    return report
