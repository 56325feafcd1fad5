# Convfix Lab
# Character factorization of fixed spaces and coset-twisted predictions
# October 2026

import logging
from dataclasses import dataclass, field

import numpy as np

from config.vars import ANGLE_TOL, RANK_TOL
from src.errors import PreconditionError
from src.groups.cayley import GroupTable
from src.groups.characters import CharacterMap, Conflict, extend_character
from src.groups.subgroups import Subgroup, right_cosets
from src.measures.measure import ComplexMeasure, absolute_value, adaptedness, polar_phase, tv_norm
from src.engine.subspaces import Subspace, fixed_subspace, subspace_equal, twist

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoCharacter:
    """The phases of omega are not the restriction of any character."""
    conflict: Conflict


def extract_character(omega: ComplexMeasure) -> CharacterMap | NoCharacter:
    """
    Find chi on the subgroup generated by supp |omega| with omega = chi |omega|.

    The phase of omega is read on its support and handed to extend_character.
    """
    if omega.on_lattice:
        raise PreconditionError("extract_character needs a finite carrier")
    phases = polar_phase(omega)
    if not phases:
        raise PreconditionError("extract_character needs a nonzero measure")
    result = extend_character(omega.carrier, list(phases), phases)
    if isinstance(result, Conflict):
        return NoCharacter(result)
    return result


def factorization_residual(omega: ComplexMeasure, character: CharacterMap) -> float:
    """max_g |omega(g) - chi(g) |omega(g)||."""
    return max(abs(c - character(g) * abs(c)) for g, c in omega.atoms())


def coset_extension(group: GroupTable, character: CharacterMap, pick=min) -> np.ndarray:
    """
    A function u on G with u(h t) = conj(chi(h)) u(t) for h in H.

    Each right coset Ht gets u = 1 at the representative chosen by pick, so
    different picks give different (equally valid) extensions.
    """
    subgroup = character.domain
    u = np.zeros(group.order, dtype=complex)
    for block in right_cosets(group, subgroup):
        rep = pick(block)
        rep_inv = int(group.inv[rep])
        for x in block:
            u[x] = character(int(group.mul[x, rep_inv])).conjugate()
    return u


def predicted_fixed_space(group: GroupTable, subgroup: Subgroup, character: CharacterMap) -> Subspace:
    """
    The space {f : f(s t) = conj(chi(s)) f(t), s in H, t in G}.

    One free value per right coset Ht, so the dimension is |G|/|H|.
    """
    if character.domain.elements != subgroup.elements:
        raise PreconditionError("character must be defined on the given subgroup")
    u = coset_extension(group, character)
    blocks = right_cosets(group, subgroup)
    basis = np.zeros((group.order, len(blocks)), dtype=complex)
    scale = 1 / np.sqrt(subgroup.order)
    for j, block in enumerate(blocks):
        basis[list(block), j] = u[list(block)] * scale
    return Subspace(basis)


@dataclass
class FixedPointReport:
    """
    Outcome of comparing Fix L_omega with its character-twisted predictions.

    A character must be present whenever dim_fix > 0; structural_match means
    every asserted subspace equality held within the angle tolerance.
    """
    dim_fix: int
    character: CharacterMap | None = None
    conflict: Conflict | None = None
    factorization_ok: bool = True
    structural_match: bool = True
    residuals: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if self.dim_fix == 0:
            return self.factorization_ok
        return self.character is not None and self.factorization_ok and self.structural_match


def theorem_61_verify(omega: ComplexMeasure, tol: float = RANK_TOL, angle_tol: float = ANGLE_TOL,
                      factor_tol: float = 1e-10) -> FixedPointReport:
    """
    Check Fix L_omega against the character factorization omega = chi |omega|.

    When Fix L_omega is nonzero: chi must exist, Fix L_omega must equal
    Fix L_|omega| twisted by the coset extension of conj(chi), and it must equal
    the predicted coset space for (G_|omega|, chi). On a finite group every
    bounded function is weakly almost periodic, so the last equality is
    asserted for all groups.

    Args:
        omega (ComplexMeasure): contractive measure on a finite group.
        tol (float): rank threshold for kernels.
        angle_tol (float): principal-angle tolerance.
        factor_tol (float): tolerance on |omega - chi |omega||.
    Returns:
        FixedPointReport: dims, character, residuals and flags.
    """
    norm = tv_norm(omega)
    if norm > 1 + tol:
        raise PreconditionError(f"theorem_61_verify needs a contractive measure, tv norm is {norm}")
    group = omega.carrier
    fix = fixed_subspace(omega, tol)
    report = FixedPointReport(dim_fix=fix.dim)
    report.dims["fix"] = fix.dim

    extracted = extract_character(omega)
    if isinstance(extracted, NoCharacter):
        report.conflict = extracted.conflict
        # no character forces Fix L_omega = {0}
        report.factorization_ok = fix.dim == 0
        report.structural_match = fix.dim == 0
        return report

    report.character = extracted
    residual = factorization_residual(omega, extracted)
    report.residuals["factorization"] = residual
    report.factorization_ok = residual <= factor_tol
    if fix.dim == 0:
        return report

    fix_abs = fixed_subspace(absolute_value(omega), tol)
    report.dims["fix_abs"] = fix_abs.dim
    transported = twist(fix_abs, coset_extension(group, extracted))
    same, angle = subspace_equal(fix, transported, angle_tol)
    report.residuals["transport_angle"] = angle

    predicted = predicted_fixed_space(group, extracted.domain, extracted)
    report.dims["predicted"] = predicted.dim
    match, pred_angle = subspace_equal(fix, predicted, angle_tol)
    report.residuals["predicted_angle"] = pred_angle
    report.structural_match = same and match
    logger.debug(f"[engine] {group.name}: dim fix {fix.dim}, transport angle {angle:.2e}, "
                 f"predicted angle {pred_angle:.2e}")
    return report


@dataclass(frozen=True)
class NondegenerateReport:
    adapted: bool
    dim_fix: int
    ok: bool
    angle: float


def nondegenerate_corollary_check(omega: ComplexMeasure, tol: float = RANK_TOL,
                                  angle_tol: float = ANGLE_TOL) -> NondegenerateReport:
    """For adapted omega, Fix L_omega is {0} or C conj(chi)."""
    info = adaptedness(omega)
    fix = fixed_subspace(omega, tol)
    if not info.adapted:
        return NondegenerateReport(False, fix.dim, True, 0.0)
    if fix.dim == 0:
        return NondegenerateReport(True, 0, True, 0.0)
    extracted = extract_character(omega)
    if isinstance(extracted, NoCharacter) or fix.dim != 1:
        return NondegenerateReport(True, fix.dim, False, float(np.pi / 2))
    line = Subspace(extracted.as_array().conj()[:, None] / np.sqrt(omega.carrier.order))
    same, angle = subspace_equal(fix, line, angle_tol)
    return NondegenerateReport(True, fix.dim, same, angle)
