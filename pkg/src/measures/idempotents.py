# Convfix Lab
# Classification of contractive idempotent measures as chi . m_H
# October 2026

from dataclasses import dataclass

from config.vars import IDEM_TOL
from src.errors import PreconditionError
from src.groups.characters import CharacterMap, Conflict, extend_character
from src.groups.subgroups import Subgroup, subgroup_closure
from src.measures.measure import (
    ComplexMeasure, character_twist, convolve, polar_phase, sup_distance, tv_norm,
)


@dataclass(frozen=True)
class Greenleaf:
    subgroup: Subgroup
    character: CharacterMap
    kind: str = "greenleaf"


@dataclass(frozen=True)
class NotGreenleafForm:
    reason: str
    kind: str = "not_greenleaf"


@dataclass(frozen=True)
class NotIdempotent:
    residual: float
    kind: str = "not_idempotent"


def classify_idempotent(omega: ComplexMeasure, eps: float = IDEM_TOL):
    """
    Write a contractive idempotent as chi . m_H.

    H is the subgroup generated by the support and chi is read off the
    phases with extend_character. NotGreenleafForm means the idempotence
    test passed but no (H, chi) fits within eps.

    Returns:
        Greenleaf | NotGreenleafForm | NotIdempotent
    """
    if omega.on_lattice:
        raise PreconditionError("classify_idempotent needs a finite carrier")
    residual = tv_norm(convolve(omega, omega) - omega)
    if residual > eps:
        return NotIdempotent(residual)

    group = omega.carrier
    phases = {g: z for g, z in polar_phase(omega).items() if abs(omega[g]) > eps}
    if not phases:
        return NotGreenleafForm("the zero measure is idempotent but has no Haar part")
    subgroup = subgroup_closure(group, phases)
    if len(phases) != subgroup.order:
        return NotGreenleafForm(f"support has {len(phases)} points, generated subgroup has {subgroup.order}")
    character = extend_character(group, list(phases), phases, tol=max(eps, 1e-9))
    if isinstance(character, Conflict):
        return NotGreenleafForm(f"phases admit no character: {character.describe(group)}")
    fit = sup_distance(omega, character_twist(character, subgroup))
    if fit > eps:
        return NotGreenleafForm(f"chi . m_H misses omega by {fit:.3e}")
    return Greenleaf(subgroup, character)
