# Convfix Lab
# Unit measures on abelian groups whose transform reaches 1
# October 2026

from dataclasses import dataclass

import numpy as np

from config.vars import Z_TOL
from src.errors import NonAbelianError, PreconditionError
from src.groups.characters import support_subgroup
from src.measures.measure import ComplexMeasure, polar_phase, support, tv_norm
from src.dual.fourier import dual_of, fourier_transform


@dataclass
class AbelianPropReport:
    """
    z_hat: dual elements x with mu_hat(x) = 1.
    matching: dual elements whose character equals the phase of mu on its support.
    annihilator: characters trivial on G_mu.
    """
    z_hat: tuple[int, ...]
    matching: tuple[int, ...]
    annihilator: tuple[int, ...]
    coset_ok: bool

    @property
    def phase_is_character(self) -> bool:
        return bool(self.matching)

    @property
    def iff_holds(self) -> bool:
        return bool(self.z_hat) == self.phase_is_character

    @property
    def ok(self) -> bool:
        return self.iff_holds and self.z_hat == self.matching and self.coset_ok


def abelian_prop_check(mu: ComplexMeasure, eps: float = Z_TOL) -> AbelianPropReport:
    """
    Compare Z_{mu_hat} with the characters that agree with d mu / d|mu|.

    When Z_{mu_hat} is nonempty it must be the coset chi_0 G_mu^perp, where
    chi_0 is any of its members and G_mu is generated by supp mu.

    Args:
        mu (ComplexMeasure): measure of total variation 1 on an abelian group.
        eps (float): tolerance for mu_hat(x) = 1 and for phase agreement.
    Returns:
        AbelianPropReport
    Raises:
        NonAbelianError: for non-abelian carriers.
        PreconditionError: on Z or when ||mu|| != 1.
    """
    if mu.on_lattice:
        raise PreconditionError("abelian_prop_check works on finite carriers")
    group = mu.carrier
    if not group.abelian:
        raise NonAbelianError(f"{group.name} is not abelian")
    if abs(tv_norm(mu) - 1) > eps:
        raise PreconditionError(f"abelian_prop_check needs ||mu|| = 1, got {tv_norm(mu)}")

    dual = dual_of(group)
    mu_hat = fourier_transform(mu)
    z_hat = tuple(int(x) for x in np.flatnonzero(np.abs(mu_hat - 1) <= eps))

    phase = polar_phase(mu)
    supp = np.array(sorted(phase))
    phases = np.array([phase[g] for g in supp])
    deviation = np.abs(dual.matrix[supp, :] - phases[:, None]).max(axis=0)
    matching = tuple(int(x) for x in np.flatnonzero(deviation <= eps))

    g_mu = np.array(support_subgroup(group, support(mu)).elements)
    annihilator = tuple(int(x) for x in np.flatnonzero(np.abs(dual.matrix[g_mu, :] - 1).max(axis=0) <= eps))

    coset_ok = True
    if z_hat:
        chi0 = z_hat[0]
        coset = tuple(sorted(int(dual.table.mul[chi0, a]) for a in annihilator))
        coset_ok = coset == z_hat
    return AbelianPropReport(z_hat, matching, annihilator, coset_ok)
