# Convfix Lab
# omega-harmonic vectors in l_p, finite and lattice cases
# October 2026

import logging
from dataclasses import dataclass, field

import numpy as np

from config.vars import ANGLE_TOL, DECAY_TOL, N_MAX, RANK_TOL, SUPPORT_CAP
from src.errors import PreconditionError
from src.groups.cayley import GroupTable
from src.measures.cesaro import cesaro_limit
from src.measures.measure import ComplexMeasure, character_twist, is_state, tv_norm
from src.engine.structure import NoCharacter, extract_character
from src.engine.subspaces import Subspace, fixed_subspace, span, subspace_equal

logger = logging.getLogger(__name__)


def left_regular_operator(nu: ComplexMeasure) -> np.ndarray:
    """lambda(nu) = sum_s nu(s) lambda(s) with (lambda(s) f)(t) = f(s^-1 t)."""
    group: GroupTable = nu.carrier
    order = group.order
    out = np.zeros((order, order), dtype=complex)
    for s, c in nu.atoms():
        out[np.arange(order), group.mul[group.inv[s], np.arange(order)]] += c
    return out


@dataclass
class LpReport:
    p: float
    fixed: Subspace
    predicted: Subspace | None
    matches: bool
    angle: float


def lp_fixed_points(omega: ComplexMeasure, p: float = 2.0, tol: float = RANK_TOL,
                    angle_tol: float = ANGLE_TOL) -> LpReport:
    """
    H^p_omega on a finite group, compared with the range of lambda_p(conj(chi) m_H).

    All l_p spaces coincide as sets on a finite group, so p only labels the
    report. H is the subgroup generated by supp |omega|.
    """
    if p < 1:
        raise PreconditionError(f"p must be >= 1, got {p}")
    if omega.on_lattice:
        raise PreconditionError("lp_fixed_points works on finite carriers; use lattice_lp_decay on Z")
    fixed = fixed_subspace(omega, tol)
    extracted = extract_character(omega)
    if isinstance(extracted, NoCharacter):
        return LpReport(p, fixed, None, fixed.dim == 0, 0.0)
    projection = character_twist(extracted.conj(), extracted.domain)
    predicted = span(left_regular_operator(projection), tol)
    if fixed.dim == 0:
        # a character exists, so only a strict contraction may fix nothing
        return LpReport(p, fixed, predicted, tv_norm(omega) < 1 - tol, 0.0)
    same, angle = subspace_equal(fixed, predicted, angle_tol)
    return LpReport(p, fixed, predicted, same, angle)


@dataclass
class LatticeDecayReport:
    p: float
    max_pairing: float
    lp_norms: list = field(default_factory=list)
    decays: bool = False
    norms_decrease: bool = True


def lattice_lp_decay(omega: ComplexMeasure, p: float = 2.0, window: int | None = None,
                     n_max: int = N_MAX, decay_tol: float = DECAY_TOL,
                     support_cap: int = SUPPORT_CAP) -> LatticeDecayReport:
    """
    Windowed shadow of H^p_omega = {0} for a probability on Z.

    The averages S_n(omega) applied to delta_0 are the candidates for a fixed
    vector. Their pairings with every delta_m in the window must fall below
    decay_tol by n_max; for p > 1 their l_p norms must also shrink.
    """
    if not omega.on_lattice:
        raise PreconditionError("lattice_lp_decay needs a measure on Z")
    if not is_state(omega):
        raise PreconditionError("lattice_lp_decay needs a probability measure")
    trace = cesaro_limit(omega, n_max=n_max, window=window, support_cap=support_cap)
    report = LatticeDecayReport(p, trace.masses[-1][1])
    for n, term in sorted(trace.terms.items()):
        values = np.abs(np.array([c for _, c in term.atoms()]))
        report.lp_norms.append((n, float(np.sum(values ** p) ** (1 / p))))
    report.decays = report.max_pairing <= decay_tol
    if p > 1 and len(report.lp_norms) >= 2:
        report.norms_decrease = report.lp_norms[-1][1] < report.lp_norms[-2][1]
    logger.debug(f"[lp] windowed max pairing {report.max_pairing:.4f} at n = {n_max}")
    return report

