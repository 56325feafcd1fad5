# Convfix Lab
# Level sets Z_omega = {omega = 1}, their coset structure and VN(G) fixed spaces
# October 2026

import math
from dataclasses import dataclass, field

import numpy as np

from config.vars import RANK_TOL, Z_TOL
from src.errors import PreconditionError
from src.groups.cayley import GroupTable
from src.groups.subgroups import Subgroup
from src.dual.functions import DualFunction, PositiveDefinite, Unverified, gram_matrix, pointwise_power
from src.engine.subspaces import Subspace, coordinate_span, null_space, subspace_equal

NEAR_MISS = 1e-6


@dataclass
class ZSetReport:
    """
    Z_omega together with its coset decomposition s H when it has one.

    flagged marks inputs whose norm is not certified to be at most 1.
    """
    z_set: tuple[int, ...]
    is_coset: bool
    rep: int | None = None
    subgroup: Subgroup | None = None
    flagged: bool = False
    nondegenerate: bool = False
    identity: int = 0
    near_misses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        coset_ok = self.is_coset or not self.z_set
        if self.nondegenerate:
            return coset_ok and set(self.z_set) <= {self.identity}
        return coset_ok


def ternary_closed(group: GroupTable, elements) -> bool:
    """Closed under (a, b, c) -> a b^-1 c."""
    members = set(elements)
    if not members:
        return True
    idx = np.array(sorted(members))
    mul, inv = group.mul, group.inv
    abc = mul[mul[idx[:, None, None], inv[idx][None, :, None]], idx[None, None, :]]
    return set(abc.reshape(-1).tolist()) <= members


def coset_decomposition(group: GroupTable, elements) -> tuple[bool, int | None, Subgroup | None]:
    """
    Test whether a set is a left coset s H.

    s is the smallest element and H = s^-1 Z; the set is a coset exactly when
    that H is a subgroup.
    """
    members = sorted(set(elements))
    if not members:
        return False, None, None
    rep = members[0]
    shifted = tuple(sorted(int(group.mul[group.inv[rep], z]) for z in members))
    subgroup = Subgroup(group, shifted)
    if not subgroup.is_valid():
        return False, rep, None
    return True, rep, subgroup


def is_nondegenerate_dual(omega: DualFunction, tol: float = RANK_TOL) -> bool:
    """
    Positive definite with no vector killed by every Gram matrix of omega^k, k = 1..|G|.

    The Gram matrices are positive semidefinite, so their common kernel is the
    kernel of their sum.
    """
    if omega.on_lattice or not isinstance(omega.certificate, PositiveDefinite):
        return False
    group = omega.carrier
    total = sum(gram_matrix(group, omega.values ** k) for k in range(1, group.order + 1))
    return null_space(total, tol, np.linalg.norm(total, 2)).dim == 0


def z_set(omega: DualFunction, eps: float = Z_TOL) -> ZSetReport:
    """
    Z_omega = {s : |omega(s) - 1| <= eps} on a finite group.

    Args:
        omega (DualFunction): contractive dual function.
        eps (float): membership tolerance.
    Returns:
        ZSetReport: the set, its coset decomposition, and near misses
            (points with eps < |omega(s) - 1| <= 1e-6).
    """
    if omega.on_lattice:
        raise PreconditionError("z_set works on finite carriers; use lattice_z_set on Z")
    group = omega.carrier
    distance = np.abs(omega.values - 1)
    members = tuple(int(g) for g in np.flatnonzero(distance <= eps))
    misses = {int(g): float(distance[g]) for g in np.flatnonzero((distance > eps) & (distance <= NEAR_MISS))}
    flagged = isinstance(omega.certificate, Unverified) or omega.norm > 1 + eps
    is_coset, rep, subgroup = coset_decomposition(group, members)
    return ZSetReport(members, is_coset, rep, subgroup, flagged, is_nondegenerate_dual(omega),
                      group.identity, misses)


@dataclass
class VNReport:
    """Fix L_omega inside VN(G), in the basis {lambda(g)}."""
    fixed: Subspace
    predicted: Subspace
    matches: bool
    ternary: bool
    z: ZSetReport


def vn_fixed_space(omega: DualFunction, eps: float = Z_TOL) -> VNReport:
    """
    L_omega acts on VN(G) by lambda(g) -> omega(g) lambda(g), so its fixed
    space is spanned by lambda(g) for g in Z_omega. The prediction is
    lambda(s) VN(H) = span{lambda(s h)}.
    """
    z = z_set(omega, eps)
    group = omega.carrier
    fixed = coordinate_span(group.order, z.z_set)
    if z.is_coset:
        predicted = coordinate_span(group.order, {int(group.mul[z.rep, h]) for h in z.subgroup.elements})
    else:
        predicted = coordinate_span(group.order, ())
    same, _ = subspace_equal(fixed, predicted)
    return VNReport(fixed, predicted, same, ternary_closed(group, z.z_set), z)


@dataclass
class LatticeZSetReport:
    """Z_omega on Z inside [-window, window]: empty, a point, or s + dZ."""
    z_set: tuple[int, ...]
    is_coset: bool
    rep: int | None = None
    step: int | None = None

    @property
    def finite(self) -> bool:
        return len(self.z_set) <= 1


def lattice_z_set(omega: DualFunction, window: int | None = None, eps: float = Z_TOL) -> LatticeZSetReport:
    """
    Z_omega for the transform of an atomic toral measure, read on the window.

    A finite coset of Z is a single point, so a finite level set that is
    discrete is either empty or {s}.
    """
    if not omega.on_lattice:
        raise PreconditionError("lattice_z_set needs a dual function on Z")
    width = omega.carrier.window if window is None else window
    grid = np.arange(-width, width + 1)
    values = omega.window_values(width)
    members = tuple(int(n) for n in grid[np.abs(values - 1) <= eps])
    if len(members) <= 1:
        return LatticeZSetReport(members, True, members[0] if members else None, None)
    step = 0
    for m in members[1:]:
        step = math.gcd(step, m - members[0])
    rep = members[0] % step
    expected = tuple(int(n) for n in grid if (n - rep) % step == 0)
    return LatticeZSetReport(members, members == expected, rep, step)


def power_z_sets(omega: DualFunction, k: int, eps: float = Z_TOL) -> list[ZSetReport]:
    """Z sets of omega, omega^2, ..., omega^k; they grow with k."""
    return [z_set(pointwise_power(omega, j), eps) for j in range(1, k + 1)]
