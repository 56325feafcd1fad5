# Convfix Lab
# Cesaro pairings of dual functions against finitely supported test functions
# October 2026

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from config.vars import MUKHERJEA_DECAY, N_MAX, Z_TOL
from src.errors import PreconditionError
from src.groups.cayley import LatticeGroup
from src.dual.functions import DualFunction, make_dual, toral_measure

logger = logging.getLogger(__name__)

CLOSED_FORM_TOL = 1e-10
NEAR_ONE = 1e-6


def golden_angle() -> float:
    """2 pi (phi - 1): a rotation whose orbit never closes up at any small n."""
    return 2 * math.pi * ((1 + math.sqrt(5)) / 2 - 1)


def rotation_dual(theta: float, c: complex = 1, window: int | None = None) -> DualFunction:
    """n -> c e^{i n theta} on Z, the transform of c delta_theta."""
    carrier = LatticeGroup() if window is None else LatticeGroup(window)
    return make_dual(carrier, toral_measure([(c, theta)]))


def _geometric_mean(z: complex, n: int) -> complex:
    """(1/n) sum_{k=1..n} z^k, in closed form away from z = 1."""
    if abs(1 - z) <= NEAR_ONE:
        return complex(np.mean(z ** np.arange(1, n + 1)))
    return z * (1 - z ** n) / (n * (1 - z))


@dataclass
class Pairing:
    """Pairings of one test function f with S_n(omega) and omega^n."""
    name: str
    cesaro: complex
    closed_form: complex
    power: complex
    predicted: complex
    bound: float

    @property
    def closed_form_error(self) -> float:
        return abs(self.cesaro - self.closed_form)


@dataclass
class MukherjeaDualReport:
    """
    z_nonempty is the level-set side of the equivalence; all_vanish is the
    pairing side. consistent holds when every Cesaro pairing sits within
    decay_tol of its predicted limit sum_{m in Z} f(m).
    """
    z_set: tuple[int, ...]
    n: int
    decay_tol: float
    pairings: list[Pairing] = field(default_factory=list)

    @property
    def z_nonempty(self) -> bool:
        return bool(self.z_set)

    @property
    def all_vanish(self) -> bool:
        return all(abs(p.cesaro) <= self.decay_tol for p in self.pairings)

    @property
    def closed_form_ok(self) -> bool:
        return all(p.closed_form_error <= CLOSED_FORM_TOL for p in self.pairings)

    @property
    def bound_ok(self) -> bool:
        return all(abs(p.cesaro) <= p.bound + CLOSED_FORM_TOL for p in self.pairings)

    @property
    def consistent(self) -> bool:
        return all(abs(p.cesaro - p.predicted) <= self.decay_tol for p in self.pairings)

    @property
    def ok(self) -> bool:
        return self.closed_form_ok and self.bound_ok and self.consistent


def default_test_functions(omega: DualFunction, radius: int = 2) -> dict:
    """delta_h for every h of a finite carrier; delta_m for |m| <= radius on Z."""
    points = range(-radius, radius + 1) if omega.on_lattice else range(omega.carrier.order)
    return {f"delta_{m}": {m: 1.0} for m in points}


def mukherjea_dual(omega: DualFunction, test_fns: dict | None = None, n_max: int = N_MAX,
                   decay_tol: float = MUKHERJEA_DECAY, eps: float = Z_TOL) -> MukherjeaDualReport:
    """
    Pair S_n(omega) = (1/n) sum_k omega^k and omega^n with test functions.

    Convolution on the dual side is pointwise multiplication, so each pairing
    is sum_m f(m) times a geometric mean in omega(m). Both the direct sum and
    its closed form are computed.

    Args:
        omega (DualFunction): dual function of norm 1.
        test_fns (dict): name -> {point: value}; defaults to point masses.
        n_max (int): Cesaro index.
        decay_tol (float): pairings at most this large count as vanished.
        eps (float): Z_omega membership tolerance.
    Returns:
        MukherjeaDualReport: per-function pairings with the Z_omega prediction.
    Raises:
        PreconditionError: if the norm is not certified to equal 1.
    """
    norm = omega.norm
    if norm is None or abs(norm - 1) > eps:
        raise PreconditionError(f"mukherjea_dual needs a certified norm of 1, got {norm}")
    test_fns = default_test_functions(omega) if test_fns is None else test_fns
    ks = np.arange(1, n_max + 1)
    z_points: set[int] = set()
    report = MukherjeaDualReport((), n_max, decay_tol)

    for name, f in test_fns.items():
        cesaro = closed = power = predicted = 0j
        bound = 0.0
        for m, weight in f.items():
            z = omega(m)
            cesaro += weight * np.mean(z ** ks)
            closed += weight * _geometric_mean(z, n_max)
            power += weight * z ** n_max
            if abs(z - 1) <= eps:
                z_points.add(int(m))
                predicted += weight
                bound += abs(weight)
            else:
                # |z (1 - z^n)| <= 2 whenever |z| <= 1
                bound += abs(weight) * 2 / (n_max * abs(1 - z))
        report.pairings.append(Pairing(name, complex(cesaro), complex(closed), complex(power),
                                       complex(predicted), bound))

    report.z_set = tuple(sorted(z_points))
    logger.debug(f"[mukherjea] Z on tested points {report.z_set}, all vanish {report.all_vanish}")
    return report
