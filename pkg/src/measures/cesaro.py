# Convfix Lab
# Cesaro averages of convolution powers and their limits
# October 2026

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from config.vars import CESARO_EPS, MAX_SQUARINGS, N_MAX, SUPPORT_CAP
from src.errors import PreconditionError
from src.measures.measure import (
    ComplexMeasure, convolve, is_idempotent, right_action_matrix, sup_distance, tv_norm, zero_measure,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvergedTo:
    limit: ComplexMeasure
    kind: str = "converged"


@dataclass(frozen=True)
class ConvergedToZero:
    kind: str = "zero"


@dataclass(frozen=True)
class Undecided:
    kind: str = "undecided"


@dataclass
class CesaroTrace:
    """
    Record of a Cesaro run.

    terms holds S_n at the recorded checkpoints. residuals are the sup
    differences between consecutive limit candidates; raw_residuals compare
    the unrefined S_n themselves. masses is tv(S_n) on finite groups and the
    windowed max |S_n| on Z.
    """
    measure: ComplexMeasure
    terms: dict = field(default_factory=dict)
    verdict: ConvergedTo | ConvergedToZero | Undecided = field(default_factory=Undecided)
    residuals: list = field(default_factory=list)
    raw_residuals: list = field(default_factory=list)
    masses: list = field(default_factory=list)

    @property
    def limit(self) -> ComplexMeasure | None:
        if isinstance(self.verdict, ConvergedTo):
            return self.verdict.limit
        if isinstance(self.verdict, ConvergedToZero):
            return zero_measure(self.measure.carrier)
        return None

    @property
    def last_residual(self) -> float:
        return self.residuals[-1][1] if self.residuals else math.inf


def checkpoints(n_max: int) -> list[int]:
    """1, 2, 4, ... up to n_max, with n_max itself always included."""
    points = []
    n = 1
    while n < n_max:
        points.append(n)
        n *= 2
    points.append(n_max)
    return points


def refine_candidate(s_n: ComplexMeasure, eps: float = CESARO_EPS,
                     max_squarings: int = MAX_SQUARINGS) -> ComplexMeasure:
    """
    Square S_n under convolution until it stops moving.

    For n >= 2 every eigenvalue of convolution by S_n other than 1 has
    modulus < 1, so the squares converge to the Cesaro limit. The
    eigenvalue-1 part carries rounding drift that each square doubles, so
    the first square below eps that fails to shrink the change is dropped
    and the one before it returned.
    """
    x = s_n
    floor = eps * 1e-3
    previous = math.inf
    for r in range(max_squarings):
        sq = convolve(x, x)
        change = tv_norm(sq - x)
        if not math.isfinite(change) or (change < eps and change >= previous):
            logger.debug(f"[cesaro] candidate settled after {r} squarings, change {change:.3e}")
            break
        x = sq
        previous = change
        if change <= floor or tv_norm(x) <= floor:
            logger.debug(f"[cesaro] candidate settled after {r + 1} squarings")
            break
    return x


def _finite_run(omega: ComplexMeasure, eps: float, n_max: int, trace: CesaroTrace):
    carrier = omega.carrier
    points = set(checkpoints(n_max))
    right = right_action_matrix(omega)
    power = omega.coeffs.copy()
    total = power.copy()
    prev_raw = prev_candidate = candidate = None
    for k in range(1, n_max + 1):
        if k > 1:
            power = power @ right
            total = total + power
        if k not in points:
            continue
        s_k = ComplexMeasure(carrier, total / k)
        trace.terms[k] = s_k
        trace.masses.append((k, tv_norm(s_k)))
        if prev_raw is not None:
            trace.raw_residuals.append((k, sup_distance(s_k, prev_raw)))
        prev_raw = s_k
        if k >= 2 or n_max == 1:
            candidate = refine_candidate(s_k, eps) if k >= 2 else s_k
            if prev_candidate is not None:
                trace.residuals.append((k, sup_distance(candidate, prev_candidate)))
            prev_candidate = candidate

    if tv_norm(candidate) < eps:
        return ConvergedToZero()
    # a single refined candidate has nothing to compare against
    settled = trace.last_residual < eps or not trace.residuals
    if settled and is_idempotent(candidate, eps):
        return ConvergedTo(candidate)
    return Undecided()


def _windowed(mu: ComplexMeasure, window: int) -> np.ndarray:
    return np.array([mu[m] for m in range(-window, window + 1)], dtype=complex)


def _lattice_run(omega: ComplexMeasure, eps: float, n_max: int, window: int,
                 support_cap: int, trace: CesaroTrace):
    points = set(checkpoints(n_max))
    power = omega
    total = dict(omega.coeffs)
    prev_window = None
    s_k = omega
    for k in range(1, n_max + 1):
        if k > 1:
            power = convolve(power, omega, support_cap)
            for n, c in power.coeffs.items():
                total[n] = total.get(n, 0j) + c
        if k not in points:
            continue
        s_k = ComplexMeasure(omega.carrier, {n: c / k for n, c in total.items() if c != 0})
        trace.terms[k] = s_k
        current = _windowed(s_k, window)
        trace.masses.append((k, float(np.abs(current).max())))
        if prev_window is not None:
            residual = float(np.abs(current - prev_window).max())
            trace.raw_residuals.append((k, residual))
            trace.residuals.append((k, residual))
        prev_window = current

    if trace.masses[-1][1] < eps:
        return ConvergedToZero()
    if trace.last_residual < eps and is_idempotent(s_k, eps):
        return ConvergedTo(s_k)
    return Undecided()


def cesaro_limit(omega: ComplexMeasure, eps: float = CESARO_EPS, n_max: int = N_MAX,
                 window: int | None = None, support_cap: int = SUPPORT_CAP) -> CesaroTrace:
    """
    Run S_n(omega) over doubling checkpoints and classify the limit.

    Args:
        omega (ComplexMeasure): contractive measure.
        eps (float): residual and mass threshold.
        n_max (int): last checkpoint.
        window (int): half-width of the test window on Z; defaults to the carrier's.
        support_cap (int): atom cap for lattice powers.
    Returns:
        CesaroTrace: snapshots, residual history and verdict.
    """
    if n_max < 1:
        raise PreconditionError(f"n_max must be >= 1, got {n_max}")
    norm = tv_norm(omega)
    if norm > 1 + eps:
        raise PreconditionError(f"cesaro_limit needs a contractive measure, tv norm is {norm}")
    trace = CesaroTrace(omega)
    if omega.on_lattice:
        width = omega.carrier.window if window is None else window
        trace.verdict = _lattice_run(omega, eps, n_max, width, support_cap, trace)
    else:
        trace.verdict = _finite_run(omega, eps, n_max, trace)
    logger.debug(f"[cesaro] {omega.carrier.name}: verdict {trace.verdict.kind}, "
                 f"last residual {trace.last_residual:.3e}")
    return trace
