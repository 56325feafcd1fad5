# Convfix Lab
# Weak* vanishing of Cesaro sums and convolution powers on Z
# October 2026

import logging
from dataclasses import dataclass, field

from config.vars import CESARO_EPS, DECAY_TOL, N_MAX, SUPPORT_CAP
from src.errors import PreconditionError
from src.measures.cesaro import cesaro_limit
from src.measures.measure import ComplexMeasure, convolution_power, is_state, support

logger = logging.getLogger(__name__)


@dataclass
class LatticeReport:
    """
    compact is the surrogate for "G_omega is compact": on Z that means supp omega is {0}.

    consistent holds when non-compactness, Cesaro decay and power decay all agree.
    """
    compact: bool
    cesaro_max: float
    power_max: float
    cesaro_decays: bool
    power_decays: bool
    samples: dict = field(default_factory=dict)
    residuals: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return (not self.compact) == self.cesaro_decays == self.power_decays


def _window_max(mu: ComplexMeasure, window: int) -> float:
    return max((abs(c) for n, c in mu.atoms() if -window <= n <= window), default=0.0)


def mukherjea_lattice(omega: ComplexMeasure, window: int | None = None, n_max: int = N_MAX,
                      decay_tol: float = DECAY_TOL, eps: float = CESARO_EPS,
                      support_cap: int = SUPPORT_CAP) -> LatticeReport:
    """
    Compare non-compactness of G_omega with windowed decay of S_n and omega^{*n}.

    Args:
        omega (ComplexMeasure): probability measure on Z.
        window (int): half-width of the test window; defaults to the carrier's.
        n_max (int): index at which decay is read.
        decay_tol (float): a windowed maximum below this counts as vanished.
        eps (float): Cesaro residual threshold.
    Returns:
        LatticeReport: the three conditions, samples and residual history.
    Raises:
        SupportCapExceeded: when a power grows past support_cap atoms.
    """
    if not omega.on_lattice:
        raise PreconditionError("mukherjea_lattice needs a measure on Z")
    if not is_state(omega):
        raise PreconditionError("mukherjea_lattice needs a probability measure")
    width = omega.carrier.window if window is None else window
    compact = set(support(omega)) <= {0}

    trace = cesaro_limit(omega, eps, n_max, width, support_cap)
    cesaro_max = trace.masses[-1][1]
    power = convolution_power(omega, n_max, support_cap)
    power_max = _window_max(power, width)

    report = LatticeReport(compact, cesaro_max, power_max,
                           cesaro_max <= decay_tol, power_max <= decay_tol,
                           residuals=list(trace.residuals))
    report.samples["power4_at_0"] = convolution_power(omega, 4, support_cap)[0].real
    report.samples["power_at_0"] = power[0].real
    report.samples["cesaro_at_0"] = trace.terms[n_max][0].real
    logger.debug(f"[lattice] compact={compact} cesaro max {cesaro_max:.4f} power max {power_max:.4f}")
    return report


def binomial_return(n: int) -> float:
    """((delta_-1 + delta_1)/2)^{*2n}(0) = C(2n, n) / 4^n, by the multiplicative recurrence."""
    value = 1.0
    for k in range(1, n + 1):
        value *= (n + k) / (4 * k)
    return value
