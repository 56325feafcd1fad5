# Convfix Lab
# Fourier transforms over finite abelian groups
# October 2026

import functools

import numpy as np

from src.groups.cayley import GroupTable
from src.groups.characters import DualGroup, dual_group
from src.measures.measure import ComplexMeasure, dense_measure


@functools.lru_cache(maxsize=64)
def dual_of(group: GroupTable) -> DualGroup:
    """dual_group, memoised per table (tables are immutable)."""
    return dual_group(group)


def fourier_transform(mu: ComplexMeasure) -> np.ndarray:
    """mu_hat(x) = sum_s conj(chi_x(s)) mu(s), indexed by the dual table."""
    dual = dual_of(mu.carrier)
    return dual.matrix.conj().T @ mu.coeffs


def inverse_fourier_transform(group: GroupTable, values) -> ComplexMeasure:
    """mu(s) = (1/|G|) sum_x chi_x(s) mu_hat(x)."""
    dual = dual_of(group)
    return dense_measure(group, dual.matrix @ np.asarray(values, dtype=complex) / group.order)


def spectral_coefficients(group: GroupTable, values) -> ComplexMeasure:
    """
    The measure c on the dual table with f(s) = sum_x c(x) chi_x(s).

    sum |c(x)| is the Fourier-Stieltjes norm of f.
    """
    dual = dual_of(group)
    coeffs = dual.matrix.conj().T @ np.asarray(values, dtype=complex) / group.order
    return dense_measure(dual.table, coeffs)


def synthesize(group: GroupTable, spectrum: ComplexMeasure) -> np.ndarray:
    """Inverse of spectral_coefficients: s -> sum_x c(x) chi_x(s)."""
    return dual_of(group).matrix @ spectrum.coeffs
