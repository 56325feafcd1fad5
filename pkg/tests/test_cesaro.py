# Convfix Lab
# Tests for Cesaro limits
# October 2026

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import PreconditionError
from src.measures.cesaro import ConvergedTo, ConvergedToZero, cesaro_limit, checkpoints
from src.measures.measure import from_atoms, is_state, point_mass
from src.measures.sampling import Profile, random_contractive
from src.app.runner.suites import carrier_for

N_MAX = 64


def test_checkpoints_double_and_end_at_n_max():
    assert checkpoints(1) == [1]
    assert checkpoints(10) == [1, 2, 4, 8, 10]
    assert checkpoints(64) == [1, 2, 4, 8, 16, 32, 64]


def test_shift_averages_to_haar(z4):
    trace = cesaro_limit(point_mass(z4, 1), n_max=N_MAX)
    assert isinstance(trace.verdict, ConvergedTo)
    assert np.allclose(trace.limit.coeffs, 0.25, atol=1e-12)
    assert trace.last_residual < 1e-9
    assert sorted(trace.terms) == checkpoints(N_MAX)


def test_identity_is_its_own_limit(d4):
    trace = cesaro_limit(point_mass(d4, d4.identity), n_max=N_MAX)
    assert isinstance(trace.verdict, ConvergedTo)
    assert trace.limit[d4.identity] == pytest.approx(1)


def test_half_difference_averages_to_zero(z4):
    omega = from_atoms(z4, {1: 0.5, 3: -0.5})
    trace = cesaro_limit(omega, n_max=N_MAX)
    assert isinstance(trace.verdict, ConvergedToZero)
    assert not np.any(trace.limit.coeffs)


def test_strictly_contractive_measure_vanishes(z6):
    trace = cesaro_limit(point_mass(z6, 0, 0.5), n_max=N_MAX)
    assert trace.verdict.kind == "zero"


def test_masses_are_total_variation_on_finite_groups(z4):
    trace = cesaro_limit(point_mass(z4, 1), n_max=8)
    assert [n for n, _ in trace.masses] == [1, 2, 4, 8]
    assert all(mass == pytest.approx(1.0) for _, mass in trace.masses)


def test_preconditions(z4):
    with pytest.raises(PreconditionError):
        cesaro_limit(point_mass(z4, 0, 2.0))
    with pytest.raises(PreconditionError):
        cesaro_limit(point_mass(z4, 0), n_max=0)


def test_long_runs_keep_the_mass_of_a_state(z4):
    omega = from_atoms(z4, {2: 0.3828, 3: 0.6172})
    trace = cesaro_limit(omega, 1e-9, 4096)
    assert isinstance(trace.verdict, ConvergedTo)
    assert np.allclose(trace.limit.coeffs, 0.25, atol=1e-9)
    assert is_state(trace.limit, 1e-9)


@settings(max_examples=40, deadline=None)
@given(spec=st.sampled_from(["cyclic:4", "cyclic:6", "dihedral:4", "quaternion8", "symmetric:3"]),
       seed=st.integers(0, 2**31), density=st.sampled_from([0.25, 0.5, 1.0]))
def test_states_never_average_to_zero(spec, seed, density):
    omega = random_contractive(carrier_for(spec), seed, Profile("probability", density))
    trace = cesaro_limit(omega, 1e-9, 4096)
    assert isinstance(trace.verdict, ConvergedTo)
    assert np.all(np.isfinite(trace.limit.coeffs))
    assert is_state(trace.limit, 1e-8)


def test_two_terms_are_enough_for_an_exact_limit(z4):
    trace = cesaro_limit(point_mass(z4, 1), n_max=2)
    assert isinstance(trace.verdict, ConvergedTo)
    assert np.allclose(trace.limit.coeffs, 0.25, atol=1e-10)
    assert cesaro_limit(point_mass(z4, 0), n_max=1).verdict.kind == "converged"
