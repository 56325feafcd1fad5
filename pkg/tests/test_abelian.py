# Convfix Lab
# Tests for measures on abelian groups whose transform reaches 1
# October 2026

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import NonAbelianError, PreconditionError
from src.groups.subgroups import whole_group
from src.measures.measure import from_atoms, haar_on, point_mass
from src.dual.abelian import abelian_prop_check
from src.dual.fourier import dual_of
from src.app.runner.suites import carrier_for, plan_profile, profile_from_plan
from src.measures.sampling import random_contractive


def _is_trivial(group, x) -> bool:
    return bool(np.allclose(dual_of(group).matrix[:, x], 1))


def test_shift_pairs_with_the_trivial_character(z4):
    report = abelian_prop_check(point_mass(z4, 1))
    assert len(report.z_hat) == 1
    assert _is_trivial(z4, report.z_hat[0])
    assert report.matching == report.z_hat
    assert report.annihilator == report.z_hat
    assert report.ok


def test_phase_that_is_no_character(z4):
    report = abelian_prop_check(from_atoms(z4, {1: 0.5, 3: -0.5}))
    assert report.z_hat == ()
    assert report.matching == ()
    assert report.iff_holds
    assert report.ok


def test_haar_measure(z4):
    report = abelian_prop_check(haar_on(whole_group(z4)))
    assert len(report.z_hat) == 1
    assert report.annihilator == report.z_hat
    assert report.ok


def test_rotation_by_two_hits_a_coset(z4):
    report = abelian_prop_check(point_mass(z4, 2))
    assert len(report.z_hat) == 2
    assert report.z_hat == report.annihilator
    assert report.coset_ok
    assert report.ok


def test_twisted_point_mass(z4):
    report = abelian_prop_check(point_mass(z4, 1, 1j))
    (x,) = report.z_hat
    assert dual_of(z4).pairing(1, x) == pytest.approx(1j)
    assert report.ok


def test_preconditions(z4, s3, lattice):
    with pytest.raises(NonAbelianError):
        abelian_prop_check(point_mass(s3, 0))
    with pytest.raises(PreconditionError):
        abelian_prop_check(point_mass(z4, 0, 0.5))
    with pytest.raises(PreconditionError):
        abelian_prop_check(point_mass(lattice, 0))


@settings(max_examples=80, deadline=None)
@given(n=st.integers(1, 12), seed=st.integers(0, 2**31), draw=st.integers(0, 3))
def test_random_unit_measures_on_cyclic_groups(n, seed, draw):
    group = carrier_for(f"cyclic:{n}")
    mu = random_contractive(group, seed, profile_from_plan(group, plan_profile(group, seed, draw)))
    assert abelian_prop_check(mu).ok
