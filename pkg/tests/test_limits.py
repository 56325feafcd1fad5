# Convfix Lab
# Tests for Cesaro projections, equivalent conditions, I_omega and l_p fixed points
# October 2026

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import PreconditionError
from src.groups.subgroups import whole_group
from src.measures.cesaro import Undecided, cesaro_limit
from src.measures.measure import from_atoms, haar_on, parse_measure_literal, point_mass
from src.measures.sampling import Profile, random_contractive
from src.engine.ideals import ideal_I_omega
from src.engine.limits import cesaro_projection_check, iterate_decay, more_equiv_suite
from src.engine.lp import lattice_lp_decay, lp_fixed_points
from src.app.runner.suites import carrier_for

N_MAX = 128
SPECS = ["cyclic:5", "symmetric:3", "dihedral:4", "quaternion8", "product(cyclic:2,cyclic:3)"]


def test_projection_onto_constants(z4):
    report = cesaro_projection_check(point_mass(z4, 1), n_max=N_MAX)
    assert report.ok
    assert report.verdict == "converged"
    assert report.dims == {"fix": 1, "range": 1}
    assert report.residuals["greenleaf_fit"] < 1e-8


def test_projection_with_zero_limit(z4):
    report = cesaro_projection_check(from_atoms(z4, {1: 0.5, 3: -0.5}), n_max=N_MAX)
    assert report.ok
    assert report.verdict == "zero"


def test_projection_needs_a_decided_run(z4):
    trace = cesaro_limit(point_mass(z4, 1), n_max=N_MAX)
    trace.verdict = Undecided()
    with pytest.raises(PreconditionError):
        cesaro_projection_check(point_mass(z4, 1), trace=trace)


def test_iterate_decay(z4):
    assert iterate_decay(point_mass(z4, 1), 8) == pytest.approx(1.0)
    assert iterate_decay(point_mass(z4, 0, 0.5), 3) == pytest.approx(0.125)
    # Cesaro averages vanish here but the powers keep norm one
    assert iterate_decay(from_atoms(z4, {1: 0.5, 3: -0.5}), 64) == pytest.approx(1.0)


@pytest.mark.parametrize("atoms, expected", [
    ({1: 1.0}, True),
    ({0: 0.5, 2: 0.5}, True),
    ({1: 0.5, 3: -0.5}, False),
    ({0: 0.5}, False),
    ({0: 0.5j, 2: 0.5j}, False),
])
def test_equivalent_conditions_agree(z4, atoms, expected):
    report = more_equiv_suite(from_atoms(z4, atoms), n_max=N_MAX)
    assert report.consistent
    assert report.fixed_points == expected


@settings(max_examples=30, deadline=None)
@given(spec=st.sampled_from(SPECS), seed=st.integers(0, 2**31),
       style=st.sampled_from(["real-signed", "complex", "probability"]))
def test_equivalences_on_random_draws(spec, seed, style):
    omega = random_contractive(carrier_for(spec), seed, Profile(style, 0.5))
    assert more_equiv_suite(omega, n_max=N_MAX).consistent


def test_full_support_state_gives_maximal_ideal(d4):
    report = ideal_I_omega(haar_on(whole_group(d4)))
    assert report.ok
    assert report.is_maximal
    assert report.ideal.dim == 7
    assert report.dim_fix == 1


def test_shift_generates_the_augmentation_ideal(z4):
    report = ideal_I_omega(point_mass(z4, 1))
    assert report.ok
    assert report.ideal.dim == 3
    assert report.is_maximal
    assert report.contained_in_l10
    assert ideal_I_omega(haar_on(whole_group(carrier_for("cyclic:2")))).ideal.dim == 1


def test_identity_gives_zero_ideal(z4):
    report = ideal_I_omega(point_mass(z4, 0))
    assert report.ok
    assert report.ideal.dim == 0
    assert report.annihilator.dim == 4
    assert not report.is_maximal


@settings(max_examples=30, deadline=None)
@given(spec=st.sampled_from(SPECS), seed=st.integers(0, 2**31),
       style=st.sampled_from(["real-signed", "complex", "probability"]))
def test_annihilator_of_the_ideal_is_the_fixed_space(spec, seed, style):
    report = ideal_I_omega(random_contractive(carrier_for(spec), seed, Profile(style, 0.75)))
    assert report.ok
    assert report.dims_add_up
    if style == "probability":
        assert report.contained_in_l10


def test_lp_fixed_points_follow_the_character(z6):
    omega = from_atoms(z6, {0: 0.5, 3: -0.5})
    for p in (1.0, 2.0, 3.0):
        report = lp_fixed_points(omega, p)
        assert report.matches
        assert report.fixed.dim == 3
        assert report.predicted.dim == 3


def test_lp_strict_contraction_fixes_nothing(z6):
    report = lp_fixed_points(point_mass(z6, 0, 0.5))
    assert report.fixed.dim == 0
    assert report.predicted.dim == 6
    assert report.matches


def test_lp_without_character(z6):
    report = lp_fixed_points(from_atoms(z6, {1: 0.5, 3: -0.5}))
    assert report.predicted is None
    assert report.matches


def test_lp_preconditions(z6, lattice):
    with pytest.raises(PreconditionError):
        lp_fixed_points(point_mass(z6, 1), p=0.5)
    with pytest.raises(PreconditionError):
        lp_fixed_points(parse_measure_literal("0:1", lattice))


def test_lattice_walk_has_no_harmonic_vectors(lattice):
    walk = parse_measure_literal("-1:0.5, 1:0.5", lattice)
    report = lattice_lp_decay(walk, 2.0, n_max=2048)
    assert report.decays
    assert report.norms_decrease
    assert report.max_pairing < 0.05


def test_lattice_decay_needs_a_probability(lattice):
    with pytest.raises(PreconditionError):
        lattice_lp_decay(parse_measure_literal("-1:0.5, 1:-0.5", lattice))
