# Convfix Lab
# Tests for character factorization of fixed spaces and representation fixed vectors
# October 2026

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import PreconditionError, RepresentationError
from src.groups.characters import characters_of
from src.groups.subgroups import subgroup_closure, whole_group
from src.measures.measure import from_atoms, haar_on, point_mass
from src.measures.sampling import Profile, random_contractive
from src.engine.representations import (
    make_representation, regular_representation, representation_fixed_points, standard_irrep,
    trivial_representation,
)
from src.engine.ideals import ideal_I_omega
from src.engine.structure import NoCharacter, extract_character, nondegenerate_corollary_check, theorem_61_verify
from src.app.runner.suites import carrier_for

SPECS = ["cyclic:6", "cyclic:8", "symmetric:3", "dihedral:4", "quaternion8", "product(cyclic:2,cyclic:4)"]


def test_signed_pair_has_three_dimensional_fix(z6):
    report = theorem_61_verify(from_atoms(z6, {0: 0.5, 3: -0.5}))
    assert report.ok
    assert report.dim_fix == 3
    assert report.character.domain.elements == (0, 3)
    assert report.character(3) == -1
    assert report.dims["predicted"] == 3
    assert report.residuals["predicted_angle"] < 1e-8


def test_rotation_by_two_on_z6(z6):
    report = theorem_61_verify(point_mass(z6, 2))
    assert report.ok
    assert report.dim_fix == 2
    assert report.character.is_trivial()
    assert report.character.domain.elements == (0, 2, 4)


def test_conflicting_phases_leave_nothing_fixed(z6):
    omega = from_atoms(z6, {1: 0.5, 3: -0.5})
    report = theorem_61_verify(omega)
    assert report.ok
    assert report.dim_fix == 0
    assert report.character is None
    assert report.conflict.describe(z6) == "χ(3) = -1 ≠ χ(1)³ = 1"
    assert isinstance(extract_character(omega), NoCharacter)


def test_strict_contraction_fixes_nothing(z6):
    report = theorem_61_verify(point_mass(z6, 0, 0.5))
    assert report.ok
    assert report.dim_fix == 0


def test_non_contractive_input_is_rejected(z6):
    with pytest.raises(PreconditionError):
        theorem_61_verify(point_mass(z6, 1, 1.5))


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(SPECS), pick=st.integers(0, 1000), which=st.integers(0, 1000),
       seed=st.integers(0, 2**31), density=st.sampled_from([0.5, 1.0]))
def test_character_twisted_measures_match_their_prediction(spec, pick, which, seed, density):
    group = carrier_for(spec)
    h = subgroup_closure(group, [pick % group.order])
    chars = characters_of(h)
    chi = chars[which % len(chars)]
    omega = random_contractive(group, seed, Profile("character-twisted", density, h, chi))
    report = theorem_61_verify(omega)
    assert report.ok
    assert report.dim_fix == group.order // report.character.domain.order


def test_adapted_measure_fixes_a_line(z4):
    report = nondegenerate_corollary_check(point_mass(z4, 1))
    assert report.adapted and report.ok
    assert report.dim_fix == 1


def test_non_adapted_measure_is_skipped(z4):
    report = nondegenerate_corollary_check(point_mass(z4, 2))
    assert not report.adapted
    assert report.ok


def test_regular_representation_fixes_functions(s3):
    pi = regular_representation(s3)
    assert pi.dim == 6
    assert representation_fixed_points(pi, haar_on(whole_group(s3))).fixed.dim == 1
    identity = representation_fixed_points(pi, point_mass(s3, s3.identity))
    assert identity.fixed.dim == 6 and identity.matches


@pytest.mark.parametrize("spec", ["symmetric:3", "dihedral:4", "dihedral:5", "quaternion8"])
def test_standard_irrep_has_no_invariant_vectors(spec):
    group = carrier_for(spec)
    rho = standard_irrep(group)
    assert rho.dim == 2
    report = representation_fixed_points(rho, haar_on(whole_group(group)))
    assert report.fixed.dim == 0
    assert report.matches


def test_standard_irrep_on_a_subgroup(d4):
    # reflections fix a line each
    rho = standard_irrep(d4)
    reflection = point_mass(d4, 4)
    report = representation_fixed_points(rho, reflection)
    assert report.fixed.dim == 1
    assert report.matches


def test_irrep_that_acts_as_the_identity(q8):
    # rho2(1) = I and rho2(-1) = -I, so rho2(omega) is I up to rounding
    omega = from_atoms(q8, {0: 0.16232045077880902, 4: -0.8376795492211908})
    report = representation_fixed_points(standard_irrep(q8), omega)
    assert report.fixed.dim == 2
    assert report.predicted.dim == 2
    assert report.matches
    ideal = ideal_I_omega(omega)
    assert ideal.ok
    assert ideal.dim_fix == 4


def test_trivial_representation(q8):
    report = representation_fixed_points(trivial_representation(q8, 3), random_contractive(q8, 2))
    assert report.matches


def test_representation_validation(z4):
    z2 = carrier_for("cyclic:2")
    with pytest.raises(RepresentationError, match="unitary"):
        make_representation(z2, [2 * np.eye(2), np.eye(2)])
    swap = np.array([[0, 1], [1, 0]])
    with pytest.raises(RepresentationError, match="homomorphism"):
        make_representation(z2, [swap, swap])
    with pytest.raises(RepresentationError):
        standard_irrep(z4)


def test_representation_and_measure_must_share_a_group(z4, z6):
    with pytest.raises(PreconditionError):
        representation_fixed_points(regular_representation(z4), point_mass(z6, 0))
