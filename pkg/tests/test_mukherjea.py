# Convfix Lab
# Tests for Cesaro pairings of dual functions
# October 2026

import numpy as np
import pytest

from src.errors import PreconditionError
from src.dual.functions import cyclic_character
from src.dual.mukherjea import golden_angle, mukherjea_dual, rotation_dual


def test_golden_rotation_keeps_only_the_origin():
    report = mukherjea_dual(rotation_dual(golden_angle()))
    assert report.z_set == (0,)
    assert report.z_nonempty
    assert not report.all_vanish
    assert report.ok
    origin = next(p for p in report.pairings if p.name == "delta_0")
    assert origin.cesaro == pytest.approx(1.0)
    assert origin.predicted == 1


@pytest.mark.parametrize("j", range(1, 7))
def test_phased_golden_rotation_vanishes(j):
    report = mukherjea_dual(rotation_dual(golden_angle(), np.exp(2j * np.pi * j / 7)))
    assert report.z_set == ()
    assert report.all_vanish
    assert report.closed_form_ok
    assert report.bound_ok
    assert report.ok


def test_pairings_with_a_wider_test_function(z6):
    report = mukherjea_dual(cyclic_character(z6, 2), test_fns={"pair": {0: 1.0, 3: 1.0}, "step": {1: 1.0}})
    assert report.z_set == (0, 3)
    pair, step = report.pairings
    assert pair.cesaro == pytest.approx(2.0)
    assert abs(step.cesaro) <= report.decay_tol
    assert report.consistent


def test_faithful_character_on_z6(z6):
    report = mukherjea_dual(cyclic_character(z6, 1))
    assert [p.name for p in report.pairings] == [f"delta_{m}" for m in range(6)]
    assert report.z_set == (0,)
    assert report.ok


def test_norm_must_be_one():
    with pytest.raises(PreconditionError):
        mukherjea_dual(rotation_dual(golden_angle(), 0.5))
