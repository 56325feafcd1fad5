# Convfix Lab
# Seeded random contractive measures
# October 2026

from dataclasses import dataclass

import numpy as np

from config.vars import LATTICE_DRAW_RADIUS
from src.errors import PreconditionError
from src.groups.cayley import is_lattice
from src.groups.characters import CharacterMap
from src.groups.subgroups import Subgroup
from src.measures.measure import ComplexMeasure, from_atoms

PROFILE_STYLES = ("real-signed", "complex", "probability", "character-twisted")


@dataclass(frozen=True)
class Profile:
    """
    How to draw a measure.

    style is one of PROFILE_STYLES; density is the fraction of the carrier
    (or of H for character-twisted draws) that carries mass.
    """
    style: str = "complex"
    density: float = 0.5
    subgroup: Subgroup | None = None
    character: CharacterMap | None = None

    def __post_init__(self):
        if self.style not in PROFILE_STYLES:
            raise PreconditionError(f"unknown profile style {self.style!r}")
        if not 0 < self.density <= 1:
            raise PreconditionError(f"density must be in (0, 1], got {self.density}")
        if self.style == "character-twisted" and (self.subgroup is None or self.character is None):
            raise PreconditionError("character-twisted draws need a subgroup and a character on it")


def _positions(carrier, profile: Profile) -> list[int]:
    if profile.style == "character-twisted":
        return list(profile.subgroup.elements)
    if is_lattice(carrier):
        return list(range(-LATTICE_DRAW_RADIUS, LATTICE_DRAW_RADIUS + 1))
    return list(range(carrier.order))


def random_contractive(carrier, seed: int, profile: Profile = Profile()) -> ComplexMeasure:
    """
    Draw a measure of total variation 1, reproducibly from seed.

    The support has max(1, round(density * n)) points out of the n eligible
    ones. Character-twisted draws return chi times a random probability on H.

    Args:
        carrier (GroupTable | LatticeGroup): where the measure lives.
        seed (int): numpy Generator seed.
        profile (Profile): support density and phase style.
    Returns:
        ComplexMeasure: the draw.
    """
    rng = np.random.default_rng(seed)
    positions = _positions(carrier, profile)
    size = max(1, int(round(profile.density * len(positions))))
    chosen = sorted(int(g) for g in rng.choice(positions, size=size, replace=False))
    weights = 1.0 - rng.random(size)
    weights = weights / weights.sum()

    if profile.style == "real-signed":
        phases = rng.choice([-1.0, 1.0], size=size)
    elif profile.style == "complex":
        phases = np.exp(2j * np.pi * rng.random(size))
    elif profile.style == "probability":
        phases = np.ones(size)
    else:
        phases = np.array([profile.character(g) for g in chosen])
    return from_atoms(carrier, {g: complex(w * z) for g, w, z in zip(chosen, weights, phases)})
