# Convfix Lab
# Characters of finite groups, dual groups and character extension
# October 2026

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from config.vars import PHASE_TOL
from src.errors import NonAbelianError, PreconditionError
from src.groups.cayley import GroupTable, table_from_mul
from src.groups.subgroups import (
    QuotientTable, Subgroup, commutator_subgroup, element_order, quotient_table, subgroup_closure,
    whole_group,
)


def turn(angle) -> complex:
    """exp(2*pi*i*angle) for an angle measured in turns."""
    if isinstance(angle, Fraction):
        # exact quarter turns keep character tables free of rounding noise
        quarter = {Fraction(0): 1, Fraction(1, 4): 1j, Fraction(1, 2): -1, Fraction(3, 4): -1j}
        if angle in quarter:
            return complex(quarter[angle])
    return cmath.exp(2j * math.pi * float(angle))


@dataclass(frozen=True, eq=False)
class CharacterMap:
    """
    A homomorphism from a subgroup into the unit circle.

    angles holds exact rational angles (in turns) for characters produced by
    enumeration; characters read off measure phases only carry values.
    """
    domain: Subgroup
    values: dict
    angles: dict | None = None

    def __call__(self, h: int) -> complex:
        return self.values[h]

    def conj(self) -> "CharacterMap":
        angles = None if self.angles is None else {h: (-a) % 1 for h, a in self.angles.items()}
        return CharacterMap(self.domain, {h: v.conjugate() for h, v in self.values.items()}, angles)

    def is_trivial(self, tol: float = PHASE_TOL) -> bool:
        return all(abs(v - 1) <= tol for v in self.values.values())

    def violations(self) -> float:
        """Largest deviation from unimodularity, multiplicativity and chi(e) = 1."""
        group = self.domain.parent
        worst = abs(self.values[group.identity] - 1)
        for a in self.domain.elements:
            worst = max(worst, abs(abs(self.values[a]) - 1))
            for b in self.domain.elements:
                ab = int(group.mul[a, b])
                worst = max(worst, abs(self.values[ab] - self.values[a] * self.values[b]))
        return worst

    def agrees_with(self, other: "CharacterMap", tol: float = PHASE_TOL) -> bool:
        if self.domain.elements != other.domain.elements:
            return False
        return all(abs(self.values[h] - other.values[h]) <= tol for h in self.domain.elements)

    def as_array(self, fill: complex = 0) -> np.ndarray:
        """Values as a dense vector over the parent group, `fill` off the domain."""
        out = np.full(self.domain.parent.order, fill, dtype=complex)
        for h, v in self.values.items():
            out[h] = v
        return out

    def to_json(self) -> dict:
        return {str(h): [v.real, v.imag] for h, v in sorted(self.values.items())}

    def __repr__(self) -> str:
        return f"CharacterMap(on {list(self.domain.elements)})"


def _peel_characters(table: QuotientTable) -> list[dict]:
    """
    All characters of a finite abelian table, as exact angle maps.

    Builds the group up one cyclic piece at a time: pick an element g of
    maximal order outside the current subgroup A, find the least m with
    g^m in A, and extend every character of A by the m-th roots of its value at g^m.
    """
    order, mul, identity = table.order, table.mul, table.identity
    orders = [element_order(table, g) for g in range(order)]

    members = [identity]
    member_set = {identity}
    chars = [{identity: Fraction(0)}]
    while len(members) < order:
        g = max((x for x in range(order) if x not in member_set), key=lambda x: (orders[x], -x))
        m, power = 1, g
        while power not in member_set:
            power = int(mul[power, g])
            m += 1
        extended = []
        for psi in chars:
            for j in range(m):
                z = (psi[power] + j) / m
                chi = {}
                for a in members:
                    y, value = a, psi[a]
                    for _ in range(m):
                        chi[y] = value % 1
                        y = int(mul[y, g])
                        value += z
                extended.append(chi)
        new_members = []
        for a in members:
            y = a
            for _ in range(m):
                new_members.append(y)
                y = int(mul[y, g])
        members = new_members
        member_set = set(members)
        chars = extended
    return chars


def characters_of(subgroup: Subgroup) -> list[CharacterMap]:
    """
    Every homomorphism H -> T.

    Computed on the abelianization H/[H,H], so the list has |H/[H,H]| entries
    (|H| when H is abelian). The trivial character comes first.
    """
    group = subgroup.parent
    derived = commutator_subgroup(group, subgroup)
    quotient = quotient_table(group, subgroup, derived)
    result = []
    for angle_map in _peel_characters(quotient):
        angles = {h: angle_map[quotient.coset_of[h]] for h in subgroup.elements}
        values = {h: turn(a) for h, a in angles.items()}
        result.append(CharacterMap(subgroup, values, angles))
    return result


@dataclass(frozen=True, eq=False)
class DualGroup:
    """
    The dual of a finite abelian group.

    table is isomorphic to the original group; matrix[a, x] = chi_x(a) is
    the pairing between an element a and a dual element x.
    """
    base: GroupTable
    table: GroupTable
    characters: tuple[CharacterMap, ...]
    matrix: np.ndarray

    def pairing(self, a: int, x: int) -> complex:
        return complex(self.matrix[a, x])

    def __iter__(self):
        yield self.table
        yield self.pairing


def dual_group(group: GroupTable) -> DualGroup:
    """
    Build the dual group of an abelian group with its pairing.

    Raises:
        NonAbelianError: if the group is not abelian.
    """
    if not group.abelian:
        raise NonAbelianError(f"{group.name} is not abelian; it has no dual group here")
    chars = characters_of(whole_group(group))
    keys = {tuple(c.angles[a] for a in range(group.order)): i for i, c in enumerate(chars)}
    size = len(chars)
    mul = np.empty((size, size), dtype=np.int64)
    for i, ci in enumerate(chars):
        for j, cj in enumerate(chars):
            key = tuple((ci.angles[a] + cj.angles[a]) % 1 for a in range(group.order))
            mul[i, j] = keys[key]
    table = table_from_mul(f"dual({group.name})", mul, [f"chi{i}" for i in range(size)])
    matrix = np.array([[c(a) for c in chars] for a in range(group.order)], dtype=complex)
    return DualGroup(group, table, tuple(chars), matrix)


@dataclass(frozen=True)
class Conflict:
    """
    Witness that phases on S admit no character.

    The element is reached by two words (products of generators, left to
    right) whose forced phases differ.
    """
    element: int
    word: tuple[int, ...]
    phase: complex
    other_word: tuple[int, ...]
    other_phase: complex

    def describe(self, group: GroupTable) -> str:
        return (f"χ({_render_word(group, self.word)}) = {_render_phase(self.phase)} ≠ "
                f"{_render_chi_word(group, self.other_word)} = {_render_phase(self.other_phase)}")

    def to_json(self, group: GroupTable) -> dict:
        return {
            "element": self.element,
            "word": list(self.word),
            "phase": [self.phase.real, self.phase.imag],
            "other_word": list(self.other_word),
            "other_phase": [self.other_phase.real, self.other_phase.imag],
            "witness": self.describe(group),
        }


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _runs(word):
    runs = []
    for g in word:
        if runs and runs[-1][0] == g:
            runs[-1][1] += 1
        else:
            runs.append([g, 1])
    return runs


def _render_word(group: GroupTable, word) -> str:
    if not word:
        return "e"
    return "·".join(group.label(g) if k == 1 else f"{group.label(g)}{str(k).translate(_SUPERSCRIPTS)}"
                    for g, k in _runs(word))


def _render_chi_word(group: GroupTable, word) -> str:
    if not word:
        return "χ(e)"
    return "".join(f"χ({group.label(g)})" + ("" if k == 1 else str(k).translate(_SUPERSCRIPTS))
                   for g, k in _runs(word))


def _render_phase(z: complex) -> str:
    for value, text in ((1, "1"), (-1, "-1"), (1j, "i"), (-1j, "-i")):
        if abs(z - value) < 1e-12:
            return text
    return f"{z.real:.6g}{z.imag:+.6g}i"


def extend_character(group: GroupTable, elements, phases: dict, tol: float = PHASE_TOL):
    """
    Extend phases on S to a character of the subgroup S generates.

    Words are explored one generator at a time (S sorted), so a conflict is
    reported against the earliest word reaching the same element.

    Args:
        group (GroupTable): G.
        elements: the set S.
        phases (dict): element -> unit complex, defined exactly on S.
        tol (float): phase agreement tolerance.
    Returns:
        CharacterMap | Conflict: the extension, or a witness that none exists.
    """
    gens = sorted(set(int(s) for s in elements))
    if set(int(k) for k in phases) != set(gens):
        raise PreconditionError("phases must be defined exactly on S")
    phase = {int(k): complex(v) for k, v in phases.items()}
    for g, z in phase.items():
        if abs(abs(z) - 1) > tol:
            raise PreconditionError(f"phase at {group.label(g)} is not unimodular: |{z}| != 1")

    values = {group.identity: 1 + 0j}
    words = {group.identity: ()}
    for stage in range(len(gens)):
        active = gens[:stage + 1]
        frontier = sorted(values)
        while frontier:
            nxt = []
            for x in frontier:
                for h in active:
                    y = int(group.mul[x, h])
                    candidate = values[x] * phase[h]
                    if y not in values:
                        values[y] = candidate
                        words[y] = words[x] + (h,)
                        nxt.append(y)
                    elif abs(values[y] - candidate) > tol:
                        return Conflict(y, words[x] + (h,), candidate, words[y], values[y])
            frontier = nxt

    domain = Subgroup(group, tuple(sorted(values)))
    return CharacterMap(domain, values)


def support_subgroup(group: GroupTable, support) -> Subgroup:
    return subgroup_closure(group, support)
