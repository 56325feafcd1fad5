# Convfix Lab
# Subgroups, closures, cosets and quotient tables
# October 2026

from dataclasses import dataclass

import numpy as np

from src.errors import PreconditionError
from src.groups.cayley import GroupTable


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of a finite group, stored as the sorted tuple of its element indices."""
    parent: GroupTable
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self._members

    @property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def is_valid(self) -> bool:
        """Contains the identity and is closed under products and inverses."""
        members = self._members
        mul, inv = self.parent.mul, self.parent.inv
        if self.parent.identity not in members:
            return False
        idx = np.asarray(self.elements)
        return (set(mul[np.ix_(idx, idx)].reshape(-1).tolist()) <= members
                and set(inv[idx].tolist()) <= members)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.elements == self.elements)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elements))

    def __repr__(self) -> str:
        return f"Subgroup({self.parent.name}, {list(self.elements)})"


def _closure(group: GroupTable, generators: list[int], seed: set[int]) -> set[int]:
    """Multiply on the right by generators until nothing new appears."""
    reached = set(seed)
    frontier = list(seed)
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = int(group.mul[x, g])
                if y not in reached:
                    reached.add(y)
                    nxt.append(y)
        frontier = nxt
    return reached


def semigroup_closure(group: GroupTable, elements) -> frozenset:
    """
    Smallest multiplicatively closed set containing S.

    In a finite group this is a subgroup (a finite cancellative semigroup is a
    group), so it agrees with subgroup_closure.
    """
    gens = sorted(set(int(s) for s in elements))
    if not gens:
        raise PreconditionError("semigroup_closure needs a nonempty generating set")
    return frozenset(_closure(group, gens, set(gens)))


def subgroup_closure(group: GroupTable, elements) -> Subgroup:
    """Smallest subgroup containing S; the empty set generates the trivial subgroup."""
    gens = sorted(set(int(s) for s in elements))
    gens += [int(group.inv[g]) for g in gens]
    reached = _closure(group, gens, {group.identity})
    return Subgroup(group, tuple(sorted(reached)))


def whole_group(group: GroupTable) -> Subgroup:
    return Subgroup(group, tuple(range(group.order)))


def all_subgroups(group: GroupTable) -> list[Subgroup]:
    """
    Every subgroup, found by growing cyclic subgroups one element at a time.

    Returns:
        list[Subgroup]: ordered by (order, elements).
    """
    found = {subgroup_closure(group, [g]).elements for g in range(group.order)}
    frontier = list(found)
    while frontier:
        nxt = []
        for elements in frontier:
            members = set(elements)
            for g in range(group.order):
                if g in members:
                    continue
                grown = subgroup_closure(group, list(elements) + [g]).elements
                if grown not in found:
                    found.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return [Subgroup(group, e) for e in sorted(found, key=lambda e: (len(e), e))]


def left_cosets(group: GroupTable, subgroup: Subgroup) -> list[tuple[int, ...]]:
    """
    Partition G into left cosets gH.

    Returns:
        list[tuple[int, ...]]: sorted blocks ordered by their minimal element,
            which is the canonical representative.
    """
    seen = set()
    blocks = []
    h = np.asarray(subgroup.elements)
    for g in range(group.order):
        if g in seen:
            continue
        block = tuple(sorted(set(group.mul[g, h].tolist())))
        seen.update(block)
        blocks.append(block)
    return blocks


def right_cosets(group: GroupTable, subgroup: Subgroup) -> list[tuple[int, ...]]:
    """Partition G into right cosets Hg (the orbits of t -> h t)."""
    seen = set()
    blocks = []
    h = np.asarray(subgroup.elements)
    for g in range(group.order):
        if g in seen:
            continue
        block = tuple(sorted(set(group.mul[h, g].tolist())))
        seen.update(block)
        blocks.append(block)
    return blocks


def element_order(group, g: int) -> int:
    """Order of g in a group or quotient table (anything with mul and identity)."""
    order, x = 1, g
    while x != group.identity:
        x = int(group.mul[x, g])
        order += 1
    return order


def commutator_subgroup(group: GroupTable, subgroup: Subgroup) -> Subgroup:
    mul, inv = group.mul, group.inv
    commutators = {
        int(mul[mul[a, b], mul[inv[a], inv[b]]])
        for a in subgroup.elements for b in subgroup.elements
    }
    return subgroup_closure(group, commutators)


def is_normal_in(group: GroupTable, normal: Subgroup, ambient: Subgroup) -> bool:
    members = set(normal.elements)
    for h in ambient.elements:
        for n in normal.elements:
            if int(group.mul[group.mul[h, n], group.inv[h]]) not in members:
                return False
    return True


@dataclass(frozen=True)
class QuotientTable:
    """H/N as a small table: cosets[i] is the i-th coset, mul[i, j] the coset of their product."""
    cosets: tuple[tuple[int, ...], ...]
    mul: np.ndarray
    identity: int
    coset_of: dict

    @property
    def order(self) -> int:
        return len(self.cosets)


def quotient_table(group: GroupTable, ambient: Subgroup, normal: Subgroup) -> QuotientTable:
    """
    Multiplication table of ambient/normal for a normal subgroup of ambient.

    Args:
        group (GroupTable): the parent group.
        ambient (Subgroup): H.
        normal (Subgroup): N, normal in H.
    Returns:
        QuotientTable: cosets ordered by minimal element.
    """
    if not is_normal_in(group, normal, ambient):
        raise PreconditionError("quotient_table needs a normal subgroup")
    n = np.asarray(normal.elements)
    cosets, coset_of = [], {}
    for h in ambient.elements:
        if h in coset_of:
            continue
        block = tuple(sorted(set(group.mul[h, n].tolist())))
        for x in block:
            coset_of[x] = len(cosets)
        cosets.append(block)
    size = len(cosets)
    mul = np.empty((size, size), dtype=np.int64)
    for i, a in enumerate(cosets):
        for j, b in enumerate(cosets):
            mul[i, j] = coset_of[int(group.mul[a[0], b[0]])]
    return QuotientTable(tuple(cosets), mul, coset_of[group.identity], coset_of)
