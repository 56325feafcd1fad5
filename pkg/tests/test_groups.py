# Convfix Lab
# Tests for Cayley tables, specs and subgroups
# October 2026

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import GroupSpecError
from src.groups.cayley import build_group, group_from_json, group_to_json, parse_group_spec, table_from_mul
from src.groups.subgroups import (
    all_subgroups, commutator_subgroup, element_order, left_cosets, right_cosets, semigroup_closure,
    subgroup_closure, whole_group,
)

SPECS = ["cyclic:1", "cyclic:5", "cyclic:12", "dihedral:3", "dihedral:5", "symmetric:3",
         "quaternion8", "product(cyclic:2,cyclic:2)", "product(cyclic:2,symmetric:3)"]

# a loop of order 5 with identity 0: every row and column is a permutation, but 1*1 = 0
NON_ASSOCIATIVE = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


@pytest.mark.parametrize("spec, order, abelian", [
    ("cyclic:4", 4, True),
    ("dihedral:4", 8, False),
    ("symmetric:3", 6, False),
    ("symmetric:1", 1, True),
    ("quaternion8", 8, False),
    ("product(cyclic:2,cyclic:3)", 6, True),
    ("product(cyclic:2,product(cyclic:2,cyclic:2))", 8, True),
])
def test_build_group_orders(spec, order, abelian):
    group = build_group(spec)
    assert group.order == order
    assert group.abelian == abelian
    assert group.spec == str(parse_group_spec(spec))


def test_cyclic_table_is_addition_mod_n():
    group = build_group("cyclic:7")
    a, b = np.meshgrid(np.arange(7), np.arange(7), indexing="ij")
    assert np.array_equal(group.mul, (a + b) % 7)
    assert group.identity == 0
    assert list(group.inv) == [(-g) % 7 for g in range(7)]


def test_quaternion_units():
    q8 = build_group("quaternion8")
    i, j, k, minus_one = 1, 2, 3, 4
    assert q8.mul[i, i] == minus_one
    assert q8.mul[i, j] == k
    assert q8.mul[j, i] == k + 4
    assert q8.label(q8.mul[j, i]) == "-k"


def test_dihedral_reflection_relation():
    d4 = build_group("dihedral:4")
    r, s = 1, 4
    # s r s = r^-1
    assert d4.product([s, r, s]) == d4.inv[r]


@pytest.mark.parametrize("text", ["cyclic:-1", "cyclic:0", "cyclic:257", "dihedral:1",
                                  "symmetric:6", "torus:3", "product(cyclic:2)", ""])
def test_bad_specs_are_rejected(text):
    with pytest.raises(GroupSpecError):
        build_group(text)


def test_product_order_bound():
    with pytest.raises(GroupSpecError, match="exceeds"):
        build_group("product(cyclic:128,cyclic:4)")


def test_table_validation():
    with pytest.raises(GroupSpecError, match="associative"):
        table_from_mul("loop", NON_ASSOCIATIVE, [str(i) for i in range(5)])
    with pytest.raises(GroupSpecError, match="identity"):
        table_from_mul("zero", [[0, 0], [0, 0]], ["a", "b"])
    with pytest.raises(GroupSpecError, match="square"):
        table_from_mul("flat", [[0, 1]], ["a", "b"])


def test_group_json_round_trip():
    group = build_group("dihedral:3")
    back = group_from_json(group_to_json(group))
    assert np.array_equal(back.mul, group.mul)
    assert back.identity == group.identity
    assert back.labels == group.labels


def test_group_json_rejects_wrong_identity():
    data = group_to_json(build_group("cyclic:3"))
    data["identity"] = 2
    with pytest.raises(GroupSpecError):
        group_from_json(data)


def test_tables_are_read_only():
    group = build_group("cyclic:3")
    with pytest.raises(ValueError):
        group.mul[0, 0] = 1


@pytest.mark.parametrize("spec, orders", [
    ("cyclic:6", [1, 2, 3, 6]),
    ("symmetric:3", [1, 2, 2, 2, 3, 6]),
    ("quaternion8", [1, 2, 4, 4, 4, 8]),
])
def test_all_subgroups(spec, orders):
    subgroups = all_subgroups(build_group(spec))
    assert [h.order for h in subgroups] == orders
    assert all(h.is_valid() for h in subgroups)


def test_dihedral4_has_ten_subgroups():
    assert len(all_subgroups(build_group("dihedral:4"))) == 10


def test_left_and_right_cosets_differ_for_non_normal_subgroup(s3):
    transposition = next(g for g in range(6) if g != s3.identity and s3.mul[g, g] == s3.identity)
    h = subgroup_closure(s3, [transposition])
    assert left_cosets(s3, h) != right_cosets(s3, h)
    assert sorted(x for block in left_cosets(s3, h) for x in block) == list(range(6))


def test_element_orders(z6, q8):
    assert [element_order(z6, g) for g in range(6)] == [1, 6, 3, 2, 3, 6]
    assert sorted(element_order(q8, g) for g in range(8)) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_commutator_subgroup_of_s3_is_a3(s3):
    assert commutator_subgroup(s3, whole_group(s3)).order == 3


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(SPECS), picks=st.lists(st.integers(0, 10_000), min_size=1, max_size=4))
def test_closure_is_a_subgroup_and_obeys_lagrange(spec, picks):
    group = build_group(spec)
    elements = [p % group.order for p in picks]
    h = subgroup_closure(group, elements)
    assert h.is_valid()
    assert group.order % h.order == 0
    assert set(elements) <= set(h.elements)
    assert semigroup_closure(group, elements) == frozenset(h.elements)
