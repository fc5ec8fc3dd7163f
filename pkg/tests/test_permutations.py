"""Permutations, signatures, tuple actions, and the six subgroups."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieadm.errors import InputError, PreconditionError
from lieadm.permutations import (
    Permutation,
    SubgroupId,
    act_on_tuple,
    enumerate_group,
    signature,
    subgroup_elements,
)

perm3 = st.permutations([1, 2, 3]).map(lambda xs: Permutation(tuple(xs)))
perm4 = st.permutations([1, 2, 3, 4]).map(lambda xs: Permutation(tuple(xs)))


def test_identity_and_validation():
    e = Permutation.identity(3)
    assert e.is_identity() and e.degree == 3 and e(2) == 2
    with pytest.raises(PreconditionError):
        Permutation((1, 1, 3))
    with pytest.raises(PreconditionError):
        e(4)


@given(perm4, perm4)
def test_compose_applies_right_factor_first(p, q):
    r = p.compose(q)
    for i in range(1, 5):
        assert r(i) == p(q(i))


@given(perm4)
def test_inverse_is_two_sided(p):
    assert p.compose(p.inverse()).is_identity()
    assert p.inverse().compose(p).is_identity()


@given(perm4, perm4)
def test_signature_is_multiplicative(p, q):
    assert signature(p.compose(q)) == signature(p) * signature(q)


def test_signature_known_values():
    assert signature(Permutation((1, 2, 3))) == 1
    assert signature(Permutation((2, 1, 3))) == -1
    assert signature(Permutation((2, 3, 1))) == 1
    assert signature(Permutation((3, 2, 1))) == -1


@given(perm3)
def test_act_on_tuple_places_preimage(p):
    t = ("a", "b", "c")
    acted = act_on_tuple(p, t)
    inv = p.inverse()
    for i in range(1, 4):
        assert acted[i - 1] == t[inv(i) - 1]


@given(perm3, perm3)
def test_act_on_tuple_is_covariant(p, q):
    t = ("a", "b", "c")
    assert act_on_tuple(p.compose(q), t) == act_on_tuple(p, act_on_tuple(q, t))


def test_act_on_tuple_length_check():
    with pytest.raises(InputError):
        act_on_tuple(Permutation((2, 1)), ("a", "b", "c"))


def test_subgroup_orders_and_membership():
    orders = {
        SubgroupId.G1: 1,
        SubgroupId.G2: 2,
        SubgroupId.G3: 2,
        SubgroupId.G4: 2,
        SubgroupId.G5: 3,
        SubgroupId.G6: 6,
    }
    for g, order in orders.items():
        elems = subgroup_elements(g).elements
        assert len(elems) == order
    assert Permutation((2, 1, 3)) in subgroup_elements(SubgroupId.G2).elements
    assert Permutation((1, 3, 2)) in subgroup_elements(SubgroupId.G3).elements
    assert Permutation((3, 2, 1)) in subgroup_elements(SubgroupId.G4).elements
    even = subgroup_elements(SubgroupId.G5).elements
    assert all(signature(p) == 1 for p in even)


def test_subgroups_are_closed():
    for g in SubgroupId:
        elems = subgroup_elements(g).elements
        for p, q in itertools.product(elems, elems):
            assert p.compose(q) in elems
        assert all(p.inverse() in elems for p in elems)


def test_enumerate_symmetric_groups():
    assert len(enumerate_group("S", 3).elements) == 6
    assert len(enumerate_group("S", 4).elements) == 24
    with pytest.raises(InputError):
        enumerate_group("Q", 3)
