import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqsw.algebra import divisors, totient_mobius
from eqsw.errors import InvalidDataError
from eqsw.grouptheory import FiniteGroup, enumerate_subgroup_lattice, subgroup_mobius


def test_cyclic_prime_has_two_subgroups():
    lat = enumerate_subgroup_lattice(FiniteGroup.cyclic(7))
    assert [len(h) for h in lat.subgroups] == [1, 7]
    assert lat.normaliser_index == (1, 1)


def test_z6_divisor_lattice():
    lat = enumerate_subgroup_lattice(FiniteGroup.cyclic(6))
    assert sorted(len(h) for h in lat.subgroups) == [1, 2, 3, 6]


def test_d3_lattice():
    lat = enumerate_subgroup_lattice(FiniteGroup.dihedral(3))
    assert sorted(len(h) for h in lat.subgroups) == [1, 2, 2, 2, 3, 6]
    order_two = [i for i, h in enumerate(lat.subgroups) if len(h) == 2]
    assert len({lat.class_of(i) for i in order_two}) == 1
    full = lat.index_of(set(range(6)))
    assert subgroup_mobius(lat, full) == 3


def test_cyclic_fast_path_matches_explicit_table():
    n = 12
    explicit = FiniteGroup.from_table([[(a + b) % n for b in range(n)] for a in range(n)])
    fast = enumerate_subgroup_lattice(FiniteGroup.cyclic(n))
    slow = enumerate_subgroup_lattice(explicit)
    assert set(fast.subgroups) == set(slow.subgroups)


def test_rejects_non_group_table():
    with pytest.raises(InvalidDataError):
        FiniteGroup.from_table([[0, 1], [1, 1]])


def test_order_bound():
    with pytest.raises(InvalidDataError):
        enumerate_subgroup_lattice(FiniteGroup.cyclic(70))


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclic_mobius_is_number_theoretic(n):
    lat = enumerate_subgroup_lattice(FiniteGroup.cyclic(n))
    for h, elems in enumerate(lat.subgroups):
        assert subgroup_mobius(lat, h) == totient_mobius(len(elems))[1]


GROUPS = [FiniteGroup.cyclic(n) for n in (2, 4, 6, 9, 12)] + [FiniteGroup.dihedral(n) for n in (2, 3, 4, 5, 6)]


@pytest.mark.parametrize("group", GROUPS)
def test_lattice_invariants(group):
    lat = enumerate_subgroup_lattice(group)
    subs = set(lat.subgroups)
    assert frozenset({0}) in subs and frozenset(range(group.order)) in subs
    inv = group.inverses
    for h in lat.subgroups:
        assert all(group.mul(a, b) in h for a in h for b in h)
        assert all(inv[a] in h for a in h)
    if group.order > 1:
        assert sum(subgroup_mobius(lat, i) for i in range(len(lat.subgroups))) == 0
    for cls in lat.conj_classes:
        assert len({len(lat.subgroups[i]) for i in cls}) == 1
        assert len({lat.normaliser_index[i] for i in cls}) == 1


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_conjugation_permutes_subgroups_and_preserves_mobius(group, data):
    lat = enumerate_subgroup_lattice(group)
    g = data.draw(st.integers(0, group.order - 1))
    for i, h in enumerate(lat.subgroups):
        j = lat.index_of(group.conjugate_set(h, g))
        assert subgroup_mobius(lat, i) == subgroup_mobius(lat, j)


def test_dihedral_subgroup_count():
    # D_n has tau(n) + sigma(n) subgroups
    for n in range(2, 9):
        lat = enumerate_subgroup_lattice(FiniteGroup.dihedral(n))
        assert len(lat.subgroups) == len(divisors(n)) + sum(divisors(n))
