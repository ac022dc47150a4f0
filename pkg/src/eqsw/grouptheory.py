"""Finite groups as Cayley tables and their subgroup lattices."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .algebra import divisors
from .errors import InvalidDataError

DEFAULT_MAX_ORDER = 64


@dataclass(frozen=True)
class FiniteGroup:
    """A group on elements 0..order-1 with identity 0.

    ``cyclic_order`` is set for groups built by :meth:`cyclic`, where
    element k stands for the k-th power of a generator.
    """

    table: tuple[tuple[int, ...], ...]
    cyclic_order: int | None = None

    def __post_init__(self) -> None:
        _validate_table(self.table)

    @classmethod
    def cyclic(cls, n: int) -> FiniteGroup:
        if n < 1:
            raise InvalidDataError("group order must be positive")
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        return cls(table, cyclic_order=n)

    @classmethod
    def dihedral(cls, n: int) -> FiniteGroup:
        """Symmetries of an n-gon: element r^k s^e is stored as k + n*e."""
        if n < 1:
            raise InvalidDataError("dihedral parameter must be positive")

        def mul(a: int, b: int) -> int:
            k1, e1 = a % n, a // n
            k2, e2 = b % n, b // n
            k = (k1 + (k2 if e1 == 0 else -k2)) % n
            return k + n * ((e1 + e2) % 2)

        size = 2 * n
        return cls(tuple(tuple(mul(a, b) for b in range(size)) for a in range(size)))

    @classmethod
    def from_table(cls, rows: Sequence[Sequence[int]]) -> FiniteGroup:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def is_cyclic_fast_path(self) -> bool:
        return self.cyclic_order is not None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def conjugate_set(self, elements: frozenset[int], g: int) -> frozenset[int]:
        gi = self.inverses[g]
        return frozenset(self.mul(self.mul(g, h), gi) for h in elements)

    def closure(self, generators: frozenset[int] | set[int]) -> frozenset[int]:
        """Subgroup generated by ``generators``."""
        group = {0} | set(generators)
        frontier = list(group)
        while frontier:
            new = []
            for a in frontier:
                for b in list(group):
                    for c in (self.mul(a, b), self.mul(b, a)):
                        if c not in group:
                            group.add(c)
                            new.append(c)
            frontier = new
        return frozenset(group)


def _validate_table(table: tuple[tuple[int, ...], ...]) -> None:
    n = len(table)
    if n == 0:
        raise InvalidDataError("empty group table")
    for row in table:
        if len(row) != n or sorted(row) != list(range(n)):
            raise InvalidDataError("group table rows must be permutations of 0..n-1")
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            raise InvalidDataError("element 0 must be the identity")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise InvalidDataError(
                        f"table is not associative at ({a}, {b}, {c})"
                    )


@dataclass(frozen=True)
class SubgroupLattice:
    group: FiniteGroup
    subgroups: tuple[frozenset[int], ...]
    inclusion: tuple[tuple[bool, ...], ...]
    conj_classes: tuple[tuple[int, ...], ...]
    normaliser_index: tuple[int, ...]
    _mobius: dict[int, int] = field(default_factory=dict, compare=False, repr=False)

    def index_of(self, elements: frozenset[int] | set[int]) -> int:
        return self.subgroups.index(frozenset(elements))

    def is_cyclic(self, h: int) -> bool:
        elems = self.subgroups[h]
        return any(self.group.closure({g}) == elems for g in elems)

    def class_of(self, h: int) -> int:
        for idx, cls in enumerate(self.conj_classes):
            if h in cls:
                return idx
        raise IndexError(h)


def enumerate_subgroup_lattice(
    group: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER
) -> SubgroupLattice:
    """All subgroups, their inclusion order, conjugacy classes and normalisers.

    Subgroups are found by breadth-first joins starting from the cyclic
    subgroups; every subgroup is generated by its cyclic subgroups, so the
    join closure is complete.
    """
    if group.order > max_order:
        raise InvalidDataError(
            f"group order {group.order} exceeds the bound {max_order}"
        )
    if group.is_cyclic_fast_path:
        n = group.order
        subs = {frozenset(range(0, n, n // d)) for d in divisors(n)}
    else:
        cyclic = {group.closure({g}) for g in range(group.order)}
        subs = set(cyclic)
        frontier = set(cyclic)
        while frontier:
            new = set()
            for h in frontier:
                for c in cyclic:
                    if c <= h:
                        continue
                    joined = group.closure(h | c)
                    if joined not in subs:
                        new.add(joined)
            subs |= new
            frontier = new
    ordered = tuple(sorted(subs, key=lambda s: (len(s), sorted(s))))
    for s in ordered:
        for a in s:
            if group.inverses[a] not in s or any(group.mul(a, b) not in s for b in s):
                raise AssertionError("closure produced a non-subgroup")

    inclusion = tuple(tuple(a <= b for b in ordered) for a in ordered)
    position = {s: i for i, s in enumerate(ordered)}

    classes: list[tuple[int, ...]] = []
    seen: set[int] = set()
    normaliser_index = [0] * len(ordered)
    for i, s in enumerate(ordered):
        conj = {group.conjugate_set(s, g) for g in range(group.order)}
        normaliser = sum(1 for g in range(group.order) if group.conjugate_set(s, g) == s)
        normaliser_index[i] = group.order // normaliser
        if i in seen:
            continue
        members = tuple(sorted(position[c] for c in conj))
        seen.update(members)
        classes.append(members)

    return SubgroupLattice(
        group=group,
        subgroups=ordered,
        inclusion=inclusion,
        conj_classes=tuple(classes),
        normaliser_index=tuple(normaliser_index),
    )


def subgroup_mobius(lattice: SubgroupLattice, h: int) -> int:
    """Moebius value mu(1, H) on the subgroup lattice."""
    if not 0 <= h < len(lattice.subgroups):
        raise IndexError(f"no subgroup with index {h}")
    cache = lattice._mobius
    if h in cache:
        return cache[h]
    # subgroups are sorted by size, so lower indices come first
    for k in range(len(lattice.subgroups)):
        if k in cache:
            continue
        if k == 0:
            cache[k] = 1
        else:
            cache[k] = -sum(
                cache[j] for j in range(k) if lattice.inclusion[j][k]
            )
        if k == h:
            break
    return cache[h]
