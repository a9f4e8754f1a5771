"""Exact arithmetic in the dicyclic groups of order 4n.

The group with parameter n >= 2 is presented by

    x^(2n) = 1,   y^2 = x^n,   y x y^(-1) = x^(-1).

Every element has a unique normal form x^a y^b with 0 <= a < 2n and
b in {0, 1}.  Elements are stored in that normal form, so equality and
hashing are structural.  All values here are immutable and all
operations are pure; the heavier enumerations (conjugacy classes,
subgroups, automorphisms) are cached on the group object.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ParameterError


@dataclass(frozen=True, order=True)
class GroupElement:
    """Normal form x^a y^b of an element of the dicyclic group of order 4n."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ParameterError(f"group parameter must be >= 2, got n={self.n}")
        object.__setattr__(self, "a", self.a % (2 * self.n))
        object.__setattr__(self, "b", self.b % 2)

    def _check_same_group(self, other: "GroupElement") -> None:
        if self.n != other.n:
            raise ParameterError(
                f"cannot combine elements of groups with n={self.n} and n={other.n}"
            )

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check_same_group(other)
        # x^a y^b * x^c y^d: move x^c through y^b (conjugation inverts x),
        # then fold y^2 = x^n when b + d = 2.
        a = self.a + (other.a if self.b == 0 else -other.a)
        b = self.b + other.b
        if b == 2:
            a += self.n
            b = 0
        return GroupElement(self.n, a, b)

    def inverse(self) -> "GroupElement":
        if self.b == 0:
            return GroupElement(self.n, -self.a, 0)
        # (x^a y)^-1 = x^(a+n) y since (x^a y)(x^(a+n) y) = x^(-n) y^2 = 1.
        return GroupElement(self.n, self.a + self.n, 1)

    def power(self, k: int) -> "GroupElement":
        result = self.identity()
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def order(self) -> int:
        e = self
        k = 1
        while not e.is_identity():
            e = e * self
            k += 1
        return k

    def conjugated_by(self, h: "GroupElement") -> "GroupElement":
        """h * self * h^-1."""
        return h * self * h.inverse()

    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0

    def identity(self) -> "GroupElement":
        return GroupElement(self.n, 0, 0)

    def __repr__(self) -> str:
        if self.is_identity():
            return "1"
        parts = []
        if self.a:
            parts.append("x" if self.a == 1 else f"x^{self.a}")
        if self.b:
            parts.append("y")
        return "*".join(parts)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its full member set plus the generators it came from."""

    n: int
    members: frozenset[GroupElement]
    generators: tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def index_in(self, group: "DicyclicGroup") -> int:
        return group.order // self.order

    def __contains__(self, e: GroupElement) -> bool:
        return e in self.members

    def is_trivial(self) -> bool:
        return self.order == 1

    def sorted_members(self) -> list[GroupElement]:
        return sorted(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.n == other.n and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.n, self.members))

    def __repr__(self) -> str:
        gens = ",".join(repr(g) for g in self.generators)
        return f"<{gens}> (order {self.order})"


@dataclass(frozen=True, order=True)
class ConjugacyClass:
    representative: GroupElement
    members: frozenset[GroupElement]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True, order=True)
class GroupAutomorphism:
    """An automorphism, determined by the images of the two generators."""

    image_of_x: GroupElement
    image_of_y: GroupElement

    @property
    def n(self) -> int:
        return self.image_of_x.n

    def apply(self, e: GroupElement) -> GroupElement:
        return self.image_of_x.power(e.a) * self.image_of_y.power(e.b)

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """self after other."""
        return GroupAutomorphism(
            self.apply(other.image_of_x), self.apply(other.image_of_y)
        )

    def is_identity(self) -> bool:
        n = self.n
        return self.image_of_x == GroupElement(n, 1, 0) and self.image_of_y == GroupElement(n, 0, 1)


class DicyclicGroup:
    """The dicyclic group of order 4n, with enumeration helpers.

    Elements are also addressable by an integer index (2a + b), used
    internally for table-driven enumeration; the public surface works
    with GroupElement values throughout.
    """

    def __init__(self, n: int):
        if n < 2:
            raise ParameterError(f"group parameter must be >= 2, got n={n}")
        self.n = n
        self.order = 4 * n

    # -- basic elements -------------------------------------------------

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self.n, 0, 0)

    @property
    def x(self) -> GroupElement:
        return GroupElement(self.n, 1, 0)

    @property
    def y(self) -> GroupElement:
        return GroupElement(self.n, 0, 1)

    def element(self, a: int, b: int = 0) -> GroupElement:
        return GroupElement(self.n, a, b)

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        return tuple(
            GroupElement(self.n, a, b)
            for a in range(2 * self.n)
            for b in (0, 1)
        )

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, e: GroupElement) -> bool:
        return isinstance(e, GroupElement) and e.n == self.n

    # -- index tables (fast path for the enumeration cores) -------------

    def index_of(self, e: GroupElement) -> int:
        if e.n != self.n:
            raise ParameterError(f"element of G_{e.n} passed to G_{self.n}")
        return 2 * e.a + e.b

    def element_at(self, i: int) -> GroupElement:
        return GroupElement(self.n, i // 2, i % 2)

    @cached_property
    def mul_table(self) -> list[list[int]]:
        els = self.elements
        return [
            [self.index_of(e1 * e2) for e2 in els]
            for e1 in els
        ]

    @cached_property
    def inverse_table(self) -> list[int]:
        return [self.index_of(e.inverse()) for e in self.elements]

    @cached_property
    def order_table(self) -> list[int]:
        return [e.order() for e in self.elements]

    # -- subgroups -------------------------------------------------------

    def _closure_indices(self, gen_indices: Iterable[int]) -> frozenset[int]:
        table = self.mul_table
        gens = sorted(set(gen_indices) | {0})
        members = set(gens)
        frontier = list(members)
        while frontier:
            new = []
            for i in frontier:
                row = table[i]
                for g in gens:
                    j = row[g]
                    if j not in members:
                        members.add(j)
                        new.append(j)
            frontier = new
        return frozenset(members)

    def subgroup_generated(self, generators: Iterable[GroupElement]) -> Subgroup:
        gens = tuple(generators)
        members = self._closure_indices(self.index_of(g) for g in gens)
        return Subgroup(
            self.n, frozenset(self.element_at(i) for i in members), gens
        )

    def cyclic(self, e: GroupElement) -> Subgroup:
        return self.subgroup_generated([e])

    @cached_property
    def subgroups(self) -> tuple[Subgroup, ...]:
        """All subgroups.

        Every subgroup of a dicyclic group is cyclic or dicyclic, hence
        generated by at most two elements, so closing every pair of
        elements (pairs with repetition cover the cyclic ones) is
        exhaustive at this scale.
        """
        seen: dict[frozenset[int], tuple[int, ...]] = {}
        indices = range(self.order)
        seen[frozenset({0})] = (0,)
        for i, j in itertools.combinations_with_replacement(indices, 2):
            members = self._closure_indices((i, j))
            if members not in seen:
                seen[members] = (i, j) if i != j else (i,)
        result = [
            Subgroup(
                self.n,
                frozenset(self.element_at(k) for k in members),
                tuple(self.element_at(k) for k in gens),
            )
            for members, gens in seen.items()
        ]
        result.sort(key=lambda H: (H.order, H.sorted_members()))
        return tuple(result)

    def index_two_subgroups(self) -> list[Subgroup]:
        return [H for H in self.subgroups if H.order * 2 == self.order]

    # -- conjugacy classes ----------------------------------------------

    @cached_property
    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        table = self.mul_table
        inv = self.inverse_table
        unseen = set(range(self.order))
        classes = []
        while unseen:
            i = min(unseen)
            orbit = {table[table[h][i]][inv[h]] for h in range(self.order)}
            unseen -= orbit
            members = frozenset(self.element_at(k) for k in orbit)
            classes.append(ConjugacyClass(min(members), members))
        classes.sort()
        return tuple(classes)

    def class_of(self, e: GroupElement) -> ConjugacyClass:
        for cls in self.conjugacy_classes:
            if e in cls.members:
                return cls
        raise ParameterError(f"element {e!r} not in G_{self.n}")

    # -- automorphisms ---------------------------------------------------

    @cached_property
    def automorphisms(self) -> tuple[GroupAutomorphism, ...]:
        """Brute force over all (image_of_x, image_of_y) pairs.

        A pair defines an automorphism iff the images satisfy the three
        defining relations and generate the group.  No theoretical
        shortcut is taken; this keeps the list usable as an independent
        oracle for "up to isomorphisms" counting.
        """
        n = self.n
        identity = self.identity
        found = []
        for imx in self.elements:
            if not imx.power(2 * n).is_identity():
                continue
            imx_n = imx.power(n)
            imx_inv = imx.inverse()
            for imy in self.elements:
                if imy * imy != imx_n:
                    continue
                if imy * imx * imy.inverse() != imx_inv:
                    continue
                if self.subgroup_generated([imx, imy]).order != self.order:
                    continue
                found.append(GroupAutomorphism(imx, imy))
        found.sort()
        return tuple(found)

    def automorphism_index_perms(self) -> list[list[int]]:
        """Each automorphism as a permutation of element indices."""
        return [
            [self.index_of(phi.apply(e)) for e in self.elements]
            for phi in self.automorphisms
        ]

    def __repr__(self) -> str:
        return f"DicyclicGroup(n={self.n})"
