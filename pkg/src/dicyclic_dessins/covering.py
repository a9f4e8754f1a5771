"""Combinatorial covering-space calculus for finite group actions.

Given a generating vector for a group action (for triangular actions,
the generating pair plus the derived third element), this module
computes the covering surface's genus through the Riemann-Hurwitz
formula, fixed-point counts of individual elements through the coset
stabiliser formula, genera and signatures of intermediate quotients,
and the full census of triangular actions of a dicyclic group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InadmissibleSignatureError, ParameterError
from .group import DicyclicGroup, GroupElement, Subgroup


@dataclass(frozen=True)
class OrbifoldSignature:
    """Orientable quotient-orbifold datum: genus plus cone-point orders."""

    quotient_genus: int
    cone_orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.quotient_genus < 0:
            raise InadmissibleSignatureError("quotient genus must be >= 0")
        if any(m < 2 for m in self.cone_orders):
            raise InadmissibleSignatureError("cone orders must be >= 2")
        object.__setattr__(self, "cone_orders", tuple(self.cone_orders))

    def unordered(self) -> tuple[int, ...]:
        return tuple(sorted(self.cone_orders))


def rh_genus(group_order: int, sig: OrbifoldSignature) -> int:
    """Genus of the covering surface by Riemann-Hurwitz.

    Solves 2g - 2 = N * (2*gamma - 2 + sum(1 - 1/m)) for g and insists
    on a non-negative integer; anything else is an inadmissible
    signature for a group of this order.
    """
    if group_order < 1:
        raise ParameterError(f"group order must be >= 1, got {group_order}")
    total = Fraction(2 * sig.quotient_genus - 2)
    for m in sig.cone_orders:
        total += 1 - Fraction(1, m)
    g = 1 + Fraction(group_order) * total / 2
    if g.denominator != 1 or g < 0:
        raise InadmissibleSignatureError(
            f"signature {sig} with group order {group_order} gives genus {g}"
        )
    return int(g)


@dataclass
class TriangularAction:
    """A triangular action, as a generating triple with product one.

    The triple is (c1, c2, c3) with c1*c2*c3 = 1 and <c1, c2> the whole
    group; the quotient orbifold is the sphere with three cone points of
    orders (|c1|, |c2|, |c3|).
    """

    group: DicyclicGroup
    c: tuple[GroupElement, GroupElement, GroupElement]

    def __post_init__(self) -> None:
        c1, c2, c3 = self.c
        if not (c1 * c2 * c3).is_identity():
            raise ParameterError("triple does not multiply to the identity")
        if self.group.subgroup_generated([c1, c2]).order != self.group.order:
            raise ParameterError("pair does not generate the group")
        if any(ci.order() < 2 for ci in self.c):
            raise ParameterError("triangular actions need all three orders >= 2")

    @classmethod
    def from_pair(cls, group: DicyclicGroup, g0: GroupElement, g1: GroupElement) -> "TriangularAction":
        return cls(group, (g0, g1, (g0 * g1).inverse()))

    @property
    def quotient_genus(self) -> int:
        return 0

    @property
    def cone_images(self) -> tuple[GroupElement, ...]:
        return self.c

    @cached_property
    def signature(self) -> OrbifoldSignature:
        return OrbifoldSignature(0, tuple(ci.order() for ci in self.c))

    def genus(self) -> int:
        return rh_genus(self.group.order, self.signature)


@dataclass
class GeneratingVector:
    """Images of the standard Fuchsian generators under a surjection.

    hyperbolic_images holds the 2*gamma' images (a1, b1, ..., ag, bg) of
    the handle generators; cone_images the elliptic images, whose exact
    orders are the cone orders (torsion-free kernel).
    """

    group: DicyclicGroup
    quotient_genus: int
    hyperbolic_images: tuple[GroupElement, ...]
    cone_images: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        if len(self.hyperbolic_images) != 2 * self.quotient_genus:
            raise ParameterError(
                f"need {2 * self.quotient_genus} hyperbolic images, "
                f"got {len(self.hyperbolic_images)}"
            )
        if any(c.order() < 2 for c in self.cone_images):
            raise ParameterError("cone images must be nontrivial")
        prod = self.group.identity
        hi = self.hyperbolic_images
        for i in range(self.quotient_genus):
            a, b = hi[2 * i], hi[2 * i + 1]
            prod = prod * a * b * a.inverse() * b.inverse()
        for c in self.cone_images:
            prod = prod * c
        if not prod.is_identity():
            raise ParameterError("long relation fails for these images")
        gens = list(self.hyperbolic_images) + list(self.cone_images)
        if self.group.subgroup_generated(gens).order != self.group.order:
            raise ParameterError("images do not generate the group")

    @cached_property
    def signature(self) -> OrbifoldSignature:
        return OrbifoldSignature(
            self.quotient_genus, tuple(c.order() for c in self.cone_images)
        )

    def genus(self) -> int:
        return rh_genus(self.group.order, self.signature)


Action = TriangularAction | GeneratingVector


# -- fixed points ------------------------------------------------------


def fixed_point_count(act: Action, g: GroupElement) -> int:
    """Number of fixed points of g on the covering surface.

    Counts, for each cone image c, the cosets h<c> with h^-1 g h in <c>;
    the condition is constant on cosets since <c> normalises itself.
    """
    if g.is_identity():
        raise ParameterError("the identity fixes every point")
    group = act.group
    total = 0
    for c in act.cone_images:
        cyc = group.cyclic(c).members
        hits = sum(
            1 for h in group.elements if h.inverse() * g * h in cyc
        )
        total += hits // len(cyc)
    return total


def free_elements(act: Action) -> list[GroupElement]:
    """Nontrivial elements acting without fixed points, sorted."""
    return sorted(
        g
        for g in act.group.elements
        if not g.is_identity() and fixed_point_count(act, g) == 0
    )


def is_purely_non_free(act: Action) -> tuple[bool, list[GroupElement]]:
    """True iff every nontrivial element has a fixed point.

    Returns the witness list of freely acting elements (empty when the
    action is purely non-free).
    """
    witnesses = free_elements(act)
    return (len(witnesses) == 0, witnesses)


# -- intermediate quotients --------------------------------------------


def _coset_cycles(group: DicyclicGroup, H: Subgroup, c: GroupElement) -> list[int]:
    """Cycle lengths of left multiplication by c on the cosets G/H."""
    members = H.members
    rep_of: dict[GroupElement, GroupElement] = {}
    for g in group.elements:
        rep_of[g] = min(g * h for h in members)
    cosets = sorted(set(rep_of.values()))
    lengths = []
    unseen = set(cosets)
    while unseen:
        start = min(unseen)
        length = 0
        cur = start
        while True:
            unseen.discard(cur)
            length += 1
            cur = rep_of[c * cur]
            if cur == start:
                break
        lengths.append(length)
    return lengths


def quotient_genus(act: Action, H: Subgroup) -> int:
    """Genus of the intermediate quotient S/H.

    Riemann-Hurwitz through the branched cover S/H -> S/G of degree
    [G:H]: each cycle of a cone image on G/H of length L contributes
    L - 1 to the branching.
    """
    group = act.group
    sheets = group.order // H.order
    branch = 0
    for c in act.cone_images:
        branch += sum(length - 1 for length in _coset_cycles(group, H, c))
    g2 = 2 * (1 + sheets * (act.quotient_genus - 1)) + branch
    if g2 % 2 != 0:
        raise InadmissibleSignatureError("odd Euler defect; H is not a subgroup?")
    return g2 // 2


def quotient_signature(act: Action, H: Subgroup) -> OrbifoldSignature:
    """Signature of S/H: genus plus the cone orders left downstairs.

    A cycle of length L of a cone image of order m yields a cone point
    of order m/L whenever m/L > 1.
    """
    group = act.group
    orders = []
    for c in act.cone_images:
        m = c.order()
        for length in _coset_cycles(group, H, c):
            if m % length != 0:
                raise InadmissibleSignatureError(
                    "coset cycle length does not divide the cone order"
                )
            if m // length > 1:
                orders.append(m // length)
    return OrbifoldSignature(quotient_genus(act, H), tuple(sorted(orders)))


# -- triangular census -------------------------------------------------


@dataclass
class CensusEntry:
    """All generating pairs whose ordered signature is a fixed triple."""

    signature: tuple[int, int, int]
    pair_count: int
    conjugacy_orbits: int
    automorphism_orbits: int
    representative: TriangularAction


@dataclass
class ActionCensus:
    n: int
    entries: list[CensusEntry]

    def unordered_types(self) -> dict[tuple[int, ...], dict[str, int]]:
        """Aggregate the ordered entries by unordered signature type."""
        out: dict[tuple[int, ...], dict[str, int]] = {}
        for entry in self.entries:
            key = tuple(sorted(entry.signature))
            agg = out.setdefault(
                key,
                {"pair_count": 0, "conjugacy_orbits": 0, "automorphism_orbits": 0,
                 "ordered_types": 0},
            )
            agg["pair_count"] += entry.pair_count
            agg["conjugacy_orbits"] += entry.conjugacy_orbits
            agg["automorphism_orbits"] += entry.automorphism_orbits
            agg["ordered_types"] += 1
        return out

    def total_pairs(self) -> int:
        return sum(e.pair_count for e in self.entries)


def _orbit_count(pairs: set[tuple[int, int]], moves) -> int:
    """Orbits of an explicit family of pair moves on a pair set."""
    unseen = set(pairs)
    count = 0
    while unseen:
        start = min(unseen)
        frontier = [start]
        unseen.discard(start)
        while frontier:
            p = frontier.pop()
            for move in moves:
                q = move(p)
                if q in unseen:
                    unseen.discard(q)
                    frontier.append(q)
        count += 1
    return count


def triangular_census(n: int) -> ActionCensus:
    """Classify all ordered generating pairs of the dicyclic group.

    Pairs are grouped by ordered signature (|g0|, |g1|, |(g0 g1)^-1|);
    each group reports its orbit counts both under simultaneous
    conjugation and under the full automorphism group.  The two counts
    genuinely differ (e.g. n=2 has 6 conjugacy orbits but a single
    automorphism orbit), which is why both are kept.
    """
    if n < 2:
        raise ParameterError(f"census needs n >= 2, got n={n}")
    group = DicyclicGroup(n)
    N = group.order
    table = group.mul_table
    inv = group.inverse_table
    orders = group.order_table

    # generating pairs, as index pairs
    generates: dict[tuple[int, int], bool] = {}

    def pair_generates(i: int, j: int) -> bool:
        key = (i, j) if i <= j else (j, i)
        if key not in generates:
            generates[key] = len(group._closure_indices(key)) == N
        return generates[key]

    by_sig: dict[tuple[int, int, int], set[tuple[int, int]]] = {}
    for i in range(N):
        for j in range(N):
            k = inv[table[i][j]]
            if orders[i] < 2 or orders[j] < 2 or orders[k] < 2:
                continue
            if not pair_generates(i, j):
                continue
            sig = (orders[i], orders[j], orders[k])
            by_sig.setdefault(sig, set()).add((i, j))

    conj_moves = [
        (lambda p, h=h: (table[table[h][p[0]]][inv[h]], table[table[h][p[1]]][inv[h]]))
        for h in range(N)
    ]
    aut_moves = [
        (lambda p, perm=perm: (perm[p[0]], perm[p[1]]))
        for perm in group.automorphism_index_perms()
    ]

    entries = []
    for sig in sorted(by_sig):
        pairs = by_sig[sig]
        i, j = min(pairs)
        rep = TriangularAction.from_pair(
            group, group.element_at(i), group.element_at(j)
        )
        entries.append(
            CensusEntry(
                signature=sig,
                pair_count=len(pairs),
                conjugacy_orbits=_orbit_count(pairs, conj_moves),
                automorphism_orbits=_orbit_count(pairs, aut_moves),
                representative=rep,
            )
        )
    return ActionCensus(n, entries)


def census_representative(n: int, case: str) -> TriangularAction:
    """Representative triangular action for case I or II.

    Case I is the ordered signature (4, 4, 2n) (any n >= 2); case II is
    (4, 4, n) and needs n >= 3 odd.
    """
    group = DicyclicGroup(n)
    if case == "I":
        target = (4, 4, 2 * n)
    elif case == "II":
        if n % 2 == 0 or n < 3:
            raise ParameterError("case II needs n >= 3 odd")
        target = (4, 4, n)
    else:
        raise ParameterError(f"case must be 'I' or 'II', got {case!r}")
    for entry in triangular_census(n).entries:
        if entry.signature == target:
            return entry.representative
    raise ParameterError(f"no action of signature {target} for n={n}")
