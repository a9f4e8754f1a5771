"""Tests for signatures, Riemann-Hurwitz and the triangular census."""

import pytest

from dicyclic_dessins.covering import (
    OrbifoldSignature,
    census_representative,
    fixed_point_count,
    free_elements,
    is_purely_non_free,
    quotient_genus,
    quotient_signature,
    rh_genus,
    triangular_census,
)
from dicyclic_dessins.errors import InadmissibleSignatureError
from dicyclic_dessins.group import DicyclicGroup


# -- Riemann-Hurwitz ----------------------------------------------------


def test_rh_genus_of_triangular_signatures():
    for n in range(2, 13):
        assert rh_genus(4 * n, OrbifoldSignature(0, (4, 4, 2 * n))) == n
        if n % 2 == 1:
            assert rh_genus(4 * n, OrbifoldSignature(0, (4, 4, n))) == n - 1


def test_rh_genus_rejects_non_integral():
    with pytest.raises(InadmissibleSignatureError):
        rh_genus(12, OrbifoldSignature(0, (4, 4, 5)))


def test_rh_genus_unramified():
    # 2g - 2 = N(2*gamma - 2) with no cone points
    assert rh_genus(5, OrbifoldSignature(2, ())) == 6


# -- census -------------------------------------------------------------


def test_census_even_n_single_type():
    for n in (2, 4, 6):
        census = triangular_census(n)
        assert sorted(census.unordered_types()) == [tuple(sorted((4, 4, 2 * n)))]
        assert all(e.automorphism_orbits == 1 for e in census.entries)


def test_census_odd_n_two_types():
    for n in (3, 5):
        census = triangular_census(n)
        expected = sorted([tuple(sorted((4, 4, n))), tuple(sorted((4, 4, 2 * n)))])
        assert sorted(census.unordered_types()) == expected
        assert all(e.automorphism_orbits == 1 for e in census.entries)


def test_census_n2_counts():
    census = triangular_census(2)
    (entry,) = census.entries
    assert entry.signature == (4, 4, 4)
    assert entry.pair_count == 24
    assert entry.conjugacy_orbits == 6
    assert entry.automorphism_orbits == 1


def test_census_representatives_are_generating_triples():
    for n in range(2, 7):
        for case in ("I",) if n % 2 == 0 else ("I", "II"):
            act = census_representative(n, case)
            c1, c2, c3 = act.c
            assert (c1 * c2 * c3).is_identity()
            expected_genus = n if case == "I" else n - 1
            assert act.genus() == expected_genus


# -- fixed points -------------------------------------------------------


def test_case_I_fixed_point_counts():
    for n in range(2, 9):
        G = DicyclicGroup(n)
        act = census_representative(n, "I")
        assert fixed_point_count(act, G.x) == 2
        assert fixed_point_count(act, G.element(n)) == 2 + 2 * n
        assert fixed_point_count(act, G.y) == 2
        assert fixed_point_count(act, G.x * G.y) == 2


def test_case_I_purely_non_free():
    for n in range(2, 8):
        act = census_representative(n, "I")
        pure, free = is_purely_non_free(act)
        assert pure
        assert free == []


def test_case_II_free_elements():
    for n in (3, 5, 7):
        G = DicyclicGroup(n)
        act = census_representative(n, "II")
        expected = sorted(G.element(k) for k in range(1, 2 * n, 2) if k != n)
        assert sorted(free_elements(act)) == expected
        pure, _ = is_purely_non_free(act)
        assert not pure


def test_fixed_points_satisfy_riemann_hurwitz():
    # cross-oracle: summing fixed points over nontrivial elements must
    # reproduce the genus through the Riemann-Hurwitz formula
    for n in range(2, 7):
        for case in ("I",) if n % 2 == 0 else ("I", "II"):
            G = DicyclicGroup(n)
            act = census_representative(n, case)
            total = sum(
                fixed_point_count(act, g)
                for g in G.elements
                if not g.is_identity()
            )
            assert 2 * act.genus() - 2 == -2 * G.order + total


# -- quotients ----------------------------------------------------------


def test_quotient_by_full_group_is_base():
    for n in (2, 3, 4):
        G = DicyclicGroup(n)
        act = census_representative(n, "I")
        full = G.subgroup_generated([G.x, G.y])
        assert quotient_genus(act, full) == 0


def test_quotient_genus_central_involution_zero():
    for n in range(2, 8):
        G = DicyclicGroup(n)
        act = census_representative(n, "I")
        H = G.cyclic(G.element(n))
        assert quotient_genus(act, H) == 0


def test_quotient_signature_by_y():
    # S/<y> has signature (0; 4, 4, 2, ..., 2) with n twos
    for n in (2, 3, 4, 5):
        G = DicyclicGroup(n)
        act = census_representative(n, "I")
        sig = quotient_signature(act, G.cyclic(G.y))
        assert sig.quotient_genus == 0
        assert sorted(sig.cone_orders) == sorted([4, 4] + [2] * n)


def test_quotient_signature_by_x():
    # S/<x> carries four cone points: order 2 over 0 and infinity, and
    # order 2n over each of +1 and -1 (the printed three-point form is
    # not Riemann-Hurwitz consistent)
    for n in (2, 3, 4):
        G = DicyclicGroup(n)
        act = census_representative(n, "I")
        sig = quotient_signature(act, G.cyclic(G.x))
        assert sig.quotient_genus == 0
        assert sorted(sig.cone_orders) == [2, 2, 2 * n, 2 * n]


def test_quotient_genus_exceptions_match_hand_computation():
    # odd-order subgroups of <x> that avoid x^n give positive genus;
    # hand Riemann-Hurwitz on w^2 = z(z^(2n)-1): x^2 (n=3) fixes only
    # the two points over 0 and infinity, forcing genus one
    G3 = DicyclicGroup(3)
    act = census_representative(3, "I")
    assert quotient_genus(act, G3.cyclic(G3.element(2))) == 1
    G6 = DicyclicGroup(6)
    act6 = census_representative(6, "I")
    assert quotient_genus(act6, G6.cyclic(G6.element(4))) == 2


def test_quotient_genus_zero_for_subgroups_containing_involution():
    # the genus-zero counting argument covers exactly the subgroups that
    # contain the hyperelliptic involution x^n; verify that scope
    for n in range(2, 8):
        G = DicyclicGroup(n)
        center = G.element(n)
        for case in ("I",) if n % 2 == 0 else ("I", "II"):
            act = census_representative(n, case)
            for H in G.subgroups:
                if H.is_trivial() or center not in H:
                    continue
                assert quotient_genus(act, H) == 0, (n, case, H)


def test_quotient_genus_constant_on_conjugate_subgroups():
    G = DicyclicGroup(4)
    act = census_representative(4, "I")
    for H in G.subgroups:
        if H.is_trivial():
            continue
        base = quotient_genus(act, H)
        for g in G.elements:
            K = G.subgroup_generated(
                [g * h * g.inverse() for h in H.members]
            )
            assert quotient_genus(act, K) == base


def test_quotient_signature_reproduces_genus():
    # RH through the intermediate quotient recovers the surface genus
    for n in (2, 3, 5):
        G = DicyclicGroup(n)
        act = census_representative(n, "I")
        for H in G.subgroups:
            if H.is_trivial() or H.order == G.order:
                continue
            sig = quotient_signature(act, H)
            assert rh_genus(H.order, sig) == act.genus()
