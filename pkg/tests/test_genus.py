"""Tests for the minimal-genus searches."""

import pytest

from dicyclic_dessins.covering import fixed_point_count
from dicyclic_dessins.errors import ParameterError, SearchExhaustedError
from dicyclic_dessins.genus import (
    TORUS_SIGNATURES,
    SignatureCandidate,
    exists_generating_vector,
    pure_symmetric_genus,
    signature_candidates,
    strong_symmetric_genus,
    torus_exclusion_report,
)
from dicyclic_dessins.group import DicyclicGroup


def test_signature_candidates_are_rh_exact():
    from dicyclic_dessins.covering import rh_genus

    for n in (2, 3, 4):
        for g in (2, 3, 4):
            for cand in signature_candidates(n, g):
                assert rh_genus(4 * n, cand.signature) == g


def test_signature_candidates_reject_genus_below_two():
    with pytest.raises(ParameterError):
        signature_candidates(3, 1)


def test_strong_symmetric_genus_values():
    for n in (2, 3, 4, 5):
        expected = n if n % 2 == 0 else n - 1
        g, witness = strong_symmetric_genus(n, n + 2)
        assert g == expected
        gens = list(witness.hyperbolic_images) + list(witness.cone_images)
        G = DicyclicGroup(n)
        assert G.subgroup_generated(gens).order == G.order


def test_pure_symmetric_genus_values():
    for n in (2, 3, 4, 5):
        g, witness = pure_symmetric_genus(n, n + 2)
        assert g == n
        # purity cross-check against the coset fixed-point oracle:
        # on a genus-0 quotient a purely-non-free triangular witness
        # gives every element fixed points
        if witness.quotient_genus == 0 and len(witness.cone_images) == 3:
            from dicyclic_dessins.covering import TriangularAction

            act = TriangularAction(witness.group, tuple(witness.cone_images))
            G = witness.group
            for el in G.elements:
                if not el.is_identity():
                    assert fixed_point_count(act, el) > 0


def test_search_exhaustion_raises():
    with pytest.raises(SearchExhaustedError):
        # G_5 has no action below genus 4, so a cap of 3 must exhaust
        strong_symmetric_genus(5, 3)


def test_torus_exclusion():
    for n in (2, 3, 4, 5):
        report = torus_exclusion_report(n)
        assert len(report) == len(TORUS_SIGNATURES)
        assert all(report.values()), report


def test_flat_signatures_have_no_generating_vector():
    for n in (2, 3):
        for sig in TORUS_SIGNATURES:
            cand = SignatureCandidate(1, sig)
            assert exists_generating_vector(n, cand) is None


def test_strong_witness_is_minimal_signature_action():
    # for n even the minimum is attained by the triangular action itself
    for n in (2, 4):
        g, witness = strong_symmetric_genus(n, n + 1)
        assert witness.quotient_genus == 0
        assert sorted(c.order() for c in witness.cone_images) == sorted(
            (4, 4, 2 * n)
        )
