"""Tests for permutations, the explicit monodromy pair and dessin data."""

import pytest
from hypothesis import given, strategies as st

from dicyclic_dessins.covering import census_representative
from dicyclic_dessins.monodromy import (
    Permutation,
    build_remark_permutations,
    dessin_genus_matches_rh,
    export_dot,
    graph_of,
    is_doubled_cycle,
    permutation_group_order,
    regular_dessin,
    remark_dessin,
    verify_remark_relations,
)


# -- permutation utilities ---------------------------------------------


def test_from_cycles_roundtrip():
    p = Permutation.from_cycles(5, [(1, 2, 3)])
    assert p(1) == 2 and p(3) == 1 and p(4) == 4
    assert p.cycles() == [(1, 2, 3)]
    assert p.order() == 3


def test_composition_convention():
    # (p * q)(i) = p(q(i))
    p = Permutation.from_cycles(3, [(1, 2)])
    q = Permutation.from_cycles(3, [(2, 3)])
    assert (p * q)(3) == 1


@st.composite
def permutations(draw, degree=6):
    images = draw(st.permutations(range(1, degree + 1)))
    return Permutation(tuple(images))


@given(permutations(), permutations())
def test_inverse_of_product(p, q):
    assert (p * q).inverse() == q.inverse() * p.inverse()


@given(permutations())
def test_cycle_type_sums_to_degree(p):
    assert sum(p.cycle_type()) == p.degree
    assert (p ** p.order()).is_identity()


def test_permutation_group_order_symmetric():
    gens = [
        Permutation.from_cycles(4, [(1, 2)]),
        Permutation.from_cycles(4, [(1, 2, 3, 4)]),
    ]
    assert permutation_group_order(gens) == 24


# -- the explicit pair --------------------------------------------------


def test_remark_relations_hold_for_all_small_n():
    for n in range(2, 51):
        result = verify_remark_relations(n)
        assert result["all_pass"], (n, result["checks"])


def test_pair_generates_group_of_order_4n():
    for n in range(2, 13):
        eta, sigma = build_remark_permutations(n)
        assert permutation_group_order([eta, sigma]) == 4 * n


def test_sigma_has_order_four():
    for n in range(2, 10):
        _, sigma = build_remark_permutations(n)
        assert sigma.order() == 4


# -- dessins ------------------------------------------------------------


def test_remark_dessin_case_I():
    for n in range(2, 8):
        dessin = remark_dessin(n, "I")
        assert dessin.is_transitive()
        assert dessin.genus() == n
        assert dessin.monodromy_group_order() == 4 * n
        # regular: automorphism count equals edge count
        assert dessin.automorphism_count() == 4 * n


def test_remark_dessin_case_II():
    for n in (3, 5, 7):
        dessin = remark_dessin(n, "II")
        assert dessin.is_transitive()
        assert dessin.genus() == n - 1
        assert dessin.monodromy_group_order() == 4 * n


def test_case_II_requires_odd_n():
    with pytest.raises(Exception):
        remark_dessin(4, "II")


def test_case_I_passport():
    # white and black vertices have valence 4, faces have 2n sides
    for n in (2, 3, 4):
        dessin = remark_dessin(n, "I")
        white, black, face = dessin.passport()
        assert set(white) == {4}
        assert set(black) == {4}
        assert set(face) == {2 * n}


def test_regular_dessin_matches_remark_dessin():
    for n in (2, 3, 4, 5):
        for case in ("I",) if n % 2 == 0 else ("I", "II"):
            act = census_representative(n, case)
            dessin = regular_dessin(act)
            assert dessin.genus() == remark_dessin(n, case).genus()
            assert dessin_genus_matches_rh(act)


def test_case_I_graph_is_doubled_cycle():
    for n in range(2, 7):
        graph = graph_of(remark_dessin(n, "I"))
        assert graph.vertex_count == 2 * n
        assert graph.edge_count == 4 * n
        assert is_doubled_cycle(graph, 2 * n)
        assert not is_doubled_cycle(graph, 2 * n + 1)


def test_case_II_graph_is_also_a_doubled_cycle():
    # same underlying graph as case I; only the face structure differs
    for n in (3, 5):
        graph = graph_of(remark_dessin(n, "II"))
        assert is_doubled_cycle(graph, 2 * n)


def test_dot_export_is_deterministic():
    graph = graph_of(remark_dessin(3, "I"))
    first = export_dot(graph)
    second = export_dot(graph_of(remark_dessin(3, "I")))
    assert first == second
    assert first.startswith("graph ")
    assert "w0" in first and "b0" in first
