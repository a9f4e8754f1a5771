"""Tests for the exponent-triple classification of the cyclic covers."""

import pytest

from dicyclic_dessins.covers import (
    admissible_triples,
    canonical_representatives,
    class_count,
    condition_readings_report,
    normalize,
    orbit,
)
from dicyclic_dessins.errors import ParameterError


def test_first_exponent_is_forced_to_n():
    for n in range(2, 10):
        for case in ("I",) if n % 2 == 0 else ("I", "II"):
            assert all(t.a == n for t in admissible_triples(n, case))


def test_exponent_sum_condition():
    for n in (2, 3, 4, 5):
        for case in ("I",) if n % 2 == 0 else ("I", "II"):
            for t in admissible_triples(n, case):
                assert (t.b + t.c) % (2 * n) == 0


def test_single_class_everywhere():
    for n in range(2, 13):
        assert class_count(n, "I") == 1
        if n % 2 == 1:
            assert class_count(n, "II") == 1


def test_canonical_representatives():
    for n in range(2, 13):
        assert [t.as_tuple() for t in canonical_representatives(n, "I")] == [
            (n, 1, 2 * n - 1)
        ]
        if n % 2 == 1:
            assert [t.as_tuple() for t in canonical_representatives(n, "II")] == [
                (n, 2, 2 * n - 2)
            ]


def test_case_II_needs_odd_n():
    with pytest.raises(ParameterError):
        admissible_triples(4, "II")


def test_orbit_closed_under_normalization():
    for n in (3, 4, 5):
        for t in admissible_triples(n, "I"):
            rep, size = normalize(t)
            assert rep in orbit(t)
            assert size == len(orbit(t))
            # normalization is idempotent
            assert normalize(rep)[0] == rep


def test_orbits_partition_the_admissible_set():
    for n in (3, 4, 6):
        triples = admissible_triples(n, "I")
        seen = set()
        for t in triples:
            seen.update(u.as_tuple() for u in orbit(t) if u in triples)
        assert seen == {t.as_tuple() for t in triples}


def test_condition_readings_diverge_only_for_odd_n():
    # the two printed gcd readings agree for even n and differ for odd
    # n, where the weaker one also admits the other family's cover
    for n in range(2, 13):
        report = condition_readings_report(n)
        assert report["readings_agree"] == (n % 2 == 0), report
