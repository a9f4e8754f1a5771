"""Numeric tests for the explicit curve families."""

import pytest

from dicyclic_dessins.curves import (
    ADMISSION_TOLERANCE,
    CurveModel,
    applicable_models,
    belyi_projection,
    root_of_unity,
    verify_anticonformal,
    verify_belyi,
    verify_dicyclic_relations,
    verify_word,
)
from dicyclic_dessins.errors import ParameterError


def test_unknown_model_rejected():
    with pytest.raises(ParameterError):
        CurveModel("bogus", 2)


def test_r_models_need_odd_n():
    with pytest.raises(ParameterError):
        CurveModel("Rn_hyperelliptic", 4)
    with pytest.raises(ParameterError):
        CurveModel("Rn_cyclic", 2)


def test_sn_cyclic_needs_even_n():
    # for odd n the printed second-coordinate formula lands off the
    # curve by an exact sign: image relation value is (-1)^n times the
    # right-hand side
    with pytest.raises(ParameterError):
        CurveModel("Sn_cyclic", 3)


def test_sample_points_lie_on_curve():
    for n in (2, 3):
        for name in applicable_models(n):
            model = CurveModel(name, n)
            points = model.sample_points(100, seed=0)
            assert len(points) == 100
            assert all(model.residual(p) < ADMISSION_TOLERANCE for p in points)


def test_sample_points_deterministic():
    model = CurveModel("Sn_hyperelliptic", 2)
    assert model.sample_points(20, seed=7) == model.sample_points(20, seed=7)
    assert model.sample_points(20, seed=7) != model.sample_points(20, seed=8)


def test_sample_rejects_zero_count():
    with pytest.raises(ParameterError):
        CurveModel("Sn_hyperelliptic", 2).sample_points(0, seed=0)


def test_exact_branch_point_is_admissible():
    model = CurveModel("Sn_hyperelliptic", 2)
    assert model.on_curve((1 + 0j, 0j))


def test_dicyclic_relations_all_models_n_2_to_8():
    for n in range(2, 9):
        for name in applicable_models(n):
            model = CurveModel(name, n)
            for report in verify_dicyclic_relations(model):
                assert report.passed, (n, name, report.description,
                                       report.max_error)


def test_t_map_on_s2():
    model = CurveModel("Sn_hyperelliptic", 2)
    report = verify_word(model, [("t", 3)], "identity")
    assert report.passed


def test_t_map_absent_for_larger_n():
    assert "t" not in CurveModel("Sn_hyperelliptic", 3).maps


def test_belyi_reports():
    for n in (2, 3, 4):
        for name in ("Sn_hyperelliptic", "Rn_hyperelliptic"):
            if name.startswith("Rn") and n % 2 == 0:
                continue
            report = verify_belyi(CurveModel(name, n))
            assert report["pass"], report


def test_belyi_special_values():
    # z^n = 1 maps to 0 and z^n = -1 maps to 1
    assert abs(belyi_projection(3, (1 + 0j, 0j))) < 1e-15
    z = root_of_unity(6)  # z^3 = -1
    assert abs(belyi_projection(3, (z, 0j)) - 1) < 1e-12


def test_anticonformal_reports():
    for n in (2, 3, 5):
        for name in ("Sn_hyperelliptic", "Rn_hyperelliptic"):
            if name.startswith("Rn") and n % 2 == 0:
                continue
            for report in verify_anticonformal(CurveModel(name, n)):
                assert report.passed, report


def test_anticonformal_parity_guard():
    # equating tau to a conformal map must be rejected, not near-passed
    model = CurveModel("Sn_hyperelliptic", 2)
    report = verify_word(model, [("tau", 1)], [("x", 2)])
    assert not report.passed
    assert "parity" in report.note


def test_word_reports_are_seed_stable():
    model = CurveModel("Sn_hyperelliptic", 3)
    a = verify_word(model, [("x", 6)], "identity", seed=5)
    b = verify_word(model, [("x", 6)], "identity", seed=5)
    assert a.max_error == b.max_error


def test_perturbation_control_fails_loudly():
    # a 1e-2 coefficient perturbation must push errors past 1e-3 on
    # every applicable model: the checks have teeth
    for n in range(2, 9):
        for name in applicable_models(n):
            model = CurveModel(name, n).perturbed(1e-2)
            worst = max(
                r.max_error for r in verify_dicyclic_relations(model)
            )
            assert worst > 1e-3, (n, name, worst)


def test_cyclic_model_residuals_stay_relative():
    # at n=8 the cyclic right-hand sides are huge; the relative residual
    # keeps honest points admissible
    model = CurveModel("Sn_cyclic", 8)
    points = model.sample_points(50, seed=1)
    assert all(model.residual(p) < ADMISSION_TOLERANCE for p in points)
