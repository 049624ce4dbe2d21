"""Tests for the isoperimetric machinery.

Frozen decimals were produced with mpmath at 50 digits (see
scripts/run_all_verifications.py for the recipe) and pasted here.
"""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fillgeo.errors import DomainError, ValidationError
from fillgeo.isoperim import (
    GridSpec,
    IsoperimetricInstance,
    PolygonFamily,
    check_instance,
    classify_equality,
    df_dx,
    example_3_12_instance,
    f,
    merge_sequence,
    random_instance,
    second_derivative_all_negative,
    verify_example_3_12,
    verify_lemma_3_2,
    verify_lemma_3_3,
    verify_lemma_3_4,
    verify_merge_properties,
    verify_prop_3_5,
    verify_prop_3_6,
    verify_theorem_3_1,
)
from fillgeo.polygeom import (
    RegularPolygonSpec,
    area_from_angle,
    perimeter_from_area,
)

# mpmath 50-digit oracle values for the counterexample instance
P6_OF_4_99 = 11.190174475172462452
P3_OF_0_01 = 0.456560749522328498
P5_OF_5 = 12.506292399049253568
EXAMPLE_MARGIN = 0.359557174354462619


def test_f_zero_at_x0_bitwise():
    for n in (5, 8, 12, 40):
        for a in (0.0, 1.0, math.pi, 4.0):
            assert f(n, a, 0.0) == 0.0


def test_f_positive_samples():
    assert f(12, 3.0 * math.pi + 1.0, 1.0) > 0.0
    assert f(5, 2.0, 0.5) > 0.0
    # x = a collapses the remainder: f = P_4(a) - P_6(a)
    value = f(6, math.pi, math.pi)
    expect = perimeter_from_area(4, math.pi) - perimeter_from_area(6, math.pi)
    assert value == pytest.approx(expect, rel=1e-12)
    assert value > 0.0


def test_f_domain():
    with pytest.raises(DomainError):
        f(8, 1.0, 1.5)
    with pytest.raises(DomainError):
        f(8, 1.0, -0.1)


def test_df_dx_positive_and_diverges_near_zero():
    assert df_dx(12, 3.0 * math.pi, 1.0) > 0.0
    # P_4 has a square-root cusp at zero area, so the derivative blows up
    assert df_dx(12, 3.0 * math.pi, 1e-8) > 1e3
    assert df_dx(30, 6.0 * math.pi, 1e-8) > 1e3


def test_df_dx_matches_finite_differences():
    rng = random.Random(7)
    h = 1e-7
    for _ in range(100):
        n = rng.randint(8, 64)
        a_hi = (n / 2.0 - 2.0) * math.pi
        a = rng.uniform(1.5 * math.pi, a_hi)
        x = rng.uniform(h * 10, min(a - math.pi, 2.0 * math.pi) - h * 10)
        fd = (f(n, a, x + h) - f(n, a, x - h)) / (2.0 * h)
        exact = df_dx(n, a, x)
        assert fd == pytest.approx(exact, rel=1e-5, abs=1e-7)


def test_df_dx_domain():
    with pytest.raises(DomainError):
        df_dx(8, 1.0, 0.0)
    with pytest.raises(DomainError):
        df_dx(8, 1.0, 1.0)


def test_gridspec_validates():
    with pytest.raises(ValidationError):
        GridSpec(a_steps=1)
    with pytest.raises(ValidationError):
        GridSpec(x_steps=0)


def test_lemma_3_2_reduced_grid():
    report = verify_lemma_3_2(GridSpec(n_values=tuple(range(8, 25)), a_steps=8, x_steps=8))
    assert report.passed
    assert report.min_value > 0.0
    assert report.details["constant"] == pytest.approx(1.29521, abs=5e-6)
    assert report.details["constant"] > 1.0


def test_lemma_3_3_sign_change():
    for n in (4, 6, 12, 20):
        report = verify_lemma_3_3(n, samples=2000)
        assert report.passed, report.text()
        assert report.details["sign_changes"] == 1
        assert report.details["criterion_mismatches"] == 0


def test_lemma_3_3_domain():
    with pytest.raises(DomainError):
        verify_lemma_3_3(3)
    with pytest.raises(DomainError):
        verify_lemma_3_3(8, samples=10)


def test_restricted_concavity_small_n():
    # over the shorter window (0, (n/2-2)*pi) the second derivative
    # never goes positive for pentagons and hexagons
    for n in (5, 6):
        upper = (n / 2.0 - 2.0) * math.pi
        assert second_derivative_all_negative(n, upper, samples=2000)


def test_lemma_3_4_documented_range_decreasing():
    for n in (7, 8, 9, 10):
        report = verify_lemma_3_4(n, samples=2000)
        assert report.passed, report.text()
        assert report.details["decreasing"]
        assert report.details["auxiliary_constant"] > 0.0


def test_lemma_3_4_small_n_decreasing():
    for n in (5, 6):
        report = verify_lemma_3_4(n, samples=2000)
        assert report.passed
        assert report.details["decreasing"]


def test_lemma_3_4_large_n_violation():
    report = verify_lemma_3_4(30, samples=2000)
    assert report.passed
    assert not report.details["decreasing"]
    assert report.details["violation_near_x"] is not None
    # the failure window sits near the right end of the domain
    assert report.details["violation_near_x"] > 30.0


def test_lemma_3_4_undocumented_band():
    report = verify_lemma_3_4(15, samples=500)
    assert report.passed
    assert report.details["expected"] == "undocumented"


def test_lemma_3_4_domain():
    with pytest.raises(DomainError):
        verify_lemma_3_4(4)


def test_prop_3_5_reduced():
    report = verify_prop_3_5(GridSpec(samples=400))
    assert report.passed, report.text()
    assert report.details["concavity_worst_second_difference"] < 0.0
    assert report.details["decreasing_min_drop"] > 0.0
    assert report.details["gap_min"] > 0.0
    assert report.details["gap_min_rise"] > 0.0


def test_prop_3_6_reduced():
    report = verify_prop_3_6(GridSpec(n_values=tuple(range(5, 21)), a_steps=16, x_steps=16))
    assert report.passed, report.text()
    assert report.min_value >= -1e-9
    assert report.details["near_zero_off_line"] == 0
    assert report.details["exact_zero_at_x0"]


def test_family_helpers():
    fam = PolygonFamily(((6, 2.0), (6, 2.0 * math.pi - 2.0)))
    assert fam.k == 2
    assert fam.total_area() == pytest.approx(2.0 * math.pi)
    assert fam.merged_sides() == 8
    assert fam.is_sorted_by_angle()
    rev = PolygonFamily(tuple(reversed(fam.items)))
    assert not rev.is_sorted_by_angle()
    assert rev.sorted_by_angle().items == fam.items


def test_check_instance_k1_equality():
    target = RegularPolygonSpec.from_area(8, 3.0)
    inst = IsoperimetricInstance(
        family=PolygonFamily(((8, 3.0),)), target=target
    )
    result = check_instance(inst)
    assert set(result) == {"lhs", "rhs", "holds", "equality"}
    assert result["holds"]
    assert result["equality"]
    assert result["lhs"] == result["rhs"]
    cls = classify_equality(inst)
    assert cls.expected_shape
    assert cls.nondegenerate_count == 1


def test_check_instance_k2_strict():
    area = area_from_angle(8, math.pi / 2.0)
    inst = IsoperimetricInstance(
        family=PolygonFamily(((6, 2.0), (6, area - 2.0))),
        target=RegularPolygonSpec.from_area(8, area),
    )
    result = check_instance(inst)
    assert result["holds"]
    assert not result["equality"]
    assert result["rhs"] > result["lhs"]


def test_validate_rejects_bad_instances():
    target = RegularPolygonSpec.from_area(8, 3.0)
    # side-count balance broken
    with pytest.raises(ValidationError):
        check_instance(
            IsoperimetricInstance(PolygonFamily(((7, 3.0),)), target)
        )
    # area total broken
    with pytest.raises(ValidationError):
        check_instance(
            IsoperimetricInstance(PolygonFamily(((8, 2.5),)), target)
        )
    # triangle member in strict mode
    tri_area = area_from_angle(7, math.pi / 2.0)
    with pytest.raises(ValidationError):
        check_instance(
            IsoperimetricInstance(
                PolygonFamily(((3, 0.5), (8, tri_area - 0.5))),
                RegularPolygonSpec.from_area(7, tri_area),
            )
        )
    # sharp target in strict mode
    with pytest.raises(ValidationError):
        check_instance(
            IsoperimetricInstance(
                PolygonFamily(((5, 5.0),)), RegularPolygonSpec.from_area(5, 5.0)
            )
        )
    # non-integer member side count
    with pytest.raises(ValidationError):
        check_instance(
            IsoperimetricInstance(PolygonFamily(((8.0, 3.0),)), target)
        )


def test_merge_sequence_k2():
    area = area_from_angle(8, math.pi / 2.0)
    inst = IsoperimetricInstance(
        family=PolygonFamily(((6, 2.0), (6, area - 2.0))),
        target=RegularPolygonSpec.from_area(8, area),
    )
    seq = merge_sequence(inst)
    assert len(seq.steps) == 2
    assert seq.steps[0].n == 6
    assert seq.steps[0].area == pytest.approx(2.0)
    assert seq.steps[1].n == 8
    assert seq.steps[1].area == pytest.approx(area, rel=1e-12)
    assert seq.steps[1].theta == pytest.approx(math.pi / 2.0, rel=1e-12)
    assert all(t >= math.pi / 2.0 - 1e-12 for t in seq.angles())


def test_merge_sequence_requires_sorted():
    area = area_from_angle(8, math.pi / 2.0)
    inst = IsoperimetricInstance(
        family=PolygonFamily(((6, area - 2.0), (6, 2.0))),
        target=RegularPolygonSpec.from_area(8, area),
    )
    with pytest.raises(ValidationError):
        merge_sequence(inst)


def test_classify_equality_fully_degenerate():
    inst = IsoperimetricInstance(
        family=PolygonFamily(((4, 0.0), (4, 0.0))),
        target=RegularPolygonSpec.from_area(4, 0.0),
    )
    result = check_instance(inst)
    assert result["equality"]
    cls = classify_equality(inst)
    assert cls.expected_shape
    assert cls.nondegenerate_count == 0


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=150)
def test_random_instances_hold(seed):
    inst = random_instance(random.Random(seed))
    result = check_instance(inst)
    assert result["holds"]
    if result["equality"]:
        assert classify_equality(inst).expected_shape


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=100)
def test_random_merge_angles(seed):
    inst = random_instance(random.Random(seed))
    seq = merge_sequence(inst)
    assert len(seq.steps) == inst.family.k
    for step in seq.steps:
        assert step.theta >= math.pi / 2.0 - 1e-12
    last = seq.steps[-1]
    assert int(last.n) == int(inst.target.n)
    assert last.area == pytest.approx(inst.target.area, abs=1e-12, rel=1e-12)


def test_theorem_3_1_reduced():
    report = verify_theorem_3_1(count=500, seed=0)
    assert report.passed, report.text()
    assert report.min_value >= -1e-9
    assert report.details["holds_failures"] == 0
    assert report.details["classifier_failures"] == 0


def test_merge_properties_reduced():
    report = verify_merge_properties(count=500, seed=0)
    assert report.passed, report.text()
    assert report.details["merge_angle_failures"] == 0
    assert report.details["final_step_mismatches"] == 0
    assert report.details["member_angle_bound_failures"] == 0


def test_example_instance_strict_rejected():
    with pytest.raises(ValidationError):
        check_instance(example_3_12_instance(strict=True))


def test_example_instance_permissive_fails_inequality():
    result = check_instance(example_3_12_instance(strict=False))
    assert not result["holds"]
    assert result["lhs"] > result["rhs"] + 0.5


def test_example_frozen_decimals():
    assert perimeter_from_area(6, 4.99) == pytest.approx(P6_OF_4_99, rel=1e-12)
    assert perimeter_from_area(3, 0.01) == pytest.approx(P3_OF_0_01, rel=1e-12)
    assert perimeter_from_area(5, 5.0) == pytest.approx(P5_OF_5, rel=1e-12)
    margin = P5_OF_5 - (P6_OF_4_99 + P3_OF_0_01 + 0.5)
    assert margin == pytest.approx(EXAMPLE_MARGIN, rel=1e-9)


def test_example_report():
    report = verify_example_3_12()
    assert report.passed, report.text()
    assert report.min_value == pytest.approx(EXAMPLE_MARGIN, rel=1e-9)
    assert report.details["strict_rejected"]
    assert not report.details["permissive_holds"]
    assert report.details["target_theta"] < math.pi / 2.0


def test_report_text_round_trip():
    report = verify_lemma_3_3(6, samples=500)
    text = report.text()
    assert "check=lemma_3_3_n6" in text
    assert "passed=true" in text
    data = report.as_dict()
    assert data["check_id"] == "lemma_3_3_n6"
    report.to_json()
