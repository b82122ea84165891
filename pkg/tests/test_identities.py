from fractions import Fraction

import pytest

from pascal_det.det_arrays import pd_closed_form_diagonal, pd_closed_form_rewritten, pd_direct
from pascal_det.exceptions import DomainError
from pascal_det.identities import (
    check_closed_forms,
    check_double_stick,
    check_generalized,
    check_induction_step,
    check_narayana,
    check_product_identity,
    check_rahimpour,
    check_route_agreement,
    check_row_one,
    check_sliding_cross,
    check_star_of_david,
    check_unit_tiling,
    cross_weight,
    double_stick_overlap,
    double_stick_weight,
    rect_weight,
    stick_entries,
)
from pascal_det.models import AnchoredRect, Cross, DoubleStick, GridIndex
from pascal_det.pascal_core import binom


def rect(i, j, m=1, l=1):
    return AnchoredRect(GridIndex(i, j), m, l)


@pytest.mark.parametrize("anchor, expected", [
    ((0, 1), Fraction(3, 2)),
    ((1, 0), Fraction(3, 2)),
    ((0, 0), Fraction(2)),
])
def test_rect_weight_examples(anchor, expected):
    assert rect_weight(rect(*anchor), 1) == expected


def test_rect_weight_in_the_ones_array():
    assert rect_weight(rect(3, 4, 2, 3), 0) == 1


def test_star_of_david_examples():
    assert check_star_of_david(1, rect(0, 1), 1).passed
    outcome = check_star_of_david(2, rect(0, 2, 1, 2), 2)
    assert outcome.passed
    assert outcome.lhs == outcome.rhs
    with pytest.raises(DomainError):
        check_star_of_david(1, rect(0, 0), 1)


def test_star_of_david_holds_on_low_orders():
    for order in range(5):
        for s in range(11):
            for j in range(s + 1):
                i = s - j
                for m in range(1, 5):
                    for l in range(1, 5):
                        for t in range(1, j + 1):
                            assert check_star_of_david(order, rect(i, j, m, l), t).passed


def test_rectangle_weight_is_the_product_of_unit_weights():
    for order in range(5):
        for i in range(5):
            for j in range(5):
                for m in range(1, 5):
                    for l in range(1, 5):
                        assert check_unit_tiling(order, rect(i, j, m, l)).passed


def test_induction_step_quantities():
    for order in range(4):
        for i in range(6):
            for j in range(1, 6):
                assert check_induction_step(order, i, j).passed
    with pytest.raises(DomainError):
        check_induction_step(1, 2, 0)


@pytest.mark.parametrize("corner, size, expected", [
    ((0, 0), 2, Fraction(1, 2)),
    ((0, 1), 3, Fraction(3, 10)),
    ((1, 0), 3, Fraction(3, 10)),
    ((4, 4), 1, Fraction(1)),
])
def test_cross_weight_examples(corner, size, expected):
    assert cross_weight(Cross(GridIndex(*corner), size), 1) == expected


def test_cross_arms_share_the_center():
    cross = Cross(GridIndex(2, 3), 5)
    assert cross.main_arm()[2] == cross.anti_arm()[2] == GridIndex(4, 5)
    assert cross.anti_arm()[0] == GridIndex(2, 7)


def test_sliding_cross_examples():
    assert check_sliding_cross(1, (0, 1), 3, 1).passed
    assert check_sliding_cross(2, (0, 2), 2, 1).passed
    assert check_sliding_cross(1, (0, 0), 2, 0).passed
    with pytest.raises(DomainError):
        check_sliding_cross(1, (0, 0), 2, 1)


def test_size_two_cross_slides_to_row_zero():
    for order in range(1, 5):
        for i in range(5):
            for j in range(5):
                moved = cross_weight(Cross(GridIndex(i, j), 2), order)
                assert moved == cross_weight(Cross(GridIndex(0, i + j), 2), order)


def test_sliding_cross_holds_on_low_orders():
    for order in range(5):
        for s in range(11):
            for j in range(s + 1):
                for size in range(1, 6):
                    for t in range(1, j + 1):
                        assert check_sliding_cross(order, (s - j, j), size, t).passed


@pytest.mark.parametrize("k, j, value", [(1, 0, 2), (2, 0, 12)])
def test_product_identity_examples(k, j, value):
    outcome = check_product_identity(k, j)
    assert outcome.passed
    assert outcome.lhs == outcome.rhs == value
    assert outcome.notes == {"a1": "1", "A1": "1"}


def test_product_identity_sweep():
    for k in range(1, 9):
        for j in range(11):
            assert check_product_identity(k, j).passed
    assert check_product_identity(3, 2).passed


def test_double_stick_examples():
    assert double_stick_weight(DoubleStick(1, GridIndex(3, 4))) == binom((3, 4))
    stick = DoubleStick(2, GridIndex(1, 1))
    assert stick_entries(stick) == ((3, 3), (1, 3))
    assert double_stick_weight(stick) == 3
    assert double_stick_weight(DoubleStick(3, GridIndex(0, 2))) == 1


def test_double_stick_lies_on_one_line():
    stick = DoubleStick(4, GridIndex(2, 5))
    for p in stick.b_positions() + stick.r_positions():
        assert p.i + p.j == stick.line == 2 + 5 + 3
    assert stick.r_positions()[0] == GridIndex(10, 0)


def test_double_stick_equals_the_determinant():
    for k in range(1, 6):
        for i in range(9):
            for j in range(9):
                assert check_double_stick(k, i, j).passed


def test_two_closed_forms_agree():
    for k in range(1, 6):
        for i in range(7):
            for j in range(7):
                outcome = check_closed_forms(k, i, j)
                assert outcome.passed
                assert pd_closed_form_diagonal(k, (i, j)) == pd_closed_form_rewritten(k, (i, j))


@pytest.mark.parametrize("i, j, passed", [(1, 2, True), (0, 5, True), (3, 0, True)])
def test_rahimpour_examples(i, j, passed):
    outcome = check_rahimpour(i, j)
    assert outcome.passed is passed
    assert outcome.lhs == outcome.rhs == binom((i, j))


def test_rahimpour_sweep():
    for i in range(13):
        for j in range(9):
            assert check_rahimpour(i, j)


def test_row_one_corollary():
    for k in range(1, 7):
        for j in range(9):
            assert check_row_one(k, j).passed


def test_generalized_examples():
    outcome = check_generalized(0, 3, 2)
    assert outcome.passed and outcome.lhs == outcome.rhs == 1
    assert check_generalized(1, 2, 1).passed
    assert check_generalized(2, 4, 3).passed
    assert check_generalized(5, 0, 3).passed


def test_generalized_identity_sweep():
    for i in range(9):
        for j in range(9):
            for k in range(1, 7):
                outcome = check_generalized(i, j, k)
                assert outcome.passed, outcome
                assert outcome.notes == {}


def test_generalized_outcome_is_symmetric_in_j_and_k():
    for i in range(5):
        for j in range(1, 5):
            for k in range(1, 5):
                forward = check_generalized(i, j, k)
                backward = check_generalized(i, k, j)
                assert forward.passed == backward.passed
                assert (forward.lhs, forward.rhs) == (backward.rhs, backward.lhs)


def test_overlap_cancellation():
    full, cancelled = double_stick_overlap(5, 2, 1)
    assert full == cancelled == pd_direct(2, (1, 5)) == pd_direct(5, (1, 2))
    full, cancelled = double_stick_overlap(3, 3, 4)
    assert full == cancelled == pd_direct(3, (4, 3))
    with pytest.raises(DomainError):
        double_stick_overlap(2, 3, 0)


def test_narayana_check():
    for i in range(11):
        for j in range(11):
            if i + j:
                assert check_narayana(i, j).passed


def test_route_agreement():
    for k in range(5):
        assert check_route_agreement(k, 2, 3).passed
    outcome = check_route_agreement(3, 1, 1, algorithm_value=999)
    assert not outcome.passed
    assert outcome.rhs == 999
    assert outcome.notes["algorithm"] == "999"
