import logging

import pytest

from pascal_det.exact_det import (
    as_matrix,
    condensation_identity,
    contiguous_minor,
    det_bareiss,
    det_condensation,
    det_laplace,
    det_with_fallback,
)
from pascal_det.exceptions import (
    DomainError,
    MinorRangeError,
    OracleCapExceeded,
    ZeroInteriorError,
)
from pascal_det.models import MinorSpec
from pascal_det.pascal_core import pascal_window

A4 = (
    (1, 2, 3, 4),
    (5, 6, 7, 8),
    (9, 10, 11, 12),
    (13, 14, 15, 16),
)


def identity(n):
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


@pytest.mark.parametrize("matrix, expected", [
    (((5,),), 5),
    (((1, 1), (4, 5)), 1),
    (((1, 1, 1), (3, 4, 5), (6, 10, 15)), 1),
    (((1, 2, 3), (4, 0, 5), (6, 7, 8)), 45),
    (((2, 0, 0), (0, 3, 0), (0, 0, 4)), 24),
])
def test_determinants_agree_on_hand_examples(matrix, expected):
    assert det_laplace(matrix) == expected
    assert det_bareiss(matrix) == expected


def test_laplace_cap():
    with pytest.raises(OracleCapExceeded) as excinfo:
        det_laplace(identity(9))
    assert excinfo.value.n == 9
    assert excinfo.value.cap == 8
    assert det_laplace(identity(9), cap=9) == 1
    with pytest.raises(OracleCapExceeded):
        det_laplace(identity(3), cap=2)


def test_bareiss_examples():
    assert det_bareiss(identity(4)) == 1
    assert det_bareiss(pascal_window((0, 2), 3, 3)) == 1
    assert det_bareiss(identity(40)) == 1


@pytest.mark.parametrize("matrix, expected", [
    (((0, 1), (1, 0)), -1),
    (((1, 2), (2, 4)), 0),
    (((0, 0), (0, 0)), 0),
    (((0, 2, 1), (0, 1, 1), (3, 1, 1)), 3),
])
def test_bareiss_zero_pivots_and_singular_matrices(matrix, expected):
    assert det_bareiss(matrix) == det_laplace(matrix) == expected


def test_non_square_input_is_rejected():
    with pytest.raises(DomainError):
        as_matrix(((1, 2), (3,)))
    with pytest.raises(DomainError):
        det_bareiss(())


def test_contiguous_minor_blocks():
    assert contiguous_minor(A4, MinorSpec(2, 2, 2)) == ((6, 7), (10, 11))
    assert contiguous_minor(A4, MinorSpec(3, 1, 1)) == ((1, 2, 3), (5, 6, 7), (9, 10, 11))
    assert contiguous_minor(A4, MinorSpec(3, 2, 1)) == ((5, 6, 7), (9, 10, 11), (13, 14, 15))
    assert contiguous_minor(A4, MinorSpec(4, 1, 1)) == A4


def test_contiguous_minor_out_of_range():
    with pytest.raises(MinorRangeError):
        contiguous_minor(A4, MinorSpec(3, 3, 1))
    with pytest.raises(DomainError):
        MinorSpec(0, 1, 1)


@pytest.mark.parametrize("matrix, expected", [
    (((7,),), 7),
    (((1, 1), (4, 5)), 1),
    (((1, 1, 1), (3, 4, 5), (6, 10, 15)), 1),
])
def test_condensation_examples(matrix, expected):
    assert det_condensation(matrix) == expected


def test_condensation_zero_interior(zero_center):
    with pytest.raises(ZeroInteriorError) as excinfo:
        det_condensation(zero_center)
    assert (excinfo.value.generation, excinfo.value.row, excinfo.value.col) == (1, 1, 1)


def test_fallback_recovers_with_elimination(zero_center, caplog):
    with caplog.at_level(logging.WARNING, logger="pascal_det.exact_det"):
        assert det_with_fallback(zero_center) == 45
    assert "falling back" in caplog.text
    assert det_with_fallback(((1, 1), (4, 5))) == 1


def test_oracle_agreement_on_random_matrices(random_matrix):
    condensed = 0
    for sample in range(600):
        matrix = random_matrix(1 + sample % 6)
        expected = det_laplace(matrix)
        assert det_bareiss(matrix) == expected
        try:
            value = det_condensation(matrix)
        except ZeroInteriorError:
            continue
        assert value == expected
        condensed += 1
    assert condensed > 300


def test_condensation_identity_by_cofactor_expansion(random_matrix):
    tested = 0
    while tested < 200:
        a = random_matrix(4)
        central = det_laplace(contiguous_minor(a, MinorSpec(2, 2, 2)))
        if central == 0:
            continue
        nw = det_laplace(contiguous_minor(a, MinorSpec(3, 1, 1)))
        se = det_laplace(contiguous_minor(a, MinorSpec(3, 2, 2)))
        ne = det_laplace(contiguous_minor(a, MinorSpec(3, 1, 2)))
        sw = det_laplace(contiguous_minor(a, MinorSpec(3, 2, 1)))
        assert central * det_laplace(a) == nw * se - ne * sw
        assert condensation_identity(a) == (central * det_laplace(a), nw * se - ne * sw)
        tested += 1


def test_condensation_identity_needs_three_rows():
    with pytest.raises(DomainError):
        condensation_identity(((1, 2), (3, 4)))


def test_pascal_windows_never_hit_a_zero_interior():
    for i in range(11):
        for j in range(11):
            for k in range(1, 7):
                window = pascal_window((i, j), k, k)
                assert det_condensation(window) == det_bareiss(window)


def test_matrix_entries_must_be_integers():
    assert as_matrix([["12", "-3"], [4, 5]]) == ((12, -3), (4, 5))
    for bad in (1.5, 2.0, True, "1.5", None):
        with pytest.raises(DomainError):
            as_matrix([[bad, 0], [0, 2]])
