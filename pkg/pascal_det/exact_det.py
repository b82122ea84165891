"""
Exact determinants of dense integer matrices

Three independent evaluators:

- det_laplace: cofactor expansion, the small-matrix oracle
- det_bareiss: fraction-free elimination with row exchanges
- det_condensation: Dodgson condensation on contiguous 2×2 minors

MinorSpec addressing is one-based, matching the A_r(i, j) notation of the
condensation formula; everything else here is zero-based.
"""

import logging

from pascal_det.config import Config
from pascal_det.exceptions import (
    DomainError,
    MinorRangeError,
    NonExactDivisionError,
    OracleCapExceeded,
    ZeroInteriorError,
)
from pascal_det.models import MinorSpec

logger = logging.getLogger(__name__)


def _as_entry(value):
    # ints or decimal strings of ints; floats and bools are never coerced
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DomainError(f"matrix entries must be integers, got {value!r}")
    try:
        return int(value)
    except ValueError:
        raise DomainError(f"matrix entries must be integers, got {value!r}")


def as_matrix(rows):
    """Validate a square grid and return it as a tuple of int tuples"""
    matrix = tuple(tuple(_as_entry(value) for value in row) for row in rows)
    n = len(matrix)
    if n == 0:
        raise DomainError("matrix must have at least one row")
    for row in matrix:
        if len(row) != n:
            raise DomainError(f"matrix must be square, got a row of length {len(row)} in a {n}-row matrix")
    return matrix


def exact_div(numerator, denominator, context=""):
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise NonExactDivisionError(numerator, denominator, context)
    return quotient


def det_laplace(m, cap=None):
    """
    Determinant by cofactor expansion along the first row

    Args:
        m: square integer matrix
        cap (int): largest accepted side; Config.LAPLACE_CAP when omitted

    Returns:
        int: the determinant
    """
    m = as_matrix(m)
    cap = Config.LAPLACE_CAP if cap is None else cap
    if len(m) > cap:
        raise OracleCapExceeded(len(m), cap)
    return _laplace(m)


def _laplace(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for c, pivot in enumerate(m[0]):
        if pivot == 0:
            continue
        minor = tuple(row[:c] + row[c + 1:] for row in m[1:])
        term = pivot * _laplace(minor)
        total += -term if c % 2 else term
    return total


def det_bareiss(m):
    """
    Determinant by fraction-free (Bareiss) elimination

    Every intermediate division is exact. A zero pivot is replaced by a row
    exchange with sign tracking; a column with no usable pivot means the
    matrix is singular.
    """
    a = [list(row) for row in as_matrix(m)]
    n = len(a)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((p for p in range(k + 1, n) if a[p][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(
                    a[i][j] * pivot - a[i][k] * a[k][j], previous, f"bareiss step {k}"
                )
            a[i][k] = 0
        previous = pivot
    return sign * a[n - 1][n - 1]


def contiguous_minor(m, spec):
    """
    The r×r block of m starting at one-based row spec.i, column spec.j

    Raises:
        MinorRangeError: if the block does not fit inside m
    """
    m = as_matrix(m)
    n = len(m)
    if spec.i + spec.r - 1 > n or spec.j + spec.r - 1 > n:
        raise MinorRangeError(f"minor {spec} does not fit in a {n}x{n} matrix")
    r0, c0 = spec.i - 1, spec.j - 1
    return tuple(row[c0:c0 + spec.r] for row in m[r0:r0 + spec.r])


def det_condensation(m):
    """
    Determinant by iterated Dodgson condensation

    Generation 1 is the input; generation g + 1 holds the contiguous 2×2
    minors of generation g divided entrywise by the interior of generation
    g - 1 (an all-ones grid for the first step).

    Raises:
        ZeroInteriorError: when a divisor is zero; det_bareiss still works
    """
    current = [list(row) for row in as_matrix(m)]
    n = len(current)
    previous = [[1] * (n + 1) for _ in range(n + 1)]
    generation = 1
    while len(current) > 1:
        size = len(current) - 1
        condensed = []
        for i in range(size):
            row = []
            for j in range(size):
                divisor = previous[i + 1][j + 1]
                if divisor == 0:
                    raise ZeroInteriorError(generation - 1, i + 1, j + 1)
                minor = current[i][j] * current[i + 1][j + 1] - current[i][j + 1] * current[i + 1][j]
                row.append(exact_div(minor, divisor, f"condensation generation {generation + 1}"))
            condensed.append(row)
        previous, current = current, condensed
        generation += 1
    return current[0][0]


def det_with_fallback(m):
    """Condensation first; on a zero interior recover with elimination"""
    try:
        return det_condensation(m)
    except ZeroInteriorError as e:
        logger.warning(f"Condensation failed ({e}); falling back to elimination")
        return det_bareiss(m)


def condensation_identity(m):
    """
    Both sides of A_{n-2}(2,2) * det(A) = NW * SE - NE * SW

    Args:
        m: square matrix with n >= 3

    Returns:
        tuple: (lhs, rhs) computed from five independent determinants
    """
    m = as_matrix(m)
    n = len(m)
    if n < 3:
        raise DomainError(f"the condensation identity needs n >= 3, got {n}")
    central = det_bareiss(contiguous_minor(m, MinorSpec(n - 2, 2, 2)))
    northwest = det_bareiss(contiguous_minor(m, MinorSpec(n - 1, 1, 1)))
    southeast = det_bareiss(contiguous_minor(m, MinorSpec(n - 1, 2, 2)))
    northeast = det_bareiss(contiguous_minor(m, MinorSpec(n - 1, 1, 2)))
    southwest = det_bareiss(contiguous_minor(m, MinorSpec(n - 1, 2, 1)))
    return central * det_bareiss(m), northwest * southeast - northeast * southwest
