"""
Entries and windows of the Pascal array P[i][j] = C(i + j, i)

Indices are zero-based. binom() is memoized and fills its table with the
step P[i][j] = P[i-1][j] * (i + j) / i; binom_direct() is the cache-free
multiplicative path used for cross-checking.
"""

import logging

from pascal_det.exceptions import DomainError, NonExactDivisionError
from pascal_det.memo import WARM_STEP, memoized
from pascal_det.models import as_index

logger = logging.getLogger(__name__)


@memoized("binom")
def _binom(i, j):
    if i == 0 or j == 0:
        return 1
    if i > j:
        i, j = j, i
    # P[i][j] = P[i-1][j] * (i + j) / i, always exact
    return _binom(i - 1, j) * (i + j) // i


def _entry(i, j):
    if i > j:
        i, j = j, i
    # fill the column from the edge so the table never recurses far
    for t in range(WARM_STEP, i, WARM_STEP):
        _binom(t, j)
    return _binom(i, j)


def binom(idx):
    """
    Pascal array entry C(i + j, i)

    Args:
        idx: GridIndex or (i, j) pair with non-negative components

    Returns:
        int: the binomial coefficient
    """
    idx = as_index(idx)
    return _entry(idx.i, idx.j)


def binom_direct(idx):
    """C(i + j, i) by the multiplicative formula, without any cache"""
    idx = as_index(idx)
    n, r = idx.i + idx.j, min(idx.i, idx.j)
    value = 1
    for t in range(1, r + 1):
        # value * (n - r + t) is always divisible by t at this point
        value = value * (n - r + t) // t
    return value


def pascal_window(origin, rows, cols):
    """
    Materialize a rows×cols block of the Pascal array

    Args:
        origin: top-left GridIndex of the block
        rows (int): number of rows, at least 1
        cols (int): number of columns, at least 1

    Returns:
        tuple: rows of ints, entry (r, c) = binom(origin.i + r, origin.j + c)
    """
    origin = as_index(origin)
    if rows < 1 or cols < 1:
        raise DomainError(f"window dimensions must be positive, got {rows}x{cols}")
    return tuple(
        tuple(_entry(origin.i + r, origin.j + c) for c in range(cols))
        for r in range(rows)
    )


def narayana(n, r):
    """Narayana number N(n, r) = C(n, r) * C(n, r - 1) / n"""
    if n < 1 or r < 1 or r > n:
        raise DomainError(f"Narayana numbers need 1 <= r <= n, got n={n}, r={r}")
    numerator = _entry(r, n - r) * _entry(r - 1, n - r + 1)
    quotient, remainder = divmod(numerator, n)
    if remainder:
        raise NonExactDivisionError(numerator, n, f"narayana({n}, {r})")
    return quotient
