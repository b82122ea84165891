"""
Pascal determinantal arrays PD_k

P^(k)[i][j] is the determinant of the k×k block of the Pascal array whose
top-left entry is P[i][j]; PD_0 is the all-ones array by convention. The
routes below compute the same entries independently:

- pd_direct: elimination on the explicit window
- pd_algorithm: the staged rename / quotient / rescale procedure
- pd_recursive: P^(k+1)[i][j] = P^(k)[i+1][j+1] * P[i][j] / P^(k)[1][i+j+1]
- pd_condensation: the Dodgson recurrence over PD_{k-1} and PD_{k-2}
- pd_closed_form: the double-stick quotient of Pascal entries
"""

import logging
from fractions import Fraction

from pascal_det.exact_det import det_bareiss, exact_div
from pascal_det.exceptions import DomainError, InvalidOriginError, NonIntegralityError
from pascal_det.memo import WARM_STEP, memoized
from pascal_det.models import AlgorithmTrace, DetGrid, GridIndex, Method, as_index
from pascal_det.pascal_core import binom, pascal_window

logger = logging.getLogger(__name__)


def _check_order(k, minimum):
    if k < minimum:
        raise DomainError(f"order must be at least {minimum}, got {k}")


def as_integer(value, context=""):
    """Reduce a Fraction that must be integral, or raise NonIntegralityError"""
    if value.denominator != 1:
        raise NonIntegralityError(value, context)
    return value.numerator


def pd_direct(k, idx):
    """Determinant of the k×k Pascal window at idx; 1 for k = 0"""
    _check_order(k, 0)
    idx = as_index(idx)
    if k == 0:
        return 1
    return det_bareiss(pascal_window(idx, k, k))


def pd_algorithm(k, rows, cols):
    """
    Build the top-left rows×cols window of PD_k by the staged procedure

    Starting from PD_1 = P, each stage drops row 0 and column 0 of the
    previous array (the renamed array R), divides every R[i][j] by
    R[0][i+j] (the quotient Q) and multiplies by P[i][j].

    Args:
        k (int): target order, at least 1
        rows (int): window rows
        cols (int): window columns

    Returns:
        tuple: (DetGrid, AlgorithmTrace of the final stage)
    """
    _check_order(k, 1)
    if rows < 1 or cols < 1:
        raise DomainError(f"window dimensions must be positive, got {rows}x{cols}")

    # Q reads R[0][i+j], so every earlier stage must be wider than the last
    shapes = [(rows, cols)]
    for _ in range(k - 1):
        r, c = shapes[-1]
        shapes.append((r + 1, r + c))
    shapes.reverse()

    r, c = shapes[0]
    current = pascal_window(GridIndex(0, 0), r, c)
    trace = AlgorithmTrace(renamed=(), quotient=())
    for stage, (r, c) in enumerate(shapes[1:], start=2):
        renamed = tuple(row[1:] for row in current[1:])
        quotient = tuple(
            tuple(Fraction(renamed[i][j], renamed[0][i + j]) for j in range(c))
            for i in range(r)
        )
        current = tuple(
            tuple(
                as_integer(quotient[i][j] * binom((i, j)), f"algorithm stage {stage} at ({i}, {j})")
                for j in range(c)
            )
            for i in range(r)
        )
        trace = AlgorithmTrace(
            renamed=tuple(row[:c] for row in renamed[:r]),
            quotient=quotient,
        )
        logger.debug(f"Algorithm stage {stage} built a {r}x{c} window")

    grid = DetGrid(order=k, origin=GridIndex(0, 0), rows=rows, cols=cols, entries=current)
    return grid, trace


@memoized("pd_recursive")
def _recursive(k, i, j):
    if k == 1:
        return binom((i, j))
    numerator = _recursive(k - 1, i + 1, j + 1) * binom((i, j))
    return exact_div(numerator, _recursive(k - 1, 1, i + j + 1), f"recursive P^({k})[{i}][{j}]")


def pd_recursive(k, idx):
    """P^(k)[i][j] by the top-down shift recursion, memoized on (k, i, j)"""
    _check_order(k, 1)
    idx = as_index(idx)
    i, j = idx.i, idx.j
    # order k - d only reads anti-diagonal i + j + 2d, rows 1..d and i + d
    for order in range(WARM_STEP, k, WARM_STEP):
        d = k - order
        for row in sorted({i + d, *range(1, d + 1)}):
            _recursive(order, row, i + j + 2 * d - row)
    return _recursive(k, i, j)


@memoized("pd_condensation")
def _condensed(k, i, j):
    if k == 0:
        return 1
    if k == 1:
        return binom((i, j))
    divisor = _condensed(k - 2, i + 1, j + 1)
    # entries of the Pascal family are positive
    assert divisor >= 1, f"non-positive divisor {divisor} at order {k - 2}"
    numerator = (
        _condensed(k - 1, i + 1, j + 1) * _condensed(k - 1, i, j)
        - _condensed(k - 1, i + 1, j) * _condensed(k - 1, i, j + 1)
    )
    return exact_div(numerator, divisor, f"condensation P^({k})[{i}][{j}]")


def pd_condensation(k, idx):
    """P^(k)[i][j] by the Dodgson recurrence with PD_0 = J and PD_1 = P"""
    _check_order(k, 0)
    idx = as_index(idx)
    # order k - d only reads the (d + 1)×(d + 1) block at idx
    for order in range(WARM_STEP, k, WARM_STEP):
        d = k - order
        for row in range(idx.i, idx.i + d + 1):
            for col in range(idx.j, idx.j + d + 1):
                _condensed(order, row, col)
    return _condensed(k, idx.i, idx.j)


def _product(values):
    result = 1
    for value in values:
        result *= value
    return result


def pd_closed_form(k, idx):
    """
    P^(k)[i][j] as the double-stick quotient

        prod_t P[i+k-t][j+t-1] / prod_t P[i+j+k-t][t-1],  t = 1..k
    """
    _check_order(k, 1)
    idx = as_index(idx)
    i, j = idx.i, idx.j
    numerator = _product(binom((i + k - t, j + t - 1)) for t in range(1, k + 1))
    denominator = _product(binom((i + j + k - t, t - 1)) for t in range(1, k + 1))
    return as_integer(Fraction(numerator, denominator), f"closed form P^({k})[{i}][{j}]")


def pd_closed_form_diagonal(k, idx):
    """
    P^(k)[i][j] with the main diagonal of the window as numerator

        prod_{t<k} P[i+t][j+t] / prod_{t=1..k-1} P[t][i+j+2(k-t)-1]
    """
    _check_order(k, 1)
    idx = as_index(idx)
    i, j = idx.i, idx.j
    numerator = _product(binom((i + t, j + t)) for t in range(k))
    denominator = _product(binom((t, i + j + 2 * (k - t) - 1)) for t in range(1, k))
    return as_integer(Fraction(numerator, denominator), f"diagonal form P^({k})[{i}][{j}]")


def pd_closed_form_rewritten(k, idx):
    """The diagonal form with its denominator rewritten as prod P[t][i+j+t]"""
    _check_order(k, 1)
    idx = as_index(idx)
    i, j = idx.i, idx.j
    numerator = _product(binom((i + t, j + t)) for t in range(k))
    denominator = _product(binom((t, i + j + t)) for t in range(1, k))
    return as_integer(Fraction(numerator, denominator), f"rewritten form P^({k})[{i}][{j}]")


_POINT_ROUTES = {
    Method.DIRECT: pd_direct,
    Method.RECURSIVE: pd_recursive,
    Method.CONDENSATION: pd_condensation,
    Method.CLOSED_FORM: pd_closed_form,
}


def route(method):
    """Single-entry evaluator for a method; the staged algorithm has none"""
    method = Method.parse(method)
    if method not in _POINT_ROUTES:
        raise DomainError(f"method {method.value} has no single-entry evaluator")
    return _POINT_ROUTES[method]


def pd_grid(k, origin, rows, cols, method=Method.DIRECT):
    """
    Fill a DetGrid with the selected route

    Args:
        k (int): order, 0 allowed (the all-ones array)
        origin: top-left GridIndex of the window
        rows (int), cols (int): window dimensions
        method (Method): evaluation route

    Returns:
        DetGrid
    """
    origin = as_index(origin)
    method = Method.parse(method)
    _check_order(k, 0)
    if rows < 1 or cols < 1:
        raise DomainError(f"window dimensions must be positive, got {rows}x{cols}")
    logger.info(f"Building PD_{k} {rows}x{cols} at {origin.as_tuple()} via {method.value}")

    if method is Method.ALGORITHM:
        if origin != GridIndex(0, 0):
            raise InvalidOriginError(f"the algorithm route starts at (0, 0), got {origin.as_tuple()}")
        if k == 0:
            entries = tuple(tuple(1 for _ in range(cols)) for _ in range(rows))
            return DetGrid(order=0, origin=origin, rows=rows, cols=cols, entries=entries)
        grid, _ = pd_algorithm(k, rows, cols)
        return grid

    if k == 0:
        entries = tuple(tuple(1 for _ in range(cols)) for _ in range(rows))
    else:
        evaluate = route(method)
        entries = tuple(
            tuple(evaluate(k, origin.shifted(r, c)) for c in range(cols))
            for r in range(rows)
        )
    return DetGrid(order=k, origin=origin, rows=rows, cols=cols, entries=entries)
