"""
Weighted star-of-David machinery and identity checkers

Weights are reduced Fractions and equality always means equal reduced
forms. Entries of PD_q are read through the condensation recurrence, which
admits q = 0 (the all-ones array).

Every check_* function returns a CheckOutcome instead of a bare boolean so
sweeps can report the exact indices and both sides of a counterexample.
"""

import logging
from fractions import Fraction

from pascal_det.det_arrays import (
    pd_algorithm,
    pd_closed_form,
    pd_closed_form_diagonal,
    pd_closed_form_rewritten,
    pd_condensation,
    pd_direct,
    pd_recursive,
)
from pascal_det.exceptions import DomainError, PascalDetError
from pascal_det.models import (
    AnchoredRect,
    CheckOutcome,
    Cross,
    DoubleStick,
    GridIndex,
    as_index,
)
from pascal_det.pascal_core import binom, narayana

logger = logging.getLogger(__name__)


def _entry(order, idx):
    return pd_condensation(order, idx)


def _product(values):
    result = 1
    for value in values:
        result *= value
    return result


# ============================================================
# Rectangles
# ============================================================

def rect_weight(rect, array_order):
    """
    Weight of an anchored rectangle in PD_array_order

        P[i+m][j+l] * P[i][j] / (P[i+m][j] * P[i][j+l])
    """
    a = rect.anchor
    numerator = _entry(array_order, a.shifted(rect.m, rect.l)) * _entry(array_order, a)
    denominator = _entry(array_order, a.shifted(rect.m, 0)) * _entry(array_order, a.shifted(0, rect.l))
    return Fraction(numerator, denominator)


def check_star_of_david(order, rect, slide):
    """
    The rectangle weight is unchanged when the anchor moves from (i, j)
    to (i + slide, j - slide)

    Raises:
        DomainError: if the slid anchor leaves the quadrant
    """
    moved = AnchoredRect(rect.anchor.slid(slide), rect.m, rect.l)
    before = rect_weight(rect, order)
    after = rect_weight(moved, order)
    return CheckOutcome(
        identity="star",
        passed=before == after,
        indices={
            "order": order,
            "i": rect.anchor.i,
            "j": rect.anchor.j,
            "m": rect.m,
            "l": rect.l,
            "t": slide,
        },
        lhs=before,
        rhs=after,
    )


def unit_weights(rect, array_order):
    """Weights of the m*l unit rectangles tiling rect, row by row"""
    a = rect.anchor
    return [
        rect_weight(AnchoredRect(a.shifted(r, c), 1, 1), array_order)
        for r in range(rect.m)
        for c in range(rect.l)
    ]


def check_unit_tiling(order, rect):
    """A rectangle weight is the product of its unit-rectangle weights"""
    whole = rect_weight(rect, order)
    tiled = _product(unit_weights(rect, order))
    return CheckOutcome(
        identity="tiling",
        passed=whole == tiled,
        indices={"order": order, "i": rect.anchor.i, "j": rect.anchor.j, "m": rect.m, "l": rect.l},
        lhs=whole,
        rhs=tiled,
    )


def check_induction_step(order, i, j):
    """
    The unit weight of PD_{order+1} built from PD_order by condensation is
    unchanged by a one-step anti-diagonal slide of its anchor

    alpha, beta, gamma, theta are the order+1 entries at the corners of the
    unit square anchored at (i, j); each is a 2×2 condensation of PD_order
    over PD_{order-1}.
    """
    if j < 1:
        raise DomainError(f"the slid anchor needs j >= 1, got j={j}")

    def corners(anchor):
        alpha = _entry(order + 1, anchor)
        beta = _entry(order + 1, anchor.shifted(0, 1))
        gamma = _entry(order + 1, anchor.shifted(1, 0))
        theta = _entry(order + 1, anchor.shifted(1, 1))
        return Fraction(alpha * theta, beta * gamma)

    anchor = GridIndex(i, j)
    before = corners(anchor)
    after = corners(anchor.slid(1))
    return CheckOutcome(
        identity="induction",
        passed=before == after,
        indices={"order": order, "i": i, "j": j},
        lhs=before,
        rhs=after,
    )


# ============================================================
# Crosses
# ============================================================

def cross_weight(cross, array_order):
    """Product of the anti-diagonal arm over product of the main-diagonal arm"""
    numerator = _product(_entry(array_order, p) for p in cross.anti_arm())
    denominator = _product(_entry(array_order, p) for p in cross.main_arm())
    return Fraction(numerator, denominator)


def check_sliding_cross(order, corner, size, slide):
    """The cross weight is unchanged by an anti-diagonal slide of its corner"""
    corner = as_index(corner)
    cross = Cross(corner, size)
    moved = Cross(corner.slid(slide), size)
    before = cross_weight(cross, order)
    after = cross_weight(moved, order)
    return CheckOutcome(
        identity="cross",
        passed=before == after,
        indices={"order": order, "i": corner.i, "j": corner.j, "size": size, "t": slide},
        lhs=before,
        rhs=after,
    )


# ============================================================
# Product identity and double sticks
# ============================================================

def check_product_identity(k, j):
    """
    prod_{t=0..k} P[t][j+2(k-t)+1] = prod_{t=0..k} P[t][j+t]

    The first factor of each side is P[0][*] = 1; that is checked too.
    """
    if k < 1:
        raise DomainError(f"the product identity needs k >= 1, got {k}")
    lhs_factors = [binom((t, j + 2 * (k - t) + 1)) for t in range(k + 1)]
    rhs_factors = [binom((t, j + t)) for t in range(k + 1)]
    lhs, rhs = _product(lhs_factors), _product(rhs_factors)
    first_ones = lhs_factors[0] == rhs_factors[0] == 1
    return CheckOutcome(
        identity="product",
        passed=lhs == rhs and first_ones,
        indices={"k": k, "j": j},
        lhs=lhs,
        rhs=rhs,
        notes={"a1": str(lhs_factors[0]), "A1": str(rhs_factors[0])},
    )


def stick_entries(stick):
    """Pascal entries of the b stick and the r stick"""
    b = tuple(binom(p) for p in stick.b_positions())
    r = tuple(binom(p) for p in stick.r_positions())
    return b, r


def double_stick_weight(stick):
    """prod(b) / prod(r), which reduces to P^(order)[i][j]"""
    b, r = stick_entries(stick)
    return Fraction(_product(b), _product(r))


def double_stick_overlap(n, k, i):
    """
    Split the n-stick at (i, k) into the k-stick at (i, n) plus a shared factor

    Both sticks lie on the line x + y = i + n + k - 1. The n-stick's b entries
    are the k-stick's b entries plus an overlap, and its r entries are the
    k-stick's r entries plus the same overlap, so cancelling the overlap
    turns one weight into the other.

    Args:
        n (int): order of the larger stick, n >= k
        k (int): order of the smaller stick, k >= 1
        i (int): shared row index

    Returns:
        tuple: (weight of the n-stick, weight after cancelling the overlap)
    """
    if k < 1 or n < k:
        raise DomainError(f"overlap split needs n >= k >= 1, got n={n}, k={k}")
    large = DoubleStick(n, GridIndex(i, k))
    small = DoubleStick(k, GridIndex(i, n))

    small_b = set(small.b_positions())
    overlap = [p for p in large.b_positions() if p not in small_b]
    if len(overlap) != n - k or not small_b <= set(large.b_positions()):
        raise PascalDetError(f"b sticks of orders {n} and {k} at row {i} do not nest")
    if sorted(large.r_positions(), key=GridIndex.as_tuple) != sorted(
        small.r_positions() + overlap, key=GridIndex.as_tuple
    ):
        raise PascalDetError(f"r stick of order {n} is not the order-{k} stick plus the overlap")

    return double_stick_weight(large), double_stick_weight(small)


# ============================================================
# Determinantal identities
# ============================================================

def check_rahimpour(i, j):
    """P^(1)[i][j] = P^(j)[i][1]"""
    lhs = binom((i, j))
    rhs = pd_direct(j, (i, 1))
    return CheckOutcome(
        identity="rahimpour",
        passed=lhs == rhs,
        indices={"i": i, "j": j},
        lhs=lhs,
        rhs=rhs,
    )


def check_row_one(k, j):
    """P^(k)[1][j] = P^(1)[k][j]"""
    lhs = pd_direct(k, (1, j))
    rhs = binom((k, j))
    return CheckOutcome(
        identity="row-one",
        passed=lhs == rhs,
        indices={"k": k, "j": j},
        lhs=lhs,
        rhs=rhs,
    )


def check_generalized(i, j, k):
    """
    P^(k)[i][j] = P^(j)[i][k]

    Both sides come from window determinants. Each side is also compared
    with its double-stick closed form, and the larger stick is reduced to
    the smaller one by cancelling their overlap.
    """
    lhs = pd_direct(k, (i, j))
    rhs = pd_direct(j, (i, k))
    notes = {}
    passed = lhs == rhs

    if k >= 1 and pd_closed_form(k, (i, j)) != lhs:
        passed = False
        notes["lhs_closed_form"] = str(pd_closed_form(k, (i, j)))
    if j >= 1 and pd_closed_form(j, (i, k)) != rhs:
        passed = False
        notes["rhs_closed_form"] = str(pd_closed_form(j, (i, k)))
    if min(j, k) >= 1:
        full, cancelled = double_stick_overlap(max(j, k), min(j, k), i)
        if not (full == cancelled == lhs):
            passed = False
            notes["overlap"] = f"{full} vs {cancelled}"

    if not passed:
        logger.error(f"Generalized identity fails at i={i}, j={j}, k={k}: {lhs} != {rhs}")
    return CheckOutcome(
        identity="general",
        passed=passed,
        indices={"i": i, "j": j, "k": k},
        lhs=lhs,
        rhs=rhs,
        notes=notes,
    )


def check_double_stick(k, i, j):
    """The double-stick weight is an integer equal to P^(k)[i][j]"""
    weight = double_stick_weight(DoubleStick(k, GridIndex(i, j)))
    value = pd_direct(k, (i, j))
    return CheckOutcome(
        identity="stick",
        passed=weight.denominator == 1 and weight == value,
        indices={"k": k, "i": i, "j": j},
        lhs=weight,
        rhs=value,
    )


def check_closed_forms(k, i, j):
    """The diagonal-numerator closed form and its rewritten denominator agree"""
    diagonal = pd_closed_form_diagonal(k, (i, j))
    rewritten = pd_closed_form_rewritten(k, (i, j))
    return CheckOutcome(
        identity="closed-forms",
        passed=diagonal == rewritten,
        indices={"k": k, "i": i, "j": j},
        lhs=diagonal,
        rhs=rewritten,
    )


def check_narayana(i, j):
    """P^(2)[i][j] = N(i + j + 1, j + 1)"""
    lhs = pd_direct(2, (i, j))
    rhs = narayana(i + j + 1, j + 1)
    return CheckOutcome(
        identity="narayana",
        passed=lhs == rhs,
        indices={"i": i, "j": j},
        lhs=lhs,
        rhs=rhs,
    )


def check_route_agreement(k, i, j, algorithm_value=None):
    """
    Every route that admits order k returns the same P^(k)[i][j]

    Args:
        algorithm_value: entry taken from a prebuilt staged-algorithm grid;
            built on demand when omitted
    """
    idx = GridIndex(i, j)
    values = {"direct": pd_direct(k, idx), "condensation": pd_condensation(k, idx)}
    if k >= 1:
        values["recursive"] = pd_recursive(k, idx)
        values["closed_form"] = pd_closed_form(k, idx)
        if algorithm_value is None:
            grid, _ = pd_algorithm(k, i + 1, j + 1)
            algorithm_value = grid.entries[i][j]
        values["algorithm"] = algorithm_value
    distinct = set(values.values())
    odd_one = next((value for value in values.values() if value != values["direct"]), values["direct"])
    return CheckOutcome(
        identity="routes",
        passed=len(distinct) == 1,
        indices={"k": k, "i": i, "j": j},
        lhs=values["direct"],
        rhs=odd_one,
        notes={} if len(distinct) == 1 else {name: str(value) for name, value in values.items()},
    )
