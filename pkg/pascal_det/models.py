"""
Domain types for Pascal determinantal arrays

Integers are Python ints (arbitrary precision) and ratios are reduced
fractions.Fraction values throughout.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from pascal_det.exceptions import DomainError

# A dense grid of integers, row-major; square when used as a determinant input
Matrix = Tuple[Tuple[int, ...], ...]
Value = Union[int, Fraction]


class Method(str, enum.Enum):
    """Routes for building a Pascal determinantal array"""
    DIRECT = "direct"
    ALGORITHM = "algorithm"
    RECURSIVE = "recursive"
    CONDENSATION = "condensation"
    CLOSED_FORM = "closed_form"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        try:
            return cls(text.replace("-", "_"))
        except ValueError:
            raise DomainError(f"unknown method {text!r}")


@dataclass(frozen=True)
class GridIndex:
    """Zero-based (row, column) position in the Pascal array"""
    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise DomainError(f"grid indices must be non-negative, got ({self.i}, {self.j})")

    def shifted(self, di, dj):
        return GridIndex(self.i + di, self.j + dj)

    def slid(self, t):
        """Move t steps along the anti-diagonal, keeping i + j fixed"""
        if self.i + t < 0 or self.j - t < 0:
            raise DomainError(f"slide {t} moves ({self.i}, {self.j}) out of the quadrant")
        return GridIndex(self.i + t, self.j - t)

    def as_tuple(self):
        return (self.i, self.j)


def as_index(idx):
    """Accept a GridIndex or an (i, j) pair"""
    if isinstance(idx, GridIndex):
        return idx
    i, j = idx
    return GridIndex(i, j)


@dataclass(frozen=True)
class MinorSpec:
    """An r×r contiguous minor starting at one-based row i, column j"""
    r: int
    i: int
    j: int

    def __post_init__(self):
        if self.r < 1 or self.i < 1 or self.j < 1:
            raise DomainError(f"minor spec components must be positive, got {self}")


@dataclass(frozen=True)
class DetGrid:
    """A finite window of the determinantal array PD_order"""
    order: int
    origin: GridIndex
    rows: int
    cols: int
    entries: Matrix

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"order must be non-negative, got {self.order}")
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DomainError(f"entries do not match a {self.rows}x{self.cols} window")

    def at(self, i, j):
        """Entry at absolute array position (i, j)"""
        return self.entries[i - self.origin.i][j - self.origin.j]

    def to_dict(self):
        return {
            "order": self.order,
            "origin": [self.origin.i, self.origin.j],
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(value) for value in row] for row in self.entries],
        }

    @classmethod
    def from_dict(cls, data):
        i, j = data["origin"]
        return cls(
            order=int(data["order"]),
            origin=GridIndex(int(i), int(j)),
            rows=int(data["rows"]),
            cols=int(data["cols"]),
            entries=tuple(tuple(int(value) for value in row) for row in data["entries"]),
        )


@dataclass(frozen=True)
class AlgorithmTrace:
    """Intermediate arrays of the last stage of the staged algorithm"""
    renamed: Matrix
    quotient: Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class AnchoredRect:
    """Rectangle with its anchor (circled vertex) at the top-left corner"""
    anchor: GridIndex
    m: int
    l: int

    def __post_init__(self):
        if self.m < 1 or self.l < 1:
            raise DomainError(f"rectangle extents must be at least 1, got m={self.m}, l={self.l}")


@dataclass(frozen=True)
class Cross:
    """The two diagonals of a size×size bounding square"""
    corner: GridIndex
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise DomainError(f"cross size must be at least 1, got {self.size}")

    def main_arm(self):
        return [self.corner.shifted(t, t) for t in range(self.size)]

    def anti_arm(self):
        return [self.corner.shifted(t, self.size - 1 - t) for t in range(self.size)]


@dataclass(frozen=True)
class DoubleStick:
    """
    Two order-length segments on the line x + y = i + j + order - 1.

    The b stick starts at (i + order - 1, j) and walks up to (i, j + order - 1);
    the r stick starts on the array edge at (i + j + order - 1, 0).
    """
    order: int
    idx: GridIndex

    def __post_init__(self):
        if self.order < 1:
            raise DomainError(f"double stick order must be at least 1, got {self.order}")

    @property
    def line(self):
        return self.idx.i + self.idx.j + self.order - 1

    def b_positions(self):
        i, j, k = self.idx.i, self.idx.j, self.order
        return [GridIndex(i + k - t, j + t - 1) for t in range(1, k + 1)]

    def r_positions(self):
        s, k = self.idx.i + self.idx.j, self.order
        return [GridIndex(s + k - t, t - 1) for t in range(1, k + 1)]


def format_value(value):
    """Decimal string for ints, 'p/q' for non-integral ratios"""
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


@dataclass(frozen=True)
class CheckOutcome:
    """Result of checking one identity instance"""
    identity: str
    passed: bool
    indices: Dict[str, int]
    lhs: Optional[Value] = None
    rhs: Optional[Value] = None
    notes: Dict[str, str] = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_dict(self):
        data = {
            "indices": dict(self.indices),
            "lhs": format_value(self.lhs),
            "rhs": format_value(self.rhs),
        }
        if self.notes:
            data["notes"] = dict(self.notes)
        return data


@dataclass(frozen=True)
class CheckReport:
    """Summary of an identity sweep"""
    identity: str
    ranges: Dict[str, object]
    checked: int
    failures: List[CheckOutcome]
    elapsed_ms: float

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            "identity": self.identity,
            "ranges": dict(self.ranges),
            "checked": self.checked,
            "failures": [outcome.to_dict() for outcome in self.failures],
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass(frozen=True)
class BenchRecord:
    """Timing of one evaluation route, in milliseconds"""
    method: Method
    order: int
    idx: GridIndex
    iters: int
    total_ms: float
    value: int

    @property
    def per_call_ms(self):
        return self.total_ms / self.iters
