"""
pascal_det: exact Pascal determinantal arrays and their identities
"""

from pascal_det.det_arrays import (
    pd_algorithm,
    pd_closed_form,
    pd_condensation,
    pd_direct,
    pd_grid,
    pd_recursive,
)
from pascal_det.exact_det import det_bareiss, det_condensation, det_laplace
from pascal_det.models import DetGrid, GridIndex, Method
from pascal_det.pascal_core import binom, pascal_window

__version__ = "0.1.0"
