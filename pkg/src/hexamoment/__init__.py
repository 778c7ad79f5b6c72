"""Exact statistics of horizontal lozenges in random lozenge tilings of a hexagon."""

from .engine import cell_marginals, count_box, enumerate_box, expected_entries, sample_uniform
from .ppcore import BoxDims, PlanePartition, validate
from .stats import (
    closed_form_horizontal,
    closed_form_vertical,
    horizontal_moment,
    moment_report,
    prob_table,
    vertical_moment,
    verify_theorem,
)

__version__ = "0.1.0"
