"""Exact self-stress spaces and stratification censuses for small
 tensegrity frameworks."""

from ._stressforge import (
    StressforgeError,
    census,
    check_condition,
    classify_k4,
    fiber_signature,
    lambda4_counts,
    lambda4_svg,
    lambda5_counts,
    on_condition_sample,
    stress_space,
    surgery1,
    two_sum,
    witness_search,
    __version__,
)

__all__ = [
    "StressforgeError",
    "census",
    "check_condition",
    "classify_k4",
    "fiber_signature",
    "lambda4_counts",
    "lambda4_svg",
    "lambda5_counts",
    "on_condition_sample",
    "stress_space",
    "surgery1",
    "two_sum",
    "witness_search",
    "__version__",
]
