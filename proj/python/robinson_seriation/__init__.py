"""Asymmetric Robinson seriation.

Matrices are lists of rows, vertices are 0-based indices, orientations are
lists of ``(u, v)`` arcs meaning ``u -> v``.
"""

from ._robinson import (
    InputError,
    PreconditionError,
    RefusalError,
    assign_star,
    brute_optimal_orientation,
    brute_robinson_subset,
    brute_two_way,
    build_assignment_instance,
    build_orientation_instance,
    build_subset_instance,
    check_compatible,
    count_xi,
    is_one_way_order,
    is_two_way_order,
    orient_path,
    orient_star,
    orient_tree,
    petals,
    recognize_two_way,
    test_c1p,
    witness_orientation,
)

__all__ = [
    "InputError",
    "PreconditionError",
    "RefusalError",
    "assign_star",
    "brute_optimal_orientation",
    "brute_robinson_subset",
    "brute_two_way",
    "build_assignment_instance",
    "build_orientation_instance",
    "build_subset_instance",
    "check_compatible",
    "count_xi",
    "is_one_way_order",
    "is_two_way_order",
    "orient_path",
    "orient_star",
    "orient_tree",
    "petals",
    "recognize_two_way",
    "test_c1p",
    "witness_orientation",
]

__version__ = "0.1.0"
