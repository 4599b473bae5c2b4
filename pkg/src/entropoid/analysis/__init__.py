"""Toy attacks, pattern-class statistics and table reproduction."""

from ..entropy import (PartitionReport, ShapeClass, entropy_collision, entropy_min,
                       entropy_renyi, entropy_shannon)
from .delp import delp_brute, delp_brute_all, delp_random, largest_odd_base
from .mitm import MitmReport, mitm_success_rate, mitm_toy_attack
from .shapes import (CollisionEstimate, collision_entropy_experiment, collision_entropy_sweep,
                     conjecture3_check, conjecture3_predict, largest_class_matches_prediction,
                     largest_class_prediction, min_entropy_closed_form, min_entropy_from_prediction, partition_xi, random_entropoid, trend_slope,
                     write_csv)
from .tables import GridReport, reproduce_tables, size_grid

__all__ = [
    "PartitionReport", "ShapeClass", "entropy_collision", "entropy_min", "entropy_renyi",
    "entropy_shannon", "delp_brute", "delp_brute_all", "delp_random", "largest_odd_base",
    "MitmReport", "mitm_success_rate", "mitm_toy_attack", "CollisionEstimate",
    "collision_entropy_experiment", "collision_entropy_sweep", "conjecture3_check",
    "conjecture3_predict", "largest_class_matches_prediction", "largest_class_prediction",
    "min_entropy_closed_form", "min_entropy_from_prediction",
    "partition_xi", "random_entropoid", "trend_slope", "write_csv", "GridReport",
    "reproduce_tables", "size_grid",
]
