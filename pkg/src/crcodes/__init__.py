"""Verification toolkit for binary completely regular codes in the Hamming graph."""

from .classify import classify_large_distance, enumerate_candidates, verify_theorem
from .designs import BlockSet, design_lambda, intersection_numbers, max_strength, weight_class
from .equivalence import are_equivalent, canonical_form
from .errors import CapacityError, InputError
from .hypercube import Automorphism, Code, apply_code, distance, parse_code, read_code, weight
from .linear import LinearCode, external_distance, hamming_7_4
from .regularity import (
    antipodal_check,
    covering_radius,
    distance_partition,
    equitable_intersection_array,
    is_completely_regular,
    outer_distribution_check,
)

__all__ = [
    "Automorphism",
    "BlockSet",
    "CapacityError",
    "Code",
    "InputError",
    "LinearCode",
    "antipodal_check",
    "apply_code",
    "are_equivalent",
    "canonical_form",
    "classify_large_distance",
    "covering_radius",
    "design_lambda",
    "distance",
    "distance_partition",
    "enumerate_candidates",
    "equitable_intersection_array",
    "external_distance",
    "hamming_7_4",
    "intersection_numbers",
    "is_completely_regular",
    "max_strength",
    "outer_distribution_check",
    "parse_code",
    "read_code",
    "verify_theorem",
    "weight",
    "weight_class",
]
