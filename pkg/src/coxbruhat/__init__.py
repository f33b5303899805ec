"""Bruhat order and parabolic double cosets in finite Coxeter groups."""

from .bruhat import bruhat_leq, bruhat_leq_oracle, covers, induced_subposet
from .core import CoxeterSpec, CoxeterSystem, Element, GenSubset, build_system, parse_type
from .errors import CoxeterError
from .parabolic import (
    cross_section,
    decompose_double,
    double_coset_elements,
    double_coset_min_reps,
    max_rep,
    min_coset_reps,
    parabolic_components_right,
    relative_longest,
    theorem1_compare,
)

__all__ = [
    "CoxeterError",
    "CoxeterSpec",
    "CoxeterSystem",
    "Element",
    "GenSubset",
    "bruhat_leq",
    "bruhat_leq_oracle",
    "build_system",
    "covers",
    "cross_section",
    "decompose_double",
    "double_coset_elements",
    "double_coset_min_reps",
    "induced_subposet",
    "max_rep",
    "min_coset_reps",
    "parabolic_components_right",
    "parse_type",
    "relative_longest",
    "theorem1_compare",
]
