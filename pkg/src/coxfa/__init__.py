"""Coxeter group computations: word problem, classification, angles and FA_n verdicts."""

from coxfa.errors import CapExceeded, ClosureTooLarge, CoxeterError, GroupTooLarge, ParseError
from coxfa.system import INF, CoxeterSystem, format_system, induced_subsystem, parse_system
from coxfa.words import (
    double_coset_reduce,
    enumerate_group,
    equal,
    is_reduced,
    length,
    reduce,
    reduction_steps,
)
from coxfa.classify import (
    gram_signature_oracle,
    is_finite,
    is_k_spherical,
    maximal_spherical_subsets,
    order,
    recognize_irreducible,
    v_of,
)
from coxfa.parabolic import parabolic_inclusion, parabolic_intersection, special_intersection
from coxfa.angles import Angle, gs_angle_formula, gs_angle_oracle
from coxfa.splitting import fa_verdict, maximal_fa_subgroups, triangle_curvature, v_splitting
from coxfa.nerve import build_nerve, dimss_bounds, homology

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "CapExceeded",
    "ClosureTooLarge",
    "CoxeterError",
    "CoxeterSystem",
    "GroupTooLarge",
    "INF",
    "ParseError",
    "build_nerve",
    "dimss_bounds",
    "double_coset_reduce",
    "enumerate_group",
    "equal",
    "fa_verdict",
    "format_system",
    "gram_signature_oracle",
    "gs_angle_formula",
    "gs_angle_oracle",
    "homology",
    "induced_subsystem",
    "is_finite",
    "is_k_spherical",
    "is_reduced",
    "length",
    "maximal_fa_subgroups",
    "maximal_spherical_subsets",
    "order",
    "parabolic_inclusion",
    "parabolic_intersection",
    "parse_system",
    "recognize_irreducible",
    "reduce",
    "reduction_steps",
    "special_intersection",
    "triangle_curvature",
    "v_of",
    "v_splitting",
]
