"""Norms, greedy approximation and democracy functions in Orlicz, Nakano,
Lorentz and Marcinkiewicz sequence spaces."""

from ._core import (
    BudgetError,
    DescriptorError,
    OrliczFunction,
    ShapeError,
    SpaceDescriptor,
    best_nterm_error,
    bridge_check,
    build_block_basis,
    condition_c_check,
    decreasing_rearrangement,
    delta2_estimate,
    democracy_functions,
    flow,
    fundamental_function,
    greedy_ratio,
    greedy_step,
    holder_ratio,
    modular,
    multiplicative_convexity_violation,
    nakano_space_verdict,
    right_dominance_ratio,
    space_norm,
    weight_properties,
)

__all__ = [
    "BudgetError",
    "DescriptorError",
    "OrliczFunction",
    "ShapeError",
    "SpaceDescriptor",
    "best_nterm_error",
    "bridge_check",
    "build_block_basis",
    "condition_c_check",
    "decreasing_rearrangement",
    "delta2_estimate",
    "democracy_functions",
    "flow",
    "fundamental_function",
    "greedy_ratio",
    "greedy_step",
    "holder_ratio",
    "modular",
    "multiplicative_convexity_violation",
    "nakano_space_verdict",
    "right_dominance_ratio",
    "space_norm",
    "weight_properties",
]

__version__ = "0.1.0"
