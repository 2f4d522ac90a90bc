"""Cyclic multi-robot patrol scheduling (C++ core via pybind11)."""

from ._patrol import (
    Error,
    InfeasibleAssignment,
    InvalidInput,
    LimitExceeded,
    MetricSpace,
    MetricViolation,
    NotConnected,
    PreconditionViolated,
    assign_robots,
    brute_force_cyclic,
    decide,
    decompose_even,
    decompose_odd_anchored,
    decompose_with_claw,
    eulerize,
    evaluate,
    minimal_latency,
    solve,
)

__all__ = [
    "Error",
    "InfeasibleAssignment",
    "InvalidInput",
    "LimitExceeded",
    "MetricSpace",
    "MetricViolation",
    "NotConnected",
    "PreconditionViolated",
    "assign_robots",
    "brute_force_cyclic",
    "decide",
    "decompose_even",
    "decompose_odd_anchored",
    "decompose_with_claw",
    "eulerize",
    "evaluate",
    "minimal_latency",
    "solve",
]
