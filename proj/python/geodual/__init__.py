"""Ranked convex geometries: meet-irreducibles, critical bases and duality checks."""

from ._core import (
    GeodualError,
    ImplicationalBase,
    InputError,
    NotGeometryError,
    NotRankedError,
    PreconditionError,
    VerificationError,
    check_dual,
    cmi_check,
    compute_rank,
    critical_base,
    maximal_independent_sets,
    meet_irreducibles,
    minimal_transversals,
    oracle,
    reduce_dual,
    structure_identification,
)

__all__ = [
    "GeodualError",
    "ImplicationalBase",
    "InputError",
    "NotGeometryError",
    "NotRankedError",
    "PreconditionError",
    "VerificationError",
    "check_dual",
    "cmi_check",
    "compute_rank",
    "critical_base",
    "maximal_independent_sets",
    "meet_irreducibles",
    "minimal_transversals",
    "oracle",
    "reduce_dual",
    "structure_identification",
]
