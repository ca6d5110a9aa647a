"""Finite join geometry: join spaces, their axioms, line spaces, closure and matroids."""

from .relations import (CheckReport, ConditionVector, HypothesisError, JoinAxiomError,
                        JoinSpace, ResourceLimitError, StructuralError, TernaryRelation)
from .linespace import AbstractLineSpace, LineSpaceError, SetLineStructure, iota, lambda_
from .closure import ClosureSystem, join_closure, matroid_rank
from .axioms import AXIOMS
from .verify import THEOREMS, verify_exhaustive

__all__ = [
    "AXIOMS", "THEOREMS", "AbstractLineSpace", "CheckReport", "ClosureSystem",
    "ConditionVector", "HypothesisError", "JoinAxiomError", "JoinSpace", "LineSpaceError",
    "ResourceLimitError", "SetLineStructure", "StructuralError", "TernaryRelation", "iota",
    "join_closure", "lambda_", "matroid_rank", "verify_exhaustive",
]
