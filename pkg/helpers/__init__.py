"""Helpers package: field, matrix, graph and max-flow building blocks."""

from .field_helpers import FieldContext, FieldElement, FieldHelpers
from .matrix_helpers import FpMatrix, IndexSet, MatrixHelpers
from .graph_helpers import Digraph, GraphHelpers, TransformResult
from .flow_helpers import FlowNetwork, OracleHelpers

__all__ = [
    "FieldContext",
    "FieldElement",
    "FieldHelpers",
    "FpMatrix",
    "IndexSet",
    "MatrixHelpers",
    "Digraph",
    "GraphHelpers",
    "TransformResult",
    "FlowNetwork",
    "OracleHelpers",
]
