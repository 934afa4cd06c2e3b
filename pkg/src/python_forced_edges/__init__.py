"""
Python Forced Edges

Forced and forbidden edges of graphic degree sequences: edges that appear in
every (or no) labeled realization, computed by staircase frontier walks and
checked against a brute-force realization oracle.
"""

__version__ = "0.1.0"

from .errors import ForcedEdgesError, NotGraphicError
from .forced_sets import AnalysisReport, StaircaseEdgeSet, analyze, forbidden_set, forced_set
from .labeled_graph import Edge, LabeledGraph
from .seq_core import DegreeSequence, LabeledIntSequence, is_graphic

__all__ = [
    "DegreeSequence",
    "LabeledIntSequence",
    "LabeledGraph",
    "Edge",
    "StaircaseEdgeSet",
    "AnalysisReport",
    "ForcedEdgesError",
    "NotGraphicError",
    "analyze",
    "forced_set",
    "forbidden_set",
    "is_graphic",
    "__version__",
]
