"""Decomposition of triconnected graphs by their 3-vertex cutsets."""

from .errors import AnalysisError, InputError, IntegrityError, ParseError, TricutError
from .graph_core import Graph

__version__ = "0.1.0"

__all__ = ["AnalysisError", "Graph", "InputError", "IntegrityError", "ParseError", "TricutError", "__version__"]
