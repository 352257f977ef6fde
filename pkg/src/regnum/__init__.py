"""Regular number of a graph: the fewest classes in a partition of the edges
into edge-induced regular subgraphs."""

from .bounds import BoundsReport, bounds_report
from .families import FamilyResult
from .graph import Graph, parse_edge_list, parse_graph6, serialize_graph6
from .regularity import PartitionCertificate, verify_certificate
from .solver import SolveResult, brute_force_oracle, regular_number

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "FamilyResult",
    "Graph",
    "PartitionCertificate",
    "SolveResult",
    "bounds_report",
    "brute_force_oracle",
    "parse_edge_list",
    "parse_graph6",
    "regular_number",
    "serialize_graph6",
    "verify_certificate",
]
