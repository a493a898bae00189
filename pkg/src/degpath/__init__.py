"""Equal-degree endpoints joined by paths of fixed length: predicate, extremal search and supporting bounds."""

from .canon import CanonicalForm, canonical_form
from .errors import (
    BadArgsError,
    BadParamsError,
    DegpathError,
    LoopError,
    MalformedGraph6Error,
    OutOfRangeError,
    SizeError,
)
from .extremal import ExtremalReport, SearchConfig, enumerate_exact, search_lower_bound, verify_construction
from .graph import DegreeProfile, Graph, build_graph, complete_bipartite, complete_graph, half_graph
from .graph6 import graph6_decode, graph6_encode
from .predicate import PathWitness, avoids, exact_length_path, find_equal_degree_path
from .structure import AuditReport, LambdaParams, PairDecomposition, audit_dudv, decompose, lambda_closed, lambda_oracle

__version__ = "0.1.0"
