"""forcelab: zero forcing sets, chronologies, forts and exact solvers."""

from .errors import DomainError, ForcelabError, ParameterError, PreconditionError, UnsupportedError
from .forcing import (
    Chronology,
    ForcePolicy,
    chain_set,
    closure,
    is_zero_forcing_set,
    restrict_chronology,
    run_chronology,
    terminus,
    validate_chronology,
)
from .forts import Fort, FortKind, enumerate_minimal_forts, extract_fort_from_failure, is_fort
from .generators import PeonyParams, WebParams, make_cycle_path_product, make_peony, make_web
from .graph import Graph, VertexLabel, VertexSet
from .solver import SolveReport, path_cover_number, solve, solve_exhaustive, solve_fortbb

__version__ = "0.1.0"
