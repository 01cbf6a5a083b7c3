from .config import RunConfig, resolve_config
from .diagrams import ChordDiagram, GaussDiagram, enumerate_diagrams
from .factory import ClaimFactory, run_all, run_claim
from .invariants import InvariantFunctional, evaluate, find_witness, invariant_space
from .linalg import FormalSum, RelationSystem
from .serialization import emit_gauss_code, parse_gauss_code, read_json, write_json

__all__ = [
    "RunConfig",
    "resolve_config",
    "ChordDiagram",
    "GaussDiagram",
    "enumerate_diagrams",
    "ClaimFactory",
    "run_all",
    "run_claim",
    "InvariantFunctional",
    "evaluate",
    "find_witness",
    "invariant_space",
    "FormalSum",
    "RelationSystem",
    "emit_gauss_code",
    "parse_gauss_code",
    "read_json",
    "write_json",
]
