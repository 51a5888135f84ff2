"""Formal concept analysis engine with attribute exploration and
testing-workflow tooling (failure reports, feature navigation, PICT export)."""

from .bitsets import AttributeSet, BitSet, ObjectSet
from .closure import (
    ClosureOperator,
    FormalConcept,
    closed_sets,
    enumerate_concepts,
    lectic_less,
    next_closure,
)
from .context import FormalContext
from .errors import (
    DimensionError,
    FcaError,
    InvalidCounterexample,
    NamingError,
    NotFoundError,
    ParseError,
    SessionError,
    SessionFormatError,
    UnknownAttributeError,
    UnknownObjectError,
)
from .exploration import (
    Accept,
    Counterexample,
    ExplorationSession,
    answer,
    current_question,
    load_session,
    new_session,
    run_with_oracle,
    save_session,
)
from .implications import (
    Implication,
    ImplicationSet,
    bind_implications,
    canonical_base,
    follows,
    holds,
    implications_from_json,
    implications_to_json,
    lin_closure,
    parse_implications_file,
    render_implications,
    violating_objects,
)
from .io import (
    format_for_path,
    load_context,
    read_context,
    write_context,
)
from .lattice import (
    ConceptLattice,
    build_lattice,
    concept_for,
    export_lattice,
    lattice_from_json,
    lattice_to_json,
    neighbors,
    top_part,
)
from .testlab import (
    FailureReport,
    FeatureNeighborhood,
    PictModel,
    export_pict,
    failure_report,
    feature_neighbors,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
