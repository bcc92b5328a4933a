"""Spans of finite sets enriched with indexed families of objects, the
bimonoid and Hopf structures they carry, and checkers for all of it."""

__version__ = "0.1.0"

from .cells import (
    InvalidCell,
    VCell1,
    VCell2,
    VFam,
    braiding_cell,
    cells_equal,
    compose_cells,
    hcompose_2cells,
    identity_2cell,
    identity_cell,
    invert_2cell,
    make_2cell,
    tensor_2cells,
    tensor_cells,
    tensor_fams,
    try_make_2cell,
    unit_fam,
    vcompose_2cells,
    whisker,
)
from .errors import (
    BoundaryMismatch,
    CodMismatch,
    ComponentShapeError,
    FactorizationViolation,
    FamMismatch,
    FeetMismatch,
    NotAGroupoid,
    NotBimodule,
    NotFirm,
    NotMonic,
    NotOverX2,
    OutOfBounds,
    ParseError,
    PasteError,
    SchemaError,
    ShapeMismatch,
    SpanVError,
    TriangleViolation,
    UnsupportedBackend,
)
from .finset import (
    UNIT,
    FinFn,
    FinSet,
    SubsetApex,
    compose_fn,
    diagonal_fn,
    identity_fn,
    product,
    pullback,
    reindex_fn,
    swap_fn,
    terminal_fn,
)
from .hopfcat import (
    FrobVCat,
    GroupoidData,
    HopfVCat,
    VFunctorData,
    check_frobenius_vcat,
    check_frobenius_vfunctor,
    check_hopf_vcat,
    check_semi_hopf_vcat,
    codiscrete_groupoid,
    cyclic_group_groupoid,
    discrete_groupoid,
    frobcat_to_spanv,
    group_algebra_hopf,
    groupoid_structures,
    groupoid_to_hopfcat,
    hopfcat_data_equal,
    hopfcat_to_spanv,
    mat_frobenius_example,
    opposite_vcat,
    spanv_to_hopfcat,
    vfunctor_to_spanv,
    vopcat_as_comonoid,
)
from .pasting import (
    canonical_cell_iso,
    find_2cells,
    find_unique_2cell,
    paste,
    paste_with_boundaries,
    search_limit,
    two_cells_equal,
)
from .span import (
    Span,
    SpanMap,
    braiding_span,
    compose_spans,
    from_function,
    identity_span,
    match_by_signature,
    reverse_span,
    span_legs_bijective,
    spans_isomorphic,
    tensor_spans,
    unique_map_to_monic,
)
from .structures import *  # noqa: F401,F403
from .vbackend import (
    FinSetBackend,
    MatBackend,
    TrivialBackend,
    left_kan_along_function,
)
