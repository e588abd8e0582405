"""Gauss diagram realizability and closed meander construction.

The package decides whether a double-occurrence word is the Gauss code
of a closed planar curve, both by a fast parity criterion (the even
condition checked across all single smoothings) and by a brute-force
search over surface embeddings, and it enumerates closed meanders via
their matrices with a constraint-propagating tableau construction.
"""

from .bitmatrix import BitMatrix
from .braids import (
    BraidWord,
    InversionSet,
    braid_record,
    inversion_set,
    is_valid_inversion_set,
    nonrepeating_braid_word,
    permutation_from_inversions,
    simulate_braid_word,
)
from .errors import GmkError
from .gauss import (
    CanonicalForm,
    ChordDiagram,
    GaussCode,
    canonicalize,
    delete_chord,
    enumerate_codes,
    interlacement_matrix,
    is_canonical,
    parse_gauss_code,
    smooth_chord,
    smoothed_crossings,
    symmetry_orbit_size,
    to_chord_diagram,
)
from .meanders import (
    INFEASIBLE,
    MeanderMatrix,
    MeanderReconstruction,
    PartialMeanderMatrix,
    delta_fill,
    encode_meander,
    enumerate_meander_matrices,
    initial_tableau,
    is_meander_matrix,
    meander_matrix_report,
    oracle_enumerate_meanders,
    propagate,
    reconstruct_meander,
    reconstruction_from_visitation,
    reverse_reflect,
)
from .realizability import (
    ConditionReport,
    EmbeddingStats,
    RealizabilityReport,
    RotationAssignment,
    Witness,
    audit_disagreements,
    even_condition,
    iter_embeddings,
    matrix_conditions,
    minimal_even_but_unrealizable,
    oracle_realizable,
    smoothing_realizable,
)
from .svg import RenderSpec, render_chord_diagram, render_meander

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BraidWord",
    "CanonicalForm",
    "ChordDiagram",
    "ConditionReport",
    "EmbeddingStats",
    "GaussCode",
    "GmkError",
    "INFEASIBLE",
    "InversionSet",
    "MeanderMatrix",
    "MeanderReconstruction",
    "PartialMeanderMatrix",
    "RealizabilityReport",
    "RenderSpec",
    "RotationAssignment",
    "Witness",
    "audit_disagreements",
    "braid_record",
    "canonicalize",
    "delete_chord",
    "delta_fill",
    "encode_meander",
    "enumerate_codes",
    "enumerate_meander_matrices",
    "even_condition",
    "initial_tableau",
    "interlacement_matrix",
    "inversion_set",
    "is_canonical",
    "is_meander_matrix",
    "is_valid_inversion_set",
    "iter_embeddings",
    "matrix_conditions",
    "meander_matrix_report",
    "minimal_even_but_unrealizable",
    "nonrepeating_braid_word",
    "oracle_enumerate_meanders",
    "oracle_realizable",
    "parse_gauss_code",
    "permutation_from_inversions",
    "propagate",
    "reconstruct_meander",
    "reconstruction_from_visitation",
    "render_chord_diagram",
    "render_meander",
    "reverse_reflect",
    "simulate_braid_word",
    "smooth_chord",
    "smoothed_crossings",
    "smoothing_realizable",
    "symmetry_orbit_size",
    "to_chord_diagram",
]
