"""Exact tools for Cohen-Macaulay, shellable and f-simplicial complexes."""

from .cm import CmReport, NotCohenMacaulay, depth, is_cm, is_minimal_cm
from .complex import (
    Complex,
    ComplexError,
    alexander_dual,
    complement_complex,
    connected_components,
    connected_in_codim_1,
    f_vector,
    facet_deletion,
    from_facets,
    from_words,
    intersection_with_facet,
    is_cone,
    link,
    skeleton,
)
from .homology import QQ, FieldSpec, is_acyclic, reduced_homology
from .shelling import find_shelling, is_shelling_move, shelled_over_decompose, verify_shelling

__version__ = "0.1.0"
