"""Exact combinatorics for AR quivers of A/D Dynkin diagrams, R-matrix
denominator zero sets of the corresponding affine families, spectral-point
quivers with their 2:1 folds, and tensor-surjection decision rules."""

from .dorey import (
    DoreyTriple,
    DoreyVerdict,
    EmbedResult,
    dorey,
    dorey_twisted,
    dorey_untwisted,
    embed_pair_in_AR,
    minimal_pair_triple,
    multiple_pole_class,
)
from .quiver import (
    ARData,
    ConvexPartialOrder,
    DynkinQuiver,
    adapted_word,
    all_orientations,
    ar_quiver,
    convex_order_Q,
    coxeter_word,
    gamma_path_order,
    gamma_root,
    height_function,
    is_adapted,
    minimal_pairs,
    phi,
)
from .rootsys import (
    FiniteType,
    Root,
    apply_word,
    cartan_matrix,
    distance,
    format_root,
    is_convex,
    positive_roots,
    reflect,
    root_sequence,
    simple_root,
    w0_involution,
)
from .sequiver import (
    LabeledQuiver,
    SchurWeylDatum,
    SeVertex,
    class_arrow_mult,
    has_sign_quotient,
    pi,
    pi_preimages,
    schur_weyl_quiver,
    se0_contains,
    se0_window,
    se_window,
    vertex_class,
)
from .spectral import (
    AffineType,
    DenominatorZeros,
    SpectralParam,
    denominator,
    denominator_roots_raw,
    dual_index,
    dual_point,
    p_star,
    right_dual_point,
    zero_order,
)
from .verify import VerifyReport, available_checks, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "AffineType",
    "ARData",
    "ConvexPartialOrder",
    "DenominatorZeros",
    "DoreyTriple",
    "DoreyVerdict",
    "DynkinQuiver",
    "EmbedResult",
    "FiniteType",
    "LabeledQuiver",
    "Root",
    "SchurWeylDatum",
    "SeVertex",
    "SpectralParam",
    "VerifyReport",
    "adapted_word",
    "all_orientations",
    "apply_word",
    "ar_quiver",
    "available_checks",
    "cartan_matrix",
    "class_arrow_mult",
    "convex_order_Q",
    "coxeter_word",
    "denominator",
    "denominator_roots_raw",
    "distance",
    "dorey",
    "dorey_twisted",
    "dorey_untwisted",
    "dual_index",
    "dual_point",
    "embed_pair_in_AR",
    "format_root",
    "gamma_path_order",
    "gamma_root",
    "has_sign_quotient",
    "height_function",
    "is_adapted",
    "is_convex",
    "minimal_pair_triple",
    "minimal_pairs",
    "multiple_pole_class",
    "p_star",
    "phi",
    "pi",
    "pi_preimages",
    "positive_roots",
    "reflect",
    "right_dual_point",
    "root_sequence",
    "run_all",
    "run_check",
    "schur_weyl_quiver",
    "se0_contains",
    "se0_window",
    "se_window",
    "simple_root",
    "vertex_class",
    "w0_involution",
    "zero_order",
]
