"""Exact moduli computations for twisted cyclic quiver representations on
the projective line: stability, base-point fibres, canonical forms, flow
limits, and (k,1) reduction/decomposition, all over the rationals."""

from .errors import (
    ChartDegenerate,
    CyclicModuliError,
    DegreeMismatch,
    InvalidSplitting,
    IrrationalRoots,
    NoStableIndexing,
    ProfileMismatch,
    QuiverMismatch,
    SpecError,
    SpecSemanticError,
    SpecSyntaxError,
    ZeroGamma,
    ZeroInteriorMap,
    ZeroScalar,
)
from .fibres import FibreSet, count_fibre, enumerate_fibre, nilcone_fibre
from .k1 import (
    DecompositionDescriptor,
    K1FibreCount,
    K1Reduction,
    K1Rep,
    adjusted_fibre_count,
    adjusted_nilcone_dims,
    decompose,
    k1_char_subleading,
    k1_charpoly,
    k1_fibre_count,
    k1_hitchin_image,
    k1_hitchin_section,
    reduce_rep,
    reduction_amounts,
)
from .projline import Divisor, ProjPoint, divisor_contains
from .quivers import (
    ATypeQuiver,
    CyclicQuiver,
    K1Quiver,
    ModuliDescriptor,
    admits_stable,
    associated_a_type,
    eta,
    moduli_descriptor,
    reindex_canonical,
)
from .reps import (
    CanonicalRep,
    CyclicRep,
    canonical_form,
    destabilizing_subbundle,
    equivalent,
    flow_limit,
    hitchin_image,
    is_stable,
    torus_act,
)
from .sections import CoeffForm, Section, from_coeffs, mul, reduce_top, to_coeffs
from .speclang import QuiverSpec, parse_rep_sections, parse_section, parse_spec

__version__ = "0.1.0"

__all__ = [
    "ATypeQuiver",
    "CanonicalRep",
    "ChartDegenerate",
    "CoeffForm",
    "CyclicModuliError",
    "CyclicQuiver",
    "CyclicRep",
    "DecompositionDescriptor",
    "DegreeMismatch",
    "Divisor",
    "FibreSet",
    "InvalidSplitting",
    "IrrationalRoots",
    "K1FibreCount",
    "K1Quiver",
    "K1Reduction",
    "K1Rep",
    "ModuliDescriptor",
    "NoStableIndexing",
    "ProfileMismatch",
    "ProjPoint",
    "QuiverMismatch",
    "QuiverSpec",
    "Section",
    "SpecError",
    "SpecSemanticError",
    "SpecSyntaxError",
    "ZeroGamma",
    "ZeroInteriorMap",
    "ZeroScalar",
    "adjusted_fibre_count",
    "adjusted_nilcone_dims",
    "admits_stable",
    "associated_a_type",
    "canonical_form",
    "count_fibre",
    "decompose",
    "destabilizing_subbundle",
    "divisor_contains",
    "enumerate_fibre",
    "equivalent",
    "eta",
    "flow_limit",
    "from_coeffs",
    "hitchin_image",
    "is_stable",
    "k1_char_subleading",
    "k1_charpoly",
    "k1_fibre_count",
    "k1_hitchin_image",
    "k1_hitchin_section",
    "moduli_descriptor",
    "mul",
    "nilcone_fibre",
    "parse_rep_sections",
    "parse_section",
    "parse_spec",
    "reduce_rep",
    "reduce_top",
    "reduction_amounts",
    "reindex_canonical",
    "to_coeffs",
    "torus_act",
]
