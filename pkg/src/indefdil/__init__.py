"""Exact dilations of self-adjoint operators on indefinite inner product
modules over commutative characteristic-2 *-rings."""

from .dilation import (
    DilationReport,
    egervary_dilate,
    egervary_inverse,
    halmos_dilate,
    isometric_sznagy_dilate,
    sznagy_dilate,
    verify_dilation,
)
from .document import Document, parse_document, serialize_document
from .explorer import (
    AndoResult,
    CensusRow,
    ando_search,
    enumerate_self_adjoint,
    exhaustive_verify,
)
from .operator import (
    Operator,
    OperatorClass,
    adjoint,
    classify,
    compress,
    op_mul,
    random_self_adjoint,
    symmetrize,
)
from .ring import (
    Elem,
    Ring,
    RingSpec,
    elem_add,
    elem_inv,
    elem_mul,
    elem_star,
    gf2,
    gf2k,
    quotient_ring,
    ring_make,
)
from .seqspace import (
    FinSuppSeq,
    LazyBandedOp,
    lazy_apply,
    lazy_apply_adjoint,
    lazy_compress_power,
    seq_inner,
    seq_make,
)
from .space import Space, Vector, direct_sum_space, inner, space_make

__version__ = "0.1.0"

__all__ = [
    "DilationReport",
    "egervary_dilate",
    "egervary_inverse",
    "halmos_dilate",
    "isometric_sznagy_dilate",
    "sznagy_dilate",
    "verify_dilation",
    "AndoResult",
    "CensusRow",
    "ando_search",
    "enumerate_self_adjoint",
    "exhaustive_verify",
    "Operator",
    "OperatorClass",
    "adjoint",
    "classify",
    "compress",
    "op_mul",
    "random_self_adjoint",
    "symmetrize",
    "Elem",
    "Ring",
    "RingSpec",
    "elem_add",
    "elem_inv",
    "elem_mul",
    "elem_star",
    "gf2",
    "gf2k",
    "quotient_ring",
    "ring_make",
    "FinSuppSeq",
    "LazyBandedOp",
    "lazy_apply",
    "lazy_apply_adjoint",
    "lazy_compress_power",
    "seq_inner",
    "seq_make",
    "Document",
    "parse_document",
    "serialize_document",
    "Space",
    "Vector",
    "direct_sum_space",
    "inner",
    "space_make",
]
