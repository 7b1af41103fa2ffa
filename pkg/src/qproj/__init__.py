"""Exact q-deformed rationals and reals: the quantized modular action,
q-real Laurent series, q-traces, fence posets and quantized Vieta relations.
"""

from .algebraic import (
    OutOfRange,
    PrecisionStall,
    RelationViolated,
    isolate_roots,
    pairwise_relations_deg4,
    quantized_vieta_deg4,
    quantized_vieta_deg6,
    root_cf_stream,
    split_case_deg4,
)
from .contfrac import CFExpansion, cf_to_word, factorization_shape, negative_cf, positive_cf
from .fenceposet import admissible_ideals, build, generating_function
from .laurent import T, LambdaUnit, LaurentPoly, render
from .projective import INFINITY, ProjPoint, mobius
from .qgroup import GroupWord, QMatrix, TwistedOp, eval_word, generator
from .qrat import QRational, act, act_twisted, flat_from_sharp, invert, negate, q_integer, quantize
from .qseries import CFDigitStream, QSeries, decode_cf, left_right_gap, mobius_series, quantize_real, taylor
from .qtrace import check_H_invariants, check_palindrome_det_neg

__version__ = "0.1.0"

__all__ = [
    "CFDigitStream",
    "CFExpansion",
    "GroupWord",
    "INFINITY",
    "LambdaUnit",
    "LaurentPoly",
    "OutOfRange",
    "PrecisionStall",
    "ProjPoint",
    "QMatrix",
    "QRational",
    "QSeries",
    "RelationViolated",
    "T",
    "TwistedOp",
    "act",
    "act_twisted",
    "admissible_ideals",
    "build",
    "cf_to_word",
    "check_H_invariants",
    "check_palindrome_det_neg",
    "decode_cf",
    "eval_word",
    "factorization_shape",
    "flat_from_sharp",
    "generating_function",
    "generator",
    "invert",
    "isolate_roots",
    "left_right_gap",
    "mobius",
    "mobius_series",
    "negate",
    "negative_cf",
    "pairwise_relations_deg4",
    "positive_cf",
    "q_integer",
    "quantize",
    "quantize_real",
    "quantized_vieta_deg4",
    "quantized_vieta_deg6",
    "render",
    "root_cf_stream",
    "split_case_deg4",
    "taylor",
]
