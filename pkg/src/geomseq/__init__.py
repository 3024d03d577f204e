"""Sequence spaces over multiplicative arithmetic.

The ground arithmetic replaces addition with multiplication: numbers live on
the positive half-line, 1 plays the role of zero, e the role of one, and
every operation acts on logarithms.  On top of it sit lazy positive
sequences, a multiplicative difference operator of arbitrary order, window
classifiers for the bounded / convergent / null difference spaces, and the
four multiplier-dual tests.

Quick tour::

    >>> from geomseq import seq_from_expr, delta_binomial, term
    >>> x = seq_from_expr("exp(k^2)")
    >>> term(delta_binomial(x, 2), 7).log_value
    2.0
"""

from .errors import (
    DomainError,
    GeometricError,
    GeometricZeroDivisor,
    IndexOutOfRange,
    NonPositiveValue,
    NoSubsequenceFound,
    ParseError,
    UnsupportedOrder,
)
from .garith import (
    GNum,
    GUNIT,
    GZERO,
    gabs,
    gadd,
    gdiv,
    ginv,
    gmul,
    gpow,
    gsub,
    is_gzero,
    natural,
)
from .exprdsl import ExprAst, eval_at, eval_log, eval_value, parse, to_source
from .gseq import (
    DEFAULT_TOL,
    DEFAULT_WINDOW,
    BufferSeq,
    ConstantSeq,
    ExpressionSeq,
    GSeq,
    SparseLogSeq,
    Verdict,
    VerdictKind,
    g_limit_probe,
    gsum_partial,
    remainder,
    seq_constant,
    seq_from_expr,
    seq_from_logs,
    seq_from_values,
    seq_odot,
    seq_oplus,
    seq_scale,
    sup_gabs,
    term,
)
from .gdiff import (
    MAX_ORDER,
    binomial_row,
    d_operator,
    delta_binomial,
    delta_norm,
    delta_recursive,
)
from .spaces import (
    SPACES,
    AlgebraCounterexampleReport,
    InclusionDemoReport,
    LemmaEquivalenceReport,
    MembershipReport,
    algebra_counterexample,
    classify,
    inclusion_demo,
    lemma_equivalence_check,
    weighted_sup,
)
from .duals import (
    DUAL_KINDS,
    DualReport,
    alpha_alpha_dual_test,
    alpha_dual_test,
    beta_dual_test,
    counterexample_sequence,
    dual_test,
    gamma_dual_test,
)
from .catalog import Annotation, CatalogEntry, catalog_entries

__version__ = "0.1.0"

__all__ = [
    "AlgebraCounterexampleReport",
    "Annotation",
    "BufferSeq",
    "CatalogEntry",
    "ConstantSeq",
    "DEFAULT_TOL",
    "DEFAULT_WINDOW",
    "DUAL_KINDS",
    "DomainError",
    "DualReport",
    "ExprAst",
    "ExpressionSeq",
    "GNum",
    "GSeq",
    "GUNIT",
    "GZERO",
    "GeometricError",
    "GeometricZeroDivisor",
    "InclusionDemoReport",
    "IndexOutOfRange",
    "LemmaEquivalenceReport",
    "MAX_ORDER",
    "MembershipReport",
    "NoSubsequenceFound",
    "NonPositiveValue",
    "ParseError",
    "SPACES",
    "SparseLogSeq",
    "UnsupportedOrder",
    "Verdict",
    "VerdictKind",
    "algebra_counterexample",
    "alpha_alpha_dual_test",
    "alpha_dual_test",
    "beta_dual_test",
    "binomial_row",
    "catalog_entries",
    "classify",
    "counterexample_sequence",
    "d_operator",
    "delta_binomial",
    "delta_norm",
    "delta_recursive",
    "dual_test",
    "eval_at",
    "eval_log",
    "eval_value",
    "g_limit_probe",
    "gabs",
    "gadd",
    "gdiv",
    "ginv",
    "gmul",
    "gpow",
    "gsub",
    "gsum_partial",
    "inclusion_demo",
    "is_gzero",
    "lemma_equivalence_check",
    "natural",
    "parse",
    "remainder",
    "seq_constant",
    "seq_from_expr",
    "seq_from_logs",
    "seq_from_values",
    "seq_odot",
    "seq_oplus",
    "seq_scale",
    "sup_gabs",
    "term",
    "to_source",
    "weighted_sup",
]
