"""Membership classifiers for the geometric difference sequence spaces.

Three spaces are implemented, each relative to the m-th difference:

* ``linf``: the m-th difference is geometrically bounded;
* ``c``: the m-th difference converges geometrically;
* ``c0``: it converges to the geometric zero (the number 1).

Membership over an infinite index set is decided only up to the finite
probing protocol of :mod:`geomseq.gseq`; every report carries the verdict
with its diagnostics, and a divergence always names a witness index.

The module also carries the bounded-equivalence check relating a sequence's
first difference to its k-th-root weighted terms (the two-sided condition
split into parts (a), (b)(i), (b)(ii)), the strict inclusion demonstration
between consecutive difference orders, and the counterexample showing the
spaces are not sequence algebras under the geometric product.  The one-off
head-flattening map sometimes written as a separate "s" transform is just
:func:`geomseq.gdiff.d_operator` at order 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .garith import GNum
from .gdiff import check_order, d_operator, delta_binomial
from .gseq import (
    DEFAULT_TOL,
    DEFAULT_WINDOW,
    GSeq,
    Verdict,
    VerdictKind,
    _limit_probe_detail,
    conjunction,
    monotone_verdict,
    seq_from_expr,
    seq_odot,
)

__all__ = [
    "SPACES",
    "MembershipReport",
    "LemmaEquivalenceReport",
    "InclusionDemoReport",
    "AlgebraCounterexampleReport",
    "classify",
    "weighted_sup",
    "lemma_equivalence_check",
    "inclusion_demo",
    "algebra_counterexample",
]

SPACES = ("linf", "c", "c0")


@dataclass(frozen=True)
class MembershipReport:
    """Classification of one sequence against one space at one order."""

    space: str
    m: int
    verdict: Verdict
    witness_index: Optional[int]
    window: int

    def __post_init__(self):
        if self.verdict.kind is VerdictKind.DIVERGED and self.witness_index is None:
            raise ValueError("a divergence report must name a witness index")

    @property
    def member(self) -> bool:
        return self.verdict.kind is VerdictKind.FINITE

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "m": self.m,
            "verdict": self.verdict.to_dict(),
            "witness_index": self.witness_index,
            "window": self.window,
        }

    @staticmethod
    def from_dict(d: dict) -> "MembershipReport":
        return MembershipReport(
            space=d["space"],
            m=int(d["m"]),
            verdict=Verdict.from_dict(d["verdict"]),
            witness_index=None if d.get("witness_index") is None else int(d["witness_index"]),
            window=int(d["window"]),
        )


def _validate(N: int, tol: float) -> None:
    if not isinstance(N, int) or N < 4:
        raise ValueError(f"classification needs a window N >= 4, got {N!r}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")


def _sup_checkpoints(vals: np.ndarray, N: int) -> tuple[float, float, float, int]:
    s_half = float(np.max(vals[: max(1, N // 2)]))
    s_n = float(np.max(vals[:N]))
    s_2n = float(np.max(vals))
    witness = int(np.argmax(vals)) + 1
    return s_half, s_n, s_2n, witness


def classify(
    x: GSeq,
    space: str,
    m: int,
    N: int = DEFAULT_WINDOW,
    tol: float = DEFAULT_TOL,
) -> MembershipReport:
    """Classify x against one of linf/c/c0 at difference order m."""
    if space not in SPACES:
        raise ValueError(f"space must be one of {SPACES}, got {space!r}")
    m = check_order(m)
    _validate(N, tol)
    diff = delta_binomial(x, m)

    if space == "linf":
        vals = np.abs(diff.log_values(1, 2 * N))
        s_half, s_n, s_2n, witness = _sup_checkpoints(vals, N)
        verdict = monotone_verdict(s_half, s_n, s_2n, N, tol)
        return MembershipReport(
            space, m, verdict,
            witness if verdict.kind is VerdictKind.DIVERGED else None, N,
        )

    verdict, witness = _limit_probe_detail(diff, N, tol)
    if space == "c":
        return MembershipReport(
            space, m, verdict,
            witness if verdict.kind is VerdictKind.DIVERGED else None, N,
        )

    # c0: a geometric limit must additionally be the geometric zero.
    if verdict.kind is VerdictKind.FINITE:
        est = verdict.estimate
        assert est is not None
        if abs(est.log_value) > tol:
            flipped = Verdict(
                VerdictKind.DIVERGED,
                est,
                verdict.window,
                verdict.probe_n,
                verdict.probe_2n,
                "converges away from the geometric zero",
            )
            return MembershipReport(space, m, flipped, witness, N)
        return MembershipReport(space, m, verdict, None, N)
    return MembershipReport(
        space, m, verdict,
        witness if verdict.kind is VerdictKind.DIVERGED else None, N,
    )


def weighted_sup(
    x: GSeq,
    diff_order: int,
    weight_exp: float,
    N: int = DEFAULT_WINDOW,
    tol: float = DEFAULT_TOL,
) -> tuple[GNum, Verdict]:
    """Sup over k <= N of e^(k^weight_exp * |ln (delta^d x)_k|), with verdict.

    The returned number is the sup at window N; the verdict judges its
    stability through 2N by the shared protocol.
    """
    diff_order = check_order(diff_order)
    _validate(N, tol)
    diff = delta_binomial(x, diff_order)
    ks = np.arange(1, 2 * N + 1, dtype=np.float64)
    vals = np.power(ks, float(weight_exp)) * np.abs(diff.log_values(1, 2 * N))
    s_half, s_n, s_2n, _ = _sup_checkpoints(vals, N)
    verdict = monotone_verdict(s_half, s_n, s_2n, N, tol)
    return GNum(s_n), verdict


@dataclass(frozen=True)
class LemmaEquivalenceReport:
    """Bounded first difference vs the weighted two-part condition."""

    cond_a: Verdict
    cond_b_i: Verdict
    cond_b_ii: Verdict
    window: int

    @property
    def b_kind(self) -> VerdictKind:
        return conjunction(self.cond_b_i, self.cond_b_ii)

    @property
    def agreement(self) -> bool:
        return self.cond_a.kind is self.b_kind

    @property
    def has_inconclusive(self) -> bool:
        return (
            self.cond_a.kind is VerdictKind.INCONCLUSIVE
            or self.b_kind is VerdictKind.INCONCLUSIVE
        )

    def to_dict(self) -> dict:
        return {
            "window": self.window,
            "parts": {
                "a": self.cond_a.to_dict(),
                "b_i": self.cond_b_i.to_dict(),
                "b_ii": self.cond_b_ii.to_dict(),
            },
            "b_kind": self.b_kind.value,
            "agreement": self.agreement,
        }

    @staticmethod
    def from_dict(d: dict) -> "LemmaEquivalenceReport":
        parts = d["parts"]
        return LemmaEquivalenceReport(
            cond_a=Verdict.from_dict(parts["a"]),
            cond_b_i=Verdict.from_dict(parts["b_i"]),
            cond_b_ii=Verdict.from_dict(parts["b_ii"]),
            window=int(d["window"]),
        )


def lemma_equivalence_check(
    x: GSeq, N: int = DEFAULT_WINDOW, tol: float = DEFAULT_TOL
) -> LemmaEquivalenceReport:
    """Check that a bounded first difference is equivalent to the pair
    (k-th-root boundedness, bounded k/(k+1)-weighted difference).

    Part (a) is sup |ln x_k - ln x_{k+1}|; part (b)(i) is
    sup (1/k)|ln x_k|; part (b)(ii) is sup |ln x_k - (k/(k+1)) ln x_{k+1}|.
    The report exposes whether (a) agrees with the conjunction of (b).
    """
    _validate(N, tol)
    logs = x.log_values(1, 2 * N + 1)
    ks = np.arange(1, 2 * N + 1, dtype=np.float64)
    head = logs[:-1]
    tail = logs[1:]
    a_vals = np.abs(head - tail)
    b_i_vals = np.abs(head) / ks
    b_ii_vals = np.abs(head - (ks / (ks + 1.0)) * tail)
    verdicts = []
    for vals in (a_vals, b_i_vals, b_ii_vals):
        s_half, s_n, s_2n, _ = _sup_checkpoints(vals, N)
        verdicts.append(monotone_verdict(s_half, s_n, s_2n, N, tol))
    return LemmaEquivalenceReport(*verdicts, window=N)


@dataclass(frozen=True)
class InclusionDemoReport:
    """Strictness of the inclusion between consecutive difference orders,
    demonstrated on the witness sequence e^(k^m)."""

    m: int
    witness_source: str
    at_order_m: MembershipReport
    at_order_m_plus_1: MembershipReport
    chain_c: MembershipReport
    chain_linf: MembershipReport

    @property
    def holds(self) -> bool:
        return (
            not self.at_order_m.member
            and self.at_order_m.verdict.kind is VerdictKind.DIVERGED
            and self.at_order_m_plus_1.member
            and self.chain_c.member
            and self.chain_linf.member
        )

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "witness_source": self.witness_source,
            "at_order_m": self.at_order_m.to_dict(),
            "at_order_m_plus_1": self.at_order_m_plus_1.to_dict(),
            "chain_c": self.chain_c.to_dict(),
            "chain_linf": self.chain_linf.to_dict(),
            "holds": self.holds,
        }

    @staticmethod
    def from_dict(d: dict) -> "InclusionDemoReport":
        return InclusionDemoReport(
            m=int(d["m"]),
            witness_source=d["witness_source"],
            at_order_m=MembershipReport.from_dict(d["at_order_m"]),
            at_order_m_plus_1=MembershipReport.from_dict(d["at_order_m_plus_1"]),
            chain_c=MembershipReport.from_dict(d["chain_c"]),
            chain_linf=MembershipReport.from_dict(d["chain_linf"]),
        )


def inclusion_demo(
    m: int, N: int = DEFAULT_WINDOW, tol: float = DEFAULT_TOL
) -> InclusionDemoReport:
    """Show c0 at order m is strictly inside c0 at order m+1.

    The witness e^(k^m) differences to the nonunit constant e^((-1)^m m!)
    at order m (so it converges but not to the geometric zero, and stays
    bounded: the c and linf legs of the chain both hold) and to the
    geometric zero at order m+1.
    """
    m = check_order(m)
    if m < 1:
        raise ValueError("the inclusion demonstration needs m >= 1")
    src = f"exp(k^{m})" if m > 1 else "exp(k)"
    x = seq_from_expr(src)
    return InclusionDemoReport(
        m=m,
        witness_source=src,
        at_order_m=classify(x, "c0", m, N, tol),
        at_order_m_plus_1=classify(x, "c0", m + 1, N, tol),
        chain_c=classify(x, "c", m, N, tol),
        chain_linf=classify(x, "linf", m, N, tol),
    )


@dataclass(frozen=True)
class AlgebraCounterexampleReport:
    """Termwise geometric products escape the space: x and y in c0 at
    order m while x (.) y is not."""

    m: int
    x_source: str
    y_source: str
    x_report: MembershipReport
    y_report: MembershipReport
    product_report: MembershipReport

    @property
    def holds(self) -> bool:
        return (
            self.x_report.member
            and self.y_report.member
            and not self.product_report.member
            and self.product_report.verdict.kind is VerdictKind.DIVERGED
        )

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "x_source": self.x_source,
            "y_source": self.y_source,
            "x_report": self.x_report.to_dict(),
            "y_report": self.y_report.to_dict(),
            "product_report": self.product_report.to_dict(),
            "holds": self.holds,
        }

    @staticmethod
    def from_dict(d: dict) -> "AlgebraCounterexampleReport":
        return AlgebraCounterexampleReport(
            m=int(d["m"]),
            x_source=d["x_source"],
            y_source=d["y_source"],
            x_report=MembershipReport.from_dict(d["x_report"]),
            y_report=MembershipReport.from_dict(d["y_report"]),
            product_report=MembershipReport.from_dict(d["product_report"]),
        )


def algebra_counterexample(
    m: int, N: int = DEFAULT_WINDOW, tol: float = DEFAULT_TOL
) -> AlgebraCounterexampleReport:
    """For m >= 2: e^k and e^(k^(m-1)) both sit in c0 at order m, but their
    termwise geometric product e^(k^m) does not."""
    m = check_order(m)
    if m < 2:
        raise ValueError("the algebra counterexample needs m >= 2")
    x_src = "exp(k)"
    y_src = f"exp(k^{m - 1})" if m > 2 else "exp(k)"
    x = seq_from_expr(x_src)
    y = seq_from_expr(y_src)
    prod = seq_odot(x, y)
    return AlgebraCounterexampleReport(
        m=m,
        x_source=x_src,
        y_source=y_src,
        x_report=classify(x, "c0", m, N, tol),
        y_report=classify(y, "c0", m, N, tol),
        product_report=classify(prod, "c0", m, N, tol),
    )
