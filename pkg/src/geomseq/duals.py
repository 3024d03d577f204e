"""Dual-space membership tests for the geometric difference spaces.

For the order-m difference spaces, a candidate multiplier sequence a sits in

* the alpha dual iff the geometric series of e^(k^m) (.) |a_k| converges,
  i.e. sum k^m |ln a_k| is finite;
* the alpha-alpha (second alpha) dual iff sup e^(k^-m) (.) |a_k| is
  geometrically bounded, i.e. sup k^-m |ln a_k| < inf;
* the beta dual (first order only) iff sum k ln a_k converges as a signed
  series and the absolute tails sum: sum_k |ln R_k| < inf with
  R_k = sum_{j>k} ln a_j (truncated at the probe window);
* the gamma dual (first order only) iff the partial sums of k ln a_k stay
  bounded and the same tail condition holds.

The second dual being strictly larger than the original space (bounded
differences do not force summable weighted logs) is what makes these spaces
non-perfect; the test suite pins that down via e^(k^m).

Beta and gamma tests beyond m = 1 are not defined here and raise
:class:`UnsupportedOrder`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NoSubsequenceFound, UnsupportedOrder
from .garith import GNum
from .gdiff import check_order
from .gseq import (
    DEFAULT_TOL,
    DEFAULT_WINDOW,
    GSeq,
    SparseLogSeq,
    Verdict,
    VerdictKind,
    conjunction,
    monotone_verdict,
    signed_series_verdict,
)

__all__ = [
    "DUAL_KINDS",
    "DualReport",
    "alpha_dual_test",
    "alpha_alpha_dual_test",
    "beta_dual_test",
    "gamma_dual_test",
    "dual_test",
    "counterexample_sequence",
]

DUAL_KINDS = ("alpha", "alpha_alpha", "beta", "gamma")


@dataclass(frozen=True)
class DualReport:
    """Outcome of one dual-membership test."""

    kind: str
    m: int
    verdict: Verdict
    partial_value: GNum
    remainder_ok: Optional[Verdict] = None

    @property
    def member(self) -> bool:
        return self.verdict.kind is VerdictKind.FINITE

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "verdict": self.verdict.to_dict(),
            "partial_log": self.partial_value.log_value,
            "remainder_ok": None if self.remainder_ok is None else self.remainder_ok.to_dict(),
        }

    @staticmethod
    def from_dict(d: dict) -> "DualReport":
        rem = d.get("remainder_ok")
        return DualReport(
            kind=d["kind"],
            m=int(d["m"]),
            verdict=Verdict.from_dict(d["verdict"]),
            partial_value=GNum(float(d["partial_log"])),
            remainder_ok=None if rem is None else Verdict.from_dict(rem),
        )


def _validate(N: int, tol: float) -> None:
    if not isinstance(N, int) or N < 4:
        raise ValueError(f"dual tests need a window N >= 4, got {N!r}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")


def alpha_dual_test(
    a: GSeq, m: int, N: int = DEFAULT_WINDOW, tol: float = DEFAULT_TOL
) -> DualReport:
    """Summability of k^m |ln a_k| by the three-window protocol."""
    m = check_order(m)
    _validate(N, tol)
    logs = a.log_values(1, 2 * N)
    ks = np.arange(1, 2 * N + 1, dtype=np.float64)
    vals = np.power(ks, float(m)) * np.abs(logs)
    t_half = math.fsum(vals[: max(1, N // 2)])
    t_n = math.fsum(vals[:N])
    t_2n = math.fsum(vals)
    verdict = monotone_verdict(t_half, t_n, t_2n, N, tol)
    return DualReport("alpha", m, verdict, GNum(t_n))


def alpha_alpha_dual_test(
    a: GSeq, m: int, N: int = DEFAULT_WINDOW, tol: float = DEFAULT_TOL
) -> DualReport:
    """Boundedness of k^-m |ln a_k| by the three-window protocol."""
    m = check_order(m)
    _validate(N, tol)
    logs = a.log_values(1, 2 * N)
    ks = np.arange(1, 2 * N + 1, dtype=np.float64)
    vals = np.power(ks, -float(m)) * np.abs(logs)
    s_half = float(np.max(vals[: max(1, N // 2)]))
    s_n = float(np.max(vals[:N]))
    s_2n = float(np.max(vals))
    verdict = monotone_verdict(s_half, s_n, s_2n, N, tol)
    return DualReport("alpha_alpha", m, verdict, GNum(s_n))


def _remainder_condition(logs: np.ndarray, N: int, tol: float) -> Verdict:
    """Summability of |ln R_k| where R_k is the tail product after k,
    truncated at the same window as the outer sum."""
    totals = []
    for w in (max(2, N // 2), N, 2 * N):
        chunk = logs[:w]
        sfx = np.concatenate([np.cumsum(chunk[::-1])[::-1], [0.0]])
        totals.append(math.fsum(np.abs(sfx[1:])))
    return monotone_verdict(totals[0], totals[1], totals[2], N, tol)


def _first_order_series(a: GSeq, N: int) -> tuple[np.ndarray, np.ndarray]:
    logs = a.log_values(1, 2 * N)
    ks = np.arange(1, 2 * N + 1, dtype=np.float64)
    return logs, np.cumsum(ks * logs)


def beta_dual_test(
    a: GSeq, N: int = DEFAULT_WINDOW, tol: float = DEFAULT_TOL
) -> DualReport:
    """Signed convergence of sum k ln a_k plus the tail condition (m = 1)."""
    _validate(N, tol)
    logs, partials = _first_order_series(a, N)
    cond_series = signed_series_verdict(partials, N, tol)
    cond_tails = _remainder_condition(logs, N, tol)
    kind = conjunction(cond_series, cond_tails)
    overall = Verdict(
        kind,
        cond_series.estimate if kind is VerdictKind.FINITE else None,
        N,
        cond_series.probe_n,
        cond_series.probe_2n,
        f"series {cond_series.kind.value}; tails {cond_tails.kind.value}",
    )
    return DualReport(
        "beta", 1, overall, GNum(float(partials[N - 1])), remainder_ok=cond_tails
    )


def gamma_dual_test(
    a: GSeq, N: int = DEFAULT_WINDOW, tol: float = DEFAULT_TOL
) -> DualReport:
    """Bounded partial sums of k ln a_k plus the tail condition (m = 1)."""
    _validate(N, tol)
    logs, partials = _first_order_series(a, N)
    mags = np.abs(partials)
    sup_half = float(np.max(mags[: max(1, N // 2)]))
    sup_n = float(np.max(mags[:N]))
    sup_2n = float(np.max(mags))
    cond_bounded = monotone_verdict(sup_half, sup_n, sup_2n, N, tol)
    cond_tails = _remainder_condition(logs, N, tol)
    kind = conjunction(cond_bounded, cond_tails)
    overall = Verdict(
        kind,
        cond_bounded.estimate if kind is VerdictKind.FINITE else None,
        N,
        cond_bounded.probe_n,
        cond_bounded.probe_2n,
        f"partial sups {cond_bounded.kind.value}; tails {cond_tails.kind.value}",
    )
    return DualReport(
        "gamma", 1, overall, GNum(float(partials[N - 1])), remainder_ok=cond_tails
    )


def dual_test(
    a: GSeq,
    kind: str,
    m: int = 1,
    N: int = DEFAULT_WINDOW,
    tol: float = DEFAULT_TOL,
) -> DualReport:
    """Dispatch a dual test by kind name.

    ``beta`` and ``gamma`` are first-order notions; any other m is refused.
    """
    name = kind.replace("-", "_")
    if name not in DUAL_KINDS:
        raise ValueError(f"dual kind must be one of {DUAL_KINDS}, got {kind!r}")
    if name == "alpha":
        return alpha_dual_test(a, m, N, tol)
    if name == "alpha_alpha":
        return alpha_alpha_dual_test(a, m, N, tol)
    if m != 1:
        raise UnsupportedOrder(
            f"the {name} dual test is defined for m = 1 only, got m = {m}"
        )
    if name == "beta":
        return beta_dual_test(a, N, tol)
    return gamma_dual_test(a, N, tol)


def counterexample_sequence(
    a: GSeq, m: int, count: int, search_window: int = DEFAULT_WINDOW
) -> SparseLogSeq:
    """Build the sparse sequence witnessing that a falls outside the
    second dual's pre-image.

    Scans for indices k(1) < k(2) < ... with k(i)^-m |ln a_{k(i)}| > i^m,
    then places the geometric inverse of |a_{k(i)}| at k(i) and the
    geometric zero elsewhere.  The result has sum k^m |ln x_k| dominated by
    sum i^-m over the selected indices.
    """
    m = check_order(m)
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"count must be a positive integer, got {count!r}")
    limit = search_window
    if a.length is not None:
        limit = min(limit, a.length)
    entries: dict[int, float] = {}
    i = 1
    k = 1
    block = 1024
    while k <= limit and i <= count:
        n = min(block, limit - k + 1)
        logs = a.log_values(k, n)
        for j in range(n):
            idx = k + j
            lv = abs(float(logs[j]))
            if lv * float(idx) ** (-m) > float(i) ** m:
                entries[idx] = 1.0 / lv
                i += 1
                if i > count:
                    break
        k += n
    if i <= count:
        raise NoSubsequenceFound(
            f"no subsequence with k^-{m}|ln a_k| exceeding i^{m} found in "
            f"the first {limit} terms (got {i - 1} of {count})"
        )
    return SparseLogSeq(entries)
