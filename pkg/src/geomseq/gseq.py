"""Geometric sequences, their series operations, and finite-evidence verdicts.

A :class:`GSeq` is a 1-indexed sequence of geometric numbers backed by a
closed-form expression, a finite buffer of logs, or a lazy view over other
sequences.  Nothing is memoized; every access recomputes.

Sequences expose three access paths:

* ``term(k)`` / ``log_at(k)``: one term, preferring an exact rational log
  when the backing expression admits one;
* ``log_values(start, count)``: a float64 block, vectorized;
* ``log_exact_block(start, count)``: the exact rational logs for a block,
  or None when any term lacks a bounded exact form.

Exactness matters because the difference operators downstream subtract
nearly equal exponents like k^4 at k ~ 1e4, where float64 rounding alone
would swamp identities that must cancel to zero.

Boundedness, convergence and summability over an infinite index set are
undecidable from finitely many terms, so every numeric claim is issued as a
:class:`Verdict` produced by a fixed probing protocol: evaluate a statistic
at windows N/2, N and 2N, then classify by stabilization (growth below
tol), geometric decay of increments (ratio <= 0.8), persistent growth
(ratio >= 0.95 or log magnitude beyond 1e6), or give up and say so.  The
thresholds are package constants, shared by every caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from .errors import DomainError, IndexOutOfRange, NonPositiveValue
from .garith import GNum, gabs
from . import exprdsl
from .exprdsl import ExprAst

__all__ = [
    "GSeq",
    "ExpressionSeq",
    "BufferSeq",
    "ConstantSeq",
    "SparseLogSeq",
    "Verdict",
    "VerdictKind",
    "seq_from_expr",
    "seq_from_logs",
    "seq_from_values",
    "seq_constant",
    "seq_oplus",
    "seq_odot",
    "seq_scale",
    "term",
    "gsum_partial",
    "sup_gabs",
    "g_limit_probe",
    "remainder",
    "DEFAULT_WINDOW",
    "DEFAULT_TOL",
    "LOG_MAGNITUDE_LIMIT",
]

Exact = Union[int, Fraction]

#: Default probe window N for every verdict-producing operation.
DEFAULT_WINDOW = 100_000

#: Default stabilization tolerance (log domain).
DEFAULT_TOL = 1e-6

#: A log magnitude beyond this is treated as divergence outright.
LOG_MAGNITUDE_LIMIT = 1e6

# Increment-ratio cutoffs for the N/2 : N : 2N protocol.  Increments that
# shrink to <= 0.8 of the previous window extrapolate to a finite limit
# (p-series with p >= 1.5 land at <= 0.71); increments holding >= 0.95
# mean steady growth (the harmonic series sits exactly at 1.0).
RATIO_FINITE = 0.8
RATIO_DIVERGED = 0.95

#: Number of sample points per half-window in the limit probe.
PROBE_POINTS = 33


# ---------------------------------------------------------------------------
# Verdicts


class VerdictKind(str, Enum):
    FINITE = "finite"
    DIVERGED = "diverged"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a finite probe: a kind, an estimate when one is claimed,
    the window N it was run at, and the raw probe pair for diagnostics."""

    kind: VerdictKind
    estimate: Optional[GNum]
    window: int
    probe_n: float
    probe_2n: float
    note: str = ""

    def __post_init__(self):
        if self.kind is VerdictKind.FINITE and self.estimate is None:
            raise ValueError("a finite verdict must carry an estimate")

    @property
    def is_finite(self) -> bool:
        return self.kind is VerdictKind.FINITE

    @property
    def is_diverged(self) -> bool:
        return self.kind is VerdictKind.DIVERGED

    @property
    def is_inconclusive(self) -> bool:
        return self.kind is VerdictKind.INCONCLUSIVE

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "estimate_log": None if self.estimate is None else self.estimate.log_value,
            "window": self.window,
            "probe_N": self.probe_n,
            "probe_2N": self.probe_2n,
            "note": self.note,
        }

    @staticmethod
    def from_dict(d: dict) -> "Verdict":
        est = d.get("estimate_log")
        return Verdict(
            kind=VerdictKind(d["kind"]),
            estimate=None if est is None else GNum(float(est)),
            window=int(d["window"]),
            probe_n=float(d["probe_N"]),
            probe_2n=float(d["probe_2N"]),
            note=str(d.get("note", "")),
        )


def conjunction(*verdicts: Verdict) -> VerdictKind:
    """Combine verdicts of jointly required conditions.

    Any divergence decides; all finite means finite; otherwise unresolved.
    """
    kinds = [v.kind for v in verdicts]
    if VerdictKind.DIVERGED in kinds:
        return VerdictKind.DIVERGED
    if all(k is VerdictKind.FINITE for k in kinds):
        return VerdictKind.FINITE
    return VerdictKind.INCONCLUSIVE


def monotone_verdict(
    t_half: float,
    t_n: float,
    t_2n: float,
    window: int,
    tol: float,
    note: str = "",
) -> Verdict:
    """Classify a nondecreasing statistic from its three window values."""
    if t_2n > LOG_MAGNITUDE_LIMIT:
        return Verdict(
            VerdictKind.DIVERGED, None, window, t_n, t_2n,
            note or "statistic beyond the log magnitude limit",
        )
    d1 = t_n - t_half
    d2 = t_2n - t_n
    if d2 < tol:
        return Verdict(
            VerdictKind.FINITE, GNum(float(t_2n)), window, t_n, t_2n,
            note or "stabilized: growth below tol between N and 2N",
        )
    if d1 < tol:
        return Verdict(
            VerdictKind.INCONCLUSIVE, None, window, t_n, t_2n,
            note or "statistic jumped after having been flat",
        )
    ratio = d2 / d1
    if ratio <= RATIO_FINITE:
        return Verdict(
            VerdictKind.FINITE, GNum(float(t_2n)), window, t_n, t_2n,
            note or f"increments decaying geometrically (ratio {ratio:.3f})",
        )
    if ratio >= RATIO_DIVERGED:
        return Verdict(
            VerdictKind.DIVERGED, None, window, t_n, t_2n,
            note or f"increments not shrinking (ratio {ratio:.3f})",
        )
    return Verdict(
        VerdictKind.INCONCLUSIVE, None, window, t_n, t_2n,
        note or f"increment ratio {ratio:.3f} in the undecided band",
    )


def signed_series_verdict(
    partials: np.ndarray, window: int, tol: float
) -> Verdict:
    """Convergence probe for a signed series from its partial-sum array.

    ``partials[i]`` is the partial sum through index i+1 and must cover
    2*window terms.  Convergent iff the partial sums are Cauchy-flat (max
    oscillation below tol) over both [N/2, N] and [N, 2N].
    """
    n = window
    if len(partials) < 2 * n:
        raise ValueError("partial sums must cover the doubled window")
    s_n = float(partials[n - 1])
    s_2n = float(partials[2 * n - 1])
    mag = float(np.max(np.abs(partials[: 2 * n])))
    if mag > LOG_MAGNITUDE_LIMIT:
        return Verdict(
            VerdictKind.DIVERGED, None, n, s_n, s_2n,
            "partial sums beyond the log magnitude limit",
        )
    w1 = partials[max(0, n // 2 - 1) : n]
    w2 = partials[n - 1 : 2 * n]
    osc1 = float(np.max(w1) - np.min(w1))
    osc2 = float(np.max(w2) - np.min(w2))
    if osc1 < tol and osc2 < tol:
        return Verdict(
            VerdictKind.FINITE, GNum(s_2n), n, s_n, s_2n,
            "partial sums Cauchy-flat over both half-windows",
        )
    if osc1 >= tol and osc2 >= 0.5 * osc1:
        return Verdict(
            VerdictKind.DIVERGED, None, n, s_n, s_2n,
            f"partial-sum oscillation persists ({osc1:.3g} then {osc2:.3g})",
        )
    return Verdict(
        VerdictKind.INCONCLUSIVE, None, n, s_n, s_2n,
        "oscillation shrinking but not resolved at this window",
    )


# ---------------------------------------------------------------------------
# Sequences


def _check_index(k: int) -> int:
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 1:
        raise IndexOutOfRange(f"sequence indices start at 1, got {k!r}")
    return int(k)


class GSeq:
    """Base class: a lazy 1-indexed sequence of geometric numbers."""

    @property
    def length(self) -> Optional[int]:
        """Number of defined terms, or None when unbounded."""
        return None

    @property
    def has_exact_logs(self) -> bool:
        return False

    # -- single-term access -------------------------------------------------

    def term(self, k: int) -> GNum:
        return GNum(self.log_at(k))

    def log_at(self, k: int) -> float:
        k = self._bounded(k)
        ex = self.log_exact_at(k)
        if ex is not None:
            return float(ex)
        return self._log_float(k)

    def log_exact_at(self, k: int) -> Optional[Exact]:
        return None

    def _log_float(self, k: int) -> float:
        raise NotImplementedError

    def _bounded(self, k: int) -> int:
        k = _check_index(k)
        n = self.length
        if n is not None and k > n:
            raise IndexOutOfRange(f"index {k} beyond the {n} defined terms")
        return k

    # -- block access --------------------------------------------------------

    def log_values(self, start: int, count: int) -> np.ndarray:
        """Float64 logs of terms start .. start+count-1."""
        start = self._bounded(start)
        if count < 0:
            raise ValueError(f"count must be nonnegative, got {count}")
        if count:
            self._bounded(start + count - 1)
        return self._block(start, count)

    def _block(self, start: int, count: int) -> np.ndarray:
        return np.array(
            [self._log_float(k) for k in range(start, start + count)],
            dtype=np.float64,
        )

    def log_exact_block(self, start: int, count: int) -> Optional[list[Exact]]:
        """Exact logs for a block, or None if any term has no exact form."""
        if not self.has_exact_logs:
            return None
        start = self._bounded(start)
        if count:
            self._bounded(start + count - 1)
        out: list[Exact] = []
        for k in range(start, start + count):
            ex = self.log_exact_at(k)
            if ex is None:
                return None
            out.append(ex)
        return out


class ExpressionSeq(GSeq):
    """Closed-form sequence defined by DSL source text (or a parsed AST)."""

    def __init__(self, src: str | ExprAst):
        if isinstance(src, str):
            self.ast = exprdsl.parse(src)
            self.source = exprdsl.to_source(self.ast)
        else:
            self.ast = src
            self.source = exprdsl.to_source(src)
        self._exact = self._probe_exactness()

    def _probe_exactness(self) -> bool:
        for k in (1, 2, 3):
            try:
                if exprdsl.eval_log_exact(self.ast, k) is not None:
                    return True
            except DomainError:
                continue
        return False

    def __repr__(self) -> str:
        return f"ExpressionSeq({self.source!r})"

    @property
    def has_exact_logs(self) -> bool:
        return self._exact

    def log_exact_at(self, k: int) -> Optional[Exact]:
        if not self._exact:
            return None
        return exprdsl.eval_log_exact(self.ast, _check_index(k))

    def _log_float(self, k: int) -> float:
        return exprdsl.eval_at(self.ast, k).log_value

    def _block(self, start: int, count: int) -> np.ndarray:
        ks = np.arange(start, start + count, dtype=np.int64)
        return exprdsl.eval_log_array(self.ast, ks)


class BufferSeq(GSeq):
    """Finite sequence held as an array of logs.  Pure float semantics."""

    def __init__(self, logs: np.ndarray):
        logs = np.asarray(logs, dtype=np.float64)
        if logs.ndim != 1:
            raise ValueError("a buffer sequence wants a 1-d array of logs")
        if not np.all(np.isfinite(logs)):
            raise DomainError("buffer logs must all be finite")
        self._logs = logs

    def __repr__(self) -> str:
        return f"BufferSeq(<{len(self._logs)} terms>)"

    @property
    def length(self) -> Optional[int]:
        return len(self._logs)

    def _log_float(self, k: int) -> float:
        return float(self._logs[k - 1])

    def _block(self, start: int, count: int) -> np.ndarray:
        return self._logs[start - 1 : start - 1 + count].copy()


class ConstantSeq(GSeq):
    """The same geometric number at every index."""

    def __init__(self, g: GNum):
        self._log = g.log_value
        f = Fraction(self._log)  # floats are rationals; this is lossless
        self._exact: Exact = int(f) if f.denominator == 1 else f

    def __repr__(self) -> str:
        return f"ConstantSeq(e^{self._log:g})"

    @property
    def has_exact_logs(self) -> bool:
        return True

    def log_exact_at(self, k: int) -> Optional[Exact]:
        _check_index(k)
        return self._exact

    def _log_float(self, k: int) -> float:
        return self._log

    def _block(self, start: int, count: int) -> np.ndarray:
        return np.full(count, self._log, dtype=np.float64)


class SparseLogSeq(GSeq):
    """Geometric zero everywhere except finitely many stored logs."""

    def __init__(self, entries: dict[int, float]):
        self._entries = {int(k): float(v) for k, v in entries.items()}

    def __repr__(self) -> str:
        return f"SparseLogSeq(<{len(self._entries)} nonzero terms>)"

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._entries))

    def _log_float(self, k: int) -> float:
        return self._entries.get(k, 0.0)

    def _block(self, start: int, count: int) -> np.ndarray:
        out = np.zeros(count, dtype=np.float64)
        for k, v in self._entries.items():
            if start <= k < start + count:
                out[k - start] = v
        return out


class _BinaryView(GSeq):
    def __init__(self, a: GSeq, b: GSeq):
        self.a = a
        self.b = b

    @property
    def length(self) -> Optional[int]:
        la, lb = self.a.length, self.b.length
        if la is None:
            return lb
        if lb is None:
            return la
        return min(la, lb)

    @property
    def has_exact_logs(self) -> bool:
        return self.a.has_exact_logs and self.b.has_exact_logs


class OplusView(_BinaryView):
    """Termwise geometric sum: logs add."""

    def log_exact_at(self, k: int) -> Optional[Exact]:
        ea = self.a.log_exact_at(k)
        if ea is None:
            return None
        eb = self.b.log_exact_at(k)
        if eb is None:
            return None
        return ea + eb

    def _log_float(self, k: int) -> float:
        return self.a.log_at(k) + self.b.log_at(k)

    def _block(self, start: int, count: int) -> np.ndarray:
        return self.a.log_values(start, count) + self.b.log_values(start, count)


class OdotView(_BinaryView):
    """Termwise geometric product: logs multiply."""

    def log_exact_at(self, k: int) -> Optional[Exact]:
        ea = self.a.log_exact_at(k)
        if ea is None:
            return None
        eb = self.b.log_exact_at(k)
        if eb is None:
            return None
        return ea * eb

    def _log_float(self, k: int) -> float:
        return self.a.log_at(k) * self.b.log_at(k)

    def _block(self, start: int, count: int) -> np.ndarray:
        return self.a.log_values(start, count) * self.b.log_values(start, count)


def seq_from_expr(src: str | ExprAst) -> ExpressionSeq:
    return ExpressionSeq(src)


def seq_from_logs(logs: Iterable[float]) -> BufferSeq:
    return BufferSeq(np.asarray(list(logs) if not isinstance(logs, np.ndarray) else logs))


def seq_from_values(values: Iterable[float]) -> BufferSeq:
    vals = np.asarray(
        list(values) if not isinstance(values, np.ndarray) else values,
        dtype=np.float64,
    )
    if not np.all(np.isfinite(vals) & (vals > 0.0)):
        raise NonPositiveValue("buffer values must be strictly positive finite reals")
    return BufferSeq(np.log(vals))


def seq_constant(g: GNum) -> ConstantSeq:
    return ConstantSeq(g)


def seq_oplus(x: GSeq, y: GSeq) -> GSeq:
    return OplusView(x, y)


def seq_odot(x: GSeq, y: GSeq) -> GSeq:
    return OdotView(x, y)


def seq_scale(alpha: GNum, x: GSeq) -> GSeq:
    """Geometric scalar multiple alpha (*) x_k, i.e. logs scaled by ln(alpha)."""
    return OdotView(ConstantSeq(alpha), x)


# ---------------------------------------------------------------------------
# Series operations


def term(x: GSeq, k: int) -> GNum:
    """Term access as a free function, for symmetry with the other ops."""
    return x.term(k)


def gsum_partial(x: GSeq, n: int) -> GNum:
    """Geometric partial sum of the first n terms: exp of the exact
    compensated sum of logs (math.fsum)."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"partial sums want a nonnegative term count, got {n!r}")
    if n == 0:
        return GNum(0.0)
    return GNum(math.fsum(x.log_values(1, n)))


def sup_gabs(x: GSeq, N: int) -> GNum:
    """Supremum of the geometric absolute values of the first N terms."""
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"sup window must be a positive integer, got {N!r}")
    return GNum(float(np.max(np.abs(x.log_values(1, N)))))


def _probe_ks(lo: int, hi: int, points: int = PROBE_POINTS) -> np.ndarray:
    lo = max(1, lo)
    return np.unique(np.linspace(lo, hi, points).round().astype(np.int64))


def _limit_probe_detail(
    x: GSeq, N: int, tol: float
) -> tuple[Verdict, Optional[int]]:
    """Shared core of the limit probe; also reports a divergence witness."""
    if not isinstance(N, int) or N < 4:
        raise ValueError(f"the limit probe needs N >= 4, got {N!r}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    ks1 = _probe_ks(N // 2, N)
    ks2 = _probe_ks(N, 2 * N)
    logs1 = np.array([x.log_at(int(k)) for k in ks1])
    logs2 = np.array([x.log_at(int(k)) for k in ks2])
    all_ks = np.concatenate([ks1, ks2])
    all_logs = np.concatenate([logs1, logs2])
    probe_n = float(logs1[-1])
    probe_2n = float(logs2[-1])

    i_max = int(np.argmax(np.abs(all_logs)))
    witness = int(all_ks[i_max])
    if abs(all_logs[i_max]) > LOG_MAGNITUDE_LIMIT:
        return (
            Verdict(
                VerdictKind.DIVERGED, None, N, probe_n, probe_2n,
                "log magnitude beyond the divergence limit",
            ),
            witness,
        )
    osc = float(np.max(all_logs) - np.min(all_logs))
    if osc < tol:
        est = GNum(float(np.median(logs2)))
        return (
            Verdict(
                VerdictKind.FINITE, est, N, probe_n, probe_2n,
                f"log oscillation {osc:.3g} below tol across [N/2, 2N]",
            ),
            witness,
        )
    mags = np.abs(all_logs)
    monotone = bool(np.all(np.diff(mags) >= 0.0))
    growth1 = float(abs(logs1[-1]) - abs(logs1[0]))
    growth2 = float(abs(logs2[-1]) - abs(logs2[0]))
    if monotone and growth1 > tol and growth2 > tol:
        return (
            Verdict(
                VerdictKind.DIVERGED, None, N, probe_n, probe_2n,
                "log magnitude growing monotonically through both half-windows",
            ),
            witness,
        )
    return (
        Verdict(
            VerdictKind.INCONCLUSIVE, None, N, probe_n, probe_2n,
            f"oscillation {osc:.3g} above tol without monotone growth",
        ),
        witness,
    )


def g_limit_probe(x: GSeq, N: int = DEFAULT_WINDOW, tol: float = DEFAULT_TOL) -> Verdict:
    """Probe for a geometric limit by sampling logs over [N/2, 2N].

    Finite (converged) when the sampled logs vary by less than tol, with the
    median of the late window as the estimate; diverged when |log| runs away
    monotonically or past the magnitude limit; inconclusive otherwise.
    """
    verdict, _ = _limit_probe_detail(x, N, tol)
    return verdict


def remainder(
    a: GSeq, n: int, N: int = DEFAULT_WINDOW, tol: float = DEFAULT_TOL
) -> tuple[GNum, Verdict]:
    """Truncated geometric tail after the n-th term, with a stability verdict.

    Returns exp(sum of logs over n+1 .. N) and a verdict comparing that tail
    against the one truncated at 2N: finite when they differ by less than
    tol, diverged when the discrepancy keeps pace with the previous window
    or the tail leaves the magnitude limit.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"tail start must be a nonnegative integer, got {n!r}")
    if not isinstance(N, int) or N <= n + 1:
        raise ValueError(f"window N must exceed n + 1, got N={N!r}, n={n!r}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    logs = a.log_values(n + 1, 2 * N - n)
    mid = max(n + 1, N // 2)
    t_half = math.fsum(logs[: mid - n])
    t_n = math.fsum(logs[: N - n])
    t_2n = math.fsum(logs)
    tail = GNum(float(t_n))
    d2 = abs(t_2n - t_n)
    d1 = abs(t_n - t_half)
    if max(abs(t_n), abs(t_2n)) > LOG_MAGNITUDE_LIMIT:
        verdict = Verdict(
            VerdictKind.DIVERGED, None, N, t_n, t_2n,
            "tail beyond the log magnitude limit",
        )
    elif d2 < tol:
        verdict = Verdict(
            VerdictKind.FINITE, tail, N, t_n, t_2n,
            "tails at N and 2N agree below tol",
        )
    elif d1 >= tol and d2 >= RATIO_DIVERGED * d1:
        verdict = Verdict(
            VerdictKind.DIVERGED, None, N, t_n, t_2n,
            "tail discrepancy not shrinking between windows",
        )
    else:
        verdict = Verdict(
            VerdictKind.INCONCLUSIVE, None, N, t_n, t_2n,
            "tail still moving at this window",
        )
    return tail, verdict
