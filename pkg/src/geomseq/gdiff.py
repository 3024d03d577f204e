"""The generalized geometric difference operator and its norm.

The m-th order operator applies x_k (-) x_{k+1} recursively; expanded, the
log of the m-th difference at k is the alternating binomial combination

    sum_{v=0}^{m} (-1)^v C(m, v) * ln x_{k+v}

which is the classical m-fold forward difference of the logs up to the sign
(-1)^m.  Two independent implementations are kept deliberately: the
recursive chain is the reference oracle, the binomial form is the fast
default, and the test suite holds them against each other.

Polynomial exponents are the canonical stress case: the m-th difference of
e^(k^m) is the constant e^((-1)^m * m!) and the (m+1)-st collapses to the
geometric zero.  Both operators route through the exact rational log path
of the underlying sequence when one exists, because subtracting float64
renderings of k^4 near k = 1e4 would leave noise of order 2^m instead.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .garith import GNum
from .gseq import Exact, GSeq

__all__ = [
    "MAX_ORDER",
    "binomial_row",
    "delta_recursive",
    "delta_binomial",
    "d_operator",
    "delta_norm",
    "check_order",
]

#: Largest supported difference order for the binomial table.
MAX_ORDER = 60


def check_order(m: int) -> int:
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise ValueError(f"difference order must be a nonnegative integer, got {m!r}")
    if m > MAX_ORDER:
        raise OverflowError(
            f"difference order {m} exceeds the supported maximum {MAX_ORDER}"
        )
    return m


def binomial_row(m: int) -> list[int]:
    """Row m of Pascal's triangle as exact integers."""
    m = check_order(m)
    row = [1]
    for _ in range(m):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


class _DeltaStepView(GSeq):
    """One first-order geometric difference of the parent sequence."""

    def __init__(self, child: GSeq):
        self.child = child

    @property
    def length(self) -> Optional[int]:
        n = self.child.length
        return None if n is None else max(0, n - 1)

    @property
    def has_exact_logs(self) -> bool:
        return self.child.has_exact_logs

    def log_exact_at(self, k: int) -> Optional[Exact]:
        a = self.child.log_exact_at(k)
        if a is None:
            return None
        b = self.child.log_exact_at(k + 1)
        if b is None:
            return None
        return a - b

    def _log_float(self, k: int) -> float:
        return self.child.log_at(k) - self.child.log_at(k + 1)

    def _block(self, start: int, count: int) -> np.ndarray:
        ex = self.log_exact_block(start, count)
        if ex is not None:
            return np.array([float(v) for v in ex], dtype=np.float64)
        block = self.child.log_values(start, count + 1)
        return block[:-1] - block[1:]

    def log_exact_block(self, start: int, count: int) -> Optional[list[Exact]]:
        inner = self.child.log_exact_block(start, count + 1)
        if inner is None:
            return None
        return [inner[i] - inner[i + 1] for i in range(count)]


class _DeltaBinomialView(GSeq):
    """m-th geometric difference through the alternating binomial form."""

    def __init__(self, child: GSeq, m: int):
        self.child = child
        self.m = check_order(m)
        row = binomial_row(self.m)
        self.coeffs = [c if v % 2 == 0 else -c for v, c in enumerate(row)]

    @property
    def length(self) -> Optional[int]:
        n = self.child.length
        return None if n is None else max(0, n - self.m)

    @property
    def has_exact_logs(self) -> bool:
        return self.child.has_exact_logs

    def log_exact_at(self, k: int) -> Optional[Exact]:
        total: Exact = 0
        for v, c in enumerate(self.coeffs):
            ex = self.child.log_exact_at(k + v)
            if ex is None:
                return None
            total = total + c * ex
        return total

    def _log_float(self, k: int) -> float:
        ex = self.log_exact_at(k) if self.child.has_exact_logs else None
        if ex is not None:
            return float(ex)
        logs = [self.child.log_at(k + v) for v in range(self.m + 1)]
        return math.fsum(c * u for c, u in zip(self.coeffs, logs))

    def _block(self, start: int, count: int) -> np.ndarray:
        ex = self.log_exact_block(start, count)
        if ex is not None:
            return np.array([float(v) for v in ex], dtype=np.float64)
        block = self.child.log_values(start, count + self.m)
        out = np.zeros(count, dtype=np.float64)
        for v, c in enumerate(self.coeffs):
            out += c * block[v : v + count]
        return out

    def log_exact_block(self, start: int, count: int) -> Optional[list[Exact]]:
        inner = self.child.log_exact_block(start, count + self.m)
        if inner is None:
            return None
        coeffs = self.coeffs
        return [
            sum(c * inner[i + v] for v, c in enumerate(coeffs))
            for i in range(count)
        ]


class _DOperatorView(GSeq):
    """The head-flattening map: first m terms pinned to the geometric zero."""

    def __init__(self, child: GSeq, m: int):
        self.child = child
        self.m = check_order(m)

    @property
    def length(self) -> Optional[int]:
        return self.child.length

    @property
    def has_exact_logs(self) -> bool:
        return self.child.has_exact_logs

    def log_exact_at(self, k: int) -> Optional[Exact]:
        if k <= self.m:
            return 0
        return self.child.log_exact_at(k)

    def _log_float(self, k: int) -> float:
        if k <= self.m:
            return 0.0
        return self.child.log_at(k)

    def _block(self, start: int, count: int) -> np.ndarray:
        out = self.child.log_values(start, count)
        head = self.m - start + 1
        if head > 0:
            out[: min(count, head)] = 0.0
        return out

    def log_exact_block(self, start: int, count: int) -> Optional[list[Exact]]:
        inner = self.child.log_exact_block(start, count)
        if inner is None:
            return None
        head = self.m - start + 1
        if head > 0:
            inner = [0] * min(count, head) + inner[min(count, head) :]
        return inner


def delta_recursive(x: GSeq, m: int) -> GSeq:
    """Reference implementation: m chained first-order differences."""
    m = check_order(m)
    out = x
    for _ in range(m):
        out = _DeltaStepView(out)
    return out


def delta_binomial(x: GSeq, m: int) -> GSeq:
    """Default implementation via the alternating binomial expansion."""
    m = check_order(m)
    if m == 0:
        return x
    return _DeltaBinomialView(x, m)


def d_operator(x: GSeq, m: int) -> GSeq:
    """Pin the first m terms to the geometric zero, keep the rest.

    On the image of this map the difference norm below loses its head sum
    and collapses to the plain sup norm of the m-th difference.
    """
    m = check_order(m)
    return _DOperatorView(x, m)


def delta_norm(x: GSeq, m: int, N: int) -> GNum:
    """The difference-space norm at window N.

    Geometric sum of the geometric absolute values of the first m terms,
    geometrically added to the sup of the m-th difference's absolute values
    over k <= N.  In logs: sum of |ln x_i| plus max |ln (delta^m x)_k|.
    """
    m = check_order(m)
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"norm window must be a positive integer, got {N!r}")
    head = math.fsum(abs(x.log_at(i)) for i in range(1, m + 1))
    tail_view = delta_binomial(x, m)
    sup = float(np.max(np.abs(tail_view.log_values(1, N))))
    return GNum(head + sup)
