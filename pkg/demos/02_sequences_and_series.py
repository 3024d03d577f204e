"""
Sequences, partial products, tails
==================================

Sequences come from three sources: a closed-form expression in k, a
buffer of values, or a buffer of logs.  Series sum with (+), which means
partial sums are partial products of the terms.
"""

import numpy as np

from geomseq import (
    g_limit_probe,
    gsum_partial,
    remainder,
    seq_from_expr,
    seq_from_logs,
    seq_from_values,
    sup_gabs,
    term,
)

# an expression-backed sequence is unbounded and exact where possible
x = seq_from_expr("exp(1/k)")
print("first terms:", [round(term(x, k).value, 4) for k in (1, 2, 3, 4)])

# partial sums multiply the terms, so their logs are harmonic numbers
s4 = gsum_partial(x, 4)
print("sum of 4 terms:", s4, " log =", s4.log_value)

# the tail after n terms, truncated at a window N
tail, verdict = remainder(x, 10, 100_000)
print("tail after 10 terms:", verdict.kind.value, " (harmonic tails diverge)")

# a cheap convergence probe samples logs across [N/2, 2N]
probe = g_limit_probe(x, 10_000, tol=1e-3)
print("limit probe:", probe.kind.value, " estimate log =", probe.estimate.log_value)

# buffers work the same way but are finite
values = seq_from_values(np.array([2.0, 4.0, 8.0, 16.0]))
print("sup over the buffer:", sup_gabs(values, 4).value)

logs = seq_from_logs(np.array([-1.0, 0.5, -0.25]))
print("from logs, term 3:", term(logs, 3))

# a convergent series: exp(1/k^2) sums toward e^(pi^2/6)
y = seq_from_expr("exp(1/(k^2))")
partial = gsum_partial(y, 100_000)
print("Basel partial log:", partial.log_value)
print("pi^2 / 6         :", np.pi**2 / 6)
