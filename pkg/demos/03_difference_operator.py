"""
The multiplicative difference operator
======================================

A single step divides consecutive terms; order m iterates that, which
works out to a binomial-weighted alternating product.  On exp(k^m) the
order-m difference is constant and the order-(m+1) difference collapses
to the zero element exactly.
"""

from geomseq import (
    d_operator,
    delta_binomial,
    delta_norm,
    delta_recursive,
    seq_from_expr,
    sup_gabs,
    term,
)

x = seq_from_expr("exp(k^3)")

# both implementations agree; the binomial one is the fast path
d3_fast = delta_binomial(x, 3)
d3_slow = delta_recursive(x, 3)
print("order 3 at k=5 :", term(d3_fast, 5), "==", term(d3_slow, 5))

# the order-3 difference of exp(k^3) is the constant e^-6 everywhere
print("logs at k=1,10,1000:", [term(d3_fast, k).log_value for k in (1, 10, 1000)])

# one more order and the sequence is annihilated, exactly
d4 = delta_binomial(x, 4)
print("order 4 at k=9999 :", term(d4, 9999).log_value, "(exact zero)")

# order 0 is the identity
print("order 0 is x itself:", delta_binomial(x, 0) is x)

# the operator that pins the first m terms to the zero element; it makes
# the difference norm collapse to a plain sup
y = d_operator(seq_from_expr("exp(1/k)"), 2)
print("pinned head:", [term(y, k).value for k in (1, 2, 3)])
print("norm of pinned image:", delta_norm(y, 2, 500).log_value)
print("sup of its difference:", sup_gabs(delta_binomial(y, 2), 500).log_value)

# on a generic sequence the norm also counts the m leading terms
z = seq_from_expr("exp(k)")
print("norm with leading terms:", delta_norm(z, 1, 500).log_value)  # |1| + sup|d z| = 2
