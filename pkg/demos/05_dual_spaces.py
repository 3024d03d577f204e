"""
Dual space membership
=====================

Four duals of the order-m zero-convergent space, ordered by strength:
absolute (alpha), its second dual (alpha-alpha), conditional (beta), and
bounded-partials (gamma).  Each test returns a verdict plus the partial
quantity it watched.
"""

from geomseq import (
    alpha_alpha_dual_test,
    alpha_dual_test,
    beta_dual_test,
    counterexample_sequence,
    dual_test,
    gamma_dual_test,
    seq_from_expr,
    term,
)

N = 20_000

# fast geometric decay is in every dual
a = seq_from_expr("exp(2^(0-k))")
for kind in ("alpha", "beta", "gamma"):
    r = dual_test(a, kind, 1, N)
    print(f"{kind:6s}: member={r.member}")

# exp(1/k^2) fails alpha at m=1 (the weighted series is harmonic) ...
b = seq_from_expr("exp(1/(k^2))")
print("\nexp(1/k^2) alpha m=1:", alpha_dual_test(b, 1, N).member)
# ... but its beta test also fails, and the report says which half broke
rb = beta_dual_test(b, N)
print("beta:", rb.member, "--", rb.verdict.note)

# the second dual only asks for k^-m-bounded logs, a much weaker demand
print("\nalpha-alpha m=1:", alpha_alpha_dual_test(b, 1, N).member)
print("alpha-alpha m=2 of exp(k):", alpha_alpha_dual_test(seq_from_expr("exp(k)"), 2, N).member)

# alpha-alpha membership does not pull a sequence back into alpha: from
# any sequence with fast-growing logs we can extract a sparse subsequence
# whose alpha-pairing still converges, so the second dual is strictly
# bigger and the space is not perfect
w = seq_from_expr("exp(k^2)")
sparse = counterexample_sequence(w, 1, 4)
print("\nsparse support:", sparse.support)
print("sparse logs   :", [round(term(sparse, k).log_value, 6) for k in sparse.support])
print("sparse is alpha-summable:", alpha_dual_test(sparse, 1, N).member)
print("w itself is alpha-summable:", alpha_dual_test(w, 1, N).member)
