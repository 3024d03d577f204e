"""
Classifying sequences into difference spaces
============================================

Three families, indexed by the difference order m: bounded (linf),
convergent (c), and convergent to the zero element (c0).  The classifier
watches windows N/2, N, 2N and refuses to guess when they disagree.
"""

from geomseq import (
    algebra_counterexample,
    classify,
    inclusion_demo,
    lemma_equivalence_check,
    seq_from_expr,
)

N = 20_000

# exp(k^2) has an unbounded first difference but a constant second one
x = seq_from_expr("exp(k^2)")
for m in (1, 2, 3):
    for space in ("linf", "c", "c0"):
        r = classify(x, space, m, N)
        print(f"m={m} {space:4s}: member={r.member}  ({r.verdict.kind.value})")
    print()

# a report explains itself
r = classify(seq_from_expr("exp(k)"), "c0", 1, N)
print("exp(k), c0 at m=1:", r.verdict.note)

# the weighted-sup lemma: bounded order-m difference is the same thing as
# k^-m-weighted boundedness, and the checker verifies both sides agree
eq = lemma_equivalence_check(seq_from_expr("exp(k)"), N)
print("\nlemma agreement on exp(k):", eq.agreement)

# each inclusion between consecutive orders is strict; the demo produces
# the witness that separates them
demo = inclusion_demo(2, N)
print("\ninclusion at m=2 holds:", demo.holds, " witness:", demo.witness_source)
print("  in the larger space :", demo.at_order_m_plus_1.member)
print("  not in the smaller  :", demo.at_order_m.member)

# the spaces are not closed under (*): two members multiply out of c0
cx = algebra_counterexample(2, N)
print("\nproduct escapes at m=2:", cx.holds)
print("  factors:", cx.x_source, "and", cx.y_source)
