"""Walk through normal ordering: words, closed-form products, Stirling numbers.

Run:  python3 demos/normal_ordering_tour.py
"""

from laddergraphs import (
    commutator_powers,
    format_polynomial,
    multiply_monomials,
    normal_order_fold,
    normal_order_rewrite,
    normal_order_via_graphs,
    power_word,
    word_from_str,
)


def show(label, poly):
    print(f"{label:28s} {format_polynomial(poly)}")


print("The defining relation, three independent ways:")
word = word_from_str("a ad")
show("  rewrite engine:", normal_order_rewrite(word))
show("  fold over products:", normal_order_fold(word))
show("  graph composition:", normal_order_via_graphs(word))
print()

print("Closed-form products of basis monomials (note the order matters):")
show("  (2,1) * (2,2):", multiply_monomials((2, 1), (2, 2)))
show("  (2,2) * (2,1):", multiply_monomials((2, 2), (2, 1)))
print()

print("Commutators of powers collapse to lower-order terms:")
for s, k in [(1, 1), (2, 2), (3, 2)]:
    show(f"  [a^{s}, ad^{k}]:", commutator_powers(s, k))
print()

print("Powers of the number operator produce Stirling set-partition numbers:")
base = word_from_str("ad a")
for n in range(1, 6):
    show(f"  (ad a)^{n}:", normal_order_fold(power_word(base, n)))
