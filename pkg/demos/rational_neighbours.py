"""Farey arcs over [0, 1]: the picture, the count, and the growth law.

Run: python3 demos/rational_neighbours.py
"""
from fractions import Fraction

from farey_neighbours import rational, svg
from farey_neighbours.hyperbolic import AsymptoticModel, model_value, perp_length_binf

# The horizontal line at height 1/20 sits at distance ln 20 from the
# horoball at infinity. An arc reaches it exactly when its gap is >= 1/10.
arcs = svg.arc_endpoints(19)
print(f"{len(arcs)} arcs with denominators <= 19, {svg.arcs_crossing(arcs, Fraction(1, 20))} reach height 1/20")
print("perpendicular length at gap 1/10:", perp_length_binf(Fraction(1, 10)))

model = AsymptoticModel("T1_1")
for N in (10, 10 ** 3, 10 ** 5, 10 ** 6):
    n = rational.count_farey_pairs(N)
    m = model_value(model, Fraction(1, N))
    print(f"N={N:>8}  pairs={n:>9}  main term={m:12.1f}  ratio={n / m:.4f}")
# The ratio drifts towards 1 only like 1 + O(1/log N).
