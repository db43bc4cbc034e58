"""Neighbours over imaginary quadratic fields, including a nonprincipal class.

Run: python3 demos/field_neighbours.py
"""
from fractions import Fraction

from farey_neighbours import bianchi as bz
from farey_neighbours.hyperbolic import ALT, PAPER, AsymptoticModel, model_value
from farey_neighbours.quadratic import QuadField, class_group

F = QuadField(-5)
print("class number of Q(sqrt -5):", class_group(F)[0])
for x in bz.class_points(F):
    w = bz.construct_k_farey(x)
    print(f"  class of norm {x.ideal.norm}: alpha={w.alpha}, beta={w.beta}, iota={w.iota}, m={w.m}")

# the explicit reciprocal pair and its involution
w = bz.example_family(F, "ex2")
print("ex2:", w.alpha, w.beta, "E =", w.E.entries())
ha, hb = bz.canonical_horoball(w.alpha), bz.canonical_horoball(w.beta)
print("horoball diameters", ha.diameter, hb.diameter, "tangent:", bz.horoballs_tangent(ha, hb))

# Counting over the Gaussian integers: which volume normalisation fits?
G = QuadField(-1)
eps = Fraction(1, 40)
n = bz.count_k_farey_pairs(G, epsilon=eps)
for variant in (PAPER, ALT):
    m = model_value(AsymptoticModel("T1_2", {"field": G}, variant), eps)
    print(f"f=-1 eps=1/40: {n} pairs, {variant} main term {m:.0f}, ratio {n / m:.3f}")
