"""Farey pairs over the Hurwitz order: exact counts at small scale.

Run: python3 demos/quaternion_neighbours.py
"""
import random
from fractions import Fraction

from farey_neighbours import quaternion as qt
from farey_neighbours.hyperbolic import AsymptoticModel, fitted_constant, model_coefficient

rng = random.Random(0)
g = qt.random_sl2(rng, length=3)
x, y = (g.a, g.c), (g.b, g.d)
print("random element of SL2(O) has Dieudonne determinant", qt.dieudonne_det(g).exact_root)
print("its images of infinity and 0 are neighbours:", qt.is_quat_farey(x, y))

for k in range(0, 7):
    eps = Fraction(1, 2 ** k)
    n = qt.count_quat_farey_pairs(eps)
    print(f"eps=1/{2 ** k:<3} count={n:>7}  count*eps^2/ln(1/eps)={fitted_constant(n, eps, 2):.4f}")
print("main-term coefficient:", round(model_coefficient(AsymptoticModel("T16")), 4))
# The fitted constants drift down slowly and sit well above the coefficient;
# the lower-order terms still dominate at these scales.
