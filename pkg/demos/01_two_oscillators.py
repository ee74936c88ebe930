"""Two coupled oscillators, start to finish.

Builds H = (1/2)(p^T T p + x^T V x) for two masses with a bilinear
coupling, walks through the A = TV and S = T^(1/2) V T^(1/2) routes,
and checks the closed-form eigenvalues against the iterative solver.
"""

import numpy as np

from cho import (
    OscillatorModel,
    build_T,
    build_V,
    compute_A,
    compute_S,
    decompose,
    n2_closed_eigenvalues,
    n2_conditions,
)

np.set_printoptions(precision=6, suppress=True)

# masses 1 and 2, on-site stiffnesses 3 and 2, coupling C3 = 1
model = OscillatorModel.two_coupled(1.0, 2.0, 3.0, 2.0, 1.0)
t = build_T(model)
v = build_V(model)

print("T =", t.mat, sep="\n")
print("V =", v.mat, sep="\n")

# A = TV carries the dynamics but is not symmetric; S is its symmetric
# similar partner, so both share the eigenvalues lambda_i.
a = compute_A(t.mat, v.mat)
s = compute_S(t, v.mat)
print("\nA = TV =", a, sep="\n")
print("S = T^(1/2) V T^(1/2) =", s.mat, sep="\n")

dec = decompose(model)
print("\nlambda (iterative) =", dec.lambdas)
print("lambda (closed)    =", np.array(n2_closed_eigenvalues(model)))

# positivity of both combinations decides the bound state without any
# eigensolve at all
cond_sum, cond_det = n2_conditions(model)
print(f"\nm2 C1 + m1 C2 = {cond_sum:g}  (> 0 required)")
print(f"4 C1 C2 - C3^2 = {cond_det:g}  (> 0 required)")

# the transformation x = C x' really decouples the potential
print("\nC^T V C =", dec.c.T @ v.mat @ dec.c, sep="\n")
