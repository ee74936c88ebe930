"""Three identical oscillators and their bound-state window.

With m = omega = 1 and every pair coupled by the same D, the modes are
known exactly: a doubly degenerate pair at 1 - D/2 and a symmetric
stretch at 1 + D.  Sweeping D shows the system stays bound only for
-1 < D < 2.
"""

import numpy as np

from cho import OscillatorModel, classify, decompose

np.set_printoptions(precision=6, suppress=True)

model = OscillatorModel.identical(3, m=1.0, omega=1.0, d=1.0)
dec = decompose(model)
print("lambda =", dec.lambdas, " (expect 0.5, 0.5, 2.0)")
print("mode matrix U =", dec.u, sep="\n")
print("symmetric stretch =", dec.u[:, 2], " (expect (1,1,1)/sqrt(3))")

rep = classify(model)
print("\nleading principal minors =", rep.minors)
print("verdict:", rep.verdict)

# the window: both edges show up as a minor crossing zero
print("\n   D      minor_2   minor_3   verdict")
for d in (-1.5, -1.0, -0.5, 0.0, 1.0, 1.9, 2.0, 2.5):
    swept = OscillatorModel.identical(3, d=d)
    r = classify(swept)
    print(f"  {d:4.1f}   {r.minors[1]:8.4f}  {r.minors[2]:8.4f}   {r.verdict}")
