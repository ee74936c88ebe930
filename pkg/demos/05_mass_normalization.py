"""The reference mass drops out.

Scaling the transformation to C = sqrt(m_ref) T^(1/2) U turns the
potential into m_ref * Lambda, i.e. every mode looks like one particle
of mass m_ref with stiffness k_i.  The ratios k_i / m_ref, and with
them the physics, are the same for any choice of m_ref.
"""

import numpy as np

from cho import OscillatorModel, decompose_mass_normalized

np.set_printoptions(precision=8, suppress=True)

model = OscillatorModel.two_coupled(1.0, 2.0, 3.0, 2.0, 1.0)

print("   m_ref     k_1        k_2        lambda_1    lambda_2")
for m_ref in (0.01, 1.0, np.sqrt(2.0), 100.0):
    mn = decompose_mass_normalized(model, m_ref=m_ref)
    print(
        f"  {m_ref:7.3f}  {mn.k[0]:9.5f}  {mn.k[1]:9.5f}"
        f"  {mn.lambdas[0]:.8f}  {mn.lambdas[1]:.8f}"
    )

default = decompose_mass_normalized(model)
print(f"\ndefault reference is the geometric mean: {default.m_ref:.6f} = sqrt(2)")
