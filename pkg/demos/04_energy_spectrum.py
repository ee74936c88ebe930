"""Quantum energy levels of a bound system.

Once the modes decouple, E_{n} = hbar * sum_i sqrt(lambda_i) (n_i + 1/2).
The enumerator walks the occupation lattice best-first, so degenerate
levels come out adjacent and the count per energy shows the degeneracy
structure directly.
"""

import itertools

from cho import OscillatorModel, decompose, ground_state_energy, lowest_levels

model = OscillatorModel.identical(3, d=1.0)
dec = decompose(model)

print("mode frequencies:", [f"{x**0.5:.6f}" for x in dec.lambdas])
print(f"ground state energy: {ground_state_energy(dec):.6f}  (= sqrt(2))")

levels = lowest_levels(dec, k=12)
print("\n   #   energy      occupations")
for i, lv in enumerate(levels, start=1):
    print(f"  {i:2d}   {lv.energy:.6f}   {lv.occupations}")

# group by energy to read off degeneracies
print("\n  energy      degeneracy")
for energy, group in itertools.groupby(levels, key=lambda lv: round(lv.energy, 9)):
    print(f"  {energy:.6f}   {len(list(group))}")
