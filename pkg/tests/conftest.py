"""Shared builders for randomized tests.

Every helper takes an explicit Generator so individual tests stay
reproducible under pytest's random ordering.
"""

import numpy as np

from cho import OscillatorModel
from cho.linalg import SymMatrix


def random_sym(rng: np.random.Generator, n: int, scale: float = 2.0) -> SymMatrix:
    a = rng.uniform(-scale, scale, size=(n, n))
    return SymMatrix((a + a.T) / 2.0)


def random_spd(rng: np.random.Generator, n: int) -> SymMatrix:
    a = rng.normal(size=(n, n))
    return SymMatrix(a @ a.T + n * np.eye(n))


def random_model(
    rng: np.random.Generator,
    n: int,
    mass_range=(0.5, 2.0),
    omega2_range=(0.3, 3.0),
    coupling_scale: float = 1.5,
    coupling_prob: float = 0.8,
) -> OscillatorModel:
    masses = rng.uniform(*mass_range, size=n)
    omega2 = rng.uniform(*omega2_range, size=n)
    couplings = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.uniform() < coupling_prob:
                couplings[(i, j)] = float(rng.uniform(-coupling_scale, coupling_scale))
    return OscillatorModel(
        masses=masses,
        stiffness_diag=masses * omega2,
        couplings=couplings,
    )


def random_bound_model(rng: np.random.Generator, n: int, **kw) -> OscillatorModel:
    # rejection-sample until Sylvester accepts; weak couplings keep this fast
    from cho import BOUND, classify

    kw.setdefault("coupling_scale", 0.6)
    while True:
        model = random_model(rng, n, **kw)
        if classify(model).verdict == BOUND:
            return model
