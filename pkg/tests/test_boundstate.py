"""Bound-state classification: Sylvester minors, closed-form polynomial
conditions for n = 2..5, and the cubic-coefficient route."""

import numpy as np
import pytest

from cho import (
    BOUND,
    MARGINAL,
    UNBOUND,
    OscillatorModel,
    classify,
    decompose,
    n2_conditions,
    n3_charpoly,
    n3_conditions,
    n3_discriminant,
    n4_condition,
    n5_condition,
    necessary_coefficient_conditions,
    verify_condition_terms,
)
from cho.boundstate import CONDITION_TERMS, _minor_scale
from cho.errors import WrongDimension
from cho.linalg import SymMatrix, leading_principal_minors
from cho.model import build_T, build_V

from conftest import random_model


# --- verdicts -----------------------------------------------------------------


def test_identical_triple_is_bound_with_known_minors():
    rep = classify(OscillatorModel.identical(3, d=1.0))
    assert rep.verdict == BOUND
    assert np.allclose(rep.minors, [1.0, 0.75, 0.5], atol=1e-12)
    assert all(m.status == "positive" for m in rep.per_minor)


def test_strong_coupling_is_unbound():
    rep = classify(OscillatorModel.identical(3, d=3.0))
    assert rep.verdict == UNBOUND
    assert rep.per_minor[1].status == "negative"


def test_zero_minor_is_marginal():
    # C3^2 = 4 C1 C2 puts the pair exactly on the boundary
    rep = classify(OscillatorModel.two_coupled(1.0, 1.0, 1.0, 1.0, 2.0))
    assert rep.verdict == MARGINAL
    assert rep.per_minor[1].status == "marginal"


def test_negative_beats_marginal():
    # minor_2 = 0 but minor_1 < 0: Unbound wins over Marginal
    m = OscillatorModel(
        masses=[1.0, 1.0],
        stiffness_diag=[-1.0, -1.0],
        couplings={(0, 1): 2.0},
    )
    rep = classify(m)
    assert rep.per_minor[0].status == "negative"
    assert rep.per_minor[1].status == "marginal"
    assert rep.verdict == UNBOUND


def test_bound_window_of_identical_triple():
    for d, expected in [(-1.5, UNBOUND), (-0.5, BOUND), (1.9, BOUND), (2.1, UNBOUND)]:
        assert classify(OscillatorModel.identical(3, d=d)).verdict == expected


def test_classify_checks_pass_on_bound_models():
    rng = np.random.default_rng(40)
    for n in (2, 3, 4, 5):
        for _ in range(20):
            rep = classify(random_model(rng, n, coupling_scale=0.5))
            if rep.verdict == MARGINAL:
                continue
            for check in rep.closed_form_checks:
                assert check.passed, check


def test_classify_skips_closed_forms_with_kinetic_override():
    m = OscillatorModel(
        masses=[1.0, 1.0],
        stiffness_diag=[1.0, 1.0],
        kinetic_override=SymMatrix(np.array([[1.0, 0.2], [0.2, 1.0]])),
    )
    rep = classify(m)
    assert rep.closed_form_checks == ()
    assert rep.verdict == BOUND


# --- closed forms, n = 2 and 3 -------------------------------------------------


def test_n2_conditions_known_case():
    m = OscillatorModel.two_coupled(1.0, 1.0, 1.0, 1.0, 1.0)
    assert n2_conditions(m) == pytest.approx((2.0, 3.0))
    m = OscillatorModel.two_coupled(1.0, 2.0, 3.0, 2.0, 1.0)
    assert n2_conditions(m) == pytest.approx((8.0, 23.0))


def test_n2_conditions_match_sylvester():
    rng = np.random.default_rng(41)
    for _ in range(500):
        m = OscillatorModel.two_coupled(
            rng.uniform(0.1, 10),
            rng.uniform(0.1, 10),
            rng.uniform(-5, 5),
            rng.uniform(-5, 5),
            rng.uniform(-5, 5),
        )
        off = m.couplings[(0, 1)] / (2 * np.sqrt(m.masses[0] * m.masses[1]))
        s = SymMatrix(
            np.array(
                [
                    [m.stiffness_diag[0] / m.masses[0], off],
                    [off, m.stiffness_diag[1] / m.masses[1]],
                ]
            )
        )
        minors = leading_principal_minors(s)
        if min(abs(x) for x in minors) < 1e-9:
            continue
        cond_a, cond_b = n2_conditions(m)
        # both positive <=> positive definite; the pair (sum, product form)
        assert (cond_a > 0 and cond_b > 0) == all(x > 0 for x in minors)


def test_n3_charpoly_known_cases():
    m = OscillatorModel.from_frequencies(
        [1.0, 1.0, 1.0],
        np.sqrt([1.0, 2.0, 3.0]),
        couplings={(0, 1): 1.0, (0, 2): 1.0, (1, 2): 1.0},
    )
    assert n3_charpoly(m) == pytest.approx((6.0, 10.25, 4.75))
    assert n3_charpoly(OscillatorModel.identical(3, d=1.0)) == pytest.approx(
        (3.0, 2.25, 0.5)
    )


def test_n3_charpoly_matches_eigenvalues():
    rng = np.random.default_rng(42)
    for _ in range(200):
        m = random_model(rng, 3)
        a, b, c = n3_charpoly(m)
        lam = decompose(m).lambdas
        assert a == pytest.approx(np.sum(lam), rel=1e-9, abs=1e-9)
        assert b == pytest.approx(
            lam[0] * lam[1] + lam[0] * lam[2] + lam[1] * lam[2], rel=1e-9, abs=1e-9
        )
        assert c == pytest.approx(np.prod(lam), rel=1e-9, abs=1e-9)


def test_n3_discriminant_known_values():
    # roots 1, 2, 3: prod of squared differences is 4
    assert n3_discriminant(6.0, 11.0, 6.0) == pytest.approx(4.0)
    # repeated roots collapse it to zero
    assert n3_discriminant(3.0, 2.25, 0.5) == pytest.approx(0.0, abs=1e-12)


def test_n3_discriminant_equals_root_spread():
    rng = np.random.default_rng(43)
    for _ in range(200):
        m = random_model(rng, 3)
        a, b, c = n3_charpoly(m)
        lam = decompose(m).lambdas
        spread = (
            (lam[0] - lam[1]) ** 2 * (lam[0] - lam[2]) ** 2 * (lam[1] - lam[2]) ** 2
        )
        assert n3_discriminant(a, b, c) == pytest.approx(
            spread, rel=1e-6, abs=1e-6 * (1 + abs(a)) ** 6
        )


def test_coefficient_route_agrees_with_verdict():
    rng = np.random.default_rng(44)
    agreements = 0
    while agreements < 300:
        m = random_model(rng, 3, omega2_range=(0.3, 3.0))
        rep = classify(m)
        if rep.verdict == MARGINAL:
            continue
        route = necessary_coefficient_conditions(m)
        assert route.discriminant_nonneg  # symmetric S has a real spectrum
        assert route.all_pass == (rep.verdict == BOUND)
        agreements += 1


def test_wrong_dimension_raises():
    m = OscillatorModel.identical(4)
    with pytest.raises(WrongDimension) as err:
        n3_charpoly(m)
    assert "n=3" in str(err.value) and "n=4" in str(err.value)
    with pytest.raises(WrongDimension):
        n2_conditions(OscillatorModel.identical(3))
    with pytest.raises(WrongDimension):
        n5_condition(OscillatorModel.identical(4))


def test_closed_forms_require_diagonal_kinetic():
    m = OscillatorModel(
        masses=[1.0, 1.0],
        stiffness_diag=[1.0, 1.0],
        kinetic_override=SymMatrix(np.eye(2)),
    )
    with pytest.raises(ValueError):
        n2_conditions(m)


# --- explicit polynomials vs scaled minors -------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_condition_equals_scaled_minor(n):
    rng = np.random.default_rng(45 + n)
    fn = {2: lambda m: n2_conditions(m)[1],
          3: lambda m: n3_conditions(m)[1],
          4: n4_condition,
          5: n5_condition}[n]
    for _ in range(200):
        m = random_model(rng, n, mass_range=(0.6, 1.6), omega2_range=(0.4, 2.5),
                         coupling_scale=1.2)
        s = SymMatrix(
            np.asarray(build_T(m)) ** 0.5 @ np.asarray(build_V(m))
            @ np.asarray(build_T(m)) ** 0.5
        )
        minor = leading_principal_minors(s)[-1]
        expect = _minor_scale(np.asarray(m.masses), n) * minor
        got = fn(m)
        assert got == pytest.approx(expect, rel=1e-8, abs=1e-8)


def test_uncoupled_n4_condition_factorizes():
    m = OscillatorModel.from_frequencies([1.0, 2.0, 0.5, 3.0], [1.0, 0.5, 2.0, 1.5])
    g = np.asarray(m.stiffness_diag)
    assert n4_condition(m) == pytest.approx(16.0 * np.prod(g), rel=1e-12)


def test_n3_condition_factorizes_when_third_site_detaches():
    rng = np.random.default_rng(46)
    for _ in range(50):
        m = random_model(rng, 3, coupling_prob=1.0)
        m = m.with_coupling(0, 2, 0.0).with_coupling(1, 2, 0.0)
        pair, triple = (
            n2_conditions(
                OscillatorModel(
                    masses=m.masses[:2],
                    stiffness_diag=m.stiffness_diag[:2],
                    couplings={(0, 1): m.couplings[(0, 1)]},
                )
            )[1],
            n3_conditions(m)[1],
        )
        assert triple == pytest.approx(m.stiffness_diag[2] * pair, rel=1e-10, abs=1e-12)


# --- transcription self-check ---------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_condition_terms_verify_clean(n):
    assert verify_condition_terms(n) == []


def test_corrupted_coefficient_is_pinpointed():
    terms = list(CONDITION_TERMS[4])
    coeff, pairs, sites = terms[6]
    terms[6] = (coeff + 1.0, pairs, sites)
    problems = verify_condition_terms(4, terms)
    assert problems
    assert problems[0].startswith("term 7 ")
    assert f"transcribed coefficient {coeff + 1.0:g}" in problems[0]


def test_dropped_term_is_reported_missing():
    terms = list(CONDITION_TERMS[5])
    dropped = terms.pop(10)
    problems = verify_condition_terms(5, terms)
    assert problems
    assert any("missing" in p for p in problems)


def test_duplicated_term_detected():
    terms = list(CONDITION_TERMS[4])
    terms.append(terms[0])
    assert verify_condition_terms(4, terms)
