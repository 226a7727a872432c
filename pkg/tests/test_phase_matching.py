"""Root taxonomy, cubic reduction, discriminant and oracle consistency."""

import json

import numpy as np
import pytest

from socfwm import (
    CONFIGURATIONS,
    AlphaZero,
    CubicProblem,
    SystemParams,
    cubic_coefficients,
    discriminant,
    enumerate_all,
    matching_residual,
    oracle_scan,
    solve_configuration,
)
from socfwm.phase_matching import EXCLUDED_SIGNS, default_q_max
from conftest import REFERENCE_TRIPLES, CONFIG1_RUN, random_params

CONFIG_BY_ID = {c.id: c for c in CONFIGURATIONS}


def test_configuration_table():
    table = [(c.id, c.signs, c.n_max) for c in CONFIGURATIONS]
    assert table == [
        (1, (1, -1, -1), 2),
        (2, (1, 1, -1), 2),
        (3, (1, -1, 1), 2),
        (4, (-1, -1, -1), 4),
    ]


def test_residual_self_phase_modulation_root(rng):
    for _ in range(50):
        p = random_params(rng)
        k1 = rng.uniform(-3, 3)
        for s in (+1, -1):
            assert matching_residual(k1, 0.0, (s, s, s), p) == 0.0


def test_residual_at_published_config1_root():
    p, k1 = CONFIG1_RUN["params"], CONFIG1_RUN["k1"]
    q = CONFIG1_RUN["k2"] - k1
    assert abs(matching_residual(k1, q, (1, -1, -1), p)) < 5e-3


def test_cubic_problem_requires_nonzero_alpha():
    p = SystemParams(alpha=0.0, omega_x=2.0, omega_z=1.0)
    with pytest.raises(AlphaZero):
        CubicProblem.from_pump(+1, 0.5, p)


def test_discriminant_vanishes_with_inplane_field():
    for s1 in (+1, -1):
        for wz in (0.0, 0.3, 2.0):
            assert discriminant(s1, 0.0, wz) == 0.0


def test_discriminant_negative_for_upper_branch_pump(rng):
    for _ in range(1000):
        wt = rng.uniform(-4, 4)
        if wt == 0.0:
            continue
        wz = rng.uniform(1e-3, 4)
        assert discriminant(+1, wt, wz) < 0.0


def _distinct_real_root_count(s1, wt, wz):
    roots = np.roots(cubic_coefficients(s1, wt, wz))
    real = [r.real for r in roots if abs(r.imag) < 1e-9 * max(1.0, abs(r))]
    merged = []
    for r in sorted(real):
        if not merged or abs(r - merged[-1]) > 1e-7:
            merged.append(r)
    return len(merged)


def test_discriminant_sign_predicts_root_count(rng):
    checked = 0
    for _ in range(1000):
        s1 = int(rng.choice([-1, 1]))
        wt = rng.uniform(-4, 4)
        wz = rng.uniform(1e-3, 4)
        delta = discriminant(s1, wt, wz)
        # Near-zero discriminants are the multiple-root boundary; the
        # companion-matrix count is unreliable exactly there.
        if abs(delta) < 1e-8:
            continue
        expected = 3 if delta < 0 else 1
        assert _distinct_real_root_count(s1, wt, wz) == expected
        checked += 1
    assert checked > 900


@pytest.mark.parametrize("name,fig,reference", REFERENCE_TRIPLES)
def test_published_wavenumbers_are_reproduced(name, fig, reference):
    p, k1 = fig["params"], fig["k1"]
    pairs = set()
    for config in CONFIGURATIONS:
        for sol in solve_configuration(config, k1, p):
            pairs.add((round(sol.k2, 6), round(sol.k3, 6)))
    if len(reference) == 2:
        expected = [reference]
    else:
        expected = [(reference[0], reference[1]), (reference[2], reference[3])]
    for k2_ref, k3_ref in expected:
        assert any(
            abs(k2 - k2_ref) < 5e-3 and abs(k3 - k3_ref) < 5e-3 for k2, k3 in pairs
        ), f"{name}: no solution near (k2, k3) = ({k2_ref}, {k3_ref})"


def test_config4_no_roots_below_tangency():
    # Weak SOC leaves the lower-branch pump without phase-matched partners.
    for omega_z in (8.0, 4.0):
        p = SystemParams(alpha=5.0, omega_x=2.5, omega_z=omega_z)
        assert solve_configuration(CONFIG_BY_ID[4], 1.5, p) == []


def test_config4_two_positive_roots_above_tangency():
    p = SystemParams(alpha=9.0, omega_x=2.5, omega_z=8.0)
    roots = [sol.q for sol in solve_configuration(CONFIG_BY_ID[4], 1.5, p)]
    assert len(roots) == 4
    assert len([q for q in roots if q > 0]) == 2


def test_oracle_positive_root_per_upper_pump_config():
    p = SystemParams(alpha=2.0, omega_x=2.5, omega_z=8.0)
    for config_id in (1, 2, 3):
        config = CONFIG_BY_ID[config_id]
        roots = oracle_scan(config.signs, 1.5, p, default_q_max(1.5, p), 4001)
        assert sum(1 for q in roots if q > 1e-6) >= 1


def test_oracle_includes_spm_root_for_equal_signs():
    p = SystemParams(alpha=3.0, omega_x=2.5, omega_z=4.0)
    roots = oracle_scan((-1, -1, -1), -0.5, p, 8.0, 4001)
    assert any(abs(q) < 1e-9 for q in roots)
    nonzero = sorted(q for q in roots if abs(q) > 1e-6)
    # s2 = s3 makes the residual even in q: roots come in symmetric pairs.
    assert all(
        abs(a + b) < 1e-8 for a, b in zip(nonzero, reversed(nonzero))
    )


def test_oracle_input_validation():
    p = SystemParams(alpha=1.0, omega_x=1.0, omega_z=1.0)
    with pytest.raises(ValueError):
        oracle_scan((1, -1, -1), 0.0, p, -1.0, 4001)
    with pytest.raises(ValueError):
        oracle_scan((1, -1, -1), 0.0, p, 5.0, 10)


def test_solver_matches_oracle_on_random_draws(rng):
    for _ in range(80):
        p = random_params(rng)
        k1 = rng.uniform(-3, 3)
        q_max = default_q_max(k1, p)
        for config in CONFIGURATIONS:
            solver = [sol.q for sol in solve_configuration(config, k1, p)]
            oracle = [
                q
                for q in oracle_scan(config.signs, k1, p, q_max, 40001)
                if abs(q) > 1e-6
            ]
            assert len(solver) == len(oracle), (p, k1, config.id, solver, oracle)
            assert all(abs(a - b) < 1e-8 for a, b in zip(sorted(solver), oracle))


def test_back_substitution_residuals(rng):
    for _ in range(60):
        p = random_params(rng)
        k1 = rng.uniform(-3, 3)
        for sol in enumerate_all(k1, p):
            assert (
                abs(matching_residual(sol.k1, sol.q, sol.config.signs, p)) < 1e-9
            )
            scale = max(1.0, abs(sol.k1), abs(sol.q))
            assert abs(sol.k2 + sol.k3 - 2 * sol.k1) < 1e-13 * scale
            assert abs(sol.q) > 1e-7


def test_root_count_within_table_bound(rng):
    for _ in range(120):
        p = random_params(rng)
        k1 = rng.uniform(-3, 3)
        for config in CONFIGURATIONS:
            assert len(solve_configuration(config, k1, p)) <= config.n_max


def test_excluded_sign_patterns_have_no_roots(rng):
    for _ in range(150):
        p = random_params(rng)
        k1 = rng.uniform(0, 3) if rng.uniform() < 0.7 else rng.uniform(-3, 0)
        q_max = default_q_max(k1, p)
        for signs in EXCLUDED_SIGNS:
            roots = oracle_scan(signs, k1, p, q_max, 20001)
            assert all(abs(q) < 1e-6 for q in roots), (signs, p, k1, roots)


def test_config2_and_config3_roots_are_mirrored(rng):
    for _ in range(60):
        p = random_params(rng)
        k1 = rng.uniform(-3, 3)
        roots2 = sorted(sol.q for sol in solve_configuration(CONFIG_BY_ID[2], k1, p))
        roots3 = sorted(-sol.q for sol in solve_configuration(CONFIG_BY_ID[3], k1, p))
        assert len(roots2) == len(roots3)
        assert all(abs(a - b) < 1e-9 for a, b in zip(roots2, roots3))


def test_zero_zeeman_field_yields_no_processes(rng):
    for _ in range(25):
        p = SystemParams(alpha=rng.uniform(0.5, 12), omega_x=0.0, omega_z=0.0)
        assert enumerate_all(rng.uniform(-3, 3), p) == []


def test_alpha_zero_falls_back_to_scan():
    # Constant gap eps0: dropping the pump pair across the gap releases a
    # fixed energy, so the residuals become 2q^2 - 4 eps0 (config 1),
    # 2q^2 - 2 eps0 (configs 2, 3) and 2q^2 (config 4, no nontrivial root).
    p = SystemParams(alpha=0.0, omega_x=2.0, omega_z=1.5)
    eps0 = np.hypot(2.0, 1.5)
    expected = {
        1: [-np.sqrt(2 * eps0), np.sqrt(2 * eps0)],
        2: [-np.sqrt(eps0), np.sqrt(eps0)],
        3: [-np.sqrt(eps0), np.sqrt(eps0)],
        4: [],
    }
    for config in CONFIGURATIONS:
        roots = [sol.q for sol in solve_configuration(config, 0.7, p)]
        assert np.allclose(roots, expected[config.id], atol=1e-9)


def test_solution_records_serialize(rng):
    p = CONFIG1_RUN["params"]
    records = [sol.as_record() for sol in enumerate_all(CONFIG1_RUN["k1"], p)]
    text = json.dumps(records)
    assert json.loads(text) == records


def test_tangency_transition_in_soc_strength():
    # Configuration 4 acquires its root pair where the discriminant of the
    # lower-pump cubic crosses zero; just below the tangency there is no
    # solution, just above there are four signed offsets, and the solver
    # tracks the brute-force oracle on both sides of the edge.
    k1, a_star = 1.5, 7.6707917538
    config4 = CONFIG_BY_ID[4]

    def disc(alpha):
        p = SystemParams(alpha=alpha, omega_x=2.5, omega_z=8.0)
        problem = CubicProblem.from_pump(-1, k1, p)
        return discriminant(-1, problem.omega_tilde_scaled, problem.omega_z_scaled)

    assert disc(a_star - 1e-4) > 0 > disc(a_star + 1e-4)
    for alpha, expected in ((7.5, 0), (a_star + 1e-3, 4), (7.8, 4), (9.0, 4)):
        p = SystemParams(alpha=alpha, omega_x=2.5, omega_z=8.0)
        solver = sorted(sol.q for sol in solve_configuration(config4, k1, p))
        oracle = [
            q
            for q in oracle_scan(config4.signs, k1, p, default_q_max(k1, p), 200001)
            if abs(q) > 1e-6
        ]
        assert len(solver) == expected
        assert np.allclose(solver, oracle, atol=1e-8)
    # Just above the edge the q roots are distinct but only a few 1e-3
    # apart, well beyond the double-root merge spacing.
    p = SystemParams(alpha=a_star + 1e-6, omega_x=2.5, omega_z=8.0)
    close = sorted(sol.q for sol in solve_configuration(config4, k1, p) if sol.q > 0)
    assert len(close) == 2 and 1e-7 < close[1] - close[0] < 0.01
