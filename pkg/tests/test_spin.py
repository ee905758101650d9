import math

import numpy as np
import pytest

from relphase import (
    contraction_overlap,
    embed_wh,
    params_from_modes,
    spin_coherent,
    to_blocks,
    two_mode_coherent,
)


class TestParamsFromModes:
    def test_one_empty_mode(self):
        assert params_from_modes(0, 1).xi == 0

    def test_balanced_common_phase_cancels(self):
        params = params_from_modes(1, 1)
        assert abs(params.xi) == 1.0
        assert params.phi_r == 0.0

    def test_relative_phase_and_ratio(self):
        params = params_from_modes(1 * np.exp(-0.3j), 2 * np.exp(-0.1j))
        assert params.phi_r == pytest.approx(-0.2, abs=1e-12)
        assert abs(params.xi) == pytest.approx(0.5, abs=1e-12)

    def test_theta_consistent_with_xi(self):
        params = params_from_modes(1.3 * np.exp(0.7j), 2.1 * np.exp(-0.4j))
        assert abs(math.tan(params.theta / 2)) == pytest.approx(abs(params.xi), abs=1e-12)

    def test_zero_beta_rejected(self):
        with pytest.raises(ValueError, match="beta"):
            params_from_modes(1.0, 0.0)


class TestSpinCoherent:
    def test_south_pole(self):
        vec = spin_coherent(6, 0)
        assert vec[0] == 1.0
        assert np.all(vec[1:] == 0)

    def test_hand_evaluated_example(self):
        # brute force: sqrt(binom(2,k)) 2^{-1} 1^k = (1/2, 1/sqrt(2), 1/2)
        vec = spin_coherent(2, 1)
        assert np.allclose(vec, [0.5, 1 / math.sqrt(2), 0.5], atol=1e-14)

    def test_matches_direct_binomial_formula(self):
        xi = 0.7 * np.exp(1.2j)
        big_n = 18
        vec = spin_coherent(big_n, xi)
        for k in range(big_n + 1):
            direct = (
                math.sqrt(math.comb(big_n, k)) * (1 + abs(xi) ** 2) ** (-big_n / 2) * xi**k
            )
            assert abs(vec[k] - direct) < 1e-13

    def test_unit_norm_large_sizes(self):
        for big_n, xi in ((500, 0.3 * np.exp(1j)), (1200, 2.5), (2000, 10.0), (2000, 1e-3j)):
            assert np.linalg.norm(spin_coherent(big_n, xi)) == pytest.approx(1.0, abs=1e-12)

    def test_negative_size_rejected(self):
        with pytest.raises(ValueError):
            spin_coherent(-1, 0.2)


class TestEmbedWh:
    def test_vacuum(self):
        vec = embed_wh(0, 8)
        assert vec[0] == 1.0
        assert np.all(vec[1:] == 0)

    def test_renormalization_negligible_past_guard(self, oracle):
        # Poisson tails at the 10-sigma guard, from the brute-force script
        assert oracle["poisson_tail_mean1_n21"] < 1e-10
        assert oracle["poisson_tail_mean4_n34"] < 1e-10
        for z, big_n in ((1.0, 21), (2.0, 34)):
            raw = np.exp(-abs(z) ** 2 / 2) * np.array(
                [z**k / math.sqrt(math.factorial(k)) for k in range(big_n + 1)]
            )
            factor = 1.0 / np.linalg.norm(raw)
            assert abs(factor - 1.0) < 1e-10
            assert np.allclose(embed_wh(z, big_n), raw * factor, atol=1e-14)

    def test_self_overlap(self):
        vec = embed_wh(1, 10)
        assert abs(np.vdot(vec, vec)) == pytest.approx(1.0, abs=1e-14)


class TestContractionOverlap:
    def test_zero_amplitude_is_exact(self):
        for big_n in (1, 5, 50, 400):
            assert contraction_overlap(0, big_n) == 1.0

    def test_growth_between_grid_points(self, oracle):
        values = oracle["contraction_overlap_z1"]
        assert contraction_overlap(1, 400) > contraction_overlap(1, 100)
        assert values["400"] > values["100"]

    def test_matches_oracle_grid(self, oracle):
        for n_text, expected in oracle["contraction_overlap_z1"].items():
            assert contraction_overlap(1, int(n_text)) == pytest.approx(expected, abs=1e-10)

    def test_large_size_threshold(self, oracle):
        value = contraction_overlap(1, 10_000)
        assert 1.0 - value < 1e-3
        assert value == pytest.approx(oracle["contraction_overlap_z1_n10000"], abs=1e-10)

    def test_nondecreasing_with_rate_constant(self, oracle):
        grid = oracle["contraction_n_grid"]
        c = oracle["contraction_rate_constant"]
        for z in (0.5, 1.0, 2.0, 2.0 * np.exp(0.8j)):
            values = [contraction_overlap(z, big_n) for big_n in grid]
            assert all(b >= a for a, b in zip(values, values[1:]))
            for big_n, value in zip(grid, values):
                assert value > 1.0 - c / big_n

    def test_invalid_size(self):
        with pytest.raises(ValueError):
            contraction_overlap(1, 0)


def test_blocks_equal_spin_coherent_states():
    # every populated block of a two-mode coherent state is the spin
    # coherent state with xi = alpha/beta, up to a global phase
    alpha = 1.0 * np.exp(-0.3j)
    beta = 4.0 * np.exp(-0.1j)
    blocks = to_blocks(two_mode_coherent(alpha, beta, 21, 66))
    xi = params_from_modes(alpha, beta).xi
    checked = 0
    for big_n, (weight, vec) in enumerate(zip(blocks.weights, blocks.vectors)):
        if abs(weight) ** 2 <= 1e-8:
            continue
        overlap = abs(np.vdot(vec, spin_coherent(big_n, xi)))
        assert overlap >= 1.0 - 1e-10
        checked += 1
    assert checked > 20
