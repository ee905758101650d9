import math

import numpy as np
import pytest

from relphase import (
    coherent_vector,
    default_cutoff,
    from_blocks,
    mean_photon_number,
    params_from_modes,
    spin_coherent,
    to_blocks,
    two_mode_coherent,
)

from conftest import random_state_vector


def poisson_weight(mean, n):
    # independent log-space evaluation of e^{-mean} mean^n / n!
    return math.exp(-mean + n * math.log(mean) - math.lgamma(n + 1))


class TestTwoModeCoherent:
    def test_two_mode_vacuum(self):
        grid = two_mode_coherent(0, 0, 4, 6)
        expected = np.zeros((5, 7), dtype=complex)
        expected[0, 0] = 1.0
        assert np.array_equal(grid, expected)

    def test_single_mode_factorization(self):
        beta = 1.7 * np.exp(0.4j)
        grid = two_mode_coherent(0, beta, 3, 30)
        assert np.allclose(grid[0], coherent_vector(beta, 30), atol=1e-15)
        assert np.allclose(grid[1:], 0.0, atol=0)

    def test_norm_deficit_matches_oracle(self, oracle):
        grid = two_mode_coherent(1, 4, 12, 40)
        deficit = 1.0 - np.vdot(grid, grid).real
        expected = oracle["two_mode_norm_deficit_a1_b4_12_40"]
        assert deficit == pytest.approx(expected, rel=1e-6)
        assert deficit < 1e-6

    def test_default_cutoff_policy(self):
        assert default_cutoff(4) == 66
        assert default_cutoff(0) == 10
        grid = two_mode_coherent(1, 4, default_cutoff(1), default_cutoff(4))
        assert 1.0 - np.vdot(grid, grid).real < 1e-10

    def test_mean_photon_number(self):
        assert mean_photon_number(1, 4) == 17.0
        assert mean_photon_number(0, 0) == 0.0


class TestToBlocks:
    def test_vacuum_single_block(self):
        blocks = to_blocks(two_mode_coherent(0, 0, 2, 2))
        assert blocks.weights[0] == 1.0
        assert np.array_equal(blocks.vectors[0], np.array([1.0 + 0j]))
        assert np.all(blocks.weights[1:] == 0)

    def test_basis_relabeling(self):
        grid = np.zeros((3, 3), dtype=complex)
        grid[1, 0] = 1.0  # |n1=1, n2=0>
        blocks = to_blocks(grid)
        assert blocks.weights[1] == 1.0
        assert np.array_equal(blocks.vectors[1], np.array([0.0, 1.0], dtype=complex))

    def test_block_weights_follow_poisson_marginal(self):
        alpha, beta = 1.0, 2.0
        blocks = to_blocks(two_mode_coherent(alpha, beta, 21, 34))
        mean = mean_photon_number(alpha, beta)
        for big_n in range(31):
            assert abs(abs(blocks.weights[big_n]) ** 2 - poisson_weight(mean, big_n)) < 1e-10

    def test_reindexing_is_isometry(self):
        rng = np.random.default_rng(21)
        for _ in range(10):
            grid = rng.standard_normal((6, 9)) + 1j * rng.standard_normal((6, 9))
            grid /= np.linalg.norm(grid)
            assert to_blocks(grid).norm() == pytest.approx(1.0, abs=1e-12)

    def test_peak_entry_is_real_positive(self):
        blocks = to_blocks(two_mode_coherent(1 * np.exp(0.9j), 2 * np.exp(-0.3j), 20, 30))
        for weight, vec in zip(blocks.weights, blocks.vectors):
            if weight == 0:
                continue
            peak = vec[np.argmax(np.abs(vec))]
            assert abs(peak.imag) < 1e-15
            assert peak.real > 0

    def test_block_amplitudes_reconstruct_grid(self):
        grid = two_mode_coherent(0.8 * np.exp(-0.5j), 1.5 * np.exp(0.2j), 12, 18)
        blocks = to_blocks(grid)
        for big_n, (weight, vec) in enumerate(zip(blocks.weights, blocks.vectors)):
            amps = weight * vec
            for k in range(big_n + 1):
                expected = grid[k, big_n - k] if (k <= 12 and big_n - k <= 18) else 0.0
                assert abs(amps[k] - expected) < 1e-14

    def test_block_phases_match_collective_times_spin_amplitude(self):
        # c_N v_N[k] must reproduce, entry for entry, the Poissonian
        # collective coefficient sqrt(<N>)^N e^{i N arg(beta)} / sqrt(N!)
        # times the spin-coherent amplitude, up to the e^{-<N>/2} front.
        alpha = 1.0 * np.exp(-0.3j)
        beta = 4.0 * np.exp(-0.1j)
        blocks = to_blocks(two_mode_coherent(alpha, beta, 21, 66))
        mean = mean_photon_number(alpha, beta)
        xi = params_from_modes(alpha, beta).xi
        for big_n in range(40):
            if abs(blocks.weights[big_n]) ** 2 <= 1e-8:
                continue
            log_c = -mean / 2 + big_n / 2 * math.log(mean) - 0.5 * math.lgamma(big_n + 1)
            collective = math.exp(log_c) * np.exp(1j * big_n * np.angle(beta))
            expected = collective * spin_coherent(big_n, xi)
            got = blocks.weights[big_n] * blocks.vectors[big_n]
            assert np.max(np.abs(got - expected)) < 1e-10


class TestFromBlocks:
    def test_round_trip_coherent(self):
        grid = two_mode_coherent(1, 2, 15, 20)
        back, dropped = from_blocks(to_blocks(grid), 15, 20)
        assert dropped == 0
        assert np.max(np.abs(back - grid)) < 1e-12

    def test_empty_blocks_give_zero_grid(self):
        blocks = to_blocks(np.zeros((4, 4), dtype=complex))
        grid, dropped = from_blocks(blocks, 4, 4)
        assert dropped == 0
        assert np.all(grid == 0)

    def test_round_trip_random_states(self):
        rng = np.random.default_rng(42)
        for _ in range(50):
            shape = (int(rng.integers(2, 10)), int(rng.integers(2, 12)))
            grid = random_state_vector(rng, shape[0] * shape[1]).reshape(shape)
            back, dropped = from_blocks(to_blocks(grid), shape[0] - 1, shape[1] - 1)
            assert dropped == 0
            assert np.max(np.abs(back - grid)) < 1e-12

    def test_out_of_bounds_entries_counted(self):
        grid = np.zeros((4, 4), dtype=complex)
        grid[3, 3] = 1.0
        _, dropped = from_blocks(to_blocks(grid), 2, 2)
        assert dropped == 1

    def test_round_trip_corner_state(self):
        # single amplitude at the grid corner exercises the truncated-block
        # index ranges on both directions
        grid = np.zeros((5, 8), dtype=complex)
        grid[4, 7] = np.exp(0.3j)
        back, dropped = from_blocks(to_blocks(grid), 4, 7)
        assert dropped == 0
        assert np.max(np.abs(back - grid)) < 1e-15
