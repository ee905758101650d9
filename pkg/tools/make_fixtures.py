#!/usr/bin/env python3
"""Regenerate tests/fixtures/oracle.json by brute-force arbitrary-precision sums.

Everything here is computed from first-principles formulas with mpmath
(40 decimal digits) or exact Fraction arithmetic, deliberately sharing no
code with the library under src/.  Values are frozen into the JSON fixture
and asserted by the test suite; rerun this script only to audit them.
"""

import json
import pathlib
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 40

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "oracle.json"


def poisson_tail(mean, n_max):
    """P(X > n_max) for X ~ Poisson(mean), summed term by term from the tail
    upward so tiny tails keep full precision."""
    mean = mp.mpf(mean)
    n = n_max + 1
    term = mp.e ** (-mean) * mean ** n / mp.factorial(n)
    acc = mp.mpf(0)
    while term > acc * mp.mpf("1e-45") or n < n_max + 5:
        acc += term
        n += 1
        term *= mean / n
    return acc


def contraction_overlap(z, big_n):
    """|<truncated WH coherent z | spin-N/2 coherent z/sqrt(N)>|^2, z real > 0.

    WH amplitudes w_k = e^{-z^2/2} z^k / sqrt(k!), renormalized over k <= N.
    Spin amplitudes s_k = sqrt(binom(N,k)) (1+|xi|^2)^{-N/2} xi^k, xi = z/sqrt(N).
    Both sequences are generated by exact term ratios.
    """
    z = mp.mpf(z)
    xi = z / mp.sqrt(big_n)
    w = mp.e ** (-z * z / 2)
    s = (1 + xi * xi) ** (-mp.mpf(big_n) / 2)
    cross = w * s
    wnorm2 = w * w
    for k in range(big_n):
        w *= z / mp.sqrt(k + 1)
        s *= xi * mp.sqrt(mp.mpf(big_n - k) / (k + 1))
        cross += w * s
        wnorm2 += w * w
    return cross * cross / wnorm2


def cutoff(mag):
    """Truncation guard used throughout: ceil(|a|^2 + 10|a| + 10)."""
    return int(mp.ceil(mag * mag + 10 * mag + 10))


def factorization_case(alpha_mag, beta_mag, z_mag, n1_max=None, n2_max=None):
    """Exact-vs-product-construction comparison, all phases zero.

    Exact block amplitudes   e_N[k] = e^{-<N>/2} a^k b^{N-k} / sqrt(k!(N-k)!)
    Product block amplitudes a_N[k] = p_N w_k / sqrt(W_N) with
        p_N = e^{-<N>/2} <N>^{N/2} / sqrt(N!)   (Poisson weight),
        w_k = e^{-z^2/2} z^k / sqrt(k!),        W_N = sum_{j<=N} w_j^2,
    both laid on the (n1, n2) grid (k <= n1_max, N-k <= n2_max) and
    normalized over the grid.  Returns pure fidelity, Hilbert-Schmidt
    distance between the two uniformly dephased states, and the
    Poisson-weighted mean block overlap of the exact state with the WH
    profile.
    """
    a = mp.mpf(alpha_mag)
    b = mp.mpf(beta_mag)
    z = mp.mpf(z_mag)
    n1m = cutoff(a) if n1_max is None else n1_max
    n2m = cutoff(b) if n2_max is None else n2_max
    n_top = n1m + n2m
    nhat = a * a + b * b
    log_e = -nhat / 2

    sqrt_fact = [mp.mpf(1)]
    for n in range(1, n_top + 1):
        sqrt_fact.append(sqrt_fact[-1] * mp.sqrt(n))
    pow_a = [mp.mpf(1)]
    for _ in range(n_top):
        pow_a.append(pow_a[-1] * a)
    pow_b = [mp.mpf(1)]
    for _ in range(n_top):
        pow_b.append(pow_b[-1] * b)

    w = [mp.e ** (-z * z / 2)]
    for k in range(n_top):
        w.append(w[-1] * z / mp.sqrt(k + 1))
    wcum = []
    acc = mp.mpf(0)
    for k in range(n_top + 1):
        acc += w[k] * w[k]
        wcum.append(acc)

    e_front = mp.e ** log_e
    sqrt_nhat = mp.sqrt(nhat)

    norm_e2 = mp.mpf(0)
    norm_a2 = mp.mpf(0)
    cross_total = mp.mpf(0)
    per_block = []
    rel_num = mp.mpf(0)

    p_n = e_front  # <N>^{N/2}/sqrt(N!) prefix, updated per block
    for N in range(n_top + 1):
        if N > 0:
            p_n *= sqrt_nhat / mp.sqrt(N)
        k_lo = max(0, N - n2m)
        k_hi = min(N, n1m)
        ee = mp.mpf(0)
        aa = mp.mpf(0)
        cr = mp.mpf(0)
        rel_cr = mp.mpf(0)
        wn = mp.sqrt(wcum[N])
        for k in range(k_lo, k_hi + 1):
            ek = e_front * pow_a[k] * pow_b[N - k] / (sqrt_fact[k] * sqrt_fact[N - k])
            ak = p_n * w[k] / wn
            ee += ek * ek
            aa += ak * ak
            cr += ek * ak
            rel_cr += ek * w[k]
        norm_e2 += ee
        norm_a2 += aa
        cross_total += cr
        per_block.append((ee, aa, cr))
        if ee > 0:
            rel_num += rel_cr * rel_cr / wcum[N]
    fidelity = cross_total ** 2 / (norm_e2 * norm_a2)
    hs2 = mp.mpf(0)
    for ee, aa, cr in per_block:
        hs2 += (ee / norm_e2) ** 2 + (aa / norm_a2) ** 2 - 2 * cr * cr / (norm_e2 * norm_a2)
    rel_overlap = rel_num / norm_e2
    return {
        "n1_max": n1m,
        "n2_max": n2m,
        "pure_fidelity": float(fidelity),
        "twirled_hs_distance": float(mp.sqrt(hs2)),
        "relative_state_overlap": float(rel_overlap),
        "exact_norm_deficit": float(1 - norm_e2),
    }


def sum_entangled_relative_purity(d, amps):
    """Exact Fraction purity of the relative register after a uniform
    displacement twirl of sum_{r} t_r |x_r=r, x_a=r mod d>.

    Displacement by X maps x_a -> x_a + 2X mod d; the prior is uniform.
    Builds the full d^2 x d^2 density matrix, partial-traces x_a, squares.
    """
    norm2 = sum(t * t for t in amps)
    dim = d * d
    rho = [[Fraction(0) for _ in range(dim)] for _ in range(dim)]
    for X in range(d):
        psi = [Fraction(0)] * dim  # index = x_r * d + x_a, amplitudes * sqrt(norm2)
        for r in range(d):
            psi[r * d + (r + 2 * X) % d] = Fraction(amps[r])
        for i in range(dim):
            for j in range(dim):
                rho[i][j] += Fraction(psi[i] * psi[j], norm2 * d)
    rho_rel = [[Fraction(0) for _ in range(d)] for _ in range(d)]
    for r in range(d):
        for rp in range(d):
            for x_a in range(d):
                rho_rel[r][rp] += rho[r * d + x_a][rp * d + x_a]
    purity = Fraction(0)
    for r in range(d):
        for rp in range(d):
            purity += rho_rel[r][rp] * rho_rel[rp][r]
    return purity


def max_entangled_relative_purity(d):
    """Same twirl applied to sum_r |r, r>/sqrt(d): brute force Fractions."""
    amps = [1] * d
    return sum_entangled_relative_purity(d, amps)


def main():
    fx = {}

    fx["poisson_tail_mean1_n40"] = float(poisson_tail(1, 40))
    fx["poisson_tail_mean1_n21"] = float(poisson_tail(1, 21))
    fx["poisson_tail_mean4_n34"] = float(poisson_tail(4, 34))
    two_mode_deficit = 1 - (1 - poisson_tail(1, 12)) * (1 - poisson_tail(16, 40))
    fx["two_mode_norm_deficit_a1_b4_12_40"] = float(two_mode_deficit)

    n_grid = [25, 50, 100, 200, 400, 800]
    fx["contraction_n_grid"] = n_grid
    fx["contraction_overlap_z1"] = {str(n): float(contraction_overlap(1, n)) for n in n_grid}
    fx["contraction_overlap_z1_n10000"] = float(contraction_overlap(1, 10000))
    c_max = mp.mpf(0)
    for z in ("0.5", "1", "2"):
        for n in n_grid:
            c_max = max(c_max, n * (1 - contraction_overlap(mp.mpf(z), n)))
    fx["contraction_rate_constant"] = float(1.05 * c_max)

    beta_grid = [2, 4, 8, 16, 32]
    sweep = []
    for b in beta_grid:
        case = factorization_case(1, b, 1)
        case["beta_mag"] = b
        sweep.append(case)
    fx["factorization_sweep_alpha1"] = sweep
    fx["factorization_beta_grid"] = beta_grid
    f32 = sweep[-1]["pure_fidelity"]
    fx["factorization_infidelity_threshold_beta32"] = float(1.001 * (1 - f32))

    balanced = factorization_case(4, 4, float(mp.sqrt(2) * 4))
    fx["balanced_case_alpha4"] = balanced
    asym = factorization_case(1, float(mp.sqrt(31)), 1)
    fx["asymmetric_case_nhat32"] = asym

    fx["sum_entangled_purity_d5"] = {
        "amps": [1, 2, 3, 4, 5],
        "value": float(sum_entangled_relative_purity(5, [1, 2, 3, 4, 5])),
        "fraction": str(sum_entangled_relative_purity(5, [1, 2, 3, 4, 5])),
    }
    fx["max_entangled_purity"] = {str(d): float(max_entangled_relative_purity(d)) for d in (3, 5)}

    # coherence witness |0><1| + |1><0| on coherent alpha=1: point prior at 0
    # gives 2 e^{-1}, uniform gives 0.
    fx["witness_spread_alpha1"] = float(2 / mp.e)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(fx, indent=2, sort_keys=True) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
