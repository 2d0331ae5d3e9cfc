"""End-to-end acceptance checks.

Each test prints one PASS/FAIL line, and the same lines are collected into
an "acceptance criteria" section at the end of the pytest run.
"""

import math
import time

import numpy as np

from conftest import STANDARD_N, TW_N, TW_TRIALS, record_criterion
from lislab.airy import airy
from lislab.campaign import ExperimentConfig, run_campaign
from lislab.chains import analyze_chains, event_A, longest_chain, longest_chain_restricted
from lislab.estimators import (
    estimate_chi,
    estimate_xi,
    ks_distance,
    lattice_distance,
    probability_A,
    tw_comparison,
)
from lislab.lemmas import check_cell_tail, check_lemma_2_3, check_lemma_3_2
from lislab.point_process import CylinderSpec, Point, PointConfig, Rect, contains
from lislab.tracy_widom import sample_tw, solve_hastings_mcleod, tw_cdf, tw_log_cdf, tw_sf
from oracles import brute_force_chains


def report(number, title, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
    record_criterion(number, title, ok, detail)
    assert ok, detail


def random_small_config(rng, side=6.0):
    n = int(rng.integers(0, 13))
    if rng.random() < 0.5:
        raw = rng.integers(1, int(side), size=(n, 2)).astype(float)
    else:
        raw = rng.uniform(0.0, side, size=(n, 2))
        raw = raw[(raw > 0).all(axis=1) & (raw < side).all(axis=1)]
    pts = sorted(set(map(tuple, raw.tolist())))
    return PointConfig.from_points(pts, Rect.square(side))


def test_1_chain_oracle_equivalence():
    rng = np.random.default_rng(1)
    side = 6.0
    w, wp = Point(0.0, 0.0), Point(side, side)
    mismatches = 0
    t0 = time.perf_counter()
    for k in range(10_000):
        cfg = random_small_config(rng, side)
        src = list(zip(cfg.x.tolist(), cfg.y.tolist()))
        gamma = float(rng.uniform(0.1, 0.95))
        cyl = CylinderSpec(gamma, side)
        d, maximal, paths = brute_force_chains(src, (0, 0), (side, side))
        dk, _, _ = brute_force_chains(src, (0, 0), (side, side), keep=lambda x, y: contains(cyl, Point(x, y)))
        a = analyze_chains(cfg, w, wp)
        event = all(contains(cyl, Point(*src[i])) for p in paths for i in p)
        ok = (
            longest_chain(cfg, w, wp) == d
            and a.d == d
            and set(a.index[a.maximal_flags].tolist()) == maximal
            and longest_chain_restricted(cfg, cyl, w, wp) == dk
            and event_A(cfg, gamma, a) == event
        )
        mismatches += not ok
    elapsed = time.perf_counter() - t0
    report(
        1,
        "chain oracle equivalence",
        mismatches == 0 and elapsed < 60,
        f"{mismatches} mismatches over 10^4 configurations, {elapsed:.1f} s",
    )


def test_2_xi_reproduction(standard_campaign):
    _, recs = standard_campaign
    fit = estimate_xi(recs)
    ok = 0.56 <= fit.slope <= 0.76 and fit.r_squared >= 0.95
    report(2, "xi reproduction", ok, f"xi = {fit.slope:.3f} +/- {fit.slope_stderr:.3f}, r^2 = {fit.r_squared:.3f}")


def test_3_chi_reproduction(standard_campaign):
    _, recs = standard_campaign
    chi = estimate_chi(recs)
    xi = estimate_xi(recs)
    gap = chi.slope - (2 * xi.slope - 1)
    ok = 0.23 <= chi.slope <= 0.43 and abs(gap) <= 0.12
    report(
        3,
        "chi reproduction",
        ok,
        f"chi = {chi.slope:.3f} +/- {chi.slope_stderr:.3f}, chi - (2 xi - 1) = {gap:+.3f}",
    )


def test_3b_scaling_identity_within_two_sigma(standard_campaign):
    _, recs = standard_campaign
    chi = estimate_chi(recs)
    xi = estimate_xi(recs)
    sigma = math.hypot(chi.slope_stderr, 2 * xi.slope_stderr)
    assert abs(chi.slope - (2 * xi.slope - 1)) <= 2 * sigma


def test_4_cylinder_transition(standard_campaign):
    _, recs = standard_campaign
    N = STANDARD_N[-1]
    hi = probability_A(recs, 0.85, N)
    lo = probability_A(recs, 0.45, N)
    ok = hi.p >= 0.9 and lo.p <= 0.5
    report(
        4,
        "cylinder transition",
        ok,
        f"N={N:g}: P[A](0.85) = {hi.p:.3f} CI [{hi.ci_low:.3f}, {hi.ci_high:.3f}], "
        f"P[A](0.45) = {lo.p:.3f} CI [{lo.ci_low:.3f}, {lo.ci_high:.3f}]",
    )


def test_4b_probability_monotone_in_gamma(standard_campaign):
    cfg, recs = standard_campaign
    for N in cfg.N_values:
        ps = [probability_A(recs, g, N).p for g in cfg.gamma_values]
        assert ps == sorted(ps)


def test_5_tracy_widom_comparison(tw_solution, tw_batches):
    recs = tw_batches[0]
    ks = tw_comparison(recs, tw_solution, TW_N)
    lattice = lattice_distance([r.d for r in recs], TW_N**2, tw_solution)
    self_ks = ks_distance(sample_tw(tw_solution, TW_TRIALS, np.random.default_rng(500)), tw_solution)
    ok = ks <= 0.12 and self_ks <= 0.03
    report(
        5,
        "Tracy-Widom comparison",
        ok,
        f"KS(N={TW_N:g}, {TW_TRIALS} trials) = {ks:.4f} (threshold 0.12); self-sampling KS = {self_ks:.4f}; "
        f"lattice-point distance (diagnostic only) = {lattice:.4f}",
    )


def test_6_painleve_numerics(tw_solution):
    sol = tw_solution
    residual = float(np.max(np.abs(sol.residual())))
    ratio = sol.u_values[-1] / airy(sol.x_right)
    dense = np.linspace(sol.x_left, sol.x_right, 200_001)
    monotone = bool(
        np.all(np.diff(sol.F_table) >= 0)
        and np.all(np.diff(sol.log_F_table) > 0)
        and np.all(np.diff(tw_cdf(sol, dense)) >= 0)
    )
    f0 = tw_cdf(sol, 0.0)
    fine = solve_hastings_mcleod(step=sol.step / 2, tol=1e-9)
    f0_shift = abs(tw_cdf(fine, 0.0) - f0)
    tl = np.linspace(-6, -4, 41)
    left = np.polyfit(np.log(-tl), np.log(-tw_log_cdf(sol, tl)), 1)[0]
    tr = np.linspace(2, 6, 41)
    right = np.polyfit(tr**1.5, np.log(tw_sf(sol, tr)), 1)[0]
    ok = (
        residual < 1e-10
        and abs(ratio - 1) <= 1e-9
        and monotone
        and 0 < f0 < 1
        and f0_shift <= 1e-6
        and 2.7 <= left <= 3.3
        and right < 0
    )
    report(
        6,
        "Painleve II numerics",
        ok,
        f"residual {residual:.2e}, |u/Ai - 1| {abs(ratio - 1):.1e}, monotone {monotone}, "
        f"F(0) = {f0:.10f} (halving shift {f0_shift:.1e}), left exponent {left:.3f}, "
        f"right log(1-F) vs t^1.5 slope {right:.3f}",
    )


def test_7_deterministic_lemmas():
    worst23 = -math.inf
    worst32 = -math.inf
    n23 = n32 = 0
    for N in (1e3, 1e4, 1e5, 1e6):
        for gamma in (0.3, 0.5, 0.6, 0.67, 0.7, 0.8, 0.9):
            for b in (0.35, 0.55, 0.65, 0.7, 0.75, 0.85, 0.9, 0.95, 0.99):
                if gamma < b and N**b - 4 * N**gamma > 0:
                    worst23 = max(worst23, check_lemma_2_3(N, gamma, b))
                    n23 += 1
        for gamma in (0.67, 0.7, 0.75, 0.8, 0.9, 0.95):
            if math.sqrt(2) * N ** (gamma - 1) < 1:
                worst32 = max(worst32, check_lemma_3_2(N, gamma))
                n32 += 1
    tail_ok = check_cell_tail(100, 0.7, 10_000, seed=1, C=10)
    ok = worst23 <= 0 and worst32 <= 0 and tail_ok
    report(
        7,
        "deterministic lemmas",
        ok,
        f"shifted-cylinder worst gap {worst23:.3g} over {n23} cases, detour worst gap {worst32:.3g} "
        f"over {n32} cases, cell tail bound holds: {tail_ok}",
    )


def test_8_determinism(tmp_path):
    cfg = dict(N_values=(50.0, 100.0, 200.0), trials_per_N=60, gamma_values=(0.5, 0.7), master_seed=77)
    paths = [tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "c.csv"]
    run_campaign(ExperimentConfig(**cfg, output_path=paths[0]))
    run_campaign(ExperimentConfig(**cfg, output_path=paths[1]))
    run_campaign(ExperimentConfig(**cfg, output_path=paths[2]), workers=2)
    blobs = [p.read_bytes() for p in paths]
    ok = blobs[0] == blobs[1] == blobs[2]
    report(8, "determinism", ok, f"3 runs (1, 1 and 2 workers), {len(blobs[0])} bytes each, identical: {ok}")
