import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from scipy import stats

from lislab.errors import InvalidArgument
from lislab.lemmas import (
    cell_tail_curve,
    check_cell_tail,
    check_lemma_2_3,
    check_lemma_3_2,
    detour_excess,
    grid_indices,
    shifted_corner_areas,
)
from lislab.point_process import Point, rectangle_area

NS = (1e3, 1e4, 1e5, 1e6)
GAMMAS_23 = (0.3, 0.5, 0.6, 0.67, 0.7, 0.8, 0.9)
BS = (0.35, 0.55, 0.65, 0.7, 0.75, 0.85, 0.9, 0.95, 0.99)
GAMMAS_32 = (0.67, 0.7, 0.75, 0.8, 0.9, 0.95)


def admissible_23():
    for N in NS:
        for g in GAMMAS_23:
            for b in BS:
                if g < b and N**b - 4 * N**g > 0:
                    yield N, g, b


def admissible_32():
    for N in NS:
        for g in GAMMAS_32:
            if math.sqrt(2) * N ** (g - 1) < 1:
                yield N, g


def test_shifted_grid_is_nonpositive():
    cases = list(admissible_23())
    assert len(cases) > 100
    worst = max(check_lemma_2_3(*c) for c in cases)
    assert worst <= 0


def test_detour_grid_is_nonpositive():
    cases = list(admissible_32())
    assert len(cases) >= 20
    worst = max(check_lemma_3_2(*c) for c in cases)
    assert worst <= 0


@pytest.mark.parametrize("N,gamma,b", [(1e4, 0.7, 0.9), (1e6, 0.67, 0.99)])
def test_shifted_examples(N, gamma, b):
    assert check_lemma_2_3(N, gamma, b) <= 0


def test_detour_example():
    assert check_lemma_3_2(1e4, 0.7) <= 0


@given(st.floats(1e3, 1e6), st.floats(0.05, 0.95), st.floats(0.0, 1.0))
def test_shifted_holds_on_admissible_region(N, gamma, frac):
    b = gamma + frac * (1 - gamma)
    assume(gamma < b < 1 and N**b - 4 * N**gamma > 0)
    assert check_lemma_2_3(N, gamma, b, max_points=2000) <= 0


@given(st.floats(1e3, 1e6), st.floats(0.67, 0.99))
def test_detour_holds_on_admissible_region(N, gamma):
    assume(gamma > 2 / 3 and math.sqrt(2) * N ** (gamma - 1) < 1)
    assert check_lemma_3_2(N, gamma, max_points=2000) <= 0


def test_areas_match_corner_geometry():
    N, g, b = 1e4, 0.7, 0.9
    Ng, Nb = N**g, N**b
    s2 = math.sqrt(2)
    m = Point(-3 * Ng / s2, 3 * Ng / s2)
    for r in np.linspace(4 * Ng, 8 * Ng, 7):
        z = Point(Nb / s2, (Nb + r) / s2)
        a_shift, a_orig = shifted_corner_areas(N, g, b, r)
        assert a_shift == pytest.approx(rectangle_area(m, z), rel=1e-12)
        assert a_orig == pytest.approx(rectangle_area(Point(0, 0), z), rel=1e-12)


def test_bound_side_inequality():
    # 3 r N^g / (2 sqrt(2) N^b) <= 10 N^(2g - b) at r = 8 N^g
    for N, g, b in admissible_23():
        r = 8 * N**g
        assert 3 * r * N**g / (2 * math.sqrt(2) * N**b) <= 10 * N ** (2 * g - b)


def test_detour_examples():
    x = np.linspace(0, 1, 11)
    assert np.allclose(detour_excess(x, 0.0), 0.0, atol=1e-15)
    y = 0.6
    at_max = detour_excess((1 - y) / 2, y)
    assert at_max == pytest.approx(math.sqrt(1 - y * y) - 1)
    assert at_max == pytest.approx(-0.2)
    assert at_max <= -(y**2) / 2


@given(st.floats(0.01, 0.99))
def test_detour_maximiser(y):
    x = np.linspace(0, 1 - y, 2001)
    vals = detour_excess(x, y)
    assert vals.max() <= detour_excess((1 - y) / 2, y) + 1e-12
    assert detour_excess((1 - y) / 2, y) <= -(y**2) / 2 + 1e-15


def test_preconditions():
    with pytest.raises(InvalidArgument):
        check_lemma_2_3(1e4, 0.9, 0.8)
    with pytest.raises(InvalidArgument):
        check_lemma_2_3(1e3, 0.7, 0.9)  # 1e3^0.9 < 4 * 1e3^0.7
    with pytest.raises(InvalidArgument):
        check_lemma_3_2(1e4, 0.6)
    with pytest.raises(InvalidArgument):
        check_lemma_3_2(1e3, 0.95)


def test_grid_subsampling_keeps_endpoints():
    j = grid_indices(10**7, max_points=1000, extra=(1234567.0,))
    assert j[0] == 0 and j[-1] == 10**7 and 1234567.0 in j
    assert j.size <= 1001
    assert np.array_equal(grid_indices(5), np.arange(6.0))


def test_single_cell_matches_poisson_tail():
    trials = 20_000
    d = np.arange(1, 7)
    curve = cell_tail_curve(1, 1.0, trials, seed=3, d_values=d)
    exact = stats.poisson.sf(d - 1, 1.0)
    for k, p in zip(curve.p_hat * trials, exact):
        ci = stats.binomtest(int(round(k)), trials).proportion_ci(0.99, method="exact")
        assert ci.low <= p <= ci.high


def test_far_tail_is_empty():
    curve = cell_tail_curve(50, 1.0, 1000, seed=1, d_values=[math.ceil(math.log(50)) + 40])
    assert curve.p_hat[0] == 0.0


def test_cell_tail_at_stated_scale():
    assert check_cell_tail(100, 0.7, 10_000, seed=1)


def test_cell_tail_needs_trials():
    with pytest.raises(InvalidArgument):
        check_cell_tail(100, 0.7, 999, seed=1)
