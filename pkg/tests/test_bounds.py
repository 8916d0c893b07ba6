import math

import pytest
from hypothesis import given, settings, strategies as st

from hexfold.bounds import (
    InfeasibleParameterError,
    chi_f_upper,
    chi_f_upper_alt,
    count_contained_hexagons,
    h_lower_bound,
    solve_x,
)

# roots pinned after cross-checking with an independent high-precision
# solver (sympy.nsolve at 30 digits)
PINNED_X = {
    1.0: 0.260283236633467,
    1.5: 0.208820226840092,
    2.0: 0.174234981443718,
    3.0: 0.130805714174651,
    4.0: 0.104681328096374,
}

# bound values recomputed at full precision; the published table rounds
# the b=1.5 entry to 6.86 while the true value is 6.8511
PINNED_BOUND = {
    1.0: 4.359868202,
    1.5: 6.851096066,
    2.0: 9.890205189,
    3.0: 17.61727697,
    4.0: 27.54626188,
}


@settings(max_examples=150, deadline=None)
@given(st.floats(1.0, 50.0, allow_nan=False))
def test_root_residual(b):
    x = solve_x(b)
    assert 0.0 < x < 0.5
    assert abs(b * x + math.asin(x) - math.pi / 6.0) < 1e-12


def test_pinned_roots():
    for b, x in PINNED_X.items():
        assert solve_x(b) == pytest.approx(x, abs=1e-12)


def test_pinned_bounds():
    for b, v in PINNED_BOUND.items():
        assert chi_f_upper(b).bound == pytest.approx(v, abs=1e-7)


def test_bound_fields_consistent():
    for b in (1.0, 1.7, 2.5, 6.0):
        d = chi_f_upper(b)
        assert abs(b * d.x - d.y) <= 1e-12
        c = math.sqrt(1.0 - d.x * d.x)
        assert d.s == pytest.approx(b + c)
        assert d.bound == pytest.approx(math.sqrt(3.0) / 3.0 * d.s / d.x)
        assert d.area_a == pytest.approx(
            0.25 * (math.pi - 6.0 * math.asin(d.x) + 6.0 * d.x * c)
        )
        # the two closed forms of the bound agree
        assert chi_f_upper_alt(b) == pytest.approx(d.bound, abs=1e-9)
        assert d.bound == pytest.approx(
            d.s * d.s * (math.sqrt(3.0) / 2.0) / d.area_a, abs=1e-9
        )


def test_b_below_one_rejected():
    with pytest.raises(ValueError):
        solve_x(0.5)
    with pytest.raises(ValueError):
        chi_f_upper(0.99)


def test_h_lower_bound_infeasible():
    # s(1) ~ 1.97 so n must exceed ~3.93
    with pytest.raises(InfeasibleParameterError):
        h_lower_bound(1.0, 3)
    assert h_lower_bound(1.0, 5) > 0.0


def test_hexagon_count_exceeds_lower_bound():
    for b in (1.0, 2.0):
        for n in (10, 20, 50, 100):
            h = count_contained_hexagons(b, n)
            assert h.h_n >= h_lower_bound(b, n) - 1e-9
            assert h.lower == pytest.approx(h_lower_bound(b, n))
            assert h.ratio == pytest.approx(n * n / h.h_n)
            # the finite colouring never beats the limit bound
            assert h.ratio > chi_f_upper(b).bound


def test_ratio_converges_towards_bound():
    ratios = [count_contained_hexagons(1.0, n).ratio for n in (20, 50, 100, 200)]
    assert all(a >= b for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] < 4.46  # limit is 4.3599
