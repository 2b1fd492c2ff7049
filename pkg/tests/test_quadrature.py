import pytest
from mpmath import mp, mpc, mpf

from eistau.algebra import make_index
from eistau.config import TruncationBudget
from eistau.integrals import int_eval
from eistau.quadrature import (
    PathSpec,
    cusp_decay_const,
    default_path,
    eis_cusp_near_zero,
    quad_segment,
    quad_T_cusp,
    quad_vertical,
)
from eistau.eisenstein import eis_cusp_eval

BUDGET = TruncationBudget(1e-28, 100_000)


def test_segment_constant():
    val = quad_segment(lambda t: mpc(1), mpc(0, 1), mpc(0, 2))
    assert abs(val - mpc(0, 1)) < mpf("1e-30")


def test_path_validation():
    with pytest.raises(ValueError):
        PathSpec(complex(0, -1), 5.0)
    with pytest.raises(ValueError):
        PathSpec(complex(0, 2), 1.0)
    p = default_path(mpc(0, 1), 1e-25, 2)
    assert p.height > 9


def test_cusp_decay_const_bounds_series():
    k = 2
    kc = cusp_decay_const(k, mpf(1))
    for u in (mpf(1), mpf(2), mpf(4)):
        val = abs(eis_cusp_eval(k, mpc(0, u), BUDGET))
        assert val <= kc * mp.exp(-2 * mp.pi * u)


def test_depth1_oracle_vs_closed_form():
    tau = mpc(0, 1)
    idx = make_index([2], [1])
    lhs = int_eval(idx, tau, BUDGET)
    rhs = quad_vertical([("cusp", 2)], [1], default_path(tau, 1e-28, 1), tol=1e-25)
    assert abs(lhs - rhs) < mpf("1e-25")


def test_depth1_oracle_off_axis():
    # the path start must keep its full precision: a float-complex start would
    # perturb tau by ~1e-17 and cap the agreement near 1e-20
    tau = mpc("0.3", "1.2")
    idx = make_index([3], [4])
    lhs = int_eval(idx, tau, BUDGET)
    rhs = quad_vertical([("cusp", 3)], [4], default_path(tau, 1e-28, 4), tol=1e-25)
    assert abs(lhs - rhs) < mpf("1e-24")


def test_oracle_rejects_const_innermost():
    with pytest.raises(Exception):
        quad_vertical([("cusp", 2), ("const", 2)], [1, 1], default_path(mpc(0, 1), 1e-20, 2))


def test_oracle_height_cap_check():
    with pytest.raises(ValueError):
        quad_vertical([("cusp", 2)], [1], PathSpec(complex(0, 1), 2.0), tol=1e-25)


def test_eis_cusp_near_zero_matches_series_at_moderate_height():
    tau = mpc(0, "0.8")
    a = eis_cusp_near_zero(2, tau, BUDGET)
    b = eis_cusp_eval(2, tau, BUDGET)
    assert abs(a - b) < mpf("1e-26")


def test_quad_T_cusp_guard():
    with pytest.raises(ValueError):
        quad_T_cusp(2, 4)
