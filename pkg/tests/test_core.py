import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermiwell import (
    DEFAULT_KAPPA2,
    DimensionlessWell,
    WellParams,
    from_dimensionless,
    potential,
    to_dimensionless,
)
from fermiwell.errors import DomainError


def test_depth_at_origin():
    p = WellParams(5.0, 3.0, 1.0)
    assert potential(p, 0.0) == pytest.approx(-5.0, abs=1e-12)


def test_potential_even_and_vanishing_at_infinity():
    p = WellParams(5.0, 3.0, 0.5)
    for x in (0.3, 1.7, 4.2):
        assert potential(p, x) == pytest.approx(potential(p, -x), abs=1e-15)
    assert abs(potential(p, 60.0)) < 1e-40


def test_potential_monotone_in_half_line():
    p = WellParams(45.3642, 2.0, 1.0)
    xs = np.linspace(0.0, 15.0, 400)
    vals = np.array([potential(p, x) for x in xs])
    assert np.all(np.diff(vals) > 0.0)


def test_u0_exceeds_v0():
    p = WellParams(50.0, 1.3, 0.65)
    assert p.u0 == pytest.approx(p.v0 * (1.0 + math.exp(-p.a / p.b)), rel=1e-14)
    assert p.u0 > p.v0


def test_dimensionless_round_trip():
    p = WellParams(48.6845, 1.5, 0.9)
    d = to_dimensionless(p)
    back = from_dimensionless(d, b=p.b, kappa2=p.kappa2)
    assert back.v0 == pytest.approx(p.v0, rel=1e-12)
    assert back.a == pytest.approx(p.a, rel=1e-12)


def test_dimensionless_round_trip_other_direction():
    d = DimensionlessWell(alpha=2.0, beta=1.5723)
    p = from_dimensionless(d, b=1.0, kappa2=DEFAULT_KAPPA2)
    d2 = to_dimensionless(p)
    assert d2.alpha == pytest.approx(d.alpha, rel=1e-12)
    assert d2.beta == pytest.approx(d.beta, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(
    v0=st.floats(0.5, 100.0),
    a=st.floats(0.2, 8.0),
    b=st.floats(0.05, 2.0),
)
def test_round_trip_property(v0, a, b):
    p = WellParams(v0, a, b)
    back = from_dimensionless(to_dimensionless(p), b=p.b, kappa2=p.kappa2)
    assert back.v0 == pytest.approx(p.v0, rel=1e-12)
    assert back.a == pytest.approx(p.a, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(
    v0=st.floats(0.5, 100.0),
    a=st.floats(0.2, 8.0),
    b=st.floats(0.05, 2.0),
    x=st.floats(-50.0, 50.0),
)
def test_potential_confined_property(v0, a, b, x):
    p = WellParams(v0, a, b)
    v = float(potential(p, x))
    # far tails may underflow to exactly 0.0; the well bottom may round one
    # ulp past -v0 for sharp-edged wells
    assert -p.v0 * (1.0 + 1e-14) <= v <= 0.0


def test_invalid_params_rejected():
    for bad in [(-1.0, 2.0, 1.0), (5.0, 0.0, 1.0), (5.0, 2.0, -0.3)]:
        with pytest.raises(DomainError):
            WellParams(*bad)
