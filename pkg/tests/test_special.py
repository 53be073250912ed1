"""Identity battery and external-oracle checks for the 2F1 engine."""

import cmath
import math

import mpmath
import numpy as np
import pytest

from fermiwell import hyp2f1, hyp2f1_dz, lgamma_complex
from fermiwell import kernels, special
from fermiwell.errors import ConvergenceError, DegenerateParameterError, DomainError, PoleError

mpmath.mp.dps = 30


def _random_params(rng):
    """Parameter triples shaped like the package's call sites: a = nu + i*mu,
    b = a+1, c = 2 nu + 1, plus generic complex perturbations."""
    nu = rng.uniform(0.05, 3.0)
    mu = rng.uniform(0.05, 3.0)
    a = complex(nu, mu)
    return a, a + 1.0, complex(2.0 * nu + 1.0, 0.0)


# ------------------------------------------------------------ mpmath oracle


def test_hyp2f1_matches_mpmath():
    rng = np.random.default_rng(7)
    for _ in range(60):
        a, b, c = _random_params(rng)
        z = rng.uniform(-0.9, 0.98)
        got = hyp2f1(a, b, c, z)
        want = complex(mpmath.hyp2f1(a, b, c, z))
        assert abs(got - want) <= 1e-11 * max(1.0, abs(want))


def test_hyp2f1_dz_matches_mpmath_derivative():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a, b, c = _random_params(rng)
        z = rng.uniform(0.05, 0.9)
        got = hyp2f1_dz(a, b, c, z)
        want = complex(mpmath.diff(lambda t: mpmath.hyp2f1(a, b, c, t), z))
        assert abs(got - want) <= 1e-9 * max(1.0, abs(want))


def test_lgamma_matches_mpmath():
    rng = np.random.default_rng(13)
    for _ in range(80):
        z = complex(rng.uniform(-6.0, 8.0), rng.uniform(-6.0, 6.0))
        if abs(z.imag) < 1e-3 and z.real <= 0.5:
            continue
        got = lgamma_complex(z)
        want = complex(mpmath.loggamma(z))
        assert abs(got - want) <= 1e-11 * max(1.0, abs(want))


# --------------------------------------------------------- identity battery


def test_euler_transformation():
    rng = np.random.default_rng(17)
    for _ in range(40):
        a, b, c = _random_params(rng)
        z = rng.uniform(0.0, 0.95)
        lhs = hyp2f1(a, b, c, z)
        rhs = (1.0 - z) ** (c - a - b) * hyp2f1(c - a, c - b, c, z)
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_pfaff_transformation():
    rng = np.random.default_rng(19)
    for _ in range(40):
        a, b, c = _random_params(rng)
        z = rng.uniform(0.0, 0.95)
        lhs = hyp2f1(a, b, c, z)
        rhs = (1.0 - z) ** (-a) * hyp2f1(a, c - b, c, z / (z - 1.0))
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_gauss_contiguous_relation():
    rng = np.random.default_rng(23)
    for _ in range(40):
        a, b, c = _random_params(rng)
        z = rng.uniform(0.0, 0.9)
        lhs = c * hyp2f1(a, b, c, z) - c * hyp2f1(a + 1.0, b, c, z) \
            + b * z * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z)
        scale = max(1.0, abs(c * hyp2f1(a, b, c, z)))
        assert abs(lhs) <= 1e-9 * scale


def test_series_connection_overlap_band():
    rng = np.random.default_rng(29)
    for _ in range(40):
        a, b, c = _random_params(rng)
        z = rng.uniform(0.6, 0.8)
        direct, st1 = kernels.hyp2f1_series_kernel(
            a, b, c, z, special.DEFAULT_TOL, special.DEFAULT_MAX_TERMS
        )
        assert st1 == 0
        connected, st2 = kernels._hyp2f1_zu_kernel(
            a, b, c, z, 1.0 - z, special.DEFAULT_TOL, special.DEFAULT_MAX_TERMS, 0.0
        )
        assert st2 == 0
        assert abs(direct - connected) <= 1e-9 * max(1.0, abs(direct))


def test_derivative_matches_finite_difference():
    rng = np.random.default_rng(31)
    step = 1e-6
    for _ in range(30):
        a, b, c = _random_params(rng)
        z = rng.uniform(0.05, 0.9)
        fd = (hyp2f1(a, b, c, z + step) - hyp2f1(a, b, c, z - step)) / (2.0 * step)
        got = hyp2f1_dz(a, b, c, z)
        assert abs(got - fd) <= 1e-6 * max(1.0, abs(got))


def test_symmetry_in_a_b_is_exact():
    a, b, c = complex(0.4, 1.3), complex(1.4, 1.3), complex(1.8, 0.0)
    for z in (0.3, 0.85, -2.0):
        assert hyp2f1(a, b, c, z) == hyp2f1(b, a, c, z)


def test_conjugate_pair_is_real():
    # c - a - b = 1 is an integer here, so stay on the series path (z <= 0.7);
    # the connection formula legitimately refuses this parameter set.
    beta = 1.5723
    for z in (0.1, 0.5, 0.7):
        val = hyp2f1(complex(0.0, beta), complex(0.0, -beta), 1.0, z)
        assert abs(val.imag) <= 1e-12 * max(1.0, abs(val))


# ------------------------------------------------------------------- errors


def test_lgamma_pole_rejected():
    with pytest.raises(PoleError):
        lgamma_complex(0.0)
    with pytest.raises(PoleError):
        lgamma_complex(-3.0)


def test_bad_arguments_rejected():
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, -2.0, 0.3)
    with pytest.raises(DomainError):
        hyp2f1(complex("nan"), 0.5, 1.0, 0.3)


def test_degenerate_connection_parameters_rejected():
    # c - a - b = 0: the 1-z connection formula has a genuine pole.
    with pytest.raises(DegenerateParameterError):
        hyp2f1(1.0, 1.0, 2.0, 0.9)


def test_term_cap_raises_convergence_error():
    with pytest.raises(ConvergenceError):
        hyp2f1(complex(0.3, 1.0), complex(1.3, 1.0), 1.6, 0.5, max_terms=3)
