"""Complex log-gamma and a Gauss 2F1 engine for complex parameters.

Real argument z < 1 only (z in [0,1) directly, z < 0 via an internal Pfaff
transformation).  Strategy: direct series up to Z_SWITCH, connection formula
in powers of 1-z beyond it.  This covers every call site in the package: the
hypergeometric argument is the logistic variable y in (0,1).
"""

from __future__ import annotations

import math

from . import kernels
from .errors import ConvergenceError, DegenerateParameterError, DomainError, PoleError

Z_SWITCH = 0.7
DEFAULT_TOL = 1e-13
DEFAULT_MAX_TERMS = 100_000

_STATUS_OK = 0
_STATUS_NO_CONVERGENCE = 1
_STATUS_DEGENERATE = 2


def _check_finite(name: str, z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name} must have finite components")
    return z


def _raise_for_status(status: int) -> None:
    if status == _STATUS_NO_CONVERGENCE:
        raise ConvergenceError("hypergeometric series hit the term cap before the tolerance")
    if status == _STATUS_DEGENERATE:
        raise DegenerateParameterError(
            "c-a-b within 1e-8 of an integer; the z->1-z connection formula degenerates"
        )


def lgamma_complex(z: complex) -> complex:
    """Principal-branch log Gamma(z); poles at non-positive integers rejected."""
    z = _check_finite("z", z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real):
        raise PoleError(f"log Gamma pole at z = {z.real:g}")
    return kernels.lgamma_complex_kernel(z)


def _validate_request(a: complex, b: complex, c: complex, z: float) -> tuple[complex, complex, complex, float]:
    a = _check_finite("a", a)
    b = _check_finite("b", b)
    c = _check_finite("c", c)
    z = float(z)
    if not math.isfinite(z) or z >= 1.0:
        raise DomainError("argument z must be a finite real < 1")
    if c.imag == 0.0 and c.real <= 0.0 and c.real == round(c.real):
        raise DomainError("c must not be zero or a negative integer")
    # Canonical (a, b) ordering keeps evaluation exactly symmetric in a, b.
    if (b.real, b.imag) < (a.real, a.imag):
        a, b = b, a
    return a, b, c, z


def hyp2f1(a, b, c, z, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> complex:
    """2F1(a,b;c;z) for complex parameters and real z < 1."""
    a, b, c, z = _validate_request(a, b, c, z)
    val, status = kernels.hyp2f1_kernel(a, b, c, z, tol, max_terms, Z_SWITCH)
    _raise_for_status(status)
    return val


def hyp2f1_dz(a, b, c, z, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> complex:
    """d/dz 2F1(a,b;c;z) via the contiguous relation (ab/c) 2F1(a+1,b+1;c+1;z)."""
    a, b, c, z = _validate_request(a, b, c, z)
    val, status = kernels.hyp2f1_kernel(a + 1.0, b + 1.0, c + 1.0, z, tol, max_terms, Z_SWITCH)
    _raise_for_status(status)
    return (a * b / c) * val
