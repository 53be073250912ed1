"""Semiclassical machinery: effective parameter G, action F(E), WKB levels.

G = (1/pi) * integral of sqrt(-2mV/hbar^2) over the line; in dimensionless
form G = (4/pi) beta asinh(e^(alpha/2)).  F(E) is the quantization action,
available both in closed form and by turning-point quadrature; the two
routes are kept independent and cross-checked in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .core import DimensionlessWell, WellParams, potential, to_dimensionless
from .errors import DomainError, QuadratureError

CLOSED = "closed"
QUADRATURE = "quadrature"

# Relative clipping of the energy window to dodge the degenerate endpoints.
_E_CLIP_LO = 1e-9
_E_CLIP_HI = 1e-9


@dataclass(frozen=True)
class WkbLevel:
    index: int
    energy: float
    f_value: float


@dataclass(frozen=True)
class SquareWellReference:
    """Square-well analogs: g_prime = (2/pi) W, HBS criticality at W = n pi/2."""

    g_prime: float
    w: float


def g_closed_form(d: DimensionlessWell) -> float:
    return (4.0 / math.pi) * d.beta * math.asinh(math.exp(0.5 * d.alpha))


def _quad(func, lo, hi, points=None):
    val, err, info, *rest = quad(
        func, lo, hi, epsabs=0.0, epsrel=1e-11, limit=300, points=points, full_output=1
    )
    if rest:
        raise QuadratureError(f"adaptive quadrature failed: {rest[0]}")
    return val


def g_quadrature(p: WellParams) -> float:
    """G by adaptive quadrature of sqrt(kappa2 * (-V)) over the line.

    The integrand decays like e^(-(x-a)/2b); it is truncated where it falls
    below 1e-12 of its peak, i.e. y < 1e-24 * y0.
    """
    y0 = 1.0 / (1.0 + math.exp(-p.a / p.b))
    x_cut = p.a + p.b * math.log(1.0 / (1e-24 * y0) - 1.0)

    def integrand(x):
        return math.sqrt(p.kappa2 * (-potential(p, x)))

    val = _quad(integrand, 0.0, x_cut, points=[p.a])
    return 2.0 * val / math.pi


def square_well_reference(v0: float, a: float, kappa2: float) -> SquareWellReference:
    if not (v0 > 0.0 and a > 0.0 and kappa2 > 0.0):
        raise DomainError("square_well_reference requires positive inputs")
    w = a * math.sqrt(kappa2 * v0)
    return SquareWellReference(g_prime=2.0 * w / math.pi, w=w)


def _f_closed(alpha: float, beta: float, omega: float) -> float:
    # omega = 1 + 2E/U0 lies in (-tanh(alpha/2), 1) on the bound window, so
    # sqrt(omega - 1) is imaginary; the second term is rewritten with the
    # real branch sqrt(1-omega) * atan(.), which is what the complex
    # principal-branch expression reduces to.
    t = math.tanh(0.5 * alpha)
    s = max(omega + t, 0.0)
    term1 = math.sqrt(omega + 1.0) * math.atanh(math.sqrt(s / (omega + 1.0)))
    om1 = 1.0 - omega
    term2 = math.sqrt(om1) * math.atan(math.sqrt(s / om1)) if om1 > 0.0 else 0.0
    return (2.0 * math.sqrt(2.0) * beta / math.pi) * (term1 - term2)


def _f_quadrature(p: WellParams, energy: float) -> float:
    u0 = p.u0
    x2 = p.a + p.b * math.log(-u0 / energy - 1.0)
    # Substitution x = x2 - t^2 removes the sqrt turning-point singularity.
    t_max = math.sqrt(x2)

    def integrand(t):
        x = x2 - t * t
        arg = p.kappa2 * (energy - potential(p, x))
        return 2.0 * t * math.sqrt(max(arg, 0.0))

    pts = [math.sqrt(x2 - p.a)] if x2 > p.a else None
    val = _quad(integrand, 0.0, t_max, points=pts)
    return 2.0 * val / math.pi


def f_action(p: WellParams, energy: float, method: str = CLOSED) -> float:
    """Quantization action F(E) between the turning points; F(E_n) = n + 1/2."""
    if not (-p.v0 < energy < 0.0):
        raise DomainError(f"E={energy} outside the classical window (-v0, 0)")
    if method == CLOSED:
        d = to_dimensionless(p)
        omega = 1.0 + 2.0 * energy / p.u0
        return _f_closed(d.alpha, d.beta, omega)
    if method == QUADRATURE:
        return _f_quadrature(p, energy)
    raise DomainError(f"unknown method {method!r}")


def wkb_spectrum(p: WellParams, tol_e: float = 1e-8, method: str = CLOSED) -> list[WkbLevel]:
    """Levels solving F(E) = n + 1/2 for every n with n + 1/2 < F(0-)."""
    e_lo = -p.v0 * (1.0 - _E_CLIP_LO)
    e_hi = -p.v0 * _E_CLIP_HI
    f_top = f_action(p, e_hi, method)
    levels = []
    n = 0
    while n + 0.5 < f_top:
        target = n + 0.5
        lo, hi = e_lo, e_hi
        while hi - lo > tol_e:
            mid = 0.5 * (lo + hi)
            if f_action(p, mid, method) < target:
                lo = mid
            else:
                hi = mid
        energy = 0.5 * (lo + hi)
        levels.append(WkbLevel(index=n, energy=energy, f_value=f_action(p, energy, method)))
        n += 1
    return levels
