"""Exact bound-state spectrum from the parity matching conditions.

Even states satisfy dpsi/dx(0+) = 0, odd states psi(0) = 0.  Roots are
located by a uniform energy scan plus bisection; labels are verified twice
(parity alternation and node counting) so a silently missed root cannot
shift the whole ladder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import expit

from . import kernels, special, wavefunction
from .core import WellParams, to_dimensionless
from .errors import BracketCollisionError, DomainError, LabelingError
from .semiclassical import g_closed_form

EVEN = "even"
ODD = "odd"

# States this close to E = 0 (relative to v0) get the near-threshold flag;
# finite tolerance cannot distinguish them from the E = 0 half bound state.
NEAR_THRESHOLD_REL = 2e-6


@dataclass(frozen=True)
class EigenState:
    index: int
    energy: float
    parity: str
    nodes: int
    near_threshold: bool = False


@dataclass(frozen=True)
class SpectrumReport:
    params: WellParams
    states: tuple[EigenState, ...]
    g_value: float
    count: int = field(default=0)

    def __post_init__(self):
        object.__setattr__(self, "count", len(self.states))


def matching_function(p: WellParams, energy: float, parity: str) -> float:
    """dpsi/dx(0+) for even parity, psi(0) for odd parity."""
    if parity not in (EVEN, ODD):
        raise DomainError(f"parity must be '{EVEN}' or '{ODD}'")
    sample = wavefunction.psi(p, energy, 0.0)
    return sample.dpsi_dx if parity == EVEN else sample.psi


def _matching_profile(p: WellParams, energies: np.ndarray, parity: str) -> np.ndarray:
    y0 = float(expit(p.a / p.b))
    y10 = float(expit(-p.a / p.b))
    vals, status = kernels.bound_matching_profile_kernel(
        p.b, p.kappa2, p.u0, y0, y10, energies, parity == ODD,
        special.DEFAULT_TOL, special.DEFAULT_MAX_TERMS, special.Z_SWITCH,
    )
    special._raise_for_status(status)
    return vals


def _bisect(p: WellParams, parity: str, lo: float, hi: float, flo: float, tol_e: float) -> float:
    while hi - lo > tol_e:
        mid = 0.5 * (lo + hi)
        fm = matching_function(p, mid, parity)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def solve_spectrum(
    p: WellParams, grid_points: int = 2000, tol_e: float = 1e-8, verify_nodes: bool = True
) -> SpectrumReport:
    """All bound states of the well, ordered, labeled and verified."""
    if grid_points < 200:
        raise DomainError("grid_points must be at least 200")
    if not tol_e > 0.0:
        raise DomainError("tol_e must be positive")
    eps = 1e-6 * p.v0
    energies = np.linspace(-p.v0 + eps, -eps, grid_points)
    found: list[tuple[float, str]] = []
    for parity in (EVEN, ODD):
        vals = _matching_profile(p, energies, parity)
        signs = np.sign(vals)
        flips = np.nonzero(signs[:-1] * signs[1:] < 0)[0]
        for i in flips:
            root = _bisect(p, parity, energies[i], energies[i + 1], vals[i], tol_e)
            found.append((root, parity))
    found.sort(key=lambda t: t[0])
    states = []
    for idx, (energy, parity) in enumerate(found):
        expected = EVEN if idx % 2 == 0 else ODD
        if parity != expected:
            raise BracketCollisionError(
                f"state {idx} has parity {parity}, expected {expected}; a root was likely "
                f"missed -- raise grid_points (currently {grid_points})"
            )
        nodes = idx
        if verify_nodes:
            _, vals_full = wavefunction.sample_bound_state(p, energy, parity == ODD)
            nodes = wavefunction.count_nodes(vals_full)
            if nodes != idx:
                raise LabelingError(
                    f"state {idx} ({parity}, E={energy:.6f}) has {nodes} nodes; labeling is inconsistent"
                )
        states.append(
            EigenState(
                index=idx,
                energy=float(energy),
                parity=parity,
                nodes=nodes,
                near_threshold=bool(abs(energy) <= NEAR_THRESHOLD_REL * p.v0),
            )
        )
    g = g_closed_form(to_dimensionless(p))
    return SpectrumReport(params=p, states=tuple(states), g_value=g)


def count_states(p: WellParams, grid_points: int = 2000) -> int:
    return solve_spectrum(p, grid_points=grid_points).count
