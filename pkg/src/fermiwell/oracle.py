"""Independent direct-integration ground truth: Numerov shooting solver.

Everything here works directly on the Schrodinger equation, with no
hypergeometric machinery, so it can arbitrate the analytic modules.  The
eigenvalue condition is the vanishing of the (scaled) Wronskian between the
outward parity-seeded solution and the inward decaying solution at the
match point, and a zero-energy inward integration counts bound states by
Sturm oscillation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import WellParams, potential
from .errors import BracketCollisionError, DomainError

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class IntegratorConfig:
    x_max: float
    step: float
    match_point: float


@dataclass(frozen=True)
class OracleState:
    energy: float
    parity: str
    nodes: int


def default_config(p: WellParams) -> IntegratorConfig:
    """Grid resolving the edge (b/20) and the shortest wavelength; the outer
    boundary a + 40b keeps the tail potential negligible against even
    near-threshold binding energies."""
    k_max = math.sqrt(p.kappa2 * p.u0)
    step = min(p.b / 20.0, 0.02 / k_max)
    return IntegratorConfig(x_max=p.a + 40.0 * p.b, step=step, match_point=p.a)


def _grid(p: WellParams, cfg: IntegratorConfig) -> tuple[np.ndarray, float, np.ndarray, int]:
    if cfg.x_max < p.a + 15.0 * p.b:
        raise DomainError("x_max must be at least a + 15b")
    n = int(math.ceil(cfg.x_max / cfg.step)) + 1
    xs, h = np.linspace(0.0, cfg.x_max, n, retstep=True)
    w = p.kappa2 * potential(p, xs)
    m = int(round(cfg.match_point / h))
    m = min(max(m, 2), n - 3)
    return xs, float(h), w, m


def numerov_integrate(
    p: WellParams, energy: float, cfg: IntegratorConfig | None = None,
    direction: str = "outward", parity_start: str = EVEN,
) -> tuple[np.ndarray, np.ndarray]:
    """Raw half-line Numerov solution (x, psi), unnormalized."""
    if cfg is None:
        cfg = default_config(p)
    xs, h, w, _ = _grid(p, cfg)
    f = p.kappa2 * energy - w
    h12 = h * h / 12.0
    if direction == "outward":
        if parity_start == ODD:
            p0, p1 = 0.0, h - f[0] * h**3 / 6.0
        else:
            p0, p1 = 1.0, (1.0 - 5.0 * h12 * f[0]) / (1.0 + h12 * f[1])
        psi = kernels.numerov_propagate_kernel(f, h, p0, p1)
    elif direction == "inward":
        k = math.sqrt(-p.kappa2 * energy)
        psi = kernels.numerov_propagate_kernel(f[::-1].copy(), h, 1.0, math.exp(k * h))[::-1]
    else:
        raise DomainError("direction must be 'outward' or 'inward'")
    return xs, psi


def mismatch(p: WellParams, energy: float, cfg: IntegratorConfig | None = None, parity: str = EVEN) -> float:
    """Scaled Wronskian of the two shooting branches at the match point."""
    if cfg is None:
        cfg = default_config(p)
    _, h, w, m = _grid(p, cfg)
    return float(kernels.shooting_mismatch_kernel(w, h, p.kappa2, energy, m, parity == ODD))


def _nodes_at(w: np.ndarray, h: float, kappa2: float, energy: float, m: int, odd: bool) -> int:
    psi = kernels.assemble_eigenfunction_kernel(w, h, kappa2, energy, m, odd)
    half = int(kernels.count_sign_changes_kernel(psi[1:], 1e-12))
    return 2 * half + (1 if odd else 0)


def oracle_spectrum(
    p: WellParams, cfg: IntegratorConfig | None = None, grid_points: int = 1000, tol_e: float = 1e-9
) -> list[OracleState]:
    """Bound states by scanning and bisecting the mismatch in E, per parity."""
    if cfg is None:
        cfg = default_config(p)
    _, h, w, m = _grid(p, cfg)
    eps = 1e-6 * p.v0
    energies = np.linspace(-p.v0 + eps, -eps, grid_points)
    states: list[OracleState] = []
    for parity in (EVEN, ODD):
        odd = parity == ODD
        vals = np.array([kernels.shooting_mismatch_kernel(w, h, p.kappa2, e, m, odd) for e in energies])
        signs = np.sign(vals)
        for i in np.nonzero(signs[:-1] * signs[1:] < 0)[0]:
            lo, hi = energies[i], energies[i + 1]
            flo = vals[i]
            while hi - lo > tol_e:
                mid = 0.5 * (lo + hi)
                fm = kernels.shooting_mismatch_kernel(w, h, p.kappa2, mid, m, odd)
                if fm == 0.0:
                    lo = hi = mid
                    break
                if (fm > 0.0) == (flo > 0.0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            energy = 0.5 * (lo + hi)
            states.append(OracleState(energy=energy, parity=parity, nodes=_nodes_at(w, h, p.kappa2, energy, m, odd)))
    states.sort(key=lambda s: s.energy)
    for idx, s in enumerate(states):
        if s.nodes != idx:
            raise BracketCollisionError(
                f"oracle state {idx} has {s.nodes} nodes; an eigenvalue was likely missed -- raise grid_points"
            )
    return states


def count_via_zero_energy_nodes(p: WellParams, cfg: IntegratorConfig | None = None) -> int:
    """Bound-state count from the node count of the E=0 full-line solution."""
    if cfg is None:
        cfg = default_config(p)
    n = int(math.ceil(cfg.x_max / cfg.step)) + 1
    xs, h = np.linspace(-cfg.x_max, cfg.x_max, 2 * n - 1, retstep=True)
    w_full = p.kappa2 * potential(p, xs)
    return int(kernels.zero_energy_nodes_kernel(w_full, float(h)))
