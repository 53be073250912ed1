"""Hot numerical kernels: complex log-gamma, Gauss 2F1, Numerov recursion.

Every function here is nopython-jitted when numba is enabled (see
:mod:`fermiwell.backend`) and runs as plain Python otherwise.  Kernels return
status codes instead of raising; the Python wrappers in :mod:`fermiwell.special`
and friends translate them into exceptions.

Status codes: 0 ok, 1 series did not converge, 2 degenerate connection
parameters (c-a-b within 1e-8 of an integer).
"""

import cmath
import math

import numpy as np

from .backend import njit

# Lanczos approximation, g=7 with 9 coefficients (Godfrey/Numerical Recipes
# set); ~15 significant digits for Re z >= 0.5.
_LANCZOS_G = 7.0
_LANCZOS_C = np.array(
    [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ]
)

_HALF_LOG_TWO_PI = 0.9189385332046727


@njit(cache=True)
def lgamma_complex_kernel(z):
    """Principal branch of log Gamma(z) for complex128 z off the poles.

    For Re z < 0.5 the argument is shifted up with the recurrence
    lgamma(z) = lgamma(z+1) - Log z; the sum of principal logs reproduces the
    principal branch everywhere off the negative real axis.
    """
    shift = 0.0 + 0.0j
    while z.real < 0.5:
        shift += cmath.log(z)
        z = z + 1.0
    acc = _LANCZOS_C[0]
    for k in range(1, 9):
        acc = acc + _LANCZOS_C[k] / (z - 1.0 + k)
    t = z + (_LANCZOS_G - 0.5)
    return _HALF_LOG_TWO_PI + (z - 0.5) * cmath.log(t) - t + cmath.log(acc) - shift


@njit(cache=True)
def hyp2f1_series_kernel(a, b, c, z, tol, max_terms):
    """Direct Gauss series for 2F1(a,b;c;z); requires |z| < 1."""
    term = 1.0 + 0.0j
    total = term
    small = 0
    n = 0
    while n < max_terms:
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total = total + term
        n += 1
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 2:
                return total, 0
        else:
            small = 0
    return total, 1


@njit(cache=True)
def _hyp2f1_zu_kernel(a, b, c, z, u, tol, max_terms, z_switch):
    """2F1(a,b;c;z) for z in [0,1), with u = 1-z supplied separately.

    Callers near z = 1 compute u in a stable form (e.g. a logistic tail), so
    the connection path keeps full precision even when 1.0 - z underflows.
    """
    if z <= z_switch:
        return hyp2f1_series_kernel(a, b, c, z, tol, max_terms)
    s = c - a - b
    nearest = math.floor(s.real + 0.5)
    if abs(s.imag) < 1e-8 and abs(s.real - nearest) < 1e-8:
        return 0.0j, 2
    f1, st1 = hyp2f1_series_kernel(a, b, a + b - c + 1.0, u, tol, max_terms)
    if st1 != 0:
        return 0.0j, st1
    f2, st2 = hyp2f1_series_kernel(c - a, c - b, s + 1.0, u, tol, max_terms)
    if st2 != 0:
        return 0.0j, st2
    lg_c = lgamma_complex_kernel(c)
    p1 = cmath.exp(lg_c + lgamma_complex_kernel(s) - lgamma_complex_kernel(c - a) - lgamma_complex_kernel(c - b))
    p2 = cmath.exp(lg_c + lgamma_complex_kernel(-s) - lgamma_complex_kernel(a) - lgamma_complex_kernel(b) + s * math.log(u))
    return p1 * f1 + p2 * f2, 0


@njit(cache=True)
def hyp2f1_kernel(a, b, c, z, tol, max_terms, z_switch):
    """2F1(a,b;c;z) for real z < 1.

    z < 0 is mapped into [0,1) by a Pfaff transformation; on [0, z_switch]
    the direct series is used, above it the Gauss connection formula in
    powers of 1-z (invalid when c-a-b is near an integer -> status 2).
    """
    pre = 1.0 + 0.0j
    if z < 0.0:
        # Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
        pre = cmath.exp(-a * math.log(1.0 - z))
        b = c - b
        z = z / (z - 1.0)
    val, status = _hyp2f1_zu_kernel(a, b, c, z, 1.0 - z, tol, max_terms, z_switch)
    return pre * val, status


@njit(cache=True)
def bound_bracket_kernel(nu, mu_im, y, y1, tol, max_terms, z_switch, want_deriv):
    """Value (and optionally d/dy) of y^nu (1-y)^mu 2F1(nu+mu, nu+mu+1; 2nu+1; y).

    y1 = 1-y is passed separately so deep-edge wells (y0 within rounding of
    1) keep full precision.  mu = i*mu_im is purely imaginary, so the
    bracket is real analytically; the real part is returned together with a
    relative imaginary residual.  Returns (psi, dpsi_dy, im_resid, status).
    """
    mu = 1j * mu_im
    a = nu + mu
    b = a + 1.0
    c = 2.0 * nu + 1.0
    f, status = _hyp2f1_zu_kernel(a, b, c, y, y1, tol, max_terms, z_switch)
    if status != 0:
        return 0.0, 0.0, 0.0, status
    w = cmath.exp(nu * math.log(y) + mu * math.log(y1))
    br = w * f
    # residual relative to max(|bracket|, y^nu): |(1-y)^mu| = 1, so y^nu is
    # the natural outer scale and stays O(1) where the bracket crosses zero
    mag = abs(br)
    wmag = abs(w)
    if wmag > mag:
        mag = wmag
    resid = abs(br.imag) / mag if mag > 0.0 else 0.0
    if not want_deriv:
        return br.real, 0.0, resid, 0
    fp, status = _hyp2f1_zu_kernel(a + 1.0, b + 1.0, c + 1.0, y, y1, tol, max_terms, z_switch)
    if status != 0:
        return br.real, 0.0, resid, status
    fp = fp * (a * b / c)
    dbr = (nu / y) * br - (mu / y1) * br + w * fp
    return br.real, dbr.real, resid, 0


@njit(cache=True)
def bound_matching_profile_kernel(b_fm, kappa2, u0, y0, y10, energies, parity_odd, tol, max_terms, z_switch):
    """Matching function psi(0) (odd) or dpsi/dx(0+) (even) over an E grid."""
    out = np.empty(energies.size)
    status = 0
    for i in range(energies.size):
        e = energies[i]
        nu = b_fm * math.sqrt(-kappa2 * e)
        mu_im = b_fm * math.sqrt(kappa2 * (e + u0))
        psi, dpsi_dy, _, st = bound_bracket_kernel(nu, mu_im, y0, y10, tol, max_terms, z_switch, not parity_odd)
        if st != 0:
            status = st
            out[i] = np.nan
        elif parity_odd:
            out[i] = psi
        else:
            out[i] = dpsi_dy * (-(y0 * y10) / b_fm)
    return out, status


@njit(cache=True)
def bound_psi_profile_kernel(nu, mu_im, ys, y1s, tol, max_terms, z_switch):
    """psi values over a y grid at fixed (nu, mu)."""
    out = np.empty(ys.size)
    for i in range(ys.size):
        psi, _, _, st = bound_bracket_kernel(nu, mu_im, ys[i], y1s[i], tol, max_terms, z_switch, False)
        if st != 0:
            return out, st
        out[i] = psi
    return out, 0


@njit(cache=True)
def hbs_matching_profile_kernel(y0, y10, betas, parity_odd, tol, max_terms, z_switch):
    """HBS matching (zero-energy bracket, nu=0) over a beta grid.

    Positions are in units of b, so the even matching derivative is taken
    with respect to x/b.
    """
    out = np.empty(betas.size)
    status = 0
    for i in range(betas.size):
        psi, dpsi_dy, _, st = bound_bracket_kernel(0.0, betas[i], y0, y10, tol, max_terms, z_switch, not parity_odd)
        if st != 0:
            status = st
            out[i] = np.nan
        elif parity_odd:
            out[i] = psi
        else:
            out[i] = dpsi_dy * (-(y0 * y10))
    return out, status


@njit(cache=True)
def count_sign_changes_kernel(vals, rel_floor):
    """Strict sign changes, ignoring entries below rel_floor * max|vals|."""
    peak = 0.0
    for i in range(vals.size):
        av = abs(vals[i])
        if av > peak:
            peak = av
    floor = rel_floor * peak
    count = 0
    prev = 0.0
    for i in range(vals.size):
        v = vals[i]
        if abs(v) <= floor:
            continue
        if prev != 0.0 and ((v > 0.0) != (prev > 0.0)):
            count += 1
        prev = v
    return count


@njit(cache=True)
def numerov_propagate_kernel(f, h, psi0, psi1):
    """Numerov recursion for psi'' + f(x) psi = 0 on a uniform grid.

    The running solution is renormalized whenever |psi| exceeds 1e100; the
    returned array is therefore the solution up to an overall positive scale.
    """
    n = f.size
    psi = np.empty(n)
    psi[0] = psi0
    psi[1] = psi1
    h12 = h * h / 12.0
    for i in range(2, n):
        num = 2.0 * (1.0 - 5.0 * h12 * f[i - 1]) * psi[i - 1] - (1.0 + h12 * f[i - 2]) * psi[i - 2]
        val = num / (1.0 + h12 * f[i])
        psi[i] = val
        if abs(val) > 1e100:
            inv = 1.0 / abs(val)
            for j in range(i + 1):
                psi[j] *= inv
    return psi


@njit(cache=True)
def _deriv5(psi, i, h):
    return (psi[i - 2] - 8.0 * psi[i - 1] + 8.0 * psi[i + 1] - psi[i + 2]) / (12.0 * h)


@njit(cache=True)
def _outward_seed(f, h, parity_odd):
    """psi(h) from a one-sided Taylor expansion, O(h^6) accurate.

    A ghost-point seed would span x = 0, where the |x| dependence of the
    potential makes psi''' jump and silently degrades the scheme to second
    order; the one-sided expansion stays on the smooth branch.  f', f'', f'''
    at the origin come from one-sided finite differences of the grid values.
    """
    f0 = f[0]
    fp = (-11.0 * f0 + 18.0 * f[1] - 9.0 * f[2] + 2.0 * f[3]) / (6.0 * h)
    fpp = (2.0 * f0 - 5.0 * f[1] + 4.0 * f[2] - f[3]) / (h * h)
    fppp = (-f0 + 3.0 * f[1] - 3.0 * f[2] + f[3]) / (h * h * h)
    if parity_odd:
        # psi(0) = 0, psi'(0) = 1
        return h * (1.0 - f0 * h * h / 6.0 - fp * h**3 / 12.0
                    + (f0 * f0 - 3.0 * fpp) * h**4 / 120.0)
    # psi(0) = 1, psi'(0) = 0
    return (1.0 - f0 * h * h / 2.0 - fp * h**3 / 6.0
            + (f0 * f0 - fpp) * h**4 / 24.0
            + (4.0 * f0 * fp - fppp) * h**5 / 120.0)


@njit(cache=True)
def shooting_mismatch_kernel(w, h, kappa2, e, m, parity_odd):
    """Scaled Wronskian of the outward and inward solutions at grid index m.

    w = kappa2 * V on the half-line grid.  Zero exactly at eigenvalues; sign
    changes continuously with E, which makes it a clean bracketing target.
    """
    n = w.size
    f = kappa2 * e - w
    h12 = h * h / 12.0
    p0 = 0.0 if parity_odd else 1.0
    p1 = _outward_seed(f, h, parity_odd)
    out = numerov_propagate_kernel(f[: m + 3], h, p0, p1)
    k = math.sqrt(-kappa2 * e)
    rev = f[m - 2 :][::-1].copy()
    inw = numerov_propagate_kernel(rev, h, 1.0, math.exp(k * h))[::-1]
    po = out[m]
    dpo = _deriv5(out, m, h)
    mi = m - (m - 2)
    pi_ = inw[mi]
    dpi = _deriv5(inw, mi, h)
    wr = dpo * pi_ - dpi * po
    norm = (abs(po) + h * abs(dpo)) * (abs(pi_) + h * abs(dpi))
    if norm == 0.0:
        return wr
    return wr / norm


@njit(cache=True)
def assemble_eigenfunction_kernel(w, h, kappa2, e, m, parity_odd):
    """Half-line eigenfunction: outward up to m, matched inward beyond."""
    n = w.size
    f = kappa2 * e - w
    h12 = h * h / 12.0
    p0 = 0.0 if parity_odd else 1.0
    p1 = _outward_seed(f, h, parity_odd)
    out = numerov_propagate_kernel(f, h, p0, p1)
    k = math.sqrt(-kappa2 * e)
    inw = numerov_propagate_kernel(f[::-1].copy(), h, 1.0, math.exp(k * h))[::-1]
    psi = np.empty(n)
    scale = out[m] / inw[m] if inw[m] != 0.0 else 1.0
    for i in range(n):
        if i <= m:
            psi[i] = out[i]
        else:
            psi[i] = inw[i] * scale
    return psi


@njit(cache=True)
def zero_energy_nodes_kernel(w_full, h):
    """Node count of the E=0 solution integrated in from the +x asymptote.

    Seeded with the constant HBS boundary value (psi=1, psi'=0) where the
    potential tail is negligible; by Sturm oscillation the node count equals
    the number of bound states.
    """
    f = -w_full[::-1].copy()
    psi = numerov_propagate_kernel(f, h, 1.0, 1.0)
    return count_sign_changes_kernel(psi, 1e-12)
