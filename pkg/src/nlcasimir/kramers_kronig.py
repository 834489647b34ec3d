"""Causality checks for the response models.

The real and imaginary parts of a causal permittivity on the real
frequency axis determine each other through Hilbert-transform pairs, and
the same spectral data fixes the imaginary-axis values.  Spatial
dispersion complicates the zero-frequency behaviour of the transverse
component: besides the usual conductor pole (first order, compensated by
a static-conductivity term) it acquires a second-order pole weighted by
omega_p^2 v_T k_hat / gamma, and that piece must be subtracted explicitly
before the dispersion integrals converge.  The longitudinal component at
v_L k_hat > 0 is regular down to zero frequency and satisfies the plain
insulator-form relations with no subtraction at all.

All integrals are folded onto (0, cutoff) using the Hermitian symmetry
eps(-x) = conj(eps(x)) that the underlying models obey, so the kernels
below are the folded ones: (x^2 - omega^2) in place of (x - omega).

verify_* functions return KKReport records with residuals normalized by
max(|LHS|, |RHS|, 1), which stays meaningful both where eps is huge and
where it is close to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import quad

from .errors import ConvergenceError, DomainError
from .response import (FOUR_PI, NonlocalAlt, NonlocalParams, eval_imag_axis,
                       eval_real_axis, static_transverse_conductivity)

_WINDOW_NODES, _WINDOW_WEIGHTS = np.polynomial.legendre.leggauss(31)


@dataclass(frozen=True)
class PVSettings:
    """Controls for principal-value quadrature.

    window is the half-width of the symmetric excision around the pole,
    cutoff replaces the infinite limits, tol is the relative tolerance
    handed to the adaptive pieces.
    """

    window: float = 1e-3       # eV
    cutoff: float = 1e4        # eV, far above any model scale
    tol: float = 1e-6

    def __post_init__(self):
        if self.window <= 0.0:
            raise DomainError(f"window must be positive, got {self.window}")
        if self.cutoff <= self.window:
            raise DomainError("cutoff must exceed the excision window")
        if not 0.0 < self.tol <= 1e-2:
            raise DomainError(f"tol must lie in (0, 1e-2], got {self.tol}")


# verify_* needs tighter pieces than the user-facing default: the two
# half-line pieces cancel near the pole, so their absolute errors must be
# small against the difference, not against themselves
_VERIFY_SETTINGS = PVSettings(tol=1e-9)


@dataclass
class KKReport:
    """Pointwise residuals of one dispersion relation on one grid."""

    relation: str
    k_hat: float
    grid: Tuple[float, ...]
    residuals: Tuple[float, ...]
    max_residual: float
    note: str = ""


# model structure lives at the eV scale but the cutoff sits decades above;
# pinning powers of ten stops QUADPACK extrapolating across the whole span
_DECADE_LADDER = (1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3)


def _quad_piece(f, lo, hi, tol, hints):
    pts = sorted(p for p in {*hints, *_DECADE_LADDER} if lo < p < hi)
    result = quad(f, lo, hi, points=pts or None, limit=200,
                  epsabs=1e-12, epsrel=tol, full_output=1)
    value, abserr = result[0], result[1]
    if not math.isfinite(value):
        raise ConvergenceError("quadrature piece diverged",
                               last_estimate=value)
    if abserr > 50.0 * max(tol * abs(value), tol):
        raise ConvergenceError(
            f"quadrature piece stalled: error {abserr:.3e} on value {value:.3e}",
            last_estimate=value)
    return value


def pv_integral(f: Callable[[float], float], pole: Optional[float] = None, *,
                settings: Optional[PVSettings] = None,
                lo: Optional[float] = None, hi: Optional[float] = None,
                points: Sequence[float] = ()) -> float:
    """Integrate f, excising a simple pole symmetrically if one is given.

    Bounds default to (-cutoff, +cutoff).  A side left at its default is
    treated as truncated infinity and gets the tail estimate K*f(+-K),
    exact for kernels that decay like 1/x^2 and O(1/K^3) otherwise; this
    is what makes doubling the cutoff a no-op within tol.  Explicit
    bounds are respected as hard edges with no tail.

    Around a pole the window (pole-w, pole+w) is integrated as the even
    pairing f(pole+t) + f(pole-t) on (0, w): the divergent odd part of f
    cancels analytically and only the smooth even remainder is sampled.
    """
    s = settings if settings is not None else PVSettings()
    lo_eff = -s.cutoff if lo is None else float(lo)
    hi_eff = s.cutoff if hi is None else float(hi)
    if not lo_eff < hi_eff:
        raise DomainError("empty integration range")

    total = 0.0
    if pole is None:
        total += _quad_piece(f, lo_eff, hi_eff, s.tol, points)
    else:
        w = s.window
        if not (lo_eff < pole - w and pole + w < hi_eff):
            raise DomainError(
                "pole window must lie strictly inside the integration range")
        # geometric breakpoints around the excision edge keep QUADPACK's
        # extrapolation from stalling on the 1/(x - pole) boundary layer
        anchors = tuple(pole + sgn * w * m
                        for sgn in (-1.0, 1.0) for m in (10.0, 100.0, 1000.0))
        total += _quad_piece(f, lo_eff, pole - w, s.tol, (*points, *anchors))
        total += _quad_piece(f, pole + w, hi_eff, s.tol, (*points, *anchors))
        half = 0.5 * w
        t = half * (_WINDOW_NODES + 1.0)
        window_vals = [f(pole + ti) + f(pole - ti) for ti in t]
        total += half * float(np.dot(_WINDOW_WEIGHTS, window_vals))

    if lo is None:
        total += s.cutoff * f(-s.cutoff)
    if hi is None:
        total += s.cutoff * f(s.cutoff)
    return total


def _resolve_grid(grid, label):
    if grid is None:
        return np.geomspace(0.05, 5.0, 13)
    g = np.atleast_1d(np.asarray(grid, dtype=float))
    if g.size == 0:
        raise DomainError(f"{label} must not be empty")
    if np.any(g <= 0.0):
        raise DomainError(f"{label} must be positive")
    return g


def _residual(lhs, rhs):
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)


def _require_dissipation(params: NonlocalParams):
    if params.drude.gamma <= 0.0:
        raise DomainError("transverse dispersion relations need gamma > 0")


def _require_k(k_hat):
    if k_hat < 0.0:
        raise DomainError(f"k_hat must be >= 0, got {k_hat}")


def verify_kk_real_from_imag_T(params: NonlocalParams, k_hat: float,
                               omega_grid=None, *,
                               settings: Optional[PVSettings] = None,
                               include_pole_terms: bool = True) -> KKReport:
    """Rebuild Re eps_T from Im eps_T and compare pointwise.

    Folded form: Re eps_T(omega) = 1 + (2/pi) PV int_0^inf x Im eps_T(x)
    / (x^2 - omega^2) dx - (omega_p^2/omega^2)(v_T k_hat / gamma).  The
    last piece is the second-order-pole subtraction; include_pole_terms
    = False drops it and serves as the negative control.
    """
    _require_dissipation(params)
    _require_k(k_hat)
    grid = _resolve_grid(omega_grid, "omega_grid")
    s = settings if settings is not None else _VERIFY_SETTINGS
    model = NonlocalAlt(params)
    p = params.drude
    pole_weight = p.omega_p**2 * params.v_t_ratio * k_hat / p.gamma
    hints = (p.gamma,)

    residuals = []
    for om in grid:
        def num(x, om=om):
            im = eval_real_axis(model, x, k_hat).eps_t.imag
            return x * im / (x * x - om * om)
        pv = pv_integral(num, pole=om, settings=s, lo=0.0, points=hints)
        rhs = 1.0 + (2.0 / math.pi) * pv
        if include_pole_terms:
            rhs -= pole_weight / (om * om)
        lhs = eval_real_axis(model, om, k_hat).eps_t.real
        residuals.append(_residual(lhs, rhs))
    return KKReport("t-real-from-imag", float(k_hat),
                    tuple(float(x) for x in grid), tuple(residuals),
                    max(residuals))


def verify_kk_imag_from_real_T(params: NonlocalParams, k_hat: float,
                               omega_grid=None, *,
                               settings: Optional[PVSettings] = None,
                               include_pole_terms: bool = True) -> KKReport:
    """Rebuild Im eps_T from Re eps_T and compare pointwise.

    Folded form: Im eps_T(omega) = -(2 omega/pi) PV int_0^inf [Re eps_T(x)
    + (omega_p^2/x^2)(v_T k_hat/gamma)] / (x^2 - omega^2) dx
    + 4 pi sigma_0 / omega.  The in-integrand term regularizes the
    second-order pole of Re eps_T at x = 0 and is always kept (without it
    the integral does not exist); the conductivity term is the
    first-order-pole piece that include_pole_terms = False drops for the
    negative control.
    """
    _require_dissipation(params)
    _require_k(k_hat)
    grid = _resolve_grid(omega_grid, "omega_grid")
    s = settings if settings is not None else _VERIFY_SETTINGS
    model = NonlocalAlt(params)
    p = params.drude
    pole_weight = p.omega_p**2 * params.v_t_ratio * k_hat / p.gamma
    sigma_term = FOUR_PI * static_transverse_conductivity(params, k_hat)
    hints = (p.gamma,)

    residuals = []
    for om in grid:
        def num(x, om=om):
            re = eval_real_axis(model, x, k_hat).eps_t.real
            return (re + pole_weight / (x * x)) / (x * x - om * om)
        pv = pv_integral(num, pole=om, settings=s, lo=0.0, points=hints)
        rhs = -(2.0 * om / math.pi) * pv
        if include_pole_terms:
            rhs += sigma_term / om
        lhs = eval_real_axis(model, om, k_hat).eps_t.imag
        residuals.append(_residual(lhs, rhs))
    return KKReport("t-imag-from-real", float(k_hat),
                    tuple(float(x) for x in grid), tuple(residuals),
                    max(residuals))


def verify_kk_imag_axis_T(params: NonlocalParams, k_hat: float,
                          xi_grid=None, *,
                          settings: Optional[PVSettings] = None,
                          include_pole_terms: bool = True) -> KKReport:
    """Check eps_T(i xi) against the spectral integral of Im eps_T.

    eps_T(i xi) = 1 + (2/pi) int_0^inf x Im eps_T(x)/(x^2 + xi^2) dx
    + (omega_p^2/xi^2)(v_T k_hat/gamma); no principal value is needed off
    the real axis, but the second-order-pole term survives and is again
    the include_pole_terms piece.
    """
    _require_dissipation(params)
    _require_k(k_hat)
    grid = _resolve_grid(xi_grid, "xi_grid")
    s = settings if settings is not None else _VERIFY_SETTINGS
    model = NonlocalAlt(params)
    p = params.drude
    pole_weight = p.omega_p**2 * params.v_t_ratio * k_hat / p.gamma
    hints = (p.gamma,)

    residuals = []
    for xi in grid:
        def num(x, xi=xi):
            im = eval_real_axis(model, x, k_hat).eps_t.imag
            return x * im / (x * x + xi * xi)
        integral = pv_integral(num, settings=s, lo=0.0, points=hints)
        rhs = 1.0 + (2.0 / math.pi) * integral
        if include_pole_terms:
            rhs += pole_weight / (xi * xi)
        lhs = eval_imag_axis(model, xi, k_hat).eps_t
        residuals.append(_residual(lhs, rhs))
    return KKReport("t-imag-axis", float(k_hat),
                    tuple(float(x) for x in grid), tuple(residuals),
                    max(residuals))


def verify_kk_L(params: NonlocalParams, k_hat: float,
                omega_grid=None, xi_grid=None, *,
                settings: Optional[PVSettings] = None
                ) -> Tuple[KKReport, KKReport, KKReport]:
    """Run the three insulator-form checks on the longitudinal component.

    Returns reports for real-from-imag, imag-from-real, and the
    imaginary-axis relation, in that order.  eps_L stays finite at zero
    frequency only while both damping scales are positive; if gamma or
    v_L k_hat vanishes the response degenerates to the conducting form
    whose imag-from-real relation needs a static-conductivity term the
    insulator form lacks.  That report is computed anyway and flagged in
    its note, since the failure is structural rather than numerical.
    """
    _require_k(k_hat)
    p = params.drude
    vlk = params.v_l_ratio * k_hat
    if p.gamma == 0.0 and vlk == 0.0:
        raise DomainError(
            "longitudinal response has an undamped real-axis pole when "
            "gamma = 0 and v_L k_hat = 0")
    omegas = _resolve_grid(omega_grid, "omega_grid")
    xis = _resolve_grid(xi_grid, "xi_grid")
    s = settings if settings is not None else _VERIFY_SETTINGS
    model = NonlocalAlt(params)
    hints = (p.gamma, vlk)

    res_a = []
    for om in omegas:
        def num(x, om=om):
            im = eval_real_axis(model, x, k_hat).eps_l.imag
            return x * im / (x * x - om * om)
        pv = pv_integral(num, pole=om, settings=s, lo=0.0, points=hints)
        rhs = 1.0 + (2.0 / math.pi) * pv
        lhs = eval_real_axis(model, om, k_hat).eps_l.real
        res_a.append(_residual(lhs, rhs))

    res_b = []
    for om in omegas:
        def num(x, om=om):
            re = eval_real_axis(model, x, k_hat).eps_l.real
            return re / (x * x - om * om)
        pv = pv_integral(num, pole=om, settings=s, lo=0.0, points=hints)
        rhs = -(2.0 * om / math.pi) * pv
        lhs = eval_real_axis(model, om, k_hat).eps_l.imag
        res_b.append(_residual(lhs, rhs))

    res_c = []
    for xi in xis:
        def num(x, xi=xi):
            im = eval_real_axis(model, x, k_hat).eps_l.imag
            return x * im / (x * x + xi * xi)
        integral = pv_integral(num, settings=s, lo=0.0, points=hints)
        rhs = 1.0 + (2.0 / math.pi) * integral
        lhs = eval_imag_axis(model, xi, k_hat).eps_l
        res_c.append(_residual(lhs, rhs))

    note_b = ""
    if vlk == 0.0 or p.gamma == 0.0:
        note_b = ("conducting limit: insulator-form relation omits the "
                  "static-conductivity pole and fails by construction")
    omega_t = tuple(float(x) for x in omegas)
    return (
        KKReport("l-real-from-imag", float(k_hat), omega_t,
                 tuple(res_a), max(res_a)),
        KKReport("l-imag-from-real", float(k_hat), omega_t,
                 tuple(res_b), max(res_b), note=note_b),
        KKReport("l-imag-axis", float(k_hat),
                 tuple(float(x) for x in xis), tuple(res_c), max(res_c)),
    )
