"""Reflection amplitudes for all response models.

Four routes to the same physics live here:

* Fresnel amplitudes for local (k-independent) permittivities,
* the closed-form amplitudes for transverse/longitudinal pairs,
* surface impedances, both in closed form (valid when the permittivities
  do not depend on the normal wavevector component) and as the defining
  k_z integrals evaluated numerically,
* analytic zero-frequency limits per model, used for the l = 0 term of
  the pressure sum, where naive permittivity evaluation is a 0/0 mess.

On the imaginary axis all quantities are real; on the real axis they are
complex and the square-root branch is fixed by demanding a transmitted
wave that decays into the metal (Im root >= 0).

Everything accepts numpy arrays in the k_hat slot and broadcasts.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .response import (Drude, EpsPair, NonlocalAlt, PerfectReflector, Plasma,
                       ResponseModel, WithCore, eval_imag_axis, eval_real_axis)


class ReflectionPair(NamedTuple):
    r_tm: complex
    r_te: complex


class ImpedancePair(NamedTuple):
    z_tm: complex
    z_te: complex


def q_hat(xi, k_hat):
    """Vacuum decay wavenumber sqrt(k_hat^2 + xi^2), as an energy in eV."""
    return np.sqrt(k_hat * k_hat + xi * xi)


def fresnel(eps, xi, k_hat):
    """Fresnel amplitudes for a local permittivity at imaginary frequency."""
    if np.any(np.asarray(xi) <= 0.0):
        raise DomainError("fresnel needs xi > 0; use zero_freq_limit at xi = 0")
    q = q_hat(xi, k_hat)
    k_inside = np.sqrt(k_hat * k_hat + eps * xi * xi)
    r_tm = (eps * q - k_inside) / (eps * q + k_inside)
    r_te = (q - k_inside) / (q + k_inside)
    return ReflectionPair(r_tm, r_te)


def nonlocal_coeffs(eps: EpsPair, xi, k_hat):
    """Amplitudes for a transverse/longitudinal permittivity pair.

    The TM amplitude carries a correction proportional to eps_t - eps_l
    which vanishes identically for a k-independent response, collapsing
    both amplitudes to the Fresnel forms bit for bit.
    """
    if np.any(np.asarray(xi) <= 0.0):
        raise DomainError("nonlocal_coeffs needs xi > 0")
    if np.any(eps.eps_l == 0.0):
        raise DomainError("eps_l = 0 makes the TM coefficient singular")
    q = q_hat(xi, k_hat)
    k_t = np.sqrt(k_hat * k_hat + eps.eps_t * xi * xi)
    corr = k_hat * (eps.eps_t - eps.eps_l) / eps.eps_l
    r_tm = (eps.eps_t * q - k_t - corr) / (eps.eps_t * q + k_t + corr)
    r_te = (q - k_t) / (q + k_t)
    return ReflectionPair(r_tm, r_te)


def impedance_closed(eps: EpsPair, xi, k_hat):
    """Surface impedances when the permittivities carry no k_z dependence."""
    if xi <= 0.0:
        raise DomainError("impedance_closed needs xi > 0")
    k_t = np.sqrt(k_hat * k_hat + eps.eps_t * xi * xi)
    z_tm = (k_hat / eps.eps_l + (k_t - k_hat) / eps.eps_t) / xi
    z_te = xi / k_t
    return ImpedancePair(z_tm, z_te)


def coeffs_from_impedance(z: ImpedancePair, xi, k_hat):
    """Reflection amplitudes from surface impedances.

    The TE denominator uses z_te, as symmetry with the TM line and the
    local limit both require.
    """
    q = q_hat(xi, k_hat)
    r_tm = (q - xi * z.z_tm) / (q + xi * z.z_tm)
    r_te = (q * z.z_te - xi) / (q * z.z_te + xi)
    return ReflectionPair(r_tm, r_te)


def impedance_numeric(eps_of_k, xi, k_hat, tol=1e-8, max_doublings=12):
    """Surface impedances from their defining k_z integrals.

    eps_of_k(xi, k_perp_hat, k_z_hat) -> EpsPair may depend on the full
    wavevector.  Both integrands fall off as 1/k_z^2, so the integration
    window (-K, K) is grown geometrically, with the truncated tails
    estimated from boundary samples, until the impedances settle to the
    requested relative tolerance.

    Raises ConvergenceError carrying the last estimate if doubling the
    window stops changing nothing fast enough.
    """
    from scipy.integrate import quad

    from .errors import ConvergenceError

    if xi <= 0.0:
        raise DomainError("impedance_numeric needs xi > 0")
    if tol <= 0.0:
        raise DomainError("tol must be positive")

    xi2 = xi * xi
    kp2 = k_hat * k_hat

    def tm_integrand(kz):
        pair = eps_of_k(xi, k_hat, kz)
        k2 = kp2 + kz * kz
        k_t2 = kp2 + pair.eps_t * xi2
        return (kp2 / (xi2 * pair.eps_l) + kz * kz / (k_t2 + kz * kz)) / k2

    def te_integrand(kz):
        pair = eps_of_k(xi, k_hat, kz)
        k_t2 = kp2 + pair.eps_t * xi2
        return 1.0 / (k_t2 + kz * kz)

    probe = eps_of_k(xi, k_hat, 0.0)
    k_t0 = math.sqrt(abs(kp2 + probe.eps_t * xi2))
    scale = max(k_t0, k_hat, xi)
    hints = sorted({-k_t0, 0.0, k_t0})

    def one_window(f, window):
        value, _ = quad(f, -window, window, points=hints,
                        epsabs=0.0, epsrel=min(tol / 4.0, 1e-7), limit=300)
        # 1/k_z^2 tail on both sides, constants sampled at the boundary
        tail = window * (f(window) + f(-window))
        return (xi / math.pi) * (value + tail)

    window = 32.0 * scale
    prev = None
    for _ in range(max_doublings):
        pair = ImpedancePair(one_window(tm_integrand, window),
                             one_window(te_integrand, window))
        if prev is not None:
            ok_tm = abs(pair.z_tm - prev.z_tm) <= tol * abs(pair.z_tm)
            ok_te = abs(pair.z_te - prev.z_te) <= tol * abs(pair.z_te)
            if ok_tm and ok_te:
                return pair
        prev = pair
        window *= 2.0
    raise ConvergenceError(
        f"impedance integrals did not settle to {tol} after "
        f"{max_doublings} window doublings (xi={xi}, k_hat={k_hat})",
        last_estimate=prev)


def zero_freq_limit(model: ResponseModel, k_hat):
    """Reflection amplitudes in the static limit, per model, analytically.

    These are 0/0 limits of the finite-frequency formulas; evaluating them
    analytically keeps the l = 0 pressure term free of catastrophic
    cancellation.  This is also where the models differ most: the local
    dissipative response loses its TE reflection entirely, the plasma
    response keeps it, and the nonlocal response retains a small TE
    amplitude controlled by v_T while its TM amplitude dips below unity
    through v_L.
    """
    if np.any(k_hat <= 0.0):
        raise DomainError("zero_freq_limit needs k_hat > 0")

    if isinstance(model, PerfectReflector):
        return ReflectionPair(1.0, -1.0)
    if isinstance(model, Drude):
        return ReflectionPair(1.0, 0.0)
    if isinstance(model, Plasma):
        root = np.sqrt(k_hat * k_hat + model.omega_p**2)
        return ReflectionPair(1.0, (k_hat - root) / (k_hat + root))
    if isinstance(model, NonlocalAlt):
        return _zero_freq_nonlocal(model, k_hat, core_static=1.0)
    if isinstance(model, WithCore):
        inner = model.inner
        if isinstance(inner, NonlocalAlt):
            # A finite core shifts the static longitudinal permittivity,
            # which feeds the TM limit; TE is core-blind (core*xi^2 -> 0).
            static = float(model.core.core_values[0])
            return _zero_freq_nonlocal(inner, k_hat, core_static=static)
        return zero_freq_limit(inner, k_hat)
    raise TypeError(f"unknown response model {model!r}")


def _zero_freq_nonlocal(model: NonlocalAlt, k_hat, core_static):
    p = model.params
    g = p.drude.gamma
    wp2 = p.drude.omega_p**2
    if g == 0.0:
        raise DomainError(
            "static limit of the nonlocal response needs gamma > 0")
    # TM from the static longitudinal permittivity e0 = core + wp^2/(g vL k):
    # r_TM = (e0 - 1)/(e0 + 1), regular also at vL = 0 where e0 diverges.
    vlk = p.v_l_ratio * k_hat * g
    r_tm = (wp2 + vlk * (core_static - 1.0)) / (wp2 + vlk * (core_static + 1.0))
    root = np.sqrt(k_hat * k_hat + wp2 * p.v_t_ratio * k_hat / g)
    r_te = (k_hat - root) / (k_hat + root)
    return ReflectionPair(r_tm, r_te)


def reflection_pair(model: ResponseModel, xi, k_hat):
    """Amplitudes for any model at imaginary frequency xi > 0."""
    if isinstance(model, PerfectReflector):
        return ReflectionPair(1.0, -1.0)
    return nonlocal_coeffs(eval_imag_axis(model, xi, k_hat), xi, k_hat)


def _decaying_root(z):
    root = np.sqrt(np.asarray(z, dtype=complex))
    return np.where(root.imag < 0.0, -root, root)


def real_axis_coeffs(model: ResponseModel, omega, theta):
    """On-shell complex amplitudes at real frequency and incidence angle.

    The transverse wavevector is fixed by the mass shell, k_hat =
    omega*sin(theta).  At theta = 0 the two amplitudes obey r_tm = -r_te,
    so the reflectances coincide.
    """
    if not 0.0 <= theta < math.pi / 2.0:
        raise DomainError(f"theta must lie in [0, pi/2), got {theta}")
    if isinstance(model, PerfectReflector):
        return ReflectionPair(complex(1.0), complex(-1.0))
    st = math.sin(theta)
    ct = math.cos(theta)
    pair = eval_real_axis(model, omega, omega * st)
    root = complex(_decaying_root(pair.eps_t - st * st))
    corr = 1j * st * (pair.eps_t - pair.eps_l) / pair.eps_l
    r_tm = (pair.eps_t * ct - root - corr) / (pair.eps_t * ct + root + corr)
    r_te = (ct - root) / (ct + root)
    return ReflectionPair(r_tm, r_te)


class ReflectanceDeviation(NamedTuple):
    reflectance_tm: float
    reflectance_te: float
    deviation_tm: float
    deviation_te: float


def reflectance_deviation(model_nl: ResponseModel, model_loc: ResponseModel,
                          omega, theta):
    """Reflectances of model_nl and their relative deviations from model_loc."""
    r_nl = real_axis_coeffs(model_nl, omega, theta)
    r_loc = real_axis_coeffs(model_loc, omega, theta)
    big_tm = abs(r_nl.r_tm) ** 2
    big_te = abs(r_nl.r_te) ** 2
    ref_tm = abs(r_loc.r_tm) ** 2
    ref_te = abs(r_loc.r_te) ** 2
    if ref_tm == 0.0 or ref_te == 0.0:
        raise DomainError("reference reflectance vanishes; deviation undefined")
    return ReflectanceDeviation(big_tm, big_te,
                                (big_tm - ref_tm) / ref_tm,
                                (big_te - ref_te) / ref_te)
