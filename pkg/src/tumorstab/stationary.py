"""Radially symmetric stationary tumor: radius, nutrient and pressure profiles.

The stationary radius R_S solves

    beta * P_0(R) / (beta + R * P_0(R)) = sigma_tilde / 3,

whose left side decreases strictly from 1/3 at R = 0 to 0, so a unique root
exists exactly when 0 < sigma_tilde < 1.  The nutrient profile is a scaled
sinh(r)/r, the pressure is an explicit quadratic-plus-nutrient expression,
and both are carried as closed-form evaluators (no discretization).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoRootError
from .special import p_ratio, p_ratio_with_derivative

_BRACKET = (1e-3, 50.0)


@dataclass(frozen=True)
class ModelParams:
    """Physical constants: vasculature strength, proliferation threshold,
    aggressiveness.  The adhesiveness constant is rescaled to 1."""

    beta: float
    sigma_tilde: float
    mu: float

    def __post_init__(self):
        if not self.beta > 0:
            raise DomainError(f"beta must be positive, got {self.beta}")
        if not 0.0 < self.sigma_tilde < 1.0:
            raise DomainError(f"sigma_tilde must lie in (0, 1), got {self.sigma_tilde}")
        if not self.mu > 0:
            raise DomainError(f"mu must be positive, got {self.mu}")


def _sinhc(r):
    """sinh(r)/r with the removable singularity at r = 0 filled in."""
    r = np.asarray(r, dtype=float)
    small = np.abs(r) < 1e-3
    rs = np.where(small, 1.0, r)
    out = np.where(small, 1.0 + r * r / 6.0 * (1.0 + r * r / 20.0), np.sinh(rs) / rs)
    return out if out.ndim else float(out)


def _dsinhc(r):
    """(r cosh r - sinh r)/r^2, the derivative of sinh(r)/r."""
    r = np.asarray(r, dtype=float)
    small = np.abs(r) < 0.1
    rs = np.where(small, 1.0, r)
    series = r / 3.0 * (1.0 + r * r / 10.0 * (1.0 + r * r / 28.0))
    out = np.where(small, series, (rs * np.cosh(rs) - np.sinh(rs)) / (rs * rs))
    return out if out.ndim else float(out)


def _d2sinhc(r):
    """Second derivative of sinh(r)/r: sinh/r - 2 cosh/r^2 + 2 sinh/r^3."""
    r = np.asarray(r, dtype=float)
    small = np.abs(r) < 0.35
    rs = np.where(small, 1.0, r)
    # sum_k r^{2k} [1/(2k+1)! + 2/(2k+3)! - 2/(2k+2)!]
    coeff = [
        1.0 / math.factorial(2 * k + 1)
        + 2.0 / math.factorial(2 * k + 3)
        - 2.0 / math.factorial(2 * k + 2)
        for k in range(8)
    ]
    series = sum(c * r ** (2 * k) for k, c in enumerate(coeff))
    direct = np.sinh(rs) / rs - 2.0 * np.cosh(rs) / rs**2 + 2.0 * np.sinh(rs) / rs**3
    out = np.where(small, series, direct)
    return out if out.ndim else float(out)


def _radius_residual(R: float, beta: float, sigma_tilde: float) -> float:
    p0 = p_ratio(0, R * R)
    return beta * p0 / (beta + R * p0) - sigma_tilde / 3.0


def _radius_residual_prime(R: float, beta: float) -> float:
    p0, dp0_du = p_ratio_with_derivative(0, complex(R * R))
    p0 = p0.real
    p0_prime = 2.0 * R * dp0_du.real
    return beta * (beta * p0_prime - p0 * p0) / (beta + R * p0) ** 2


def solve_radius(params: ModelParams) -> float:
    """Stationary radius: bracketed bisection plus two Newton polish steps.

    The residual is strictly decreasing in R, so the sign change found by
    bracketing is the unique root.
    """
    beta, sig = params.beta, params.sigma_tilde
    lo, hi = _BRACKET
    f_lo = _radius_residual(lo, beta, sig)
    f_hi = _radius_residual(hi, beta, sig)
    for _ in range(60):
        if f_lo > 0.0 and f_hi < 0.0:
            break
        if f_lo <= 0.0:
            lo *= 0.5
            f_lo = _radius_residual(lo, beta, sig)
        if f_hi >= 0.0:
            hi *= 2.0
            f_hi = _radius_residual(hi, beta, sig)
    else:
        raise NoRootError(f"no bracket for the radius equation with beta={beta}, sigma_tilde={sig}")

    while hi - lo > 1e-13 * hi:
        mid = 0.5 * (lo + hi)
        if _radius_residual(mid, beta, sig) > 0.0:
            lo = mid
        else:
            hi = mid
    R = 0.5 * (lo + hi)
    for _ in range(2):
        R = R - _radius_residual(R, beta, sig) / _radius_residual_prime(R, beta)
    return R


@dataclass(frozen=True)
class StationaryProfile:
    """Stationary solution at given parameters.

    ``sigma(r)``/``sigma_prime(r)`` are mu-independent; the pressure family
    depends on mu through the proliferation source.  ``lam`` is the boundary
    combination sigma''(R) + beta sigma'(R) that drives the linearized
    nutrient flux, and ``c1`` the pressure integration constant.
    """

    params: ModelParams
    R: float
    c1: float
    lam: float
    p0: float
    p1: float
    sigma_scale: float  # sigma_S(r) = sigma_scale * sinh(r)/r

    @classmethod
    def build(cls, params: ModelParams) -> "StationaryProfile":
        R = solve_radius(params)
        return cls._from_radius(params, R)

    @classmethod
    def _from_radius(cls, params: ModelParams, R: float) -> "StationaryProfile":
        beta, sig, mu = params.beta, params.sigma_tilde, params.mu
        p0 = p_ratio(0, R * R)
        p1 = p_ratio(1, R * R)
        boundary = beta / (beta + R * p0)
        sigma_scale = boundary * R / math.sinh(R)
        c1 = 1.0 / R + mu * boundary - mu * sig * R * R / 6.0
        lam = (beta * p0 / (beta + R * p0)) * (R * R * p1 + 1.0 + beta * R)
        return cls(params, R, c1, lam, p0, p1, sigma_scale)

    # -- nutrient ------------------------------------------------------


    def sigma(self, r):
        return self.sigma_scale * _sinhc(r)

    def sigma_prime(self, r):
        return self.sigma_scale * _dsinhc(r)

    def sigma_second(self, r):
        return self.sigma_scale * _d2sinhc(r)

    # -- pressure ------------------------------------------------------

    def pressure(self, r):
        mu, sig = self.params.mu, self.params.sigma_tilde
        return -mu * self.sigma(r) + mu * sig * np.asarray(r, dtype=float) ** 2 / 6.0 + self.c1

    def pressure_prime(self, r):
        mu, sig = self.params.mu, self.params.sigma_tilde
        return -mu * self.sigma_prime(r) + mu * sig * np.asarray(r, dtype=float) / 3.0

    def pressure_second(self, r):
        mu, sig = self.params.mu, self.params.sigma_tilde
        return -mu * self.sigma_second(r) + mu * sig / 3.0

    def pressure_second_boundary(self) -> float:
        """p_S''(R_S) in its reduced closed form."""
        mu, sig, beta = self.params.mu, self.params.sigma_tilde, self.params.beta
        return -mu * (beta / (beta + self.R * self.p0) - sig)


def build_profile(params: ModelParams) -> StationaryProfile:
    """Solve the radius equation and assemble the stationary profile."""
    return StationaryProfile.build(params)


def residual_check(profile: StationaryProfile, params: ModelParams, grid_size: int = 64) -> dict:
    """Max residuals of the stationary equations on an r-grid.

    The profiles are closed-form, so the residuals measure roundoff of the
    evaluators, not discretization; they do not shrink (or grow) with
    ``grid_size``.
    """
    if grid_size < 16:
        raise DomainError(f"grid_size must be >= 16, got {grid_size}")
    r = np.linspace(profile.R / grid_size, profile.R * (1.0 - 1e-12), grid_size)
    sig = profile.sigma(r)
    nutrient = profile.sigma_second(r) + 2.0 / r * profile.sigma_prime(r) - sig
    pressure = (
        profile.pressure_second(r)
        + 2.0 / r * profile.pressure_prime(r)
        + params.mu * (sig - params.sigma_tilde)
    )
    return {
        "nutrient_max_residual": float(np.max(np.abs(nutrient))),
        "pressure_max_residual": float(np.max(np.abs(pressure))),
        "robin_residual": float(
            abs(profile.sigma_prime(profile.R) + params.beta * (profile.sigma(profile.R) - 1.0))
        ),
        "curvature_residual": float(abs(profile.pressure(profile.R) - 1.0 / profile.R)),
    }
