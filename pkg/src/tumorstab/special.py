"""Half-integer modified Bessel functions and the ratio family they generate.

The stationary tumor profile and the dispersion function are built from
``I_{n+1/2}`` and from the meromorphic ratio

    p_ratio(n, u) = I_{n+3/2}(xi) / (xi * I_{n+1/2}(xi)),   u = xi**2,

which has simple poles at ``u = -j_{n+1/2,m}**2`` (squares of the positive
zeros of the Bessel function J_{n+1/2}).  ``p_ratio`` accepts complex ``u``
so the dispersion function can be evaluated at complex growth exponents.

Everything here is pure and reentrant; the cached zero tables are replaced
atomically and never mutated in place.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import spherical_jn

from .errors import DomainError, PoleProximityError

# Order index for the half-integer family: the actual order is n + 1/2.
BesselOrder = int

_RESCALE = 1e280
_CF_TOL = 1e-13
_CF_MAX_DEPTH = 1 << 17
POLE_DISTANCE_FLOOR = 1e-8


def _i_half_scaled(x: float) -> float:
    # e^{-x} I_{1/2}(x) = sqrt(2/(pi x)) * (1 - e^{-2x}) / 2
    return math.sqrt(2.0 / (math.pi * x)) * 0.5 * (-math.expm1(-2.0 * x))


def _i_three_half_scaled(x: float) -> float:
    # e^{-x} I_{3/2}(x) = sqrt(2/(pi x)) * ((1 - 1/x) + e^{-2x} (1 + 1/x)) / 2
    if x < 0.02:
        return math.exp(-x) * _i_half_series(1, x)
    return math.sqrt(2.0 / (math.pi * x)) * 0.5 * (
        (1.0 - 1.0 / x) + math.exp(-2.0 * x) * (1.0 + 1.0 / x)
    )


def _i_half_series(n: int, x: float) -> float:
    """Ascending series for I_{n+1/2}(x); accurate for small x."""
    nu = n + 0.5
    half = 0.5 * x
    term = half**nu / math.gamma(nu + 1.0)
    total = term
    k = 0
    while True:
        k += 1
        term *= half * half / (k * (k + nu))
        total += term
        if term < 1e-18 * total or k > 200:
            return total


def bessel_i_half(n: BesselOrder, x: float, scaled: bool = False) -> float:
    """Modified Bessel function I_{n+1/2}(x) for x > 0.

    With ``scaled=True`` returns ``e^{-x} I_{n+1/2}(x)``, which stays inside
    double range on the whole working domain (the plain value overflows for
    x above ~710; there the scaled variant is the stable representation).

    Orders 1/2 and 3/2 use their elementary closed forms; higher orders use
    backward recurrence normalized at order 1/2, which is stable in n
    (forward recurrence in increasing order is not).
    """
    if n < 0:
        raise DomainError(f"order index must be >= 0, got {n}")
    if not x > 0.0:
        raise DomainError(f"argument must be positive, got {x}")

    if x < 0.5 + 0.02 * n:
        # small arguments: the ascending series converges fast and avoids
        # the long backward sweep
        val = _i_half_series(n, x)
        return val * math.exp(-x) if scaled else val

    if n == 0:
        s = _i_half_scaled(x)
        return s if scaled else s * math.exp(x)
    if n == 1:
        s = _i_three_half_scaled(x)
        return s if scaled else s * math.exp(x)

    extra = 24
    prev_ratio = None
    ratio = 0.0
    while True:
        m_top = max(n, int(math.ceil(x))) + extra
        y_hi = 0.0  # order m_top + 1 (arbitrary seed)
        y_lo = 1.0  # order m_top
        rescales = 0
        y_n = 0.0
        rescales_at_n = 0
        for k in range(m_top, 0, -1):
            nu = k + 0.5
            y_hi, y_lo = y_lo, y_hi + (2.0 * nu / x) * y_lo
            # y_lo now holds order k - 1, y_hi holds order k
            if abs(y_lo) > _RESCALE:
                y_lo /= _RESCALE
                y_hi /= _RESCALE
                rescales += 1
            if k - 1 == n:
                y_n = y_lo
                rescales_at_n = rescales
        # after the loop y_lo holds order 0 (actual order 1/2)
        ratio = (y_n / y_lo) * _RESCALE ** (rescales_at_n - rescales)
        if prev_ratio is not None and abs(ratio - prev_ratio) <= 1e-15 * abs(ratio):
            break
        if extra > 4096:
            break
        prev_ratio = ratio
        extra *= 2

    scaled_val = _i_half_scaled(x) * ratio
    return scaled_val if scaled else scaled_val * math.exp(x)


def _mcmahon_guess(nu: float, m: np.ndarray) -> np.ndarray:
    b = (m + 0.5 * nu - 0.25) * math.pi
    mu = 4.0 * nu * nu
    return b - (mu - 1.0) / (8.0 * b) - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * (8.0 * b) ** 3)


_zero_cache: dict[int, np.ndarray] = {}


def bessel_j_half_zeros(n: BesselOrder, count: int) -> np.ndarray:
    """First ``count`` positive zeros j_{n+1/2,m} of J_{n+1/2} (= zeros of j_n).

    Low zeros are bracketed by a sign scan of the spherical Bessel function
    (asymptotic starting guesses are poor near the turning point at high
    order); the rest start from McMahon's expansion.  All are polished by
    Newton iterations on j_n.
    """
    if n < 0:
        raise DomainError(f"order index must be >= 0, got {n}")
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    cached = _zero_cache.get(n)
    if cached is not None and len(cached) >= count:
        return cached[:count]

    nu = n + 0.5
    m_scan = min(count, n + 8)
    zeros: list[float] = []

    # the first zeros live between nu and nu + O(nu^{1/3}) + pi * m_scan
    hi = nu + 3.0 * max(1.0, nu ** (1.0 / 3.0)) + math.pi * (m_scan + 2)
    grid = np.arange(nu, hi, 0.5)
    vals = spherical_jn(n, grid)
    sign_flip = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    for idx in sign_flip[:m_scan]:
        zeros.append(_bisect_newton_jn(n, float(grid[idx]), float(grid[idx + 1])))

    if count > len(zeros):
        m = np.arange(len(zeros) + 1, count + 1, dtype=float)
        x = _mcmahon_guess(nu, m)
        for _ in range(6):
            f = spherical_jn(n, x)
            fp = spherical_jn(n, x, derivative=True)
            x = x - f / fp
        zeros.extend(x.tolist())

    out = np.array(zeros[:count])
    if np.any(np.diff(out) <= 0):
        raise DomainError(f"zero table for order {n}+1/2 is not increasing")
    _zero_cache[n] = out
    return out


def _bisect_newton_jn(n: int, a: float, b: float) -> float:
    fa = spherical_jn(n, a)
    for _ in range(60):
        mid = 0.5 * (a + b)
        fm = spherical_jn(n, mid)
        if fa * fm <= 0:
            b = mid
        else:
            a, fa = mid, fm
        if b - a < 1e-9:
            break
    x = 0.5 * (a + b)
    for _ in range(4):
        x = x - spherical_jn(n, x) / spherical_jn(n, x, derivative=True)
    return x


def _pole_check(n: int, u: np.ndarray) -> None:
    near_axis = np.abs(u.imag) < POLE_DISTANCE_FLOOR
    if not np.any(near_axis):
        return
    re = u.real[near_axis]
    im = u.imag[near_axis]
    if not np.any(re < 0):
        return
    max_j2 = float(np.max(-re))
    count = 8
    while True:
        zeros = bessel_j_half_zeros(n, count)
        if zeros[-1] ** 2 > max_j2 + 1.0:
            break
        count *= 2
    j2 = zeros**2
    dist = np.abs((re[:, None] + j2[None, :]) + 1j * im[:, None])
    k = np.argmin(dist, axis=1)
    dmin = dist[np.arange(len(re)), k]
    bad = np.nonzero(dmin < POLE_DISTANCE_FLOOR)[0]
    if len(bad):
        i = int(bad[0])
        raise PoleProximityError(
            f"u={re[i] + 1j * im[i]} is within {dmin[i]:.3e} of pole -j_({n}+1/2,{k[i] + 1})^2",
            index=int(k[i]) + 1,
            distance=float(dmin[i]),
        )


def _cf_sweep(n: int, u: np.ndarray, depth: int, with_derivative: bool):
    """One downward sweep of the continued fraction from the given depth."""
    val = np.full_like(u, 1.0 / (2.0 * depth + 3.0))
    der = np.zeros_like(u) if with_derivative else None
    for k in range(depth - 1, n - 1, -1):
        denom = u * val + (2.0 * k + 3.0)
        new = 1.0 / denom
        if with_derivative:
            der = -(val + u * der) * new * new
        val = new
        big = np.abs(val) > 1e150
        if np.any(big):
            # passing through a pole of an intermediate ratio; clip the
            # magnitude, the next division restores the correct scale
            val = np.where(big, val / np.abs(val) * 1e150, val)
    return val, der


def _p_ratio_impl(n: int, u: np.ndarray, with_derivative: bool):
    depth = n + int(math.ceil(math.sqrt(float(np.max(np.abs(u))) + 1.0))) + 30
    val, der = _cf_sweep(n, u, depth, with_derivative)
    while True:
        depth *= 2
        if depth > _CF_MAX_DEPTH:
            raise DomainError("continued fraction did not converge (depth cap reached)")
        val2, der2 = _cf_sweep(n, u, depth, with_derivative)
        tol = _CF_TOL * np.maximum(1.0, np.abs(val2))
        if np.all(np.abs(val2 - val) <= tol):
            return val2, der2
        val, der = val2, der2


def p_ratio(n: BesselOrder, u):
    """Bessel ratio P_n as a function of the squared argument u = xi**2.

    Evaluated by the downward continued fraction
    ``P_k = 1 / (u P_{k+1} + (2k + 3))`` seeded at an adaptively chosen
    start depth, which is the numerically stable direction.  Equals the pole
    expansion ``2 sum_m 1/(u + j_{n+1/2,m}^2)``.

    Raises :class:`PoleProximityError` when ``u`` is within 1e-8 of a pole;
    below that distance the continued fraction has no correct digits left.
    """
    if n < 0:
        raise DomainError(f"order index must be >= 0, got {n}")
    arr = np.asarray(u, dtype=complex)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    _pole_check(n, arr)
    val, _ = _p_ratio_impl(n, arr, with_derivative=False)
    if scalar:
        v = complex(val[0])
        return v.real if isinstance(u, (int, float)) else v
    return val


def p_ratio_with_derivative(n: BesselOrder, u):
    """(P_n(u), dP_n/du) by propagating the derivative down the fraction."""
    if n < 0:
        raise DomainError(f"order index must be >= 0, got {n}")
    arr = np.asarray(u, dtype=complex)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    _pole_check(n, arr)
    val, der = _p_ratio_impl(n, arr, with_derivative=True)
    if scalar:
        return complex(val[0]), complex(der[0])
    return val, der


def p1_prime(R: float) -> float:
    """d/dxi of P_1 at xi = R (derivative in the argument, not in u).

    For moderate R this is the closed form
    ``(R^2 P_0 + 1 + 6 P_0 - 1/P_0) / (R^3 P_0)``; its numerator is O(R^4)
    built from O(1) terms, so below R = 0.5 the cancellation is avoided by
    differentiating the continued fraction instead (P_1'(xi) = 2 xi dP_1/du).
    """
    if not R > 0.0:
        raise DomainError(f"radius must be positive, got {R}")
    if R < 0.5:
        _, d = p_ratio_with_derivative(1, complex(R * R))
        return 2.0 * R * d.real
    p0 = p_ratio(0, R * R)
    return (R * R * p0 + 1.0 + 6.0 * p0 - 1.0 / p0) / (R**3 * p0)
