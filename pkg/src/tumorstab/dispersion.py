"""Dispersion function of the linearized problem and its spectral quantities.

For mode index n the growth exponents of the linearized free-boundary
evolution are the complex zeros of

    h_n(s) = (1/mu) * A * [s + c_n] - R P_1(R)
             + (R^2 P_1(R) + 1 + beta R) * Pn / ((s+1) R Pn + n/R + beta),

where A = (beta + R P_0)/(beta R P_0), c_n = (n/R^3)(n(n+1)/2 - 1) and
Pn = p_ratio(n, (s+1) R^2).  The rational last term is the analytic
continuation of 1/((s+1)R + (n/R + beta)/P_n); written this way it stays
finite across the poles of the ratio itself.

Useful structure used throughout:

* h_n(conj s) = conj h_n(s): zeros come in conjugate pairs.
* Poles of h_n are the zeros of phi_n(s) = (s+1) R Pn + n/R + beta, all of
  which satisfy Re s <= -1 (for Re s > -1 the real part of (s+1) Pn is
  strictly positive).  Searches right of Re s = -1 are therefore pole-free.
* For Re s >= 0, |Pn| <= 1/(2n+3) and |phi_n| >= (n + beta R)/R, which gives
  an explicit enclosure radius for right-half-plane zeros and, for large n,
  a certificate that none exist.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, UnresolvedRegionError
from .rootfind import (
    Rectangle,
    WindingError,
    find_roots_region,
    newton_polish,
    scan_real_roots,
    winding_number,
)
from .special import bessel_j_half_zeros, p_ratio, p1_prime
from .stationary import ModelParams, solve_radius

_AXIS_LIFT = 1e-6  # winding cells start this far above the real axis
_RESIDUAL_TOL = 1e-9
_RESOLUTION_FLOOR = 1e-7


@dataclass(frozen=True)
class DispersionContext:
    """Mode index, parameters and stationary radius with cached constants."""

    n: int
    params: ModelParams
    R: float
    p0: float = field(init=False)
    p1: float = field(init=False)
    prefactor: float = field(init=False)  # A
    drift: float = field(init=False)  # c_n
    numerator: float = field(init=False)  # R^2 P_1 + 1 + beta R
    flux: float = field(init=False)  # n/R + beta

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"mode index must be >= 0, got {self.n}")
        if not self.R > 0:
            raise DomainError(f"radius must be positive, got {self.R}")
        R, beta, n = self.R, self.params.beta, self.n
        p0 = float(p_ratio(0, R * R))
        p1 = float(p_ratio(1, R * R))
        object.__setattr__(self, "p0", p0)
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "prefactor", (beta + R * p0) / (beta * R * p0))
        object.__setattr__(self, "drift", n / R**3 * (n * (n + 1) / 2.0 - 1.0))
        object.__setattr__(self, "numerator", R * R * p1 + 1.0 + beta * R)
        object.__setattr__(self, "flux", n / R + beta)

    @classmethod
    def from_params(cls, n: int, params: ModelParams) -> "DispersionContext":
        return cls(n, params, solve_radius(params))

    # -- evaluation ----------------------------------------------------

    def ratio_term(self, s):
        """The last term of h_n (vectorized over complex s)."""
        s = np.asarray(s, dtype=complex)
        u = (s + 1.0) * self.R * self.R
        pn = p_ratio(self.n, u)
        return self.numerator * pn / ((s + 1.0) * self.R * pn + self.flux)

    def h(self, s):
        """Dispersion function h_n(s); accepts scalars or arrays."""
        arr = np.asarray(s, dtype=complex)
        scalar = arr.ndim == 0
        arr = np.atleast_1d(arr)
        val = (
            self.prefactor / self.params.mu * (arr + self.drift)
            - self.R * self.p1
            + self.ratio_term(arr)
        )
        return complex(val[0]) if scalar else val

    def phi(self, s):
        """Denominator function phi_n(s); its zeros are the poles of h_n."""
        arr = np.atleast_1d(np.asarray(s, dtype=complex))
        u = (arr + 1.0) * self.R * self.R
        pn = p_ratio(self.n, u)
        val = (arr + 1.0) * self.R * pn + self.flux
        return complex(val[0]) if np.asarray(s).ndim == 0 else val

    def rhp_enclosure_radius(self) -> float:
        """All zeros with Re s >= 0 satisfy |s| <= this bound."""
        n, R, beta = self.n, self.R, self.params.beta
        frac_bound = self.numerator * R / ((2 * n + 3) * (n + beta * R))
        return self.drift + self.params.mu / self.prefactor * (R * self.p1 + frac_bound) + 1.0


def h_eval(ctx: DispersionContext, s):
    """Evaluate the dispersion function (module-level veneer over ctx.h)."""
    return ctx.h(s)


def mu_bifurcation(n: int, R: float, beta: float) -> float:
    """Aggressiveness at which mode n acquires a neutral (s = 0) exponent.

    For n >= 2 this is the closed form whose denominator
    ``(n + beta R) P_1 - (1 + beta R) P_n`` must be positive; the threshold
    concentration is recovered from R through the stationary radius
    relation.  n = 1 uses its own closed form (the translation mode has
    s = 0 as an exponent for every mu; mu_1 is where it degenerates).
    """
    if n < 1:
        raise DomainError(f"mode index must be >= 1, got {n}")
    if not (R > 0 and beta > 0):
        raise DomainError("R and beta must be positive")
    p0 = float(p_ratio(0, R * R))
    p1 = float(p_ratio(1, R * R))
    if n == 1:
        denom = R * p1 * p1 - 0.5 * (1.0 + beta * R) * p1_prime(R)
        return (
            (beta + R * p0)
            / (beta * R**3 * p0)
            * (R * R * p1 + 1.0 + beta * R)
            / denom
        )
    pn = float(p_ratio(n, R * R))
    sigma_tilde = 3.0 * beta * p0 / (beta + R * p0)
    denom = (n + beta * R) * p1 - (1.0 + beta * R) * pn
    if denom <= 0.0:
        raise DomainError(f"nonpositive bifurcation denominator {denom} at n={n}, R={R}")
    return (
        3.0 * n * (n - 1.0) * (n + 2.0)
        / (2.0 * sigma_tilde * R**4)
        * (n / R + beta + R * pn)
        / denom
    )


@dataclass
class RootSet:
    """Zeros of h_n located in a rectangular search region."""

    region: Rectangle
    roots: list[tuple[complex, float]]  # (root, |h(root)|)
    pole_count: int = 0

    def __post_init__(self):
        for z, resid in self.roots:
            if resid > _RESIDUAL_TOL:
                raise UnresolvedRegionError(
                    f"root {z} has residual {resid:.2e} above {_RESIDUAL_TOL}",
                    self.region.as_tuple(),
                )

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def dominant(self) -> complex | None:
        """Member with maximal real part; conjugate ties resolve to the
        smaller |Im| (and then to the non-negative imaginary part)."""
        if not self.roots:
            return None
        return max(
            (z for z, _ in self.roots),
            key=lambda z: (z.real, -abs(z.imag), z.imag),
        )

    def dominant_pair(self) -> list[complex]:
        """All roots sharing the maximal real part (conjugate partners)."""
        if not self.roots:
            return []
        top = max(z.real for z, _ in self.roots)
        return [z for z, _ in self.roots if abs(z.real - top) <= 1e-12 * max(1.0, abs(top))]


def _pole_ladder_points(ctx: DispersionContext, re_min: float) -> np.ndarray:
    """Real points where the Bessel ratio itself blows up, down to re_min."""
    if re_min >= -1.0:
        return np.empty(0)
    R = ctx.R
    j_max = R * math.sqrt(abs(re_min) + 1.0) + 1.0
    count = 8
    while True:
        zeros = bessel_j_half_zeros(ctx.n, count)
        if zeros[-1] > j_max:
            break
        count *= 2
    zeros = zeros[zeros <= j_max]
    return -1.0 - (zeros / R) ** 2


def _segment_grid(a: float, b: float) -> int:
    width = b - a
    return int(min(4097, max(129, 16 * width + 65)))


def _real_axis_analysis(ctx: DispersionContext, re_min: float, re_max: float):
    """Real roots and real poles of h_n on [re_min, re_max].

    The ratio's own singular points split the axis into segments; inside
    each, zeros of phi_n (the actual poles of h_n) are located first, and
    h_n is then scanned for sign changes between them.
    """
    inset = max(1e-6, 2e-8 / ctx.R**2)
    ladder = _pole_ladder_points(ctx, re_min)
    cuts = sorted(float(t) for t in ladder if re_min < t < re_max)

    def segments(points, lo, hi, gap):
        segs = []
        left = lo
        for p in points:
            if p - gap > left:
                segs.append((left, p - gap))
            left = p + gap
        if hi > left:
            segs.append((left, hi))
        return segs

    poles: list[float] = []
    if re_min < -1.0:
        for a, b in segments(cuts, re_min, min(re_max, -1.0 - inset), inset):
            vals = scan_real_roots(
                lambda x: np.real(ctx.phi(x + 0.0j)), a, b, _segment_grid(a, b)
            )
            poles.extend(p for p, _ in vals)
    pole_cuts = sorted(set(cuts + poles))

    roots: list[tuple[float, float]] = []
    for a, b in segments(pole_cuts, re_min, re_max, inset):
        for x, _ in scan_real_roots(lambda t: np.real(ctx.h(t + 0.0j)), a, b, _segment_grid(a, b)):
            z, resid = newton_polish(ctx.h, complex(x), fd_step=1e-7)
            if a <= z.real <= b and abs(z.imag) < 1e-9:
                roots.append((z.real, resid))
            else:
                roots.append((x, abs(complex(ctx.h(complex(x))))))
    return roots, poles


def _phi_pole_counter(ctx: DispersionContext, phi_real_zeros: list[float], ladder: np.ndarray):
    """Counts zeros of phi_n (= poles of h_n) inside off-axis cells."""
    deflations = [(complex(p), 1) for p in phi_real_zeros]
    deflations += [(complex(t), -1) for t in ladder]

    def counter(cell: Rectangle) -> int:
        return winding_number(ctx.phi, cell, deflations)

    return counter


def find_roots(ctx: DispersionContext, region: Rectangle | tuple) -> RootSet:
    """All zeros of h_n inside a rectangle symmetric about the real axis
    (or lying entirely on one side of it).

    Real-axis content is resolved by one-dimensional scans; the open upper
    half of the region is counted by winding numbers with the real roots
    and poles deflated from the integrand, and the lower half follows by
    conjugate symmetry.  The zero count always matches the boundary winding
    number by construction; an unresolvable sub-rectangle raises
    :class:`UnresolvedRegionError` naming it.
    """
    rect = region if isinstance(region, Rectangle) else Rectangle(*region)
    symmetric = abs(rect.im_min + rect.im_max) <= 1e-12 * max(1.0, rect.height)
    if not symmetric and rect.im_min < 0.0 < rect.im_max:
        raise DomainError("region must be symmetric about the real axis or avoid it")

    if rect.im_min >= 0.0 or rect.im_max <= 0.0:
        mirrored = rect.im_max <= 0.0
        work = (
            rect
            if not mirrored
            else Rectangle(rect.re_min, rect.re_max, -rect.im_max, -rect.im_min)
        )
        ladder = _pole_ladder_points(ctx, work.re_min)
        counter = _phi_pole_counter(ctx, [], ladder) if work.re_min < -1.0 else None
        res = find_roots_region(ctx.h, work, pole_counter=counter)
        roots = [(np.conj(z) if mirrored else z, r) for z, r in res.roots]
        return RootSet(rect, [(complex(z), float(r)) for z, r in roots], res.pole_count)

    # symmetric region: axis + upper half + mirror
    _check_boundary_clearance(ctx, rect)
    real_roots, real_poles = _real_axis_analysis(ctx, rect.re_min, rect.re_max)
    ladder = _pole_ladder_points(ctx, rect.re_min)
    deflations = [(complex(x), 1) for x, _ in real_roots]
    deflations += [(complex(p), -1) for p in real_poles]

    lift = max(_AXIS_LIFT, 1.5e-8 / ctx.R**2)
    upper = Rectangle(rect.re_min, rect.re_max, lift, rect.im_max)
    counter = (
        _phi_pole_counter(ctx, real_poles, ladder) if rect.re_min < -1.0 else None
    )
    res = find_roots_region(ctx.h, upper, deflations=deflations, pole_counter=counter)

    roots: list[tuple[complex, float]] = [(complex(x), r) for x, r in real_roots]
    for z, r in res.roots:
        roots.append((z, r))
        roots.append((np.conj(z), abs(complex(ctx.h(np.conj(z))))))
    return RootSet(rect, roots, res.pole_count + len(real_poles))


def _check_boundary_clearance(ctx: DispersionContext, rect: Rectangle) -> None:
    ladder = _pole_ladder_points(ctx, rect.re_min - 1.0)
    for t in ladder:
        for edge in (rect.re_min, rect.re_max):
            if abs(t - edge) < 1e-6:
                raise DomainError(
                    f"region edge Re={edge} is within 1e-6 of the singular point {t}"
                )


def dominant_root(
    ctx: DispersionContext,
    search_depth: int = 24,
    delta0: float | None = None,
) -> complex:
    """Zero of h_n with maximal real part (the asymptotic mode rate).

    Scans rectangles from the right-half-plane enclosure leftwards in
    geometrically growing shells down to -max(5, 2*delta0*n^2); the first
    nonempty shell holds the dominant root.  ``delta0`` defaults to the
    1/(3 R^2) decay scale of the large-n spectral bound.
    """
    d0 = delta0 if delta0 is not None else 1.0 / (3.0 * ctx.R**2)
    lam = max(5.0, 2.0 * d0 * ctx.n**2)
    right = ctx.rhp_enclosure_radius()

    bounds = [right, -0.9013]
    while bounds[-1] > -lam:
        bounds.append(bounds[-1] * 2.0 - 1.0137)
    while len(bounds) - 1 < search_depth and bounds[-1] > -lam * 8.0:
        bounds.append(bounds[-1] * 2.0 - 1.0137)

    for hi, lo in zip(bounds, bounds[1:]):
        y = max(4.0, 1.3 * abs(lo))
        rs = find_roots(ctx, Rectangle(lo, hi, -y, y))
        if rs.roots:
            return rs.dominant
    raise UnresolvedRegionError(
        f"no zero found down to Re s = {bounds[-1]:.3f} for n={ctx.n}",
        (bounds[-1], right, -1.0, 1.0),
    )


def first_real_pole(ctx: DispersionContext) -> float:
    """Rightmost pole of h_n (first zero of phi_n left of -1)."""
    R = ctx.R
    j1 = float(bessel_j_half_zeros(ctx.n, 1)[0])
    t1 = -1.0 - (j1 / R) ** 2
    inset = max(1e-6, 2e-8 / R**2)
    a, b = t1 + inset, -1.0 - inset
    x = np.linspace(a, b, 4097)
    v = np.real(ctx.phi(x + 0.0j))
    flips = np.nonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0)[0]
    if len(flips) == 0:
        raise UnresolvedRegionError("no sign change of phi_n left of -1", (a, b, 0.0, 0.0))
    i = flips[-1]
    lo, hi = float(x[i]), float(x[i + 1])
    f_lo = float(v[i])
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        f_mid = float(np.real(ctx.phi(complex(mid))))
        if f_lo * f_mid <= 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


# -- stability threshold ------------------------------------------------


class _ModeCache:
    """Per-mode constants plus a memo for the mu-independent part of h_n.

    h_n(s; mu) = (A/mu)(s + c_n) + B(s) with B independent of mu, so one
    search box (sized at the largest mu of interest) can be reused across a
    whole bisection with B evaluated once per contour node.
    """

    def __init__(self, n: int, R: float, beta: float):
        self.n = n
        self.R = R
        self.beta = beta
        self.p0 = float(p_ratio(0, R * R))
        self.p1 = float(p_ratio(1, R * R))
        self.A = (beta + R * self.p0) / (beta * R * self.p0)
        self.c_n = n / R**3 * (n * (n + 1) / 2.0 - 1.0)
        self.numerator = R * R * self.p1 + 1.0 + beta * R
        self.flux = n / R + beta
        self.frac_bound = self.numerator * R / ((2 * n + 3) * (n + beta * R))
        self._memo: dict[complex, complex] = {}

    def _base(self, z: np.ndarray) -> np.ndarray:
        out = np.empty(z.shape, dtype=complex)
        miss_idx = []
        for i, zz in enumerate(z):
            got = self._memo.get(complex(zz))
            if got is None:
                miss_idx.append(i)
            else:
                out[i] = got
        if miss_idx:
            zm = z[miss_idx]
            u = (zm + 1.0) * self.R * self.R
            pn = p_ratio(self.n, u)
            vals = -self.R * self.p1 + self.numerator * pn / (
                (zm + 1.0) * self.R * pn + self.flux
            )
            for i, v in zip(miss_idx, vals):
                self._memo[complex(z[i])] = complex(v)
                out[i] = v
        return out

    def h_func(self, mu: float):
        def h(z: np.ndarray) -> np.ndarray:
            z = np.asarray(z, dtype=complex)
            return self.A / mu * (z + self.c_n) + self._base(z)

        return h

    def h_at_origin(self, mu: float) -> float:
        return float(np.real(self.h_func(mu)(np.array([0.0 + 0.0j]))[0]))

    def box_radius(self, mu: float) -> float:
        return self.c_n + mu / self.A * (self.R * self.p1 + self.frac_bound) + 1.0

    def tail_margin(self, mu: float) -> float:
        """Positive => h_n has no zeros with Re s >= 0 (rigorous bound)."""
        return self.A / mu * self.c_n - self.R * self.p1 - self.frac_bound


def _mode_is_stable(cache: _ModeCache, mu: float, box: float) -> bool:
    """True iff h_n (n != 1) has no zero with Re s >= 0.

    A neutral zero exactly at the origin counts as unstable, matching the
    convention that the threshold itself is excluded from the stable range.
    """
    n = cache.n
    if n >= 2 and cache.h_at_origin(mu) <= 0.0:
        return False
    if n >= 2 and cache.tail_margin(mu) > 0.0:
        return True
    h = cache.h_func(mu)

    def h_real(x: np.ndarray) -> np.ndarray:
        return np.real(h(x.astype(complex)))

    real_roots = scan_real_roots(h_real, -0.9013, box, n_points=513)
    if any(r >= 0.0 for r, _ in real_roots):
        return False
    deflations = [(complex(r), 1) for r, _ in real_roots]
    w = winding_number(h, Rectangle(0.0, box, _AXIS_LIFT, box), deflations)
    if w < 0:
        raise UnresolvedRegionError(
            f"negative winding {w} in a pole-free region (n={n})", (0.0, box, 0.0, box)
        )
    return w == 0


def _mode1_is_stable(cache: _ModeCache, mu: float, box: float) -> bool:
    """True iff all zeros of h_1 other than the neutral s = 0 have Re < 0.

    The known simple zero at the origin is deflated by the factor
    s/(s+1); the companion factor's artificial zero at s = -1 lies outside
    every right-half-plane search box.
    """
    h = cache.h_func(mu)

    def g(z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        return h(z) * (z + 1.0) / z

    def g_real(x: np.ndarray) -> np.ndarray:
        return np.real(g(x.astype(complex)))

    eps = 1e-7
    real_roots = scan_real_roots(g_real, -0.9013, -eps, n_points=257)
    real_roots += scan_real_roots(g_real, eps, box, n_points=513)
    if any(r >= eps for r, _ in real_roots):
        return False
    deflations = [(complex(r), 1) for r, _ in real_roots]
    w = winding_number(g, Rectangle(0.0, box, _AXIS_LIFT, box), deflations)
    if w < 0:
        raise UnresolvedRegionError(
            f"negative winding {w} in a pole-free region (n=1)", (0.0, box, 0.0, box)
        )
    return w == 0


def mu_star(
    beta: float,
    sigma_tilde: float,
    n_max: int = 16,
    rel_tol: float = 1e-8,
) -> float:
    """Linear-stability threshold: the largest mu below which every mode's
    exponents lie strictly in Re s < 0 (the translation mode keeps its
    neutral s = 0 exponent and its remaining exponents must decay).

    Realized as a bisection in mu of the per-mode right-half-plane zero
    counts for n in {0, 1, 2, ..., n_max}; modes beyond n_max are certified
    rigorously by the explicit lower bound on |h_n| in Re s >= 0.  The
    upper bracket is the first symmetry-breaking value mu_2, where mode 2
    is neutral, so the result never exceeds mu_2.
    """
    if n_max < 8:
        raise DomainError(f"n_max must be >= 8, got {n_max}")
    probe = ModelParams(beta, sigma_tilde, 1.0)
    R = solve_radius(probe)
    mu2 = mu_bifurcation(2, R, beta)

    caches = {n: _ModeCache(n, R, beta) for n in range(n_max + 1)}
    # modes beyond n_max must be covered by the closed-form certificate at
    # the largest mu the bisection can visit
    n_hi = n_max
    while caches.get(n_hi + 1, _ModeCache(n_hi + 1, R, beta)).tail_margin(mu2) <= 0.0:
        n_hi += 1
        caches.setdefault(n_hi, _ModeCache(n_hi, R, beta))
        if n_hi > 96:
            warnings.warn(f"large-n certificate failed up to n={n_hi}", stacklevel=2)
            break
    for n in range(n_max + 1, n_hi + 1):
        caches.setdefault(n, _ModeCache(n, R, beta))

    boxes = {n: caches[n].box_radius(mu2 * 1.001) for n in caches}
    order = list(range(2, max(caches) + 1)) + [0, 1]

    def stable(mu: float) -> bool:
        for n in order:
            cache = caches[n]
            if n == 1:
                if not _mode1_is_stable(cache, mu, boxes[n]):
                    return False
            elif not _mode_is_stable(cache, mu, boxes[n]):
                return False
        return True

    lo = 1e-3 * mu2
    for _ in range(6):
        if stable(lo):
            break
        lo *= 0.1
    else:
        raise UnresolvedRegionError(
            f"no stable mu found above {lo:.3e}", (0.0, 0.0, 0.0, 0.0)
        )
    hi = mu2  # neutral mode 2: unstable side by convention
    while hi - lo > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        if stable(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class BifurcationTable:
    """Symmetry-breaking values mu_n, the mode-1 value and the threshold."""

    beta: float
    sigma_tilde: float
    R: float
    mu_n: dict[int, float]
    mu_1: float
    mu_star: float | None

    def check_ordering(self) -> None:
        ns = sorted(k for k in self.mu_n if k >= 2)
        for a, b in zip(ns, ns[1:]):
            if not self.mu_n[a] < self.mu_n[b]:
                raise DomainError(f"mu_{a} >= mu_{b}: ordering violated")
        if self.mu_star is not None:
            if self.mu_star > self.mu_n.get(2, math.inf):
                raise DomainError("mu_star exceeds mu_2")
            if not self.mu_star < self.mu_1:
                raise DomainError("mu_star not below mu_1")


def bifurcation_table(
    beta: float,
    sigma_tilde: float,
    n_max: int = 10,
    with_threshold: bool = True,
) -> BifurcationTable:
    """mu_n for n = 2..n_max plus mu_1 and (optionally) mu_star."""
    probe = ModelParams(beta, sigma_tilde, 1.0)
    R = solve_radius(probe)
    table = {n: mu_bifurcation(n, R, beta) for n in range(2, n_max + 1)}
    mu1 = mu_bifurcation(1, R, beta)
    ms = mu_star(beta, sigma_tilde) if with_threshold else None
    return BifurcationTable(beta, sigma_tilde, R, table, mu1, ms)


@dataclass(frozen=True)
class LargeNReport:
    """Fitted quadratic decay coefficient for dominant roots at large n."""

    dominant: dict[int, complex]
    delta0: float
    monotone: bool

    @property
    def passed(self) -> bool:
        return self.delta0 > 0.0 and self.monotone


def large_n_bound_check(params: ModelParams, n_range) -> LargeNReport:
    """Dominant roots over ``n_range`` and the largest delta0 with
    Re s_dom(n) <= -delta0 n^2; fails when the decay is not monotone in n."""
    ns = sorted(int(n) for n in n_range)
    if not ns or ns[0] < 20 or ns[-1] > 80:
        raise DomainError(f"n_range must lie within [20, 80], got {ns}")
    R = solve_radius(params)
    dom: dict[int, complex] = {}
    for n in ns:
        ctx = DispersionContext(n, params, R)
        dom[n] = dominant_root(ctx)
    delta0 = min(-dom[n].real / n**2 for n in ns)
    monotone = all(dom[a].real > dom[b].real for a, b in zip(ns, ns[1:]))
    return LargeNReport(dominant=dom, delta0=delta0, monotone=monotone)
