"""Argument-principle root location for analytic functions on rectangles.

Zeros are counted by adaptive Gauss-Kronrod quadrature of the logarithmic
derivative around rectangle boundaries (the derivative comes from a central
finite difference), rectangles are subdivided until each holds at most one
zero, and candidates are polished by complex Newton iteration.

Functions with poles are supported two ways: poles on the real axis are
handled by explicit deflation terms subtracted from the integrand, and
off-axis poles by a caller-supplied ``pole_counter`` that returns the number
of poles inside a cell (cells then count zeros as winding + poles).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import UnresolvedRegionError

# 15-point Kronrod rule with embedded 7-point Gauss rule on [-1, 1]
_XGK_HALF = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
]
_WGK_HALF = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
]
_WGK_CENTER = 0.209482141084728
_WG_HALF = [0.129484966168870, 0.279705391489277, 0.381830050505119]
_WG_CENTER = 0.417959183673469

_NODES = np.array([-x for x in _XGK_HALF] + [0.0] + list(reversed(_XGK_HALF)))
_W_K = np.array(_WGK_HALF + [_WGK_CENTER] + list(reversed(_WGK_HALF)))
_w_gauss = np.zeros(15)
for _i, _w in zip((1, 3, 5), _WG_HALF):
    _w_gauss[_i] = _w
    _w_gauss[14 - _i] = _w
_w_gauss[7] = _WG_CENTER
_W_G = _w_gauss
del _w_gauss

_SPLIT_FRACTIONS = (0.5, 0.538196601125011, 0.461803398874989, 0.571428571428571)


class WindingError(RuntimeError):
    """Internal: a boundary integral failed to settle on an integer."""


@dataclass(frozen=True)
class Rectangle:
    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError(f"degenerate rectangle {self.as_tuple()}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.re_min, self.re_max, self.im_min, self.im_max)

    @property
    def width(self) -> float:
        return self.re_max - self.re_min

    @property
    def height(self) -> float:
        return self.im_max - self.im_min

    @property
    def diag(self) -> float:
        return math.hypot(self.width, self.height)

    @property
    def center(self) -> complex:
        return complex(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))

    def corners(self) -> list[complex]:
        return [
            complex(self.re_min, self.im_min),
            complex(self.re_max, self.im_min),
            complex(self.re_max, self.im_max),
            complex(self.re_min, self.im_max),
        ]

    def contains(self, z: complex, pad: float = 0.0) -> bool:
        return (
            self.re_min - pad <= z.real <= self.re_max + pad
            and self.im_min - pad <= z.imag <= self.im_max + pad
        )

    def split(self, fraction: float) -> tuple["Rectangle", "Rectangle"]:
        """Cut across the longer side at the given fraction."""
        if self.width >= self.height:
            x = self.re_min + fraction * self.width
            return (
                Rectangle(self.re_min, x, self.im_min, self.im_max),
                Rectangle(x, self.re_max, self.im_min, self.im_max),
            )
        y = self.im_min + fraction * self.height
        return (
            Rectangle(self.re_min, self.re_max, self.im_min, y),
            Rectangle(self.re_min, self.re_max, y, self.im_max),
        )


def _log_derivative_integrand(
    f: Callable[[np.ndarray], np.ndarray],
    fd_step: float,
    deflations: Sequence[tuple[complex, int]],
):
    def integrand(z: np.ndarray) -> np.ndarray:
        fz = f(z)
        fp = (f(z + fd_step) - f(z - fd_step)) / (2.0 * fd_step)
        out = fp / fz
        for point, mult in deflations:
            out = out - mult / (z - point)
        return out

    return integrand


def _integrate_edge(
    integrand: Callable[[np.ndarray], np.ndarray],
    za: complex,
    zb: complex,
    abs_tol: float,
    max_panels: int,
) -> complex:
    """Adaptive Gauss-Kronrod line integral of ``integrand`` from za to zb."""
    dz = zb - za

    def eval_panels(bounds: np.ndarray):
        mid = 0.5 * (bounds[:, 0] + bounds[:, 1])
        half = 0.5 * (bounds[:, 1] - bounds[:, 0])
        t = mid[:, None] + half[:, None] * _NODES[None, :]
        vals = integrand(za + t.ravel() * dz).reshape(t.shape)
        k15 = (vals * _W_K[None, :]).sum(axis=1) * half * dz
        g7 = (vals * _W_G[None, :]).sum(axis=1) * half * dz
        err = np.abs(k15 - g7)
        return k15, err

    bounds = np.array([[0.0, 1.0]])
    k15, err = eval_panels(bounds)
    panels = [(float(b[0]), float(b[1]), complex(v), float(e)) for b, v, e in zip(bounds, k15, err)]
    for _ in range(60):
        total_err = sum(p[3] for p in panels)
        if total_err <= abs_tol:
            break
        if len(panels) >= max_panels:
            raise WindingError(
                f"edge integral did not converge: {len(panels)} panels, err {total_err:.2e}"
            )
        panels.sort(key=lambda p: p[3])
        n_split = max(1, len(panels) // 4)
        keep, split = panels[:-n_split], panels[-n_split:]
        new_bounds = []
        for t0, t1, _, _ in split:
            tm = 0.5 * (t0 + t1)
            new_bounds.append([t0, tm])
            new_bounds.append([tm, t1])
        nb = np.array(new_bounds)
        k15, err = eval_panels(nb)
        panels = keep + [
            (float(b[0]), float(b[1]), complex(v), float(e)) for b, v, e in zip(nb, k15, err)
        ]
    else:
        raise WindingError("edge integral refinement loop exhausted")
    return sum(p[2] for p in panels)


def winding_number(
    f: Callable[[np.ndarray], np.ndarray],
    rect: Rectangle,
    deflations: Sequence[tuple[complex, int]] = (),
    fd_step: float | None = None,
    abs_tol: float = 0.4,
    max_panels: int = 256,
) -> int:
    """Winding number of f around the rectangle boundary (zeros minus poles),
    with the listed (point, multiplicity) pairs deflated from the integrand.

    Deflated points may lie on or near the boundary: their analytic
    contribution to a closed contour is an exact integer, so removing them
    only smooths the integrand.
    """
    step = fd_step if fd_step is not None else 1e-6 * max(1.0, rect.diag)
    integrand = _log_derivative_integrand(f, step, deflations)
    corners = rect.corners()
    total = 0.0 + 0.0j
    for a, b in zip(corners, corners[1:] + corners[:1]):
        total += _integrate_edge(integrand, a, b, abs_tol / 4.0, max_panels)
    raw = total / (2.0j * math.pi)
    # add back the exact contribution of deflated points strictly inside
    inside = sum(mult for point, mult in deflations if rect.contains(point, pad=-1e-14))
    w = raw + inside
    w_int = int(round(w.real))
    if abs(w - w_int) > 0.2:
        raise WindingError(f"non-integer winding {w:.3f} over {rect.as_tuple()}")
    return w_int


def newton_polish(
    f: Callable[[np.ndarray], np.ndarray],
    z0: complex,
    fd_step: float,
    step_tol: float = 1e-13,
    max_iter: int = 60,
) -> tuple[complex, float]:
    """Complex Newton iteration from z0; returns (root, |f(root)|)."""
    z = complex(z0)
    for _ in range(max_iter):
        fz = complex(f(np.array([z]))[0])
        fp = complex((f(np.array([z + fd_step])) - f(np.array([z - fd_step])))[0]) / (2.0 * fd_step)
        if fp == 0:
            break
        step = fz / fp
        z = z - step
        if abs(step) <= step_tol * max(1.0, abs(z)):
            break
    resid = abs(complex(f(np.array([z]))[0]))
    return z, resid


@dataclass
class RegionRoots:
    """Roots (with residuals) and pole count found in a search region."""

    roots: list[tuple[complex, float]]
    pole_count: int


def find_roots_region(
    f: Callable[[np.ndarray], np.ndarray],
    rect: Rectangle,
    deflations: Sequence[tuple[complex, int]] = (),
    pole_counter: Callable[[Rectangle], int] | None = None,
    max_depth: int = 12,
    residual_scale: float = 1.0,
) -> RegionRoots:
    """All zeros of ``f`` strictly inside ``rect`` (no poles allowed unless
    ``pole_counter`` is given).  ``deflations`` are known zeros/poles on or
    near the boundary that must be excluded from the count.
    """
    fd_step = 1e-6 * max(1.0, rect.diag)
    roots: list[tuple[complex, float]] = []
    poles = [0]

    def count_zeros(cell: Rectangle) -> tuple[int, int]:
        w = winding_number(f, cell, deflations, fd_step)
        p = pole_counter(cell) if pole_counter is not None else 0
        z = w + p
        if z < 0:
            raise WindingError(
                f"negative zero count {z} in {cell.as_tuple()} (unexpected pole?)"
            )
        return z, p

    def recurse(cell: Rectangle, depth: int) -> list[tuple[complex, float]]:
        z_count, p_count = count_zeros(cell)
        poles[0] += p_count
        if z_count == 0:
            return []
        if z_count == 1 and p_count == 0:
            got = _polish_in_cell(f, cell, fd_step)
            if got is not None:
                return [got]
        if depth >= max_depth:
            raise UnresolvedRegionError(
                f"could not isolate {z_count} zeros / {p_count} poles", cell.as_tuple()
            )
        last_error: Exception | None = None
        for frac in _SPLIT_FRACTIONS:
            poles_before = poles[0]
            try:
                c1, c2 = cell.split(frac)
                return recurse(c1, depth + 1) + recurse(c2, depth + 1)
            except WindingError as exc:
                poles[0] = poles_before
                last_error = exc
        raise UnresolvedRegionError(
            f"subdivision failed at depth {depth}: {last_error}", cell.as_tuple()
        )

    try:
        found = recurse(rect, 0)
    except WindingError as exc:
        raise UnresolvedRegionError(str(exc), rect.as_tuple()) from exc
    roots.extend(found)
    return RegionRoots(roots=_dedupe(roots), pole_count=poles[0])


def _polish_in_cell(f, cell: Rectangle, fd_step: float):
    starts = [cell.center]
    for cx in (0.25, 0.75):
        for cy in (0.25, 0.75):
            starts.append(
                complex(
                    cell.re_min + cx * cell.width,
                    cell.im_min + cy * cell.height,
                )
            )
    pad = 0.05 * cell.diag
    for z0 in starts:
        z, resid = newton_polish(f, z0, fd_step)
        if cell.contains(z, pad=pad) and resid <= 1e-9 * max(1.0, abs(z)):
            return z, resid
    return None


def _dedupe(roots: list[tuple[complex, float]], floor: float = 1e-7):
    out: list[tuple[complex, float]] = []
    for z, r in sorted(roots, key=lambda t: (t[0].real, t[0].imag)):
        if any(abs(z - z2) < floor for z2, _ in out):
            continue
        out.append((z, r))
    return out


def scan_real_roots(
    g: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    n_points: int = 257,
    newton_fd: float = 1e-7,
) -> list[tuple[float, float]]:
    """Real roots of a continuous real function on [a, b] by sign scanning.

    Returns (root, |g(root)|) pairs.  Roots of even multiplicity (no sign
    change) are invisible to the scan; callers needing certainty must
    cross-check counts with a winding number.
    """
    if b <= a:
        return []
    x = np.linspace(a, b, n_points)
    v = np.asarray(g(x), dtype=float)
    out: list[tuple[float, float]] = []
    flips = np.nonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0)[0]
    for i in flips:
        lo, hi = float(x[i]), float(x[i + 1])
        f_lo = float(v[i])
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            f_mid = float(g(np.array([mid]))[0])
            if f_lo * f_mid <= 0.0:
                hi = mid
            else:
                lo, f_lo = mid, f_mid
            if hi - lo <= 1e-15 * max(1.0, abs(hi)):
                break
        root = 0.5 * (lo + hi)
        resid = abs(float(g(np.array([root]))[0]))
        out.append((root, resid))
    exact = np.nonzero(v == 0.0)[0]
    for i in exact:
        out.append((float(x[i]), 0.0))
    return out
