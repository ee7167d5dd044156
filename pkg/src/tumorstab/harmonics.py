"""Band-limited spherical-harmonic analysis and synthesis on the sphere.

Complex orthonormal harmonics with the Condon-Shortley phase, so that

    Y_{1,-1} = sqrt(3/(8 pi)) sin(theta) e^{-i phi}
    Y_{1,0}  = sqrt(3/(4 pi)) cos(theta)
    Y_{1,1}  = -sqrt(3/(8 pi)) sin(theta) e^{i phi}

(the convention the mode-1 recentering formulas assume).  Quadrature is
Gauss-Legendre in cos(theta) times a uniform trapezoid in phi, which is
exact for band-limited integrands; no fast transform is attempted (direct
O(n^3) quadrature is fine at the band limits used here).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import sph_harm_y

from .errors import DomainError, GridMismatchError, SymmetryError

_ROUNDTRIP_TOL = 1e-12


@dataclass(frozen=True)
class HarmonicBand:
    """Band limit plus the quadrature sizes that resolve it exactly.

    ``n_polar`` Gauss-Legendre nodes integrate polynomials in cos(theta) up
    to degree 2*n_polar - 1 >= 2*n_max; ``n_azimuth`` uniform nodes separate
    azimuthal orders up to n_max.
    """

    n_max: int
    n_polar: int = 0
    n_azimuth: int = 0

    def __post_init__(self):
        if self.n_max < 0:
            raise DomainError(f"band limit must be >= 0, got {self.n_max}")
        if self.n_polar == 0:
            object.__setattr__(self, "n_polar", self.n_max + 1)
        if self.n_azimuth == 0:
            object.__setattr__(self, "n_azimuth", 2 * self.n_max + 1)
        if 2 * self.n_polar - 1 < 2 * self.n_max:
            raise DomainError(
                f"polar quadrature size {self.n_polar} is not exact up to degree {2 * self.n_max}"
            )
        if self.n_azimuth < 2 * self.n_max + 1:
            raise DomainError(
                f"azimuthal size {self.n_azimuth} < {2 * self.n_max + 1} aliases orders"
            )

    @property
    def grid_shape(self) -> tuple[int, int]:
        return (self.n_polar, self.n_azimuth)

    def grid(self) -> tuple[np.ndarray, np.ndarray]:
        """(theta, phi) quadrature node vectors."""
        x, _ = np.polynomial.legendre.leggauss(self.n_polar)
        theta = np.arccos(x[::-1])
        phi = 2.0 * np.pi * np.arange(self.n_azimuth) / self.n_azimuth
        return theta, phi

    def weights(self) -> np.ndarray:
        """Polar quadrature weights matching :meth:`grid` ordering."""
        _, w = np.polynomial.legendre.leggauss(self.n_polar)
        return w[::-1]


@dataclass
class ModeCoefficients:
    """Coefficients c_{n,m}, stored as a dense (n_max+1, 2 n_max+1) array.

    Column index m + n_max holds order m; entries with |m| > n are unused
    and kept at zero.  Real-valued sphere functions satisfy
    c_{n,-m} = (-1)^m conj(c_{n,m}).
    """

    n_max: int
    c: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.c is None:
            self.c = np.zeros((self.n_max + 1, 2 * self.n_max + 1), dtype=complex)
        self.c = np.asarray(self.c, dtype=complex)
        if self.c.shape != (self.n_max + 1, 2 * self.n_max + 1):
            raise DomainError(f"coefficient array shape {self.c.shape} does not match band")

    def __getitem__(self, nm: tuple[int, int]) -> complex:
        n, m = nm
        self._check_index(n, m)
        return complex(self.c[n, m + self.n_max])

    def __setitem__(self, nm: tuple[int, int], value: complex) -> None:
        n, m = nm
        self._check_index(n, m)
        self.c[n, m + self.n_max] = value

    def _check_index(self, n: int, m: int) -> None:
        if not (0 <= n <= self.n_max and abs(m) <= n):
            raise DomainError(f"(n, m) = ({n}, {m}) outside band {self.n_max}")

    def conjugate_symmetry_defect(self) -> float:
        worst = 0.0
        for n in range(self.n_max + 1):
            for m in range(0, n + 1):
                a = self.c[n, m + self.n_max]
                b = self.c[n, -m + self.n_max]
                worst = max(worst, abs(b - (-1.0) ** m * np.conj(a)))
        return worst


def _basis_matrix(band: HarmonicBand) -> np.ndarray:
    """Y_{n,m} evaluated on the quadrature grid, shape (n_idx, theta, phi)."""
    theta, phi = band.grid()
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    nmax = band.n_max
    out = np.zeros((nmax + 1, 2 * nmax + 1, len(theta), len(phi)), dtype=complex)
    for n in range(nmax + 1):
        for m in range(-n, n + 1):
            out[n, m + nmax] = sph_harm_y(n, m, tt, pp)
    return out


_basis_cache: dict[tuple[int, int, int], np.ndarray] = {}


def _basis(band: HarmonicBand) -> np.ndarray:
    key = (band.n_max, band.n_polar, band.n_azimuth)
    got = _basis_cache.get(key)
    if got is None:
        got = _basis_matrix(band)
        _basis_cache[key] = got
    return got


def project(samples: np.ndarray, band: HarmonicBand) -> ModeCoefficients:
    """Quadrature projection of sphere samples onto the harmonic basis.

    ``samples`` must live on the (theta, phi) grid of ``band``; the result
    is exact (to roundoff) for band-limited input.
    """
    samples = np.asarray(samples)
    if samples.shape != band.grid_shape:
        raise GridMismatchError(
            f"sample shape {samples.shape} does not match quadrature grid {band.grid_shape}"
        )
    w = band.weights()
    basis = _basis(band)
    # integral over the sphere: sum_j w_j * (2 pi / K) sum_k conj(Y) f
    weighted = samples * w[:, None] * (2.0 * np.pi / band.n_azimuth)
    coeff = np.einsum("nmjk,jk->nm", np.conj(basis), weighted)
    return ModeCoefficients(band.n_max, coeff)


def synthesize(coeffs: ModeCoefficients, band: HarmonicBand) -> np.ndarray:
    """Pointwise sum of c_{n,m} Y_{n,m} on the quadrature grid of ``band``.

    Requires the conjugate-symmetry invariant so the output is real; a
    violation is rejected rather than silently truncated.
    """
    if coeffs.n_max != band.n_max:
        raise GridMismatchError(
            f"coefficient band {coeffs.n_max} does not match grid band {band.n_max}"
        )
    defect = coeffs.conjugate_symmetry_defect()
    scale = max(1.0, float(np.max(np.abs(coeffs.c))))
    if defect > 1e-10 * scale:
        raise SymmetryError(
            f"conjugate symmetry violated by {defect:.3e}; output would not be real"
        )
    basis = _basis(band)
    values = np.einsum("nm,nmjk->jk", coeffs.c, basis)
    return values.real


def roundtrip_defect(samples: np.ndarray, band: HarmonicBand) -> float:
    """Residual of synthesize(project(samples)); 0 for band-limited input."""
    back = synthesize(project(samples, band), band)
    return float(np.max(np.abs(back - samples)))
