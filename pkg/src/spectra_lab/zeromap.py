"""The explicit 2x2 machinery mapping trivial zeros to critical-line values.

Three matrices drive the map, indexed by an integer n >= 1 and a positive
energy E:

    alpha = [[4n^2, 0], [0, 1]]         det = 4n^2 = (-2n)(-2n)
    d     = [[1, i], [0, 1]] [[1, 0], [i, 1]] = [[0, i], [i, 1]]
    eps   = [[E, 0], [0, 1]]

Their product d * eps * alpha has trace exactly 1 and determinant 4 n^2 E,
so its eigenvalues are (1 +- i sqrt(16 n^2 E - 1)) / 2: a conjugate pair
with real part exactly one half whenever 16 n^2 E > 1.  Inverting the
imaginary part gives E = (4 gamma^2 + 1) / (16 n^2), which pins the energy
that places the pair at 1/2 +- i gamma.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .zeta import ZeroList

_N_CAP = 10**6  # keeps 16 n^2 E comfortably inside double range


@dataclass(frozen=True)
class CartanTriple:
    """Index n (trivial zero -2n) and the diagonal energy E."""

    n: int
    energy: float

    def __post_init__(self):
        if not 1 <= self.n <= _N_CAP:
            raise ValueError(f"n must be within 1..{_N_CAP}, got {self.n}")
        if not self.energy > 0:
            raise ValueError(f"energy must be positive, got {self.energy}")


@dataclass
class ZeroMapRow:
    n: int
    gamma: float
    energy: float
    lam_plus: complex
    trace_residual: float
    det_residual: float
    re_residual: float
    im_residual: float
    critical: bool


def build_alpha(n: int) -> np.ndarray:
    if not 1 <= n <= _N_CAP:
        raise ValueError(f"n must be within 1..{_N_CAP}, got {n}")
    return np.array([[4.0 * n * n, 0.0], [0.0, 1.0]], dtype=complex)


def build_d() -> np.ndarray:
    upper = np.array([[1.0, 1.0j], [0.0, 1.0]])
    lower = np.array([[1.0, 0.0], [1.0j, 1.0]])
    return upper @ lower


def build_epsilon(energy: float) -> np.ndarray:
    if not energy > 0:
        raise ValueError(f"energy must be positive, got {energy}")
    return np.array([[energy, 0.0], [0.0, 1.0]], dtype=complex)


def product_dea(t: CartanTriple) -> np.ndarray:
    """d * eps * alpha in that order; trace 1, determinant 4 n^2 E."""
    return build_d() @ build_epsilon(t.energy) @ build_alpha(t.n)


def eigen2x2(m: np.ndarray) -> tuple[complex, complex]:
    """Both roots of the characteristic polynomial, numerically stable.

    The larger-magnitude root comes from the quadratic formula with the
    sign chosen to avoid cancellation; the other is det / root.  Returned
    sorted by (real, imaginary) part.
    """
    a = np.asarray(m, dtype=complex)
    if a.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite matrix entry")
    tr = complex(a[0, 0] + a[1, 1])
    det = complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    disc = cmath.sqrt(tr * tr - 4.0 * det)
    if (tr.conjugate() * disc).real < 0.0:
        disc = -disc
    q = 0.5 * (tr + disc)
    lam1 = q
    lam2 = det / q if q != 0 else 0.5 * (tr - disc)
    return tuple(sorted((lam1, lam2), key=lambda z: (z.real, z.imag)))


def lambda_pm(t: CartanTriple) -> tuple[complex, complex]:
    """Closed-form eigenvalue pair (1 +- i sqrt(16 n^2 E - 1)) / 2.

    When 16 n^2 E < 1 the pair is real (off the critical line); at equality
    it degenerates to the double root one half.
    """
    q = 16.0 * t.n * t.n * t.energy
    disc = q - 1.0
    if disc > 0.0:
        y = 0.5 * math.sqrt(disc)
        return complex(0.5, y), complex(0.5, -y)
    if disc < 0.0:
        y = 0.5 * math.sqrt(-disc)
        return complex(0.5 + y, 0.0), complex(0.5 - y, 0.0)
    return complex(0.5, 0.0), complex(0.5, 0.0)


def on_critical_line(t: CartanTriple) -> bool:
    """True when the eigenvalue pair has real part exactly one half."""
    return 16.0 * t.n * t.n * t.energy >= 1.0


def energy_from_gamma(n: int, gamma: float) -> CartanTriple:
    """Energy placing the eigenvalue pair at 1/2 +- i gamma.

    Inverts the closed form: E = (4 gamma^2 + 1) / (16 n^2).
    """
    if gamma < 0:
        raise ValueError(f"gamma must be nonnegative, got {gamma}")
    return CartanTriple(n=n, energy=(4.0 * gamma * gamma + 1.0) / (16.0 * n * n))


def trivial_zeros(count: int) -> np.ndarray:
    """The first ``count`` trivial zeros -2, -4, ..., -2*count."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return -2 * np.arange(1, count + 1)


def kernel_bipoints(n: int) -> int:
    """Squared trivial zero (-2n)^2 = 4 n^2."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 4 * n * n


def elliptic_partial_sum(x: float, terms: int) -> tuple[complex, complex]:
    """Partial sums (sum n e^{-2 pi i n x}, sum n e^{+2 pi i n x}), n = 1..terms.

    The full series diverges; only truncations are exposed.  The two
    components are complex conjugates for real x.
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    n = np.arange(1, terms + 1, dtype=float)
    phases = np.exp(-2j * math.pi * n * x)
    left = complex(np.sum(n * phases))
    right = complex(np.sum(n * np.conj(phases)))
    return left, right


def zero_map_residuals(z: ZeroList, n_list) -> list[ZeroMapRow]:
    """Residual table for the map at each (zero, index) pairing.

    The pairing of zeros with indices n is a caller choice; nothing in the
    construction pins it down.
    """
    n_arr = np.asarray(n_list, dtype=int)
    if len(n_arr) != len(z.gammas):
        raise ValueError(f"{len(z.gammas)} zeros but {len(n_arr)} indices")
    rows: list[ZeroMapRow] = []
    for n, gamma in zip(n_arr, z.gammas):
        triple = energy_from_gamma(int(n), float(gamma))
        m = product_dea(triple)
        tr = complex(m[0, 0] + m[1, 1])
        det = complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
        target_det = 4.0 * triple.n * triple.n * triple.energy
        lam_minus, lam_plus = eigen2x2(m)
        if lam_plus.imag < lam_minus.imag:
            lam_plus, lam_minus = lam_minus, lam_plus
        rows.append(
            ZeroMapRow(
                n=int(n),
                gamma=float(gamma),
                energy=triple.energy,
                lam_plus=lam_plus,
                trace_residual=abs(tr - 1.0),
                det_residual=abs(det - target_det) / target_det,
                re_residual=abs(lam_plus.real - 0.5),
                im_residual=abs(lam_plus.imag - float(gamma)),
                critical=on_critical_line(triple),
            )
        )
    return rows
