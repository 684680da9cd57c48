"""Spacing statistics, unfolding maps, reference curves, and comparisons.

Spacing sequences are k-th differences of sorted level lists.  Each sequence
splits into a fixed part (its minimum, the largest constant leaving the
variable part nonnegative) plus a variable remainder.  Unfolding rescales a
level list by its smooth integrated density so the mean spacing is one,
which is what makes spacings from different systems comparable: matrix
spectra unfold through the semicircle CDF, zero lists through the smooth
counting function (T/2pi) ln(T/(2 pi e)) + 7/8.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .eigensolve import Spectrum
from .zeta import ZeroList

UNFOLD_METHODS = ("semicircle", "zeta-smooth-count", "none")
KS_REFERENCES = ("wigner-beta1", "wigner-beta2", "exponential")


@dataclass
class SpacingSeries:
    k: int
    deltas: np.ndarray
    source: str = ""

    def __post_init__(self):
        self.deltas = np.asarray(self.deltas, dtype=float)
        if self.k < 1:
            raise ValueError(f"spacing order k must be >= 1, got {self.k}")


@dataclass
class UnfoldedSeries:
    values: np.ndarray
    method: str

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.method not in UNFOLD_METHODS:
            raise ValueError(f"unknown unfolding method {self.method!r}")


@dataclass
class BoundRow:
    j: int
    lhs: float
    rhs: float
    satisfied: bool


@dataclass
class BoundReport:
    rows: list[BoundRow] = field(default_factory=list)

    @property
    def satisfied_fraction(self) -> float:
        if not self.rows:
            return float("nan")
        return sum(r.satisfied for r in self.rows) / len(self.rows)


@dataclass
class ComparisonResult:
    ks: float
    mean_abs_gap: float
    n_a: int
    n_b: int


def spacings(values, k: int, source: str = "") -> SpacingSeries:
    """k-th spacings delta[j] = values[j + k] - values[j] of a sorted list.

    Computed as windowed sums of the consecutive spacings, so the telescoping
    identity (a k-th spacing is the sum of its k consecutive spacings) holds
    bitwise, not just to roundoff.
    """
    v = np.asarray(values, dtype=float)
    if v.ndim != 1:
        raise ValueError("values must be one-dimensional")
    if np.any(np.diff(v) < 0):
        raise ValueError("values must be sorted ascending")
    if not 1 <= k < len(v):
        raise ValueError(f"need 1 <= k < {len(v)}, got k={k}")
    d1 = np.diff(v)
    n_out = len(v) - k
    deltas = d1[:n_out].copy()
    for i in range(1, k):
        deltas += d1[i : i + n_out]
    return SpacingSeries(k=k, deltas=deltas, source=source)


def decompose_fixed_variable(s: SpacingSeries) -> tuple[float, SpacingSeries]:
    """Split spacings into a constant part (the minimum) plus a variable part.

    The variable part is nudged by at most one ulp per entry so that
    ``fixed + variable == deltas`` holds exactly in floating point.
    """
    if len(s.deltas) == 0:
        raise ValueError("cannot decompose an empty spacing series")
    fixed = float(np.min(s.deltas))
    variable = s.deltas - fixed
    for _ in range(3):
        recon = fixed + variable
        bad = recon != s.deltas
        if not np.any(bad):
            break
        variable[bad] = np.nextafter(
            variable[bad], np.where(recon[bad] > s.deltas[bad], -np.inf, np.inf)
        )
    else:  # pragma: no cover - one ulp always suffices
        raise AssertionError("reconstruction failed to converge")
    return fixed, SpacingSeries(k=s.k, deltas=variable, source=(s.source + " variable").strip())


def _semicircle_cdf(x: np.ndarray, radius: float) -> np.ndarray:
    x = np.clip(x, -radius, radius)
    return 0.5 + (x * np.sqrt(radius**2 - x**2) + radius**2 * np.arcsin(x / radius)) / (
        math.pi * radius**2
    )


def _check_unit_mean(values: np.ndarray, method: str) -> None:
    if len(values) >= 50:
        mean = float(np.mean(np.diff(values)))
        if not 0.8 <= mean <= 1.2:
            raise ValueError(
                f"{method} unfolding produced mean spacing {mean:.3f}, outside [0.8, 1.2]; "
                "input does not look like a full spectrum at the expected scaling"
            )


def unfold_semicircle(s: Spectrum) -> UnfoldedSeries:
    """Map a spectrum through r * F(x), F the semicircle CDF of its ensemble.

    The unitary/bilinear scaling has support [-sqrt(2), sqrt(2)]; the
    orthogonal one at the same density exponent has support [-1, 1].  Values
    outside the support clamp to CDF 0 or 1.
    """
    radius = 1.0 if s.ensemble == "goe" else math.sqrt(2.0)
    out = s.order * _semicircle_cdf(s.values, radius)
    out = np.maximum.accumulate(out)  # clamping can flatten ties at the edges
    _check_unit_mean(out, "semicircle")
    return UnfoldedSeries(values=out, method="semicircle")


def unfold_zeta(z: ZeroList) -> UnfoldedSeries:
    """Map zero ordinates through the smooth counting function."""
    g = z.gammas
    low = np.nonzero(g < 10.0)[0]
    if len(low):
        raise ValueError(
            f"zeros below the unfolding floor 10 at indices {low.tolist()[:8]}"
        )
    out = (g / (2 * math.pi)) * np.log(g / (2 * math.pi * math.e)) + 7.0 / 8.0
    _check_unit_mean(out, "zeta-smooth-count")
    return UnfoldedSeries(values=out, method="zeta-smooth-count")


def wigner_surmise(s, beta: int):
    """Nearest-neighbor spacing surmise at unit mean for beta = 1 or 2."""
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise ValueError("spacing must be nonnegative")
    if beta == 1:
        out = (math.pi / 2.0) * s * np.exp(-math.pi * s**2 / 4.0)
    elif beta == 2:
        out = (32.0 / math.pi**2) * s**2 * np.exp(-4.0 * s**2 / math.pi)
    else:
        raise ValueError(f"beta must be 1 or 2, got {beta}")
    return out if out.ndim else float(out)


def wigner_cdf(s, beta: int):
    """Closed-form CDF of the surmise."""
    s = np.asarray(s, dtype=float)
    if beta == 1:
        out = 1.0 - np.exp(-math.pi * s**2 / 4.0)
    elif beta == 2:
        erf = np.vectorize(math.erf)
        out = erf(2.0 * s / math.sqrt(math.pi)) - (4.0 * s / math.pi) * np.exp(
            -4.0 * s**2 / math.pi
        )
    else:
        raise ValueError(f"beta must be 1 or 2, got {beta}")
    return out if out.ndim else float(out)


def montgomery_reference(u: float) -> float:
    """Pair-correlation reference 1 - (sin(pi u) / (pi u))^2, zero at u = 0."""
    if u == 0.0:
        return 0.0
    x = math.pi * u
    return 1.0 - (math.sin(x) / x) ** 2


def pair_correlation_estimator(u: UnfoldedSeries, grid, bin_width: float) -> np.ndarray:
    """Density of ordered pair differences around each grid point.

    For each center c, counts ordered pairs (i != j) whose difference
    w_j - w_i lies in [c - bw/2, c + bw/2), normalized by N * bin_width.
    """
    w = u.values
    if len(w) < 50:
        raise ValueError(f"need at least 50 unfolded values, got {len(w)}")
    if bin_width <= 0:
        raise ValueError(f"bin_width must be positive, got {bin_width}")
    diffs = (w[None, :] - w[:, None])[~np.eye(len(w), dtype=bool)]
    out = np.empty(len(grid))
    for i, c in enumerate(np.asarray(grid, dtype=float)):
        lo, hi = c - bin_width / 2.0, c + bin_width / 2.0
        out[i] = np.count_nonzero((diffs >= lo) & (diffs < hi)) / (len(w) * bin_width)
    return out


def _reference_cdf(x: np.ndarray, reference: str) -> np.ndarray:
    if reference == "wigner-beta1":
        return wigner_cdf(x, 1)
    if reference == "wigner-beta2":
        return wigner_cdf(x, 2)
    if reference == "exponential":
        return 1.0 - np.exp(-x)
    raise ValueError(f"unknown reference {reference!r}; expected one of {KS_REFERENCES}")


def ks_distance(sample, reference: str) -> float:
    """Sup-norm distance between the empirical CDF and a reference CDF."""
    x = np.sort(np.asarray(sample, dtype=float))
    if len(x) == 0:
        raise ValueError("sample is empty")
    f = _reference_cdf(x, reference)
    i = np.arange(1, len(x) + 1, dtype=float)
    return float(max(np.max(np.abs(f - i / len(x))), np.max(np.abs(f - (i - 1) / len(x)))))


def two_sample_ks(a, b) -> float:
    """Two-sample Kolmogorov-Smirnov statistic."""
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if len(a) == 0 or len(b) == 0:
        raise ValueError("samples must be nonempty")
    allv = np.concatenate([a, b])
    allv.sort()
    fa = np.searchsorted(a, allv, side="right") / len(a)
    fb = np.searchsorted(b, allv, side="right") / len(b)
    return float(np.max(np.abs(fa - fb)))


def check_spacing_bound(z: ZeroList) -> BoundReport:
    """Tabulate delta gamma_j vs gamma_{j+1} / (j+1) for every consecutive pair.

    Reports only; the inequality is known to fail at small j, so nothing is
    asserted here.
    """
    g = z.gammas
    if len(g) < 2:
        raise ValueError("need at least two zeros")
    report = BoundReport()
    for j in range(1, len(g)):
        lhs = float(g[j] - g[j - 1])
        rhs = float(g[j] / (j + 1))
        report.rows.append(BoundRow(j=j, lhs=lhs, rhs=rhs, satisfied=lhs > rhs))
    return report


def mean_abs_gap(spac_a, spac_b) -> float:
    """Mean absolute difference of sorted spacings, trimmed to common length.

    When lengths differ, the longer sorted array is subsampled at evenly
    strided ranks so both sides cover the same quantile range.
    """
    a = np.sort(np.asarray(spac_a, dtype=float))
    b = np.sort(np.asarray(spac_b, dtype=float))
    n = min(len(a), len(b))
    if n == 0:
        raise ValueError("spacing samples must be nonempty")
    if len(a) > n:
        a = a[np.round(np.linspace(0, len(a) - 1, n)).astype(int)]
    if len(b) > n:
        b = b[np.round(np.linspace(0, len(b) - 1, n)).astype(int)]
    return float(np.mean(np.abs(a - b)))


def compare_spacing_distributions(a: UnfoldedSeries, b: UnfoldedSeries) -> ComparisonResult:
    """KS distance and mean absolute gap between consecutive-spacing samples."""
    if len(a.values) < 50 or len(b.values) < 50:
        raise ValueError("both series need at least 50 values")
    sa = spacings(a.values, 1).deltas
    sb = spacings(b.values, 1).deltas
    return ComparisonResult(
        ks=two_sample_ks(sa, sb),
        mean_abs_gap=mean_abs_gap(sa, sb),
        n_a=len(sa),
        n_b=len(sb),
    )


def bulk(values, fraction: float = 0.6) -> np.ndarray:
    """Middle fraction of a sorted list, used to avoid spectral-edge effects."""
    v = np.asarray(values, dtype=float)
    if not 0 < fraction <= 1:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    n = len(v)
    drop = int(round(n * (1.0 - fraction) / 2.0))
    return v[drop : n - drop]
