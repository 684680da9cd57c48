"""Critical-line zeta values, Hardy Z, and zero location by bisection.

zeta(s) is evaluated by Euler-Maclaurin continuation of the Dirichlet series
sum n^(-s):

    zeta(s) ~= sum_{n<N} n^(-s) + N^(1-s)/(s-1) + N^(-s)/2
               + sum_{k=1}^{K} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)

with the rigorous remainder bound |R| <= |first omitted term| * |s+2K+1| /
(sigma+2K+1).  The error bound returned next to each value is that remainder
plus a double-precision round-off allowance for the partial sum, so it holds
for the value as actually computed.  The default N ~= 3|t| + 20 with six
Bernoulli terms keeps the bound far below the 1e-9 zero tolerance for
t <= 500, which covers the first couple hundred zeros.

Zeros are sign changes of Z(t) = Re[exp(i theta(t)) zeta(1/2 + it)] with the
theta asymptotic below; the scan floor t >= 10 keeps that asymptotic well
inside double precision.  Each scan validates its zero count against the
smooth counting function and refuses to return silently short lists.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

# B_2, B_4, ..., B_18; the ninth entry only ever feeds the remainder bound
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
)

SCAN_FLOOR = 10.0


class MissedZeroError(RuntimeError):
    """Scan count disagrees with the smooth counting function."""


class PrecisionError(RuntimeError):
    """Rotated zeta failed its internal consistency check."""


@dataclass
class ZeroList:
    """Ascending imaginary parts of nontrivial zeros."""

    gammas: np.ndarray
    source: str = "computed"
    precision: float = 1e-9

    def __post_init__(self):
        self.gammas = np.asarray(self.gammas, dtype=float)
        if self.source not in ("computed", "file"):
            raise ValueError(f"source must be 'computed' or 'file', got {self.source!r}")
        if np.any(self.gammas <= 0):
            raise ValueError("zero ordinates must be positive")
        if np.any(np.diff(self.gammas) <= 0):
            raise ValueError("zero ordinates must be strictly increasing")
        if self.source == "computed" and len(self.gammas) and self.gammas[0] <= SCAN_FLOOR:
            raise ValueError("computed zeros must lie above the scan floor")

    def __len__(self) -> int:
        return len(self.gammas)


def default_n_terms(t: float) -> int:
    return int(3 * abs(t) + 20)


def zeta_em(
    sigma: float, t: float, n_terms: int | None = None, bernoulli_terms: int = 6
) -> tuple[complex, float]:
    """Euler-Maclaurin zeta value and a rigorous absolute-error bound."""
    s = complex(sigma, t)
    if s == 1:
        raise ValueError("zeta has a pole at s = 1")
    if n_terms is None:
        n_terms = default_n_terms(t)
    if n_terms < max(10, abs(t)):
        raise ValueError(f"n_terms={n_terms} below the floor max(10, |t|)={max(10, abs(t)):.1f}")
    if not 0 <= bernoulli_terms <= 8:
        raise ValueError(f"bernoulli_terms must be within 0..8, got {bernoulli_terms}")
    big_n = int(n_terms)
    n = np.arange(1, big_n, dtype=float)
    head = complex(np.sum(n ** (-s)))
    value = head + big_n ** (1 - s) / (s - 1) + 0.5 * big_n ** (-s)
    rising = s  # s(s+1)...(s+2k-2), built incrementally
    fact = 2.0  # (2k)!
    npow = big_n ** (-s - 1)  # N^(-s-2k+1)
    truncation = 0.0
    for k in range(1, bernoulli_terms + 2):
        term = (_BERNOULLI[k - 1] / fact) * rising * npow
        if k <= bernoulli_terms:
            value += term
            rising *= (s + (2 * k - 1)) * (s + 2 * k)
            fact *= (2 * k + 1) * (2 * k + 2)
            npow /= big_n * big_n
        else:
            truncation = abs(term) * abs(s + 2 * bernoulli_terms + 1) / (
                sigma + 2 * bernoulli_terms + 1
            )
            break
    # the bound must hold for the value as computed, so cover the round-off
    # accumulated over the partial sum as well as the analytic remainder
    eps = 2.220446049250313e-16
    rounding = eps * (math.log2(big_n) + 8.0) * (float(np.sum(n ** (-sigma))) + abs(value))
    return value, truncation + rounding


def rs_theta(t: float) -> float:
    """Phase theta(t) of the rotation making zeta real on the critical line.

    Asymptotic form, monotone increasing and accurate to ~4e-9 at the floor
    t = 10, improving rapidly with t.
    """
    if t < SCAN_FLOOR:
        raise ValueError(f"theta asymptotic needs t >= {SCAN_FLOOR}, got {t}")
    return (
        (t / 2.0) * math.log(t / (2.0 * math.pi))
        - t / 2.0
        - math.pi / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t**3)
    )


def hardy_z(t: float, n_terms: int | None = None, bernoulli_terms: int = 6) -> float:
    """Z(t) = Re[exp(i theta) zeta(1/2 + it)]; real up to the phase accuracy."""
    if t < SCAN_FLOOR:
        raise ValueError(f"hardy_z needs t >= {SCAN_FLOOR}, got {t}")
    z, _ = zeta_em(0.5, t, n_terms=n_terms, bernoulli_terms=bernoulli_terms)
    w = cmath.exp(1j * rs_theta(t)) * z
    if abs(w.imag) > 1e-6:
        raise PrecisionError(
            f"rotated zeta at t={t} has imaginary part {w.imag:.3e}; "
            "increase n_terms"
        )
    return w.real


def zero_count_rvm(T: float) -> float:
    """Smooth count of zeros with ordinate in (0, T]."""
    if T < SCAN_FLOOR:
        raise ValueError(f"smooth count needs T >= {SCAN_FLOOR}, got {T}")
    return (T / (2.0 * math.pi)) * math.log(T / (2.0 * math.pi * math.e)) + 7.0 / 8.0


def _bisect_zero(lo: float, hi: float, z_lo: float, tol: float) -> float:
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        z_mid = hardy_z(mid)
        if z_mid == 0.0:
            return mid
        if (z_lo < 0) == (z_mid < 0):
            lo, z_lo = mid, z_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_zeros(t_min: float, t_max: float, scan_step: float = 0.25) -> ZeroList:
    """Locate zeros in (t_min, t_max) by sign-change scan plus bisection.

    The count is validated against the smooth counting function; since sign
    changes can only miss zeros in pairs, a discrepancy >= 1.5 (well above
    the known sub-unit wobble of the exact count around the smooth one at
    these heights) raises MissedZeroError.
    """
    if not SCAN_FLOOR <= t_min < t_max:
        raise ValueError(f"need {SCAN_FLOOR} <= t_min < t_max, got ({t_min}, {t_max})")
    if not 0 < scan_step <= 0.25:
        raise ValueError(f"scan_step must be in (0, 0.25], got {scan_step}")
    steps = int(math.ceil((t_max - t_min) / scan_step))
    grid = np.linspace(t_min, t_max, steps + 1)
    zvals = [hardy_z(float(t)) for t in grid]
    zeros: list[float] = []
    tol = 1e-9
    for i in range(steps):
        z0, z1 = zvals[i], zvals[i + 1]
        if z0 == 0.0:
            zeros.append(float(grid[i]))
            continue
        if z1 == 0.0:
            continue  # appended when the scan reaches it
        if (z0 < 0) != (z1 < 0):
            zeros.append(_bisect_zero(float(grid[i]), float(grid[i + 1]), z0, tol))
    if zvals[-1] == 0.0:
        zeros.append(float(grid[-1]))
    # collapse accidental duplicates from grid-point hits
    dedup: list[float] = []
    for z in zeros:
        if dedup and z - dedup[-1] < 1e-7:
            continue
        dedup.append(z)
    expected = zero_count_rvm(t_max) - zero_count_rvm(t_min)
    if abs(len(dedup) - expected) >= 1.5:
        raise MissedZeroError(
            f"found {len(dedup)} zeros in ({t_min}, {t_max}) but the smooth count "
            f"predicts {expected:.2f}; rerun with a smaller scan_step"
        )
    return ZeroList(gammas=np.array(dedup), source="computed", precision=tol)


def load_zeros_file(path) -> ZeroList:
    """Parse a zero-list text file: one decimal per line, ascending, '#' comments."""
    gammas: list[float] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                g = float(line)
            except ValueError:
                raise ValueError(f"{path}: line {lineno}: not a decimal number: {line!r}") from None
            if not math.isfinite(g) or g <= 0:
                raise ValueError(f"{path}: line {lineno}: zero ordinate must be positive")
            if gammas and g <= gammas[-1]:
                raise ValueError(f"{path}: line {lineno}: not strictly increasing")
            gammas.append(g)
    return ZeroList(gammas=np.array(gammas), source="file", precision=1e-9)


def format_zero(g: float) -> str:
    """Canonical rendering: nine decimal places, no exponent."""
    return f"{g:.9f}"


def write_zeros_file(z: ZeroList, path, header_lines=()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for line in header_lines:
            fh.write(f"# {line}\n")
        for g in z.gammas:
            fh.write(format_zero(float(g)) + "\n")
