"""Samplers for the Gaussian orthogonal, unitary, and bilinear ensembles.

Entry variances follow from the matrix density exp(-r * tr M^2): a factor
exp(-r x^2) on a diagonal entry is a centered Gaussian with Var = 1/(2r),
and the factor exp(-2r x^2) carried by each off-diagonal degree of freedom
(the entry itself for a real symmetric matrix; the real and imaginary parts
separately for a Hermitian one) gives Var = 1/(4r).

The bilinear ensemble draws an upper-triangular Gaussian factor and returns
its Gram matrix, so its eigenvalues are squared singular values of the
factor and are nonnegative by construction.

Entry layout per sample: stream 0 holds the diagonal (r draws), stream 1 the
strict upper triangle in row-major order, stream 2 (Hermitian case) the
imaginary parts of the strict upper triangle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import rng

KINDS = ("goe", "gue", "bilinear")

_DIAG, _UPPER, _UPPER_IM = 0, 1, 2


@dataclass(frozen=True)
class EnsembleConfig:
    """Which ensemble to draw from, at what order, under which seed.

    The draw for a given ``(kind, order_r, seed, index)`` never depends on
    ``samples``; that field only bounds the index range.
    """

    kind: str
    order_r: int
    seed: int
    samples: int

    def __post_init__(self):
        object.__setattr__(self, "kind", str(self.kind).lower())
        if self.kind not in KINDS:
            raise ValueError(f"unknown ensemble kind {self.kind!r}; expected one of {KINDS}")
        if self.order_r < 1:
            raise ValueError(f"order_r must be >= 1, got {self.order_r}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def _check_draw(cfg: EnsembleConfig, kind: str, index: int) -> None:
    if cfg.kind != kind:
        raise ValueError(f"config is for ensemble {cfg.kind!r}, not {kind!r}")
    if not 0 <= index < cfg.samples:
        raise ValueError(f"sample index {index} outside 0..{cfg.samples - 1}")


def sample_goe(cfg: EnsembleConfig, index: int) -> np.ndarray:
    """One real symmetric draw: diagonal Var 1/(2r), off-diagonal Var 1/(4r)."""
    _check_draw(cfg, "goe", index)
    r = cfg.order_r
    m = np.zeros((r, r))
    if r > 1:
        upper = rng.standard_normal(cfg.seed, index, _UPPER, r * (r - 1) // 2)
        m[np.triu_indices(r, 1)] = upper * math.sqrt(1.0 / (4.0 * r))
        m += m.T
    diag = rng.standard_normal(cfg.seed, index, _DIAG, r)
    m[np.diag_indices(r)] = diag * math.sqrt(1.0 / (2.0 * r))
    return m


def sample_gue(cfg: EnsembleConfig, index: int) -> np.ndarray:
    """One Hermitian draw: diagonal Var 1/(2r), Re/Im off-diagonal Var 1/(4r) each."""
    _check_draw(cfg, "gue", index)
    r = cfg.order_r
    m = np.zeros((r, r), dtype=complex)
    if r > 1:
        k = r * (r - 1) // 2
        scale = math.sqrt(1.0 / (4.0 * r))
        re = rng.standard_normal(cfg.seed, index, _UPPER, k) * scale
        im = rng.standard_normal(cfg.seed, index, _UPPER_IM, k) * scale
        m[np.triu_indices(r, 1)] = re + 1j * im
        m += m.conj().T
    diag = rng.standard_normal(cfg.seed, index, _DIAG, r)
    m[np.diag_indices(r)] = diag * math.sqrt(1.0 / (2.0 * r))
    return m


def sample_bilinear(cfg: EnsembleConfig, index: int) -> tuple[np.ndarray, np.ndarray]:
    """One bilinear draw: (TG, G) with G = TG^T TG.

    TG is upper triangular including the diagonal (lower triangle stored as
    explicit zeros), with Gaussian entries of Var 1/(2r) on the diagonal and
    1/(4r) above it.  G is symmetric positive semidefinite by construction.
    """
    _check_draw(cfg, "bilinear", index)
    r = cfg.order_r
    tg = np.zeros((r, r))
    tg[np.diag_indices(r)] = rng.standard_normal(cfg.seed, index, _DIAG, r) * math.sqrt(
        1.0 / (2.0 * r)
    )
    if r > 1:
        upper = rng.standard_normal(cfg.seed, index, _UPPER, r * (r - 1) // 2)
        tg[np.triu_indices(r, 1)] = upper * math.sqrt(1.0 / (4.0 * r))
    g = tg.T @ tg
    # mirror the upper triangle so symmetry holds exactly, not just to roundoff
    g = np.triu(g) + np.triu(g, 1).T
    return tg, g
