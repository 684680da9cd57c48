"""Symmetric and Hermitian eigenvalues without a LAPACK dependency.

Dense symmetric matrices are reduced to tridiagonal form by Householder
reflections; the tridiagonal problem is solved by QL iteration with implicit
Wilkinson shifts and deflation.  Hermitian matrices go through the real
2r x 2r embedding [[A, -B], [B, A]] (A = Re, B = Im), whose spectrum is the
Hermitian spectrum with every eigenvalue doubled; the doubles are merged by
sorted adjacent pairing.  Eigenvectors are never computed.

The QL sweep is the hot loop of every Monte Carlo experiment, so it is
compiled with numba when available; the pure-Python body is kept as a
fallback and as the reference for what the compiled kernel does.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class SolverFailure(RuntimeError):
    """QL iteration failed to deflate within the sweep budget."""

    def __init__(self, index: int):
        super().__init__(f"eigenvalue {index} failed to deflate within 30 sweeps")
        self.index = index


class PairingError(RuntimeError):
    """Adjacent-pair merge of an embedded Hermitian spectrum broke tolerance."""


@dataclass
class SymTriMatrix:
    """Symmetric tridiagonal matrix stored as its two bands."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        self.diag = np.asarray(self.diag, dtype=float)
        self.offdiag = np.asarray(self.offdiag, dtype=float)
        if self.diag.ndim != 1 or self.offdiag.ndim != 1:
            raise ValueError("bands must be one-dimensional")
        if len(self.offdiag) != max(len(self.diag) - 1, 0):
            raise ValueError(
                f"offdiag length {len(self.offdiag)} does not match diag length {len(self.diag)}"
            )
        if not (np.all(np.isfinite(self.diag)) and np.all(np.isfinite(self.offdiag))):
            raise ValueError("non-finite entry in tridiagonal bands")

    @property
    def order(self) -> int:
        return len(self.diag)

    def dense(self) -> np.ndarray:
        m = np.diag(self.diag)
        if len(self.offdiag):
            m += np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
        return m


@dataclass
class Spectrum:
    """Sorted real eigenvalues plus provenance."""

    values: np.ndarray
    order: int
    ensemble: str = "unknown"
    meta: str = ""

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if len(self.values) != self.order:
            raise ValueError(f"{len(self.values)} values for declared order {self.order}")
        if np.any(np.diff(self.values) < 0):
            raise ValueError("spectrum values must be sorted ascending")


def _ql_implicit(d, e, max_sweeps):
    # QL with implicit Wilkinson shift on bands (d, e); e is padded to len(d)
    # with e[n-1] == 0.  In-place; returns the first index that failed to
    # deflate, or -1 on success.
    n = d.shape[0]
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= 2.220446049250313e-16 * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                return l
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = np.hypot(g, 1.0)
            if g >= 0.0:
                g = d[m] - d[l] + e[l] / (g + r)
            else:
                g = d[m] - d[l] + e[l] / (g - r)
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = np.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return -1


try:  # the kernel is ours either way; numba only compiles it
    from numba import njit

    _ql_kernel = njit(cache=True)(_ql_implicit)
except ImportError:  # pragma: no cover - numba is a declared dependency
    _ql_kernel = _ql_implicit


def tridiagonalize(m: np.ndarray) -> SymTriMatrix:
    """Householder reduction of a symmetric matrix to tridiagonal form.

    Orders 1 and 2 are already tridiagonal and pass through unchanged.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite entry in input matrix")
    if not np.array_equal(a, a.T):
        raise ValueError("input matrix is not exactly symmetric")
    n = a.shape[0]
    if n == 1:
        return SymTriMatrix(np.array([a[0, 0]]), np.zeros(0))
    e = np.zeros(n - 1)
    for k in range(n - 2):
        x = a[k + 1:, k]
        alpha = float(np.linalg.norm(x))
        if alpha == 0.0:
            e[k] = 0.0
            continue
        if x[0] > 0:
            alpha = -alpha
        v = x.copy()
        v[0] -= alpha
        vnorm2 = float(v @ v)
        if vnorm2 == 0.0:
            e[k] = alpha
            continue
        sub = a[k + 1:, k + 1:]
        w = sub @ v * (2.0 / vnorm2)
        w -= (float(v @ w) / vnorm2) * v
        sub -= np.outer(w, v)
        sub -= np.outer(v, w)
        e[k] = alpha
    e[n - 2] = a[n - 1, n - 2]
    return SymTriMatrix(np.diag(a).copy(), e)


def eig_symtri(t: SymTriMatrix, *, ensemble: str = "unknown", meta: str = "") -> Spectrum:
    """All eigenvalues of a symmetric tridiagonal matrix, ascending.

    Raises SolverFailure (carrying the offending index) if any eigenvalue
    fails to deflate within 30 implicit-shift sweeps.
    """
    n = t.order
    d = t.diag.copy()
    e = np.zeros(n)
    if n > 1:
        e[: n - 1] = t.offdiag
    failed = int(_ql_kernel(d, e, 30))
    if failed >= 0:
        raise SolverFailure(failed)
    d.sort()
    return Spectrum(d, n, ensemble=ensemble, meta=meta or "eig_symtri")


def eig_dense_sym(m: np.ndarray, *, ensemble: str = "unknown", meta: str = "") -> Spectrum:
    """Householder reduction followed by tridiagonal QL."""
    return eig_symtri(tridiagonalize(m), ensemble=ensemble, meta=meta or "eig_dense_sym")


def eig_herm(m: np.ndarray, *, ensemble: str = "unknown", meta: str = "") -> Spectrum:
    """Eigenvalues of a Hermitian matrix via the doubled real embedding."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite entry in input matrix")
    if not np.array_equal(a, a.conj().T):
        raise ValueError("input matrix is not exactly Hermitian")
    r = a.shape[0]
    re, im = a.real.copy(), a.imag.copy()
    emb = np.block([[re, -im], [im, re]])
    # block assembly can break exact symmetry only if A, B do; both are exact here
    doubled = eig_symtri(tridiagonalize(emb)).values
    lo, hi = doubled[0::2], doubled[1::2]
    scale = max(1.0, float(np.max(np.abs(doubled))))
    gaps = np.abs(hi - lo)
    if np.any(gaps > 1e-8 * scale):
        worst = int(np.argmax(gaps))
        raise PairingError(
            f"adjacent pair {worst} of the embedded spectrum differs by {gaps[worst]:.3e} "
            f"(tolerance {1e-8 * scale:.3e}); input looks numerically defective"
        )
    values = (lo + hi) / 2.0
    return Spectrum(values, r, ensemble=ensemble, meta=meta or "eig_herm")


def sqrt_spectrum(s: Spectrum) -> Spectrum:
    """Elementwise square roots of a nonnegative spectrum.

    Negatives within -1e-12 * scale are roundoff from a Gram matrix and clamp
    to zero; anything more negative is a genuine domain error.
    """
    v = s.values.copy()
    scale = max(1.0, float(np.max(np.abs(v))) if len(v) else 1.0)
    floor = -1e-12 * scale
    if np.any(v < floor):
        worst = float(v.min())
        raise ValueError(f"spectrum value {worst} is negative beyond the clamp floor {floor}")
    v[v < 0.0] = 0.0
    out = np.sort(np.sqrt(v))
    return Spectrum(out, s.order, ensemble=s.ensemble, meta=(s.meta + " sqrt").strip())
