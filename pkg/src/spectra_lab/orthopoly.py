"""Orthogonal polynomials for the weight exp(-r x^2) and their kernel.

Monic polynomials P_i for this weight satisfy the three-term recurrence
x P_i = b_i P_{i-1} + a_i P_i + b_{i+1} P_{i+1} with

    a_i = 0,   b_i = i / (2r),   h_i = sqrt(pi/r) * i! / (2r)^i,

where h_i is the squared norm of P_i.  The symmetrized Jacobi matrix built
from these coefficients has the degree-n roots as its eigenvalues, which is
how roots and Gauss quadrature nodes are produced here.  The orthonormal
wave functions psi_i(x) = h_i^(-1/2) P_i(x) exp(-r x^2 / 2) are evaluated by
the stable forward recurrence on the orthonormal scaling, never by expanding
monomial coefficients.  Their running sum of squared values is the
Christoffel-Darboux kernel K(x, y) = sum_i psi_i(x) psi_i(y), whose m x m
determinants give the m-point correlation functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigensolve import SymTriMatrix, eig_symtri

# exp underflows below ~ -745; beyond that the half-weight is flushed to zero
_EXP_UNDERFLOW = 745.0


@dataclass(frozen=True)
class Recurrence:
    """Monic three-term recurrence coefficients; b[0] is unused (set to 0)."""

    rate_r: float
    a: np.ndarray
    b: np.ndarray
    h: np.ndarray

    def __len__(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class KernelEval:
    """Kernel with order_r wave-function terms at weight rate rate_r."""

    order_r: int
    rate_r: float

    def __post_init__(self):
        if self.order_r < 1:
            raise ValueError(f"order_r must be >= 1, got {self.order_r}")
        if self.rate_r <= 0:
            raise ValueError(f"rate_r must be positive, got {self.rate_r}")


def recurrence_coeffs(rate_r: float, max_degree: int) -> Recurrence:
    """Closed-form recurrence coefficients for degrees 0..max_degree."""
    if rate_r <= 0:
        raise ValueError(f"rate_r must be positive, got {rate_r}")
    if max_degree < 0:
        raise ValueError(f"max_degree must be >= 0, got {max_degree}")
    idx = np.arange(max_degree + 1, dtype=float)
    a = np.zeros(max_degree + 1)
    b = idx / (2.0 * rate_r)
    b[0] = 0.0
    h = np.array(
        [
            math.sqrt(math.pi / rate_r) * math.factorial(i) / (2.0 * rate_r) ** i
            for i in range(max_degree + 1)
        ]
    )
    return Recurrence(rate_r=float(rate_r), a=a, b=b, h=h)


def jacobi_matrix(rec: Recurrence, degree: int) -> SymTriMatrix:
    """Symmetrized Jacobi matrix whose eigenvalues are the degree-n roots."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if degree > len(rec):
        raise ValueError(f"degree {degree} exceeds recurrence length {len(rec)}")
    diag = rec.a[:degree].copy()
    off = np.sqrt(rec.b[1:degree])
    return SymTriMatrix(diag, off)


def polynomial_roots(rec: Recurrence, degree: int) -> np.ndarray:
    """Roots of the degree-n polynomial, ascending (symmetric about zero)."""
    return eig_symtri(jacobi_matrix(rec, degree), meta="polynomial_roots").values


def weight_underflows(x: float, rate_r: float) -> bool:
    """True when exp(-r x^2 / 2) flushes to zero in double precision."""
    return rate_r * x * x / 2.0 > _EXP_UNDERFLOW


def psi_block(count: int, x: float, rate_r: float) -> np.ndarray:
    """Values psi_0(x)..psi_{count-1}(x) by the orthonormal forward recurrence."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if rate_r <= 0:
        raise ValueError(f"rate_r must be positive, got {rate_r}")
    out = np.empty(count)
    if weight_underflows(x, rate_r):
        out[:] = 0.0
        return out
    prev = 0.0
    cur = (rate_r / math.pi) ** 0.25 * math.exp(-rate_r * x * x / 2.0)
    out[0] = cur
    for i in range(1, count):
        nxt = (x * cur - math.sqrt((i - 1) / (2.0 * rate_r)) * prev) / math.sqrt(
            i / (2.0 * rate_r)
        )
        prev, cur = cur, nxt
        out[i] = cur
    return out


def psi(i: int, x: float, rate_r: float) -> float:
    """Orthonormal wave function psi_i(x); returns 0.0 on weight underflow."""
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    return float(psi_block(i + 1, x, rate_r)[-1])


def _phi_block(count: int, x: float, rate_r: float) -> np.ndarray:
    # orthonormal polynomials without the half-weight; grows like exp(r x^2 / 2)
    out = np.empty(count)
    prev = 0.0
    cur = (rate_r / math.pi) ** 0.25
    out[0] = cur
    for i in range(1, count):
        nxt = (x * cur - math.sqrt((i - 1) / (2.0 * rate_r)) * prev) / math.sqrt(
            i / (2.0 * rate_r)
        )
        prev, cur = cur, nxt
        out[i] = cur
    return out


def gauss_hermite(rate_r: float, n: int, decayed: bool = False):
    """Gauss nodes and weights for the weight exp(-r x^2).

    With ``decayed=False`` the weights satisfy
    ``integral P(x) exp(-r x^2) dx == sum w_j P(x_j)`` exactly for polynomials
    up to degree 2n-1.  With ``decayed=True`` the returned weights absorb the
    weight function, for integrands that already carry their own Gaussian
    decay (products of psi values): ``integral g(x) dx ~= sum w_j g(x_j)``.
    """
    if n < 1:
        raise ValueError(f"node count must be >= 1, got {n}")
    rec = recurrence_coeffs(rate_r, n)
    nodes = polynomial_roots(rec, n)
    if decayed:
        weights = np.array([1.0 / np.sum(psi_block(n, x, rate_r) ** 2) for x in nodes])
    else:
        weights = np.array([1.0 / np.sum(_phi_block(n, x, rate_r) ** 2) for x in nodes])
    return nodes, weights


def cd_kernel(k: KernelEval, x: float, y: float) -> float:
    """Kernel K(x, y) as the direct sum of order_r wave-function products."""
    px = psi_block(k.order_r, x, k.rate_r)
    py = px if y == x else psi_block(k.order_r, y, k.rate_r)
    return float(px @ py)


def _det_partial_pivot(a: np.ndarray) -> float:
    # LU with partial pivoting; a is overwritten
    n = a.shape[0]
    det = 1.0
    for k in range(n):
        p = int(np.argmax(np.abs(a[k:, k]))) + k
        if a[p, k] == 0.0:
            return 0.0
        if p != k:
            a[[k, p]] = a[[p, k]]
            det = -det
        det *= a[k, k]
        if k + 1 < n:
            a[k + 1:, k + 1:] -= np.outer(a[k + 1:, k] / a[k, k], a[k, k + 1:])
    return det


def correlation_det(k: KernelEval, points, m: int) -> float:
    """m-point correlation: determinant of the kernel Gram matrix.

    R_1(x) is the level density K(x, x); repeated points give zero by the
    exact singularity of the Gram matrix.
    """
    pts = np.asarray(points, dtype=float)
    if not 1 <= m <= 8:
        raise ValueError(f"m must be within 1..8, got {m}")
    if pts.shape != (m,):
        raise ValueError(f"expected {m} points, got shape {pts.shape}")
    blocks = [psi_block(k.order_r, float(x), k.rate_r) for x in pts]
    gram = np.empty((m, m))
    for i in range(m):
        for j in range(i, m):
            gram[i, j] = gram[j, i] = float(blocks[i] @ blocks[j])
    return _det_partial_pivot(gram)
