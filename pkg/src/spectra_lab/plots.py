"""Figure rendering for the CLI report path.

Each helper writes one PNG next to the delimited output it illustrates.
Figures are a convenience view; the CSV/JSON files remain the data of
record.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .spectral_stats import wigner_surmise

_DPI = 130


def _finish(fig, ax, path, title, xlabel, ylabel):
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def eigenvalue_histogram(values, ensemble, order, path):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(values, bins=60, density=True, alpha=0.7, label="eigenvalues")
    if ensemble in ("goe", "gue"):
        radius = 1.0 if ensemble == "goe" else math.sqrt(2.0)
        x = np.linspace(-radius, radius, 400)
        rho = 2.0 * np.sqrt(radius**2 - x**2) / (math.pi * radius**2)
        ax.plot(x, rho, lw=1.5, label="semicircle")
    ax.legend(frameon=False)
    _finish(fig, ax, path, f"{ensemble} r={order}", "eigenvalue", "density")


def spacing_histogram(deltas, path, title="spacings"):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(deltas, bins=40, density=True, alpha=0.7, label="observed")
    s = np.linspace(0, max(3.5, float(np.max(deltas)) if len(deltas) else 3.5), 300)
    ax.plot(s, wigner_surmise(s, 1), lw=1.2, label="surmise beta=1")
    ax.plot(s, wigner_surmise(s, 2), lw=1.2, label="surmise beta=2")
    ax.plot(s, np.exp(-s), lw=1.2, ls="--", label="Poisson")
    ax.legend(frameon=False)
    _finish(fig, ax, path, title, "spacing", "density")


def zero_staircase(gammas, rvm, path):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.step(gammas, np.arange(1, len(gammas) + 1), where="post", label="counted zeros")
    t = np.linspace(float(gammas[0]), float(gammas[-1]), 400)
    ax.plot(t, [rvm(v) for v in t], lw=1.2, label="smooth count")
    ax.legend(frameon=False)
    _finish(fig, ax, path, "zero counting staircase", "t", "N(t)")


def comparison_histogram(spac_a, spac_b, labels, path):
    fig, ax = plt.subplots(figsize=(6, 4))
    top = max(float(np.max(spac_a)), float(np.max(spac_b)))
    bins = np.linspace(0, max(3.5, top), 41)
    ax.hist(spac_a, bins=bins, density=True, alpha=0.55, label=labels[0])
    ax.hist(spac_b, bins=bins, density=True, alpha=0.55, label=labels[1])
    s = np.linspace(0, bins[-1], 300)
    ax.plot(s, wigner_surmise(s, 2), lw=1.2, color="k", label="surmise beta=2")
    ax.legend(frameon=False)
    _finish(fig, ax, path, "unfolded spacing comparison", "spacing", "density")


def lambda_scatter(lams, path):
    fig, ax = plt.subplots(figsize=(5, 5))
    re = [z.real for z in lams]
    im = [z.imag for z in lams]
    ax.scatter(re, im, s=12, alpha=0.8)
    ax.axvline(0.5, color="k", lw=0.8, ls="--", label="Re = 1/2")
    ax.legend(frameon=False)
    _finish(fig, ax, path, "eigenvalue pairs", "Re", "Im")


def kernel_curve(x, kxx, order, path):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(x, kxx, lw=1.4)
    _finish(fig, ax, path, f"level density, {order} terms", "x", "K(x, x)")
