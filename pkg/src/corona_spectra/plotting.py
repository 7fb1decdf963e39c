"""Figures written next to the CLI's JSON/CSV reports."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .expander import f_nk, g_nk  # noqa: E402

_RC = {
    "font.size": 10,
    "axes.titlesize": 11,
    "axes.labelsize": 10,
    "lines.linewidth": 1.2,
    "legend.frameon": False,
    "svg.hashsalt": "corona-spectra",
}

# no timestamps or version strings, so repeated runs give identical files
_META = {"png": {"Software": None}, "svg": {"Date": None, "Creator": None}, "pdf": {"CreationDate": None, "Producer": None, "Creator": None}}


def pretty_plot(width=7.0, height=None, nrows=1, ncols=1):
    if height is None:
        height = width * (math.sqrt(5) - 1) / 2
    with plt.rc_context(_RC):
        fig, axes = plt.subplots(nrows, ncols, figsize=(width, height))
    return fig, axes


def save(fig, path):
    path = str(path)
    ext = path.rsplit(".", 1)[-1].lower()
    with plt.rc_context(_RC):
        fig.tight_layout()
        fig.savefig(path, dpi=120, metadata=_META.get(ext))
    plt.close(fig)


def plot_spectrum_comparison(closed, oracle, path, title=""):
    closed = np.sort(np.asarray(closed, dtype=float))
    oracle = np.sort(np.asarray(oracle, dtype=float))
    fig, (ax, ax2) = pretty_plot(8, 3.6, ncols=2)
    idx = np.arange(len(closed))
    ax.plot(idx, oracle, "o", mfc="none", ms=7, label="oracle eigensolve")
    ax.plot(idx[: len(closed)], closed, "x", ms=5, label="closed form")
    ax.set_xlabel("index")
    ax.set_ylabel("eigenvalue")
    ax.set_title(title)
    ax.legend()
    if len(closed) == len(oracle):
        dev = np.abs(closed - oracle)
        ax2.semilogy(idx, np.maximum(dev, 1e-18), ".")
        ax2.axhline(1e-8, color="k", ls="--", lw=0.8)
    ax2.set_xlabel("index")
    ax2.set_ylabel("|closed - oracle|")
    save(fig, path)


def plot_family(report, path):
    names = [mb.name or str(i) for i, mb in enumerate(report.members)]
    a = [mb.a for mb in report.members]
    fig, ax = pretty_plot(6, 3.6)
    x = np.arange(len(names))
    ax.bar(x - 0.2, a, 0.4, label="a(augmented)")
    if all(mb.a_corona is not None for mb in report.members):
        ax.bar(x + 0.2, [mb.a_corona for mb in report.members], 0.4, label="a(corona)")
    ax.axhline(report.delta, color="k", ls="--", lw=0.8, label="delta(n, k, eps)")
    ax.set_xticks(x)
    ax.set_xticklabels(names)
    ax.set_ylabel("algebraic connectivity")
    ax.legend()
    save(fig, path)


def plot_scalars(n, k, path):
    xs = np.linspace(0, (2 * n + 1) * k / n, 400)
    fig, ax = pretty_plot(6, 3.6)
    ax.plot(xs, [f_nk(n, k, x) for x in xs], label=f"f_{{{n},{k}}}")
    ax.plot(xs, [g_nk(n, k, x) for x in xs], label=f"g_{{{n},{k}}}")
    ax.axvline(k, color="k", ls=":", lw=0.8)
    ax.set_xlabel("x")
    ax.legend()
    save(fig, path)
