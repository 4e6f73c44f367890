"""Coefficient-profile figures for the emitted tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .poly import Poly  # noqa: E402

RC = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 7,
    "figure.figsize": (5.0, 3.4),
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def _value(v) -> int:
    # q-polynomial entries are plotted through their value at q = 1
    return v(1) if isinstance(v, Poly) else v


def plot_table(name: str, rows: list[tuple[int, list]], path: str) -> str:
    """One line per n: coefficient index against coefficient (log scale)."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        for n, vals in rows:
            ys = [_value(v) for v in vals]
            xs = [k for k, y in enumerate(ys) if y > 0]
            if not xs:
                continue
            ax.plot(xs, [ys[k] for k in xs], marker="o", ms=3, lw=1, label=f"n={n}")
        ax.set_yscale("log")
        ax.set_xlabel("k")
        ax.set_ylabel("coefficient")
        ax.set_title(name)
        ax.legend(ncol=2, frameon=False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path
