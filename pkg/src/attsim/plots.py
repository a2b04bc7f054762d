"""Matplotlib rendering of experiment reports to image files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .metrics import MATRIX_ROWS

_SAVE_KW = {"dpi": 120, "metadata": {"Software": "attsim"}}

_CLASS_COLORS = {
    "all_close": "tab:blue",
    "distance2": "tab:cyan",
    "distance3": "tab:olive",
    "distance4": "tab:gray",
    "incoming": "tab:red",
    "outgoing": "tab:green",
    "mutual": "tab:purple",
}


def plot_final_correlations(path: Path, final_reports) -> None:
    """Scatter of final correlations per replication, one color per class."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for cls in MATRIX_ROWS:
        xs, ys = [], []
        for rep, report in enumerate(final_reports):
            value = report.correlations[cls]
            if value is not None:
                xs.append(rep)
                ys.append(value)
        ax.scatter(xs, ys, s=10, label=cls.value, color=_CLASS_COLORS[cls.value],
                   alpha=0.7)
    ax.set_xlabel("replication")
    ax.set_ylabel("ego-alter correlation")
    ax.set_ylim(-1.05, 1.05)
    ax.axhline(0.0, color="black", lw=0.5)
    ax.legend(fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)


def plot_timeseries_mean(path: Path, snapshots, series_mean) -> None:
    """Mean correlation per class against simulation iteration."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for cls in MATRIX_ROWS:
        xs, ys = [], []
        for t, value in zip(snapshots, series_mean[cls]):
            if value is not None:
                xs.append(t)
                ys.append(value)
        ax.plot(xs, ys, label=cls.value, color=_CLASS_COLORS[cls.value], lw=1.2)
    ax.set_xlabel("iteration")
    ax.set_ylabel("mean ego-alter correlation")
    ax.set_ylim(-1.05, 1.05)
    ax.axhline(0.0, color="black", lw=0.5)
    ax.legend(fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)


def render_experiment_figures(out_dir: Path, summary) -> list[Path]:
    """Render the standard report figures next to the delimited tables."""
    final_png = Path(out_dir) / "final_correlations.png"
    series_png = Path(out_dir) / "timeseries_mean.png"
    plot_final_correlations(final_png, summary.final_reports)
    plot_timeseries_mean(series_png, summary.snapshots, summary.series_mean)
    return [final_png, series_png]


def render_sweep_figure(path: Path, param: str, values, summaries) -> None:
    """Mean final correlation per class as a function of the swept parameter."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for cls in MATRIX_ROWS:
        xs, ys = [], []
        for value in values:
            mean = summaries[value].final_stats[cls].mean
            if mean is not None:
                xs.append(value)
                ys.append(mean)
        ax.plot(xs, ys, marker="o", ms=3, label=cls.value,
                color=_CLASS_COLORS[cls.value], lw=1.2)
    ax.set_xlabel(param)
    ax.set_ylabel("mean final correlation")
    ax.axhline(0.0, color="black", lw=0.5)
    ax.legend(fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
