"""Figures rendered next to audit reports."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STATEMENTS = (("sigma_soluble", "σ-soluble"), ("s1_t_sigma", "(1) T_σ"),
              ("s2_r_all", "(2) R_σi"), ("s3_structure", "(3) structure"))


def _safe(spec: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in spec).strip("_") or "sigma"


def plot_timing(reports, path):
    fig, ax = plt.subplots(figsize=(7, 4.2))
    for report in reports:
        orders = [t["order"] for t in report.timing]
        ms = [max(t["ms"], 1e-3) for t in report.timing]
        ax.scatter(orders, ms, s=12, alpha=0.7, label=report.sigma)
    ax.set_yscale("log")
    ax.set_xlabel("group order")
    ax.set_ylabel("analysis time (ms)")
    ax.set_title("per-group analysis time")
    ax.legend(title="σ", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_verdicts(report, path):
    """True/false counts per statement, soluble groups only for (1)-(3)."""
    soluble = [v for v in report.verdicts if v["sigma_soluble"]]
    labels, trues, falses = [], [], []
    for key, label in STATEMENTS:
        pool = report.verdicts if key == "sigma_soluble" else soluble
        labels.append(label)
        trues.append(sum(v[key] for v in pool))
        falses.append(sum(not v[key] for v in pool))
    fig, ax = plt.subplots(figsize=(6, 3.8))
    xs = range(len(labels))
    ax.bar(xs, trues, color="#4c72b0", label="true")
    ax.bar(xs, falses, bottom=trues, color="#dd8452", label="false")
    ax.set_xticks(list(xs), labels)
    ax.set_ylabel("groups")
    ax.set_title(f"verdicts, σ = {report.sigma} ({len(report.violations)} violations)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_audit_figures(reports, directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = [out / "audit_timing.png"]
    plot_timing(reports, written[0])
    for report in reports:
        path = out / f"audit_verdicts_{_safe(report.sigma)}.png"
        plot_verdicts(report, path)
        written.append(path)
    return written
