"""Bundle verification sweeps into files: JSON, CSV, and a summary figure.

The JSON file carries the full reports (including counterexamples, if any),
the CSV is a one-row-per-identity summary, and the figure charts the number
of cases checked and the wall time per identity. Figures are rendered
off-screen; nothing here opens a window.
"""

from __future__ import annotations

import csv
import json
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .verify import SweepReport, run_suite  # noqa: E402

_STATUS_COLORS = {"pass": "#2a9d8f", "fail": "#e76f51", "inconclusive": "#e9c46a"}


def write_report_json(reports: list[SweepReport], path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump([r.to_json_obj() for r in reports], handle, indent=2)
        handle.write("\n")


def write_summary_csv(reports: list[SweepReport], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["identity", "bound", "cases", "failures", "millis", "status"])
        for r in reports:
            writer.writerow(
                [
                    r.identity,
                    json.dumps(r.bound, sort_keys=True),
                    r.cases,
                    len(r.failures),
                    r.millis,
                    r.status,
                ]
            )


def render_summary_figure(reports: list[SweepReport], path: str) -> None:
    """Horizontal bars of cases checked per identity, colored by status,
    with the wall time on a second panel sharing the y axis."""
    names = [r.identity for r in reports]
    cases = [r.cases for r in reports]
    millis = [r.millis for r in reports]
    colors = [_STATUS_COLORS[r.status] for r in reports]
    height = max(3.0, 0.35 * len(reports) + 1.2)
    fig, (ax_cases, ax_time) = plt.subplots(
        1, 2, figsize=(9.5, height), sharey=True, constrained_layout=True
    )
    positions = range(len(reports))
    ax_cases.barh(positions, cases, color=colors)
    ax_cases.set_yticks(list(positions))
    ax_cases.set_yticklabels(names, fontsize=8)
    ax_cases.invert_yaxis()
    ax_cases.set_xlabel("cases checked")
    ax_time.barh(positions, millis, color="#577590")
    ax_time.set_xlabel("wall time (ms)")
    for ax in (ax_cases, ax_time):
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
    failures = sum(len(r.failures) for r in reports)
    fig.suptitle(
        f"identity sweeps: {len(reports)} reports, "
        f"{sum(cases)} cases, {failures} failures",
        fontsize=10,
    )
    fig.savefig(path, dpi=150)
    plt.close(fig)


def run_report(
    out_dir: str,
    bound: int | None = None,
    max_t_edges: int | None = None,
    max_uv_vertices: int | None = None,
) -> tuple[list[SweepReport], list[str]]:
    """Run every suite and write the three artifacts into ``out_dir``."""
    reports = run_suite("all", bound, max_t_edges, max_uv_vertices)
    os.makedirs(out_dir, exist_ok=True)
    json_path = os.path.join(out_dir, "verify_report.json")
    csv_path = os.path.join(out_dir, "verify_summary.csv")
    png_path = os.path.join(out_dir, "verify_summary.png")
    write_report_json(reports, json_path)
    write_summary_csv(reports, csv_path)
    render_summary_figure(reports, png_path)
    return reports, [json_path, csv_path, png_path]
