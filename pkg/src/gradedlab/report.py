"""Report assembly and serialization: JSON, text, CSV, and summary figures.

The JSON document is byte-identical across runs with the same inputs and
budget: keys are sorted, ordering is (registry order, instance order), and
no timestamps or environment data are recorded.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import __version__
from .claims import BUDGET_EXCEEDED, CONFIRMED, HYPOTHESIS_UNMET, REFUTED, ClaimResult, ClaimSpec
from .instances import Budget

STATUS_ORDER = (CONFIRMED, REFUTED, HYPOTHESIS_UNMET, BUDGET_EXCEEDED)
STATUS_COLORS = {
    CONFIRMED: "#2a9d8f",
    REFUTED: "#e76f51",
    HYPOTHESIS_UNMET: "#bcb8b1",
    BUDGET_EXCEEDED: "#e9c46a",
}


@dataclass
class Report:
    meta: dict
    claims: list[dict]
    tallies: dict
    discrepancies: list[dict]

    def to_json_obj(self) -> dict:
        return {
            "meta": self.meta,
            "claims": self.claims,
            "tallies": self.tallies,
            "discrepancies": self.discrepancies,
        }


def build_report(
    specs: list[ClaimSpec],
    results: list[ClaimResult],
    budget: Budget,
    instance_count: int,
) -> Report:
    by_claim: dict[str, list[ClaimResult]] = {s.claim_id: [] for s in specs}
    for res in results:
        by_claim.setdefault(res.claim_id, []).append(res)

    claims = []
    tallies: dict[str, dict[str, int]] = {}
    discrepancies = []
    for spec in specs:
        rows = by_claim.get(spec.claim_id, [])
        claims.append(
            {
                "id": spec.claim_id,
                "paper_ref": spec.reference,
                "statement": spec.statement,
                "results": [r.to_json() for r in rows],
            }
        )
        tally = {status: 0 for status in STATUS_ORDER}
        for r in rows:
            tally[r.status] += 1
        tallies[spec.claim_id] = tally
        for r in rows:
            if r.status == REFUTED:
                discrepancies.append(
                    {
                        "claim": r.claim_id,
                        "part": r.part,
                        "instance": r.instance,
                        "certificate": r.certificate,
                    }
                )
    meta = {
        "tool": "gradedlab",
        "version": __version__,
        "budget": budget.to_json(),
        "claim_count": len(specs),
        "instance_count": instance_count,
        "result_count": len(results),
    }
    return Report(meta=meta, claims=claims, tallies=tallies, discrepancies=discrepancies)


def report_json_str(report: Report) -> str:
    return json.dumps(report.to_json_obj(), sort_keys=True, indent=1) + "\n"


def report_csv_str(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim", "part", "instance", "status", "note"])
    for claim in report.claims:
        for res in claim["results"]:
            details = res.get("details", {})
            note = details.get("reason") or details.get("note") or ""
            writer.writerow([claim["id"], res["part"], res["instance"], res["status"], note])
    return buf.getvalue()


def report_text(report: Report) -> str:
    lines = []
    meta = report.meta
    lines.append(f"gradedlab claims report (version {meta['version']})")
    lines.append(
        f"{meta['claim_count']} claims x {meta['instance_count']} instances, "
        f"{meta['result_count']} results"
    )
    lines.append("")
    header = f"{'claim':10} {'confirmed':>9} {'refuted':>8} {'unmet':>7} {'budget':>7}"
    lines.append(header)
    lines.append("-" * len(header))
    for claim in report.claims:
        t = report.tallies[claim["id"]]
        lines.append(
            f"{claim['id']:10} {t[CONFIRMED]:>9} {t[REFUTED]:>8} "
            f"{t[HYPOTHESIS_UNMET]:>7} {t[BUDGET_EXCEEDED]:>7}"
        )
    lines.append("")
    if report.discrepancies:
        lines.append(f"{len(report.discrepancies)} refutation(s) with certificates:")
        for d in report.discrepancies:
            part = f" [{d['part']}]" if d["part"] else ""
            lines.append(f"  {d['claim']}{part} on {d['instance']}")
    else:
        lines.append("no refutations")
    lines.append("")
    return "\n".join(lines)


def _instance_kind(key: str) -> str:
    return key.split("(", 1)[0]


def render_figures(report: Report, outdir: Path) -> list[Path]:
    """Render the status summary charts next to the delimited output."""
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []

    claim_ids = [c["id"] for c in report.claims]
    fig, ax = plt.subplots(figsize=(9, 0.34 * len(claim_ids) + 1.6))
    left = [0.0] * len(claim_ids)
    for status in STATUS_ORDER:
        widths = [report.tallies[cid][status] for cid in claim_ids]
        ax.barh(claim_ids, widths, left=left, color=STATUS_COLORS[status], label=status)
        left = [a + b for a, b in zip(left, widths)]
    ax.invert_yaxis()
    ax.set_xlabel("instances")
    ax.set_title("claim outcomes across the instance suite")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    path = outdir / "claim_status.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    kinds: dict[str, dict[str, int]] = {}
    for claim in report.claims:
        for res in claim["results"]:
            kind = _instance_kind(res["instance"])
            kinds.setdefault(kind, {s: 0 for s in STATUS_ORDER})[res["status"]] += 1
    names = sorted(kinds)
    fig, ax = plt.subplots(figsize=(7, 4))
    bottom = [0.0] * len(names)
    for status in STATUS_ORDER:
        heights = [kinds[k][status] for k in names]
        ax.bar(names, heights, bottom=bottom, color=STATUS_COLORS[status], label=status)
        bottom = [a + b for a, b in zip(bottom, heights)]
    ax.set_ylabel("results")
    ax.set_title("outcomes by instance family")
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = outdir / "status_by_family.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)
    return paths


def write_report(report: Report, outdir: str | Path) -> dict[str, Path]:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "json": out / "report.json",
        "text": out / "report.txt",
        "csv": out / "results.csv",
    }
    paths["json"].write_text(report_json_str(report), encoding="utf-8")
    paths["text"].write_text(report_text(report), encoding="utf-8")
    paths["csv"].write_text(report_csv_str(report), encoding="utf-8")
    for i, figure in enumerate(render_figures(report, out / "figures")):
        paths[f"figure{i}"] = figure
    return paths
