"""Rendering of the final specification document and per-table CSV exports.

The document is plain Markdown with a fixed section order. Rendering is a pure
function of project content; the generation timestamp lives on a single line
that is excluded from the checksum, so regeneration over unchanged content is
byte-stable.
"""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from enum import Enum

from . import model, risk, workflow
from .errors import NothingToExport, StepNotReady
from .model import (
    PointKind,
    Project,
    SrsRecord,
    StepStatus,
    Stride,
    STRIDE_ORDER,
)

SECTION_HEADINGS = (
    "System Goals",
    "Stakeholders",
    "Agreed Goals",
    "Assets",
    "Attack Surface",
    "Threats",
    "Risk Ranking",
    "Security Requirements",
    "Validation Summary",
)

POINT_KIND_LABELS = {
    PointKind.POA: "Points of Attack (PoA)",
    PointKind.POB: "Points of Belief (PoB)",
    PointKind.POC: "Points of Conjecture (PoC)",
    PointKind.POD: "Points of Dependency (PoD)",
}

CHECK = "\u2713"


class ExportKind(str, Enum):
    GOALS = "Goals"
    STAKEHOLDERS = "Stakeholders"
    ASSETS = "Assets"
    POINTS = "Points"
    THREATS = "Threats"
    RISK = "Risk"
    REQUIREMENTS = "Requirements"


@dataclass
class SrsDocument:
    title: str
    generated_at: datetime
    sections: list[tuple[str, str]]
    checksum: str


def _cell(text: str) -> str:
    return text.replace("|", "\\|").replace("\n", " ")


def _table(headers: list[str], rows: list[list[str]]) -> str:
    lines = [
        "| " + " | ".join(headers) + " |",
        "| " + " | ".join("---" for _ in headers) + " |",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_cell(c) for c in row) + " |")
    return "\n".join(lines)


def _stride_marks(stride: list[Stride]) -> list[str]:
    return [CHECK if s in stride else "" for s in STRIDE_ORDER]


def _yes_no(flag: bool) -> str:
    return "Yes" if flag else "No"


def _requirement_order(project: Project) -> list[str]:
    """Requirement ids ordered by their highest-risk linked threat, then id."""
    position = {tid: i for i, (tid, _) in enumerate(risk.prioritize(project))}
    ids = [r.id for r in project.requirements]
    ids.sort(
        key=lambda rid: (
            min(
                (position.get(t, len(position)) for t in model.find_requirement(project, rid).threat_refs),
                default=len(position),
            ),
            model.numeric_part(rid),
        )
    )
    return ids


def build_sections(project: Project) -> list[tuple[str, str]]:
    sections: list[tuple[str, str]] = []

    sections.append(
        (
            "System Goals",
            _table(
                ["ID", "Description", "Source"],
                [[g.id, g.description, g.source.value] for g in project.goals],
            ),
        )
    )
    sections.append(
        (
            "Stakeholders",
            _table(
                ["ID", "Name", "Group", "Priority"],
                [[s.id, s.name, s.group.value, s.priority.value] for s in project.stakeholders],
            ),
        )
    )

    agreed_rows = []
    for goal in project.goals:
        records = [a for a in project.agreements if a.goal_id == goal.id]
        agreed = [a.stakeholder_id for a in records if a.verdict is model.AgreementVerdict.AGREED]
        objected = [a.stakeholder_id for a in records if a.verdict is model.AgreementVerdict.OBJECTED]
        agreed_rows.append(
            [
                goal.id,
                str(len(agreed)),
                ", ".join(objected) if objected else "none",
            ]
        )
    sections.append(
        ("Agreed Goals", _table(["Goal", "Agreed By", "Objections"], agreed_rows))
    )

    sections.append(
        (
            "Assets",
            _table(
                ["ID", "Name", "CIA", "Priority", "Description"],
                [
                    [
                        a.id,
                        a.name,
                        "".join(f.value for f in a.cia),
                        a.priority.value,
                        a.description,
                    ]
                    for a in project.assets
                ],
            ),
        )
    )

    surface_parts: list[str] = []
    for kind in PointKind:
        points = [p for p in project.attack_points if p.kind == kind]
        surface_parts.append(f"### {POINT_KIND_LABELS[kind]}")
        if points:
            surface_parts.append(
                _table(["ID", "Name", "Description"], [[p.id, p.name, p.description] for p in points])
            )
        elif kind in project.points_declared_empty:
            surface_parts.append("None declared.")
        else:
            surface_parts.append("None recorded.")
    sections.append(("Attack Surface", "\n\n".join(surface_parts)))

    sections.append(
        (
            "Threats",
            _table(
                ["ID", "Title", "S", "T", "R", "I", "D", "E", "Mitigated", "Assets"],
                [
                    [t.id, t.title, *_stride_marks(t.stride), _yes_no(t.mitigated), ", ".join(t.asset_refs)]
                    for t in project.threats
                ],
            ),
        )
    )

    ranking = risk.prioritize(project)
    rank_rows = []
    for rank, (threat_id, score) in enumerate(ranking, start=1):
        threat = model.find_threat(project, threat_id)
        rank_rows.append(
            [
                str(rank),
                threat_id,
                threat.title,
                risk.format_tenths(score),
                risk.risk_band(score).value,
                _yes_no(threat.mitigated),
            ]
        )
    sections.append(
        ("Risk Ranking", _table(["Rank", "ID", "Title", "Risk", "Band", "Mitigated"], rank_rows))
    )

    accepted = {r.id for r in model.accepted_requirements(project)}
    req_rows = [
        [
            rid,
            model.find_requirement(project, rid).text,
            ", ".join(model.find_requirement(project, rid).threat_refs),
        ]
        for rid in _requirement_order(project)
        if rid in accepted
    ]
    sections.append(
        ("Security Requirements", _table(["ID", "Requirement", "Threats"], req_rows))
    )

    validation_rows = [
        [v.requirement_id, v.reviewer, v.verdict.value, v.rationale or ""]
        for v in project.validations
    ]
    sections.append(
        (
            "Validation Summary",
            _table(["Requirement", "Reviewer", "Verdict", "Rationale"], validation_rows),
        )
    )
    return sections


def render_srs_body(project: Project) -> str:
    """Deterministic document body: everything except the timestamp line."""
    parts = [f"# Security Requirements Specification: {project.name}"]
    for heading, content in build_sections(project):
        parts.append(f"## {heading}")
        parts.append(content)
    return "\n\n".join(parts) + "\n"


def srs_checksum(project: Project) -> str:
    return hashlib.sha256(render_srs_body(project).encode("utf-8")).hexdigest()


def _incomplete_prerequisites(project: Project) -> list[int]:
    statuses = {s.step: s.status for s in project.step_states}
    return [step for step in range(1, 10) if statuses[step] is not StepStatus.COMPLETE]


def generate_srs(
    project: Project,
    document_path: str = "srs.md",
    now: datetime | None = None,
) -> tuple[Project, SrsDocument, str]:
    """Render the document, record its checksum on the project, return all three.

    The returned text carries the generation timestamp; the checksum is over
    the body alone so identical content always produces an identical digest.
    """
    incomplete = _incomplete_prerequisites(project)
    if incomplete:
        raise StepNotReady(
            f"steps not complete: {', '.join(str(s) for s in incomplete)}",
            incomplete_steps=incomplete,
        )
    generated_at = now or datetime.now(timezone.utc).replace(microsecond=0)
    body = render_srs_body(project)
    checksum = hashlib.sha256(body.encode("utf-8")).hexdigest()
    title, _, rest = body.partition("\n")
    rendered = f"{title}\n\nGenerated: {generated_at.isoformat()}\n{rest}"
    record = SrsRecord(generated_at=generated_at, checksum=checksum, document_path=document_path)
    project = workflow.touch(project, SrsRecord)
    project = replace(project, srs_record=record)
    document = SrsDocument(
        title=project.name,
        generated_at=generated_at,
        sections=build_sections(project),
        checksum=checksum,
    )
    return project, document, rendered


def strip_timestamp(rendered: str) -> str:
    """Inverse of the timestamp insertion: recover the checksummed body."""
    lines = rendered.split("\n")
    kept = [
        line
        for i, line in enumerate(lines)
        if not (i == 2 and line.startswith("Generated: "))
    ]
    if len(kept) < len(lines) and len(kept) > 1 and kept[1] == "":
        kept.pop(1)
    return "\n".join(kept)


def export_table(project: Project, kind: ExportKind | str) -> str:
    """CSV export mirroring the workbook tables; RFC-4180 quoting, LF endings."""
    kind = ExportKind(kind)
    rows: list[list[str]]
    if kind is ExportKind.GOALS:
        headers = ["ID", "Description", "Source"]
        rows = [[g.id, g.description, g.source.value] for g in project.goals]
    elif kind is ExportKind.STAKEHOLDERS:
        headers = ["ID", "Name", "Priority", "Group"]
        rows = [[s.id, s.name, s.priority.value, s.group.value] for s in project.stakeholders]
    elif kind is ExportKind.ASSETS:
        headers = ["ID", "Name", "Description", "CIA", "Priority"]
        rows = [
            [a.id, a.name, a.description, "".join(f.value for f in a.cia), a.priority.value]
            for a in project.assets
        ]
    elif kind is ExportKind.POINTS:
        headers = ["ID", "Kind", "Name", "Description"]
        rows = [[p.id, p.kind.value, p.name, p.description] for p in project.attack_points]
    elif kind is ExportKind.THREATS:
        headers = ["ID", "Title", "Description", "S", "T", "R", "I", "D", "E", "Mitigated", "Assets"]
        rows = [
            [
                t.id,
                t.title,
                t.description,
                *_stride_marks(t.stride),
                _yes_no(t.mitigated),
                ", ".join(t.asset_refs),
            ]
            for t in project.threats
        ]
    elif kind is ExportKind.RISK:
        headers = ["ID", "Title", "Risk", "Mitigated"]
        rows = []
        for threat_id, score in risk.prioritize(project):
            threat = model.find_threat(project, threat_id)
            rows.append([threat_id, threat.title, risk.format_tenths(score), _yes_no(threat.mitigated)])
    elif kind is ExportKind.REQUIREMENTS:
        headers = ["ID", "Requirement", "Threats", "Origin"]
        rows = [
            [r.id, r.text, ", ".join(r.threat_refs), r.origin.value]
            for r in project.requirements
        ]
    else:  # pragma: no cover - ExportKind() already rejects unknown values
        raise NothingToExport(str(kind))
    if not rows:
        raise NothingToExport(f"no {kind.value.lower()} to export", kind=kind.value)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()
