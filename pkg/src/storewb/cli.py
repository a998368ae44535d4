"""Command line frontend (`store`): a thin adapter over the core library.

Exit codes: 0 success, 1 domain error (stable error code printed), 2 usage
error. Every mutating command persists the project file atomically before
returning.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any

from . import analysis, catalog as catalog_mod, docgen, model, persistence, risk, workflow
from .errors import NotFound, OutOfRange, StoreError
from .model import (
    Agreement,
    AgreementVerdict,
    Asset,
    AssetPriority,
    AttackPoint,
    CiaFacet,
    Goal,
    GoalSource,
    PointKind,
    RequirementOrigin,
    RiskAssessment,
    RiskMethod,
    SecurityRequirement,
    Stakeholder,
    StakeholderGroup,
    StakeholderPriority,
    Stride,
    Threat,
    ValidationRecord,
    ValidationVerdict,
)
from .service import ProjectStore

DEFAULT_PROJECT = "./project.store.json"

_GROUPS = {
    "managerial": StakeholderGroup.MANAGERIAL,
    "marketing": StakeholderGroup.MARKETING,
    "information-system": StakeholderGroup.INFORMATION_SYSTEM,
    "other": StakeholderGroup.OTHER,
}
_PRIORITIES = {
    "critical": StakeholderPriority.CRITICAL,
    "major": StakeholderPriority.MAJOR,
    "minor": StakeholderPriority.MINOR,
}
_ASSET_PRIORITIES = {
    "low": AssetPriority.LOW,
    "medium": AssetPriority.MEDIUM,
    "high": AssetPriority.HIGH,
}
_KINDS = {
    "poa": PointKind.POA,
    "pob": PointKind.POB,
    "poc": PointKind.POC,
    "pod": PointKind.POD,
}
_SOURCES = {
    "interview": GoalSource.INTERVIEW,
    "brainstorming": GoalSource.BRAINSTORMING,
    "review": GoalSource.REVIEW,
    "other": GoalSource.OTHER,
}
_VERDICTS = {
    "accepted": ValidationVerdict.ACCEPTED,
    "rejected": ValidationVerdict.REJECTED,
    "needs-rework": ValidationVerdict.NEEDS_REWORK,
}


def _split_csv(raw: str | None) -> list[str]:
    if not raw:
        return []
    return [part.strip() for part in raw.split(",") if part.strip()]


def _split_ints(raw: str | None, flag: str) -> list[int]:
    try:
        return [int(part) for part in _split_csv(raw)]
    except ValueError:
        raise OutOfRange(f"{flag} expects comma separated integers, got {raw!r}") from None


def _parse_stride(raw: str | None) -> list[Stride]:
    try:
        return [Stride(token.upper()) for token in _split_csv(raw)]
    except ValueError:
        raise OutOfRange(f"--stride expects letters from S,T,R,I,D,E, got {raw!r}") from None


def _parse_cia(raw: str | None) -> list[CiaFacet]:
    try:
        return [CiaFacet(token.upper()) for token in _split_csv(raw)]
    except ValueError:
        raise OutOfRange(f"--cia expects letters from C,I,A, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a leaf subparser from clobbering a value parsed at an
    # outer level, so the global flags work in any position.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--project", default=argparse.SUPPRESS, help="project file path")
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="store", description="Threat-oriented security requirements workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("init", parents=[common], help="create a new project file")
    p.add_argument("name")

    goal = sub.add_parser("goal", parents=[common]).add_subparsers(dest="action", required=True)
    p = goal.add_parser("add", parents=[common])
    p.add_argument("id")
    p.add_argument("description")
    p.add_argument("--source", choices=sorted(_SOURCES), default="interview")
    goal.add_parser("list", parents=[common])
    p = goal.add_parser("rm", parents=[common])
    p.add_argument("id")

    stakeholder = sub.add_parser("stakeholder", parents=[common]).add_subparsers(dest="action", required=True)
    p = stakeholder.add_parser("add", parents=[common])
    p.add_argument("id")
    p.add_argument("name")
    p.add_argument("--priority", choices=sorted(_PRIORITIES), required=True)
    p.add_argument("--group", choices=sorted(_GROUPS), default="other")
    stakeholder.add_parser("list", parents=[common])

    p = sub.add_parser("agree", parents=[common], help="record a goal agreement")
    p.add_argument("goal")
    p.add_argument("stakeholder")
    p.add_argument("--verdict", choices=["agreed", "objected"], default="agreed")
    p.add_argument("--note")

    asset = sub.add_parser("asset", parents=[common]).add_subparsers(dest="action", required=True)
    p = asset.add_parser("add", parents=[common])
    p.add_argument("id")
    p.add_argument("name")
    p.add_argument("--description", default="")
    p.add_argument("--cia", required=True, help="comma separated subset of C,I,A")
    p.add_argument("--priority", choices=sorted(_ASSET_PRIORITIES), default="medium")
    p.add_argument("--identified-by", dest="identified_by")
    asset.add_parser("list", parents=[common])

    point = sub.add_parser("point", parents=[common]).add_subparsers(dest="action", required=True)
    p = point.add_parser("add", parents=[common])
    p.add_argument("id")
    p.add_argument("name")
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--description", default="")
    point.add_parser("list", parents=[common])
    p = point.add_parser("ack", parents=[common], help="declare a point kind intentionally empty")
    p.add_argument("kind", choices=["poc", "pod"])

    threat = sub.add_parser("threat", parents=[common]).add_subparsers(dest="action", required=True)
    p = threat.add_parser("add", parents=[common])
    p.add_argument("id")
    p.add_argument("title")
    p.add_argument("--description", default="")
    p.add_argument("--stride", help="comma separated letters from S,T,R,I,D,E")
    p.add_argument("--assets")
    p.add_argument("--points")
    p.add_argument("--mitigated", action="store_true")
    p = threat.add_parser("tag", parents=[common])
    p.add_argument("id")
    p.add_argument("--stride", required=True)
    p = threat.add_parser("link", parents=[common])
    p.add_argument("id")
    p.add_argument("--assets")
    p.add_argument("--points")
    threat.add_parser("list", parents=[common])

    risk_parser = sub.add_parser("risk", parents=[common]).add_subparsers(dest="action", required=True)
    p = risk_parser.add_parser("set", parents=[common])
    p.add_argument("threat")
    method = p.add_mutually_exclusive_group(required=True)
    method.add_argument("--dread", help="five comma separated integers 0..10")
    method.add_argument("--simple", help="probability,damage with each in 1..10")
    risk_parser.add_parser("rank", parents=[common])
    p = risk_parser.add_parser("exclude", parents=[common])
    p.add_argument("threat")
    p.add_argument("--rationale", default="")
    p.add_argument("--undo", action="store_true")

    p = sub.add_parser("elicit", parents=[common], help="elicit requirements from a threat dictionary")
    p.add_argument("--catalog", required=True)

    req = sub.add_parser("req", parents=[common]).add_subparsers(dest="action", required=True)
    p = req.add_parser("add", parents=[common])
    p.add_argument("text")
    p.add_argument("--threats", required=True)
    p.add_argument("--id", dest="req_id")
    p = req.add_parser("validate", parents=[common])
    p.add_argument("id")
    p.add_argument("--reviewer", required=True)
    p.add_argument("--verdict", choices=sorted(_VERDICTS), required=True)
    p.add_argument("--rationale")
    req.add_parser("list", parents=[common])

    step = sub.add_parser("step", parents=[common]).add_subparsers(dest="action", required=True)
    step.add_parser("status", parents=[common])
    p = step.add_parser("complete", parents=[common])
    p.add_argument("number", type=int)
    p = step.add_parser("reopen", parents=[common])
    p.add_argument("number", type=int)

    p = sub.add_parser("report", parents=[common])
    p.add_argument("kind", choices=["coverage", "surface", "cia"])

    doc = sub.add_parser("doc", parents=[common]).add_subparsers(dest="action", required=True)
    p = doc.add_parser("srs", parents=[common])
    p.add_argument("--out")
    p = doc.add_parser("export", parents=[common])
    p.add_argument("kind", choices=["goals", "stakeholders", "assets", "points", "threats", "risk", "requirements"])

    p = sub.add_parser("serve", parents=[common], help="run the HTTP API")
    p.add_argument("--bind", default="127.0.0.1:8000")
    p.add_argument("--static", help="directory of built web UI assets")
    p.add_argument("--catalog", help="default threat dictionary for /api/v1/elicit")

    return parser


def _emit(args: argparse.Namespace, text: str, payload: Any) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif text:
        print(text)


def _ranking_payload(project: model.Project) -> list[dict[str, Any]]:
    rows = []
    for rank, (threat_id, score) in enumerate(risk.prioritize(project), start=1):
        threat = model.find_threat(project, threat_id)
        assessment = model.find_assessment(project, threat_id)
        rows.append(
            {
                "rank": rank,
                "threat_id": threat_id,
                "title": threat.title,
                "score_tenths": score,
                "display": risk.format_tenths(score),
                "band": risk.risk_band(score).value,
                "mitigated": threat.mitigated,
                "excluded": assessment.excluded,
            }
        )
    return rows


def _workflow_payload(project: model.Project) -> dict[str, Any]:
    current = workflow.current_step(project)
    return {
        "current_step": current,
        "steps": [
            {"step": s.step, "title": workflow.STEP_TITLES[s.step], "status": s.status.value}
            for s in sorted(project.step_states, key=lambda s: s.step)
        ],
        "checks": [
            {
                "step": c.step,
                "rule_id": c.rule_id,
                "description": c.description,
                "satisfied": c.satisfied,
                "details": c.details,
            }
            for c in workflow.exit_checks(project, current)
        ],
    }


def _coverage_payload(report: analysis.CoverageReport) -> dict[str, list[str]]:
    return {
        "assets_without_threats": report.assets_without_threats,
        "threats_without_points": report.threats_without_points,
        "threats_without_requirements": report.threats_without_requirements,
        "unvalidated_requirements": report.unvalidated_requirements,
        "orphan_points": report.orphan_points,
    }


def _default_srs_path(project_path: Path) -> Path:
    name = project_path.name
    if name.endswith(persistence.FILE_SUFFIX):
        name = name[: -len(persistence.FILE_SUFFIX)]
    else:
        name = project_path.stem
    return project_path.with_name(name + ".srs.md")


def _run(args: argparse.Namespace) -> int:
    store = ProjectStore(getattr(args, "project", DEFAULT_PROJECT))
    command = args.command

    if command == "init":
        project = store.init(args.name)
        _emit(args, f"initialized {project.name} at {store.path}", {"project_id": project.project_id})
        return 0

    if command == "goal":
        if args.action == "add":
            goal = Goal(id=args.id, description=args.description, source=_SOURCES[args.source])
            store.mutate(lambda p: workflow.add_entity(p, goal))
            _emit(args, f"added {goal.id}", model.goal_to_dict(goal))
        elif args.action == "rm":
            store.mutate(lambda p: workflow.remove_entity(p, args.id))
            _emit(args, f"removed {args.id}", {"removed": args.id})
        else:
            project = store.load()
            _emit(
                args,
                "\n".join(f"{g.id}\t{g.description}" for g in project.goals),
                [model.goal_to_dict(g) for g in project.goals],
            )
        return 0

    if command == "stakeholder":
        if args.action == "add":
            entity = Stakeholder(
                id=args.id,
                name=args.name,
                group=_GROUPS[args.group],
                priority=_PRIORITIES[args.priority],
            )
            store.mutate(lambda p: workflow.add_entity(p, entity))
            _emit(args, f"added {entity.id}", model.stakeholder_to_dict(entity))
        else:
            project = store.load()
            _emit(
                args,
                "\n".join(
                    f"{s.id}\t{s.name}\t{s.priority.value}\t{s.group.value}"
                    for s in project.stakeholders
                ),
                [model.stakeholder_to_dict(s) for s in project.stakeholders],
            )
        return 0

    if command == "agree":
        verdict = AgreementVerdict.AGREED if args.verdict == "agreed" else AgreementVerdict.OBJECTED
        agreement = Agreement(
            goal_id=args.goal, stakeholder_id=args.stakeholder, verdict=verdict, note=args.note
        )
        store.mutate(lambda p: workflow.upsert(p, agreement))
        _emit(args, f"recorded {verdict.value} for {args.goal} by {args.stakeholder}", model.agreement_to_dict(agreement))
        return 0

    if command == "asset":
        if args.action == "add":
            entity = Asset(
                id=args.id,
                name=args.name,
                description=args.description,
                cia=_parse_cia(args.cia),
                priority=_ASSET_PRIORITIES[args.priority],
                identified_by=_split_csv(args.identified_by),
            )
            store.mutate(lambda p: workflow.add_entity(p, entity))
            _emit(args, f"added {entity.id}", model.asset_to_dict(entity))
        else:
            project = store.load()
            _emit(
                args,
                "\n".join(
                    f"{a.id}\t{a.name}\t{''.join(f.value for f in a.cia)}\t{a.priority.value}"
                    for a in project.assets
                ),
                [model.asset_to_dict(a) for a in project.assets],
            )
        return 0

    if command == "point":
        if args.action == "add":
            entity = AttackPoint(
                id=args.id, kind=_KINDS[args.kind], name=args.name, description=args.description
            )
            store.mutate(lambda p: workflow.add_entity(p, entity))
            _emit(args, f"added {entity.id}", model.point_to_dict(entity))
        elif args.action == "ack":
            kind = _KINDS[args.kind]
            store.mutate(lambda p: workflow.declare_points_empty(p, kind))
            _emit(args, f"declared {kind.value} empty", {"declared_empty": kind.value})
        else:
            project = store.load()
            _emit(
                args,
                "\n".join(f"{p.id}\t{p.kind.value}\t{p.name}" for p in project.attack_points),
                [model.point_to_dict(p) for p in project.attack_points],
            )
        return 0

    if command == "threat":
        if args.action == "add":
            entity = Threat(
                id=args.id,
                title=args.title,
                description=args.description,
                stride=_parse_stride(args.stride),
                asset_refs=_split_csv(args.assets),
                point_refs=_split_csv(args.points),
                mitigated=args.mitigated,
            )
            store.mutate(lambda p: workflow.add_entity(p, entity))
            _emit(args, f"added {entity.id}", model.threat_to_dict(entity))
        elif args.action == "tag":
            stride = _parse_stride(args.stride)

            def tag(p: model.Project) -> model.Project:
                threat = model.find_threat(p, args.id)
                if threat is None:
                    raise NotFound(args.id, entity_id=args.id)
                return workflow.replace_entity(p, replace(threat, stride=stride))

            project = store.mutate(tag)
            _emit(args, f"tagged {args.id}", model.threat_to_dict(model.find_threat(project, args.id)))
        elif args.action == "link":
            assets = _split_csv(args.assets)
            points = _split_csv(args.points)

            def link(p: model.Project) -> model.Project:
                threat = model.find_threat(p, args.id)
                if threat is None:
                    raise NotFound(args.id, entity_id=args.id)
                merged = replace(
                    threat,
                    asset_refs=threat.asset_refs + [a for a in assets if a not in threat.asset_refs],
                    point_refs=threat.point_refs + [x for x in points if x not in threat.point_refs],
                )
                return workflow.replace_entity(p, merged)

            project = store.mutate(link)
            _emit(args, f"linked {args.id}", model.threat_to_dict(model.find_threat(project, args.id)))
        else:
            project = store.load()
            _emit(
                args,
                "\n".join(
                    f"{t.id}\t{t.title}\t{''.join(s.value for s in t.stride)}\t{','.join(t.asset_refs)}"
                    for t in project.threats
                ),
                [model.threat_to_dict(t) for t in project.threats],
            )
        return 0

    if command == "risk":
        if args.action == "set":
            if args.dread is not None:
                components = _split_ints(args.dread, "--dread")
                assessment = RiskAssessment(
                    threat_id=args.threat, method=RiskMethod.DREAD, dread_components=components
                )
            else:
                parts = _split_ints(args.simple, "--simple")
                if len(parts) != 2:
                    raise OutOfRange("--simple expects probability,damage")
                assessment = RiskAssessment(
                    threat_id=args.threat,
                    method=RiskMethod.SIMPLE,
                    probability=parts[0],
                    damage_potential=parts[1],
                )
            store.mutate(lambda p: risk.set_assessment(p, assessment))
            _emit(
                args,
                f"{args.threat} scored {risk.format_tenths(risk.score_tenths(assessment))}",
                model.assessment_to_dict(assessment),
            )
        elif args.action == "rank":
            project = store.load()
            rows = _ranking_payload(project)
            _emit(
                args,
                "\n".join(f"{r['threat_id']}\t{r['display']}\t{r['title']}" for r in rows),
                rows,
            )
        else:
            excluded = not args.undo
            store.mutate(lambda p: risk.set_excluded(p, args.threat, excluded, args.rationale))
            _emit(
                args,
                f"{args.threat} {'excluded from' if excluded else 'restored to'} elicitation",
                {"threat_id": args.threat, "excluded": excluded},
            )
        return 0

    if command == "elicit":
        loaded = catalog_mod.load_catalog(args.catalog)
        outcome_box: dict[str, catalog_mod.ElicitationOutcome] = {}

        def run(p: model.Project) -> model.Project:
            outcome = catalog_mod.elicit_all(p, loaded)
            outcome_box["outcome"] = outcome
            return outcome.project

        store.mutate(run)
        outcome = outcome_box["outcome"]
        lines = [f"created {rid}" for rid in outcome.created]
        lines.extend(f"needs manual entry: {tid}" for tid in outcome.needs_manual)
        _emit(
            args,
            "\n".join(lines) if lines else "nothing to elicit",
            {"created": outcome.created, "needs_manual": outcome.needs_manual},
        )
        return 0

    if command == "req":
        if args.action == "add":
            def add_requirement(p: model.Project) -> model.Project:
                entity = SecurityRequirement(
                    id=args.req_id or catalog_mod.next_requirement_id(p),
                    text=args.text,
                    threat_refs=_split_csv(args.threats),
                    origin=RequirementOrigin.MANUAL,
                )
                return workflow.add_entity(p, entity)

            project = store.mutate(add_requirement)
            created = project.requirements[-1]
            _emit(args, f"added {created.id}", model.requirement_to_dict(created))
        elif args.action == "validate":
            record = ValidationRecord(
                requirement_id=args.id,
                reviewer=args.reviewer,
                verdict=_VERDICTS[args.verdict],
                rationale=args.rationale,
            )
            store.mutate(lambda p: workflow.upsert(p, record))
            _emit(args, f"recorded {record.verdict.value} for {args.id}", model.validation_to_dict(record))
        else:
            project = store.load()
            _emit(
                args,
                "\n".join(f"{r.id}\t{r.text}\t{','.join(r.threat_refs)}" for r in project.requirements),
                [model.requirement_to_dict(r) for r in project.requirements],
            )
        return 0

    if command == "step":
        if args.action == "status":
            project = store.load()
            payload = _workflow_payload(project)
            lines = [
                f"step {s['step']}\t{s['status']}\t{s['title']}" for s in payload["steps"]
            ]
            _emit(args, "\n".join(lines), payload)
        elif args.action == "complete":
            project = store.mutate(lambda p: workflow.complete_step(p, args.number))
            _emit(args, f"step {args.number} complete", _workflow_payload(project))
        else:
            project = store.mutate(lambda p: workflow.reopen_step(p, args.number))
            _emit(args, f"step {args.number} reopened", _workflow_payload(project))
        return 0

    if command == "report":
        project = store.load()
        if args.kind == "coverage":
            payload = _coverage_payload(analysis.coverage_report(project))
            lines = [f"{key}: {', '.join(values) if values else '-'}" for key, values in payload.items()]
            _emit(args, "\n".join(lines), payload)
        elif args.kind == "surface":
            summary = analysis.surface_summary(project)
            payload = {
                kind.value: {"count": len(points), "points": [p.id for p in points]}
                for kind, points in summary.by_kind.items()
            }
            _emit(
                args,
                "\n".join(f"{kind}: {data['count']}" for kind, data in payload.items()),
                payload,
            )
        else:
            summary = analysis.cia_summary(project)
            payload = {
                "facets": {facet.value: count for facet, count in summary.facets.items()},
                "priorities": {priority.value: count for priority, count in summary.priorities.items()},
            }
            _emit(
                args,
                "\n".join(
                    [f"{facet}: {count}" for facet, count in payload["facets"].items()]
                    + [f"{priority}: {count}" for priority, count in payload["priorities"].items()]
                ),
                payload,
            )
        return 0

    if command == "doc":
        if args.action == "srs":
            out_path = Path(args.out) if args.out else _default_srs_path(store.path)
            result: dict[str, Any] = {}

            def generate(p: model.Project) -> model.Project:
                updated, document, rendered = docgen.generate_srs(p, document_path=str(out_path))
                result["document"] = document
                result["rendered"] = rendered
                return updated

            store.mutate(generate)
            out_path.write_text(result["rendered"], encoding="utf-8", newline="\n")
            document = result["document"]
            _emit(
                args,
                f"wrote {out_path} (checksum {document.checksum})",
                {"path": str(out_path), "checksum": document.checksum},
            )
        else:
            project = store.load()
            text = docgen.export_table(project, args.kind.capitalize())
            if getattr(args, "format", "text") == "json":
                print(json.dumps({"kind": args.kind, "csv": text}))
            else:
                sys.stdout.write(text)
        return 0

    if command == "serve":
        from . import api

        host, _, port = args.bind.rpartition(":")
        api.serve(
            store.path,
            host=host or "127.0.0.1",
            port=int(port),
            static_dir=args.static,
            default_catalog=args.catalog,
        )
        return 0

    raise AssertionError(f"unhandled command {command}")  # pragma: no cover


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except StoreError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
