"""HTTP JSON API under /api/v1: the second thin adapter over the core library.

Writes are serialized per project and persist before the response is sent;
reads always reflect the latest persisted state. Errors map to 404 (missing),
409 (workflow/ordering conflicts) or 422 (content problems) with an
{code, message, details} body.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable

from fastapi import Body, FastAPI, Query, Request
from fastapi.responses import JSONResponse

from . import analysis, catalog as catalog_mod, docgen, model, risk, workflow
from .errors import (
    DuplicateId,
    ExitChecksFailed,
    IntegrityMismatch,
    InvalidProject,
    MissingAssessment,
    NotFound,
    StepNotCurrent,
    StepNotReady,
    StepNotStarted,
    StillReferenced,
    StoreError,
)
from .model import PointKind, Project
from .service import ProjectStore

_CONFLICT = (
    DuplicateId,
    StillReferenced,
    StepNotCurrent,
    StepNotStarted,
    StepNotReady,
    ExitChecksFailed,
    MissingAssessment,
    IntegrityMismatch,
    InvalidProject,
)


def _status_for(exc: StoreError) -> int:
    if isinstance(exc, NotFound):
        return 404
    if isinstance(exc, _CONFLICT):
        return 409
    return 422


def _error_body(exc: StoreError) -> dict[str, Any]:
    return {"code": exc.code, "message": str(exc), "details": exc.details}


_ENTITY_CODECS: dict[str, tuple[Callable[[dict], Any], Callable[[Any], dict]]] = {
    "goals": (model.goal_from_dict, model.goal_to_dict),
    "stakeholders": (model.stakeholder_from_dict, model.stakeholder_to_dict),
    "agreements": (model.agreement_from_dict, model.agreement_to_dict),
    "assets": (model.asset_from_dict, model.asset_to_dict),
    "points": (model.point_from_dict, model.point_to_dict),
    "threats": (model.threat_from_dict, model.threat_to_dict),
    "requirements": (model.requirement_from_dict, model.requirement_to_dict),
    "validations": (model.validation_from_dict, model.validation_to_dict),
}

_COLLECTION_ATTR = {
    "goals": "goals",
    "stakeholders": "stakeholders",
    "agreements": "agreements",
    "assets": "assets",
    "points": "attack_points",
    "threats": "threats",
    "requirements": "requirements",
    "validations": "validations",
}


def _ranking_payload(project: Project) -> list[dict[str, Any]]:
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


def _workflow_payload(project: Project) -> dict[str, Any]:
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


def create_app(
    store: ProjectStore,
    default_catalog: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="storewb", docs_url=None, redoc_url=None)

    @app.exception_handler(StoreError)
    async def handle_store_error(_request: Request, exc: StoreError) -> JSONResponse:
        return JSONResponse(status_code=_status_for(exc), content=_error_body(exc))

    @app.get("/api/v1/project")
    def get_project() -> dict[str, Any]:
        return model.project_to_dict(store.load())

    def _register_collection(name: str) -> None:
        decode, encode = _ENTITY_CODECS[name]
        attr = _COLLECTION_ATTR[name]

        @app.get(f"/api/v1/{name}")
        def list_entities() -> list[dict[str, Any]]:
            return [encode(e) for e in getattr(store.load(), attr)]

        @app.post(f"/api/v1/{name}", status_code=201)
        def create_entity(payload: dict = Body(...)) -> dict[str, Any]:
            box: dict[str, Any] = {}

            def apply(project: Project) -> Project:
                body = payload
                if name == "requirements" and "id" not in body:
                    body = {**body, "id": catalog_mod.next_requirement_id(project)}
                try:
                    entity = decode(body)
                except model.DecodeError as exc:
                    raise InvalidProject(str(exc)) from None
                box["entity"] = entity
                if name in ("agreements", "validations"):
                    return workflow.upsert(project, entity)
                return workflow.add_entity(project, entity)

            store.mutate(apply)
            return encode(box["entity"])

    for collection in _ENTITY_CODECS:
        _register_collection(collection)

    @app.post("/api/v1/points/acknowledgements", status_code=201)
    def acknowledge_empty(payload: dict = Body(...)) -> dict[str, Any]:
        kind = PointKind(payload.get("kind"))
        store.mutate(lambda p: workflow.declare_points_empty(p, kind))
        return {"declared_empty": kind.value}

    @app.put("/api/v1/risk/{threat_id}")
    def put_risk(threat_id: str, payload: dict = Body(...)) -> dict[str, Any]:
        if "method" in payload:
            data = {**payload, "threat_id": threat_id}
            try:
                assessment = model.assessment_from_dict(data)
            except model.DecodeError as exc:
                raise InvalidProject(str(exc)) from None
            project = store.mutate(lambda p: risk.set_assessment(p, assessment))
        elif "excluded" in payload:
            project = store.mutate(
                lambda p: risk.set_excluded(
                    p, threat_id, bool(payload["excluded"]), payload.get("rationale", "")
                )
            )
        else:
            raise InvalidProject("body must carry 'method' or 'excluded'")
        return model.assessment_to_dict(model.find_assessment(project, threat_id))

    @app.get("/api/v1/risk/ranking")
    def get_ranking() -> list[dict[str, Any]]:
        return _ranking_payload(store.load())

    @app.post("/api/v1/elicit")
    def post_elicit(payload: dict | None = Body(None)) -> dict[str, Any]:
        payload = payload or {}
        if "catalog" in payload:
            loaded = catalog_mod.parse_catalog(json.dumps(payload["catalog"]))
        else:
            path = payload.get("catalog_path") or default_catalog
            if path is None:
                from . import fixtures

                path = fixtures.erp_catalog_path()
            loaded = catalog_mod.load_catalog(path)
        box: dict[str, catalog_mod.ElicitationOutcome] = {}

        def run(p: Project) -> Project:
            outcome = catalog_mod.elicit_all(p, loaded)
            box["outcome"] = outcome
            return outcome.project

        project = store.mutate(run)
        outcome = box["outcome"]
        return {
            "created": [
                model.requirement_to_dict(model.find_requirement(project, rid))
                for rid in outcome.created
            ],
            "needs_manual": outcome.needs_manual,
        }

    @app.get("/api/v1/workflow")
    def get_workflow() -> dict[str, Any]:
        return _workflow_payload(store.load())

    @app.post("/api/v1/workflow/{step}/complete")
    def post_complete(step: int) -> dict[str, Any]:
        project = store.mutate(lambda p: workflow.complete_step(p, step))
        return _workflow_payload(project)

    @app.post("/api/v1/workflow/{step}/reopen")
    def post_reopen(step: int) -> dict[str, Any]:
        project = store.mutate(lambda p: workflow.reopen_step(p, step))
        return _workflow_payload(project)

    @app.get("/api/v1/reports/coverage")
    def get_coverage() -> dict[str, list[str]]:
        report = analysis.coverage_report(store.load())
        return {
            "assets_without_threats": report.assets_without_threats,
            "threats_without_points": report.threats_without_points,
            "threats_without_requirements": report.threats_without_requirements,
            "unvalidated_requirements": report.unvalidated_requirements,
            "orphan_points": report.orphan_points,
        }

    @app.get("/api/v1/reports/surface")
    def get_surface() -> dict[str, Any]:
        summary = analysis.surface_summary(store.load())
        return {
            kind.value: {"count": len(points), "points": [p.id for p in points]}
            for kind, points in summary.by_kind.items()
        }

    @app.get("/api/v1/reports/cia")
    def get_cia() -> dict[str, Any]:
        summary = analysis.cia_summary(store.load())
        return {
            "facets": {facet.value: count for facet, count in summary.facets.items()},
            "priorities": {p.value: count for p, count in summary.priorities.items()},
        }

    @app.post("/api/v1/document/srs")
    def post_srs(payload: dict | None = Body(None)) -> dict[str, Any]:
        payload = payload or {}
        out = payload.get("path")
        out_path = Path(out) if out else store.path.with_name(store.path.name.split(".")[0] + ".srs.md")
        box: dict[str, Any] = {}

        def run(p: Project) -> Project:
            updated, document, rendered = docgen.generate_srs(p, document_path=str(out_path))
            box["document"] = document
            box["rendered"] = rendered
            return updated

        store.mutate(run)
        out_path.write_text(box["rendered"], encoding="utf-8", newline="\n")
        document = box["document"]
        return {
            "checksum": document.checksum,
            "generated_at": document.generated_at.isoformat(),
            "path": str(out_path),
            "body": docgen.strip_timestamp(box["rendered"]),
        }

    @app.get("/api/v1/suggest/stride")
    def get_stride_suggestion(text: str = Query("")) -> dict[str, list[str]]:
        categories = analysis.stride_suggest(text, "")
        ordered = [s.value for s in model.STRIDE_ORDER if s in categories]
        return {"stride": ordered}

    @app.get("/api/v1/suggest/requirements/{threat_id}")
    def get_requirement_suggestions(threat_id: str, limit: int = Query(5, ge=1)) -> list[dict[str, Any]]:
        project = store.load()
        threat = model.find_threat(project, threat_id)
        if threat is None:
            raise NotFound(threat_id, entity_id=threat_id)
        if default_catalog is not None:
            loaded = catalog_mod.load_catalog(default_catalog)
        else:
            from . import fixtures

            loaded = fixtures.erp_catalog()
        out = []
        for suggestion in catalog_mod.suggest(threat, loaded, limit=limit):
            entry = catalog_mod.entry_by_id(loaded, suggestion.entry_id)
            out.append(
                {
                    "threat_id": suggestion.threat_id,
                    "entry_id": suggestion.entry_id,
                    "score": suggestion.score,
                    "rank": suggestion.rank,
                    "title": entry.title,
                    "requirement_text": entry.requirement_text,
                }
            )
        return out

    if static_dir is not None and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def serve(
    project_path: str | Path,
    host: str = "127.0.0.1",
    port: int = 8000,
    static_dir: str | Path | None = None,
    default_catalog: str | Path | None = None,
) -> None:
    """Run the service for one project file until interrupted."""
    import uvicorn

    store = ProjectStore(project_path)
    store.load()  # fail fast on missing or corrupt project files
    if static_dir is None:
        candidate = Path("frontend/dist")
        if candidate.is_dir():
            static_dir = candidate
    app = create_app(store, default_catalog=default_catalog, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")
