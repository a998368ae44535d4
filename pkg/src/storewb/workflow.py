"""Sequential ten-step workflow: gating, exit checks, staleness on reopen.

Steps can never be skipped: completing step k requires k to be the current
step and all of its exit checks to hold. Reopening an earlier step marks every
completed later step Stale; stale steps are re-completed in order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import model
from .errors import (
    ExitChecksFailed,
    StepNotCurrent,
    StepNotStarted,
    StepOutOfRange,
)
from .model import (
    Agreement,
    AgreementVerdict,
    Asset,
    AttackPoint,
    Goal,
    PointKind,
    Project,
    RiskAssessment,
    SecurityRequirement,
    SrsRecord,
    Stakeholder,
    StakeholderPriority,
    StepState,
    StepStatus,
    Threat,
    ValidationRecord,
)

STEP_TITLES = {
    1: "Identify System Goals",
    2: "Identify and Prioritize Stakeholders",
    3: "Agree upon Goals",
    4: "Asset Identification",
    5: "Security Attack Analysis",
    6: "Threat Identification and Categorization",
    7: "Risk Evaluation and Prioritization",
    8: "Security Requirements Elicitation",
    9: "Security Requirements Validation",
    10: "Security Requirements Specification Document",
}

_MUTATION_STEP = {
    Goal: 1,
    Stakeholder: 2,
    Agreement: 3,
    Asset: 4,
    AttackPoint: 5,
    Threat: 6,
    RiskAssessment: 7,
    SecurityRequirement: 8,
    ValidationRecord: 9,
    SrsRecord: 10,
}


@dataclass
class ExitCheck:
    step: int
    rule_id: str
    description: str
    satisfied: bool
    details: str = ""


def _statuses(project: Project) -> dict[int, StepStatus]:
    return {s.step: s.status for s in project.step_states}


def step_status(project: Project, step: int) -> StepStatus:
    _require_step(step)
    return _statuses(project)[step]


def _require_step(step: int) -> None:
    if not isinstance(step, int) or not 1 <= step <= 10:
        raise StepOutOfRange(f"step {step} not in 1..10", step=step)


def current_step(project: Project) -> int:
    """Lowest step whose status is not Complete; 10 when everything is done."""
    statuses = _statuses(project)
    for step in range(1, 11):
        if statuses[step] is not StepStatus.COMPLETE:
            return step
    return 10


def mutation_step_of(kind: type | object) -> int:
    """Step that produces entities of the given kind."""
    if not isinstance(kind, type):
        kind = type(kind)
    try:
        return _MUTATION_STEP[kind]
    except KeyError:
        raise StepOutOfRange(f"no workflow step produces {kind.__name__}") from None


def exit_checks(project: Project, step: int) -> list[ExitCheck]:
    """The step's completion rules with satisfied flags; never raises on content."""
    _require_step(step)
    checks: list[ExitCheck] = []

    def check(rule_id: str, description: str, satisfied: bool, details: str = "") -> None:
        checks.append(ExitCheck(step, rule_id, description, satisfied, details))

    if step == 1:
        check("goals-nonempty", "at least one system goal", bool(project.goals))
    elif step == 2:
        check("stakeholders-nonempty", "at least one stakeholder", bool(project.stakeholders))
        unprioritized = [
            s.id for s in project.stakeholders if not isinstance(s.priority, StakeholderPriority)
        ]
        check(
            "stakeholders-prioritized",
            "every stakeholder carries a priority",
            not unprioritized,
            ", ".join(unprioritized),
        )
    elif step == 3:
        critical = [s for s in project.stakeholders if s.priority is StakeholderPriority.CRITICAL]
        agreed = {
            (a.goal_id, a.stakeholder_id)
            for a in project.agreements
            if a.verdict is AgreementVerdict.AGREED
        }
        missing = [
            f"({g.id},{s.id})"
            for g in project.goals
            for s in critical
            if (g.id, s.id) not in agreed
        ]
        check(
            "agreements-critical-complete",
            "every goal agreed by every Critical stakeholder",
            not missing,
            ", ".join(missing),
        )
        objections = [
            model.agreement_key(a)
            for a in project.agreements
            if a.verdict is AgreementVerdict.OBJECTED
        ]
        check(
            "agreements-no-objections",
            "no unresolved objections",
            not objections,
            ", ".join(objections),
        )
    elif step == 4:
        check("assets-nonempty", "at least one asset", bool(project.assets))
        uncategorized = [
            a.id for a in project.assets if not a.cia or not isinstance(a.priority, model.AssetPriority)
        ]
        check(
            "assets-categorized",
            "every asset has CIA facets and a priority",
            not uncategorized,
            ", ".join(uncategorized),
        )
    elif step == 5:
        by_kind = {kind: 0 for kind in PointKind}
        for p in project.attack_points:
            by_kind[p.kind] += 1
        check("points-poa-nonempty", "at least one point of attack", by_kind[PointKind.POA] > 0)
        check("points-pob-nonempty", "at least one point of belief", by_kind[PointKind.POB] > 0)
        for kind, rule in ((PointKind.POC, "points-poc-declared"), (PointKind.POD, "points-pod-declared")):
            ok = by_kind[kind] > 0 or kind in project.points_declared_empty
            check(
                rule,
                f"{kind.value} points registered or explicitly declared empty",
                ok,
                "" if ok else f"no {kind.value} points and no 'none declared' acknowledgment",
            )
    elif step == 6:
        check("threats-nonempty", "at least one threat", bool(project.threats))
        untagged = [t.id for t in project.threats if not t.stride]
        check(
            "threats-stride-nonempty",
            "every threat carries at least one STRIDE category",
            not untagged,
            ", ".join(untagged),
        )
        unlinked = [t.id for t in project.threats if not t.asset_refs]
        check(
            "threats-assets-nonempty",
            "every threat references at least one asset",
            not unlinked,
            ", ".join(unlinked),
        )
    elif step == 7:
        counts = {t.id: 0 for t in project.threats}
        for a in project.assessments:
            if a.threat_id in counts:
                counts[a.threat_id] += 1
        wrong = [tid for tid, n in counts.items() if n != 1]
        check(
            "assessments-complete",
            "every threat has exactly one risk assessment",
            bool(project.threats) and not wrong,
            ", ".join(wrong),
        )
    elif step == 8:
        excluded = {a.threat_id for a in project.assessments if a.excluded}
        uncovered = [
            t.id
            for t in project.threats
            if t.id not in excluded and not model.requirements_for_threat(project, t.id)
        ]
        check(
            "requirements-cover-threats",
            "every non-excluded threat has at least one requirement",
            not uncovered,
            ", ".join(uncovered),
        )
    elif step == 9:
        validated = {v.requirement_id for v in project.validations}
        unvalidated = [r.id for r in project.requirements if r.id not in validated]
        check(
            "requirements-validated",
            "every requirement has at least one validation record",
            bool(project.requirements) and not unvalidated,
            ", ".join(unvalidated),
        )
        check(
            "requirements-accepted",
            "at least one requirement is Accepted",
            bool(model.accepted_requirements(project)),
        )
    elif step == 10:
        record = project.srs_record
        check("srs-recorded", "specification document generated", record is not None)
        if record is not None:
            from . import docgen  # deferred: docgen depends on this module

            current = docgen.srs_checksum(project)
            check(
                "srs-checksum-current",
                "recorded checksum matches regeneration",
                record.checksum == current,
                "" if record.checksum == current else "project content changed since generation",
            )
        else:
            check("srs-checksum-current", "recorded checksum matches regeneration", False)
    return checks


def _with_status(project: Project, updates: dict[int, StepStatus]) -> Project:
    states = [
        StepState(s.step, updates.get(s.step, s.status)) for s in project.step_states
    ]
    return replace(project, step_states=states)


def complete_step(project: Project, step: int) -> Project:
    """Mark the current step Complete once all of its exit checks hold."""
    _require_step(step)
    current = current_step(project)
    if step != current:
        raise StepNotCurrent(
            f"step {step} is not current (current is {current})",
            step=step,
            current=current,
        )
    failing = [c.rule_id for c in exit_checks(project, step) if not c.satisfied]
    if failing:
        raise ExitChecksFailed(
            f"step {step} exit checks failed: {', '.join(failing)}",
            step=step,
            failing=failing,
        )
    updates = {step: StepStatus.COMPLETE}
    if step < 10:
        updates[step + 1] = StepStatus.IN_PROGRESS
    return _with_status(project, updates)


def reopen_step(project: Project, step: int) -> Project:
    """Reopen a completed step; later completed steps become Stale."""
    _require_step(step)
    statuses = _statuses(project)
    status = statuses[step]
    if status is StepStatus.STALE and current_step(project) != step:
        raise StepNotStarted(
            f"step {step} is stale; earlier steps must be completed first",
            step=step,
        )
    if status not in (StepStatus.COMPLETE, StepStatus.STALE):
        raise StepNotStarted(f"step {step} was never completed", step=step)
    updates: dict[int, StepStatus] = {step: StepStatus.IN_PROGRESS}
    for later in range(step + 1, 11):
        if statuses[later] is StepStatus.COMPLETE:
            updates[later] = StepStatus.STALE
        elif statuses[later] is StepStatus.IN_PROGRESS:
            # Status carries no completion history, so a started-but-not
            # completed later step falls back to Locked.
            updates[later] = StepStatus.LOCKED
    return _with_status(project, updates)


def touch(project: Project, kind: type | object) -> Project:
    """Auto-reopen the step that produces `kind` when it is already Complete."""
    step = mutation_step_of(kind)
    if _statuses(project)[step] is StepStatus.COMPLETE:
        return reopen_step(project, step)
    return project


def add_entity(project: Project, entity: model.Entity) -> Project:
    return model.add_entity(touch(project, entity), entity)


def remove_entity(project: Project, entity_id: str) -> Project:
    entity = model.find_entity(project, entity_id)
    if entity is not None:
        project = touch(project, entity)
    return model.remove_entity(project, entity_id)


def replace_entity(project: Project, entity: model.Entity) -> Project:
    return model.replace_entity(touch(project, entity), entity)


def upsert(project: Project, entity: model.Entity) -> Project:
    return model.upsert(touch(project, entity), entity)


def declare_points_empty(project: Project, kind: PointKind) -> Project:
    """Record the explicit 'none declared' acknowledgment for PoC or PoD."""
    if kind not in (PointKind.POC, PointKind.POD):
        raise StepOutOfRange(f"only {PointKind.POC.value} and {PointKind.POD.value} can be declared empty")
    project = touch(project, AttackPoint)
    if kind in project.points_declared_empty:
        return project
    return replace(project, points_declared_empty=[*project.points_declared_empty, kind])
