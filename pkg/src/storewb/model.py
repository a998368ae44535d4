"""Domain entities for the ten-step threat-oriented requirements workflow.

Every value is an immutable snapshot by convention: mutation helpers return a
new Project and never touch the input. Callers must serialize writes per
project (single-writer contract).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from datetime import datetime
from enum import Enum
from typing import Any, Iterable

from .errors import (
    DanglingReference,
    DuplicateId,
    InvariantViolation,
    NotFound,
    StillReferenced,
)

CURRENT_SCHEMA_VERSION = 1


class GoalSource(str, Enum):
    INTERVIEW = "Interview"
    BRAINSTORMING = "Brainstorming"
    REVIEW = "Review"
    OTHER = "Other"


class StakeholderGroup(str, Enum):
    MANAGERIAL = "Managerial"
    MARKETING = "Marketing"
    INFORMATION_SYSTEM = "InformationSystem"
    OTHER = "Other"


class StakeholderPriority(str, Enum):
    CRITICAL = "Critical"
    MAJOR = "Major"
    MINOR = "Minor"


class AgreementVerdict(str, Enum):
    AGREED = "Agreed"
    OBJECTED = "Objected"


class CiaFacet(str, Enum):
    CONFIDENTIALITY = "C"
    INTEGRITY = "I"
    AVAILABILITY = "A"


class AssetPriority(str, Enum):
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"


class PointKind(str, Enum):
    POA = "PoA"
    POB = "PoB"
    POC = "PoC"
    POD = "PoD"


class Stride(str, Enum):
    SPOOFING = "S"
    TAMPERING = "T"
    REPUDIATION = "R"
    INFORMATION_DISCLOSURE = "I"
    DENIAL_OF_SERVICE = "D"
    ELEVATION_OF_PRIVILEGE = "E"


STRIDE_ORDER = (
    Stride.SPOOFING,
    Stride.TAMPERING,
    Stride.REPUDIATION,
    Stride.INFORMATION_DISCLOSURE,
    Stride.DENIAL_OF_SERVICE,
    Stride.ELEVATION_OF_PRIVILEGE,
)


class RiskMethod(str, Enum):
    SIMPLE = "SimpleRisk"
    DREAD = "Dread"


class RequirementOrigin(str, Enum):
    CATALOG = "Catalog"
    MANUAL = "Manual"


class ValidationVerdict(str, Enum):
    ACCEPTED = "Accepted"
    REJECTED = "Rejected"
    NEEDS_REWORK = "NeedsRework"


class StepStatus(str, Enum):
    LOCKED = "Locked"
    IN_PROGRESS = "InProgress"
    COMPLETE = "Complete"
    STALE = "Stale"


@dataclass
class Goal:
    id: str
    description: str
    source: GoalSource = GoalSource.INTERVIEW


@dataclass
class Stakeholder:
    id: str
    name: str
    group: StakeholderGroup = StakeholderGroup.OTHER
    priority: StakeholderPriority = StakeholderPriority.MINOR


@dataclass
class Agreement:
    goal_id: str
    stakeholder_id: str
    verdict: AgreementVerdict = AgreementVerdict.AGREED
    note: str | None = None


@dataclass
class Asset:
    id: str
    name: str
    description: str = ""
    cia: list[CiaFacet] = field(default_factory=list)
    priority: AssetPriority = AssetPriority.MEDIUM
    identified_by: list[str] = field(default_factory=list)


@dataclass
class AttackPoint:
    id: str
    kind: PointKind
    name: str
    description: str = ""


@dataclass
class Threat:
    id: str
    title: str
    description: str = ""
    stride: list[Stride] = field(default_factory=list)
    asset_refs: list[str] = field(default_factory=list)
    point_refs: list[str] = field(default_factory=list)
    mitigated: bool = False


@dataclass
class RiskAssessment:
    """One score per threat, via SimpleRisk (probability x damage) or DREAD."""

    threat_id: str
    method: RiskMethod
    probability: int | None = None
    damage_potential: int | None = None
    dread_components: list[int] | None = None
    excluded: bool = False
    exclusion_rationale: str | None = None


@dataclass
class SecurityRequirement:
    id: str
    text: str
    threat_refs: list[str] = field(default_factory=list)
    origin: RequirementOrigin = RequirementOrigin.MANUAL
    catalog_entry_id: str | None = None


@dataclass
class ValidationRecord:
    requirement_id: str
    reviewer: str
    verdict: ValidationVerdict
    rationale: str | None = None


@dataclass
class SrsRecord:
    generated_at: datetime
    checksum: str
    document_path: str


@dataclass
class StepState:
    step: int
    status: StepStatus


def initial_step_states() -> list[StepState]:
    states = [StepState(step=1, status=StepStatus.IN_PROGRESS)]
    states.extend(StepState(step=n, status=StepStatus.LOCKED) for n in range(2, 11))
    return states


@dataclass
class Project:
    """Aggregate of all workflow artifacts plus per-step state; unit of persistence."""

    project_id: str
    name: str
    schema_version: int = CURRENT_SCHEMA_VERSION
    goals: list[Goal] = field(default_factory=list)
    stakeholders: list[Stakeholder] = field(default_factory=list)
    agreements: list[Agreement] = field(default_factory=list)
    assets: list[Asset] = field(default_factory=list)
    attack_points: list[AttackPoint] = field(default_factory=list)
    threats: list[Threat] = field(default_factory=list)
    assessments: list[RiskAssessment] = field(default_factory=list)
    requirements: list[SecurityRequirement] = field(default_factory=list)
    validations: list[ValidationRecord] = field(default_factory=list)
    srs_record: SrsRecord | None = None
    points_declared_empty: list[PointKind] = field(default_factory=list)
    step_states: list[StepState] = field(default_factory=initial_step_states)


@dataclass
class Violation:
    entity_id: str
    rule: str
    message: str = ""


_GOAL_ID = re.compile(r"^G\d+$")
_ASSET_ID = re.compile(r"^A\d+$")
_THREAT_ID = re.compile(r"^T\d+$")
_REQUIREMENT_ID = re.compile(r"^SR\d+$")
_POINT_ID = re.compile(r"^P[ABCD]\d+$")

POINT_PREFIX = {
    PointKind.POA: "PA",
    PointKind.POB: "PB",
    PointKind.POC: "PC",
    PointKind.POD: "PD",
}

IdentifiedEntity = Goal | Stakeholder | Asset | AttackPoint | Threat | SecurityRequirement
Entity = (
    IdentifiedEntity
    | Agreement
    | RiskAssessment
    | ValidationRecord
    | SrsRecord
)


def goal_ids(project: Project) -> set[str]:
    return {g.id for g in project.goals}


def stakeholder_ids(project: Project) -> set[str]:
    return {s.id for s in project.stakeholders}


def asset_ids(project: Project) -> set[str]:
    return {a.id for a in project.assets}


def point_ids(project: Project) -> set[str]:
    return {p.id for p in project.attack_points}


def threat_ids(project: Project) -> set[str]:
    return {t.id for t in project.threats}


def requirement_ids(project: Project) -> set[str]:
    return {r.id for r in project.requirements}


def find_threat(project: Project, threat_id: str) -> Threat | None:
    return next((t for t in project.threats if t.id == threat_id), None)


def find_assessment(project: Project, threat_id: str) -> RiskAssessment | None:
    return next((a for a in project.assessments if a.threat_id == threat_id), None)


def find_requirement(project: Project, requirement_id: str) -> SecurityRequirement | None:
    return next((r for r in project.requirements if r.id == requirement_id), None)


def requirements_for_threat(project: Project, threat_id: str) -> list[SecurityRequirement]:
    return [r for r in project.requirements if threat_id in r.threat_refs]


def is_accepted(project: Project, requirement_id: str) -> bool:
    """Accepted means at least one Accepted record and no Rejected/NeedsRework."""
    records = [v for v in project.validations if v.requirement_id == requirement_id]
    if not any(v.verdict is ValidationVerdict.ACCEPTED for v in records):
        return False
    return all(v.verdict is ValidationVerdict.ACCEPTED for v in records)


def accepted_requirements(project: Project) -> list[SecurityRequirement]:
    return [r for r in project.requirements if is_accepted(project, r.id)]


def numeric_part(entity_id: str) -> int:
    """Trailing number of a patterned id, used for deterministic tie-breaking."""
    match = re.search(r"(\d+)$", entity_id)
    if match is None:
        raise ValueError(f"id {entity_id!r} has no numeric part")
    return int(match.group(1))


# --- entity-level invariants ------------------------------------------------


def _entity_violations(entity: Entity) -> list[Violation]:
    out: list[Violation] = []

    def bad(entity_id: str, rule: str, message: str = "") -> None:
        out.append(Violation(entity_id=entity_id, rule=rule, message=message))

    if isinstance(entity, Goal):
        if not _GOAL_ID.match(entity.id):
            bad(entity.id, "goal id matches G<n>")
        if not entity.description.strip():
            bad(entity.id, "description nonempty")
    elif isinstance(entity, Stakeholder):
        if not entity.id.strip():
            bad(entity.id, "stakeholder id nonempty")
        if not isinstance(entity.priority, StakeholderPriority):
            bad(entity.id, "priority is Critical, Major or Minor")
    elif isinstance(entity, Agreement):
        if not isinstance(entity.verdict, AgreementVerdict):
            bad(agreement_key(entity), "verdict is Agreed or Objected")
    elif isinstance(entity, Asset):
        if not _ASSET_ID.match(entity.id):
            bad(entity.id, "asset id matches A<n>")
        if not entity.cia:
            bad(entity.id, "cia nonempty")
        if not isinstance(entity.priority, AssetPriority):
            bad(entity.id, "priority is Low, Medium or High")
    elif isinstance(entity, AttackPoint):
        if not _POINT_ID.match(entity.id):
            bad(entity.id, "point id matches PA<n>|PB<n>|PC<n>|PD<n>")
        elif not entity.id.startswith(POINT_PREFIX[entity.kind]):
            bad(entity.id, "id prefix consistent with kind")
    elif isinstance(entity, Threat):
        if not _THREAT_ID.match(entity.id):
            bad(entity.id, "threat id matches T<n>")
        if not entity.stride:
            bad(entity.id, "stride nonempty")
        if not entity.asset_refs:
            bad(entity.id, "asset_refs nonempty")
    elif isinstance(entity, RiskAssessment):
        key = assessment_key(entity)
        if entity.method is RiskMethod.SIMPLE:
            if entity.dread_components is not None:
                bad(key, "SimpleRisk carries no dread components")
            for name, value in (
                ("probability", entity.probability),
                ("damage_potential", entity.damage_potential),
            ):
                if value is None or not 1 <= value <= 10:
                    bad(key, f"{name} in 1..10")
        elif entity.method is RiskMethod.DREAD:
            if entity.probability is not None or entity.damage_potential is not None:
                bad(key, "Dread carries no probability/damage fields")
            comps = entity.dread_components
            if comps is None or len(comps) != 5 or any(not 0 <= c <= 10 for c in comps):
                bad(key, "dread components are five integers in 0..10")
        else:
            bad(key, "method is SimpleRisk or Dread")
    elif isinstance(entity, SecurityRequirement):
        if not _REQUIREMENT_ID.match(entity.id):
            bad(entity.id, "requirement id matches SR<n>")
        if not entity.text.strip():
            bad(entity.id, "text nonempty")
        if not entity.threat_refs:
            bad(entity.id, "threat_refs nonempty")
        if (entity.origin is RequirementOrigin.CATALOG) != (entity.catalog_entry_id is not None):
            bad(entity.id, "catalog origin carries its entry id")
    elif isinstance(entity, ValidationRecord):
        if not isinstance(entity.verdict, ValidationVerdict):
            bad(validation_key(entity), "verdict is Accepted, Rejected or NeedsRework")
    elif isinstance(entity, SrsRecord):
        if not entity.checksum:
            bad("srs", "checksum nonempty once set")
    return out


def agreement_key(agreement: Agreement) -> str:
    return f"agreement({agreement.goal_id},{agreement.stakeholder_id})"


def assessment_key(assessment: RiskAssessment) -> str:
    return f"assessment({assessment.threat_id})"


def validation_key(record: ValidationRecord) -> str:
    return f"validation({record.requirement_id},{record.reviewer})"


def _dangling(entity: Entity, project: Project) -> list[str]:
    missing: list[str] = []

    def need(ref: str, pool: set[str]) -> None:
        if ref not in pool:
            missing.append(ref)

    if isinstance(entity, Agreement):
        need(entity.goal_id, goal_ids(project))
        need(entity.stakeholder_id, stakeholder_ids(project))
    elif isinstance(entity, Asset):
        for ref in entity.identified_by:
            need(ref, stakeholder_ids(project))
    elif isinstance(entity, Threat):
        for ref in entity.asset_refs:
            need(ref, asset_ids(project))
        for ref in entity.point_refs:
            need(ref, point_ids(project))
    elif isinstance(entity, RiskAssessment):
        need(entity.threat_id, threat_ids(project))
    elif isinstance(entity, SecurityRequirement):
        for ref in entity.threat_refs:
            need(ref, threat_ids(project))
    elif isinstance(entity, ValidationRecord):
        need(entity.requirement_id, requirement_ids(project))
        need(entity.reviewer, stakeholder_ids(project))
    return missing


_COLLECTION_FOR = {
    Goal: "goals",
    Stakeholder: "stakeholders",
    Agreement: "agreements",
    Asset: "assets",
    AttackPoint: "attack_points",
    Threat: "threats",
    RiskAssessment: "assessments",
    SecurityRequirement: "requirements",
    ValidationRecord: "validations",
}


def _check_entity(entity: Entity, project: Project) -> None:
    violations = _entity_violations(entity)
    if violations:
        first = violations[0]
        raise InvariantViolation(
            f"{first.entity_id}: {first.rule}",
            entity_id=first.entity_id,
            rules=[v.rule for v in violations],
        )
    missing = _dangling(entity, project)
    if missing:
        raise DanglingReference(
            f"unresolved reference {missing[0]}", missing=missing
        )


def add_entity(project: Project, entity: Entity) -> Project:
    """Append an entity in stable order after id, invariant and reference checks."""
    if isinstance(entity, SrsRecord):
        _check_entity(entity, project)
        return replace(project, srs_record=entity)

    _check_entity(entity, project)
    if isinstance(entity, Agreement):
        if any(
            a.goal_id == entity.goal_id and a.stakeholder_id == entity.stakeholder_id
            for a in project.agreements
        ):
            raise DuplicateId(agreement_key(entity), entity_id=agreement_key(entity))
    elif isinstance(entity, RiskAssessment):
        if find_assessment(project, entity.threat_id) is not None:
            raise DuplicateId(assessment_key(entity), entity_id=assessment_key(entity))
    elif isinstance(entity, ValidationRecord):
        if any(
            v.requirement_id == entity.requirement_id and v.reviewer == entity.reviewer
            for v in project.validations
        ):
            raise DuplicateId(validation_key(entity), entity_id=validation_key(entity))
    else:
        if entity.id in _all_entity_ids(project):
            raise DuplicateId(entity.id, entity_id=entity.id)

    name = _COLLECTION_FOR[type(entity)]
    return replace(project, **{name: [*getattr(project, name), entity]})


def _all_entity_ids(project: Project) -> set[str]:
    return (
        goal_ids(project)
        | stakeholder_ids(project)
        | asset_ids(project)
        | point_ids(project)
        | threat_ids(project)
        | requirement_ids(project)
    )


def find_entity(project: Project, entity_id: str) -> IdentifiedEntity | None:
    for name in ("goals", "stakeholders", "assets", "attack_points", "threats", "requirements"):
        for entity in getattr(project, name):
            if entity.id == entity_id:
                return entity
    return None


def referencing_ids(project: Project, entity_id: str) -> list[str]:
    """Ids (or composite keys) of records that reference the given entity."""
    refs: list[str] = []
    for a in project.agreements:
        if entity_id in (a.goal_id, a.stakeholder_id):
            refs.append(agreement_key(a))
    for asset in project.assets:
        if entity_id in asset.identified_by:
            refs.append(asset.id)
    for t in project.threats:
        if entity_id in t.asset_refs or entity_id in t.point_refs:
            refs.append(t.id)
    for assessment in project.assessments:
        if assessment.threat_id == entity_id:
            refs.append(assessment_key(assessment))
    for r in project.requirements:
        if entity_id in r.threat_refs:
            refs.append(r.id)
    for v in project.validations:
        if entity_id in (v.requirement_id, v.reviewer):
            refs.append(validation_key(v))
    return refs


def remove_entity(project: Project, entity_id: str) -> Project:
    """Remove an id-bearing entity; refuse while anything still references it."""
    entity = find_entity(project, entity_id)
    if entity is None:
        raise NotFound(entity_id, entity_id=entity_id)
    refs = referencing_ids(project, entity_id)
    if refs:
        raise StillReferenced(
            f"{entity_id} is referenced by {', '.join(refs)}",
            entity_id=entity_id,
            referenced_by=refs,
        )
    name = _COLLECTION_FOR[type(entity)]
    kept = [e for e in getattr(project, name) if e.id != entity_id]
    return replace(project, **{name: kept})


def replace_entity(project: Project, entity: Entity) -> Project:
    """Swap an entity in place (matched by id or composite key), keeping order."""
    _check_entity(entity, project)
    if isinstance(entity, SrsRecord):
        return replace(project, srs_record=entity)
    name = _COLLECTION_FOR[type(entity)]
    if isinstance(entity, Agreement):
        matches = lambda old: (old.goal_id, old.stakeholder_id) == (entity.goal_id, entity.stakeholder_id)
        key = agreement_key(entity)
    elif isinstance(entity, RiskAssessment):
        matches = lambda old: old.threat_id == entity.threat_id
        key = assessment_key(entity)
    elif isinstance(entity, ValidationRecord):
        matches = lambda old: (old.requirement_id, old.reviewer) == (entity.requirement_id, entity.reviewer)
        key = validation_key(entity)
    else:
        matches = lambda old: old.id == entity.id
        key = entity.id
    collection = list(getattr(project, name))
    for i, old in enumerate(collection):
        if matches(old):
            collection[i] = entity
            return replace(project, **{name: collection})
    raise NotFound(key, entity_id=key)


def upsert(project: Project, entity: Entity) -> Project:
    """replace_entity when the key exists, add_entity otherwise."""
    try:
        return replace_entity(project, entity)
    except NotFound:
        return add_entity(project, entity)


# --- whole-project validation -------------------------------------------------


def validate_project(project: Project) -> list[Violation]:
    """Every invariant breach, one Violation per entity id + rule; [] when valid."""
    out: list[Violation] = []

    for collection in (
        project.goals,
        project.stakeholders,
        project.agreements,
        project.assets,
        project.attack_points,
        project.threats,
        project.assessments,
        project.requirements,
        project.validations,
    ):
        for entity in collection:
            out.extend(_entity_violations(entity))
            for missing in _dangling(entity, project):
                entity_id = getattr(entity, "id", None) or _composite_key(entity)
                out.append(
                    Violation(entity_id=entity_id, rule="references resolve", message=missing)
                )
    if project.srs_record is not None:
        out.extend(_entity_violations(project.srs_record))

    for ids in (
        [g.id for g in project.goals],
        [s.id for s in project.stakeholders],
        [a.id for a in project.assets],
        [p.id for p in project.attack_points],
        [t.id for t in project.threats],
        [r.id for r in project.requirements],
    ):
        seen: set[str] = set()
        for entity_id in ids:
            if entity_id in seen:
                out.append(Violation(entity_id=entity_id, rule="ids unique within kind"))
            seen.add(entity_id)

    pairs: set[tuple[str, str]] = set()
    for a in project.agreements:
        pair = (a.goal_id, a.stakeholder_id)
        if pair in pairs:
            out.append(
                Violation(entity_id=agreement_key(a), rule="one agreement per (goal, stakeholder)")
            )
        pairs.add(pair)
    assessed: set[str] = set()
    for assessment in project.assessments:
        if assessment.threat_id in assessed:
            out.append(
                Violation(entity_id=assessment_key(assessment), rule="one assessment per threat")
            )
        assessed.add(assessment.threat_id)
    validated: set[tuple[str, str]] = set()
    for v in project.validations:
        pair = (v.requirement_id, v.reviewer)
        if pair in validated:
            out.append(
                Violation(entity_id=validation_key(v), rule="one record per (requirement, reviewer)")
            )
        validated.add(pair)

    steps = sorted(s.step for s in project.step_states)
    if steps != list(range(1, 11)):
        out.append(Violation(entity_id="project", rule="steps 1..10 exactly once"))
    else:
        by_step = {s.step: s.status for s in project.step_states}
        if by_step[1] is StepStatus.LOCKED:
            out.append(Violation(entity_id="project", rule="step 1 is never Locked"))
        for k in range(2, 11):
            if by_step[k] in (StepStatus.IN_PROGRESS, StepStatus.COMPLETE) and any(
                by_step[j] in (StepStatus.LOCKED, StepStatus.IN_PROGRESS)
                for j in range(1, k)
            ):
                out.append(
                    Violation(
                        entity_id="project",
                        rule="started steps have Complete or Stale predecessors",
                        message=f"step {k}",
                    )
                )
    if project.schema_version < 1:
        out.append(Violation(entity_id="project", rule="schema_version >= 1"))
    return out


def _composite_key(entity: Entity) -> str:
    if isinstance(entity, Agreement):
        return agreement_key(entity)
    if isinstance(entity, RiskAssessment):
        return assessment_key(entity)
    if isinstance(entity, ValidationRecord):
        return validation_key(entity)
    return repr(entity)


# --- dict codec (persistence payloads and API bodies) -------------------------


def _enum_list(values: Iterable[Enum]) -> list[str]:
    return [v.value for v in values]


def goal_to_dict(g: Goal) -> dict[str, Any]:
    return {"id": g.id, "description": g.description, "source": g.source.value}


def stakeholder_to_dict(s: Stakeholder) -> dict[str, Any]:
    return {"id": s.id, "name": s.name, "group": s.group.value, "priority": s.priority.value}


def agreement_to_dict(a: Agreement) -> dict[str, Any]:
    return {
        "goal_id": a.goal_id,
        "stakeholder_id": a.stakeholder_id,
        "verdict": a.verdict.value,
        "note": a.note,
    }


def asset_to_dict(a: Asset) -> dict[str, Any]:
    return {
        "id": a.id,
        "name": a.name,
        "description": a.description,
        "cia": _enum_list(a.cia),
        "priority": a.priority.value,
        "identified_by": list(a.identified_by),
    }


def point_to_dict(p: AttackPoint) -> dict[str, Any]:
    return {"id": p.id, "kind": p.kind.value, "name": p.name, "description": p.description}


def threat_to_dict(t: Threat) -> dict[str, Any]:
    return {
        "id": t.id,
        "title": t.title,
        "description": t.description,
        "stride": _enum_list(t.stride),
        "asset_refs": list(t.asset_refs),
        "point_refs": list(t.point_refs),
        "mitigated": t.mitigated,
    }


def assessment_to_dict(a: RiskAssessment) -> dict[str, Any]:
    return {
        "threat_id": a.threat_id,
        "method": a.method.value,
        "probability": a.probability,
        "damage_potential": a.damage_potential,
        "dread_components": list(a.dread_components) if a.dread_components is not None else None,
        "excluded": a.excluded,
        "exclusion_rationale": a.exclusion_rationale,
    }


def requirement_to_dict(r: SecurityRequirement) -> dict[str, Any]:
    return {
        "id": r.id,
        "text": r.text,
        "threat_refs": list(r.threat_refs),
        "origin": r.origin.value,
        "catalog_entry_id": r.catalog_entry_id,
    }


def validation_to_dict(v: ValidationRecord) -> dict[str, Any]:
    return {
        "requirement_id": v.requirement_id,
        "reviewer": v.reviewer,
        "verdict": v.verdict.value,
        "rationale": v.rationale,
    }


def project_to_dict(project: Project) -> dict[str, Any]:
    return {
        "project_id": project.project_id,
        "name": project.name,
        "schema_version": project.schema_version,
        "goals": [goal_to_dict(g) for g in project.goals],
        "stakeholders": [stakeholder_to_dict(s) for s in project.stakeholders],
        "agreements": [agreement_to_dict(a) for a in project.agreements],
        "assets": [asset_to_dict(a) for a in project.assets],
        "attack_points": [point_to_dict(p) for p in project.attack_points],
        "threats": [threat_to_dict(t) for t in project.threats],
        "assessments": [assessment_to_dict(a) for a in project.assessments],
        "requirements": [requirement_to_dict(r) for r in project.requirements],
        "validations": [validation_to_dict(v) for v in project.validations],
        "srs_record": (
            None
            if project.srs_record is None
            else {
                "generated_at": project.srs_record.generated_at.isoformat(),
                "checksum": project.srs_record.checksum,
                "document_path": project.srs_record.document_path,
            }
        ),
        "points_declared_empty": _enum_list(project.points_declared_empty),
        "step_states": [{"step": s.step, "status": s.status.value} for s in project.step_states],
    }


class DecodeError(ValueError):
    """Structural problem while decoding a dict into an entity."""


def _take(data: dict[str, Any], key: str, kind: type, where: str, optional: bool = False) -> Any:
    if key not in data or data[key] is None:
        if optional:
            return None
        raise DecodeError(f"{where}: missing field {key!r}")
    value = data[key]
    if kind is int and isinstance(value, bool):
        raise DecodeError(f"{where}: field {key!r} must be {kind.__name__}")
    if not isinstance(value, kind):
        raise DecodeError(f"{where}: field {key!r} must be {kind.__name__}")
    return value


def _enum(value: Any, enum_type: type[Enum], where: str) -> Any:
    try:
        return enum_type(value)
    except ValueError as exc:
        raise DecodeError(f"{where}: {exc}") from None


def _enum_values(data: dict[str, Any], key: str, enum_type: type[Enum], where: str) -> list[Any]:
    raw = _take(data, key, list, where)
    return [_enum(v, enum_type, where) for v in raw]


def _str_list(data: dict[str, Any], key: str, where: str, optional: bool = False) -> list[str]:
    raw = _take(data, key, list, where, optional=optional)
    if raw is None:
        return []
    if not all(isinstance(v, str) for v in raw):
        raise DecodeError(f"{where}: field {key!r} must be a list of strings")
    return list(raw)


def goal_from_dict(data: dict[str, Any]) -> Goal:
    return Goal(
        id=_take(data, "id", str, "goal"),
        description=_take(data, "description", str, "goal"),
        source=_enum(data.get("source", "Interview"), GoalSource, "goal"),
    )


def stakeholder_from_dict(data: dict[str, Any]) -> Stakeholder:
    return Stakeholder(
        id=_take(data, "id", str, "stakeholder"),
        name=_take(data, "name", str, "stakeholder"),
        group=_enum(data.get("group", "Other"), StakeholderGroup, "stakeholder"),
        priority=_enum(data.get("priority", "Minor"), StakeholderPriority, "stakeholder"),
    )


def agreement_from_dict(data: dict[str, Any]) -> Agreement:
    return Agreement(
        goal_id=_take(data, "goal_id", str, "agreement"),
        stakeholder_id=_take(data, "stakeholder_id", str, "agreement"),
        verdict=_enum(data.get("verdict", "Agreed"), AgreementVerdict, "agreement"),
        note=_take(data, "note", str, "agreement", optional=True),
    )


def asset_from_dict(data: dict[str, Any]) -> Asset:
    return Asset(
        id=_take(data, "id", str, "asset"),
        name=_take(data, "name", str, "asset"),
        description=data.get("description") or "",
        cia=_enum_values(data, "cia", CiaFacet, "asset"),
        priority=_enum(data.get("priority", "Medium"), AssetPriority, "asset"),
        identified_by=_str_list(data, "identified_by", "asset", optional=True),
    )


def point_from_dict(data: dict[str, Any]) -> AttackPoint:
    return AttackPoint(
        id=_take(data, "id", str, "attack point"),
        kind=_enum(_take(data, "kind", str, "attack point"), PointKind, "attack point"),
        name=_take(data, "name", str, "attack point"),
        description=data.get("description") or "",
    )


def threat_from_dict(data: dict[str, Any]) -> Threat:
    return Threat(
        id=_take(data, "id", str, "threat"),
        title=_take(data, "title", str, "threat"),
        description=data.get("description") or "",
        stride=_enum_values(data, "stride", Stride, "threat"),
        asset_refs=_str_list(data, "asset_refs", "threat"),
        point_refs=_str_list(data, "point_refs", "threat", optional=True),
        mitigated=bool(data.get("mitigated", False)),
    )


def assessment_from_dict(data: dict[str, Any]) -> RiskAssessment:
    components = data.get("dread_components")
    if components is not None:
        if not isinstance(components, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in components
        ):
            raise DecodeError("assessment: dread_components must be a list of integers")
    return RiskAssessment(
        threat_id=_take(data, "threat_id", str, "assessment"),
        method=_enum(_take(data, "method", str, "assessment"), RiskMethod, "assessment"),
        probability=_take(data, "probability", int, "assessment", optional=True),
        damage_potential=_take(data, "damage_potential", int, "assessment", optional=True),
        dread_components=list(components) if components is not None else None,
        excluded=bool(data.get("excluded", False)),
        exclusion_rationale=_take(data, "exclusion_rationale", str, "assessment", optional=True),
    )


def requirement_from_dict(data: dict[str, Any]) -> SecurityRequirement:
    return SecurityRequirement(
        id=_take(data, "id", str, "requirement"),
        text=_take(data, "text", str, "requirement"),
        threat_refs=_str_list(data, "threat_refs", "requirement"),
        origin=_enum(data.get("origin", "Manual"), RequirementOrigin, "requirement"),
        catalog_entry_id=_take(data, "catalog_entry_id", str, "requirement", optional=True),
    )


def validation_from_dict(data: dict[str, Any]) -> ValidationRecord:
    return ValidationRecord(
        requirement_id=_take(data, "requirement_id", str, "validation"),
        reviewer=_take(data, "reviewer", str, "validation"),
        verdict=_enum(_take(data, "verdict", str, "validation"), ValidationVerdict, "validation"),
        rationale=_take(data, "rationale", str, "validation", optional=True),
    )


def project_from_dict(data: dict[str, Any]) -> Project:
    if not isinstance(data, dict):
        raise DecodeError("project payload must be an object")
    srs = data.get("srs_record")
    srs_record = None
    if srs is not None:
        try:
            generated_at = datetime.fromisoformat(_take(srs, "generated_at", str, "srs_record"))
        except ValueError as exc:
            raise DecodeError(f"srs_record: {exc}") from None
        srs_record = SrsRecord(
            generated_at=generated_at,
            checksum=_take(srs, "checksum", str, "srs_record"),
            document_path=_take(srs, "document_path", str, "srs_record"),
        )
    raw_steps = _take(data, "step_states", list, "project")
    step_states = [
        StepState(
            step=_take(s, "step", int, "step_states"),
            status=_enum(_take(s, "status", str, "step_states"), StepStatus, "step_states"),
        )
        for s in raw_steps
    ]
    return Project(
        project_id=_take(data, "project_id", str, "project"),
        name=_take(data, "name", str, "project"),
        schema_version=_take(data, "schema_version", int, "project"),
        goals=[goal_from_dict(g) for g in _take(data, "goals", list, "project")],
        stakeholders=[stakeholder_from_dict(s) for s in _take(data, "stakeholders", list, "project")],
        agreements=[agreement_from_dict(a) for a in _take(data, "agreements", list, "project")],
        assets=[asset_from_dict(a) for a in _take(data, "assets", list, "project")],
        attack_points=[point_from_dict(p) for p in _take(data, "attack_points", list, "project")],
        threats=[threat_from_dict(t) for t in _take(data, "threats", list, "project")],
        assessments=[assessment_from_dict(a) for a in _take(data, "assessments", list, "project")],
        requirements=[requirement_from_dict(r) for r in _take(data, "requirements", list, "project")],
        validations=[validation_from_dict(v) for v in _take(data, "validations", list, "project")],
        srs_record=srs_record,
        points_declared_empty=[
            _enum(v, PointKind, "points_declared_empty")
            for v in data.get("points_declared_empty", [])
        ],
        step_states=step_states,
    )
