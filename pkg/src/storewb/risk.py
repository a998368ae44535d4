"""Risk scoring and prioritization.

Two methods share one integer scale, "tenths" in 0..100, so rankings never
touch floating point:

- SimpleRisk: probability x damage potential, both 1..10, read as a percent.
  The percent doubles as the tenths value (50% sits at 5.0 on the 0..10 axis).
- DREAD: average of five 0..10 components. The exact average in tenths is
  2 x sum, since sum/5 == (2 x sum)/10.
"""

from __future__ import annotations

from dataclasses import replace
from enum import Enum
from typing import Sequence

from . import model, workflow
from .errors import MissingAssessment, NotFound, OutOfRange
from .model import Project, RiskAssessment, RiskMethod

DREAD_COMPONENTS = (
    "Damage",
    "Reproducibility",
    "Exploitability",
    "AffectedUsers",
    "Discoverability",
)


class RiskBand(str, Enum):
    HIGH = "High"
    MEDIUM = "Medium"
    LOW = "Low"


def simple_risk(probability: int, damage: int) -> int:
    """Risk percent: probability x damage potential, each on a 1..10 scale."""
    for name, value in (("probability", probability), ("damage", damage)):
        if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= 10:
            raise OutOfRange(f"{name} must be an integer in 1..10, got {value!r}")
    return probability * damage


def dread_score(components: Sequence[int]) -> int:
    """Exact DREAD average in tenths: 2 x sum of the five 0..10 components."""
    if len(components) != 5:
        raise OutOfRange(f"expected 5 components, got {len(components)}")
    for name, value in zip(DREAD_COMPONENTS, components):
        if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value <= 10:
            raise OutOfRange(f"{name} must be an integer in 0..10, got {value!r}")
    return 2 * sum(components)


def risk_band(score_tenths: int) -> RiskBand:
    """High at 70+, Medium at 40..69, Low below 40."""
    if not 0 <= score_tenths <= 100:
        raise OutOfRange(f"score_tenths must be in 0..100, got {score_tenths}")
    if score_tenths >= 70:
        return RiskBand.HIGH
    if score_tenths >= 40:
        return RiskBand.MEDIUM
    return RiskBand.LOW


def score_tenths(assessment: RiskAssessment) -> int:
    if assessment.method is RiskMethod.SIMPLE:
        return simple_risk(assessment.probability, assessment.damage_potential)
    return dread_score(assessment.dread_components or [])


def band(assessment: RiskAssessment) -> RiskBand:
    return risk_band(score_tenths(assessment))


def format_tenths(value: int) -> str:
    """Render tenths with one decimal place, e.g. 92 -> "9.2"."""
    return f"{value // 10}.{value % 10}"


def prioritize(project: Project) -> list[tuple[str, int]]:
    """All threats ordered by descending score; ties by ascending numeric id."""
    missing = [t.id for t in project.threats if model.find_assessment(project, t.id) is None]
    if missing:
        raise MissingAssessment(
            f"threats without assessment: {', '.join(missing)}", threat_ids=missing
        )
    scored = [
        (t.id, score_tenths(model.find_assessment(project, t.id)))
        for t in project.threats
    ]
    scored.sort(key=lambda item: (-item[1], model.numeric_part(item[0])))
    return scored


def set_assessment(project: Project, assessment: RiskAssessment) -> Project:
    """Create or replace the threat's assessment (reopening step 7 if complete)."""
    if model.find_threat(project, assessment.threat_id) is None:
        raise NotFound(assessment.threat_id, entity_id=assessment.threat_id)
    return workflow.upsert(project, assessment)


def set_excluded(project: Project, threat_id: str, excluded: bool, rationale: str = "") -> Project:
    """Mark a threat in or out of the step-8 elicitation obligation."""
    if model.find_threat(project, threat_id) is None:
        raise NotFound(threat_id, entity_id=threat_id)
    assessment = model.find_assessment(project, threat_id)
    if assessment is None:
        raise MissingAssessment(
            f"threat {threat_id} has no assessment", threat_ids=[threat_id]
        )
    updated = replace(
        assessment,
        excluded=excluded,
        exclusion_rationale=(rationale or None) if excluded else None,
    )
    return workflow.replace_entity(project, updated)
