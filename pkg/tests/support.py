"""Shared test helpers: random generators and independent oracles.

The oracles deliberately re-derive results through different code paths than
the library (selection sort instead of sorted(), character filtering instead
of str.translate) so that agreement is evidence, not tautology.
"""

from __future__ import annotations

import random
import string

from storewb.catalog import Catalog, CatalogEntry, MatchWeights
from storewb.model import (
    Agreement,
    AgreementVerdict,
    Asset,
    AssetPriority,
    AttackPoint,
    CiaFacet,
    Goal,
    GoalSource,
    PointKind,
    Project,
    RequirementOrigin,
    RiskAssessment,
    RiskMethod,
    SecurityRequirement,
    Stakeholder,
    StakeholderGroup,
    StakeholderPriority,
    StepState,
    StepStatus,
    Stride,
    Threat,
    ValidationRecord,
    ValidationVerdict,
    validate_project,
)

WORDS = (
    "attacker", "session", "database", "login", "crash", "notify", "records",
    "admin", "tamper", "disclose", "privilege", "audit", "firewall", "backup",
    "credential", "inject", "leak", "flood", "reveal", "账户", "sécurité",
)


def words(rng: random.Random, n: int) -> str:
    return " ".join(rng.choice(WORDS) for _ in range(n))


def random_step_states(rng: random.Random) -> list[StepState]:
    """A random reachable step-state configuration."""
    complete = rng.randint(0, 10)
    states = [StepState(step, StepStatus.COMPLETE) for step in range(1, complete + 1)]
    if complete < 10:
        states.append(StepState(complete + 1, StepStatus.IN_PROGRESS))
        stale = rng.randint(0, 10 - complete - 1) if rng.random() < 0.3 else 0
        for offset in range(stale):
            states.append(StepState(complete + 2 + offset, StepStatus.STALE))
        for step in range(complete + 2 + stale, 11):
            states.append(StepState(step, StepStatus.LOCKED))
    return states


def random_project(rng: random.Random) -> Project:
    """A structurally valid project with varied content; validity is asserted."""
    project = Project(
        project_id=f"proj-{rng.randrange(16**8):08x}",
        name=words(rng, 2),
        step_states=random_step_states(rng),
    )
    for i in range(rng.randint(0, 5)):
        project.goals.append(
            Goal(id=f"G{i + 1}", description=words(rng, 4), source=rng.choice(list(GoalSource)))
        )
    for i in range(rng.randint(0, 4)):
        project.stakeholders.append(
            Stakeholder(
                id=f"SH{i + 1}",
                name=words(rng, 2),
                group=rng.choice(list(StakeholderGroup)),
                priority=rng.choice(list(StakeholderPriority)),
            )
        )
    for goal in project.goals:
        for stakeholder in project.stakeholders:
            if rng.random() < 0.4:
                project.agreements.append(
                    Agreement(
                        goal_id=goal.id,
                        stakeholder_id=stakeholder.id,
                        verdict=rng.choice(list(AgreementVerdict)),
                        note=words(rng, 2) if rng.random() < 0.3 else None,
                    )
                )
    for i in range(rng.randint(0, 5)):
        facets = rng.sample(list(CiaFacet), rng.randint(1, 3))
        project.assets.append(
            Asset(
                id=f"A{i + 1}",
                name=words(rng, 2),
                description=words(rng, 3),
                cia=facets,
                priority=rng.choice(list(AssetPriority)),
                identified_by=[s.id for s in project.stakeholders if rng.random() < 0.3],
            )
        )
    for i in range(rng.randint(0, 6)):
        kind = rng.choice(list(PointKind))
        prefix = {"PoA": "PA", "PoB": "PB", "PoC": "PC", "PoD": "PD"}[kind.value]
        project.attack_points.append(
            AttackPoint(id=f"{prefix}{i + 1}", kind=kind, name=words(rng, 2), description=words(rng, 3))
        )
    if project.assets:
        for i in range(rng.randint(0, 5)):
            project.threats.append(
                Threat(
                    id=f"T{i + 1}",
                    title=words(rng, 3),
                    description=words(rng, 5),
                    stride=rng.sample(list(Stride), rng.randint(1, 6)),
                    asset_refs=[rng.choice(project.assets).id],
                    point_refs=[p.id for p in project.attack_points if rng.random() < 0.2],
                    mitigated=rng.random() < 0.5,
                )
            )
    for threat in project.threats:
        if rng.random() < 0.7:
            if rng.random() < 0.5:
                project.assessments.append(
                    RiskAssessment(
                        threat_id=threat.id,
                        method=RiskMethod.DREAD,
                        dread_components=[rng.randint(0, 10) for _ in range(5)],
                        excluded=rng.random() < 0.2,
                        exclusion_rationale=None,
                    )
                )
            else:
                project.assessments.append(
                    RiskAssessment(
                        threat_id=threat.id,
                        method=RiskMethod.SIMPLE,
                        probability=rng.randint(1, 10),
                        damage_potential=rng.randint(1, 10),
                    )
                )
    if project.threats:
        for i in range(rng.randint(0, 3)):
            entry_id = f"entry-{rng.randrange(100)}" if rng.random() < 0.5 else None
            project.requirements.append(
                SecurityRequirement(
                    id=f"SR{i + 1}",
                    text=words(rng, 5),
                    threat_refs=[rng.choice(project.threats).id],
                    origin=RequirementOrigin.CATALOG if entry_id else RequirementOrigin.MANUAL,
                    catalog_entry_id=entry_id,
                )
            )
    for requirement in project.requirements:
        for stakeholder in project.stakeholders:
            if rng.random() < 0.3:
                project.validations.append(
                    ValidationRecord(
                        requirement_id=requirement.id,
                        reviewer=stakeholder.id,
                        verdict=rng.choice(list(ValidationVerdict)),
                        rationale=words(rng, 3) if rng.random() < 0.3 else None,
                    )
                )
    violations = validate_project(project)
    assert violations == [], violations
    return project


def random_threat(rng: random.Random, ident: int = 1) -> Threat:
    title = words(rng, rng.randint(1, 4))
    description = words(rng, rng.randint(0, 8))
    if rng.random() < 0.4:
        description += " via Login. (person's data; A1-A6)"
    return Threat(
        id=f"T{ident}",
        title=title,
        description=description,
        stride=rng.sample(list(Stride), rng.randint(1, 6)),
        asset_refs=["A1"],
    )


def random_catalog(rng: random.Random) -> Catalog:
    entries = []
    for i in range(rng.randint(1, 20)):
        entries.append(
            CatalogEntry(
                id=f"e{rng.randrange(1000):03d}-{i}",
                title=words(rng, 2),
                keywords=sorted({rng.choice(WORDS).lower() for _ in range(rng.randint(1, 6))}),
                stride_tags=rng.sample(list(Stride), rng.randint(1, 6)),
                requirement_text=words(rng, 6),
            )
        )
    weights = MatchWeights(stride=rng.choice((1, 2, 3)), keyword=rng.choice((1, 2)))
    return Catalog(catalog_id="random", version=1, entries=entries, weights=weights)


def oracle_suggest(threat: Threat, cat: Catalog, limit: int) -> list[tuple[str, int]]:
    """Exhaustive score-all-then-select oracle for the matcher."""
    text = (threat.title + " " + threat.description).lower()
    cleaned = "".join(c for c in text if c not in string.punctuation)
    tokens = set(cleaned.split())
    scored = []
    for entry in cat.entries:
        overlap_tags = 0
        for tag in dict.fromkeys(threat.stride):
            if tag in entry.stride_tags:
                overlap_tags += 1
        overlap_tokens = 0
        for keyword in dict.fromkeys(entry.keywords):
            if keyword in tokens:
                overlap_tokens += 1
        score = cat.weights.stride * overlap_tags + cat.weights.keyword * overlap_tokens
        if score > 0:
            scored.append((entry.id, score))
    chosen: list[tuple[str, int]] = []
    while scored and len(chosen) < limit:
        best = scored[0]
        for candidate in scored[1:]:
            if candidate[1] > best[1] or (candidate[1] == best[1] and candidate[0] < best[0]):
                best = candidate
        scored.remove(best)
        chosen.append(best)
    return chosen


# Threat matrix frozen from the bundled engagement fixture: STRIDE letters
# and the mitigated flag per threat, in table order.
EXPECTED_STRIDE_MATRIX = {
    "T1": ("", "✓", "", "", "", "✓", "No"),
    "T2": ("", "", "", "✓", "", "✓", "No"),
    "T3": ("", "", "", "", "", "✓", "No"),
    "T4": ("✓", "", "", "✓", "", "", "No"),
    "T5": ("", "✓", "✓", "✓", "", "✓", "Yes"),
    "T6": ("", "", "", "", "", "✓", "Yes"),
    "T7": ("", "", "", "", "", "✓", "Yes"),
    "T8": ("✓", "✓", "", "", "", "✓", "No"),
    "T9": ("", "", "", "", "", "✓", "Yes"),
    "T10": ("", "", "", "", "", "✓", "Yes"),
    "T11": ("", "", "", "", "", "✓", "Yes"),
    "T12": ("", "", "✓", "", "", "", "No"),
}
