"""Read-only analysis over a project: attack surface, STRIDE hints, coverage.

STRIDE suggestions are advisory only. The rule table is a blunt keyword map
and real categorizations routinely diverge from it, so callers must let the
engineer confirm or override every suggestion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import model
from .model import (
    AssetPriority,
    AttackPoint,
    CiaFacet,
    PointKind,
    Project,
    Stride,
)

STRIDE_RULES: tuple[tuple[tuple[str, ...], Stride], ...] = (
    (("credential", "password", "impersonat"), Stride.SPOOFING),
    (("inject", "modify", "tamper"), Stride.TAMPERING),
    (("deny", "claim", "audit", "log"), Stride.REPUDIATION),
    (("disclos", "leak", "reveal"), Stride.INFORMATION_DISCLOSURE),
    (("crash", "flood", "prevent", "block"), Stride.DENIAL_OF_SERVICE),
    (("privilege", "admin", "unauthorized"), Stride.ELEVATION_OF_PRIVILEGE),
)


@dataclass
class SurfaceSummary:
    by_kind: dict[PointKind, list[AttackPoint]]

    @property
    def counts(self) -> dict[PointKind, int]:
        return {kind: len(points) for kind, points in self.by_kind.items()}


@dataclass
class CoverageReport:
    assets_without_threats: list[str] = field(default_factory=list)
    threats_without_points: list[str] = field(default_factory=list)
    threats_without_requirements: list[str] = field(default_factory=list)
    unvalidated_requirements: list[str] = field(default_factory=list)
    orphan_points: list[str] = field(default_factory=list)


@dataclass
class CiaSummary:
    facets: dict[CiaFacet, int]
    priorities: dict[AssetPriority, int]


def surface_summary(project: Project) -> SurfaceSummary:
    """Attack points grouped by kind, insertion order preserved."""
    by_kind: dict[PointKind, list[AttackPoint]] = {kind: [] for kind in PointKind}
    for point in project.attack_points:
        by_kind[point.kind].append(point)
    return SurfaceSummary(by_kind=by_kind)


def stride_suggest(title: str, description: str) -> set[Stride]:
    """Union of rule hits over the lowercased title plus description."""
    text = f"{title} {description}".lower()
    return {
        category
        for needles, category in STRIDE_RULES
        if any(needle in text for needle in needles)
    }


def coverage_report(project: Project) -> CoverageReport:
    """Gap lists across the asset -> point -> threat -> requirement -> validation chain."""
    threatened_assets = {ref for t in project.threats for ref in t.asset_refs}
    referenced_points = {ref for t in project.threats for ref in t.point_refs}
    excluded = {a.threat_id for a in project.assessments if a.excluded}
    validated = {v.requirement_id for v in project.validations}
    return CoverageReport(
        assets_without_threats=[a.id for a in project.assets if a.id not in threatened_assets],
        threats_without_points=[t.id for t in project.threats if not t.point_refs],
        threats_without_requirements=[
            t.id
            for t in project.threats
            if t.id not in excluded and not model.requirements_for_threat(project, t.id)
        ],
        unvalidated_requirements=[r.id for r in project.requirements if r.id not in validated],
        orphan_points=[p.id for p in project.attack_points if p.id not in referenced_points],
    )


def cia_summary(project: Project) -> CiaSummary:
    """Asset counts per CIA facet (multi-facet assets count in each) and per priority."""
    facets = {facet: 0 for facet in CiaFacet}
    priorities = {priority: 0 for priority in AssetPriority}
    for asset in project.assets:
        for facet in asset.cia:
            facets[facet] += 1
        priorities[asset.priority] += 1
    return CiaSummary(facets=facets, priorities=priorities)
