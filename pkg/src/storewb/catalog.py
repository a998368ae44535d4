"""Threat dictionary: catalog file parsing, deterministic matching, elicitation.

A catalog maps threat patterns (keywords plus STRIDE tags) to requirement
templates. Matching is purely lexical so that the same inputs rank the same
on every platform: score = stride_weight x |shared STRIDE tags| +
keyword_weight x |shared tokens|, default weights 3 and 1.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass, field
from pathlib import Path

from . import model, risk, workflow
from .errors import CatalogSyntaxError, DuplicateEntryId, EmptyField, StepNotReady
from .model import (
    Project,
    RequirementOrigin,
    SecurityRequirement,
    StepStatus,
    Stride,
    Threat,
)

DEFAULT_STRIDE_WEIGHT = 3
DEFAULT_KEYWORD_WEIGHT = 1

_PUNCTUATION_TABLE = str.maketrans("", "", string.punctuation)


@dataclass
class MatchWeights:
    stride: int = DEFAULT_STRIDE_WEIGHT
    keyword: int = DEFAULT_KEYWORD_WEIGHT


@dataclass
class CatalogEntry:
    id: str
    title: str
    keywords: list[str]
    stride_tags: list[Stride]
    requirement_text: str
    references: list[str] = field(default_factory=list)


@dataclass
class Catalog:
    catalog_id: str
    version: int
    entries: list[CatalogEntry]
    weights: MatchWeights = field(default_factory=MatchWeights)
    notes: str = ""


@dataclass
class Suggestion:
    threat_id: str
    entry_id: str
    score: int
    rank: int


@dataclass
class ElicitationOutcome:
    """Result of a catalog sweep: the new project plus what happened per threat."""

    project: Project
    created: list[str]
    needs_manual: list[str]


def tokenize(text: str) -> set[str]:
    """Lowercase, strip ASCII punctuation, split on whitespace, deduplicate."""
    return set(text.lower().translate(_PUNCTUATION_TABLE).split())


def _entry_field(raw: dict, entry_id: str, name: str, kind: type):
    if name not in raw or raw[name] is None:
        raise EmptyField(f"entry {entry_id!r}: missing field {name!r}", entry_id=entry_id, field=name)
    value = raw[name]
    if not isinstance(value, kind):
        raise CatalogSyntaxError(
            f"entry {entry_id!r}: field {name!r} must be {kind.__name__}",
            entry_id=entry_id,
            field=name,
        )
    return value


def parse_catalog(text: str) -> Catalog:
    """Parse and validate the JSON catalog format; invariants hold on return."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogSyntaxError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno,
            column=exc.colno,
        ) from None
    if not isinstance(data, dict):
        raise CatalogSyntaxError("catalog root must be a JSON object")
    for name, kind in (("catalog_id", str), ("version", int), ("entries", list)):
        if name not in data or not isinstance(data[name], kind) or isinstance(data[name], bool):
            raise CatalogSyntaxError(f"catalog field {name!r} must be {kind.__name__}")

    weights = MatchWeights()
    raw_weights = data.get("weights")
    if raw_weights is not None:
        if not isinstance(raw_weights, dict):
            raise CatalogSyntaxError("catalog field 'weights' must be an object")
        weights = MatchWeights(
            stride=int(raw_weights.get("stride", DEFAULT_STRIDE_WEIGHT)),
            keyword=int(raw_weights.get("keyword", DEFAULT_KEYWORD_WEIGHT)),
        )

    entries: list[CatalogEntry] = []
    seen: set[str] = set()
    for raw in data["entries"]:
        if not isinstance(raw, dict):
            raise CatalogSyntaxError("catalog entries must be objects")
        entry_id = raw.get("id")
        if not isinstance(entry_id, str) or not entry_id.strip():
            raise EmptyField("entry with missing or empty 'id'", field="id")
        if entry_id in seen:
            raise DuplicateEntryId(entry_id, entry_id=entry_id)
        seen.add(entry_id)

        title = _entry_field(raw, entry_id, "title", str)
        requirement_text = _entry_field(raw, entry_id, "requirement_text", str)
        if not requirement_text.strip():
            raise EmptyField(
                f"entry {entry_id!r}: empty requirement_text",
                entry_id=entry_id,
                field="requirement_text",
            )
        raw_keywords = _entry_field(raw, entry_id, "keywords", list)
        keywords: list[str] = []
        for keyword in raw_keywords:
            if not isinstance(keyword, str):
                raise CatalogSyntaxError(
                    f"entry {entry_id!r}: keywords must be strings", entry_id=entry_id
                )
            lowered = keyword.lower()
            if lowered and lowered not in keywords:
                keywords.append(lowered)
        if not keywords:
            raise EmptyField(
                f"entry {entry_id!r}: empty keywords", entry_id=entry_id, field="keywords"
            )
        raw_tags = _entry_field(raw, entry_id, "stride_tags", list)
        tags: list[Stride] = []
        for tag in raw_tags:
            try:
                parsed = Stride(tag)
            except ValueError:
                raise CatalogSyntaxError(
                    f"entry {entry_id!r}: unknown STRIDE tag {tag!r}", entry_id=entry_id
                ) from None
            if parsed not in tags:
                tags.append(parsed)
        if not tags:
            raise EmptyField(
                f"entry {entry_id!r}: empty stride_tags", entry_id=entry_id, field="stride_tags"
            )
        references = raw.get("references") or []
        if not isinstance(references, list) or not all(isinstance(r, str) for r in references):
            raise CatalogSyntaxError(
                f"entry {entry_id!r}: references must be a list of strings", entry_id=entry_id
            )
        entries.append(
            CatalogEntry(
                id=entry_id,
                title=title,
                keywords=keywords,
                stride_tags=tags,
                requirement_text=requirement_text,
                references=list(references),
            )
        )
    notes = data.get("notes") or ""
    if not isinstance(notes, str):
        raise CatalogSyntaxError("catalog field 'notes' must be a string")
    return Catalog(
        catalog_id=data["catalog_id"],
        version=data["version"],
        entries=entries,
        weights=weights,
        notes=notes,
    )


def load_catalog(path: str | Path) -> Catalog:
    return parse_catalog(Path(path).read_text(encoding="utf-8"))


def match_score(threat: Threat, entry: CatalogEntry, weights: MatchWeights | None = None) -> int:
    """Weighted overlap of STRIDE tags and of title+description tokens."""
    weights = weights or MatchWeights()
    shared_tags = len(set(threat.stride) & set(entry.stride_tags))
    tokens = tokenize(f"{threat.title} {threat.description}")
    shared_tokens = len(tokens & set(entry.keywords))
    return weights.stride * shared_tags + weights.keyword * shared_tokens


def suggest(threat: Threat, catalog: Catalog, limit: int = 5) -> list[Suggestion]:
    """Entries scoring > 0, ordered by (score desc, entry id asc), ranked 1..n."""
    scored = [
        (entry.id, match_score(threat, entry, catalog.weights))
        for entry in catalog.entries
    ]
    positive = [(entry_id, score) for entry_id, score in scored if score > 0]
    positive.sort(key=lambda item: (-item[1], item[0]))
    return [
        Suggestion(threat_id=threat.id, entry_id=entry_id, score=score, rank=rank)
        for rank, (entry_id, score) in enumerate(positive[:limit], start=1)
    ]


def entry_by_id(catalog: Catalog, entry_id: str) -> CatalogEntry:
    for entry in catalog.entries:
        if entry.id == entry_id:
            return entry
    raise KeyError(entry_id)


def next_requirement_id(project: Project) -> str:
    taken = [model.numeric_part(r.id) for r in project.requirements]
    return f"SR{max(taken, default=0) + 1}"


def elicit_all(project: Project, catalog: Catalog) -> ElicitationOutcome:
    """Walk threats in priority order; attach each one's top catalog suggestion.

    Threats already covered or excluded from mitigation are skipped; threats
    with no positive-scoring entry are reported back for manual entry.
    """
    step7 = next(s for s in project.step_states if s.step == 7)
    if step7.status is not StepStatus.COMPLETE:
        raise StepNotReady("risk evaluation (step 7) is not complete", step=7)
    excluded = {a.threat_id for a in project.assessments if a.excluded}
    created: list[str] = []
    needs_manual: list[str] = []
    for threat_id, _score in risk.prioritize(project):
        if threat_id in excluded:
            continue
        if model.requirements_for_threat(project, threat_id):
            continue
        threat = model.find_threat(project, threat_id)
        top = suggest(threat, catalog, limit=1)
        if not top:
            needs_manual.append(threat_id)
            continue
        entry = entry_by_id(catalog, top[0].entry_id)
        requirement = SecurityRequirement(
            id=next_requirement_id(project),
            text=entry.requirement_text,
            threat_refs=[threat_id],
            origin=RequirementOrigin.CATALOG,
            catalog_entry_id=entry.id,
        )
        project = workflow.add_entity(project, requirement)
        created.append(requirement.id)
    return ElicitationOutcome(project=project, created=created, needs_manual=needs_manual)
