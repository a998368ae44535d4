"""Versioned single-file persistence with canonical bytes and integrity hash.

The file is UTF-8 JSON: {"schema_version", "integrity": {"algorithm",
"digest"}, "project": {...}}. Serialization is canonical (sorted keys,
two-space indent, LF endings, trailing newline), so equal projects always
produce identical bytes. The digest covers the canonical project payload.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any

from . import model
from .errors import (
    IntegrityMismatch,
    InvalidProject,
    IoFailure,
    ParseError,
    UnsupportedSchemaVersion,
)
from .model import Project

SCHEMA_VERSION = 1
HASH_ALGORITHM = "sha256"
FILE_SUFFIX = ".store.json"


def _canonical(value: Any) -> str:
    return json.dumps(value, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def canonical_payload_bytes(project: Project) -> bytes:
    return _canonical(model.project_to_dict(project)).encode("utf-8")


def _digest(payload: bytes, algorithm: str) -> str:
    try:
        return hashlib.new(algorithm, payload).hexdigest()
    except ValueError:
        raise ParseError(f"unknown hash algorithm {algorithm!r}") from None


def dumps(project: Project) -> bytes:
    """Project file bytes; raises InvalidProject unless all invariants hold."""
    violations = model.validate_project(project)
    if violations:
        raise InvalidProject(
            "; ".join(f"{v.entity_id}: {v.rule}" for v in violations),
            violations=[{"entity_id": v.entity_id, "rule": v.rule, "message": v.message} for v in violations],
        )
    payload = model.project_to_dict(project)
    document = {
        "schema_version": SCHEMA_VERSION,
        "integrity": {
            "algorithm": HASH_ALGORITHM,
            "digest": _digest(_canonical(payload).encode("utf-8"), HASH_ALGORITHM),
        },
        "project": payload,
    }
    return _canonical(document).encode("utf-8")


def save(project: Project, destination: str | Path) -> bytes:
    """Write the project file atomically (temp file + rename); returns the bytes."""
    data = dumps(project)
    destination = Path(destination)
    try:
        fd, tmp_name = tempfile.mkstemp(
            dir=destination.parent or Path("."), prefix=destination.name, suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "wb") as handle:
                handle.write(data)
            os.replace(tmp_name, destination)
        except BaseException:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
            raise
    except OSError as exc:
        raise IoFailure(f"cannot write {destination}: {exc}") from exc
    return data


def loads(data: bytes | str) -> Project:
    """Decode, verify integrity and schema version, re-validate all invariants."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    try:
        document = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(document, dict):
        raise ParseError("project file root must be a JSON object")
    version = document.get("schema_version")
    if not isinstance(version, int):
        raise ParseError("missing integer schema_version")
    if version > SCHEMA_VERSION or version < 1:
        raise UnsupportedSchemaVersion(
            f"schema_version {version} not supported (current {SCHEMA_VERSION})",
            found=version,
            supported=SCHEMA_VERSION,
        )
    integrity = document.get("integrity")
    if not isinstance(integrity, dict) or "digest" not in integrity:
        raise ParseError("missing integrity header")
    payload = document.get("project")
    if not isinstance(payload, dict):
        raise ParseError("missing project payload")
    algorithm = integrity.get("algorithm", HASH_ALGORITHM)
    actual = _digest(_canonical(payload).encode("utf-8"), algorithm)
    if actual != integrity["digest"]:
        raise IntegrityMismatch(
            "payload digest mismatch", expected=integrity["digest"], actual=actual
        )
    try:
        project = model.project_from_dict(payload)
    except model.DecodeError as exc:
        raise ParseError(str(exc)) from None
    violations = model.validate_project(project)
    if violations:
        raise InvalidProject(
            "; ".join(f"{v.entity_id}: {v.rule}" for v in violations),
            violations=[{"entity_id": v.entity_id, "rule": v.rule, "message": v.message} for v in violations],
        )
    return project


def load(source: str | Path) -> Project:
    source = Path(source)
    try:
        data = source.read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read {source}: {exc}") from exc
    return loads(data)
