"""Single-project file store shared by the CLI and the HTTP API.

Reads always come from the latest persisted state; writes are serialized
behind a lock and persist (atomically) before returning.
"""

from __future__ import annotations

import threading
import uuid
from pathlib import Path
from typing import Callable

from . import persistence
from .errors import IoFailure, NotFound
from .model import Project


class ProjectStore:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()

    def exists(self) -> bool:
        return self.path.exists()

    def init(self, name: str, project_id: str | None = None) -> Project:
        if self.path.exists():
            raise IoFailure(f"refusing to overwrite existing project file {self.path}")
        project = Project(project_id=project_id or f"proj-{uuid.uuid4().hex[:12]}", name=name)
        persistence.save(project, self.path)
        return project

    def load(self) -> Project:
        if not self.path.exists():
            raise NotFound(f"no project file at {self.path}", path=str(self.path))
        return persistence.load(self.path)

    def mutate(self, fn: Callable[[Project], Project]) -> Project:
        """Apply fn to the persisted project and save the result atomically."""
        with self._lock:
            project = self.load()
            updated = fn(project)
            persistence.save(updated, self.path)
            return updated
