"""Read-only HTTP API over an analyzed workspace.

The workspace is loaded into an immutable snapshot once at startup; requests
never mutate it, so the service can be scaled or restarted freely. Missing or
broken workspaces leave the snapshot unset and every API route answers 503.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import workspace as ws_files
from .corpus_stats import parse_graph

log = logging.getLogger(__name__)


@dataclass
class DocumentRecord:
    doc_id: str
    role: str
    pertinence: float


@dataclass
class GraphSnapshot:
    granularity: str
    nodes: list[tuple[str, str, float]]
    neighbours: dict[str, list[tuple[str, float]]] = field(default_factory=dict)
    documents: dict[str, list[DocumentRecord]] = field(default_factory=dict)

    def theme_ids(self) -> set[str]:
        return {theme_id for theme_id, _, _ in self.nodes}

    def connected(self, a: str, b: str) -> bool:
        return any(other == b for other, _ in self.neighbours.get(a, []))

    @classmethod
    def load(cls, ws: Path) -> "GraphSnapshot":
        graph_path = ws / ws_files.GRAPH_FILE
        granularity, nodes, edges = parse_graph(
            graph_path.read_text(encoding="utf-8")
        )
        snapshot = cls(granularity=granularity, nodes=nodes)
        known = snapshot.theme_ids()

        for a, b, degree in edges:
            if a not in known or b not in known:
                raise ValueError("edge references unknown theme: %s -- %s" % (a, b))
            snapshot.neighbours.setdefault(a, []).append((b, degree))
            snapshot.neighbours.setdefault(b, []).append((a, degree))
        for lst in snapshot.neighbours.values():
            lst.sort(key=lambda pair: (-pair[1], pair[0]))

        annotations = ws_files.load_annotations(ws, granularity)
        for ann in annotations:
            for i, score in enumerate(ann.scores()):
                if score.theme_id not in known:
                    raise ValueError(
                        "annotation references unknown theme: %s" % score.theme_id
                    )
                snapshot.documents.setdefault(score.theme_id, []).append(
                    DocumentRecord(
                        doc_id=ann.doc_id,
                        role="major" if i == 0 else "minor",
                        pertinence=score.pertinence,
                    )
                )
        for records in snapshot.documents.values():
            records.sort(
                key=lambda r: (r.role != "major", -r.pertinence, r.doc_id)
            )
        return snapshot


class PathQuery(BaseModel):
    path: list[str]


def validate_path(snapshot: GraphSnapshot, path: list[str]) -> tuple[bool, int | None]:
    """A path is walkable when every consecutive pair shares a non-zero
    association; returns the first failing hop index otherwise."""
    for i in range(len(path) - 1):
        a, b = path[i], path[i + 1]
        if a == b or not snapshot.connected(a, b):
            return False, i
    return True, None


def create_app(
    workspace: str | Path | None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="themekit explorer")
    snapshot: GraphSnapshot | None = None
    if workspace is not None:
        try:
            snapshot = GraphSnapshot.load(Path(workspace))
        except (OSError, ValueError) as exc:
            log.warning("workspace not loaded: %s", exc)
    app.state.snapshot = snapshot

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request"})

    def current(request: Request) -> GraphSnapshot:
        snap = request.app.state.snapshot
        if snap is None:
            raise HTTPException(status_code=503, detail="workspace not loaded")
        return snap

    def known_or_404(snap: GraphSnapshot, theme_id: str) -> None:
        if theme_id not in snap.theme_ids():
            raise HTTPException(status_code=404, detail="unknown theme")

    @app.get("/api/themes")
    def list_themes(request: Request):
        snap = current(request)
        return [
            {"theme_id": theme_id, "label": label, "weight": weight}
            for theme_id, label, weight in snap.nodes
        ]

    @app.get("/api/themes/{theme_id}/associations")
    def list_associations(theme_id: str, request: Request):
        snap = current(request)
        known_or_404(snap, theme_id)
        labels = {tid: label for tid, label, _ in snap.nodes}
        return [
            {"theme_id": other, "label": labels[other], "ad": degree}
            for other, degree in snap.neighbours.get(theme_id, [])
        ]

    @app.get("/api/themes/{theme_id}/documents")
    def list_documents(theme_id: str, request: Request):
        snap = current(request)
        known_or_404(snap, theme_id)
        return [
            {"doc_id": r.doc_id, "role": r.role, "pertinence": r.pertinence}
            for r in snap.documents.get(theme_id, [])
        ]

    @app.post("/api/paths/validate")
    def check_path(query: PathQuery, request: Request):
        snap = current(request)
        valid, first_invalid = validate_path(snap, query.path)
        if valid:
            return {"valid": True}
        return {"valid": False, "first_invalid_hop": first_invalid}

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
