"""HTTP service for boards, hints, solutions, and infinite prefixes.

All bodies are JSON.  Unknown sessions give 404, malformed requests 400;
an unsolvable board is a successful response carrying a witness, not an
error.  Hints are recomputed from the current state on every call, so
they stay valid after the player deviates from a previous plan.
"""

from __future__ import annotations

import json
from typing import Any, Literal

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, model_validator

from .. import __version__
from ..errors import (
    CellTooLargeError,
    PrefixTooLongError,
    UnsolvableBoardError,
    UnsolvableError,
)
from ..lightsout import (
    BoardState,
    Graph,
    InfiniteGraph,
    classic_grid,
    press,
    solve_board,
)
from ..rowfinite import parse_periodic_spec_json
from ..transfer import solve_prefix
from .sessions import DEFAULT_CAPACITY, Session, SessionStore


class GridSpec(BaseModel):
    rows: int = Field(ge=1, le=64)
    cols: int = Field(ge=1, le=64)


class GraphSpec(BaseModel):
    n: int = Field(ge=1, le=4096)
    edges: list[tuple[int, int]] = []
    self_loops: list[int] = []


class CreateBoardRequest(BaseModel):
    grid: GridSpec | None = None
    graph: GraphSpec | None = None
    initial: str = "all_off"

    @model_validator(mode="after")
    def _exactly_one_source(self):
        if (self.grid is None) == (self.graph is None):
            raise ValueError("provide exactly one of grid or graph")
        return self


class PressRequest(BaseModel):
    vertex: int


class PrefixRequest(BaseModel):
    spec: dict[str, Any]
    p: int = Field(ge=0, le=64)
    mode: Literal["exact", "horizon"] = "exact"
    horizon: int | None = Field(default=None, ge=1, le=512)
    n: int = Field(default=1, ge=1, le=64)

    @model_validator(mode="after")
    def _horizon_matches_mode(self):
        if self.mode == "horizon" and self.horizon is None:
            raise ValueError("horizon mode requires a horizon")
        return self


def _board_payload(session: Session) -> dict[str, Any]:
    return {
        "id": session.id,
        "n": session.graph.vertex_count,
        "rows": session.rows,
        "cols": session.cols,
        "state": session.state.to01(),
        "self_loops": [v + 1 for v in session.graph.self_loops.support()],
    }


def _target_state(session: Session, target: str) -> BoardState:
    if target == "off":
        return BoardState.all_off(session.graph.vertex_count)
    if target == "pattern":
        return BoardState(session.graph.self_loops)
    raise HTTPException(status_code=400,
                        detail="target must be 'off' or 'pattern'")


def _solve_current(session: Session, target: str) -> dict[str, Any]:
    goal = _target_state(session, target)
    try:
        clicks = solve_board(session.graph, session.state, goal)
    except UnsolvableBoardError as exc:
        witness = [] if exc.witness is None \
            else [i + 1 for i in exc.witness.support()]
        return {"solvable": False, "witness": witness}
    return {"solvable": True, "clicks": list(clicks.vertices()),
            "weight": clicks.weight()}


def create_app(capacity: int = DEFAULT_CAPACITY) -> FastAPI:
    app = FastAPI(title="gf2lights", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(capacity)

    @app.exception_handler(RequestValidationError)
    async def _validation_to_400(request: Request,
                                 exc: RequestValidationError):
        detail = [{"loc": [str(part) for part in err.get("loc", ())],
                   "msg": str(err.get("msg", ""))}
                  for err in exc.errors()]
        return JSONResponse(status_code=400, content={"detail": detail})

    def _session_or_404(board_id: str) -> Session:
        session = store.get(board_id)
        if session is None:
            raise HTTPException(status_code=404,
                                detail=f"unknown board {board_id!r}")
        return session

    @app.get("/")
    def service_info() -> dict[str, Any]:
        return {"service": "gf2lights", "version": __version__}

    @app.post("/boards", status_code=201)
    def create_board(request: CreateBoardRequest) -> dict[str, Any]:
        rows = cols = None
        if request.grid is not None:
            rows, cols = request.grid.rows, request.grid.cols
            graph = classic_grid(rows, cols)
        else:
            assert request.graph is not None
            try:
                graph = Graph.from_edges(request.graph.n, request.graph.edges,
                                         request.graph.self_loops)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from exc
        n = graph.vertex_count
        if request.initial == "all_off":
            state = BoardState.all_off(n)
        elif request.initial == "all_on":
            state = BoardState.all_on(n)
        else:
            if len(request.initial) != n \
                    or set(request.initial) - {"0", "1"}:
                raise HTTPException(
                    status_code=400,
                    detail=f"initial must be all_on, all_off, or {n} bits")
            state = BoardState.from_string(request.initial)
        session = store.create(graph, state, rows, cols)
        return _board_payload(session)

    @app.get("/boards/{board_id}")
    def get_board(board_id: str) -> dict[str, Any]:
        return _board_payload(_session_or_404(board_id))

    @app.post("/boards/{board_id}/press")
    def press_board(board_id: str, request: PressRequest) -> dict[str, Any]:
        session = _session_or_404(board_id)
        with session.lock:
            if not 1 <= request.vertex <= session.graph.vertex_count:
                raise HTTPException(
                    status_code=400,
                    detail=f"vertex {request.vertex} out of range "
                           f"1..{session.graph.vertex_count}")
            session.state = press(session.graph, session.state, request.vertex)
            return _board_payload(session)

    @app.get("/boards/{board_id}/hint")
    def hint(board_id: str, target: str = "off") -> dict[str, Any]:
        session = _session_or_404(board_id)
        with session.lock:
            result = _solve_current(session, target)
            if not result["solvable"]:
                return result
            clicks = result["clicks"]
            return {"solvable": True,
                    "vertex": clicks[0] if clicks else None,
                    "remaining": len(clicks)}

    @app.get("/boards/{board_id}/solution")
    def solution(board_id: str, target: str = "off") -> dict[str, Any]:
        session = _session_or_404(board_id)
        with session.lock:
            return _solve_current(session, target)

    @app.post("/infinite/prefix")
    def infinite_prefix(request: PrefixRequest) -> dict[str, Any]:
        try:
            spec = parse_periodic_spec_json(json.dumps(request.spec))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        graph = InfiniteGraph.from_periodic_spec(spec)
        horizon = request.horizon if request.mode == "horizon" else None
        try:
            answer = solve_prefix(spec, request.p, horizon=horizon,
                                  n=request.n)
        except (CellTooLargeError, PrefixTooLongError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        except UnsolvableError as exc:
            return {"p": request.p, "solvable": False, "detail": str(exc)}
        return {
            "p": request.p,
            "solvable": True,
            "prefix": answer.prefix,
            "certificate": answer.certificate,
            "self_loops": graph.self_loop_prefix(request.p).to01(),
        }

    return app
