"""In-memory board sessions with LRU eviction.

Sessions are playground-scoped: a bounded store, no persistence.  The
store lock only guards the map; each session carries its own lock so
mutations to one board serialize without blocking other boards.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from collections import OrderedDict

from ..lightsout import BoardState, Graph

DEFAULT_CAPACITY = 1024


@dataclass
class Session:
    """One live board: a graph plus its current state.

    ``rows``/``cols`` are set for grid boards so the UI can lay cells
    out; they stay None for arbitrary graphs.
    """

    id: str
    graph: Graph
    state: BoardState
    rows: int | None = None
    cols: int | None = None
    created_at: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)


class SessionStore:
    """Bounded id -> Session map; least recently touched falls out first.

    Ids are a deterministic counter sequence, so identical request
    sequences against a fresh service produce identical responses.
    """

    def __init__(self, capacity: int = DEFAULT_CAPACITY):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self._capacity = capacity
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, Session] = OrderedDict()
        self._counter = 0

    def create(self, graph: Graph, state: BoardState,
               rows: int | None = None, cols: int | None = None) -> Session:
        with self._lock:
            self._counter += 1
            session = Session(f"b{self._counter}", graph, state, rows, cols)
            self._sessions[session.id] = session
            while len(self._sessions) > self._capacity:
                self._sessions.popitem(last=False)
            return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is not None:
                self._sessions.move_to_end(session_id)
            return session

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)
