"""CLI and HTTP front ends over the solving engine."""

from .service import create_app
from .sessions import Session, SessionStore

__all__ = ["create_app", "Session", "SessionStore"]
