"""Command-line front end: session files, commands, reports."""

from .commands import Options, UsageError, run
from .report import Report
from .session import Session, SessionError, emit_session, make_category, parse_session

__all__ = ["Options", "Report", "Session", "SessionError", "UsageError", "emit_session",
           "make_category", "parse_session", "run"]
