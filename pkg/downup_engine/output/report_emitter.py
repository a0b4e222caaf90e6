"""
Report Emitter

Writes command results to stdout as human text or as a JSON envelope

    {"command": ..., "ok": true, "result": {...}}
    {"command": ..., "ok": false, "error": {"name": ..., "message": ...}}

Envelopes are validated against the shipped schema before they are printed.
"""

import json
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, TextIO

import jsonschema

from downup_engine.utils.errors import DownUpError
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.output")

SCHEMA_PATH = Path(__file__).parent / "schema.json"


@lru_cache(maxsize=1)
def load_schema() -> dict[str, Any]:
    with open(SCHEMA_PATH, "r") as f:
        return json.load(f)


def validate_envelope(envelope: dict[str, Any]) -> None:
    """Raise jsonschema.ValidationError if the envelope breaks the schema."""
    jsonschema.validate(envelope, load_schema())


@dataclass(frozen=True)
class CommandResult:
    """
    Outcome of one command.

    ``result`` is the JSON payload and ``text`` its human rendering. Failed
    commands carry ``error`` instead.
    """

    command: str
    result: dict[str, Any] = field(default_factory=dict)
    text: str = ""
    error: DownUpError | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    @classmethod
    def failure(cls, command: str, error: DownUpError) -> "CommandResult":
        return cls(command, error=error)

    def to_dict(self) -> dict[str, Any]:
        if self.error is not None:
            return {
                "command": self.command,
                "ok": False,
                "error": {"name": self.error.name, "message": self.error.message},
            }
        return {"command": self.command, "ok": True, "result": self.result}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


class ReportEmitter:
    """
    Modes:
    - "text": the human rendering on stdout, errors on stderr
    - "json": the validated envelope on stdout
    """

    def __init__(self, mode: str = "text", stdout: TextIO | None = None, stderr: TextIO | None = None):
        if mode not in ("text", "json"):
            raise ValueError(f"unknown output mode {mode!r}")
        self.mode = mode
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    def emit(self, outcome: CommandResult) -> None:
        if self.mode == "json":
            envelope = outcome.to_dict()
            validate_envelope(envelope)
            print(json.dumps(envelope, indent=2), file=self.stdout)
            if not outcome.ok:
                print(self._error_line(outcome.error), file=self.stderr)
            return

        if outcome.ok:
            print(outcome.text, file=self.stdout)
        else:
            print(self._error_line(outcome.error), file=self.stderr)
            caret = getattr(outcome.error, "caret_line", None)
            if caret is not None:
                print(caret(), file=self.stderr)

    @staticmethod
    def _error_line(error: DownUpError) -> str:
        return f"error: {error.name}: {error.message}"
