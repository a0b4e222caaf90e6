"""Command result emission: text and schema-checked JSON."""

from .report_emitter import CommandResult, ReportEmitter, validate_envelope

__all__ = ["CommandResult", "ReportEmitter", "validate_envelope"]
