"""Session input, command dispatch and report rendering."""
from .commands import COMMANDS, CommandContext, run_command
from .errors import InputSyntaxError, UnknownNameError
from .parser import SessionInput, parse_input
from .report import CommandResult, format_rows, format_table, input_hash, json_document, render_text, write_report

__all__ = [
    "COMMANDS",
    "CommandContext",
    "run_command",
    "InputSyntaxError",
    "UnknownNameError",
    "SessionInput",
    "parse_input",
    "CommandResult",
    "format_rows",
    "format_table",
    "input_hash",
    "json_document",
    "render_text",
    "write_report",
]
