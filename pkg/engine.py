"""Engine that runs linearity-defect commands over parsed sessions."""
import logging
from argparse import Namespace
from typing import Optional

from cli.commands import CommandContext, run_command
from cli.parser import SessionInput, parse_input
from cli.report import CommandResult
from config import AppConfig
from groebner.limits import computation_limits

logger = logging.getLogger(__name__)


class LindEngine:
    """Owns the configuration and runs one command per call."""

    def __init__(self, config: AppConfig):
        """
        Initialize the engine.

        Args:
            config: Application configuration
        """
        self.config = config

    def load(self, text: str) -> SessionInput:
        """Parse session text."""
        session = parse_input(text)
        logger.info("Loaded ring %s[%s] with ideals %s and modules %s", session.field_spec,
                    ",".join(session.variables), sorted(session.ideals), sorted(session.modules))
        return session

    def context(self, session: SessionInput, field_spec: Optional[str] = None) -> CommandContext:
        ring = session.ring(field_spec or self.config.field.spec)
        return CommandContext(session, ring, self.config)

    def run(self, session: SessionInput, args: Namespace) -> CommandResult:
        """
        Run the command named by ``args.command`` under the configured pair cap.

        Args:
            session: Parsed input
            args: Command arguments

        Returns:
            CommandResult with JSON-ready data and text
        """
        ctx = self.context(session, getattr(args, "field", None))
        logger.info("Working over %s", ctx.ring)
        with computation_limits(max_pairs=self.config.groebner.max_pairs):
            return run_command(ctx, args)
