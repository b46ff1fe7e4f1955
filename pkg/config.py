"""Configuration management for the linearity defect engine."""
import os
from dataclasses import dataclass
from typing import Optional


@dataclass
class FieldConfig:
    """Coefficient field override; None keeps the field the input declares."""
    spec: Optional[str] = None  # "QQ" or a prime, e.g. "32003"


@dataclass
class GroebnerConfig:
    """Gröbner engine limits."""
    max_pairs: int = 200000  # S-pairs per Buchberger run, 0 = no cap
    saturation_max_steps: int = 32


@dataclass
class ResolutionConfig:
    """Resolution settings."""
    max_length: Optional[int] = None  # None = number of variables


@dataclass
class AsymptoticConfig:
    """Stabilization threshold and sequence settings."""
    glind_bound: Optional[int] = None  # None = number of base variables
    artin_rees_window: int = 3
    artin_rees_max: int = 8
    workers: int = 1
    sequence_timeout_seconds: float = 0  # per entry, 0 = no budget


@dataclass
class ReportConfig:
    """Where JSON reports are written."""
    report_dir: str = "reports"


@dataclass
class AppConfig:
    """Main application configuration."""
    log_level: str = "INFO"
    field: FieldConfig = None
    groebner: GroebnerConfig = None
    resolution: ResolutionConfig = None
    asymptotics: AsymptoticConfig = None
    reports: ReportConfig = None

    def __post_init__(self):
        if self.field is None:
            self.field = FieldConfig()
        if self.groebner is None:
            self.groebner = GroebnerConfig()
        if self.resolution is None:
            self.resolution = ResolutionConfig()
        if self.asymptotics is None:
            self.asymptotics = AsymptoticConfig()
        if self.reports is None:
            self.reports = ReportConfig()

    @classmethod
    def from_env(cls) -> "AppConfig":
        """Load configuration from environment variables."""
        config = cls()

        config.field.spec = os.getenv("LIND_FIELD") or None
        config.log_level = os.getenv("LIND_LOG_LEVEL", config.log_level).upper()
        config.reports.report_dir = os.getenv("LIND_REPORT_DIR", config.reports.report_dir)

        # Gröbner limits
        max_pairs = os.getenv("LIND_MAX_PAIRS", "200000")
        try:
            config.groebner.max_pairs = int(max_pairs)
        except ValueError:
            pass

        steps = os.getenv("LIND_SATURATION_MAX_STEPS", "32")
        try:
            config.groebner.saturation_max_steps = int(steps)
        except ValueError:
            pass

        # Optional integers: unset or invalid keeps the derived default
        max_length = os.getenv("LIND_MAX_LENGTH", "")
        try:
            config.resolution.max_length = int(max_length)
        except ValueError:
            pass

        glind = os.getenv("LIND_GLIND_BOUND", "")
        try:
            config.asymptotics.glind_bound = int(glind)
        except ValueError:
            pass

        window = os.getenv("LIND_ARTIN_REES_WINDOW", "3")
        try:
            config.asymptotics.artin_rees_window = int(window)
        except ValueError:
            pass

        search_cap = os.getenv("LIND_ARTIN_REES_MAX", "8")
        try:
            config.asymptotics.artin_rees_max = int(search_cap)
        except ValueError:
            pass

        workers = os.getenv("LIND_WORKERS", "1")
        try:
            config.asymptotics.workers = max(1, int(workers))
        except ValueError:
            pass

        timeout = os.getenv("LIND_SEQUENCE_TIMEOUT_SECONDS", "0")
        try:
            config.asymptotics.sequence_timeout_seconds = float(timeout)
        except ValueError:
            pass

        return config
