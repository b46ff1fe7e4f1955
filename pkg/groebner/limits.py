"""Per-computation resource limits, scoped with context managers.

Limits live in a context variable so worker threads can each carry their
own deadline.
"""
import time
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Optional

from .errors import ComputationLimitError


@dataclass(frozen=True)
class ComputationLimits:
    """
    Args:
        max_pairs: S-pairs processed per Buchberger run, 0 for no cap
        deadline: time.monotonic() value after which work stops, None for none
    """
    max_pairs: int = 0
    deadline: Optional[float] = None


_limits: ContextVar[ComputationLimits] = ContextVar("computation_limits", default=ComputationLimits())


def current_limits() -> ComputationLimits:
    return _limits.get()


@contextmanager
def computation_limits(max_pairs: Optional[int] = None, timeout_seconds: Optional[float] = None):
    """
    Scope limits for every Gröbner computation in the block.

    Args:
        max_pairs: Override the S-pair cap
        timeout_seconds: Wall-clock budget; 0 or None means unlimited
    """
    previous = _limits.get()
    deadline = previous.deadline
    if timeout_seconds:
        candidate = time.monotonic() + timeout_seconds
        deadline = candidate if deadline is None else min(deadline, candidate)
    token = _limits.set(ComputationLimits(
        max_pairs=previous.max_pairs if max_pairs is None else max_pairs,
        deadline=deadline,
    ))
    try:
        yield _limits.get()
    finally:
        _limits.reset(token)


def check_deadline():
    deadline = _limits.get().deadline
    if deadline is not None and time.monotonic() > deadline:
        raise ComputationLimitError("Wall-clock budget exhausted")
