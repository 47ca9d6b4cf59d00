"""Law registry and sweep engine."""

from .engine import CheckReport, Law, Space, check, enumerate_sort
from . import registry

__all__ = ["CheckReport", "Law", "Space", "check", "enumerate_sort", "registry"]
