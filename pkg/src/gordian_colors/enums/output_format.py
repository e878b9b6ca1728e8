"""An enum of the command-line output formats."""

from enum import Enum


class OutputFormat(str, Enum):
    """An enum of the command-line output formats."""

    TEXT = "text"
    """Human readable lines."""

    JSON = "json"
    """Schema-stable JSON documents."""
