"""Options that configure the coloring search and the tangle synthesis."""

import logging
import os
import typing as t
from dataclasses import dataclass, field

from ..utils.permutation_utils import Perm


log = logging.getLogger(__name__)

THREADS_ENV = "GORDIAN_COLORS_THREADS"


def threads_from_env() -> int:
    """Read the worker cap from ``GORDIAN_COLORS_THREADS``; unset or invalid values mean ``1``."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        log.warning("ignoring %s=%r: not an integer", THREADS_ENV, raw)
        return 1
    if value < 1:
        log.warning("ignoring %s=%r: must be at least 1", THREADS_ENV, raw)
        return 1
    return value


@dataclass
class SolverOptions:
    """Options that configure ``solve_class_colorings`` and the searches built on it."""

    up_to_conjugation: bool = True
    """Yield one coloring per orbit of the ambient group acting by conjugation.
    The first seed arc is pinned to the least class element and the second to the least element its stabilizer
    allows, so each orbit is reached once before canonical deduplication."""

    node_limit: t.Optional[int] = None
    """Give up with ``BudgetExceeded`` after visiting this many search nodes; ``None`` means no limit."""

    seeds: t.Optional[t.Mapping[int, Perm]] = None
    """Arc colors to pin before searching. Pinned colors disable symmetry breaking."""

    threads: int = field(default_factory=threads_from_env)
    """Worker threads for splitting the search over the first seed's branches. Output order does not depend on it."""

    def __post_init__(self) -> None:
        """Validate the limits."""
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError(f"node_limit must be positive, got {self.node_limit}")
        if self.threads < 1:
            raise ValueError(f"threads must be positive, got {self.threads}")


@dataclass
class SynthesisOptions:
    """Options that configure ``synthesize_k1_tilde``."""

    budget: int = 8
    """Longest replacement word tried, in crossings."""

    node_limit: t.Optional[int] = None
    """Give up with ``BudgetExceeded`` after testing this many candidate words."""

    def __post_init__(self) -> None:
        """Validate the limits."""
        if self.budget < 0:
            raise ValueError(f"budget must be non-negative, got {self.budget}")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError(f"node_limit must be positive, got {self.node_limit}")
